//! Chern-character calculus in floating point.
//!
//! A real rank-`2ℓ` bundle is described by `ℓ` numbers `cᵢ`: its
//! complexification has Chern roots `±2π𝕚cᵢ`, so `e^{±ξᵢ} = e^{±2π𝕚cᵢ}`.
//!
//! Two independent routes to the same q-series live here:
//! [`witten_product_series`] multiplies out `⊗_r S_{q^r}(W̃)` and friends
//! factor by factor from symmetric/exterior power characters, while
//! [`theta_ratio_series`] expands the theta-function closed forms.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::exact::QSeries;
use crate::theta::series::{euler_cube_series, theta_product_series};
use crate::theta::{Flavor, ThetaKind};
use crate::DomainError;

/// Formal roots `cᵢ` and `S¹`-weights `mᵢ` of a real rank-`2ℓ` bundle.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct RootData {
    pub roots: Vec<Complex64>,
    pub weights: Vec<i64>,
}

impl RootData {
    /// Non-equivariant data: all weights zero.
    pub fn new(roots: Vec<Complex64>) -> Self {
        let weights = vec![0; roots.len()];
        RootData { roots, weights }
    }

    /// Panics if the lengths differ.
    pub fn with_weights(roots: Vec<Complex64>, weights: Vec<i64>) -> Self {
        assert_eq!(roots.len(), weights.len(), "one weight per root");
        RootData { roots, weights }
    }

    pub fn from_real(roots: &[f64]) -> Self {
        RootData::new(roots.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// `ℓ`.
    pub fn rank_half(&self) -> usize {
        self.roots.len()
    }

    /// Roots `cᵢ + mᵢ·w/(2π𝕚)`: the equivariant substitution.
    pub fn equivariant_roots(&self, w: Complex64) -> Vec<Complex64> {
        let shift = w / Complex64::new(0.0, 2.0 * PI);
        self.roots.iter().zip(&self.weights).map(|(c, &m)| c + shift * m as f64).collect()
    }

    /// `e^{ξ}` for all `2ℓ` complex Chern roots `±2π𝕚cᵢ`.
    fn exp_chern_roots(&self) -> Vec<Complex64> {
        self.roots
            .iter()
            .flat_map(|c| {
                let y = (Complex64::new(0.0, 2.0 * PI) * c).exp();
                [y, y.inv()]
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PowerKind {
    Symmetric,
    Exterior,
}

/// The virtual bundle `ch` is applied to.
#[derive(Clone, Debug, PartialEq)]
pub enum BundleTerm<'a> {
    Plus(&'a RootData),
    Minus(&'a RootData),
    Trivial(u32),
}

/// `ch(S_t E)` or `ch(Λ_t E)` for `E = W`, `−W` or `ε_N`.
///
/// With `tilde`, `W` is replaced by `W̃ = W − dim W`.
pub fn ch_op(kind: PowerKind, bundle: BundleTerm<'_>, t: Complex64, tilde: bool) -> Result<Complex64, DomainError> {
    let one = Complex64::new(1.0, 0.0);
    let (roots, sign, rank) = match bundle {
        BundleTerm::Plus(w) => (w.exp_chern_roots(), 1i32, 2 * w.rank_half() as i32),
        BundleTerm::Minus(w) => (w.exp_chern_roots(), -1, 2 * w.rank_half() as i32),
        BundleTerm::Trivial(n) => (vec![one; n as usize], 1, n as i32),
    };
    // Per-root factor of ch(S_t W) is 1/(1 − t y), of ch(Λ_t W) is 1 + t y.
    let mut value = one;
    for y in roots {
        let f = match kind {
            PowerKind::Symmetric => one - t * y,
            PowerKind::Exterior => one + t * y,
        };
        if kind == PowerKind::Symmetric && sign > 0 && f.norm() < 1e-14 {
            return Err(DomainError::SymmetricPowerPole);
        }
        value *= match (kind, sign > 0) {
            (PowerKind::Symmetric, true) | (PowerKind::Exterior, false) => f.inv(),
            _ => f,
        };
    }
    if tilde && !matches!(bundle, BundleTerm::Trivial(_)) {
        // ch of S_t/Λ_t applied to −ε_{2ℓ} (or +ε_{2ℓ} for −W).
        let trivial = match kind {
            PowerKind::Symmetric => one - t,
            PowerKind::Exterior => one + t,
        };
        let power = match kind {
            PowerKind::Symmetric => sign * rank,
            PowerKind::Exterior => -sign * rank,
        };
        if kind == PowerKind::Symmetric && sign < 0 && trivial.norm() < 1e-14 {
            return Err(DomainError::SymmetricPowerPole);
        }
        value *= trivial.powi(power);
    }
    Ok(value)
}

/// The six infinite tensor products applied to `W̃`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// `⊗ S_{q^r}`
    SInt,
    /// `⊗ Λ_{q^r}`
    LambdaInt,
    /// `⊗ S_{q^{r−1/2}}`
    SHalfPlus,
    /// `⊗ S_{−q^{r−1/2}}`
    SHalfMinus,
    /// `⊗ Λ_{q^{r−1/2}}`
    LambdaHalfPlus,
    /// `⊗ Λ_{−q^{r−1/2}}`
    LambdaHalfMinus,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 6] = [
        FamilyKind::SInt,
        FamilyKind::LambdaInt,
        FamilyKind::SHalfPlus,
        FamilyKind::SHalfMinus,
        FamilyKind::LambdaHalfPlus,
        FamilyKind::LambdaHalfMinus,
    ];

    fn power(self) -> PowerKind {
        match self {
            FamilyKind::SInt | FamilyKind::SHalfPlus | FamilyKind::SHalfMinus => PowerKind::Symmetric,
            _ => PowerKind::Exterior,
        }
    }

    /// `(sign, half-exponent of the first factor)`: the r-th parameter is
    /// `sign · q^{(first + 2(r−1))/2}`.
    fn parameter(self) -> (f64, usize) {
        match self {
            FamilyKind::SInt | FamilyKind::LambdaInt => (1.0, 2),
            FamilyKind::SHalfPlus | FamilyKind::LambdaHalfPlus => (1.0, 1),
            FamilyKind::SHalfMinus | FamilyKind::LambdaHalfMinus => (-1.0, 1),
        }
    }
}

/// Polynomial in `t` (dense, degree ≤ `max_deg`) of `ch(S_t W̃)` or
/// `ch(Λ_t W̃)` for all roots at once.
fn tilde_power_poly(kind: PowerKind, exp_roots: &[Complex64], max_deg: usize) -> Vec<Complex64> {
    let zero = Complex64::new(0.0, 0.0);
    let mut poly = vec![zero; max_deg + 1];
    poly[0] = Complex64::new(1.0, 0.0);
    for &y in exp_roots {
        match kind {
            // times Σ_k (t y)^k
            PowerKind::Symmetric => {
                for k in 1..=max_deg {
                    let prev = poly[k - 1];
                    poly[k] += prev * y;
                }
            }
            // times (1 + t y)
            PowerKind::Exterior => {
                for k in (1..=max_deg).rev() {
                    let prev = poly[k - 1];
                    poly[k] += prev * y;
                }
            }
        }
    }
    // Trivial part: (1 − t)^{N} for S, (1 + t)^{−N} for Λ, N = #roots.
    let n = exp_roots.len() as i64;
    let trivial: Vec<Complex64> = (0..=max_deg as i64)
        .map(|k| {
            let c = match kind {
                PowerKind::Symmetric => binomial_signed(n, k) * if k % 2 == 0 { 1.0 } else { -1.0 },
                PowerKind::Exterior => binomial_signed(-n, k),
            };
            Complex64::new(c, 0.0)
        })
        .collect();
    let mut out = vec![zero; max_deg + 1];
    for (i, a) in poly.iter().enumerate() {
        for (j, b) in trivial.iter().take(max_deg + 1 - i).enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

/// Generalized binomial coefficient `C(n, k)` for any integer `n`, `k ≥ 0`.
fn binomial_signed(n: i64, k: i64) -> f64 {
    let mut acc = 1.0;
    for j in 0..k {
        acc *= (n - j) as f64 / (j + 1) as f64;
    }
    acc
}

/// Brute-force `ch(⊗_r F_{±q^{e_r}}(W̃))` to order `q^{K/2}` for a bundle with
/// roots `roots`: each tensor factor is a polynomial in its parameter,
/// substituted and multiplied in.
pub fn witten_product_series(family: FamilyKind, roots: &[Complex64], order: usize) -> QSeries<Complex64> {
    let exp_roots = RootData::new(roots.to_vec()).exp_chern_roots();
    let (sign, first) = family.parameter();
    let mut acc = QSeries::<Complex64>::one(order);
    let mut e = first;
    while e <= order {
        let poly = tilde_power_poly(family.power(), &exp_roots, order / e);
        let mut factor = vec![Complex64::new(0.0, 0.0); order + 1];
        let mut s = 1.0;
        for (k, c) in poly.iter().enumerate() {
            factor[k * e] = c * s;
            s *= sign;
        }
        acc = acc.mul(&QSeries::new(0, factor));
        e += 2;
    }
    acc
}

fn numeric_theta_series(kind: ThetaKind, c: Complex64, order: usize) -> QSeries<Complex64> {
    let y = (Complex64::new(0.0, 2.0 * PI) * c).exp();
    let tail = theta_product_series(kind, &y, &y.inv(), order);
    let trig = match kind {
        ThetaKind::Theta => (c * PI).sin() * 2.0,
        ThetaKind::Theta1 => (c * PI).cos() * 2.0,
        _ => Complex64::new(1.0, 0.0),
    };
    tail.scale(&trig).with_prefactor(kind.prefactor_eighths())
}

fn ratio(num: &QSeries<Complex64>, den: &QSeries<Complex64>) -> Result<QSeries<Complex64>, DomainError> {
    let r = num.div(den).map_err(|_| DomainError::SingularRoot)?;
    debug_assert_eq!(r.prefactor_eighths(), 0);
    Ok(r)
}

/// The theta closed form matching `family`, for a single root `c`, expanded
/// to order `q^{K/2}`.
pub fn theta_ratio_series(family: FamilyKind, c: Complex64, order: usize) -> Result<QSeries<Complex64>, DomainError> {
    let zero = Complex64::new(0.0, 0.0);
    let th = |k: ThetaKind, x: Complex64| numeric_theta_series(k, x, order);
    match family {
        FamilyKind::SInt => {
            // (sin πc / π) · θ′(0)/θ(c), with θ′/π = 2 q^{1/8} c³
            let prime_over_pi = euler_cube_series::<Complex64>(order).scale(&Complex64::new(2.0, 0.0)).with_prefactor(1);
            let sin = (c * PI).sin();
            if sin.norm() < 1e-300 {
                return Err(DomainError::SingularRoot);
            }
            Ok(ratio(&prime_over_pi, &th(ThetaKind::Theta, c))?.scale(&sin))
        }
        FamilyKind::LambdaInt => {
            let cos = (c * PI).cos();
            if cos.norm() < 1e-300 {
                return Err(DomainError::SingularRoot);
            }
            Ok(ratio(&th(ThetaKind::Theta1, c), &th(ThetaKind::Theta1, zero))?.scale(&cos.inv()))
        }
        FamilyKind::SHalfPlus => ratio(&th(ThetaKind::Theta2, zero), &th(ThetaKind::Theta2, c)),
        FamilyKind::LambdaHalfMinus => ratio(&th(ThetaKind::Theta2, c), &th(ThetaKind::Theta2, zero)),
        FamilyKind::SHalfMinus => ratio(&th(ThetaKind::Theta3, zero), &th(ThetaKind::Theta3, c)),
        FamilyKind::LambdaHalfPlus => ratio(&th(ThetaKind::Theta3, c), &th(ThetaKind::Theta3, zero)),
    }
}

/// Max coefficient distance between the two routes.
pub fn identity_residual(family: FamilyKind, c: Complex64, order: usize) -> Result<f64, DomainError> {
    let brute = witten_product_series(family, &[c], order);
    let closed = theta_ratio_series(family, c, order)?;
    Ok(brute.max_coeff_distance(&closed))
}

/// `ch Δ(V) = Π (e^{π𝕚cᵢ} + e^{−π𝕚cᵢ})`.
pub fn spinor_ch(roots: &RootData) -> Complex64 {
    roots
        .roots
        .iter()
        .map(|c| {
            let h = (Complex64::new(0.0, PI) * c).exp();
            h + h.inv()
        })
        .product()
}

/// `ch(Φ_λ)` for `λ ∈ {0,1,2,3}` as a numeric q-series, from the tensor
/// product definitions:
///
/// ```text
/// ch Φ₀ = Πᵢ 2·ch(⊗S_{q^r}W̃ᵢ) · Σ_μ Πᵢ Rᵤ(cᵢ)
/// R₁ = cos(πc)·ch(⊗Λ_{q^r}),  R₂ = ch(⊗Λ_{−q^{r−1/2}}),  R₃ = ch(⊗Λ_{q^{r−1/2}})
/// ```
///
/// and `ch Φ_λ = κ_λ · ch Φ₀ · Πⱼ R_λ(bⱼ)` with `κ₁ = 2^ℓ`, `κ₂ = κ₃ = 1`.
pub fn phi_ch_series(lambda: u8, tangent: &RootData, bundle: &RootData, order: usize) -> Result<QSeries<Complex64>, DomainError> {
    if lambda > 3 {
        return Err(DomainError::NotAFlavor);
    }
    let two = Complex64::new(2.0, 0.0);
    let mut prefix = QSeries::<Complex64>::one(order);
    for &c in &tangent.roots {
        prefix = prefix.mul(&witten_product_series(FamilyKind::SInt, &[c], order).scale(&two));
    }
    let mut sum = QSeries::<Complex64>::zero(order);
    for mu in Flavor::ALL {
        let mut term = QSeries::<Complex64>::one(order);
        for &c in &tangent.roots {
            term = term.mul(&theta_quotient(mu, c, order));
        }
        sum = sum.add(&term).expect("aligned prefactors");
    }
    let phi0 = prefix.mul(&sum);
    let Ok(lambda) = Flavor::from_index(lambda) else {
        return Ok(phi0);
    };
    let mut out = phi0;
    for &b in &bundle.roots {
        out = out.mul(&theta_quotient(lambda, b, order));
    }
    if lambda == Flavor::One {
        out = out.scale(&Complex64::new((1u64 << bundle.rank_half()) as f64, 0.0));
    }
    Ok(out)
}

/// `θ_μ(c,τ)/θ_μ(0,τ)` via the tensor-product expansions.
fn theta_quotient(mu: Flavor, c: Complex64, order: usize) -> QSeries<Complex64> {
    match mu {
        Flavor::One => witten_product_series(FamilyKind::LambdaInt, &[c], order).scale(&(c * PI).cos()),
        Flavor::Two => witten_product_series(FamilyKind::LambdaHalfMinus, &[c], order),
        Flavor::Three => witten_product_series(FamilyKind::LambdaHalfPlus, &[c], order),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassKind {
    AHat,
    Ch,
    Euler,
    PontryaginTotal,
}

/// `g(z) = (z/2)/sinh(z/2)`, with `g(0) = 1`.
fn ahat_g(z: Complex64) -> Complex64 {
    let h = z / 2.0;
    if h.norm() < 1e-4 {
        // 1 − h²/6 + 7h⁴/360
        let h2 = h * h;
        return Complex64::new(1.0, 0.0) - h2 / 6.0 + h2 * h2 * (7.0 / 360.0);
    }
    h / h.sinh()
}

/// Equivariant characteristic class at `ξᵢ = 2π𝕚cᵢ`, universal element `w`.
pub fn class_eval(kind: ClassKind, roots: &RootData, w: Complex64) -> Complex64 {
    let shifted = roots
        .roots
        .iter()
        .zip(&roots.weights)
        .map(|(c, &m)| Complex64::new(0.0, 2.0 * PI) * c + w * m as f64);
    let one = Complex64::new(1.0, 0.0);
    match kind {
        ClassKind::AHat => shifted.map(ahat_g).product(),
        ClassKind::Ch => shifted.map(|x| x.cosh() * 2.0).sum(),
        ClassKind::Euler => shifted.product(),
        ClassKind::PontryaginTotal => shifted.map(|x| one + x * x).product(),
    }
}

/// `(Σ mⱼbⱼ, Σ mⱼ²)`: the `w` and `w²` coefficients of the equivariant first
/// Pontryagin class over the base term.
pub fn p1_coefficients(bundle: &RootData) -> (Complex64, i64) {
    let mb = bundle.roots.iter().zip(&bundle.weights).map(|(b, &m)| b * m as f64).sum();
    let m2 = bundle.weights.iter().map(|m| m * m).sum();
    (mb, m2)
}
