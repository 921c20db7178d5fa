//! Exact q-expansions of theta functions at `v = n·t`.
//!
//! Coefficients live in `ℚ(𝕚)[z, z⁻¹]` with `z = e^{πit}`, so
//! `2sin(πnt) = −𝕚(zⁿ − z⁻ⁿ)`, `2cos(πnt) = zⁿ + z⁻ⁿ` and `e^{±2πint} = z^{±2n}`.
//! The symbol `π` never appears: `θ′(0,τ)` is carried as `θ′/π = 2 q^{1/8} c³`.

use super::{Flavor, ThetaKind};
use crate::exact::{Coefficient, GaussRat, LaurentPoly, QSeries, RatFun};
use crate::DomainError;

/// `c · Π (1 ± q^{e_r} w)(1 ± q^{e_r} w⁻¹)` to order `q^{K/2}`: the theta
/// product without its trigonometric and `q^{1/8}` prefactors.
///
/// Generic over the coefficient ring so the numerical q-series code can share
/// it with the exact backend.
pub fn theta_product_series<C: Coefficient>(kind: ThetaKind, w: &C, w_inv: &C, order: usize) -> QSeries<C> {
    let mut s = QSeries::<C>::one(order);
    let minus_one = C::one().negated();
    for r in 1..=order / 2 {
        s.mul_binomial(&minus_one, 2 * r);
    }
    let (a, b) = if kind.product_sign() < 0.0 { (w.negated(), w_inv.negated()) } else { (w.clone(), w_inv.clone()) };
    let mut e = if kind.half_integral() { 1 } else { 2 };
    while e <= order {
        s.mul_binomial(&a, e);
        s.mul_binomial(&b, e);
        e += 2;
    }
    s
}

/// `c³` to order `q^{K/2}`; `θ′(0,τ)/π = 2 q^{1/8} c³`.
pub fn euler_cube_series<C: Coefficient>(order: usize) -> QSeries<C> {
    let mut s = QSeries::<C>::one(order);
    let minus_one = C::one().negated();
    for r in 1..=order / 2 {
        for _ in 0..3 {
            s.mul_binomial(&minus_one, 2 * r);
        }
    }
    s
}

/// Trigonometric prefactor of `θ_kind(n t)` as a Laurent polynomial in `z`.
fn trig_prefactor(kind: ThetaKind, n: i64) -> LaurentPoly {
    match kind {
        ThetaKind::Theta => LaurentPoly::sin_pair(n).scale(&-GaussRat::i()),
        ThetaKind::Theta1 => LaurentPoly::cos_pair(n),
        ThetaKind::Theta2 | ThetaKind::Theta3 => LaurentPoly::one(),
    }
}

fn product_in_z(kind: ThetaKind, n: i64, order: usize) -> QSeries<LaurentPoly> {
    theta_product_series(kind, &LaurentPoly::z_pow(2 * n), &LaurentPoly::z_pow(-2 * n), order)
}

/// Exact series of `θ_kind(weight·t, τ)` through `q^{K/2}`.
///
/// The `q^{1/8}` factor of `θ`, `θ₁` is carried as `prefactor_eighths = 1`.
pub fn theta_qseries(kind: ThetaKind, weight: i64, order: usize) -> QSeries<LaurentPoly> {
    product_in_z(kind, weight, order)
        .scale(&trig_prefactor(kind, weight))
        .with_prefactor(kind.prefactor_eighths())
}

/// `θ′(0,τ)/π`.
fn theta_prime_over_pi(order: usize) -> QSeries<LaurentPoly> {
    euler_cube_series::<LaurentPoly>(order).scale(&LaurentPoly::constant(GaussRat::from_int(2))).with_prefactor(1)
}

/// The local tangent factor
/// `F_μ(n) = (2/π)·θ′(0,τ)·θ_μ(nt,τ) / (θ(nt,τ)·θ_μ(0,τ))`, split as
/// `numerator / (zⁿ − z⁻ⁿ)` with a Laurent-coefficient numerator series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalFactor {
    pub weight: i64,
    pub mu: Flavor,
    /// `zⁿ − z⁻ⁿ`, the only non-unit denominator.
    pub denominator: LaurentPoly,
    pub numerator: QSeries<LaurentPoly>,
}

impl LocalFactor {
    pub fn to_series(&self) -> QSeries<RatFun> {
        let den = RatFun::new(LaurentPoly::one(), self.denominator.clone()).expect("nonzero weight");
        self.numerator.map(|c| RatFun::from(c.clone()).mul(&den))
    }
}

/// `F_μ(n)` to order `q^{K/2}`. Fails for `n = 0`, where `θ(0,τ) = 0`.
pub fn local_factor(mu: Flavor, n: i64, order: usize) -> Result<LocalFactor, DomainError> {
    if n == 0 {
        return Err(DomainError::ZeroWeight);
    }
    let kind = mu.kind();
    // (2/π)·θ′ · θ_μ(nt)
    let top = theta_prime_over_pi(order)
        .scale(&LaurentPoly::constant(GaussRat::from_int(2)))
        .mul(&theta_qseries(kind, n, order));
    // θ(nt) without its sin pair, times θ_μ(0)
    let bottom = product_in_z(ThetaKind::Theta, n, order)
        .scale(&LaurentPoly::constant(-GaussRat::i()))
        .with_prefactor(ThetaKind::Theta.prefactor_eighths())
        .mul(&theta_qseries(kind, 0, order));
    let numerator = top.div(&bottom).expect("theta_mu(0) and the theta tail have unit leading terms");
    assert_eq!(numerator.prefactor_eighths(), 0, "q^(1/8) prefactors must cancel in F_mu");
    Ok(LocalFactor { weight: n, mu, denominator: LaurentPoly::sin_pair(n), numerator })
}

/// The bundle factor `G_λ(m) = θ_λ(mt,τ)/θ_λ(0,τ)`; `G_λ(0) = 1`.
pub fn bundle_factor(lambda: Flavor, m: i64, order: usize) -> QSeries<LaurentPoly> {
    if m == 0 {
        return QSeries::one(order);
    }
    let kind = lambda.kind();
    let g = theta_qseries(kind, m, order)
        .div(&theta_qseries(kind, 0, order))
        .expect("theta_lambda(0) has a constant leading term");
    assert_eq!(g.prefactor_eighths(), 0, "q^(1/8) prefactors must cancel in G_lambda");
    g
}
