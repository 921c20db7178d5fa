//! Translation laws, the `SL₂(ℤ)` action on `ℂ × 𝐇`, the S/T table,
//! Bézout completion and the pole lattice.
//!
//! All verifiers return a normalized residual `|lhs − rhs| / (1 + |rhs|)`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use num_integer::{ExtendedGcd, Integer};

use crate::theta::{theta_eval, theta_prime0, ModuliPoint, ThetaKind, DEFAULT_EPS};
use crate::DomainError;

/// `[a b; c d]` with `ad − bc = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SL2Z {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl SL2Z {
    pub const IDENTITY: SL2Z = SL2Z { a: 1, b: 0, c: 0, d: 1 };
    pub const S: SL2Z = SL2Z { a: 0, b: -1, c: 1, d: 0 };
    pub const T: SL2Z = SL2Z { a: 1, b: 1, c: 0, d: 1 };

    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self, DomainError> {
        let det = a * d - b * c;
        if det != 1 {
            return Err(DomainError::NotUnimodular { det });
        }
        Ok(SL2Z { a, b, c, d })
    }

    pub fn entries(&self) -> [i64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// Matrix product `self · rhs`.
    pub fn compose(&self, rhs: &SL2Z) -> SL2Z {
        SL2Z {
            a: self.a * rhs.a + self.b * rhs.c,
            b: self.a * rhs.b + self.b * rhs.d,
            c: self.c * rhs.a + self.d * rhs.c,
            d: self.c * rhs.b + self.d * rhs.d,
        }
    }

    /// Left action `(v, τ) ↦ (v/(cτ+d), (aτ+b)/(cτ+d))`, so that
    /// `(gh)·p = g·(h·p)`.
    pub fn act(&self, p: &ModuliPoint) -> ModuliPoint {
        let tau = p.tau();
        let j = tau * self.c as f64 + self.d as f64;
        let new_tau = (tau * self.a as f64 + self.b as f64) / j;
        // Im((aτ+b)/(cτ+d)) = Im τ / |cτ+d|² > 0 whenever Im τ > 0.
        ModuliPoint::new(p.v() / j, new_tau).expect("SL2(Z) preserves the upper half-plane")
    }
}

/// Checks the determinant, then acts.
pub fn modular_act(a: i64, b: i64, c: i64, d: i64, p: &ModuliPoint) -> Result<ModuliPoint, DomainError> {
    Ok(SL2Z::new(a, b, c, d)?.act(p))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shift {
    ByOne,
    ByTau,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    S,
    T,
}

impl Generator {
    pub fn matrix(self) -> SL2Z {
        match self {
            Generator::S => SL2Z::S,
            Generator::T => SL2Z::T,
        }
    }
}

/// A row of the modular transformation table: one of the four theta
/// functions, or `θ′(0,τ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TableRow {
    Theta(ThetaKind),
    ThetaPrime,
}

impl TableRow {
    pub const ALL: [TableRow; 5] = [
        TableRow::Theta(ThetaKind::Theta),
        TableRow::Theta(ThetaKind::Theta1),
        TableRow::Theta(ThetaKind::Theta2),
        TableRow::Theta(ThetaKind::Theta3),
        TableRow::ThetaPrime,
    ];
}

fn i_unit() -> Complex64 {
    Complex64::new(0.0, 1.0)
}

fn normalized(lhs: Complex64, rhs: Complex64) -> f64 {
    (lhs - rhs).norm() / (1.0 + rhs.norm())
}

fn theta(kind: ThetaKind, v: Complex64, tau: Complex64) -> Result<Complex64, DomainError> {
    theta_eval(kind, &ModuliPoint::new(v, tau)?, DEFAULT_EPS)
}

/// `θ(v+1) = ∓θ(v)` and `θ(v+τ) = ∓q^{−1/2}e^{−2πiv}θ(v)`.
pub fn translation_multiplier(kind: ThetaKind, p: &ModuliPoint, shift: Shift) -> Complex64 {
    match shift {
        Shift::ByOne => match kind {
            ThetaKind::Theta | ThetaKind::Theta1 => Complex64::new(-1.0, 0.0),
            ThetaKind::Theta2 | ThetaKind::Theta3 => Complex64::new(1.0, 0.0),
        },
        Shift::ByTau => {
            let sign = match kind {
                ThetaKind::Theta | ThetaKind::Theta2 => -1.0,
                ThetaKind::Theta1 | ThetaKind::Theta3 => 1.0,
            };
            let i_pi = Complex64::new(0.0, PI);
            (-i_pi * p.tau() - 2.0 * i_pi * p.v()).exp() * sign
        }
    }
}

pub fn translation_residual(kind: ThetaKind, p: &ModuliPoint, shift: Shift) -> Result<f64, DomainError> {
    let step = match shift {
        Shift::ByOne => Complex64::new(1.0, 0.0),
        Shift::ByTau => p.tau(),
    };
    let base = theta(kind, p.v(), p.tau())?;
    let shifted = theta(kind, p.v() + step, p.tau())?;
    Ok(normalized(shifted, translation_multiplier(kind, p, shift) * base))
}

/// Multiplier with `θ_kind(v + kτ, τ) = factor · θ_kind(v, τ)`:
/// `(±1)^k e^{−2πik(v + kτ/2)}`, the sign present for `θ` and `θ₂`.
pub fn lattice_shift_factor(kind: ThetaKind, k: i64, p: &ModuliPoint) -> Complex64 {
    let kf = k as f64;
    let expo = Complex64::new(0.0, -2.0 * PI) * kf * (p.v() + p.tau() * (kf / 2.0));
    let sign = match kind {
        ThetaKind::Theta | ThetaKind::Theta2 if k.rem_euclid(2) == 1 => -1.0,
        _ => 1.0,
    };
    expo.exp() * sign
}

pub fn lattice_shift_residual(kind: ThetaKind, k: i64, p: &ModuliPoint) -> Result<f64, DomainError> {
    let base = theta(kind, p.v(), p.tau())?;
    let shifted = theta(kind, p.v() + p.tau() * k as f64, p.tau())?;
    Ok(normalized(shifted, lattice_shift_factor(kind, k, p) * base))
}

/// Residual of one row of the S/T table at `p`. For the `θ′` row only
/// `p.tau()` is used.
pub fn modular_residual(row: TableRow, p: &ModuliPoint, g: Generator) -> Result<f64, DomainError> {
    let (v, tau) = (p.v(), p.tau());
    let i = i_unit();
    match (row, g) {
        (TableRow::Theta(kind), Generator::S) => {
            let lhs = theta(kind, v / tau, -tau.inv())?;
            let partner = match kind {
                ThetaKind::Theta => ThetaKind::Theta,
                ThetaKind::Theta1 => ThetaKind::Theta2,
                ThetaKind::Theta2 => ThetaKind::Theta1,
                ThetaKind::Theta3 => ThetaKind::Theta3,
            };
            let mut factor = (tau / i).sqrt() * (i * PI * v * v / tau).exp();
            if kind == ThetaKind::Theta {
                factor /= i;
            }
            Ok(normalized(lhs, factor * theta(partner, v, tau)?))
        }
        (TableRow::Theta(kind), Generator::T) => {
            let lhs = theta(kind, v, tau + 1.0)?;
            let eighth = (i * PI / 4.0).exp();
            let rhs = match kind {
                ThetaKind::Theta | ThetaKind::Theta1 => eighth * theta(kind, v, tau)?,
                ThetaKind::Theta2 => theta(ThetaKind::Theta3, v, tau)?,
                ThetaKind::Theta3 => theta(ThetaKind::Theta2, v, tau)?,
            };
            Ok(normalized(lhs, rhs))
        }
        (TableRow::ThetaPrime, Generator::S) => {
            let lhs = theta_prime0(-tau.inv(), DEFAULT_EPS)?;
            let r = tau / i;
            Ok(normalized(lhs, r * r.sqrt() * theta_prime0(tau, DEFAULT_EPS)?))
        }
        (TableRow::ThetaPrime, Generator::T) => {
            let lhs = theta_prime0(tau + 1.0, DEFAULT_EPS)?;
            Ok(normalized(lhs, (i * PI / 4.0).exp() * theta_prime0(tau, DEFAULT_EPS)?))
        }
    }
}

/// `|θ′(0,τ) − πθ₁θ₂θ₃(0,τ)| / |θ′(0,τ)|`.
pub fn jacobi_identity_residual(tau: Complex64) -> Result<f64, DomainError> {
    let zero = ModuliPoint::new(Complex64::new(0.0, 0.0), tau)?;
    let mut prod = Complex64::new(PI, 0.0);
    for kind in [ThetaKind::Theta1, ThetaKind::Theta2, ThetaKind::Theta3] {
        prod *= theta_eval(kind, &zero, DEFAULT_EPS)?;
    }
    let lhs = theta_prime0(tau, DEFAULT_EPS)?;
    Ok((lhs - prod).norm() / lhs.norm())
}

/// Completes a coprime bottom row `(c, d)` to a matrix in `SL₂(ℤ)`.
///
/// Among all solutions `(a + kc, b + kd)` the one with the smallest `|a|` is
/// returned, ties broken by smallest `|b|` and then positive `a`.
pub fn bezout_complete(c: i64, d: i64) -> Result<SL2Z, DomainError> {
    let ExtendedGcd { gcd, x, y, .. } = c.abs().extended_gcd(&d.abs());
    if gcd != 1 {
        return Err(DomainError::NotCoprime { c, d });
    }
    // x|c| + y|d| = 1, and we need a·d − b·c = 1.
    let a0 = y * d.signum();
    let b0 = -x * c.signum();
    debug_assert_eq!(a0 * d - b0 * c, 1);
    if c == 0 {
        // d = ±1, a = d, b free: pick b = 0.
        return SL2Z::new(d, 0, 0, d);
    }
    let k0 = -(a0 as f64 / c as f64).round() as i64;
    let best = (k0 - 2..=k0 + 2)
        .map(|k| (a0 + k * c, b0 + k * d))
        .min_by_key(|&(a, b)| (a.abs(), b.abs(), a < 0))
        .expect("nonempty candidate range");
    SL2Z::new(best.0, best.1, c, d)
}

/// Candidate pole set `∪ₙ (1/n)(ℤ + τℤ)` for a list of tangent weights.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PoleLattice {
    denominators: BTreeSet<u64>,
}

impl PoleLattice {
    pub fn denominators(&self) -> impl Iterator<Item = u64> + '_ {
        self.denominators.iter().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.denominators.is_empty()
    }

    /// Distance from `t` to the nearest candidate point, measured as
    /// `min_n |nt − (j + kτ)| / n`. Infinite for an empty lattice.
    pub fn distance(&self, t: Complex64, tau: Complex64) -> f64 {
        self.denominators
            .iter()
            .map(|&n| {
                let nt = t * n as f64;
                let k = (nt.im / tau.im).round();
                let rest = nt - tau * k;
                let j = rest.re.round();
                (rest - j).norm() / n as f64
            })
            .fold(f64::INFINITY, f64::min)
    }

    pub fn contains(&self, t: Complex64, tau: Complex64, tol: f64) -> bool {
        self.distance(t, tau) <= tol
    }

    /// Lattice points `(j + kτ)/n` with `|j|, |k| ≤ range`.
    pub fn points(&self, tau: Complex64, range: i64) -> Vec<Complex64> {
        let mut out = Vec::new();
        for &n in &self.denominators {
            for j in -range..=range {
                for k in -range..=range {
                    out.push((tau * k as f64 + j as f64) / n as f64);
                }
            }
        }
        out
    }
}

pub fn pole_lattice(weights: &[i64]) -> Result<PoleLattice, DomainError> {
    if weights.contains(&0) {
        return Err(DomainError::ZeroWeight);
    }
    Ok(PoleLattice { denominators: weights.iter().map(|w| w.unsigned_abs()).collect() })
}
