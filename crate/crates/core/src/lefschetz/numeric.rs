use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use super::{kappa, ManifoldFixture};
use crate::theta::{theta_eval, theta_prime0, Flavor, ModuliPoint, ThetaKind};
use crate::{DomainError, EvalError};

/// Evaluation is refused once some `|θ(n t, τ)|` drops below this.
pub const POLE_THRESHOLD: f64 = 1e-13;

/// `a/b` without forming `|b|²`, which overflows for `|b| > 1e154`.
fn ratio(a: Complex64, b: Complex64) -> Complex64 {
    let s = b.norm();
    (a / s) / (b / s)
}

/// Theta values at `v = 0` shared by every component.
struct Constants {
    point: ModuliPoint,
    eps: f64,
    two_prime_over_pi: Complex64,
    at_zero: [Complex64; 3],
}

impl Constants {
    fn new(t: Complex64, tau: Complex64, eps: f64) -> Result<Self, DomainError> {
        let point = ModuliPoint::new(t, tau)?;
        let zero = point.with_v(Complex64::new(0.0, 0.0));
        let mut at_zero = [Complex64::new(0.0, 0.0); 3];
        for mu in Flavor::ALL {
            at_zero[mu.index() as usize - 1] = theta_eval(mu.kind(), &zero, eps)?;
        }
        let two_prime_over_pi = theta_prime0(tau, eps)? * (2.0 / PI);
        Ok(Constants { point, eps, two_prime_over_pi, at_zero })
    }

    fn theta(&self, kind: ThetaKind, weight: i64) -> Result<Complex64, EvalError> {
        let value = theta_eval(kind, &self.point.with_v(self.point.v() * weight as f64), self.eps)?;
        if !value.is_finite() {
            return Err(EvalError::NonFinite);
        }
        Ok(value)
    }

    /// `Σ_μ Πᵢ F_μ(nᵢ)`.
    fn tangent_sum(&self, weights: &[i64]) -> Result<Complex64, EvalError> {
        let mut products = [Complex64::new(1.0, 0.0); 3];
        for &n in weights {
            let theta = self.theta(ThetaKind::Theta, n)?;
            if theta.norm() < POLE_THRESHOLD {
                return Err(EvalError::PoleProximity { weight: n, magnitude: theta.norm() });
            }
            for mu in Flavor::ALL {
                let i = mu.index() as usize - 1;
                products[i] *= self.two_prime_over_pi * ratio(self.theta(mu.kind(), n)?, theta) / self.at_zero[i];
            }
        }
        Ok(products.iter().sum())
    }

    /// `Πⱼ G_λ(mⱼ)`.
    fn bundle_product(&self, lambda: Flavor, weights: &[i64]) -> Result<Complex64, EvalError> {
        let denom = self.at_zero[lambda.index() as usize - 1];
        let mut acc = Complex64::new(1.0, 0.0);
        for &m in weights.iter().filter(|&&m| m != 0) {
            acc *= ratio(self.theta(lambda.kind(), m)?, denom);
        }
        Ok(acc)
    }
}

/// The summands `κ_λ ε_α (Σ_μ Πᵢ F_μ) Πⱼ G_λ`, one per component.
pub fn component_terms(
    lambda: Flavor,
    f: &ManifoldFixture,
    t: Complex64,
    tau: Complex64,
    eps: f64,
) -> Result<Vec<Complex64>, EvalError> {
    let consts = Constants::new(t, tau, eps)?;
    let k = kappa(lambda, f.l);
    f.components
        .iter()
        .map(|c| {
            let local = consts.tangent_sum(&c.tangent_weights)? * consts.bundle_product(lambda, &c.bundle_weights)?;
            let term = local * (k * c.sign as f64);
            if !term.is_finite() {
                return Err(EvalError::NonFinite);
            }
            Ok(term)
        })
        .collect()
}

/// `L_λ(t, τ)`; `0` for a fixture without components.
pub fn lefschetz_eval(
    lambda: Flavor,
    f: &ManifoldFixture,
    t: Complex64,
    tau: Complex64,
    eps: f64,
) -> Result<Complex64, EvalError> {
    let value: Complex64 = component_terms(lambda, f, t, tau, eps)?.into_iter().sum();
    if !value.is_finite() {
        return Err(EvalError::NonFinite);
    }
    Ok(value)
}
