//! Floating-point evaluation of the product formulas.
//!
//! The product is cut at the first index `R` for which
//! `|q|^{e_R}·max(|w|, |w|⁻¹) < ε/8` and the geometric tail bound
//! `Σ_{r>R} |q|^{e_r}(|w| + |w|⁻¹) < ε/4`, where `e_r` is `r` or `r − 1/2`.

use core::f64::consts::PI;

use num_complex::Complex64;

use super::{ModuliPoint, ThetaKind};
use crate::DomainError;

/// Tail tolerance used when callers have no better idea.
pub const DEFAULT_EPS: f64 = 1e-16;

const MAX_TERMS: usize = 1 << 20;

fn i_pi() -> Complex64 {
    Complex64::new(0.0, PI)
}

/// `q^{1/8} = e^{πiτ/4}` on the principal branch of `τ`.
pub(crate) fn q_eighth(tau: Complex64) -> Complex64 {
    (i_pi() * tau / 4.0).exp()
}

fn check_eps(eps: f64) -> Result<(), DomainError> {
    if eps > 0.0 {
        Ok(())
    } else {
        Err(DomainError::NonPositiveTolerance)
    }
}

/// Number of product factors needed for tail error below `eps`.
pub fn truncation_terms(kind: ThetaKind, p: &ModuliPoint, eps: f64) -> Result<usize, DomainError> {
    check_eps(eps)?;
    let aq = (-2.0 * PI * p.tau().im).exp();
    let w = (2.0 * i_pi() * p.v()).exp().norm();
    let (wmax, wsum) = (w.max(1.0 / w), w + 1.0 / w);
    let offset = if kind.half_integral() { 0.5 } else { 0.0 };
    let tail_scale = wsum / (1.0 - aq);
    let mut head = aq.powf(1.0 - offset);
    for r in 1..MAX_TERMS {
        let next = head * aq;
        if head * wmax < eps / 8.0 && next * tail_scale < eps / 4.0 {
            return Ok(r);
        }
        head = next;
    }
    Err(DomainError::SlowConvergence)
}

/// `θ_kind(v, τ)` from the product formula with exactly `terms` factors.
pub fn theta_eval_truncated(kind: ThetaKind, p: &ModuliPoint, terms: usize) -> Complex64 {
    let tau = p.tau();
    let v = p.v();
    let q = (2.0 * i_pi() * tau).exp();
    let q_half = (i_pi() * tau).exp();
    let w = (2.0 * i_pi() * v).exp();
    let w_inv = (-2.0 * i_pi() * v).exp();
    let sign = kind.product_sign();
    let one = Complex64::new(1.0, 0.0);

    let mut value = match kind {
        ThetaKind::Theta => q_eighth(tau) * 2.0 * (PI * v).sin(),
        ThetaKind::Theta1 => q_eighth(tau) * 2.0 * (PI * v).cos(),
        ThetaKind::Theta2 | ThetaKind::Theta3 => one,
    };
    // q^{e_r}, starting at r = 1.
    let mut qe = if kind.half_integral() { q_half } else { q };
    let mut qr = q;
    for _ in 0..terms {
        value *= (one - qr) * (one + sign * qe * w) * (one + sign * qe * w_inv);
        qe *= q;
        qr *= q;
    }
    value
}

/// `θ_kind(v, τ)` with the product truncated so that the tail multiplier
/// differs from 1 by less than `eps`.
pub fn theta_eval(kind: ThetaKind, p: &ModuliPoint, eps: f64) -> Result<Complex64, DomainError> {
    let terms = truncation_terms(kind, p, eps)?;
    Ok(theta_eval_truncated(kind, p, terms))
}

/// `θ′(0, τ) = 2π q^{1/8} Π (1 − qʳ)³`.
pub fn theta_prime0(tau: Complex64, eps: f64) -> Result<Complex64, DomainError> {
    check_eps(eps)?;
    if tau.im.is_nan() || tau.im <= 0.0 {
        return Err(DomainError::TauNotInUpperHalfPlane);
    }
    let aq = (-2.0 * PI * tau.im).exp();
    let q = (2.0 * i_pi() * tau).exp();
    let one = Complex64::new(1.0, 0.0);
    let mut value = q_eighth(tau) * 2.0 * PI;
    let mut qr = q;
    let mut head = aq;
    for _ in 0..MAX_TERMS {
        value *= (one - qr).powi(3);
        if head < eps / 8.0 && 3.0 * head * aq / (1.0 - aq) < eps / 4.0 {
            return Ok(value);
        }
        qr *= q;
        head *= aq;
    }
    Err(DomainError::SlowConvergence)
}
