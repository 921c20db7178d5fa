use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use super::{component_terms, kappa, ManifoldFixture};
use crate::theta::Flavor;
use crate::transform::Generator;
use crate::{DomainError, EvalError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComponentAnomaly {
    pub sum_m2: i64,
    /// `Σ mⱼbⱼ`, identically zero at isolated fixed points.
    pub sum_mb: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnomalyReport {
    pub components: Vec<ComponentAnomaly>,
    /// Every `Σm² = 0`.
    pub rigid_condition_met: bool,
    /// All `Σm²` equal.
    pub uniform_anomaly: bool,
}

pub fn anomaly_report(f: &ManifoldFixture) -> AnomalyReport {
    let components: Vec<ComponentAnomaly> =
        f.components.iter().map(|c| ComponentAnomaly { sum_m2: c.sum_m2(), sum_mb: 0 }).collect();
    let rigid_condition_met = components.iter().all(|c| c.sum_m2 == 0);
    let uniform_anomaly = components.windows(2).all(|w| w[0].sum_m2 == w[1].sum_m2);
    AnomalyReport { components, rigid_condition_met, uniform_anomaly }
}

fn scale_of(terms: &[Complex64]) -> f64 {
    1.0 + terms.iter().map(|z| z.norm()).sum::<f64>()
}

/// `(|L(t+a,τ) − L(t,τ)|, |L(t+aτ,τ) − L(t,τ)|)` for even `a`.
pub fn periodicity_residual(
    lambda: Flavor,
    f: &ManifoldFixture,
    t: Complex64,
    tau: Complex64,
    a: i64,
    eps: f64,
) -> Result<(f64, f64), EvalError> {
    if a % 2 != 0 {
        return Err(DomainError::OddPeriod(a).into());
    }
    let value = |s: Complex64| -> Result<Complex64, EvalError> { Ok(component_terms(lambda, f, s, tau, eps)?.into_iter().sum()) };
    let base = value(t)?;
    let r1 = (value(t + a as f64)? - base).norm();
    let r2 = (value(t + tau * a as f64)? - base).norm();
    Ok((r1, r2))
}

/// Relative residual of `L(t+aτ,τ) = Σ_α e^{−2π𝕚aΣm²_α(t+aτ/2)}·term_α(t,τ)`.
pub fn periodicity_prediction_residual(
    lambda: Flavor,
    f: &ManifoldFixture,
    t: Complex64,
    tau: Complex64,
    a: i64,
    eps: f64,
) -> Result<f64, EvalError> {
    if a % 2 != 0 {
        return Err(DomainError::OddPeriod(a).into());
    }
    let a_f = a as f64;
    let shifted: Complex64 = component_terms(lambda, f, t + tau * a_f, tau, eps)?.into_iter().sum();
    let predicted: Vec<Complex64> = component_terms(lambda, f, t, tau, eps)?
        .into_iter()
        .zip(&f.components)
        .map(|(term, c)| {
            let phase = Complex64::new(0.0, -2.0 * PI * a_f * c.sum_m2() as f64) * (t + tau * (a_f / 2.0));
            term * phase.exp()
        })
        .collect();
    let sum: Complex64 = predicted.iter().sum();
    Ok((shifted - sum).norm() / scale_of(&predicted))
}

/// Residual of the interchange law under `g`, relative to `1 + Σ_α |rhs_α|`.
///
/// * `T`: `L_λ(t,τ+1) = L_{λ′}(t,τ)` with `λ′ = 1,3,2`.
/// * `S`: `L_λ(t/τ,−1/τ) = τ^d Σ_α e^{π𝕚t²Σm²_α/τ}·(κ_λ/κ_{λ′})·term_{λ′,α}(t,τ)`
///   with `λ′ = 2,1,3`.
pub fn modular_image_residual(
    lambda: Flavor,
    f: &ManifoldFixture,
    t: Complex64,
    tau: Complex64,
    g: Generator,
    eps: f64,
) -> Result<f64, EvalError> {
    let (lhs, rhs): (Complex64, Vec<Complex64>) = match g {
        Generator::T => {
            let lhs = component_terms(lambda, f, t, tau + 1.0, eps)?.into_iter().sum();
            (lhs, component_terms(lambda.t_partner(), f, t, tau, eps)?)
        }
        Generator::S => {
            let partner = lambda.s_partner();
            let lhs = component_terms(lambda, f, t / tau, -tau.inv(), eps)?.into_iter().sum();
            let ratio = kappa(lambda, f.l) / kappa(partner, f.l);
            let tau_d = tau.powu(f.d as u32);
            let rhs = component_terms(partner, f, t, tau, eps)?
                .into_iter()
                .zip(&f.components)
                .map(|(term, c)| {
                    let anomaly = (Complex64::new(0.0, PI * c.sum_m2() as f64) * t * t / tau).exp();
                    term * anomaly * tau_d * ratio
                })
                .collect();
            (lhs, rhs)
        }
    };
    let sum: Complex64 = rhs.iter().sum();
    Ok((lhs - sum).norm() / scale_of(&rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lefschetz::FixedPointComponent;
    use crate::theta::DEFAULT_EPS;
    use alloc::vec;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn fixture(d: usize, l: usize, comps: Vec<FixedPointComponent>) -> ManifoldFixture {
        ManifoldFixture { name: "f".into(), d, l, components: comps }
    }

    fn anomalous() -> ManifoldFixture {
        fixture(1, 2, vec![FixedPointComponent::new(1, vec![1], vec![1, -1]), FixedPointComponent::new(1, vec![-1], vec![2, 0])])
    }

    #[test]
    fn anomaly_flags() {
        let r = anomaly_report(&fixture(1, 0, vec![FixedPointComponent::new(1, vec![1], vec![])]));
        assert!(r.rigid_condition_met && r.uniform_anomaly);
        let r = anomaly_report(&fixture(1, 2, vec![FixedPointComponent::new(1, vec![1], vec![1, -1])]));
        assert_eq!(r.components[0].sum_m2, 2);
        assert!(!r.rigid_condition_met);
        let r = anomaly_report(&fixture(
            1,
            2,
            vec![FixedPointComponent::new(1, vec![1], vec![1, -1]), FixedPointComponent::new(1, vec![-1], vec![-1, 1])],
        ));
        assert!(r.uniform_anomaly && !r.rigid_condition_met);
        let r = anomaly_report(&anomalous());
        assert!(!r.uniform_anomaly);
    }

    #[test]
    fn periodicity_on_anomalous_fixture() {
        let f = anomalous();
        let (t, tau) = (c(0.31, 0.0), c(0.15, 1.05));
        let (r1, r2) = periodicity_residual(Flavor::Two, &f, t, tau, 2, DEFAULT_EPS).unwrap();
        assert!(r1 < 1e-10, "{r1}");
        assert!(r2 > 1e-3, "{r2}");
        let pred = periodicity_prediction_residual(Flavor::Two, &f, t, tau, 2, DEFAULT_EPS).unwrap();
        assert!(pred < 1e-8, "{pred}");
        assert!(periodicity_residual(Flavor::Two, &f, t, tau, 1, DEFAULT_EPS).is_err());
    }

    #[test]
    fn interchange_laws() {
        let fixtures = [
            anomalous(),
            fixture(2, 1, vec![FixedPointComponent::new(1, vec![1, 2], vec![0]), FixedPointComponent::new(-1, vec![1, 3], vec![1])]),
        ];
        let points = [(c(0.21, 0.0), c(0.1, 1.2)), (c(0.37, 0.02), c(-0.4, 0.9))];
        for f in &fixtures {
            for (t, tau) in points {
                for lambda in Flavor::ALL {
                    let rt = modular_image_residual(lambda, f, t, tau, Generator::T, DEFAULT_EPS).unwrap();
                    let rs = modular_image_residual(lambda, f, t, tau, Generator::S, DEFAULT_EPS).unwrap();
                    assert!(rt < 1e-10, "T {lambda:?}: {rt}");
                    assert!(rs < 1e-8, "S {lambda:?}: {rs}");
                }
            }
        }
    }
}
