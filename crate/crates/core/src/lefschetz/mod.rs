//! Isolated-fixed-point Lefschetz numbers
//!
//! ```text
//! L_λ(t,τ) = κ_λ Σ_α ε_α (Σ_μ Πᵢ F_μ(n_{α,i})) Πⱼ G_λ(m_{α,j}),   κ₁ = 2^ℓ, κ₂ = κ₃ = 1
//! ```
//!
//! evaluated numerically, expanded exactly in `q^{1/2}`, and checked for
//! rigidity, double periodicity and the modular interchange laws.

mod checks;
mod fixture;
mod numeric;
mod series;

pub use checks::{
    anomaly_report, modular_image_residual, periodicity_prediction_residual, periodicity_residual, AnomalyReport,
    ComponentAnomaly,
};
pub use fixture::{validate_fixture, FixedPointComponent, ManifoldFixture};
pub use numeric::{component_terms, lefschetz_eval, POLE_THRESHOLD};
pub use series::{lefschetz_qexpansion, rigidity_check, OrderVerdict, RigidityReport};

use crate::theta::Flavor;

/// `κ_λ` as a float.
pub fn kappa(lambda: Flavor, l: usize) -> f64 {
    match lambda {
        Flavor::One => 2f64.powi(l as i32),
        _ => 1.0,
    }
}
