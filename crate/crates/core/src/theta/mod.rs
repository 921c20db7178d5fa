//! Jacobi theta functions `θ, θ₁, θ₂, θ₃` in product form.
//!
//! With `q = e^{2πiτ}`, `w = e^{2πiv}` and `c = Π_{r≥1}(1 − qʳ)`:
//!
//! ```text
//! θ (v,τ) = c q^{1/8} 2sin(πv) Π (1 − qʳ w)(1 − qʳ/w)
//! θ₁(v,τ) = c q^{1/8} 2cos(πv) Π (1 + qʳ w)(1 + qʳ/w)
//! θ₂(v,τ) = c             Π (1 − q^{r−1/2} w)(1 − q^{r−1/2}/w)
//! θ₃(v,τ) = c             Π (1 + q^{r−1/2} w)(1 + q^{r−1/2}/w)
//! θ′(0,τ) = 2π q^{1/8} Π (1 − qʳ)³
//! ```
//!
//! [`numeric`] evaluates these in floating point; [`series`] expands them
//! exactly for first arguments `v = n·t`, in the variable `z = e^{πit}`.

pub mod numeric;
pub mod series;

pub use numeric::{theta_eval, theta_eval_truncated, theta_prime0, truncation_terms, DEFAULT_EPS};
pub use series::{bundle_factor, local_factor, theta_qseries, LocalFactor};

use num_complex::Complex64;

use crate::DomainError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ThetaKind {
    Theta,
    Theta1,
    Theta2,
    Theta3,
}

impl ThetaKind {
    pub const ALL: [ThetaKind; 4] =
        [ThetaKind::Theta, ThetaKind::Theta1, ThetaKind::Theta2, ThetaKind::Theta3];

    /// Odd kinds vanish at `v = 0`; only `θ` is odd.
    pub fn is_odd(self) -> bool {
        self == ThetaKind::Theta
    }

    /// Whether the product runs over half-integer powers `q^{r−1/2}`.
    pub(crate) fn half_integral(self) -> bool {
        matches!(self, ThetaKind::Theta2 | ThetaKind::Theta3)
    }

    /// Sign inside the product factors `(1 ± q^e w^{±1})`.
    pub(crate) fn product_sign(self) -> f64 {
        match self {
            ThetaKind::Theta | ThetaKind::Theta2 => -1.0,
            ThetaKind::Theta1 | ThetaKind::Theta3 => 1.0,
        }
    }

    /// Power of `q^{1/8}` in front of the product.
    pub(crate) fn prefactor_eighths(self) -> i64 {
        match self {
            ThetaKind::Theta | ThetaKind::Theta1 => 1,
            ThetaKind::Theta2 | ThetaKind::Theta3 => 0,
        }
    }
}

/// One of θ₁, θ₂, θ₃: the index `μ` of a tangent factor or `λ` of a bundle
/// factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    One,
    Two,
    Three,
}

impl Flavor {
    pub const ALL: [Flavor; 3] = [Flavor::One, Flavor::Two, Flavor::Three];

    pub fn kind(self) -> ThetaKind {
        match self {
            Flavor::One => ThetaKind::Theta1,
            Flavor::Two => ThetaKind::Theta2,
            Flavor::Three => ThetaKind::Theta3,
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Flavor::One => 1,
            Flavor::Two => 2,
            Flavor::Three => 3,
        }
    }

    pub fn from_index(i: u8) -> Result<Flavor, DomainError> {
        match i {
            1 => Ok(Flavor::One),
            2 => Ok(Flavor::Two),
            3 => Ok(Flavor::Three),
            _ => Err(DomainError::NotAFlavor),
        }
    }

    pub fn from_kind(kind: ThetaKind) -> Result<Flavor, DomainError> {
        match kind {
            ThetaKind::Theta => Err(DomainError::NotAFlavor),
            ThetaKind::Theta1 => Ok(Flavor::One),
            ThetaKind::Theta2 => Ok(Flavor::Two),
            ThetaKind::Theta3 => Ok(Flavor::Three),
        }
    }

    /// Partner under `S`: θ₁ ↔ θ₂, θ₃ fixed.
    pub fn s_partner(self) -> Flavor {
        match self {
            Flavor::One => Flavor::Two,
            Flavor::Two => Flavor::One,
            Flavor::Three => Flavor::Three,
        }
    }

    /// Partner under `T`: θ₂ ↔ θ₃, θ₁ fixed.
    pub fn t_partner(self) -> Flavor {
        match self {
            Flavor::One => Flavor::One,
            Flavor::Two => Flavor::Three,
            Flavor::Three => Flavor::Two,
        }
    }
}

/// A point `(v, τ) ∈ ℂ × 𝐇`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModuliPoint {
    v: Complex64,
    tau: Complex64,
}

impl ModuliPoint {
    pub fn new(v: Complex64, tau: Complex64) -> Result<Self, DomainError> {
        // NaN fails this comparison too.
        if tau.im > 0.0 {
            Ok(ModuliPoint { v, tau })
        } else {
            Err(DomainError::TauNotInUpperHalfPlane)
        }
    }

    pub fn v(&self) -> Complex64 {
        self.v
    }

    pub fn tau(&self) -> Complex64 {
        self.tau
    }

    pub fn with_v(&self, v: Complex64) -> Self {
        ModuliPoint { v, tau: self.tau }
    }
}
