//! Exact arithmetic tower: `ℚ(𝕚)` scalars, Laurent polynomials in `z`,
//! canonical rational functions, and truncated series in `q^{1/2}`.

mod gauss;
mod laurent;
mod qseries;
mod ratfun;

pub use gauss::{scalar_arith, GaussRat, ScalarOp};
pub use laurent::LaurentPoly;
pub use qseries::QSeries;
pub use ratfun::RatFun;

use num_complex::Complex64;

/// The operations [`QSeries`] needs from its coefficients.
///
/// Method names avoid clashing with `core::ops` so that types implementing
/// both can be used without disambiguation.
pub trait Coefficient: Clone + core::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Multiplicative inverse, if it exists in the ring.
    fn inverse(&self) -> Option<Self>;
}

impl Coefficient for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        if Coefficient::is_zero(self) {
            None
        } else {
            Some(self.inv())
        }
    }
}
