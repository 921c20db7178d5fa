//! Exact and numerical machinery for equivariant Lefschetz numbers of
//! Dirac operators twisted by theta-function bundles.
//!
//! The crate is `no_std` and only needs `alloc`. It is split into:
//!
//! - [`exact`]: Gaussian rationals, Laurent polynomials in `z = e^{πit}`,
//!   canonical rational functions and truncated `q^{1/2}`-series.
//! - [`theta`]: the four Jacobi theta functions and `θ′(0,τ)`, numerically
//!   and as exact q-series, plus the local fixed-point factors.
//! - [`transform`]: translation laws, the `SL₂(ℤ)` action, Bézout
//!   completion and the pole lattice.
//! - [`chseries`]: Chern-character calculus and brute-force expansions of
//!   the infinite tensor products.
//! - [`lefschetz`]: fixtures, both Lefschetz evaluators and the rigidity,
//!   anomaly and modularity verdicts.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod chseries;
pub mod exact;
pub mod lefschetz;
pub mod theta;
pub mod transform;

mod error;

pub use error::{AlgebraError, DomainError, EvalError, FixtureError};
pub use num_complex::Complex64;
