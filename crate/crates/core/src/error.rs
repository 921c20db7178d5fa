use core::fmt;

/// Failures of exact arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    DivisionByZero,
    ZeroDenominator,
    /// Adding two q-series whose `q^{1/8}` prefactors differ.
    MisalignedPrefactor { left: i64, right: i64 },
    /// The `q⁰` coefficient of a series has no inverse in its ring.
    NonInvertibleLeading,
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::DivisionByZero => f.write_str("division by zero"),
            AlgebraError::ZeroDenominator => f.write_str("zero denominator"),
            AlgebraError::MisalignedPrefactor { left, right } => write!(
                f,
                "misaligned q^(1/8) prefactors: {left}/8 vs {right}/8"
            ),
            AlgebraError::NonInvertibleLeading => {
                f.write_str("leading coefficient is not invertible")
            }
        }
    }
}

impl core::error::Error for AlgebraError {}

/// Arguments outside the domain of an operation.
#[derive(Clone, Debug, PartialEq)]
pub enum DomainError {
    TauNotInUpperHalfPlane,
    NonPositiveTolerance,
    /// The product formula would need more factors than we are willing to take.
    SlowConvergence,
    ZeroWeight,
    NotUnimodular { det: i64 },
    NotCoprime { c: i64, d: i64 },
    OddPeriod(i64),
    /// `μ`/`λ` must be one of θ₁, θ₂, θ₃.
    NotAFlavor,
    /// The series closed form is singular at this root (e.g. `θ(c,τ)` with `c = 0`).
    SingularRoot,
    /// `ch(S_t W)` evaluated at a pole `t·e^ξ = 1`.
    SymmetricPowerPole,
}

impl fmt::Display for DomainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainError::TauNotInUpperHalfPlane => f.write_str("tau not in upper half-plane"),
            DomainError::NonPositiveTolerance => f.write_str("tolerance must be positive"),
            DomainError::SlowConvergence => {
                f.write_str("product does not converge fast enough (Im tau too small)")
            }
            DomainError::ZeroWeight => f.write_str("weight must be nonzero"),
            DomainError::NotUnimodular { det } => {
                write!(f, "matrix has determinant {det}, expected 1")
            }
            DomainError::NotCoprime { c, d } => write!(f, "gcd({c}, {d}) != 1"),
            DomainError::OddPeriod(a) => write!(f, "period shift {a} is not even"),
            DomainError::NotAFlavor => f.write_str("expected one of theta1, theta2, theta3"),
            DomainError::SingularRoot => f.write_str("closed form is singular at this root"),
            DomainError::SymmetricPowerPole => f.write_str("pole of S_t at t*e^xi = 1"),
        }
    }
}

impl core::error::Error for DomainError {}

/// Structural problems with a fixture.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixtureError {
    EmptyName,
    NonPositiveDimension,
    ZeroTangentWeight { component: usize, index: usize },
    LengthMismatch { component: usize, field: &'static str, expected: usize, found: usize },
    BadSign { component: usize, sign: i64 },
}

impl fmt::Display for FixtureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixtureError::EmptyName => f.write_str("empty name"),
            FixtureError::NonPositiveDimension => f.write_str("d must be positive"),
            FixtureError::ZeroTangentWeight { component, index } => write!(
                f,
                "zero tangent weight (component {component}, index {index})"
            ),
            FixtureError::LengthMismatch { component, field, expected, found } => write!(
                f,
                "length mismatch: component {component} has {found} {field}, expected {expected}"
            ),
            FixtureError::BadSign { component, sign } => {
                write!(f, "component {component} has sign {sign}, expected +1 or -1")
            }
        }
    }
}

impl core::error::Error for FixtureError {}

/// Failures while evaluating a Lefschetz number numerically.
#[derive(Clone, Debug, PartialEq)]
pub enum EvalError {
    Domain(DomainError),
    /// Some `|θ(n t, τ)|` fell below the pole-proximity threshold.
    PoleProximity { weight: i64, magnitude: f64 },
    /// The value left the range of `f64`.
    NonFinite,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::Domain(e) => e.fmt(f),
            EvalError::PoleProximity { weight, magnitude } => write!(
                f,
                "pole proximity: |theta({weight} t, tau)| = {magnitude:e}"
            ),
            EvalError::NonFinite => f.write_str("value is not a finite f64"),
        }
    }
}

impl core::error::Error for EvalError {}

impl From<DomainError> for EvalError {
    fn from(e: DomainError) -> Self {
        EvalError::Domain(e)
    }
}
