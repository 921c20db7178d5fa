use alloc::string::String;
use alloc::vec::Vec;

use crate::FixtureError;

/// One isolated fixed point: tangent weights `n_i`, bundle weights `m_j` and
/// orientation sign `ε`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FixedPointComponent {
    pub tangent_weights: Vec<i64>,
    pub bundle_weights: Vec<i64>,
    pub sign: i64,
}

impl FixedPointComponent {
    pub fn new(sign: i64, tangent_weights: Vec<i64>, bundle_weights: Vec<i64>) -> Self {
        FixedPointComponent { tangent_weights, bundle_weights, sign }
    }

    /// `Σⱼ mⱼ²`.
    pub fn sum_m2(&self) -> i64 {
        self.bundle_weights.iter().map(|m| m * m).sum()
    }
}

/// Fixed-point data for a `2d`-manifold with a rank-`2ℓ` bundle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ManifoldFixture {
    pub name: String,
    pub d: usize,
    pub l: usize,
    pub components: Vec<FixedPointComponent>,
}

impl ManifoldFixture {
    /// All tangent weights, for the pole lattice.
    pub fn tangent_weights(&self) -> Vec<i64> {
        self.components.iter().flat_map(|c| c.tangent_weights.iter().copied()).collect()
    }
}

/// Checks every invariant and returns a copy with the name trimmed.
pub fn validate_fixture(f: &ManifoldFixture) -> Result<ManifoldFixture, FixtureError> {
    let name = f.name.trim();
    if name.is_empty() {
        return Err(FixtureError::EmptyName);
    }
    if f.d == 0 {
        return Err(FixtureError::NonPositiveDimension);
    }
    for (a, comp) in f.components.iter().enumerate() {
        if comp.sign != 1 && comp.sign != -1 {
            return Err(FixtureError::BadSign { component: a, sign: comp.sign });
        }
        if comp.tangent_weights.len() != f.d {
            return Err(FixtureError::LengthMismatch {
                component: a,
                field: "tangent_weights",
                expected: f.d,
                found: comp.tangent_weights.len(),
            });
        }
        if comp.bundle_weights.len() != f.l {
            return Err(FixtureError::LengthMismatch {
                component: a,
                field: "bundle_weights",
                expected: f.l,
                found: comp.bundle_weights.len(),
            });
        }
        if let Some(index) = comp.tangent_weights.iter().position(|&n| n == 0) {
            return Err(FixtureError::ZeroTangentWeight { component: a, index });
        }
    }
    let mut out = f.clone();
    out.name = name.into();
    Ok(out)
}
