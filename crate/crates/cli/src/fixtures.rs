//! Fixture documents: strict JSON in, validated `ManifoldFixture` out.

use std::path::Path;

use rigidity_core::lefschetz::{validate_fixture, FixedPointComponent, ManifoldFixture};
use serde::{Deserialize, Serialize};

use crate::CliError;

fn plus_one() -> i64 {
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentDocument {
    #[serde(default = "plus_one")]
    pub sign: i64,
    pub tangent_weights: Vec<i64>,
    #[serde(default)]
    pub bundle_weights: Vec<i64>,
}

/// The on-disk fixture schema. `comment` is free text and the only optional
/// key besides per-component defaults; anything else is rejected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixtureDocument {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comment: Option<String>,
    pub d: u32,
    pub l: u32,
    pub components: Vec<ComponentDocument>,
}

impl FixtureDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_fixture(&self) -> Result<ManifoldFixture, CliError> {
        let f = ManifoldFixture {
            name: self.name.clone(),
            d: self.d as usize,
            l: self.l as usize,
            components: self
                .components
                .iter()
                .map(|c| FixedPointComponent::new(c.sign, c.tangent_weights.clone(), c.bundle_weights.clone()))
                .collect(),
        };
        Ok(validate_fixture(&f)?)
    }

    pub fn from_fixture(f: &ManifoldFixture, comment: Option<String>) -> Self {
        FixtureDocument {
            name: f.name.clone(),
            comment,
            d: f.d as u32,
            l: f.l as u32,
            components: f
                .components
                .iter()
                .map(|c| ComponentDocument {
                    sign: c.sign,
                    tangent_weights: c.tangent_weights.clone(),
                    bundle_weights: c.bundle_weights.clone(),
                })
                .collect(),
        }
    }
}

/// Fixtures shipped with the binary, by name.
pub const BUNDLED: [(&str, &str); 6] = [
    ("s2", include_str!("../fixtures/s2.json")),
    ("s4", include_str!("../fixtures/s4.json")),
    ("s6", include_str!("../fixtures/s6.json")),
    ("s2xs2", include_str!("../fixtures/s2xs2.json")),
    ("onepoint", include_str!("../fixtures/onepoint.json")),
    ("anomalous", include_str!("../fixtures/anomalous.json")),
];

pub fn bundled(name: &str) -> Option<FixtureDocument> {
    let stem = name.strip_suffix(".json").unwrap_or(name);
    BUNDLED
        .iter()
        .find(|(n, _)| *n == stem)
        .map(|(_, text)| FixtureDocument::parse(text).expect("bundled fixtures parse"))
}

/// Loads a fixture from a path; a bare name such as `s2` or `s2.json` that
/// does not exist on disk falls back to the bundled copy.
pub fn load_document(spec: &str) -> Result<FixtureDocument, CliError> {
    let path = Path::new(spec);
    if !path.exists() {
        let is_bare = path.components().count() == 1;
        if let Some(doc) = bundled(spec).filter(|_| is_bare) {
            return Ok(doc);
        }
    }
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: spec.into(), source })?;
    FixtureDocument::parse(&text)
}

pub fn load_fixture(spec: &str) -> Result<(FixtureDocument, ManifoldFixture), CliError> {
    let doc = load_document(spec)?;
    let fixture = doc.to_fixture()?;
    Ok((doc, fixture))
}
