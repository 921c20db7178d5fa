//! Rigidity reports as JSON or CSV.

use rigidity_core::lefschetz::{AnomalyReport, RigidityReport};
use serde::{Deserialize, Serialize};

use crate::fixtures::FixtureDocument;
use crate::CliError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderRow {
    pub k: usize,
    pub is_laurent: bool,
    pub is_constant: bool,
    /// Canonical text of the constant, present iff `is_constant`.
    pub constant: Option<String>,
    pub coefficient: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnomalyDocument {
    pub sum_m2: Vec<i64>,
    pub sum_mb: Vec<i64>,
    pub rigid_condition_met: bool,
    pub uniform_anomaly: bool,
}

impl From<&AnomalyReport> for AnomalyDocument {
    fn from(r: &AnomalyReport) -> Self {
        AnomalyDocument {
            sum_m2: r.components.iter().map(|c| c.sum_m2).collect(),
            sum_mb: r.components.iter().map(|c| c.sum_mb).collect(),
            rigid_condition_met: r.rigid_condition_met,
            uniform_anomaly: r.uniform_anomaly,
        }
    }
}

/// Numerical checks at one probe point; `null` where the point is too close
/// to a pole.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResidualsDocument {
    pub t: String,
    pub tau: String,
    pub periodicity_r1: Option<f64>,
    pub periodicity_r2: Option<f64>,
    pub modular_t: Option<f64>,
    pub modular_s: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDocument {
    pub fixture: FixtureDocument,
    pub lambda: u8,
    #[serde(rename = "K")]
    pub order: usize,
    pub orders: Vec<OrderRow>,
    pub anomaly: AnomalyDocument,
    pub residuals: ResidualsDocument,
}

/// One CSV line: `order,verdict,constant`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CsvRow {
    pub order: usize,
    pub verdict: String,
    pub constant: Option<String>,
}

pub const CSV_HEADER: &str = "order,verdict,constant";

pub fn order_rows(report: &RigidityReport) -> Vec<OrderRow> {
    report
        .orders
        .iter()
        .map(|o| OrderRow {
            k: o.k,
            is_laurent: o.is_laurent,
            is_constant: o.is_constant,
            constant: o.constant_value.as_ref().map(ToString::to_string),
            coefficient: o.coefficient.to_string(),
        })
        .collect()
}

impl ReportDocument {
    pub fn all_constant(&self) -> bool {
        self.orders.iter().all(|o| o.is_constant)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn csv_rows(&self) -> Vec<CsvRow> {
        self.orders
            .iter()
            .map(|o| CsvRow {
                order: o.k,
                verdict: verdict(o.is_laurent, o.is_constant).into(),
                constant: o.constant.clone(),
            })
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in self.csv_rows() {
            w.serialize(row).expect("in-memory CSV write");
        }
        String::from_utf8(w.into_inner().expect("in-memory CSV flush")).expect("CSV is UTF-8")
    }
}

fn verdict(is_laurent: bool, is_constant: bool) -> &'static str {
    match (is_laurent, is_constant) {
        (_, true) => "constant",
        (true, false) => "laurent",
        (false, false) => "non-laurent",
    }
}

pub fn parse_csv(text: &str) -> Result<Vec<CsvRow>, CliError> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header = r.headers().map_err(|e| CliError::Csv(e.to_string()))?;
    if header.iter().collect::<Vec<_>>().join(",") != CSV_HEADER {
        return Err(CliError::Csv("missing header".into()));
    }
    r.deserialize()
        .map(|row| {
            let row: CsvRow = row.map_err(|e| CliError::Csv(e.to_string()))?;
            if !["constant", "laurent", "non-laurent"].contains(&row.verdict.as_str()) {
                return Err(CliError::Csv(format!("bad verdict {:?}", row.verdict)));
            }
            Ok(row)
        })
        .collect()
}
