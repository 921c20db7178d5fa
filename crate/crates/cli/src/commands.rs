//! The five subcommands as pure functions from arguments to output text and
//! exit code.

use std::fmt::Write as _;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rigidity_core::chseries::{identity_residual, FamilyKind};
use rigidity_core::lefschetz::{
    anomaly_report, lefschetz_qexpansion, modular_image_residual, periodicity_residual, rigidity_check,
    ManifoldFixture,
};
use rigidity_core::theta::{theta_eval, Flavor, ModuliPoint, ThetaKind, DEFAULT_EPS};
use rigidity_core::transform::{
    jacobi_identity_residual, lattice_shift_residual, modular_residual, pole_lattice, translation_residual,
    Generator, Shift, TableRow,
};
use rigidity_core::{DomainError, EvalError};
use serde::Serialize;

use crate::complex::{format_complex, format_real, parse_complex};
use crate::fixtures::{load_fixture, FixtureDocument};
use crate::report::{order_rows, AnomalyDocument, ReportDocument, ResidualsDocument};
use crate::CliError;

/// Exit codes: verdict passed / failed.
pub const PASS: u8 = 0;
pub const FAIL: u8 = 1;

/// Text for stdout plus the exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn verdict(text: String, pass: bool) -> Self {
        Output { text, code: if pass { PASS } else { FAIL } }
    }
}

pub fn cmd_theta(kind: ThetaKind, v: &str, tau: &str, eps: f64) -> Result<Output, CliError> {
    let p = ModuliPoint::new(parse_complex(v)?, parse_complex(tau)?)?;
    let value = theta_eval(kind, &p, eps)?;
    Ok(Output { text: format!("{}\n", format_complex(value)), code: PASS })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Translations,
    Modular,
    Jacobi,
    Chseries,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Translations => "translations",
            Suite::Modular => "modular",
            Suite::Jacobi => "jacobi",
            Suite::Chseries => "chseries",
        }
    }
}

/// One randomly drawn check; drawn sequentially from the seed, evaluated in
/// parallel.
#[derive(Clone, Copy, Debug)]
enum Sample {
    Translation(ThetaKind, ModuliPoint, Shift),
    LatticeShift(ThetaKind, ModuliPoint, i64),
    Modular(TableRow, ModuliPoint, Generator),
    Jacobi(Complex64),
    Chseries(FamilyKind, Complex64),
}

fn random_point(rng: &mut ChaCha8Rng) -> ModuliPoint {
    let v = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    let tau = Complex64::new(rng.gen_range(-0.5..0.5), rng.gen_range(0.5..2.0));
    ModuliPoint::new(v, tau).expect("Im tau > 0")
}

fn draw(suite: Suite, rng: &mut ChaCha8Rng) -> Sample {
    match suite {
        Suite::Translations => {
            let kind = ThetaKind::ALL[rng.gen_range(0..4)];
            let p = random_point(rng);
            match rng.gen_range(0..9) {
                0 => Sample::Translation(kind, p, Shift::ByOne),
                1 => Sample::Translation(kind, p, Shift::ByTau),
                k => Sample::LatticeShift(kind, p, k as i64 - 5),
            }
        }
        Suite::Modular => {
            let row = TableRow::ALL[rng.gen_range(0..5)];
            let g = if rng.gen_bool(0.5) { Generator::S } else { Generator::T };
            Sample::Modular(row, random_point(rng), g)
        }
        Suite::Jacobi => Sample::Jacobi(Complex64::new(rng.gen_range(-0.5..0.5), rng.gen_range(0.3..2.0))),
        Suite::Chseries => {
            let family = FamilyKind::ALL[rng.gen_range(0..6)];
            let c = Complex64::from_polar(rng.gen_range(0.01..0.3), rng.gen_range(-0.2..0.2));
            Sample::Chseries(family, if rng.gen_bool(0.5) { c } else { -c })
        }
    }
}

fn residual(sample: Sample) -> Result<f64, DomainError> {
    match sample {
        Sample::Translation(kind, p, shift) => translation_residual(kind, &p, shift),
        Sample::LatticeShift(kind, p, k) => lattice_shift_residual(kind, k, &p),
        Sample::Modular(row, p, g) => modular_residual(row, &p, g),
        Sample::Jacobi(tau) => jacobi_identity_residual(tau),
        Sample::Chseries(family, c) => identity_residual(family, c, 12),
    }
}

pub fn cmd_verify(suite: Suite, samples: usize, seed: u64, tol: f64) -> Result<Output, CliError> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(DomainError::NonPositiveTolerance.into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let drawn: Vec<Sample> = (0..samples).map(|_| draw(suite, &mut rng)).collect();
    let residuals = drawn.into_par_iter().map(residual).collect::<Result<Vec<f64>, _>>()?;
    let max = residuals.iter().copied().fold(0.0f64, f64::max);
    let failures = residuals.iter().filter(|r| r.is_nan() || **r >= tol).count();
    let pass = failures == 0;
    let text = format!(
        "suite={} samples={samples} seed={seed} tol={} max_residual={} failures={failures} verdict={}\n",
        suite.name(),
        format_real(tol),
        format_real(max),
        if pass { "pass" } else { "fail" }
    );
    Ok(Output::verdict(text, pass))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

const PROBES: [(f64, f64, f64); 4] = [(0.2317, 0.1, 1.1), (0.4129, -0.2, 0.95), (0.1377, 0.3, 1.25), (0.3011, 0.0, 1.05)];

/// First probe point at least `0.03` away from the pole lattice on both
/// sides of `S`.
fn probe_point(f: &ManifoldFixture) -> (Complex64, Complex64) {
    let lattice = pole_lattice(&f.tangent_weights()).expect("validated weights");
    let points = PROBES.map(|(t, re, im)| (Complex64::new(t, 0.0), Complex64::new(re, im)));
    points
        .iter()
        .copied()
        .find(|&(t, tau)| lattice.distance(t, tau) > 0.03 && lattice.distance(t / tau, -tau.inv()) > 0.03)
        .unwrap_or(points[0])
}

fn ok_or_pole<T>(r: Result<T, EvalError>) -> Result<Option<T>, CliError> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(EvalError::PoleProximity { .. } | EvalError::NonFinite) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

pub fn build_report(
    doc: &FixtureDocument,
    f: &ManifoldFixture,
    lambda: Flavor,
    order: usize,
) -> Result<ReportDocument, CliError> {
    let series = lefschetz_qexpansion(lambda, f, order)?;
    let rigidity = rigidity_check(&series);
    let anomaly = anomaly_report(f);
    let (t, tau) = probe_point(f);
    let period = ok_or_pole(periodicity_residual(lambda, f, t, tau, 2, DEFAULT_EPS))?;
    let residuals = ResidualsDocument {
        t: format_complex(t),
        tau: format_complex(tau),
        periodicity_r1: period.map(|p| p.0),
        periodicity_r2: period.map(|p| p.1),
        modular_t: ok_or_pole(modular_image_residual(lambda, f, t, tau, Generator::T, DEFAULT_EPS))?,
        modular_s: ok_or_pole(modular_image_residual(lambda, f, t, tau, Generator::S, DEFAULT_EPS))?,
    };
    Ok(ReportDocument {
        fixture: doc.clone(),
        lambda: lambda.index(),
        order,
        orders: order_rows(&rigidity),
        anomaly: AnomalyDocument::from(&anomaly),
        residuals,
    })
}

pub fn cmd_rigidity(fixture: &str, lambda: Flavor, order: usize, format: Format) -> Result<Output, CliError> {
    let (doc, f) = load_fixture(fixture)?;
    let report = build_report(&doc, &f, lambda, order)?;
    let text = match format {
        Format::Csv => report.to_csv(),
        Format::Json | Format::Text => report.to_json() + "\n",
    };
    Ok(Output::verdict(text, report.all_constant()))
}

/// `"5x5"` → `(5, 5)`.
pub fn parse_grid(spec: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("grid must look like 5x5, got {spec:?}"));
    let (a, b) = spec.split_once(['x', 'X']).ok_or_else(bad)?;
    let (a, b): (usize, usize) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if a == 0 || b == 0 || a * b > 1_000_000 {
        return Err(bad());
    }
    Ok((a, b))
}

/// `"0.1:0.9"` → `(0.1, 0.9)`.
pub fn parse_range(spec: &str) -> Result<(f64, f64), CliError> {
    let bad = || CliError::Usage(format!("range must look like 0.1:0.9, got {spec:?}"));
    let (a, b) = spec.split_once(':').ok_or_else(bad)?;
    let a: f64 = a.trim().parse().map_err(|_| bad())?;
    let b: f64 = b.trim().parse().map_err(|_| bad())?;
    if !a.is_finite() || !b.is_finite() {
        return Err(bad());
    }
    Ok((a, b))
}

fn linspace((lo, hi): (f64, f64), n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![(lo + hi) / 2.0];
    }
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}

#[derive(Clone, Debug)]
pub struct GridSpec {
    pub shape: (usize, usize),
    pub t: (f64, f64),
    pub tau_re: (f64, f64),
    pub tau_im: (f64, f64),
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec { shape: (5, 5), t: (0.05, 0.95), tau_re: (-0.45, 0.45), tau_im: (0.8, 1.6) }
    }
}

impl GridSpec {
    /// `t` along one axis, `τ` along a diagonal of the `(Re, Im)` box.
    pub fn points(&self) -> Result<Vec<(Complex64, Complex64)>, CliError> {
        if self.tau_im.0 <= 0.0 || self.tau_im.1 <= 0.0 {
            return Err(DomainError::TauNotInUpperHalfPlane.into());
        }
        let ts = linspace(self.t, self.shape.0);
        let res = linspace(self.tau_re, self.shape.1);
        let ims = linspace(self.tau_im, self.shape.1);
        let mut out = Vec::with_capacity(ts.len() * res.len());
        for &t in &ts {
            for (&re, &im) in res.iter().zip(&ims) {
                out.push((Complex64::new(t, 0.0), Complex64::new(re, im)));
            }
        }
        Ok(out)
    }
}

/// Minimum distance to the pole lattice before a grid point is evaluated.
const GRID_POLE_MARGIN: f64 = 1e-3;

#[derive(Clone, Debug)]
struct GridRow {
    t: Complex64,
    tau: Complex64,
    lambda: Flavor,
    values: Option<(f64, f64, f64)>,
}

pub fn cmd_modularity(
    fixture: &str,
    lambdas: &[Flavor],
    g: Generator,
    grid: &GridSpec,
    tol: f64,
) -> Result<Output, CliError> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(DomainError::NonPositiveTolerance.into());
    }
    let (_, f) = load_fixture(fixture)?;
    let lattice = pole_lattice(&f.tangent_weights())?;
    let points = grid.points()?;
    let jobs: Vec<(Complex64, Complex64, Flavor)> =
        lambdas.iter().flat_map(|&l| points.iter().map(move |&(t, tau)| (t, tau, l))).collect();
    let rows = jobs
        .into_par_iter()
        .map(|(t, tau, lambda)| -> Result<GridRow, CliError> {
            let (gt, gtau) = match g {
                Generator::S => (t / tau, -tau.inv()),
                Generator::T => (t, tau + 1.0),
            };
            let near = lattice.distance(t, tau) < GRID_POLE_MARGIN || lattice.distance(gt, gtau) < GRID_POLE_MARGIN;
            let values = if near {
                None
            } else {
                let residual = ok_or_pole(modular_image_residual(lambda, &f, t, tau, g, DEFAULT_EPS))?;
                let period = ok_or_pole(periodicity_residual(lambda, &f, t, tau, 2, DEFAULT_EPS))?;
                residual.zip(period).map(|(r, (r1, r2))| (r, r1, r2))
            };
            Ok(GridRow { t, tau, lambda, values })
        })
        .collect::<Result<Vec<_>, _>>()?;

    let anomaly = anomaly_report(&f);
    let mut text = String::new();
    let sums: Vec<String> = anomaly.components.iter().map(|c| c.sum_m2.to_string()).collect();
    let _ = writeln!(
        text,
        "# fixture={} g={} anomaly={} sum_m2={} rigid_condition_met={} uniform_anomaly={}",
        f.name,
        match g {
            Generator::S => "S",
            Generator::T => "T",
        },
        if anomaly.rigid_condition_met { "none" } else { "flagged" },
        sums.join(";"),
        anomaly.rigid_condition_met,
        anomaly.uniform_anomaly
    );
    text.push_str("t,tau,lambda,residual,period_r1,period_r2\n");
    let mut max = 0.0f64;
    let mut skipped = 0;
    let mut failures = 0;
    for row in &rows {
        let (t, tau) = (format_complex(row.t), format_complex(row.tau));
        match row.values {
            None => {
                skipped += 1;
                let _ = writeln!(text, "{t},{tau},{},skipped,,", row.lambda.index());
            }
            Some((r, r1, r2)) => {
                max = max.max(r);
                if r.is_nan() || r >= tol {
                    failures += 1;
                }
                let _ = writeln!(text, "{t},{tau},{},{r:.6e},{r1:.6e},{r2:.6e}", row.lambda.index());
            }
        }
    }
    let pass = failures == 0;
    let _ = writeln!(
        text,
        "# max_residual={max:.6e} tol={} skipped={skipped} verdict={}",
        format_real(tol),
        if pass { "pass" } else { "fail" }
    );
    Ok(Output::verdict(text, pass))
}

#[derive(Serialize)]
struct CoefficientJson {
    k: usize,
    numerator: String,
    denominator: String,
    text: String,
}

#[derive(Serialize)]
struct ExpansionJson {
    fixture: String,
    lambda: u8,
    #[serde(rename = "K")]
    order: usize,
    coefficients: Vec<CoefficientJson>,
}

pub fn cmd_qexpand(fixture: &str, lambda: Flavor, order: usize, format: Format) -> Result<Output, CliError> {
    let (_, f) = load_fixture(fixture)?;
    let series = lefschetz_qexpansion(lambda, &f, order)?;
    let text = match format {
        Format::Json => {
            let doc = ExpansionJson {
                fixture: f.name.clone(),
                lambda: lambda.index(),
                order,
                coefficients: series
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(k, r)| CoefficientJson {
                        k,
                        numerator: r.numerator().to_string(),
                        denominator: r.denominator().to_string(),
                        text: r.to_string(),
                    })
                    .collect(),
            };
            serde_json::to_string_pretty(&doc).expect("expansion serializes") + "\n"
        }
        Format::Text | Format::Csv => {
            let mut out = String::new();
            for (k, r) in series.coeffs().iter().enumerate() {
                let _ = writeln!(out, "k={k}: {r}");
            }
            out
        }
    };
    Ok(Output { text, code: PASS })
}
