//! Scenario files and the report-producing commands behind the binary.

use std::fmt::Write as _;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bounds::{heisenberg_envelope, product_squeezed_bound, proposed_bound, sql_bound};
use crate::error::{Error, Result};
use crate::estimation::{simulate, SimulationReport};
use crate::nongaussian::{fock_bound, fock_photon_correlation, fock_qfim, ghz_state, GhzKind};
use crate::optimizer::{sweep_ratio, SweepRow, TwoModeOptions};
use crate::schemes::{evaluate_scheme, CustomTwoModeParams, SchemeKind, SchemeSpec};
use crate::weights::WeightVector;

/// Environment variable capping worker threads.
pub const THREADS_ENV: &str = "DISTSENSE_THREADS";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub weights: Vec<f64>,
    pub n_total: f64,
    #[serde(default = "default_scheme")]
    pub scheme_kind: String,
    /// Parameters for `custom-two-mode`.
    #[serde(default)]
    pub custom: Option<CustomConfig>,
    /// True phases; zero when absent.
    #[serde(default)]
    pub phases: Option<Vec<f64>>,
    #[serde(default)]
    pub sweep: Option<SweepConfig>,
    #[serde(default)]
    pub simulate: Option<SimulateConfig>,
    #[serde(default)]
    pub output: Option<OutputConfig>,
}

fn default_scheme() -> String {
    "two-group".into()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CustomConfig {
    pub r1: f64,
    #[serde(default)]
    pub varphi1: f64,
    pub r2: f64,
    #[serde(default)]
    pub varphi2: f64,
    /// `[re, im]`.
    #[serde(default)]
    pub alpha1: [f64; 2],
    #[serde(default)]
    pub alpha2: [f64; 2],
    #[serde(default)]
    pub theta: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub ratios: Vec<f64>,
    #[serde(default = "default_restarts")]
    pub restarts: usize,
}

fn default_restarts() -> usize {
    16
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimulateConfig {
    pub nu: usize,
    pub batches: usize,
    #[serde(default)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    #[serde(default)]
    pub path: Option<String>,
    pub format: OutputFormat,
}

fn config_err(field: &str, e: impl std::fmt::Display) -> Error {
    Error::Config(format!("{field}: {e}"))
}

impl ScenarioConfig {
    /// Parses JSON; syntax and type errors carry line and column.
    pub fn from_json_str(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| {
            Error::Config(format!("line {}, column {}: {e}", e.line(), e.column()))
        })
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json_str(&text)
    }

    pub fn weight_vector(&self) -> Result<WeightVector> {
        WeightVector::new(self.weights.clone()).map_err(|e| config_err("weights", e))
    }

    pub fn scheme_kind(&self) -> Result<SchemeKind> {
        let kind = match self.scheme_kind.as_str() {
            "coherent-product" => SchemeKind::CoherentProduct,
            "product-squeezed" => SchemeKind::ProductSqueezed,
            "two-group" => SchemeKind::TwoGroup,
            "naive-global" => SchemeKind::NaiveGlobal,
            "custom-two-mode" => {
                let c = self
                    .custom
                    .as_ref()
                    .ok_or_else(|| config_err("custom", "required for custom-two-mode"))?;
                SchemeKind::CustomTwoMode(CustomTwoModeParams {
                    r1: c.r1,
                    varphi1: c.varphi1,
                    r2: c.r2,
                    varphi2: c.varphi2,
                    alpha1: Complex64::new(c.alpha1[0], c.alpha1[1]),
                    alpha2: Complex64::new(c.alpha2[0], c.alpha2[1]),
                    theta: c.theta,
                })
            }
            other => return Err(config_err("scheme_kind", format!("unknown scheme {other:?}"))),
        };
        Ok(kind)
    }

    pub fn scheme(&self) -> Result<SchemeSpec> {
        SchemeSpec::new(self.scheme_kind()?, self.weight_vector()?, self.n_total)
            .map_err(|e| match e {
                Error::InvalidArgument(m) => config_err("scheme", m),
                other => other,
            })
    }

    pub fn true_phases(&self) -> Result<Vec<f64>> {
        let m = self.weights.len();
        match &self.phases {
            None => Ok(vec![0.0; m]),
            Some(p) if p.len() == m => Ok(p.clone()),
            Some(p) => Err(config_err("phases", format!("expected {m} values, got {}", p.len()))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundRow {
    pub name: String,
    pub value: f64,
    pub formula_ref: String,
}

/// Closed-form bounds for the weights, then the configured scheme's QCRB and
/// homodyne CCRB.
pub fn cmd_bounds(cfg: &ScenarioConfig) -> Result<Vec<BoundRow>> {
    let w = cfg.weight_vector()?;
    let n = cfg.n_total;
    if !(n.is_finite() && n > 0.0) {
        return Err(config_err("n_total", "must be positive"));
    }
    let row = |name: &str, value: f64, formula: &str| BoundRow {
        name: name.into(),
        value,
        formula_ref: formula.into(),
    };
    let mut rows = vec![
        row("sql", sql_bound(&w, n), "1/(4N)"),
        row(
            "product_squeezed",
            product_squeezed_bound(&w, n)?,
            "sum_i w_i^2/(8N_i(N_i+1)), optimal N_i",
        ),
        row(
            "proposed",
            proposed_bound(&w, n)?,
            "sum_g |w_g|_1^2/(8N_g(N_g+1)), optimal N_g",
        ),
        row(
            "heisenberg_envelope",
            heisenberg_envelope(&w, n),
            "(|w+|^(2/3)+|w-|^(2/3))^3/(8N^2)",
        ),
    ];
    let spec = cfg.scheme()?;
    let phases = cfg.true_phases()?;
    let report = evaluate_scheme(&spec, Some(&phases), &w)?;
    rows.push(row(
        &format!("{}_qcrb", spec.kind().name()),
        report.qcrb,
        "w^T H^+ w",
    ));
    if let Some(ccrb) = report.homodyne_ccrb {
        rows.push(row(
            &format!("{}_homodyne_ccrb", spec.kind().name()),
            ccrb,
            "w^T F^+ w, optimal homodyne angles",
        ));
    }
    Ok(rows)
}

fn fmt_num(v: f64) -> String {
    format!("{v:.11e}")
}

pub fn bounds_csv(rows: &[BoundRow]) -> String {
    let mut out = String::from("name,value,formula_ref\n");
    for r in rows {
        let _ = writeln!(out, "{},{},\"{}\"", r.name, fmt_num(r.value), r.formula_ref);
    }
    out
}

/// Two-mode ratio sweep for the configured weights.
pub fn cmd_sweep(cfg: &ScenarioConfig) -> Result<Vec<SweepRow>> {
    let w = cfg.weight_vector()?;
    if w.len() != 2 {
        return Err(config_err("weights", "ratio sweep needs exactly two modes"));
    }
    let sweep = cfg
        .sweep
        .as_ref()
        .ok_or_else(|| config_err("sweep", "missing sweep block"))?;
    let opts = TwoModeOptions {
        restarts: sweep.restarts,
        ..Default::default()
    };
    sweep_ratio(&w, cfg.n_total, &sweep.ratios, &opts).map_err(|e| match e {
        Error::InvalidArgument(m) => config_err("sweep", m),
        other => other,
    })
}

pub const SWEEP_HEADER: &str = "ratio,qcrb,theta_opt,r1,r2,a1,a2,converged";

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(SWEEP_HEADER);
    out.push('\n');
    for row in rows {
        let cols: Vec<String> = match &row.optimum {
            Some(o) => {
                let p = &o.params;
                [o.qcrb, p.theta, p.r1, p.r2, p.a1_mag, p.a2_mag]
                    .iter()
                    .map(|&v| fmt_num(v))
                    .collect()
            }
            None => vec!["NaN".into(); 6],
        };
        let _ = writeln!(
            out,
            "{},{},{}",
            fmt_num(row.ratio),
            cols.join(","),
            row.converged()
        );
    }
    out
}

/// Monte Carlo estimation run for the configured zero-mean scheme.
pub fn cmd_simulate(cfg: &ScenarioConfig) -> Result<SimulationReport> {
    let sim = cfg
        .simulate
        .as_ref()
        .ok_or_else(|| config_err("simulate", "missing simulate block"))?;
    let spec = cfg.scheme()?;
    if !spec.is_zero_mean() {
        return Err(config_err(
            "scheme_kind",
            format!("{} carries displacement; simulation needs a zero-mean scheme", spec.kind().name()),
        ));
    }
    let phases = cfg.true_phases()?;
    simulate(&spec, &phases, sim.nu, sim.batches, sim.seed).map_err(|e| match e {
        Error::InvalidArgument(m) => config_err("simulate", m),
        other => other,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NoonRow {
    pub n: usize,
    pub kind: String,
    pub correlation: f64,
    pub h11: f64,
    pub h12: f64,
    /// Bound on `(φ₁ ∓ φ₂)/2`, the combination each state is built for.
    pub bound: f64,
}

/// Correlations, QFIM entries and bounds of NOON and NNOO states, `1..=n_max` photons.
pub fn noon_table(n_max: usize) -> Result<Vec<NoonRow>> {
    if n_max == 0 {
        return Err(config_err("n", "must be at least 1"));
    }
    let minus = WeightVector::new(vec![0.5, -0.5])?;
    let plus = WeightVector::new(vec![0.5, 0.5])?;
    let mut rows = Vec::with_capacity(2 * n_max);
    for n in 1..=n_max {
        for (kind, name, w) in [(GhzKind::Noon, "noon", &minus), (GhzKind::Nnoo, "nnoo", &plus)] {
            let state = ghz_state(kind, n)?;
            let h = fock_qfim(&state)?;
            rows.push(NoonRow {
                n,
                kind: name.into(),
                correlation: fock_photon_correlation(&state),
                h11: h.matrix()[(0, 0)],
                h12: h.matrix()[(0, 1)],
                bound: fock_bound(&state, w)?,
            });
        }
    }
    Ok(rows)
}

pub fn noon_csv(rows: &[NoonRow]) -> String {
    let mut out = String::from("n,kind,correlation,h11,h12,bound\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            r.n,
            r.kind,
            fmt_num(r.correlation),
            fmt_num(r.h11),
            fmt_num(r.h12),
            fmt_num(r.bound)
        );
    }
    out
}

/// Worker count from [`THREADS_ENV`], or `None` to use every core.
pub fn thread_limit() -> Result<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(config_err(THREADS_ENV, format!("expected a positive integer, got {v:?}"))),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(text: &str) -> ScenarioConfig {
        ScenarioConfig::from_json_str(text).unwrap()
    }

    #[test]
    fn bounds_rows() {
        let rows = cmd_bounds(&cfg(r#"{"weights": [0.5, -0.5], "n_total": 10}"#)).unwrap();
        let get = |n: &str| rows.iter().find(|r| r.name == n).unwrap().value;
        assert!((get("sql") - 0.025).abs() < 1e-15);
        assert!((get("product_squeezed") - 1.0 / 480.0).abs() < 1e-15);
        assert!((get("proposed") - 1.0 / 480.0).abs() < 1e-15);
        assert!((get("heisenberg_envelope") - 0.0025).abs() < 1e-15);
        assert!((get("two-group_qcrb") - 1.0 / 480.0).abs() < 1e-12);

        let rows = cmd_bounds(&cfg(r#"{"weights": [1], "n_total": 1}"#)).unwrap();
        assert!((rows[0].value - 0.25).abs() < 1e-15);
        assert!((rows[1].value - 0.0625).abs() < 1e-13);
    }

    #[test]
    fn config_errors_exit_2() {
        let e = cmd_bounds(&cfg(r#"{"weights": [0], "n_total": 1}"#)).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        assert!(e.to_string().contains("weights"));

        let e = ScenarioConfig::from_json_str("{\n  \"weights\": [1,\n  \"n_total\": 1}").unwrap_err();
        assert_eq!(e.exit_code(), 2);
        assert!(e.to_string().contains("line 3"), "{e}");

        let e = ScenarioConfig::from_json_str(r#"{"weights": [1], "n_total": 1, "extra": 2}"#)
            .unwrap_err();
        assert!(e.to_string().contains("extra"));

        let c = cfg(r#"{"weights": [1, 2, -1], "n_total": 1, "sweep": {"ratios": [1.0]}}"#);
        assert_eq!(cmd_sweep(&c).unwrap_err().exit_code(), 2);

        let c = cfg(r#"{"weights": [1, -1], "n_total": 1, "scheme_kind": "coherent-product",
                        "simulate": {"nu": 10, "batches": 4}}"#);
        assert_eq!(cmd_simulate(&c).unwrap_err().exit_code(), 2);

        let c = cfg(r#"{"weights": [1, -1], "n_total": 1, "scheme_kind": "bogus"}"#);
        assert_eq!(cmd_bounds(&c).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn csv_number_format() {
        assert_eq!(fmt_num(0.025), "2.50000000000e-2");
        assert_eq!(fmt_num(1.0 / 3.0), "3.33333333333e-1");
    }

    #[test]
    fn noon_rows() {
        let rows = noon_table(2).unwrap();
        assert_eq!(rows.len(), 4);
        assert!((rows[2].correlation + 1.0).abs() < 1e-14);
        assert!((rows[3].correlation - 1.0).abs() < 1e-14);
    }
}
