//! Monte Carlo homodyne records and local maximum-likelihood phase estimates.

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, numerical, unsupported, Result};
use crate::fisher::{homodyne_cfim_for_state, homodyne_covariance};
use crate::gaussian::GaussianState;
use crate::optimizer::{nelder_mead, NelderMeadOptions};
use crate::schemes::{homodyne_angles, SchemeSpec};
use crate::weights::WeightVector;

/// Name of the generator behind every sample, recorded with each batch.
pub const RNG_ALGORITHM: &str = "ChaCha20";

/// `ν` homodyne shots, one quadrature value per mode per shot.
#[derive(Debug, Clone)]
pub struct SampleBatch {
    /// `ν × M`.
    pub outcomes: DMatrix<f64>,
    pub seed: u64,
    /// ChaCha stream within `seed`; batches of one simulation differ only here.
    pub stream: u64,
    pub scheme: SchemeSpec,
    pub true_phases: Vec<f64>,
    /// Homodyne angles the record was taken at.
    pub angles: Vec<f64>,
}

impl SampleBatch {
    pub fn nu(&self) -> usize {
        self.outcomes.nrows()
    }

    /// `(1/ν) Σ xxᵀ`, the covariance estimate under the known zero mean.
    pub fn second_moment(&self) -> DMatrix<f64> {
        self.outcomes.transpose() * &self.outcomes / self.nu() as f64
    }

    /// Modes whose sample mean sits more than five standard errors from zero.
    pub fn mean_outliers(&self) -> Vec<usize> {
        let nu = self.nu() as f64;
        let s = self.second_moment();
        (0..self.outcomes.ncols())
            .filter(|&j| {
                let mean = self.outcomes.column(j).mean();
                mean.abs() > 5.0 * (s[(j, j)] / nu).sqrt()
            })
            .collect()
    }
}

/// Draws `ν` records at the scheme's optimal homodyne angles for the true phases.
pub fn sample_homodyne(
    scheme: &SchemeSpec,
    true_phases: &[f64],
    nu: usize,
    seed: u64,
) -> Result<SampleBatch> {
    sample_homodyne_stream(scheme, true_phases, nu, seed, 0)
}

/// [`sample_homodyne`] on an explicit ChaCha stream.
pub fn sample_homodyne_stream(
    scheme: &SchemeSpec,
    true_phases: &[f64],
    nu: usize,
    seed: u64,
    stream: u64,
) -> Result<SampleBatch> {
    let angles = homodyne_angles(scheme, true_phases)?;
    let probe = zero_mean_probe(scheme)?;
    sample_at(scheme, &probe, true_phases, &angles, nu, seed, stream)
}

fn zero_mean_probe(scheme: &SchemeSpec) -> Result<GaussianState> {
    if !scheme.is_zero_mean() {
        return Err(unsupported(format!(
            "{} probes carry displacement; homodyne sampling needs zero mean",
            scheme.kind().name()
        )));
    }
    scheme.build_probe()
}

fn sample_at(
    scheme: &SchemeSpec,
    probe: &GaussianState,
    true_phases: &[f64],
    angles: &[f64],
    nu: usize,
    seed: u64,
    stream: u64,
) -> Result<SampleBatch> {
    if nu == 0 {
        return Err(invalid("need at least one shot"));
    }
    let (cov, _) = homodyne_covariance(probe, true_phases, angles)?;
    let l = cov
        .cholesky()
        .ok_or_else(|| numerical("homodyne covariance is not positive definite"))?
        .l();
    let m = l.nrows();
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let z = DMatrix::from_fn(m, nu, |_, _| rng.sample::<f64, _>(StandardNormal));
    Ok(SampleBatch {
        outcomes: (l * z).transpose(),
        seed,
        stream,
        scheme: scheme.clone(),
        true_phases: true_phases.to_vec(),
        angles: angles.to_vec(),
    })
}

/// Per-shot negative log-likelihood of a zero-mean normal model, up to a
/// constant: `½ [ln det Σ + Tr(Σ⁻¹ S)]`.
fn negative_log_likelihood(cov: &DMatrix<f64>, second_moment: &DMatrix<f64>) -> f64 {
    match cov.clone().cholesky() {
        Some(chol) => {
            let log_det: f64 = 2.0 * chol.l().diagonal().iter().map(|d| d.ln()).sum::<f64>();
            0.5 * (log_det + chol.solve(second_moment).trace())
        }
        None => f64::INFINITY,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PhaseEstimate {
    pub phi_star_hat: f64,
    pub phases_hat: Vec<f64>,
}

/// Maximizes the homodyne likelihood of a second-moment matrix over all phases,
/// starting from `init`.
pub fn mle_phases(
    probe: &GaussianState,
    angles: &[f64],
    second_moment: &DMatrix<f64>,
    w: &WeightVector,
    init: &[f64],
) -> Result<PhaseEstimate> {
    let m = probe.n_modes();
    if init.len() != m || w.len() != m || angles.len() != m {
        return Err(invalid(format!("expected {m} initial phases, weights and angles")));
    }
    if second_moment.shape() != (m, m) {
        return Err(invalid("second-moment matrix has the wrong shape"));
    }
    let objective = |phi: &[f64]| match homodyne_covariance(probe, phi, angles) {
        Ok((cov, _)) => negative_log_likelihood(&cov, second_moment),
        Err(_) => f64::INFINITY,
    };
    let opts = NelderMeadOptions {
        x_tol: 1e-10,
        f_tol: 0.0,
        ..Default::default()
    };
    let run = nelder_mead(objective, init, &vec![1e-3; m], &opts);
    if !run.converged {
        return Err(numerical(format!(
            "likelihood maximization stopped after {} iterations (simplex width {:.3e})",
            run.iterations, run.diameter
        )));
    }
    let phi_star_hat = w.as_slice().iter().zip(&run.x).map(|(a, b)| a * b).sum();
    Ok(PhaseEstimate {
        phi_star_hat,
        phases_hat: run.x,
    })
}

/// Local MLE of `wᵀφ` from one batch.
pub fn mle_phi_star(batch: &SampleBatch, w: &WeightVector, init: &[f64]) -> Result<PhaseEstimate> {
    let probe = zero_mean_probe(&batch.scheme)?;
    mle_phases(&probe, &batch.angles, &batch.second_moment(), w, init)
}

/// Negative Hessian of the per-shot log-likelihood at `phases`, by central
/// differences with step `h`.
pub fn observed_information(batch: &SampleBatch, phases: &[f64], h: f64) -> Result<DMatrix<f64>> {
    let probe = zero_mean_probe(&batch.scheme)?;
    let s = batch.second_moment();
    let m = probe.n_modes();
    if phases.len() != m {
        return Err(invalid(format!("need {m} phases")));
    }
    let f = |phi: &[f64]| -> Result<f64> {
        let (cov, _) = homodyne_covariance(&probe, phi, &batch.angles)?;
        Ok(negative_log_likelihood(&cov, &s))
    };
    let shifted = |i: usize, di: f64, j: usize, dj: f64| -> Result<f64> {
        let mut p = phases.to_vec();
        p[i] += di;
        p[j] += dj;
        f(&p)
    };
    let mut hess = DMatrix::zeros(m, m);
    for i in 0..m {
        for j in i..m {
            let v = (shifted(i, h, j, h)? - shifted(i, h, j, -h)? - shifted(i, -h, j, h)?
                + shifted(i, -h, j, -h)?)
                / (4.0 * h * h);
            hess[(i, j)] = v;
            hess[(j, i)] = v;
        }
    }
    Ok(hess)
}

/// Summary of repeated estimation, comparable across runs with one seed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimulationReport {
    /// `Var(φ̂*) · ν / crb` over batches.
    pub var_ratio_to_crb: f64,
    /// `mean(φ̂*) − φ*`.
    pub bias: f64,
    pub nu: usize,
    pub batches: usize,
    pub seed: u64,
    /// Homodyne Cramér–Rao bound per shot at the sampled angles.
    pub crb: f64,
}

/// Repeats sampling and local estimation over `batches` independent streams.
pub fn simulate(
    scheme: &SchemeSpec,
    true_phases: &[f64],
    nu: usize,
    batches: usize,
    seed: u64,
) -> Result<SimulationReport> {
    if batches < 2 {
        return Err(invalid("need at least two batches for a variance"));
    }
    let probe = zero_mean_probe(scheme)?;
    let angles = homodyne_angles(scheme, true_phases)?;
    let w = scheme.weights();
    let crb = homodyne_cfim_for_state(&probe, true_phases, &angles)?.bound_for(w.as_slice())?;
    let truth: f64 = w.as_slice().iter().zip(true_phases).map(|(a, b)| a * b).sum();

    let estimates: Vec<f64> = (0..batches as u64)
        .into_par_iter()
        .map(|b| -> Result<f64> {
            let batch = sample_at(scheme, &probe, true_phases, &angles, nu, seed, b)?;
            let s = batch.second_moment();
            Ok(mle_phases(&probe, &angles, &s, w, true_phases)?.phi_star_hat)
        })
        .collect::<Result<_>>()?;

    let n = estimates.len() as f64;
    let mean = estimates.iter().sum::<f64>() / n;
    let var = estimates.iter().map(|e| (e - mean).powi(2)).sum::<f64>() / (n - 1.0);
    Ok(SimulationReport {
        var_ratio_to_crb: var * nu as f64 / crb,
        bias: mean - truth,
        nu,
        batches,
        seed,
        crb,
    })
}

/// Column covariance of a batch about its sample mean.
pub fn sample_covariance(batch: &SampleBatch) -> DMatrix<f64> {
    let nu = batch.nu() as f64;
    let means = DVector::from_fn(batch.outcomes.ncols(), |j, _| batch.outcomes.column(j).mean());
    let centered = DMatrix::from_fn(batch.outcomes.nrows(), batch.outcomes.ncols(), |i, j| {
        batch.outcomes[(i, j)] - means[j]
    });
    centered.transpose() * centered / (nu - 1.0).max(1.0)
}
