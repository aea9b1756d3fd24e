use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;

use super::nelder_mead::{nelder_mead, NelderMeadOptions, NelderMeadResult};
use crate::error::{invalid, Error, Result};
use crate::fisher::qfim_pure;
use crate::schemes::CustomTwoModeParams;
use crate::weights::WeightVector;

/// Seed for the restart jitter.
pub const RESTART_SEED: u64 = 0x5EED;
/// Restarts agreeing with the best value within this relative gap count as agreeing.
pub const AGREEMENT_TOL: f64 = 1e-5;
/// An identity beam splitter replaces the optimum when it is this close in value.
const IDENTITY_TIE_TOL: f64 = 1e-10;

/// A point of the two-mode family: squeezed displaced inputs on a beam splitter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoModeParams {
    pub r1: f64,
    pub r2: f64,
    pub varphi1: f64,
    pub varphi2: f64,
    pub a1_mag: f64,
    pub a1_arg: f64,
    pub a2_mag: f64,
    pub a2_arg: f64,
    pub theta: f64,
}

impl TwoModeParams {
    pub fn squeezing_photons(&self) -> f64 {
        self.r1.sinh().powi(2) + self.r2.sinh().powi(2)
    }

    pub fn displacement_photons(&self) -> f64 {
        self.a1_mag.powi(2) + self.a2_mag.powi(2)
    }

    pub fn to_custom(&self) -> CustomTwoModeParams {
        CustomTwoModeParams {
            r1: self.r1,
            varphi1: self.varphi1,
            r2: self.r2,
            varphi2: self.varphi2,
            alpha1: Complex64::from_polar(self.a1_mag, self.a1_arg),
            alpha2: Complex64::from_polar(self.a2_mag, self.a2_arg),
            theta: self.theta,
        }
    }

    /// QCRB on `wᵀφ` of the probe these parameters prepare.
    pub fn qcrb(&self, w: &WeightVector) -> Result<f64> {
        let probe = self.to_custom().build_probe()?;
        qfim_pure(&probe)?.bound_for(w.as_slice())
    }

    /// The same probe written with `θ` in `(−π/4, π/4]`.
    ///
    /// `B(θ)` on inputs `(A, B)` equals `B(θ − π/2)` on `(B, −A)`, where `−A`
    /// is `A` with its displacement negated.
    pub fn canonical(&self) -> Self {
        let mut p = *self;
        p.theta = p.theta.rem_euclid(TAU);
        while p.theta > FRAC_PI_4 {
            p = Self {
                r1: p.r2,
                varphi1: p.varphi2,
                a1_mag: p.a2_mag,
                a1_arg: p.a2_arg,
                r2: p.r1,
                varphi2: p.varphi1,
                a2_mag: p.a1_mag,
                a2_arg: (p.a1_arg + PI).rem_euclid(TAU),
                theta: p.theta - FRAC_PI_2,
            };
        }
        p
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TwoModeOptimum {
    /// Best parameters, with `θ` in `(−π/4, π/4]`.
    pub params: TwoModeParams,
    pub qcrb: f64,
    /// Whether the restart that produced the best value met the simplex tolerance.
    pub converged: bool,
    /// Final value of every restart, in restart order.
    pub restart_values: Vec<f64>,
    /// Restarts within [`AGREEMENT_TOL`] of the best value.
    pub agreeing_restarts: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoModeOptions {
    pub restarts: usize,
    /// Random kicks per restart after the first simplex run.
    pub kicks: usize,
    pub seed: u64,
    pub simplex: NelderMeadOptions,
}

impl Default for TwoModeOptions {
    fn default() -> Self {
        Self {
            restarts: 16,
            kicks: 8,
            seed: RESTART_SEED,
            simplex: NelderMeadOptions::default(),
        }
    }
}

/// Which coordinates are free at a given squeezing ratio.
///
/// With no displacement the displacement split and phases are void, and with
/// no squeezing the beam splitter only relabels coherent amplitudes, so those
/// coordinates are dropped. The first squeezing phase is pinned to zero: a
/// common rotation of both inputs leaves the QFIM unchanged.
#[derive(Debug, Clone, Copy)]
enum Layout {
    SqueezeOnly,
    DisplaceOnly,
    Mixed,
}

struct Family {
    layout: Layout,
    n_s: f64,
    n_d: f64,
}

impl Family {
    fn new(n_total: f64, ratio: f64) -> Self {
        let layout = if ratio >= 1.0 {
            Layout::SqueezeOnly
        } else if ratio <= 0.0 {
            Layout::DisplaceOnly
        } else {
            Layout::Mixed
        };
        Self {
            layout,
            n_s: ratio * n_total,
            n_d: (1.0 - ratio) * n_total,
        }
    }

    fn dim(&self) -> usize {
        match self.layout {
            Layout::SqueezeOnly => 3,
            Layout::DisplaceOnly => 1,
            Layout::Mixed => 6,
        }
    }

    /// Sampling box for each coordinate.
    fn ranges(&self) -> Vec<(f64, f64)> {
        let split = (0.0, FRAC_PI_2);
        let angle = (0.0, TAU);
        let bs = (0.0, PI);
        match self.layout {
            Layout::SqueezeOnly => vec![split, angle, bs],
            Layout::DisplaceOnly => vec![split],
            Layout::Mixed => vec![split, split, angle, angle, angle, bs],
        }
    }

    fn params(&self, x: &[f64]) -> TwoModeParams {
        let sq = |u: f64| {
            let (s, c) = u.sin_cos();
            ((self.n_s * s * s).sqrt().asinh(), (self.n_s * c * c).sqrt().asinh())
        };
        let mag = |v: f64| {
            let (s, c) = v.sin_cos();
            ((self.n_d * s * s).sqrt(), (self.n_d * c * c).sqrt())
        };
        let zero = TwoModeParams {
            r1: 0.0,
            r2: 0.0,
            varphi1: 0.0,
            varphi2: 0.0,
            a1_mag: 0.0,
            a1_arg: 0.0,
            a2_mag: 0.0,
            a2_arg: 0.0,
            theta: 0.0,
        };
        match self.layout {
            Layout::SqueezeOnly => {
                let (r1, r2) = sq(x[0]);
                TwoModeParams {
                    r1,
                    r2,
                    varphi2: x[1],
                    theta: x[2],
                    ..zero
                }
            }
            Layout::DisplaceOnly => {
                let (a1_mag, a2_mag) = mag(x[0]);
                TwoModeParams {
                    a1_mag,
                    a2_mag,
                    ..zero
                }
            }
            Layout::Mixed => {
                let (r1, r2) = sq(x[0]);
                let (a1_mag, a2_mag) = mag(x[1]);
                TwoModeParams {
                    r1,
                    r2,
                    varphi1: 0.0,
                    varphi2: x[2],
                    a1_mag,
                    a1_arg: x[3],
                    a2_mag,
                    a2_arg: x[4],
                    theta: x[5],
                }
            }
        }
    }
}

/// Radical inverse of `index` in `base`, the Halton coordinate.
fn halton(mut index: u64, base: u64) -> f64 {
    let (mut value, mut scale) = (0.0, 1.0 / base as f64);
    while index > 0 {
        value += (index % base) as f64 * scale;
        index /= base;
        scale /= base as f64;
    }
    value
}

const HALTON_BASES: [u64; 6] = [2, 3, 5, 7, 11, 13];

/// Nelder–Mead rerun from its own result with a fresh simplex until a rerun
/// stops improving. A single simplex often collapses early on this landscape.
fn polished_simplex(
    f: &dyn Fn(&[f64]) -> f64,
    x0: &[f64],
    steps: &[f64],
    opts: &NelderMeadOptions,
) -> NelderMeadResult {
    let mut run = nelder_mead(f, x0, steps, opts);
    for _ in 0..MAX_POLISH {
        let next = nelder_mead(f, &run.x, steps, opts);
        let improved = next.f < run.f - 1e-13 * run.f.abs();
        if next.f <= run.f {
            run = next;
        }
        if !improved {
            break;
        }
    }
    run
}

const MAX_POLISH: usize = 8;
/// Kick size as a fraction of each coordinate's sampling box.
const KICK_FRACTION: f64 = 0.25;

/// One restart: a polished simplex run followed by random kicks, each
/// accepted only if the simplex from the kicked point ends lower.
fn hopping_restart(
    f: &dyn Fn(&[f64]) -> f64,
    x0: &[f64],
    ranges: &[(f64, f64)],
    opts: &TwoModeOptions,
    stream: u64,
) -> NelderMeadResult {
    let steps: Vec<f64> = ranges.iter().map(|(lo, hi)| 0.1 * (hi - lo)).collect();
    let mut rng = ChaCha20Rng::seed_from_u64(opts.seed);
    rng.set_stream(stream);
    let mut best = polished_simplex(f, x0, &steps, &opts.simplex);
    for _ in 0..opts.kicks {
        let kicked: Vec<f64> = best
            .x
            .iter()
            .zip(ranges)
            .map(|(x, (lo, hi))| x + KICK_FRACTION * (hi - lo) * rng.random_range(-1.0..1.0))
            .collect();
        let run = polished_simplex(f, &kicked, &steps, &opts.simplex);
        if run.f < best.f {
            best = run;
        }
    }
    best
}

fn check_inputs(w: &WeightVector, n_total: f64, ratio: f64) -> Result<()> {
    if w.len() != 2 {
        return Err(invalid(format!("two-mode optimization needs 2 weights, got {}", w.len())));
    }
    if !(n_total.is_finite() && n_total > 0.0) {
        return Err(invalid(format!("n_total must be positive, got {n_total}")));
    }
    if !(0.0..=1.0).contains(&ratio) {
        return Err(invalid(format!("squeeze ratio {ratio} outside [0, 1]")));
    }
    Ok(())
}

/// Minimizes the QCRB on `wᵀφ` over the two-mode family with a fraction
/// `ratio` of `n_total` spent on squeezing and the rest on displacement.
pub fn minimize_two_mode(w: &WeightVector, n_total: f64, ratio: f64) -> Result<TwoModeOptimum> {
    minimize_two_mode_with(w, n_total, ratio, &TwoModeOptions::default())
}

pub fn minimize_two_mode_with(
    w: &WeightVector,
    n_total: f64,
    ratio: f64,
    opts: &TwoModeOptions,
) -> Result<TwoModeOptimum> {
    check_inputs(w, n_total, ratio)?;
    if opts.restarts == 0 {
        return Err(invalid("need at least one restart"));
    }
    let family = Family::new(n_total, ratio);
    let ranges = family.ranges();
    let dim = family.dim();

    let mut rng = ChaCha20Rng::seed_from_u64(opts.seed);
    let starts: Vec<Vec<f64>> = (1..=opts.restarts as u64)
        .map(|k| {
            ranges
                .iter()
                .zip(HALTON_BASES)
                .map(|(&(lo, hi), base)| {
                    let jitter: f64 = rng.random_range(-0.02..0.02);
                    lo + (hi - lo) * (halton(k, base) + jitter)
                })
                .collect()
        })
        .collect();
    let objective = |x: &[f64]| family.params(x).qcrb(w).unwrap_or(f64::INFINITY);
    let runs: Vec<_> = starts
        .par_iter()
        .enumerate()
        .map(|(k, x0)| hopping_restart(&objective, x0, &ranges, opts, k as u64 + 1))
        .collect();

    let best = runs
        .iter()
        .min_by(|a, b| a.f.total_cmp(&b.f))
        .expect("at least one restart");
    let restart_values: Vec<f64> = runs.iter().map(|r| r.f).collect();
    let agreeing_restarts = restart_values
        .iter()
        .filter(|&&f| (f - best.f).abs() <= AGREEMENT_TOL * best.f.abs())
        .count();
    debug_assert_eq!(best.x.len(), dim);
    // θ is flat when the beam splitter maps the inputs onto themselves.
    let mut params = family.params(&best.x).canonical();
    let mut qcrb = best.f;
    let untouched = TwoModeParams { theta: 0.0, ..params };
    if let Ok(v) = untouched.qcrb(w) {
        if v <= qcrb * (1.0 + IDENTITY_TIE_TOL) {
            params = untouched;
            qcrb = v;
        }
    }
    let optimum = TwoModeOptimum {
        params,
        qcrb,
        converged: best.converged,
        restart_values,
        agreeing_restarts,
    };
    if !best.f.is_finite() || runs.iter().all(|r| !r.converged) {
        return Err(Error::NotConverged {
            best: Box::new(optimum),
        });
    }
    Ok(optimum)
}

/// One grid point of a ratio sweep. Failed points carry the best value found
/// and the failure message rather than aborting the sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub ratio: f64,
    pub optimum: Option<TwoModeOptimum>,
    pub error: Option<String>,
}

impl SweepRow {
    pub fn converged(&self) -> bool {
        self.error.is_none() && self.optimum.is_some()
    }

    pub fn qcrb(&self) -> f64 {
        self.optimum.as_ref().map_or(f64::NAN, |o| o.qcrb)
    }
}

/// Runs [`minimize_two_mode_with`] at every ratio of a sorted grid.
pub fn sweep_ratio(
    w: &WeightVector,
    n_total: f64,
    grid: &[f64],
    opts: &TwoModeOptions,
) -> Result<Vec<SweepRow>> {
    if grid.is_empty() {
        return Err(invalid("ratio grid is empty"));
    }
    for &r in grid {
        check_inputs(w, n_total, r)?;
    }
    if grid.windows(2).any(|p| p[1] < p[0]) {
        return Err(invalid("ratio grid must be sorted"));
    }
    Ok(grid
        .par_iter()
        .map(|&ratio| match minimize_two_mode_with(w, n_total, ratio, opts) {
            Ok(o) => SweepRow {
                ratio,
                optimum: Some(o),
                error: None,
            },
            Err(Error::NotConverged { best }) => SweepRow {
                ratio,
                optimum: Some(*best),
                error: Some("no restart converged".into()),
            },
            Err(e) => SweepRow {
                ratio,
                optimum: None,
                error: Some(e.to_string()),
            },
        })
        .collect())
}
