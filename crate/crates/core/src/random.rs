//! Random pure Gaussian probes and random PSD matrices for randomized checks.

use std::f64::consts::{FRAC_PI_2, TAU};

use nalgebra::DMatrix;
use rand::Rng;

use crate::error::{invalid, Result};
use crate::gaussian::{beam_splitter, phase_shifts, squeezer, GaussianState};

/// Squeezed (optionally displaced) inputs followed by a random passive network.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbeSampler {
    pub n_modes: usize,
    /// Each input squeezing magnitude is uniform on `[0, max_squeezing]`.
    pub max_squeezing: f64,
    /// Each input amplitude `|α|` is uniform on `[0, max_displacement]`; zero
    /// gives zero-mean probes.
    pub max_displacement: f64,
}

impl ProbeSampler {
    pub fn zero_mean(n_modes: usize, max_squeezing: f64) -> Self {
        Self {
            n_modes,
            max_squeezing,
            max_displacement: 0.0,
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<GaussianState> {
        let m = self.n_modes;
        if m == 0 {
            return Err(invalid("n_modes must be at least 1"));
        }
        if !(self.max_squeezing >= 0.0 && self.max_displacement >= 0.0) {
            return Err(invalid("sampling ranges must be non-negative"));
        }
        let mut state = GaussianState::vacuum(m)?;
        for i in 0..m {
            let r = self.max_squeezing * rng.random::<f64>();
            state = state.apply(&squeezer(r, TAU * rng.random::<f64>(), i, m)?)?;
            if self.max_displacement > 0.0 {
                let a = self.max_displacement * rng.random::<f64>();
                let (s, c) = (TAU * rng.random::<f64>()).sin_cos();
                state = state.displace(i, a * c, a * s)?;
            }
        }
        // Alternating layers of pairwise mixing and local phases.
        for _ in 0..m {
            for i in 0..m {
                for j in i + 1..m {
                    state = state.apply(&beam_splitter(FRAC_PI_2 * rng.random::<f64>(), i, j, m)?)?;
                }
            }
            let phases: Vec<f64> = (0..m).map(|_| TAU * rng.random::<f64>()).collect();
            state = state.apply(&phase_shifts(&phases)?)?;
        }
        Ok(state)
    }
}

/// `A Aᵀ` with `A` a `dim × rank` matrix of standard normals.
pub fn random_psd_matrix<R: Rng + ?Sized>(rng: &mut R, dim: usize, rank: usize) -> DMatrix<f64> {
    let a = DMatrix::from_fn(dim, rank, |_, _| rng.sample::<f64, _>(rand_distr::StandardNormal));
    &a * a.transpose()
}
