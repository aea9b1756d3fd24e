#![allow(dead_code)]

use distsense::gaussian::{omega, GaussianState};
use distsense::WeightVector;
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

pub fn rng(seed: u64) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(seed)
}

pub fn rel_err(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(f64::MIN_POSITIVE)
}

/// Nonzero weights with the given sign pattern, magnitudes in `[0.05, 1]`.
pub fn random_weights(rng: &mut ChaCha20Rng, signs: &[f64]) -> WeightVector {
    let raw = signs.iter().map(|s| s * (0.05 + 0.95 * rng.random::<f64>())).collect();
    WeightVector::new(raw).unwrap()
}

pub fn random_one_sign(rng: &mut ChaCha20Rng, m: usize) -> WeightVector {
    let s = if rng.random::<bool>() { 1.0 } else { -1.0 };
    random_weights(rng, &vec![s; m])
}

/// At least one weight of each sign.
pub fn random_mixed_sign(rng: &mut ChaCha20Rng, m: usize) -> WeightVector {
    assert!(m >= 2);
    let mut signs: Vec<f64> = (0..m).map(|_| if rng.random::<bool>() { 1.0 } else { -1.0 }).collect();
    signs[0] = 1.0;
    signs[m - 1] = -1.0;
    random_weights(rng, &signs)
}

/// Normal-ordered moment `⟨u v⟩` with `G = Γ + iΩ/2` (zero mean).
fn moment(state: &GaussianState, u: usize, v: usize) -> Complex64 {
    let om = omega(state.n_modes());
    Complex64::new(state.gamma()[(u, v)], 0.5 * om[(u, v)])
}

/// `(⟨a_i† a_j⟩, ⟨a_i a_j⟩)` for a zero-mean state, `a = (x + ip)/√2`.
pub fn ladder_moments(state: &GaussianState, i: usize, j: usize) -> (Complex64, Complex64) {
    let (xi, pi, xj, pj) = (2 * i, 2 * i + 1, 2 * j, 2 * j + 1);
    let im = Complex64::i();
    let g = |u, v| moment(state, u, v);
    let adag_a = 0.5 * (g(xi, xj) + im * g(xi, pj) - im * g(pi, xj) + g(pi, pj));
    let a_a = 0.5 * (g(xi, xj) + im * g(xi, pj) + im * g(pi, xj) - g(pi, pj));
    (adag_a, a_a)
}

/// Photon-number covariance from Wick's theorem, independent of the
/// library's own correlation routine. Zero-mean states only.
pub fn wick_photon_covariance(state: &GaussianState, i: usize, j: usize) -> f64 {
    let (adag_a, a_a) = ladder_moments(state, i, j);
    if i == j {
        let n = adag_a.re;
        a_a.norm_sqr() + n * n + n
    } else {
        adag_a.norm_sqr() + a_a.norm_sqr()
    }
}
