use super::symplectic::{beam_splitter, SymplecticMatrix};
use crate::error::{invalid, Result};
use crate::weights::MIN_WEIGHT;

/// Splitting angles `θ₁ … θ_{M−1}` of the cascade that routes a single input
/// mode onto `M` modes with intensities `|wᵢ| / ‖w‖₁`.
///
/// `cos²θⱼ = |wⱼ| / (‖w‖₁ ∏_{k<j} sin²θₖ)` with `θ₀ = π/2`.
pub fn bsn_angles(weights: &[f64]) -> Result<Vec<f64>> {
    if weights.is_empty() {
        return Err(invalid("beam-splitter network needs at least one weight"));
    }
    if weights.iter().any(|w| !w.is_finite() || w.abs() < MIN_WEIGHT) {
        return Err(invalid("beam-splitter network weights must be finite and nonzero"));
    }
    let positive = weights[0] > 0.0;
    if weights.iter().any(|&w| (w > 0.0) != positive) {
        return Err(invalid("beam-splitter network weights must share one sign"));
    }
    let norm: f64 = weights.iter().map(|w| w.abs()).sum();
    let mut remaining = 1.0; // ∏ sin²θₖ so far
    let mut thetas = Vec::with_capacity(weights.len().saturating_sub(1));
    for w in &weights[..weights.len() - 1] {
        let cos_sq = (w.abs() / (norm * remaining)).clamp(0.0, 1.0);
        let theta = cos_sq.sqrt().acos();
        remaining *= theta.sin().powi(2);
        thetas.push(theta);
    }
    Ok(thetas)
}

/// The cascade `B_{M−1,M}(θ_{M−1}) ⋯ B_{1,2}(θ₁)` on `M = weights.len()` modes.
///
/// A state injected into mode 0 ends up with a fraction `|wᵢ|/‖w‖₁` of its
/// photons in mode `i`. One sign only; `M = 1` gives the identity.
pub fn build_bsn_from_weights(weights: &[f64]) -> Result<SymplecticMatrix> {
    let thetas = bsn_angles(weights)?;
    let m = weights.len();
    let mut s = SymplecticMatrix::identity(m);
    for (j, &theta) in thetas.iter().enumerate() {
        s = beam_splitter(theta, j, j + 1, m)?.compose(&s)?;
    }
    Ok(s)
}

/// First column of the mode-space orthogonal matrix `Õ` of a passive network.
pub fn passive_first_column(s: &SymplecticMatrix) -> Vec<f64> {
    (0..s.n_modes()).map(|i| s.matrix()[(2 * i, 0)]).collect()
}
