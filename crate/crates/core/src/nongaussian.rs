//! Two-mode Fock-space states with a photon-number cutoff.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{invalid, Result};
use crate::fisher::{FisherKind, FisherMatrix};
use crate::weights::WeightVector;

/// Allowed deviation of `Σ|c|²` from one.
pub const NORM_TOL: f64 = 1e-12;

/// `Σ c_{n₁n₂} |n₁ n₂⟩` with `n₁, n₂ ≤ cutoff`, stored row-major in `n₁`.
#[derive(Debug, Clone, PartialEq)]
pub struct FockStateTwoMode {
    cutoff: usize,
    amplitudes: Vec<Complex64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GhzKind {
    /// `(|N0⟩ + |0N⟩)/√2`
    Noon,
    /// `(|NN⟩ + |00⟩)/√2`
    Nnoo,
}

impl FockStateTwoMode {
    pub fn new(cutoff: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        let dim = (cutoff + 1) * (cutoff + 1);
        if amplitudes.len() != dim {
            return Err(invalid(format!(
                "cutoff {cutoff} needs {dim} amplitudes, got {}",
                amplitudes.len()
            )));
        }
        let norm: f64 = amplitudes.iter().map(|c| c.norm_sqr()).sum();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(invalid(format!("state norm is {norm}, not 1")));
        }
        Ok(Self { cutoff, amplitudes })
    }

    /// The product Fock state `|n₁⟩|n₂⟩`.
    pub fn product(n1: usize, n2: usize) -> Self {
        let cutoff = n1.max(n2);
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); (cutoff + 1) * (cutoff + 1)];
        amplitudes[n1 * (cutoff + 1) + n2] = Complex64::new(1.0, 0.0);
        Self { cutoff, amplitudes }
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn amplitude(&self, n1: usize, n2: usize) -> Complex64 {
        if n1 > self.cutoff || n2 > self.cutoff {
            return Complex64::new(0.0, 0.0);
        }
        self.amplitudes[n1 * (self.cutoff + 1) + n2]
    }

    fn expect(&self, f: impl Fn(f64, f64) -> f64) -> f64 {
        let side = self.cutoff + 1;
        self.amplitudes
            .iter()
            .enumerate()
            .map(|(k, c)| c.norm_sqr() * f((k / side) as f64, (k % side) as f64))
            .sum()
    }

    /// `(⟨N̂₁⟩, ⟨N̂₂⟩)`.
    pub fn mean_photons(&self) -> (f64, f64) {
        (self.expect(|a, _| a), self.expect(|_, b| b))
    }

    pub fn total_photon_number(&self) -> f64 {
        self.expect(|a, b| a + b)
    }

    /// Photon-number covariance matrix `Cov(N̂ᵢ, N̂ⱼ)`.
    pub fn photon_covariance(&self) -> [[f64; 2]; 2] {
        let (m1, m2) = self.mean_photons();
        let c11 = self.expect(|a, _| (a - m1) * (a - m1));
        let c22 = self.expect(|_, b| (b - m2) * (b - m2));
        let c12 = self.expect(|a, b| (a - m1) * (b - m2));
        [[c11, c12], [c12, c22]]
    }
}

/// `(|N0⟩ + |0N⟩)/√2` or `(|NN⟩ + |00⟩)/√2`.
pub fn ghz_state(kind: GhzKind, n: usize) -> Result<FockStateTwoMode> {
    if n == 0 {
        return Err(invalid("GHZ-type state needs at least one photon"));
    }
    let side = n + 1;
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); side * side];
    let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    match kind {
        GhzKind::Noon => {
            amplitudes[n * side] = h;
            amplitudes[n] = h;
        }
        GhzKind::Nnoo => {
            amplitudes[n * side + n] = h;
            amplitudes[0] = h;
        }
    }
    FockStateTwoMode::new(n, amplitudes)
}

/// `⟨N̂₁N̂₂⟩ − ⟨N̂₁⟩⟨N̂₂⟩` by direct summation.
pub fn fock_photon_correlation(state: &FockStateTwoMode) -> f64 {
    state.photon_covariance()[0][1]
}

/// QFIM of a pure state under `e^{-i(φ₁N̂₁ + φ₂N̂₂)}`: four times the
/// photon-number covariance.
pub fn fock_qfim(state: &FockStateTwoMode) -> Result<FisherMatrix> {
    let c = state.photon_covariance();
    let h = DMatrix::from_fn(2, 2, |i, j| 4.0 * c[i][j]);
    FisherMatrix::new(h, FisherKind::Quantum)
}

/// `wᵀH⁺w` on the support of the Fock-state QFIM.
pub fn fock_bound(state: &FockStateTwoMode, w: &WeightVector) -> Result<f64> {
    if w.len() != 2 {
        return Err(invalid("two-mode Fock bound needs two weights"));
    }
    fock_qfim(state)?.bound_for(w.as_slice())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn wv(raw: &[f64]) -> WeightVector {
        WeightVector::new(raw.to_vec()).unwrap()
    }

    #[test]
    fn ghz_photon_numbers() {
        let s = ghz_state(GhzKind::Noon, 1).unwrap();
        assert!((s.amplitude(1, 0).re - s.amplitude(0, 1).re).abs() < 1e-16);
        assert!((s.total_photon_number() - 1.0).abs() < 1e-15);
        for kind in [GhzKind::Noon, GhzKind::Nnoo] {
            let (a, b) = ghz_state(kind, 4).unwrap().mean_photons();
            assert!((a - 2.0).abs() < 1e-14 && (b - 2.0).abs() < 1e-14);
        }
        assert!(ghz_state(GhzKind::Nnoo, 0).is_err());
    }

    #[test]
    fn correlation_signs() {
        let noon = ghz_state(GhzKind::Noon, 4).unwrap();
        let nnoo = ghz_state(GhzKind::Nnoo, 4).unwrap();
        assert!((fock_photon_correlation(&noon) + 4.0).abs() < 1e-13);
        assert!((fock_photon_correlation(&nnoo) - 4.0).abs() < 1e-13);
        assert_eq!(fock_photon_correlation(&FockStateTwoMode::product(3, 2)), 0.0);
    }

    #[test]
    fn qfim_entries() {
        let h = fock_qfim(&ghz_state(GhzKind::Noon, 4).unwrap()).unwrap();
        let want = DMatrix::from_row_slice(2, 2, &[16.0, -16.0, -16.0, 16.0]);
        assert!((h.matrix() - want).amax() < 1e-12);
        let h = fock_qfim(&ghz_state(GhzKind::Nnoo, 4).unwrap()).unwrap();
        assert!((h.matrix() - DMatrix::from_element(2, 2, 16.0)).amax() < 1e-12);
        let h = fock_qfim(&FockStateTwoMode::product(0, 0)).unwrap();
        assert_eq!(h.matrix(), &DMatrix::zeros(2, 2));
    }

    #[test]
    fn bounds_on_the_support() {
        let noon = ghz_state(GhzKind::Noon, 4).unwrap();
        let nnoo = ghz_state(GhzKind::Nnoo, 4).unwrap();
        // H = 2N̄² v vᵀ along v = (1, ∓1)/√2, so (½, ∓½) gets 1/(4N̄²).
        assert!((fock_bound(&noon, &wv(&[0.5, -0.5])).unwrap() - 1.0 / 64.0).abs() < 1e-15);
        assert!((fock_bound(&nnoo, &wv(&[0.5, 0.5])).unwrap() - 1.0 / 64.0).abs() < 1e-15);
        assert!(matches!(
            fock_bound(&noon, &wv(&[0.5, 0.5])),
            Err(Error::NotEstimable { .. })
        ));
    }

    #[test]
    fn rejects_unnormalized() {
        let amps = vec![Complex64::new(0.5, 0.0); 4];
        assert!(FockStateTwoMode::new(1, amps).is_ok());
        let amps = vec![Complex64::new(0.6, 0.0); 4];
        assert!(FockStateTwoMode::new(1, amps).is_err());
        assert!(FockStateTwoMode::new(2, vec![Complex64::new(1.0, 0.0)]).is_err());
    }
}
