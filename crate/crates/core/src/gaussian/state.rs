use nalgebra::{DMatrix, DVector, Matrix2};

use super::symplectic::{omega, SymplecticMatrix};
use crate::error::{invalid, numerical, unsupported, Result};

/// Absolute symmetry tolerance for covariance matrices.
pub const SYMMETRY_TOL: f64 = 1e-12;
/// Floor on the smallest eigenvalue of `Γ + iΩ/2`.
pub const UNCERTAINTY_TOL: f64 = 1e-10;
/// Relative tolerance on `det(2Γ) = 1` for pure states.
pub const PURITY_TOL: f64 = 1e-9;
/// First moments below this norm count as zero.
pub const ZERO_MEAN_TOL: f64 = 1e-12;

/// A multimode Gaussian state in interleaved ordering `(x₁, p₁, …, x_M, p_M)`.
///
/// Vacuum has covariance `½·𝟙`; first moments of a coherent state `|α⟩` are
/// `√2 (Re α, Im α)`, so that its photon number is `|α|²`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianState {
    gamma: DMatrix<f64>,
    d: DVector<f64>,
}

impl GaussianState {
    /// Validates symmetry and the uncertainty relation `Γ + iΩ/2 ≥ 0`.
    pub fn new(gamma: DMatrix<f64>, d: DVector<f64>) -> Result<Self> {
        let dim = gamma.nrows();
        if dim == 0 || dim % 2 != 0 || gamma.ncols() != dim || d.len() != dim {
            return Err(invalid(format!(
                "covariance {}×{} and first moments of length {} do not describe M modes",
                gamma.nrows(),
                gamma.ncols(),
                d.len()
            )));
        }
        if (&gamma - gamma.transpose()).amax() > SYMMETRY_TOL {
            return Err(invalid("covariance matrix is not symmetric"));
        }
        let state = Self { gamma, d };
        let floor = state.uncertainty_min_eigenvalue();
        if floor < -UNCERTAINTY_TOL {
            return Err(invalid(format!(
                "covariance violates the uncertainty relation (min eigenvalue {floor:.3e})"
            )));
        }
        Ok(state)
    }

    pub fn vacuum(n_modes: usize) -> Result<Self> {
        if n_modes == 0 {
            return Err(invalid("n_modes must be at least 1"));
        }
        Ok(Self {
            gamma: DMatrix::identity(2 * n_modes, 2 * n_modes) * 0.5,
            d: DVector::zeros(2 * n_modes),
        })
    }

    pub fn n_modes(&self) -> usize {
        self.gamma.nrows() / 2
    }

    pub fn gamma(&self) -> &DMatrix<f64> {
        &self.gamma
    }

    pub fn d(&self) -> &DVector<f64> {
        &self.d
    }

    /// The 2×2 block `Γ^{(i,j)}`.
    pub fn block(&self, i: usize, j: usize) -> Matrix2<f64> {
        self.gamma.fixed_view::<2, 2>(2 * i, 2 * j).into_owned()
    }

    fn check_mode(&self, mode: usize) -> Result<()> {
        if mode >= self.n_modes() {
            return Err(invalid(format!(
                "mode {mode} out of range for {} modes",
                self.n_modes()
            )));
        }
        Ok(())
    }

    /// Marginal state of the listed modes, in that order.
    pub fn reduced(&self, modes: &[usize]) -> Result<Self> {
        if modes.is_empty() {
            return Err(invalid("reduced state needs at least one mode"));
        }
        for &m in modes {
            self.check_mode(m)?;
        }
        let idx = |k: usize| 2 * modes[k / 2] + k % 2;
        let n = 2 * modes.len();
        Ok(Self {
            gamma: DMatrix::from_fn(n, n, |a, b| self.gamma[(idx(a), idx(b))]),
            d: DVector::from_fn(n, |a, _| self.d[idx(a)]),
        })
    }

    /// `Γ → S Γ Sᵀ`, `d → S d`.
    pub fn apply(&self, s: &SymplecticMatrix) -> Result<Self> {
        if s.n_modes() != self.n_modes() {
            return Err(invalid(format!(
                "{}-mode symplectic applied to a {}-mode state",
                s.n_modes(),
                self.n_modes()
            )));
        }
        let m = s.matrix();
        let g = m * &self.gamma * m.transpose();
        Ok(Self {
            gamma: (&g + g.transpose()) * 0.5,
            d: m * &self.d,
        })
    }

    /// Displacement `D(α)` on one mode.
    pub fn displace(&self, mode: usize, alpha_re: f64, alpha_im: f64) -> Result<Self> {
        self.check_mode(mode)?;
        let mut out = self.clone();
        out.d[2 * mode] += std::f64::consts::SQRT_2 * alpha_re;
        out.d[2 * mode + 1] += std::f64::consts::SQRT_2 * alpha_im;
        Ok(out)
    }

    /// `⟨N̂⟩ = (Tr Γ_mode − 1)/2 + |d_mode|²/2`.
    pub fn mode_photon_number(&self, mode: usize) -> Result<f64> {
        self.check_mode(mode)?;
        let (x, p) = (2 * mode, 2 * mode + 1);
        let tr = self.gamma[(x, x)] + self.gamma[(p, p)];
        Ok((tr - 1.0) * 0.5 + (self.d[x].powi(2) + self.d[p].powi(2)) * 0.5)
    }

    pub fn total_photon_number(&self) -> f64 {
        (self.gamma.trace() - self.n_modes() as f64) * 0.5 + self.d.norm_squared() * 0.5
    }

    /// `Var(N̂) = (2 Tr[Γ_mode²] − 1)/4 + d_modeᵀ Γ_mode d_mode`.
    pub fn mode_photon_variance(&self, mode: usize) -> Result<f64> {
        self.check_mode(mode)?;
        let b = self.block(mode, mode);
        let dm = nalgebra::Vector2::new(self.d[2 * mode], self.d[2 * mode + 1]);
        Ok(((2.0 * (b * b).trace() - 1.0) * 0.25) + dm.dot(&(b * dm)))
    }

    pub fn is_zero_mean(&self) -> bool {
        self.d.norm() < ZERO_MEAN_TOL
    }

    /// Photon-number covariance `⟨N̂ᵢN̂ⱼ⟩ − ⟨N̂ᵢ⟩⟨N̂ⱼ⟩` of two distinct modes of a
    /// zero-mean state.
    ///
    /// By the Gaussian moment theorem this is half the sum of squares of the
    /// off-diagonal block `Γ^{(i,j)}` in the ½-vacuum convention.
    pub fn photon_correlation(&self, i: usize, j: usize) -> Result<f64> {
        self.check_mode(i)?;
        self.check_mode(j)?;
        if i == j {
            return Err(invalid(
                "photon_correlation needs distinct modes; use mode_photon_variance on the diagonal",
            ));
        }
        if !self.is_zero_mean() {
            return Err(unsupported(
                "photon_correlation is defined here for zero-mean states only",
            ));
        }
        Ok(0.5 * self.block(i, j).norm_squared())
    }

    /// `det(2Γ)`, equal to one for pure states.
    pub fn purity_determinant(&self) -> f64 {
        (&self.gamma * 2.0).determinant()
    }

    pub fn is_pure(&self) -> bool {
        (self.purity_determinant() - 1.0).abs() <= PURITY_TOL
    }

    /// Smallest eigenvalue of the Hermitian matrix `Γ + iΩ/2`, read off its
    /// real symmetric embedding `[[Γ, −Ω/2], [Ω/2, Γ]]`.
    pub fn uncertainty_min_eigenvalue(&self) -> f64 {
        let n = self.gamma.nrows();
        let half_om = omega(self.n_modes()) * 0.5;
        let mut emb = DMatrix::zeros(2 * n, 2 * n);
        emb.view_mut((0, 0), (n, n)).copy_from(&self.gamma);
        emb.view_mut((n, n), (n, n)).copy_from(&self.gamma);
        emb.view_mut((0, n), (n, n)).copy_from(&(-&half_om));
        emb.view_mut((n, 0), (n, n)).copy_from(&half_om);
        emb.symmetric_eigenvalues().min()
    }

    fn require_pure(&self, what: &str) -> Result<()> {
        if !self.is_pure() {
            return Err(unsupported(format!(
                "{what} requires a pure state (det(2Γ) = {:.12})",
                self.purity_determinant()
            )));
        }
        Ok(())
    }
}

/// `ln |⟨ψ_a|ψ_b⟩|²` for pure Gaussian states:
/// `−½ δᵀ(Γ_a+Γ_b)⁻¹δ − ½ ln det(Γ_a+Γ_b)` with `δ = d_a − d_b`.
pub(crate) fn log_overlap_sq(a: &GaussianState, b: &GaussianState) -> Result<f64> {
    if a.n_modes() != b.n_modes() {
        return Err(invalid("overlap of states with different mode counts"));
    }
    a.require_pure("pure_state_overlap")?;
    b.require_pure("pure_state_overlap")?;
    let sum = &a.gamma + &b.gamma;
    let chol = sum
        .cholesky()
        .ok_or_else(|| numerical("Γ_a + Γ_b is not positive definite"))?;
    let delta = &a.d - &b.d;
    let quad = delta.dot(&chol.solve(&delta));
    let log_det: f64 = chol.l().diagonal().iter().map(|l| 2.0 * l.ln()).sum();
    Ok(-0.5 * quad - 0.5 * log_det)
}

/// `|⟨ψ_a|ψ_b⟩|` for two pure Gaussian states.
pub fn pure_state_overlap(a: &GaussianState, b: &GaussianState) -> Result<f64> {
    Ok((0.5 * log_overlap_sq(a, b)?).exp().min(1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::symplectic::{beam_splitter, phase_shifter, squeezer};
    use std::f64::consts::FRAC_PI_4;

    #[test]
    fn vacuum_state() {
        let v = GaussianState::vacuum(1).unwrap();
        assert_eq!(v.gamma(), &DMatrix::from_row_slice(2, 2, &[0.5, 0.0, 0.0, 0.5]));
        assert_eq!(v.d().as_slice(), &[0.0, 0.0]);
        assert_eq!(GaussianState::vacuum(3).unwrap().total_photon_number(), 0.0);
        assert!((GaussianState::vacuum(2).unwrap().purity_determinant() - 1.0).abs() < 1e-15);
        assert!(GaussianState::vacuum(0).is_err());
    }

    #[test]
    fn rejects_unphysical_covariance() {
        let g = DMatrix::identity(2, 2) * 0.1;
        assert!(GaussianState::new(g, DVector::zeros(2)).is_err());
        let mut g = DMatrix::identity(2, 2) * 0.5;
        g[(0, 1)] = 0.1;
        assert!(GaussianState::new(g, DVector::zeros(2)).is_err());
    }

    #[test]
    fn squeezed_photon_number() {
        let r = 1f64.asinh();
        let s = GaussianState::vacuum(1)
            .unwrap()
            .apply(&squeezer(r, 0.0, 0, 1).unwrap())
            .unwrap();
        assert!((s.mode_photon_number(0).unwrap() - 1.0).abs() < 1e-14);
        assert!((s.gamma()[(0, 0)] - (2.0 * r).exp() / 2.0).abs() < 1e-14);
        // Var N = 2 N (N + 1) for squeezed vacuum.
        assert!((s.mode_photon_variance(0).unwrap() - 4.0).abs() < 1e-12);
    }

    #[test]
    fn displacement() {
        let v = GaussianState::vacuum(1).unwrap();
        assert_eq!(v.displace(0, 0.0, 0.0).unwrap(), v);
        let c = v.displace(0, 1.0, 0.0).unwrap();
        assert!((c.mode_photon_number(0).unwrap() - 1.0).abs() < 1e-15);
        let c = v.displace(0, 0.0, 3.0).unwrap();
        assert!((c.d()[1] - 3.0 * 2f64.sqrt()).abs() < 1e-15);
        assert!((c.total_photon_number() - 9.0).abs() < 1e-13);
        assert!((c.mode_photon_variance(0).unwrap() - 9.0).abs() < 1e-12);
    }

    #[test]
    fn balanced_splitter_shares_squeezing() {
        let r = 0.8;
        let v = GaussianState::vacuum(2).unwrap();
        let s = v.apply(&squeezer(r, 0.0, 0, 2).unwrap()).unwrap();
        let half = s.apply(&beam_splitter(FRAC_PI_4, 0, 1, 2).unwrap()).unwrap();
        let target = r.sinh().powi(2) / 2.0;
        assert!((half.mode_photon_number(0).unwrap() - target).abs() < 1e-12);
        assert!((half.mode_photon_number(1).unwrap() - target).abs() < 1e-12);

        let swapped = s
            .apply(&beam_splitter(std::f64::consts::FRAC_PI_2, 0, 1, 2).unwrap())
            .unwrap();
        assert!(swapped.mode_photon_number(0).unwrap().abs() < 1e-12);
        assert!((swapped.mode_photon_number(1).unwrap() - r.sinh().powi(2)).abs() < 1e-12);
        assert!(half.photon_correlation(0, 1).unwrap() > 0.0);
        assert!(half.photon_correlation(0, 0).is_err());
    }

    #[test]
    fn correlation_rejects_displaced_states() {
        let c = GaussianState::vacuum(2).unwrap().displace(1, 0.3, 0.0).unwrap();
        assert!(matches!(
            c.photon_correlation(0, 1),
            Err(crate::Error::UnsupportedInput(_))
        ));
        let v = GaussianState::vacuum(2).unwrap();
        assert_eq!(v.photon_correlation(0, 1).unwrap(), 0.0);
    }

    #[test]
    fn overlaps() {
        let v = GaussianState::vacuum(1).unwrap();
        assert!((pure_state_overlap(&v, &v).unwrap() - 1.0).abs() < 1e-15);
        let r = 0.5;
        let s = v.apply(&squeezer(r, 0.0, 0, 1).unwrap()).unwrap();
        // |⟨0|r⟩|² = 1/cosh r
        let ov = pure_state_overlap(&v, &s).unwrap();
        assert!((ov * ov - 1.0 / r.cosh()).abs() < 1e-14);
        // |⟨α|β⟩|² = exp(−|α−β|²)
        let a = v.displace(0, 0.3, -0.2).unwrap();
        let b = v.displace(0, -0.1, 0.4).unwrap();
        let want = (-(0.4f64.powi(2) + 0.6f64.powi(2))).exp();
        let got = pure_state_overlap(&a, &b).unwrap();
        assert!((got * got - want).abs() < 1e-14);

        let mut last = 1.0;
        for k in 1..=5 {
            let rot = s.apply(&phase_shifter(0.01 * k as f64, 0, 1).unwrap()).unwrap();
            let ov = pure_state_overlap(&s, &rot).unwrap();
            assert!(ov > 0.0 && ov < last);
            last = ov;
        }
    }
}
