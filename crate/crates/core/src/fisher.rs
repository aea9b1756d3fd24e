//! Quantum and classical Fisher information, support-aware inversion and the
//! weighted Cramér–Rao bound `wᵀ F⁺ w`.

use nalgebra::{DMatrix, DVector, Matrix2};

use crate::error::{invalid, numerical, unsupported, Error, Result};
use crate::gaussian::{log_overlap_sq, phase_shifts, rotation_block, GaussianState};
use crate::schemes::SchemeSpec;
use crate::weights::WeightVector;

/// Eigenvalues below this fraction of the largest are treated as zero.
pub const DEFAULT_SUPPORT_TOL: f64 = 1e-10;
/// Largest admissible `‖(𝟙 − P) w‖` for an estimable weight vector.
pub const SUPPORT_RESIDUAL_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FisherKind {
    Quantum,
    Classical,
}

/// A symmetric positive-semidefinite information matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct FisherMatrix {
    h: DMatrix<f64>,
    kind: FisherKind,
}

/// Pseudo-inverse on the support together with the projector onto it.
#[derive(Debug, Clone)]
pub struct SupportInverse {
    pub pinv: DMatrix<f64>,
    pub projector: DMatrix<f64>,
    pub rank: usize,
}

impl FisherMatrix {
    /// Checks symmetry (1e-10, scaled by the largest entry) and
    /// positive semidefiniteness (`λ_min ≥ −1e-9 λ_max`), then symmetrizes.
    pub fn new(h: DMatrix<f64>, kind: FisherKind) -> Result<Self> {
        if h.nrows() != h.ncols() || h.nrows() == 0 {
            return Err(invalid("Fisher matrix must be square and non-empty"));
        }
        if h.iter().any(|x| !x.is_finite()) {
            return Err(numerical("Fisher matrix has non-finite entries"));
        }
        let scale = h.amax().max(1.0);
        if (&h - h.transpose()).amax() > 1e-10 * scale {
            return Err(invalid("Fisher matrix is not symmetric"));
        }
        let h = (&h + h.transpose()) * 0.5;
        let eig = h.clone().symmetric_eigenvalues();
        let (lo, hi) = (eig.min(), eig.max());
        if lo < -1e-9 * hi.max(0.0) - f64::MIN_POSITIVE {
            return Err(invalid(format!(
                "Fisher matrix is not positive semidefinite (λ_min = {lo:.3e}, λ_max = {hi:.3e})"
            )));
        }
        Ok(Self { h, kind })
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.h
    }

    pub fn kind(&self) -> FisherKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.h.nrows()
    }

    /// Eigendecomposition-based pseudo-inverse; eigenvalues below
    /// `tol · λ_max` are dropped. An all-zero matrix has empty support.
    pub fn pinv_on_support(&self, tol: f64) -> SupportInverse {
        let n = self.dim();
        let eig = self.h.clone().symmetric_eigen();
        let lmax = eig.eigenvalues.max();
        let mut pinv = DMatrix::zeros(n, n);
        let mut projector = DMatrix::zeros(n, n);
        let mut rank = 0;
        if lmax > 0.0 {
            for (k, &lam) in eig.eigenvalues.iter().enumerate() {
                if lam > tol * lmax {
                    let v = eig.eigenvectors.column(k);
                    let outer = &v * v.transpose();
                    pinv += &outer / lam;
                    projector += outer;
                    rank += 1;
                }
            }
        }
        SupportInverse {
            pinv,
            projector,
            rank,
        }
    }

    /// `wᵀ F⁺ w` for an arbitrary real vector (no normalization applied).
    pub fn bound_for(&self, w: &[f64]) -> Result<f64> {
        if w.len() != self.dim() {
            return Err(invalid(format!(
                "weight vector of length {} for a {}×{} Fisher matrix",
                w.len(),
                self.dim(),
                self.dim()
            )));
        }
        let sup = self.pinv_on_support(DEFAULT_SUPPORT_TOL);
        let w = DVector::from_column_slice(w);
        let residual = (&w - &sup.projector * &w).norm();
        if residual >= SUPPORT_RESIDUAL_TOL {
            return Err(Error::NotEstimable { residual });
        }
        Ok(w.dot(&(&sup.pinv * &w)))
    }

    /// `[H⁻¹]^{(A)} − [H^{(A)}]⁻¹` for the leading `a_len` parameters: how much
    /// worse the leading block is estimated when the others are unknown.
    /// Positive semidefinite for any positive definite `H`.
    pub fn unknown_nuisance_penalty(&self, a_len: usize) -> Result<DMatrix<f64>> {
        let n = self.dim();
        if a_len == 0 || a_len > n {
            return Err(invalid(format!("block size {a_len} out of range for dimension {n}")));
        }
        let full_inv = self
            .h
            .clone()
            .cholesky()
            .ok_or_else(|| numerical("Fisher matrix is singular"))?
            .inverse();
        let block_inv = self
            .h
            .view((0, 0), (a_len, a_len))
            .into_owned()
            .cholesky()
            .ok_or_else(|| numerical("leading block is singular"))?
            .inverse();
        Ok(full_inv.view((0, 0), (a_len, a_len)).into_owned() - block_inv)
    }
}

/// Weighted Cramér–Rao bound `wᵀ F⁺ w` with normalized weights.
pub fn qcrb(m: &FisherMatrix, w: &WeightVector) -> Result<f64> {
    m.bound_for(w.as_slice())
}

/// Pseudo-inverse of `m` restricted to its support.
pub fn pinv_on_support(m: &FisherMatrix, tol: f64) -> SupportInverse {
    m.pinv_on_support(tol)
}

/// QFIM of a pure Gaussian probe under phase encoding `⊗ e^{-iφᵢN̂ᵢ}`:
///
/// `Hᵢⱼ = 2 Tr[Γ^{(i,j)} Γ^{(j,i)}] − δᵢⱼ + (Ω₂ d^{(i)})ᵀ [Γ⁻¹]^{(i,j)} (Ω₂ d^{(j)})`.
pub fn qfim_pure(probe: &GaussianState) -> Result<FisherMatrix> {
    if !probe.is_pure() {
        return Err(unsupported(format!(
            "qfim_pure needs a pure probe (det(2Γ) = {:.12})",
            probe.purity_determinant()
        )));
    }
    let m = probe.n_modes();
    let mut h = DMatrix::zeros(m, m);
    for i in 0..m {
        for j in i..m {
            let gij = probe.block(i, j);
            let gji = probe.block(j, i);
            let mut v = 2.0 * (gij * gji).trace();
            if i == j {
                v -= 1.0;
            }
            h[(i, j)] = v;
            h[(j, i)] = v;
        }
    }
    if !probe.is_zero_mean() {
        // One factorization shared by every (i, j) pair.
        let inv = probe
            .gamma()
            .clone()
            .cholesky()
            .ok_or_else(|| numerical("covariance matrix is singular"))?
            .inverse();
        let d = probe.d();
        let rotated: Vec<nalgebra::Vector2<f64>> = (0..m)
            .map(|i| nalgebra::Vector2::new(d[2 * i + 1], -d[2 * i]))
            .collect();
        for i in 0..m {
            for j in 0..m {
                let blk: Matrix2<f64> = inv.fixed_view::<2, 2>(2 * i, 2 * j).into_owned();
                h[(i, j)] += rotated[i].dot(&(blk * rotated[j]));
            }
        }
    }
    FisherMatrix::new(h, FisherKind::Quantum)
}

/// Directional QFI `uᵀHu` from the fidelity between the probe and its copy
/// phase-shifted by `ε·u`: `8 (1 − |⟨ψ(0)|ψ(εu)⟩|) / ε²`.
///
/// Validation oracle; independent of [`qfim_pure`].
pub fn qfi_finite_difference_oracle(
    probe: &GaussianState,
    direction: &[f64],
    epsilon: f64,
) -> Result<f64> {
    if !(1e-5..=1e-2).contains(&epsilon) {
        return Err(invalid(format!("epsilon {epsilon:e} outside [1e-5, 1e-2]")));
    }
    if direction.len() != probe.n_modes() {
        return Err(invalid("direction length must equal the mode count"));
    }
    let shift: Vec<f64> = direction.iter().map(|u| u * epsilon).collect();
    let moved = probe.apply(&phase_shifts(&shift)?)?;
    let log_sq = log_overlap_sq(probe, &moved)?;
    let one_minus = -(0.5 * log_sq).exp_m1();
    Ok(8.0 * one_minus / (epsilon * epsilon))
}

/// Full QFIM reconstructed from the fidelity oracle by polarization over
/// `eᵢ`, `eⱼ` and `eᵢ + eⱼ`.
pub fn qfim_finite_difference(probe: &GaussianState, epsilon: f64) -> Result<DMatrix<f64>> {
    let m = probe.n_modes();
    let unit = |idx: &[usize]| {
        let mut u = vec![0.0; m];
        for &i in idx {
            u[i] = 1.0;
        }
        u
    };
    let diag: Vec<f64> = (0..m)
        .map(|i| qfi_finite_difference_oracle(probe, &unit(&[i]), epsilon))
        .collect::<Result<_>>()?;
    let mut h = DMatrix::from_diagonal(&DVector::from_vec(diag.clone()));
    for i in 0..m {
        for j in i + 1..m {
            let both = qfi_finite_difference_oracle(probe, &unit(&[i, j]), epsilon)?;
            let v = 0.5 * (both - diag[i] - diag[j]);
            h[(i, j)] = v;
            h[(j, i)] = v;
        }
    }
    Ok(h)
}

/// Classical Fisher information of a zero-mean normal outcome model:
/// `Fᵢⱼ = ½ Tr[Σ⁻¹ ∂ᵢΣ Σ⁻¹ ∂ⱼΣ]`.
pub fn gaussian_cfim(cov: &DMatrix<f64>, dcov: &[DMatrix<f64>]) -> Result<FisherMatrix> {
    let n = cov.nrows();
    if cov.ncols() != n || n == 0 {
        return Err(invalid("outcome covariance must be square"));
    }
    if dcov.is_empty() || dcov.iter().any(|d| d.shape() != cov.shape()) {
        return Err(invalid("need one derivative matrix per parameter, shaped like the covariance"));
    }
    let chol = cov
        .clone()
        .cholesky()
        .ok_or_else(|| numerical("outcome covariance is not positive definite"))?;
    let solved: Vec<DMatrix<f64>> = dcov.iter().map(|d| chol.solve(d)).collect();
    let k = dcov.len();
    let mut f = DMatrix::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let v = 0.5 * (&solved[i] * &solved[j]).trace();
            f[(i, j)] = v;
            f[(j, i)] = v;
        }
    }
    FisherMatrix::new(f, FisherKind::Classical)
}

/// Covariance of the homodyne record and its analytic phase derivatives.
///
/// Homodyne angle `θᵢ` on mode `i` measures `x cos θᵢ − p sin θᵢ`, which is the
/// `x` quadrature after a further rotation by `−θᵢ`; the effective phase is
/// therefore `φᵢ − θᵢ`. With `R = ⊕ R(φᵢ − θᵢ)`, the output covariance is
/// `R Γ Rᵀ` and `∂ₖ(RΓRᵀ) = Ωₖ RΓRᵀ + RΓRᵀ Ωₖᵀ` where `Ωₖ` is `Ω₂` on block `k`.
pub fn homodyne_covariance(
    probe: &GaussianState,
    phases: &[f64],
    angles: &[f64],
) -> Result<(DMatrix<f64>, Vec<DMatrix<f64>>)> {
    let m = probe.n_modes();
    if phases.len() != m || angles.len() != m {
        return Err(invalid(format!(
            "need {m} phases and {m} homodyne angles, got {} and {}",
            phases.len(),
            angles.len()
        )));
    }
    if !probe.is_zero_mean() {
        return Err(unsupported(
            "homodyne Fisher information is modelled for zero-displacement probes only",
        ));
    }
    let eff: Vec<f64> = phases.iter().zip(angles).map(|(p, a)| p - a).collect();
    let out = probe.apply(&phase_shifts(&eff)?)?;
    let g = out.gamma();
    let cov = DMatrix::from_fn(m, m, |i, j| g[(2 * i, 2 * j)]);
    // (Ω₂ G)_{x_i, ·} = G_{p_i, ·}; only x rows/columns are kept.
    let dcov = (0..m)
        .map(|k| {
            DMatrix::from_fn(m, m, |i, j| {
                let mut v = 0.0;
                if i == k {
                    v += g[(2 * k + 1, 2 * j)];
                }
                if j == k {
                    v += g[(2 * i, 2 * k + 1)];
                }
                v
            })
        })
        .collect();
    Ok((cov, dcov))
}

/// Homodyne CFIM of a zero-mean probe at the given phases and angles.
pub fn homodyne_cfim_for_state(
    probe: &GaussianState,
    phases: &[f64],
    angles: &[f64],
) -> Result<FisherMatrix> {
    let (cov, dcov) = homodyne_covariance(probe, phases, angles)?;
    gaussian_cfim(&cov, &dcov)
}

/// Homodyne CFIM of the probe a scheme prepares.
pub fn homodyne_cfim(scheme: &SchemeSpec, phases: &[f64], angles: &[f64]) -> Result<FisherMatrix> {
    homodyne_cfim_for_state(&scheme.build_probe()?, phases, angles)
}

/// Rank-one-plus-diagonal homodyne CFIM of a single squeezed vacuum routed by
/// a weight-matched network, at optimal homodyne angles.
#[derive(Debug, Clone)]
pub struct ClosedFormCfim {
    /// `tanh²2r (8 sinh⁴r + 6 sinh²r + 1)`
    pub alpha: f64,
    /// `tanh²2r cosh 2r`
    pub beta: f64,
    /// `Fᵢⱼ = α ŵᵢŵⱼ + β ŵᵢ δᵢⱼ` with `ŵ = |w| / ‖w‖₁`.
    pub fisher: DMatrix<f64>,
    /// `wᵀF⁻¹w` via Sherman–Morrison; equals `‖w‖₁² / (8N̄(N̄+1))`.
    pub ccrb: f64,
}

pub fn homodyne_cfim_closed_form(w: &[f64], r: f64) -> Result<ClosedFormCfim> {
    if w.is_empty() || w.iter().any(|x| !x.is_finite() || *x == 0.0) {
        return Err(invalid("closed-form CFIM needs finite nonzero weights"));
    }
    if w.iter().any(|&x| (x > 0.0) != (w[0] > 0.0)) {
        return Err(invalid("closed-form CFIM needs weights of one sign"));
    }
    let norm: f64 = w.iter().map(|x| x.abs()).sum();
    let hat: Vec<f64> = w.iter().map(|x| x.abs() / norm).collect();
    let sh2 = r.sinh().powi(2);
    let t2 = (2.0 * r).tanh().powi(2);
    let alpha = t2 * (8.0 * sh2 * sh2 + 6.0 * sh2 + 1.0);
    let beta = t2 * (2.0 * r).cosh();
    let m = w.len();
    let fisher = DMatrix::from_fn(m, m, |i, j| {
        alpha * hat[i] * hat[j] + if i == j { beta * hat[i] } else { 0.0 }
    });
    let ccrb = if beta > 0.0 {
        // F⁻¹ = B⁻¹ − α B⁻¹ŵŵᵀB⁻¹ / (1 + α ŵᵀB⁻¹ŵ), B = β diag(ŵ)
        let w_binv_w: f64 = w.iter().zip(&hat).map(|(x, h)| x * x / (beta * h)).sum();
        let hat_binv_w: f64 = w.iter().map(|x| x / beta).sum();
        let hat_binv_hat: f64 = hat.iter().map(|h| h / beta).sum();
        w_binv_w - alpha * hat_binv_w * hat_binv_w / (1.0 + alpha * hat_binv_hat)
    } else {
        f64::INFINITY
    };
    Ok(ClosedFormCfim {
        alpha,
        beta,
        fisher,
        ccrb,
    })
}

/// Single-mode homodyne information at effective phase offset `psi` for a
/// squeezed vacuum of strength `r` (squeezer convention of this crate).
pub fn single_mode_homodyne_information(r: f64, psi: f64) -> f64 {
    let rot = rotation_block(psi);
    let (a, b) = ((2.0 * r).exp() * 0.5, (-2.0 * r).exp() * 0.5);
    let var = a * rot[0][0].powi(2) + b * rot[0][1].powi(2);
    let dvar = 2.0 * (b - a) * rot[0][0] * rot[0][1];
    0.5 * (dvar / var).powi(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::{beam_splitter, squeezer};
    use std::f64::consts::FRAC_PI_4;

    fn squeezed(n: f64) -> GaussianState {
        GaussianState::vacuum(1)
            .unwrap()
            .apply(&squeezer(n.sqrt().asinh(), 0.0, 0, 1).unwrap())
            .unwrap()
    }

    #[test]
    fn qfim_examples() {
        let v = GaussianState::vacuum(1).unwrap();
        assert_eq!(qfim_pure(&v).unwrap().matrix()[(0, 0)], 0.0);
        let h = qfim_pure(&squeezed(1.0)).unwrap();
        assert!((h.matrix()[(0, 0)] - 16.0).abs() < 1e-12);
        let c = v.displace(0, 1.0, 0.0).unwrap();
        assert!((qfim_pure(&c).unwrap().matrix()[(0, 0)] - 4.0).abs() < 1e-12);
    }

    #[test]
    fn oracle_examples() {
        let v = GaussianState::vacuum(2).unwrap();
        assert_eq!(qfi_finite_difference_oracle(&v, &[1.0, 0.3], 1e-3).unwrap(), 0.0);
        let fd = qfi_finite_difference_oracle(&squeezed(1.0), &[1.0], 1e-3).unwrap();
        assert!((fd - 16.0).abs() / 16.0 < 1e-3);

        let two = GaussianState::vacuum(2)
            .unwrap()
            .apply(&squeezer(1.0, 0.0, 0, 2).unwrap())
            .unwrap()
            .apply(&beam_splitter(0.6, 0, 1, 2).unwrap())
            .unwrap();
        let h = qfim_pure(&two).unwrap();
        let want = h.matrix().sum();
        let fd = qfi_finite_difference_oracle(&two, &[1.0, 1.0], 1e-3).unwrap();
        assert!((fd - want).abs() / want < 1e-3);
        assert!(qfi_finite_difference_oracle(&two, &[1.0, 1.0], 1.0).is_err());
    }

    #[test]
    fn qfim_rejects_mixed_probe() {
        let g = DMatrix::identity(2, 2);
        let mixed = GaussianState::new(g, DVector::zeros(2)).unwrap();
        assert!(matches!(qfim_pure(&mixed), Err(Error::UnsupportedInput(_))));
    }

    #[test]
    fn pinv_examples() {
        let id = FisherMatrix::new(DMatrix::identity(3, 3), FisherKind::Quantum).unwrap();
        let s = id.pinv_on_support(DEFAULT_SUPPORT_TOL);
        assert_eq!(s.rank, 3);
        assert!((s.pinv - DMatrix::<f64>::identity(3, 3)).amax() < 1e-15);

        let d = FisherMatrix::new(
            DMatrix::from_row_slice(2, 2, &[4.0, 0.0, 0.0, 0.0]),
            FisherKind::Quantum,
        )
        .unwrap();
        let s = d.pinv_on_support(DEFAULT_SUPPORT_TOL);
        assert_eq!(s.rank, 1);
        assert!((s.pinv[(0, 0)] - 0.25).abs() < 1e-15 && s.pinv[(1, 1)].abs() < 1e-15);
        assert!((s.projector[(0, 0)] - 1.0).abs() < 1e-15);

        let noon = FisherMatrix::new(
            DMatrix::from_row_slice(2, 2, &[16.0, -16.0, -16.0, 16.0]),
            FisherKind::Quantum,
        )
        .unwrap();
        let s = noon.pinv_on_support(DEFAULT_SUPPORT_TOL);
        let want = DMatrix::from_row_slice(2, 2, &[1.0, -1.0, -1.0, 1.0]) / 64.0;
        assert!((s.pinv - want).amax() < 1e-15);

        let zero = FisherMatrix::new(DMatrix::zeros(2, 2), FisherKind::Classical).unwrap();
        let s = zero.pinv_on_support(DEFAULT_SUPPORT_TOL);
        assert_eq!(s.rank, 0);
        assert_eq!(s.pinv, DMatrix::zeros(2, 2));
    }

    #[test]
    fn qcrb_examples() {
        let h = FisherMatrix::new(DMatrix::identity(2, 2) * 16.0, FisherKind::Quantum).unwrap();
        let w = WeightVector::new(vec![0.5, -0.5]).unwrap();
        assert!((qcrb(&h, &w).unwrap() - 0.03125).abs() < 1e-15);

        let noon = FisherMatrix::new(
            DMatrix::from_row_slice(2, 2, &[16.0, -16.0, -16.0, 16.0]),
            FisherKind::Quantum,
        )
        .unwrap();
        assert!((qcrb(&noon, &w).unwrap() - 1.0 / 64.0).abs() < 1e-15);
        let plus = WeightVector::new(vec![0.5, 0.5]).unwrap();
        match qcrb(&noon, &plus) {
            Err(Error::NotEstimable { residual }) => assert!((residual - 0.5f64.sqrt()).abs() < 1e-12),
            other => panic!("expected NotEstimable, got {other:?}"),
        }
    }

    #[test]
    fn rejects_non_psd() {
        let m = DMatrix::from_row_slice(2, 2, &[1.0, 2.0, 2.0, 1.0]);
        assert!(FisherMatrix::new(m, FisherKind::Quantum).is_err());
        let m = DMatrix::from_row_slice(2, 2, &[1.0, 0.1, 0.0, 1.0]);
        assert!(FisherMatrix::new(m, FisherKind::Quantum).is_err());
    }

    #[test]
    fn cfim_scalar_and_zero() {
        let f = gaussian_cfim(
            &DMatrix::from_element(1, 1, 2.0),
            &[DMatrix::from_element(1, 1, 0.6)],
        )
        .unwrap();
        assert!((f.matrix()[(0, 0)] - 0.5 * 0.09).abs() < 1e-15);
        let z = gaussian_cfim(&DMatrix::identity(2, 2), &[DMatrix::zeros(2, 2), DMatrix::zeros(2, 2)])
            .unwrap();
        assert_eq!(z.matrix(), &DMatrix::zeros(2, 2));
        assert!(gaussian_cfim(&DMatrix::zeros(1, 1), &[DMatrix::zeros(1, 1)]).is_err());
    }

    #[test]
    fn closed_form_examples() {
        let r = 1f64.asinh();
        let cf = homodyne_cfim_closed_form(&[1.0], r).unwrap();
        assert!((cf.alpha - 40.0 / 3.0).abs() < 1e-12);
        assert!((cf.beta - 8.0 / 3.0).abs() < 1e-12);
        assert!((cf.fisher[(0, 0)] - 16.0).abs() < 1e-12);
        let cf = homodyne_cfim_closed_form(&[0.5, 0.5], r).unwrap();
        assert!((cf.ccrb - 1.0 / 16.0).abs() < 1e-15);
        let cf = homodyne_cfim_closed_form(&[0.3, 0.7], 0.0).unwrap();
        assert_eq!(cf.fisher, DMatrix::zeros(2, 2));
        assert!(homodyne_cfim_closed_form(&[0.3, -0.7], 0.5).is_err());
    }

    #[test]
    fn homodyne_derivatives_match_central_differences() {
        let probe = GaussianState::vacuum(3)
            .unwrap()
            .apply(&squeezer(0.7, 0.3, 0, 3).unwrap())
            .unwrap()
            .apply(&squeezer(0.4, -1.0, 2, 3).unwrap())
            .unwrap()
            .apply(&beam_splitter(0.5, 0, 1, 3).unwrap())
            .unwrap()
            .apply(&beam_splitter(FRAC_PI_4, 1, 2, 3).unwrap())
            .unwrap();
        let phases = [0.2, -0.4, 1.1];
        let angles = [0.3, 0.9, -0.2];
        let (_, dcov) = homodyne_covariance(&probe, &phases, &angles).unwrap();
        let h = 1e-6;
        for k in 0..3 {
            let mut up = phases;
            let mut dn = phases;
            up[k] += h;
            dn[k] -= h;
            let (cu, _) = homodyne_covariance(&probe, &up, &angles).unwrap();
            let (cd, _) = homodyne_covariance(&probe, &dn, &angles).unwrap();
            let fd = (cu - cd) / (2.0 * h);
            assert!((&fd - &dcov[k]).amax() < 1e-8, "k={k}");
        }
    }

    #[test]
    fn single_mode_homodyne_peak_is_the_qfi() {
        let n: f64 = 3.0;
        let r = n.sqrt().asinh();
        let psi = 0.5 * (-(2.0 * r).tanh()).acos();
        let f = single_mode_homodyne_information(r, psi);
        assert!((f - 8.0 * n * (n + 1.0)).abs() < 1e-9);
    }
}
