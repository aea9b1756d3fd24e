use nalgebra::DMatrix;

use crate::error::{invalid, Result};

/// Tolerance for `S Ω Sᵀ = Ω`, elementwise.
pub const SYMPLECTIC_TOL: f64 = 1e-10;

/// The symplectic form `Ω = 𝟙_M ⊗ [[0, 1], [-1, 0]]` for interleaved quadratures.
pub fn omega(n_modes: usize) -> DMatrix<f64> {
    let mut om = DMatrix::zeros(2 * n_modes, 2 * n_modes);
    for k in 0..n_modes {
        om[(2 * k, 2 * k + 1)] = 1.0;
        om[(2 * k + 1, 2 * k)] = -1.0;
    }
    om
}

/// Heisenberg-picture transform of the quadrature vector, `Q → S Q`.
///
/// Acting on a state, covariance goes to `S Γ Sᵀ` and first moments to `S d`.
/// Gates compose right to left: `b.compose(&a)` applies `a` first.
#[derive(Debug, Clone, PartialEq)]
pub struct SymplecticMatrix {
    s: DMatrix<f64>,
}

impl SymplecticMatrix {
    /// Wraps a matrix after checking the symplectic condition.
    pub fn new(s: DMatrix<f64>) -> Result<Self> {
        if s.nrows() != s.ncols() || s.nrows() % 2 != 0 || s.nrows() == 0 {
            return Err(invalid(format!(
                "symplectic matrix must be 2M×2M, got {}×{}",
                s.nrows(),
                s.ncols()
            )));
        }
        let out = Self { s };
        if !out.is_symplectic(SYMPLECTIC_TOL) {
            return Err(invalid("matrix violates S Ω Sᵀ = Ω"));
        }
        Ok(out)
    }

    pub fn identity(n_modes: usize) -> Self {
        Self {
            s: DMatrix::identity(2 * n_modes, 2 * n_modes),
        }
    }

    pub fn n_modes(&self) -> usize {
        self.s.nrows() / 2
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.s
    }

    pub fn into_matrix(self) -> DMatrix<f64> {
        self.s
    }

    pub fn is_symplectic(&self, tol: f64) -> bool {
        let om = omega(self.n_modes());
        let lhs = &self.s * &om * self.s.transpose();
        (lhs - om).amax() <= tol
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn compose(&self, first: &SymplecticMatrix) -> Result<Self> {
        if self.n_modes() != first.n_modes() {
            return Err(invalid("composing symplectics of different mode counts"));
        }
        Ok(Self {
            s: &self.s * &first.s,
        })
    }

    /// `S⁻¹ = -Ω Sᵀ Ω`.
    pub fn inverse(&self) -> Self {
        let om = omega(self.n_modes());
        Self {
            s: -(&om * self.s.transpose() * &om),
        }
    }

    /// Places this gate on `modes` of a larger `n_modes` system, identity elsewhere.
    pub fn embed(&self, modes: &[usize], n_modes: usize) -> Result<Self> {
        if modes.len() != self.n_modes() {
            return Err(invalid(format!(
                "embedding a {}-mode gate on {} modes",
                self.n_modes(),
                modes.len()
            )));
        }
        for (k, &m) in modes.iter().enumerate() {
            if m >= n_modes {
                return Err(invalid(format!("mode {m} out of range for {n_modes} modes")));
            }
            if modes[..k].contains(&m) {
                return Err(invalid(format!("mode {m} listed twice")));
            }
        }
        let mut s = DMatrix::identity(2 * n_modes, 2 * n_modes);
        let index = |k: usize| 2 * modes[k / 2] + k % 2;
        for r in 0..self.s.nrows() {
            for c in 0..self.s.ncols() {
                s[(index(r), index(c))] = self.s[(r, c)];
            }
        }
        Ok(Self { s })
    }
}

fn check_mode(mode: usize, n_modes: usize) -> Result<()> {
    if n_modes == 0 {
        return Err(invalid("n_modes must be at least 1"));
    }
    if mode >= n_modes {
        return Err(invalid(format!("mode {mode} out of range for {n_modes} modes")));
    }
    Ok(())
}

/// The 2×2 phase-space rotation of `e^{-iφN̂}`: `[[cos φ, sin φ], [-sin φ, cos φ]]`.
pub fn rotation_block(phi: f64) -> [[f64; 2]; 2] {
    let (s, c) = phi.sin_cos();
    [[c, s], [-s, c]]
}

/// Phase shift `e^{-iφN̂}` on one mode.
///
/// Individual quadrature signs depend on this convention; every bound in the
/// crate is insensitive to it.
pub fn phase_shifter(phi: f64, mode: usize, n_modes: usize) -> Result<SymplecticMatrix> {
    check_mode(mode, n_modes)?;
    let mut s = DMatrix::identity(2 * n_modes, 2 * n_modes);
    let r = rotation_block(phi);
    for a in 0..2 {
        for b in 0..2 {
            s[(2 * mode + a, 2 * mode + b)] = r[a][b];
        }
    }
    Ok(SymplecticMatrix { s })
}

/// Phase shifts on every mode at once, `⊗ᵢ e^{-iφᵢN̂ᵢ}`.
pub fn phase_shifts(phases: &[f64]) -> Result<SymplecticMatrix> {
    if phases.is_empty() {
        return Err(invalid("no phases given"));
    }
    let n = phases.len();
    let mut s = DMatrix::zeros(2 * n, 2 * n);
    for (k, &phi) in phases.iter().enumerate() {
        let r = rotation_block(phi);
        for a in 0..2 {
            for b in 0..2 {
                s[(2 * k + a, 2 * k + b)] = r[a][b];
            }
        }
    }
    Ok(SymplecticMatrix { s })
}

/// Beam splitter `exp[θ(a_i†a_j − a_i a_j†)]`, which maps
/// `a_i → cos θ a_i + sin θ a_j` and `a_j → cos θ a_j − sin θ a_i`.
/// `θ = π/4` is balanced.
pub fn beam_splitter(theta: f64, i: usize, j: usize, n_modes: usize) -> Result<SymplecticMatrix> {
    check_mode(i, n_modes)?;
    check_mode(j, n_modes)?;
    if i == j {
        return Err(invalid("beam splitter needs two distinct modes"));
    }
    let (sn, c) = theta.sin_cos();
    let mut s = DMatrix::identity(2 * n_modes, 2 * n_modes);
    for q in 0..2 {
        let (xi, xj) = (2 * i + q, 2 * j + q);
        s[(xi, xi)] = c;
        s[(xi, xj)] = sn;
        s[(xj, xi)] = -sn;
        s[(xj, xj)] = c;
    }
    Ok(SymplecticMatrix { s })
}

/// Single-mode squeezer. On vacuum with `varphi = 0` it yields the covariance
/// `diag(e^{2r}, e^{-2r}) / 2`; `varphi` rotates the squeezing axis.
pub fn squeezer(r: f64, varphi: f64, mode: usize, n_modes: usize) -> Result<SymplecticMatrix> {
    check_mode(mode, n_modes)?;
    if !r.is_finite() || !varphi.is_finite() {
        return Err(invalid("squeezing parameters must be finite"));
    }
    let (ch, sh) = (r.cosh(), r.sinh());
    let (sp, cp) = varphi.sin_cos();
    let block = [[ch + sh * cp, sh * sp], [sh * sp, ch - sh * cp]];
    let mut s = DMatrix::identity(2 * n_modes, 2 * n_modes);
    for a in 0..2 {
        for b in 0..2 {
            s[(2 * mode + a, 2 * mode + b)] = block[a][b];
        }
    }
    Ok(SymplecticMatrix { s })
}

/// Squeezing magnitude whose vacuum output carries `n` photons, `sinh²r = n`.
pub fn squeezing_for_photons(n: f64) -> f64 {
    n.max(0.0).sqrt().asinh()
}
