//! Named sensing strategies: how the probe is prepared and how it is read out.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::bounds::{allocate_groups, allocate_product};
use crate::error::{invalid, unsupported, Result};
use crate::fisher::{homodyne_cfim_for_state, qfim_pure};
use crate::gaussian::{
    beam_splitter, build_bsn_from_weights, squeezer, squeezing_for_photons, GaussianState,
};
use crate::weights::WeightVector;

/// Relative tolerance on the photon budget of a built probe.
pub const ENERGY_TOL: f64 = 1e-8;

/// Inputs of the two-mode family: two squeezed displaced states mixed on a
/// beam splitter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CustomTwoModeParams {
    pub r1: f64,
    pub varphi1: f64,
    pub r2: f64,
    pub varphi2: f64,
    pub alpha1: Complex64,
    pub alpha2: Complex64,
    pub theta: f64,
}

impl CustomTwoModeParams {
    pub fn photon_number(&self) -> f64 {
        self.r1.sinh().powi(2)
            + self.r2.sinh().powi(2)
            + self.alpha1.norm_sqr()
            + self.alpha2.norm_sqr()
    }

    /// `B(θ) · D₁(α₁)S₁(ξ₁) · D₂(α₂)S₂(ξ₂) |0⟩`.
    pub fn build_probe(&self) -> Result<GaussianState> {
        GaussianState::vacuum(2)?
            .apply(&squeezer(self.r1, self.varphi1, 0, 2)?)?
            .displace(0, self.alpha1.re, self.alpha1.im)?
            .apply(&squeezer(self.r2, self.varphi2, 1, 2)?)?
            .displace(1, self.alpha2.re, self.alpha2.im)?
            .apply(&beam_splitter(self.theta, 0, 1, 2)?)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum SchemeKind {
    /// Coherent states with `N̄ᵢ = |wᵢ| N̄`.
    CoherentProduct,
    /// Independent squeezed vacua at the optimal product allocation.
    ProductSqueezed,
    /// One squeezed vacuum per sign group, spread by a weight-matched network.
    TwoGroup,
    /// One squeezed vacuum spread over all modes by `|w|`, ignoring signs.
    NaiveGlobal,
    CustomTwoMode(CustomTwoModeParams),
}

impl SchemeKind {
    pub fn name(&self) -> &'static str {
        match self {
            SchemeKind::CoherentProduct => "coherent-product",
            SchemeKind::ProductSqueezed => "product-squeezed",
            SchemeKind::TwoGroup => "two-group",
            SchemeKind::NaiveGlobal => "naive-global",
            SchemeKind::CustomTwoMode(_) => "custom-two-mode",
        }
    }
}

/// A squeezed vacuum feeding a set of modes through a passive network.
#[derive(Debug, Clone, PartialEq)]
pub struct SqueezedGroup {
    pub modes: Vec<usize>,
    pub r: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SchemeSpec {
    kind: SchemeKind,
    weights: WeightVector,
    n_total: f64,
}

impl SchemeSpec {
    pub fn new(kind: SchemeKind, weights: WeightVector, n_total: f64) -> Result<Self> {
        if !(n_total.is_finite() && n_total > 0.0) {
            return Err(invalid(format!("n_total must be positive, got {n_total}")));
        }
        if let SchemeKind::CustomTwoMode(p) = &kind {
            if weights.len() != 2 {
                return Err(invalid("custom-two-mode scheme needs exactly two weights"));
            }
            let n = p.photon_number();
            if (n - n_total).abs() > ENERGY_TOL * n_total {
                return Err(invalid(format!(
                    "custom-two-mode parameters carry {n} photons, n_total is {n_total}"
                )));
            }
        }
        Ok(Self {
            kind,
            weights,
            n_total,
        })
    }

    pub fn kind(&self) -> &SchemeKind {
        &self.kind
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn n_total(&self) -> f64 {
        self.n_total
    }

    pub fn n_modes(&self) -> usize {
        self.weights.len()
    }

    /// True when the probe has zero first moments by construction.
    pub fn is_zero_mean(&self) -> bool {
        match &self.kind {
            SchemeKind::CoherentProduct => false,
            SchemeKind::CustomTwoMode(p) => p.alpha1.norm() == 0.0 && p.alpha2.norm() == 0.0,
            _ => true,
        }
    }

    /// The squeezed inputs and the modes each one reaches.
    pub fn squeezed_groups(&self) -> Result<Vec<SqueezedGroup>> {
        let w = &self.weights;
        match &self.kind {
            SchemeKind::CoherentProduct | SchemeKind::CustomTwoMode(_) => Err(unsupported(format!(
                "{} is not a squeezed-vacuum scheme",
                self.kind.name()
            ))),
            SchemeKind::ProductSqueezed => {
                let alloc = allocate_product(w, self.n_total)?;
                Ok(alloc
                    .n_bar
                    .iter()
                    .enumerate()
                    .map(|(i, &n)| SqueezedGroup {
                        modes: vec![i],
                        r: squeezing_for_photons(n),
                    })
                    .collect())
            }
            SchemeKind::TwoGroup => {
                let alloc = allocate_groups(w, self.n_total)?;
                Ok([w.pos_modes(), w.neg_modes()]
                    .into_iter()
                    .zip(&alloc.n_bar)
                    .filter(|(modes, _)| !modes.is_empty())
                    .map(|(modes, &n)| SqueezedGroup {
                        modes: modes.to_vec(),
                        r: squeezing_for_photons(n),
                    })
                    .collect())
            }
            SchemeKind::NaiveGlobal => Ok(vec![SqueezedGroup {
                modes: (0..w.len()).collect(),
                r: squeezing_for_photons(self.n_total),
            }]),
        }
    }

    /// Prepares the probe state (before phase encoding).
    pub fn build_probe(&self) -> Result<GaussianState> {
        let m = self.n_modes();
        let w = &self.weights;
        match &self.kind {
            SchemeKind::CoherentProduct => {
                let mut state = GaussianState::vacuum(m)?;
                for (i, wi) in w.as_slice().iter().enumerate() {
                    state = state.displace(i, (wi.abs() * self.n_total).sqrt(), 0.0)?;
                }
                Ok(state)
            }
            SchemeKind::CustomTwoMode(p) => p.build_probe(),
            _ => {
                let mut state = GaussianState::vacuum(m)?;
                for group in self.squeezed_groups()? {
                    state = state.apply(&squeezer(group.r, 0.0, group.modes[0], m)?)?;
                    let magnitudes: Vec<f64> =
                        group.modes.iter().map(|&i| w.as_slice()[i].abs()).collect();
                    let bsn = build_bsn_from_weights(&magnitudes)?.embed(&group.modes, m)?;
                    state = state.apply(&bsn)?;
                }
                Ok(state)
            }
        }
    }
}

/// Optimal homodyne angles and the shared effective phase offset of each
/// squeezed group (`φᵢ − θᵢ` for every mode of the group).
#[derive(Debug, Clone, PartialEq)]
pub struct HomodyneSettings {
    pub angles: Vec<f64>,
    pub offsets: Vec<f64>,
}

const OFFSET_GRID: usize = 180;

/// Angles maximizing the homodyne information on `wᵀφ`, one shared offset per
/// squeezed group.
///
/// Candidate offsets from both analytic conventions (`½ arccos(tanh 2r)` and
/// `arccos(tanh 2r)`, each with its mirror) are scanned together with a
/// uniform grid on `[0, π)`, and the best is refined by golden-section search.
pub fn homodyne_settings(spec: &SchemeSpec, phases: &[f64]) -> Result<HomodyneSettings> {
    let m = spec.n_modes();
    if phases.len() != m {
        return Err(invalid(format!("need {m} phases, got {}", phases.len())));
    }
    let groups = spec.squeezed_groups()?;
    let probe = spec.build_probe()?;
    let w = spec.weights().as_slice();
    let mut angles = vec![0.0; m];
    let mut offsets = Vec::with_capacity(groups.len());
    for group in &groups {
        let sub = probe.reduced(&group.modes)?;
        let sub_w: Vec<f64> = group.modes.iter().map(|&i| w[i]).collect();
        let info = |psi: f64| -> f64 {
            let zeros = vec![0.0; group.modes.len()];
            let angles = vec![-psi; group.modes.len()];
            homodyne_cfim_for_state(&sub, &zeros, &angles)
                .and_then(|f| f.bound_for(&sub_w))
                .map(|b| if b > 0.0 { 1.0 / b } else { 0.0 })
                .unwrap_or(0.0)
        };
        let t = (2.0 * group.r).tanh();
        let half = 0.5 * t.acos();
        let seeds = [half, PI - half, 0.5 * PI - half, 0.5 * PI + half, t.acos(), PI - t.acos()];
        let step = PI / OFFSET_GRID as f64;
        let (mut best, mut best_val) = (0.0, f64::NEG_INFINITY);
        for psi in (0..OFFSET_GRID).map(|k| k as f64 * step).chain(seeds) {
            let v = info(psi);
            if v > best_val {
                best = psi;
                best_val = v;
            }
        }
        let psi = golden_section_max(&info, best - step, best + step, 1e-13);
        let psi = if info(psi) >= best_val { psi } else { best };
        let psi = psi.rem_euclid(PI);
        for &i in &group.modes {
            angles[i] = phases[i] - psi;
        }
        offsets.push(psi);
    }
    Ok(HomodyneSettings { angles, offsets })
}

/// Optimal homodyne angles for the scheme at the given phases.
pub fn homodyne_angles(spec: &SchemeSpec, phases: &[f64]) -> Result<Vec<f64>> {
    Ok(homodyne_settings(spec, phases)?.angles)
}

fn golden_section_max(f: &dyn Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while (b - a).abs() > tol {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    0.5 * (a + b)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SchemeReport {
    pub qcrb: f64,
    /// Present for zero-mean squeezed-vacuum schemes.
    pub homodyne_ccrb: Option<f64>,
    pub homodyne: Option<HomodyneSettings>,
}

/// QCRB of the scheme's probe for `w`, plus the homodyne CCRB at optimal
/// angles when the probe is a zero-mean squeezed-vacuum scheme. Phases default
/// to zero.
pub fn evaluate_scheme(
    spec: &SchemeSpec,
    phases: Option<&[f64]>,
    w: &WeightVector,
) -> Result<SchemeReport> {
    let m = spec.n_modes();
    if w.len() != m {
        return Err(invalid(format!("{}-mode weights for a {m}-mode scheme", w.len())));
    }
    let zeros = vec![0.0; m];
    let phases = phases.unwrap_or(&zeros);
    let probe = spec.build_probe()?;
    let qcrb = crate::fisher::qcrb(&qfim_pure(&probe)?, w)?;
    let squeezed_only = matches!(
        spec.kind(),
        SchemeKind::ProductSqueezed | SchemeKind::TwoGroup | SchemeKind::NaiveGlobal
    );
    let (homodyne_ccrb, homodyne) = if squeezed_only {
        let settings = homodyne_settings(spec, phases)?;
        let f = homodyne_cfim_for_state(&probe, phases, &settings.angles)?;
        (Some(f.bound_for(w.as_slice())?), Some(settings))
    } else {
        (None, None)
    };
    Ok(SchemeReport {
        qcrb,
        homodyne_ccrb,
        homodyne,
    })
}
