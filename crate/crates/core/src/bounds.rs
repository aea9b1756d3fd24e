//! Closed-form Cramér–Rao bounds for coherent, product-squeezed and
//! sign-grouped probes, and the photon-number allocations behind them.

use crate::error::{invalid, numerical, Result};
use crate::weights::WeightVector;

const MAX_BISECTION_ITERS: usize = 200;

/// Photon numbers per mode (or per group) and the multiplier of the
/// constrained optimum.
#[derive(Debug, Clone, PartialEq)]
pub struct AllocationResult {
    pub n_bar: Vec<f64>,
    /// `μ = −∂(bound)/∂N̄ᵢ`, the same for every entry at the optimum.
    pub lagrange_multiplier: f64,
    /// `|Σ n_bar − N̄|`.
    pub residual: f64,
}

/// `g(N) = N²(N+1)²/(2N+1)`, strictly increasing on `N ≥ 0`.
pub fn allocation_profile(n: f64) -> f64 {
    n * n * (n + 1.0).powi(2) / (2.0 * n + 1.0)
}

fn invert_profile(y: f64, n_max: f64) -> f64 {
    if y <= 0.0 {
        return 0.0;
    }
    if allocation_profile(n_max) <= y {
        return n_max;
    }
    let (mut lo, mut hi) = (0.0, n_max);
    for _ in 0..MAX_BISECTION_ITERS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if allocation_profile(mid) < y {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Minimizes `Σ cᵢ² / (8Nᵢ(Nᵢ+1))` subject to `Σ Nᵢ = N̄`.
///
/// Stationarity gives `g(Nᵢ) = λ cᵢ²`. Each `Nᵢ(λ)` is found by bisection on
/// `g`, and an outer bisection on `λ` matches the total. Zero coefficients get
/// no photons.
pub fn allocate(coefficients: &[f64], n_total: f64) -> Result<AllocationResult> {
    if !(n_total.is_finite() && n_total > 0.0) {
        return Err(invalid(format!("total photon number must be positive, got {n_total}")));
    }
    let sq: Vec<f64> = coefficients.iter().map(|c| c * c).collect();
    let min_sq = sq
        .iter()
        .copied()
        .filter(|&s| s > 0.0)
        .fold(f64::INFINITY, f64::min);
    if !min_sq.is_finite() {
        return Err(invalid("allocation needs at least one nonzero weight"));
    }
    if sq.iter().filter(|&&s| s > 0.0).count() == 1 {
        let n_bar: Vec<f64> = sq.iter().map(|&s| if s > 0.0 { n_total } else { 0.0 }).collect();
        return Ok(AllocationResult {
            n_bar,
            lagrange_multiplier: min_sq / (8.0 * allocation_profile(n_total)),
            residual: 0.0,
        });
    }
    let total_at = |lambda: f64| -> (Vec<f64>, f64) {
        let n: Vec<f64> = sq.iter().map(|&s| invert_profile(lambda * s, n_total)).collect();
        let sum = n.iter().sum();
        (n, sum)
    };

    let (mut lo, mut hi) = (0.0, allocation_profile(n_total) / min_sq);
    let mut converged = false;
    for _ in 0..MAX_BISECTION_ITERS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            converged = true;
            break;
        }
        let (_, sum) = total_at(mid);
        if (sum - n_total).abs() <= 4.0 * f64::EPSILON * n_total {
            lo = mid;
            hi = mid;
            converged = true;
            break;
        }
        if sum < n_total {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let lambda = 0.5 * (lo + hi);
    let (n_bar, sum) = total_at(lambda);
    let residual = (sum - n_total).abs();
    if !converged && residual > 1e-10 * n_total {
        return Err(numerical(format!(
            "allocation bisection did not converge (residual {residual:.3e})"
        )));
    }
    Ok(AllocationResult {
        n_bar,
        lagrange_multiplier: 1.0 / (8.0 * lambda),
        residual,
    })
}

/// SQL of a product coherent probe with `N̄ᵢ = |wᵢ| N̄`: `Σ wᵢ² / (4N̄ᵢ) = 1/(4N̄)`.
pub fn sql_bound(w: &WeightVector, n_total: f64) -> f64 {
    w.as_slice()
        .iter()
        .map(|wi| wi * wi / (4.0 * wi.abs() * n_total))
        .sum()
}

/// Optimal photon split over independent squeezed vacua.
pub fn allocate_product(w: &WeightVector, n_total: f64) -> Result<AllocationResult> {
    allocate(w.as_slice(), n_total)
}

/// `Σ wᵢ² / (8N̄ᵢ(N̄ᵢ+1))` at the optimal product allocation.
pub fn product_squeezed_bound(w: &WeightVector, n_total: f64) -> Result<f64> {
    let alloc = allocate_product(w, n_total)?;
    Ok(w.as_slice()
        .iter()
        .zip(&alloc.n_bar)
        .map(|(wi, n)| wi * wi / (8.0 * n * (n + 1.0)))
        .sum())
}

/// Best bound for a group of equal-sign weights sharing `n_group` photons:
/// `‖w‖₁² / (8N̄(N̄+1))`, whatever the magnitudes inside the group.
pub fn group_bound(w_group: &[f64], n_group: f64) -> f64 {
    let norm: f64 = w_group.iter().map(|w| w.abs()).sum();
    norm * norm / (8.0 * n_group * (n_group + 1.0))
}

/// Photon split between the positive and negative group, `[N̄₊, N̄₋]`.
/// A missing group receives zero photons.
pub fn allocate_groups(w: &WeightVector, n_total: f64) -> Result<AllocationResult> {
    let (pos, neg) = w.group_norms();
    allocate(&[pos, neg], n_total)
}

/// Two-group bound `‖w₊‖₁²/(8N̄₊(N̄₊+1)) + ‖w₋‖₁²/(8N̄₋(N̄₋+1))` at the optimal split.
pub fn proposed_bound(w: &WeightVector, n_total: f64) -> Result<f64> {
    let alloc = allocate_groups(w, n_total)?;
    let (pos, neg) = w.group_norms();
    Ok([pos, neg]
        .iter()
        .zip(&alloc.n_bar)
        .filter(|(norm, _)| **norm > 0.0)
        .map(|(norm, n)| norm * norm / (8.0 * n * (n + 1.0)))
        .sum())
}

/// `‖(‖w₊‖₁, ‖w₋‖₁)‖²_{2/3} / (8N̄²)`, a strict upper bound on
/// [`proposed_bound`] and itself at most `1/(4N̄²)`.
pub fn heisenberg_envelope(w: &WeightVector, n_total: f64) -> f64 {
    let (pos, neg) = w.group_norms();
    let p = pos.powf(2.0 / 3.0) + neg.powf(2.0 / 3.0);
    p.powi(3) / (8.0 * n_total * n_total)
}

/// Bounds for `M` modes with weights `+1/M` on the first half and `−1/M` on the
/// second, `n̄` photons per mode: `(naive_global, product, two_group)`.
///
/// The first two are `1/(4Mn̄)` and `1/(8Mn̄(n̄+1))`; the two-group value is the
/// optimum `1/(4N̄(N̄+2))` with `N̄ = Mn̄`, i.e. [`proposed_bound`] at the
/// symmetric split.
pub fn appendix_d_triple(m_modes: usize, n_per_mode: f64) -> Result<(f64, f64, f64)> {
    if m_modes == 0 || m_modes % 2 != 0 {
        return Err(invalid(format!("mode count must be even and positive, got {m_modes}")));
    }
    if !(n_per_mode.is_finite() && n_per_mode > 0.0) {
        return Err(invalid("photons per mode must be positive"));
    }
    let m = m_modes as f64;
    let n_total = m * n_per_mode;
    let naive = 1.0 / (4.0 * n_total);
    let product = 1.0 / (8.0 * m * n_per_mode * (n_per_mode + 1.0));
    let two_group = 1.0 / (4.0 * n_total * (n_total + 2.0));
    Ok((naive, product, two_group))
}
