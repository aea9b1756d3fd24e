//! Signed weight vectors defining the global parameter `wᵀφ`.

use crate::error::{invalid, Result};

/// Weights smaller than this in magnitude are rejected.
pub const MIN_WEIGHT: f64 = 1e-14;

/// A signed weight vector, L1-normalized at construction.
///
/// The raw weights are kept for reporting; every bound works with the
/// normalized ones.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    raw: Vec<f64>,
    normalized: Vec<f64>,
    pos_modes: Vec<usize>,
    neg_modes: Vec<usize>,
}

impl WeightVector {
    pub fn new(raw: Vec<f64>) -> Result<Self> {
        if raw.is_empty() {
            return Err(invalid("weight vector is empty"));
        }
        for (i, &w) in raw.iter().enumerate() {
            if !w.is_finite() {
                return Err(invalid(format!("weight {i} is not finite")));
            }
            if w.abs() < MIN_WEIGHT {
                return Err(invalid(format!("weight {i} is zero (|w| < {MIN_WEIGHT:e})")));
            }
        }
        let norm: f64 = raw.iter().map(|w| w.abs()).sum();
        let normalized = raw.iter().map(|w| w / norm).collect();
        let pos_modes = (0..raw.len()).filter(|&i| raw[i] > 0.0).collect();
        let neg_modes = (0..raw.len()).filter(|&i| raw[i] < 0.0).collect();
        Ok(Self {
            raw,
            normalized,
            pos_modes,
            neg_modes,
        })
    }

    pub fn len(&self) -> usize {
        self.raw.len()
    }

    pub fn is_empty(&self) -> bool {
        self.raw.is_empty()
    }

    pub fn raw(&self) -> &[f64] {
        &self.raw
    }

    /// Normalized weights, `‖w‖₁ = 1`.
    pub fn as_slice(&self) -> &[f64] {
        &self.normalized
    }

    pub fn pos_modes(&self) -> &[usize] {
        &self.pos_modes
    }

    pub fn neg_modes(&self) -> &[usize] {
        &self.neg_modes
    }

    pub fn is_single_sign(&self) -> bool {
        self.pos_modes.is_empty() || self.neg_modes.is_empty()
    }

    /// Normalized weights restricted to `modes`, in that order.
    pub fn select(&self, modes: &[usize]) -> Vec<f64> {
        modes.iter().map(|&i| self.normalized[i]).collect()
    }

    /// `(‖w₊‖₁, ‖w₋‖₁)` of the normalized weights.
    pub fn group_norms(&self) -> (f64, f64) {
        let pos = self.pos_modes.iter().map(|&i| self.normalized[i]).sum();
        let neg = self.neg_modes.iter().map(|&i| -self.normalized[i]).sum();
        (pos, neg)
    }

    /// The non-empty sign groups as index lists, positive group first.
    pub fn sign_groups(&self) -> Vec<&[usize]> {
        [self.pos_modes.as_slice(), self.neg_modes.as_slice()]
            .into_iter()
            .filter(|g| !g.is_empty())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_and_partitions() {
        let w = WeightVector::new(vec![2.0, -1.0, 1.0]).unwrap();
        assert_eq!(w.as_slice(), &[0.5, -0.25, 0.25]);
        assert_eq!(w.raw(), &[2.0, -1.0, 1.0]);
        assert_eq!(w.pos_modes(), &[0, 2]);
        assert_eq!(w.neg_modes(), &[1]);
        assert_eq!(w.group_norms(), (0.75, 0.25));
        assert!(!w.is_single_sign());
    }

    #[test]
    fn rejects_zero_and_empty() {
        assert!(WeightVector::new(vec![]).is_err());
        assert!(WeightVector::new(vec![0.0]).is_err());
        assert!(WeightVector::new(vec![1.0, 1e-15]).is_err());
        assert!(WeightVector::new(vec![f64::NAN]).is_err());
    }

    #[test]
    fn single_sign_groups() {
        let w = WeightVector::new(vec![-1.0, -3.0]).unwrap();
        assert!(w.is_single_sign());
        assert_eq!(w.sign_groups().len(), 1);
        assert_eq!(w.group_norms(), (0.0, 1.0));
    }
}
