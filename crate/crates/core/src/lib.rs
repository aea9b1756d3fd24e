//! Cramér–Rao bounds and optimal Gaussian probes for estimating a weighted
//! sum of phases across several optical modes.

pub mod bounds;
pub mod cli;
pub mod error;
pub mod estimation;
pub mod fisher;
pub mod gaussian;
pub mod nongaussian;
pub mod optimizer;
pub mod random;
pub mod schemes;
pub mod weights;

pub use error::{Error, Result};
pub use weights::WeightVector;
