//! Numerical search over two-mode probes.

mod nelder_mead;
mod two_mode;

pub use nelder_mead::{nelder_mead, NelderMeadOptions, NelderMeadResult};
pub use two_mode::{
    minimize_two_mode, minimize_two_mode_with, sweep_ratio, SweepRow, TwoModeOptimum,
    TwoModeOptions, TwoModeParams, AGREEMENT_TOL, RESTART_SEED,
};
