//! Multimode Gaussian states and symplectic gates.

mod network;
mod state;
mod symplectic;

pub use network::{bsn_angles, build_bsn_from_weights, passive_first_column};
pub use state::{
    pure_state_overlap, GaussianState, PURITY_TOL, SYMMETRY_TOL, UNCERTAINTY_TOL, ZERO_MEAN_TOL,
};
pub(crate) use state::log_overlap_sq;
pub use symplectic::{
    beam_splitter, omega, phase_shifter, phase_shifts, rotation_block, squeezer,
    squeezing_for_photons, SymplecticMatrix, SYMPLECTIC_TOL,
};
