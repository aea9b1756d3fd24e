//! Analytic QFIM of random probes against the fidelity-based finite-difference oracle.

use distsense::fisher::{qfim_finite_difference, qfim_pure};
use distsense::random::ProbeSampler;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

fn main() -> distsense::Result<()> {
    let mut rng = ChaCha20Rng::seed_from_u64(1);
    for m in 1..=4 {
        let sampler = ProbeSampler { n_modes: m, max_squeezing: 0.8, max_displacement: 1.0 };
        let probe = sampler.sample(&mut rng)?;
        let h = qfim_pure(&probe)?;
        let fd = qfim_finite_difference(&probe, 1e-4)?;
        let err = (h.matrix() - &fd).amax() / h.matrix().amax();
        println!("M={m} N={:.3} max|H - H_fd|/max|H| = {err:.2e}", probe.total_photon_number());
        println!("{}", h.matrix());
    }
    Ok(())
}
