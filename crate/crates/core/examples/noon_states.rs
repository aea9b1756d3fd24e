//! NOON and NNOO states: photon-number correlations and the bounds they give.

use distsense::nongaussian::{fock_bound, fock_photon_correlation, fock_qfim, ghz_state, GhzKind};
use distsense::WeightVector;

fn main() -> distsense::Result<()> {
    let diff = WeightVector::new(vec![0.5, -0.5])?;
    let sum = WeightVector::new(vec![0.5, 0.5])?;
    for n in 1..=6 {
        let noon = ghz_state(GhzKind::Noon, n)?;
        let nnoo = ghz_state(GhzKind::Nnoo, n)?;
        println!(
            "N={n}: noon corr {:+.2} H12 {:+.2} bound {:.5}  |  nnoo corr {:+.2} H12 {:+.2} bound {:.5}",
            fock_photon_correlation(&noon),
            fock_qfim(&noon)?.matrix()[(0, 1)],
            fock_bound(&noon, &diff)?,
            fock_photon_correlation(&nnoo),
            fock_qfim(&nnoo)?.matrix()[(0, 1)],
            fock_bound(&nnoo, &sum)?,
        );
    }
    Ok(())
}
