//! Homodyne CCRB of a single squeezed group against the QCRB, as a function of the
//! measurement offset, plus the optimum found by the library.

use distsense::fisher::{homodyne_cfim_closed_form, single_mode_homodyne_information};
use distsense::gaussian::squeezing_for_photons;
use distsense::schemes::{evaluate_scheme, SchemeKind, SchemeSpec};
use distsense::WeightVector;

fn main() -> distsense::Result<()> {
    let n = 5.0;
    let r = squeezing_for_photons(n);
    println!("single-mode information vs offset (N = {n}):");
    for k in 0..=12 {
        let psi = k as f64 * std::f64::consts::PI / 24.0;
        println!("  psi={psi:.3}  I={:.5}", single_mode_homodyne_information(r, psi));
    }
    let w = WeightVector::new(vec![0.5, 0.3, 0.2])?;
    let spec = SchemeSpec::new(SchemeKind::TwoGroup, w.clone(), n)?;
    let report = evaluate_scheme(&spec, None, &w)?;
    let closed = homodyne_cfim_closed_form(w.as_slice(), r)?;
    println!("qcrb {:.10e}", report.qcrb);
    println!("ccrb {:.10e} (closed form {:.10e})", report.homodyne_ccrb.unwrap(), closed.ccrb);
    println!("offsets {:?}", report.homodyne.unwrap().offsets);
    Ok(())
}
