//! The two-group probe: photon split, block structure and saturation of the bound.

use distsense::bounds::{allocate_groups, proposed_bound};
use distsense::schemes::{evaluate_scheme, SchemeKind, SchemeSpec};
use distsense::WeightVector;

fn main() -> distsense::Result<()> {
    let w = WeightVector::new(vec![0.35, 0.15, -0.3, -0.2])?;
    let n = 8.0;
    let alloc = allocate_groups(&w, n)?;
    println!("group photons (+, -): {:?}", alloc.n_bar);
    let spec = SchemeSpec::new(SchemeKind::TwoGroup, w.clone(), n)?;
    let probe = spec.build_probe()?;
    println!("covariance matrix:\n{}", probe.gamma());
    let report = evaluate_scheme(&spec, None, &w)?;
    println!("qcrb           {:.10e}", report.qcrb);
    println!("proposed bound {:.10e}", proposed_bound(&w, n)?);
    println!("homodyne ccrb  {:.10e}", report.homodyne_ccrb.unwrap_or(f64::NAN));
    Ok(())
}
