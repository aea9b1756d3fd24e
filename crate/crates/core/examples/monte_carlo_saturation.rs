//! Sampled homodyne records and maximum-likelihood estimates approach the bound.

use distsense::bounds::proposed_bound;
use distsense::estimation::simulate;
use distsense::schemes::{SchemeKind, SchemeSpec};
use distsense::WeightVector;

fn main() -> distsense::Result<()> {
    let w = WeightVector::new(vec![0.5, -0.5])?;
    let spec = SchemeSpec::new(SchemeKind::TwoGroup, w.clone(), 10.0)?;
    println!("proposed bound {:.6e}", proposed_bound(&w, 10.0)?);
    for nu in [1_000, 10_000, 100_000] {
        let r = simulate(&spec, &[0.1, -0.2], nu, 200, 0)?;
        println!("nu={nu:>6}  Var*nu/crb = {:.4}  bias = {:+.2e}  crb = {:.6e}", r.var_ratio_to_crb, r.bias, r.crb);
    }
    Ok(())
}
