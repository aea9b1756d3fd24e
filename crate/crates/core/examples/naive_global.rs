//! Ignoring the weight signs: one squeezed vacuum spread over every mode.

use distsense::bounds::appendix_d_triple;
use distsense::schemes::{evaluate_scheme, SchemeKind, SchemeSpec};
use distsense::WeightVector;

fn main() -> distsense::Result<()> {
    for (m, nbar) in [(2usize, 1.0), (4, 1.0), (6, 2.0)] {
        let raw: Vec<f64> = (0..m).map(|i| if i < m / 2 { 1.0 } else { -1.0 }).collect();
        let w = WeightVector::new(raw)?;
        let n = m as f64 * nbar;
        let (naive, product, two_group) = appendix_d_triple(m, nbar)?;
        let mut measured = Vec::new();
        for kind in [SchemeKind::NaiveGlobal, SchemeKind::ProductSqueezed, SchemeKind::TwoGroup] {
            let spec = SchemeSpec::new(kind, w.clone(), n)?;
            measured.push(evaluate_scheme(&spec, None, &w)?.qcrb);
        }
        println!("M={m} n={nbar}: closed form ({naive:.6}, {product:.6}, {two_group:.6}), probes {measured:.6?}");
    }
    Ok(())
}
