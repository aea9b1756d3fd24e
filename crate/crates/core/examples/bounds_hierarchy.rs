//! Closed-form bounds for a few weight vectors across photon numbers.

use distsense::bounds::{heisenberg_envelope, product_squeezed_bound, proposed_bound, sql_bound};
use distsense::WeightVector;

fn main() -> distsense::Result<()> {
    let cases = [vec![0.5, -0.5], vec![0.7, -0.3], vec![0.25, 0.25, 0.25, 0.25], vec![0.4, -0.1, 0.3, -0.2]];
    println!("{:<24} {:>7} {:>12} {:>12} {:>12} {:>12}", "weights", "N", "sql", "product", "proposed", "envelope");
    for raw in cases {
        let w = WeightVector::new(raw.clone())?;
        for n in [1.0, 10.0, 100.0] {
            println!(
                "{:<24} {:>7} {:>12.5e} {:>12.5e} {:>12.5e} {:>12.5e}",
                format!("{raw:?}"),
                n,
                sql_bound(&w, n),
                product_squeezed_bound(&w, n)?,
                proposed_bound(&w, n)?,
                heisenberg_envelope(&w, n)
            );
        }
    }
    Ok(())
}
