//! Optimized two-mode probes as squeezing replaces displacement.

use distsense::optimizer::{sweep_ratio, TwoModeOptions};
use distsense::WeightVector;

fn main() -> distsense::Result<()> {
    let w = WeightVector::new(vec![0.7, -0.3])?;
    let grid: Vec<f64> = (0..=10).map(|k| k as f64 / 10.0).collect();
    let rows = sweep_ratio(&w, 10.0, &grid, &TwoModeOptions::default())?;
    println!("ratio   qcrb          theta    r1      r2      |a1|    |a2|   agree");
    for row in &rows {
        let Some(o) = &row.optimum else {
            println!("{:.1}     failed: {}", row.ratio, row.error.as_deref().unwrap_or(""));
            continue;
        };
        let p = &o.params;
        println!(
            "{:.1}   {:.6e}  {:+.4}  {:.4}  {:.4}  {:.4}  {:.4}  {}/16",
            row.ratio, o.qcrb, p.theta, p.r1, p.r2, p.a1_mag, p.a2_mag, o.agreeing_restarts
        );
    }
    Ok(())
}
