//! CSV of `f = ½ + v cos θ` against the angle between the Bloch vector and
//! the measurement axis, for a few Bloch-vector lengths. `v = ½` is the
//! pure-state curve.
//!
//! cargo run --example membership_curve > curves.csv

use fuzzybit::cli::curve;

fn main() -> fuzzybit::Result<()> {
    let norms = [0.0, 0.125, 0.25, 0.375, 0.5];
    let columns: Vec<Vec<(f64, f64)>> = norms.iter().map(|&v| curve(v, 37)).collect::<Result<_, _>>()?;
    let header: Vec<String> = norms.iter().map(|v| format!("f_v{v}")).collect();
    println!("theta,{}", header.join(","));
    for k in 0..columns[0].len() {
        let row: Vec<String> = columns.iter().map(|c| format!("{:.6}", c[k].1)).collect();
        println!("{:.6},{}", columns[0][k].0, row.join(","));
    }
    Ok(())
}
