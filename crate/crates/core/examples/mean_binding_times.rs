//! Closed-form mean binding times and how their difference scales with the
//! reaction rate and the target radius.
//!
//! cargo run --release --example mean_binding_times

use doismol::solution::{mean_binding_doi, mean_binding_smol, mean_diff, rel_diff};
use doismol::spectral::Geometry;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = Geometry::new(0.1, 1.0, 10.0)?;
    println!(
        "r_b = 0.1: T_smol = {:.6} s, T_doi(1e3) = {:.6} s",
        mean_binding_smol(&g, 1.0)?,
        mean_binding_doi(&g, 1e3, 1.0)?
    );

    println!(
        "\n{:>8} {:>8} {:>14} {:>14} {:>12} {:>12}",
        "r_b", "lambda", "T_doi", "T_smol", "diff", "rel"
    );
    for r_b in [1e-2, 1e-3] {
        let g = Geometry::new(r_b, 1.0, 10.0)?;
        for lambda in [1e9, 1e10, 1e11] {
            println!(
                "{r_b:>8} {lambda:>8.0e} {:>14.6} {:>14.6} {:>12.4e} {:>12.4e}",
                mean_binding_doi(&g, lambda, 1.0)?,
                mean_binding_smol(&g, 1.0)?,
                mean_diff(&g, lambda, 1.0)?,
                rel_diff(&g, lambda, 1.0)?
            );
        }
    }

    // Release inside the reactive core.
    let g = Geometry::new(0.1, 1.0, 10.0)?;
    for r0 in [0.0, 0.05, 0.1] {
        println!("T_doi(r0 = {r0}) = {:.6} s", mean_binding_doi(&g, 1e3, r0)?);
    }
    Ok(())
}
