//! Evaluates both densities for a release at the outer wall and prints a few
//! radial profiles, plus the largest pointwise difference on the study grid.
//!
//! cargo run --release --example density_series

use doismol::harness::{comparison_grids, density_diff_on};
use doismol::solution::SpectralSolution;
use doismol::spectral::{Geometry, Model};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = Geometry::new(1e-2, 1.0, 10.0)?;
    let lambda = 1e6;
    let doi = SpectralSolution::delta(&g, Model::doi_from_rate(&g, lambda), 1.0, 1e-3)?;
    let smol = SpectralSolution::delta(&g, Model::Smoluchowski, 1.0, 1e-3)?;

    let radii = [0.005, 0.01, 0.0101, 0.05, 0.25, 0.5, 1.0];
    for t in [1e-3, 1e-2, 0.1, 1.0] {
        println!("t = {t} s");
        for &r in &radii {
            // The Smoluchowski density is only defined outside the target.
            let rho = if r >= g.r_b() {
                format!("{:.6e}", smol.density(r, t)?)
            } else {
                "-".into()
            };
            println!(
                "  r = {r:<7} p_doi = {:.6e}  rho_smol = {rho}",
                doi.density(r, t)?
            );
        }
    }

    let grid = comparison_grids(&g).subsample_times(10);
    let norm = density_diff_on(&g, lambda, 1.0, &grid)?;
    println!(
        "\nsup |p - rho| = {:.4e} (x4pi: {:.4e}) at r = {:?}, t = {}",
        norm.value, norm.raw, norm.r, norm.t
    );
    Ok(())
}
