//! Parameter sweep over reaction rates and target radii, written as CSV and
//! SVG, with the fitted log-log slope of the density norm per radius.
//!
//! cargo run --release --example convergence_sweep [out_dir]

use std::path::PathBuf;

use doismol::harness::{study_table, sweep, LinePlot, Series};
use doismol::numerics::loglog_slope;
use doismol::spectral::Geometry;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    let lambdas = [1e5, 1e6, 1e7, 1e8, 1e9];
    let rbs = [1e-2, 1e-3];
    let template = Geometry::new(1e-3, 1.0, 10.0)?;
    let rows = sweep(&lambdas, &rbs, &template, 1.0, 10)?;

    let mut series = Vec::new();
    for &rb in &rbs {
        let points: Vec<(f64, f64)> = rows
            .iter()
            .filter(|r| r.r_b == rb && r.error.is_none())
            .map(|r| (r.lambda, r.norm_density_scaled))
            .collect();
        let fit = loglog_slope(&points)?;
        println!(
            "r_b = {rb}: density norm slope {:.4} (rms {:.2e})",
            fit.slope, fit.residual_rms
        );
        series.push(Series::new(format!("r_b = {rb}"), points));
    }

    let csv = out.join("sweep.csv");
    study_table(&rows).save(&csv)?;
    let svg = out.join("sweep.svg");
    let plot = LinePlot {
        title: "Density difference vs rate".into(),
        x_label: "lambda (1/s)".into(),
        y_label: "sup |p - rho|".into(),
        log_x: true,
        log_y: true,
        series,
    };
    std::fs::write(&svg, plot.render())?;
    println!("wrote {} and {}", csv.display(), svg.display());
    Ok(())
}
