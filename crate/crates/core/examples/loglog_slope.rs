//! Convergence rate of the CDF norm in the reaction rate, estimated by a
//! log-log least-squares fit.
//!
//! cargo run --release --example loglog_slope

use doismol::harness::sup_norm_cdf_diff;
use doismol::numerics::loglog_slope;
use doismol::spectral::Geometry;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = Geometry::new(1e-3, 1.0, 10.0)?;
    let mut points = Vec::new();
    for k in 0..9 {
        let lambda = 10f64.powf(7.0 + 0.5 * k as f64);
        let n = sup_norm_cdf_diff(&g, lambda, 1.0)?;
        println!(
            "lambda {lambda:9.3e}: sup |F_doi - F_smol| = {:.4e}",
            n.value
        );
        points.push((lambda, n.value));
    }
    let fit = loglog_slope(&points)?;
    println!(
        "slope {:.4}, intercept {:.4}, rms {:.2e}",
        fit.slope, fit.intercept, fit.residual_rms
    );
    Ok(())
}
