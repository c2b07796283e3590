//! Smoluchowski eigenvalues, their poles and the Doi eigenvalues for a small
//! target, showing the interlacing and how fast the gap closes with the rate.
//!
//! cargo run --release --example eigen_spectrum

use doismol::spectral::{doi_eigenvalues, smol_eigenvalues, smol_poles, Geometry};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = Geometry::new(1e-3, 1.0, 10.0)?;
    let lambda = 1e9;
    let lh = g.lambda_hat(lambda);
    let alpha = smol_eigenvalues(&g, 8)?.values();
    let beta = smol_poles(&g, 8)?;
    let mu = doi_eigenvalues(&g, lh, 8)?.values();

    println!(
        "r_b = {}, lambda = {lambda:e} 1/s (lambda_hat = {lh:e})",
        g.r_b()
    );
    println!(
        "{:>3} {:>14} {:>14} {:>14} {:>12}",
        "n", "mu_n", "alpha_n", "beta_n", "alpha-mu"
    );
    for n in 0..8 {
        println!(
            "{:>3} {:>14.6} {:>14.6} {:>14.6} {:>12.3e}",
            n + 1,
            mu[n],
            alpha[n],
            beta[n],
            alpha[n] - mu[n]
        );
    }

    println!("\ngap (alpha_1 - mu_1) * sqrt(lambda_hat) at r_b = 1e-2:");
    let g = Geometry::new(1e-2, 1.0, 10.0)?;
    let a1 = smol_eigenvalues(&g, 1)?.values()[0];
    for lh in [1e6, 1e7, 1e8, 1e9] {
        let m1 = doi_eigenvalues(&g, lh, 1)?.values()[0];
        println!("  lambda_hat {lh:e}: {:.5}", (a1 - m1) * lh.sqrt());
    }
    Ok(())
}
