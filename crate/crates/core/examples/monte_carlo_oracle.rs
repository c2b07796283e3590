//! Brownian-dynamics check of the analytic mean binding time and CDF.
//!
//! cargo run --release --example monte_carlo_oracle [paths]

use doismol::mc::{ecdf_at, simulate, McConfig, McModel};
use doismol::solution::{mean_binding_doi, mean_binding_smol, SpectralSolution};
use doismol::spectral::{Geometry, Model};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let paths: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(4000);
    let g = Geometry::new(0.1, 1.0, 10.0)?;

    let cases = [
        (
            McModel::Smoluchowski,
            Model::Smoluchowski,
            mean_binding_smol(&g, 1.0)?,
            5.0,
        ),
        (
            McModel::Doi { lambda: 1e3 },
            Model::doi_from_rate(&g, 1e3),
            mean_binding_doi(&g, 1e3, 1.0)?,
            20.0,
        ),
    ];
    for (mc_model, model, exact, t_max) in cases {
        let cfg = McConfig::new(mc_model, 5e-7, paths, 0, t_max);
        let start = std::time::Instant::now();
        let s = simulate(&g, 1.0, &cfg)?;
        println!(
            "{}: mean {:.4} +/- {:.4} (analytic {exact:.4}), {} of {} bound, censoring bias <= {:.1e}, {:.1?}",
            model.name(),
            s.mean_restricted,
            s.ci95_halfwidth,
            s.n_bound,
            s.n_paths,
            s.censoring_bias,
            start.elapsed()
        );
        let sol = SpectralSolution::delta(&g, model, 1.0, 1e-3)?;
        for t in [0.1, 0.3, 1.0] {
            let f = sol.cdf(t)?;
            let se = (f * (1.0 - f) / paths as f64).sqrt();
            println!(
                "  t = {t}: ecdf {:.4}, analytic {f:.4}, {:+.2} SE",
                ecdf_at(&s, t),
                (ecdf_at(&s, t) - f) / se
            );
        }
    }
    Ok(())
}
