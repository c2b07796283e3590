use std::f64::consts::PI;

use serde::Serialize;

use super::grids::{comparison_grids, GridSpec};
use super::Result;
use crate::solution::{SpectralSolution, Worst};
use crate::spectral::{Geometry, Model};

/// A maximum absolute difference and where it was attained.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NormReport {
    /// Norm of the 4π-scaled densities (or of the CDFs).
    pub value: f64,
    /// Norm of the unscaled densities; equal to `value` for CDFs.
    pub raw: f64,
    pub r: Option<f64>,
    pub t: f64,
    /// First cell where either series hit its mode cap.
    pub unconverged: Option<Worst>,
}

fn t_min(ts: &[f64]) -> f64 {
    ts.iter().copied().fold(f64::INFINITY, f64::min)
}

/// `max |a - b|` of two density series over `grid`.
pub fn sup_norm_between(
    a: &SpectralSolution,
    b: &SpectralSolution,
    grid: &GridSpec,
) -> Result<NormReport> {
    let ga = a.density_grid(&grid.r_points, &grid.t_points)?;
    let gb = b.density_grid(&grid.r_points, &grid.t_points)?;
    let n_r = grid.r_points.len();
    let (mut best, mut at) = (0.0f64, 0);
    for (k, (x, y)) in ga.values.iter().zip(&gb.values).enumerate() {
        let d = (x - y).abs();
        if d > best {
            best = d;
            at = k;
        }
    }
    let unscale = |s: &SpectralSolution| if s.scale_4pi { 4.0 * PI } else { 1.0 };
    let raw = if a.scale_4pi == b.scale_4pi {
        best * unscale(a)
    } else {
        f64::NAN
    };
    Ok(NormReport {
        value: best,
        raw,
        r: grid.r_points.get(at % n_r.max(1)).copied(),
        t: grid
            .t_points
            .get(at / n_r.max(1))
            .copied()
            .unwrap_or(f64::NAN),
        unconverged: ga.unconverged.or(gb.unconverged),
    })
}

/// Density difference between the two models on an arbitrary grid.
pub fn density_diff_on(
    geometry: &Geometry,
    lambda: f64,
    r0: f64,
    grid: &GridSpec,
) -> Result<NormReport> {
    let tm = t_min(&grid.t_points);
    let doi = SpectralSolution::delta(geometry, Model::doi_from_rate(geometry, lambda), r0, tm)?;
    let smol = SpectralSolution::delta(geometry, Model::Smoluchowski, r0, tm)?;
    sup_norm_between(&doi, &smol, grid)
}

/// `max |p_lambda - rho|` over the comparison grid, densities 4π-scaled.
pub fn sup_norm_density_diff(geometry: &Geometry, lambda: f64, r0: f64) -> Result<NormReport> {
    density_diff_on(geometry, lambda, r0, &comparison_grids(geometry))
}

/// `max |F_a - F_b|` of two binding-time CDFs over `ts`.
pub fn cdf_norm_between(
    a: &SpectralSolution,
    b: &SpectralSolution,
    ts: &[f64],
) -> Result<NormReport> {
    let mut report = NormReport {
        value: 0.0,
        raw: 0.0,
        r: None,
        t: f64::NAN,
        unconverged: None,
    };
    for &t in ts {
        let sa = a.survival_series(t)?;
        let sb = b.survival_series(t)?;
        if report.unconverged.is_none() {
            for s in [sa, sb] {
                if !s.converged {
                    report.unconverged = Some(Worst {
                        r: f64::NAN,
                        t,
                        last_term: s.last_term,
                    });
                }
            }
        }
        let d = (sa.value - sb.value).abs();
        if d > report.value {
            report.value = d;
            report.raw = d;
            report.t = t;
        }
    }
    Ok(report)
}

pub fn cdf_diff_on(geometry: &Geometry, lambda: f64, r0: f64, ts: &[f64]) -> Result<NormReport> {
    let tm = t_min(ts);
    let doi = SpectralSolution::delta(geometry, Model::doi_from_rate(geometry, lambda), r0, tm)?;
    let smol = SpectralSolution::delta(geometry, Model::Smoluchowski, r0, tm)?;
    cdf_norm_between(&doi, &smol, ts)
}

/// `max |P[T_Doi <= t] - P[T_Smol <= t]|` over the comparison times.
pub fn sup_norm_cdf_diff(geometry: &Geometry, lambda: f64, r0: f64) -> Result<NormReport> {
    cdf_diff_on(geometry, lambda, r0, &comparison_grids(geometry).t_points)
}
