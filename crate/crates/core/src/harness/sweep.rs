use rayon::prelude::*;
use serde::Serialize;

use super::csv::{fmt_float, CsvTable};
use super::grids::comparison_grids;
use super::norms::{cdf_norm_between, sup_norm_between};
use super::{HarnessError, Result};
use crate::solution::{mean_binding_doi, mean_binding_smol, mean_diff, rel_diff, SpectralSolution};
use crate::spectral::{doi_eigenvalues, smol_eigenvalues, Geometry, Model};

/// One `(lambda, r_b)` cell of a parameter study.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StudyRow {
    pub lambda: f64,
    pub r_b: f64,
    pub norm_density_scaled: f64,
    pub norm_density_raw: f64,
    pub norm_cdf: f64,
    pub mean_doi: f64,
    pub mean_smol: f64,
    pub mean_diff: f64,
    pub rel_diff: f64,
    pub error: Option<String>,
}

pub const STUDY_HEADER: [&str; 10] = [
    "lambda",
    "r_b",
    "norm_density_scaled",
    "norm_density_raw",
    "norm_cdf",
    "mean_doi",
    "mean_smol",
    "mean_diff",
    "rel_diff",
    "error",
];

impl StudyRow {
    fn failed(lambda: f64, r_b: f64, error: String) -> Self {
        Self {
            lambda,
            r_b,
            norm_density_scaled: f64::NAN,
            norm_density_raw: f64::NAN,
            norm_cdf: f64::NAN,
            mean_doi: f64::NAN,
            mean_smol: f64::NAN,
            mean_diff: f64::NAN,
            rel_diff: f64::NAN,
            error: Some(error),
        }
    }

    pub fn csv_cells(&self) -> Vec<String> {
        let mut cells: Vec<String> = [
            self.lambda,
            self.r_b,
            self.norm_density_scaled,
            self.norm_density_raw,
            self.norm_cdf,
            self.mean_doi,
            self.mean_smol,
            self.mean_diff,
            self.rel_diff,
        ]
        .iter()
        .map(|&x| fmt_float(x))
        .collect();
        cells.push(self.error.clone().unwrap_or_default().replace(',', ";"));
        cells
    }
}

pub fn study_table(rows: &[StudyRow]) -> CsvTable {
    let mut t = CsvTable::new(&STUDY_HEADER);
    for row in rows {
        t.push(row.csv_cells());
    }
    t
}

/// Evaluates one cell; `time_stride` thins the comparison times.
pub fn study_cell(
    geometry: &Geometry,
    lambda: f64,
    r0: f64,
    time_stride: usize,
) -> Result<StudyRow> {
    let grid = comparison_grids(geometry).subsample_times(time_stride);
    let t_min = grid.t_points.iter().copied().fold(f64::INFINITY, f64::min);
    let doi = SpectralSolution::delta(geometry, Model::doi_from_rate(geometry, lambda), r0, t_min)?;
    let smol = SpectralSolution::delta(geometry, Model::Smoluchowski, r0, t_min)?;
    let density = sup_norm_between(&doi, &smol, &grid)?;
    let cdf = cdf_norm_between(&doi, &smol, &grid.t_points)?;
    let error = density
        .unconverged
        .or(cdf.unconverged)
        .map(|w| format!("series truncated at r = {}, t = {}", w.r, w.t));
    Ok(StudyRow {
        lambda,
        r_b: geometry.r_b(),
        norm_density_scaled: density.value,
        norm_density_raw: density.raw,
        norm_cdf: cdf.value,
        mean_doi: mean_binding_doi(geometry, lambda, r0)?,
        mean_smol: mean_binding_smol(geometry, r0)?,
        mean_diff: mean_diff(geometry, lambda, r0)?,
        rel_diff: rel_diff(geometry, lambda, r0)?,
        error,
    })
}

/// One row per `(lambda, r_b)`, lambda-major in input order. `template`
/// supplies `R` and `D`. Failing cells carry their error and NaN values.
pub fn sweep(
    lambdas: &[f64],
    rbs: &[f64],
    template: &Geometry,
    r0: f64,
    time_stride: usize,
) -> Result<Vec<StudyRow>> {
    if lambdas.is_empty() || rbs.is_empty() {
        return Err(HarnessError::Usage(
            "sweep needs at least one lambda and one r_b".into(),
        ));
    }
    let cells: Vec<(f64, f64)> = lambdas
        .iter()
        .flat_map(|&l| rbs.iter().map(move |&r| (l, r)))
        .collect();
    Ok(cells
        .par_iter()
        .map(|&(lambda, r_b)| {
            Geometry::new(r_b, template.radius(), template.diffusivity())
                .map_err(HarnessError::from)
                .and_then(|g| study_cell(&g, lambda, r0, time_stride))
                .unwrap_or_else(|e| StudyRow::failed(lambda, r_b, e.to_string()))
        })
        .collect())
}

/// Principal eigenvalues side by side: `(n, alpha_n, mu_n, alpha_n - mu_n)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EigenRow {
    pub n: usize,
    pub alpha: f64,
    pub mu: f64,
    pub gap: f64,
}

pub fn eigen_table(geometry: &Geometry, lambda: f64, count: usize) -> Result<Vec<EigenRow>> {
    let alpha = smol_eigenvalues(geometry, count)?;
    let mu = doi_eigenvalues(geometry, geometry.lambda_hat(lambda), count)?;
    Ok(alpha
        .modes
        .iter()
        .zip(&mu.modes)
        .map(|(a, m)| EigenRow {
            n: a.n,
            alpha: a.value,
            mu: m.value,
            gap: a.value - m.value,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn template() -> Geometry {
        Geometry::new(1e-3, 1.0, 10.0).unwrap()
    }

    #[test]
    fn rows_are_lambda_major() {
        let rows = sweep(&[1e6, 1e8], &[1e-2, 1e-3], &template(), 1.0, 200).unwrap();
        let keys: Vec<(f64, f64)> = rows.iter().map(|r| (r.lambda, r.r_b)).collect();
        assert_eq!(
            keys,
            vec![(1e6, 1e-2), (1e6, 1e-3), (1e8, 1e-2), (1e8, 1e-3)]
        );
        assert!(rows.iter().all(|r| r.error.is_none()));
        assert_eq!(study_table(&rows).render().lines().count(), 5);
    }

    #[test]
    fn bad_cells_are_reported_not_fatal() {
        let rows = sweep(&[1e6], &[1e-2, 2.0], &template(), 1.0, 200).unwrap();
        assert!(rows[0].error.is_none());
        assert!(rows[1].error.is_some() && rows[1].mean_doi.is_nan());
        assert!(sweep(&[], &[1e-2], &template(), 1.0, 1).is_err());
    }

    #[test]
    fn large_rate_shrinks_difference() {
        let g = template();
        let slow = study_cell(&g, 1e6, 1.0, 100).unwrap();
        let fast = study_cell(&g, 1e14, 1.0, 100).unwrap();
        assert!(slow.norm_density_scaled / fast.norm_density_scaled >= 10.0);
        assert!(slow.norm_cdf > fast.norm_cdf);
    }

    #[test]
    fn eigen_rows_have_positive_gaps() {
        let rows = eigen_table(&template(), 1e9, 10).unwrap();
        assert_eq!(rows.len(), 10);
        assert!(rows.iter().all(|r| r.gap > 0.0 && r.gap == r.alpha - r.mu));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(6))]

        #[test]
        fn permuting_inputs_only_permutes_rows(seed in any::<u64>()) {
            let mut lambdas = vec![1e5, 1e7, 1e9];
            let mut rbs = vec![1e-2, 1e-3];
            let base = sweep(&lambdas, &rbs, &template(), 1.0, 500).unwrap();
            lambdas.rotate_left((seed % 3) as usize);
            if seed & 4 != 0 {
                rbs.reverse();
            }
            let moved = sweep(&lambdas, &rbs, &template(), 1.0, 500).unwrap();
            for row in &moved {
                let twin = base.iter().find(|b| b.lambda == row.lambda && b.r_b == row.r_b).unwrap();
                prop_assert_eq!(twin.csv_cells(), row.csv_cells());
            }
        }
    }
}
