//! Truncated eigenfunction-series solutions of the two binding models, their
//! binding-time distributions, and closed-form mean binding times.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::numerics::special::{tanh_over_excess, x_over_sinh};
use crate::numerics::{sinh_ratio, CompensatedSum};
use crate::spectral::{
    doi_eigenvalues, smol_eigenvalues, Geometry, ModeSet, Model, RadialEigenfunction, SpectralError,
};

/// Smallest time the series is evaluated at.
pub const MIN_TIME: f64 = 1e-8;
/// Below this time the series needs hundreds of modes and loses digits to
/// cancellation.
pub const SLOW_REGIME: f64 = 1e-5;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolutionError {
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error("domain error: {0}")]
    Domain(String),
    #[error(
        "series not converged after {terms} terms (partial sum {partial}, last term {last_term:e})"
    )]
    Truncated {
        partial: f64,
        last_term: f64,
        terms: usize,
    },
}

pub type Result<T> = std::result::Result<T, SolutionError>;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Truncation {
    /// The series stops at (and excludes) the first term smaller than this.
    pub term_tol: f64,
    pub max_modes: usize,
}

impl Default for Truncation {
    fn default() -> Self {
        Self {
            term_tol: 1e-10,
            max_modes: 5000,
        }
    }
}

/// Outcome of one series evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesValue {
    pub value: f64,
    /// Terms included in `value`.
    pub terms: usize,
    /// `false` when the modes ran out before a term fell below the tolerance.
    pub converged: bool,
    /// Magnitude of the last term examined.
    pub last_term: f64,
    pub slow_regime: bool,
}

impl SeriesValue {
    pub fn into_result(self) -> Result<f64> {
        if self.converged {
            Ok(self.value)
        } else {
            Err(SolutionError::Truncated {
                partial: self.value,
                last_term: self.last_term,
                terms: self.terms,
            })
        }
    }
}

/// `sum_k weights[k] * decay(k)`, stopping at the first term below `tol`.
#[inline]
fn truncated_sum(
    n: usize,
    tol: f64,
    mut term: impl FnMut(usize) -> f64,
    slow_regime: bool,
) -> SeriesValue {
    let mut sum = CompensatedSum::new();
    let mut last = f64::INFINITY;
    for k in 0..n {
        let t = term(k);
        last = t.abs();
        if last < tol {
            return SeriesValue {
                value: sum.value(),
                terms: k,
                converged: true,
                last_term: last,
                slow_regime,
            };
        }
        sum.add(t);
    }
    SeriesValue {
        value: sum.value(),
        terms: n,
        converged: false,
        last_term: last,
        slow_regime,
    }
}

/// Series solution for one model, geometry and initial condition, with the
/// modes needed down to `t_min` computed up front.
///
/// With unit-mass initial data `g` (`∫ g r^2 dr = 1`) the density is
/// `sum_n c_n (g, e_n) e_n(r) exp(-D v_n t)`, `c_n = 1 / ||e_n||^2`.
#[derive(Debug, Clone)]
pub struct SpectralSolution {
    pub truncation: Truncation,
    /// Divide densities by `4 pi` (volume density instead of radial weight).
    pub scale_4pi: bool,
    modes: ModeSet,
    r0: Option<f64>,
    t_min: f64,
    functions: Vec<RadialEigenfunction>,
    /// `c_n (g, e_n)`.
    coefficients: Vec<f64>,
    /// `∫ e_n r^2 dr`.
    moments: Vec<f64>,
    /// `D * v_n`.
    rates: Vec<f64>,
}

impl SpectralSolution {
    /// Point release at radius `r0`, `g = delta(r - r0) / r^2`.
    pub fn delta(geometry: &Geometry, model: Model, r0: f64, t_min: f64) -> Result<Self> {
        Self::delta_with(geometry, model, r0, t_min, Truncation::default())
    }

    pub fn delta_with(
        geometry: &Geometry,
        model: Model,
        r0: f64,
        t_min: f64,
        truncation: Truncation,
    ) -> Result<Self> {
        if !(r0 > geometry.r_b() && r0 <= geometry.radius()) {
            return Err(SolutionError::Domain(format!(
                "r0 = {r0} outside (r_b, R] = ({}, {}]",
                geometry.r_b(),
                geometry.radius()
            )));
        }
        let mut sol = Self::from_projection(geometry, model, t_min, truncation, |f| f.eval(r0))?;
        sol.r0 = Some(r0);
        Ok(sol)
    }

    /// General initial data through its inner products `(g, e_n)`.
    pub fn from_projection(
        geometry: &Geometry,
        model: Model,
        t_min: f64,
        truncation: Truncation,
        projection: impl Fn(&RadialEigenfunction) -> f64,
    ) -> Result<Self> {
        check_time(t_min)?;
        if let Model::Doi { lambda_hat } = model {
            if !(lambda_hat >= 0.0) {
                return Err(SolutionError::Domain(format!("lambda_hat = {lambda_hat}")));
            }
        }
        let d = geometry.diffusivity();
        let max = truncation.max_modes.max(1);
        let mut count = 32.min(max);
        loop {
            let modes = match model {
                Model::Smoluchowski => smol_eigenvalues(geometry, count)?,
                Model::Doi { lambda_hat } => doi_eigenvalues(geometry, lambda_hat, count)?,
            };
            let functions = modes.eigenfunctions();
            let coefficients: Vec<f64> = modes
                .modes
                .iter()
                .zip(&functions)
                .map(|(m, f)| m.norm_const * projection(f))
                .collect();
            let moments: Vec<f64> = functions.iter().map(|f| f.moment()).collect();
            let rates: Vec<f64> = modes.modes.iter().map(|m| d * m.value).collect();

            // Largest possible term at t_min for the last three modes.
            let tail_ok = (count.saturating_sub(3)..count).all(|k| {
                let env = coefficients[k].abs()
                    * functions[k].sup_bound().max(moments[k].abs())
                    * (-rates[k] * t_min).exp();
                env < 1e-2 * truncation.term_tol
            });
            if tail_ok || count == max {
                return Ok(Self {
                    truncation,
                    scale_4pi: true,
                    modes,
                    r0: None,
                    t_min,
                    functions,
                    coefficients,
                    moments,
                    rates,
                });
            }
            count = (2 * count).min(max);
        }
    }

    pub fn geometry(&self) -> &Geometry {
        &self.modes.geometry
    }

    pub fn model(&self) -> Model {
        self.modes.model
    }

    pub fn modes(&self) -> &ModeSet {
        &self.modes
    }

    pub fn r0(&self) -> Option<f64> {
        self.r0
    }

    pub fn t_min(&self) -> f64 {
        self.t_min
    }

    fn check_radius(&self, r: f64) -> Result<()> {
        let g = self.geometry();
        let lo = match self.model() {
            Model::Smoluchowski => g.r_b(),
            Model::Doi { .. } => 0.0,
        };
        if !(r >= lo && r <= g.radius()) {
            return Err(SolutionError::Domain(format!(
                "r = {r} outside [{lo}, {}]",
                g.radius()
            )));
        }
        Ok(())
    }

    fn density_scale(&self) -> f64 {
        if self.scale_4pi {
            1.0 / (4.0 * PI)
        } else {
            1.0
        }
    }

    /// Density at `(r, t)` with convergence diagnostics.
    pub fn density_series(&self, r: f64, t: f64) -> Result<SeriesValue> {
        self.check_radius(r)?;
        check_time(t)?;
        let tol = self.truncation.term_tol;
        let mut s = truncated_sum(
            self.coefficients.len(),
            tol,
            |k| (self.coefficients[k] * self.functions[k].eval(r)) * (-self.rates[k] * t).exp(),
            t < SLOW_REGIME,
        );
        s.value *= self.density_scale();
        Ok(s)
    }

    pub fn density(&self, r: f64, t: f64) -> Result<f64> {
        self.density_series(r, t)?.into_result()
    }

    /// Survival probability `∫ density r^2 dr` (never 4π-scaled).
    pub fn survival_series(&self, t: f64) -> Result<SeriesValue> {
        check_time(t)?;
        Ok(truncated_sum(
            self.coefficients.len(),
            self.truncation.term_tol,
            |k| (self.coefficients[k] * self.moments[k]) * (-self.rates[k] * t).exp(),
            t < SLOW_REGIME,
        ))
    }

    pub fn survival(&self, t: f64) -> Result<f64> {
        self.survival_series(t)?.into_result()
    }

    /// `P[T <= t]`.
    pub fn cdf(&self, t: f64) -> Result<f64> {
        Ok(1.0 - self.survival(t)?)
    }

    /// Densities over `rs x ts`, row-major in `t`. Agrees bit-for-bit with
    /// [`density_series`](Self::density_series) at every cell.
    pub fn density_grid(&self, rs: &[f64], ts: &[f64]) -> Result<DensityGrid> {
        for &r in rs {
            self.check_radius(r)?;
        }
        for &t in ts {
            check_time(t)?;
        }
        let n = self.coefficients.len();
        let table: Vec<Vec<f64>> = rs
            .iter()
            .map(|&r| {
                (0..n)
                    .map(|k| self.coefficients[k] * self.functions[k].eval(r))
                    .collect()
            })
            .collect();
        // envelope[k] bounds |c_j e_j(r)| over every r and every j >= k.
        let mut envelope: Vec<f64> = (0..n)
            .map(|k| table.iter().map(|row| row[k].abs()).fold(0.0, f64::max))
            .collect();
        for k in (0..n.saturating_sub(1)).rev() {
            envelope[k] = envelope[k].max(envelope[k + 1]);
        }
        let tol = self.truncation.term_tol;
        let scale = self.density_scale();
        let rows: Vec<(Vec<f64>, Option<Worst>)> = ts
            .par_iter()
            .map(|&t| {
                let mut decay = Vec::new();
                for k in 0..n {
                    let e = (-self.rates[k] * t).exp();
                    decay.push(e);
                    if envelope[k] * e < tol {
                        break;
                    }
                }
                let mut worst = None;
                let values = table
                    .iter()
                    .zip(rs)
                    .map(|(row, &r)| {
                        let s =
                            truncated_sum(decay.len(), tol, |k| row[k] * decay[k], t < SLOW_REGIME);
                        let s = if s.converged || decay.len() == n {
                            s
                        } else {
                            // Terms beyond `decay` are all under tolerance.
                            SeriesValue {
                                converged: true,
                                ..s
                            }
                        };
                        if !s.converged {
                            worst = Some(Worst {
                                r,
                                t,
                                last_term: s.last_term,
                            });
                        }
                        s.value * scale
                    })
                    .collect();
                (values, worst)
            })
            .collect();
        let mut values = Vec::with_capacity(rs.len() * ts.len());
        let mut unconverged = None;
        for (row, worst) in rows {
            values.extend(row);
            if unconverged.is_none() {
                unconverged = worst;
            }
        }
        Ok(DensityGrid {
            n_r: rs.len(),
            n_t: ts.len(),
            values,
            unconverged,
        })
    }
}

/// First non-converged cell of a grid evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Worst {
    pub r: f64,
    pub t: f64,
    pub last_term: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DensityGrid {
    pub n_r: usize,
    pub n_t: usize,
    /// `values[j * n_r + i]` is the density at `(rs[i], ts[j])`.
    pub values: Vec<f64>,
    pub unconverged: Option<Worst>,
}

impl DensityGrid {
    pub fn at(&self, i_r: usize, j_t: usize) -> f64 {
        self.values[j_t * self.n_r + i_r]
    }
}

fn check_time(t: f64) -> Result<()> {
    if !(t >= MIN_TIME && t.is_finite()) {
        return Err(SolutionError::Domain(format!(
            "t = {t} below the supported minimum {MIN_TIME}"
        )));
    }
    Ok(())
}

/// Convenience constructors with the default truncation.
pub fn density_smol(geometry: &Geometry, r0: f64, r: f64, t: f64) -> Result<f64> {
    SpectralSolution::delta(geometry, Model::Smoluchowski, r0, t)?.density(r, t)
}

pub fn density_doi(geometry: &Geometry, lambda: f64, r0: f64, r: f64, t: f64) -> Result<f64> {
    SpectralSolution::delta(geometry, Model::doi_from_rate(geometry, lambda), r0, t)?.density(r, t)
}

/// `(r_b^2 - r0^2) / 6D + (R^3 / 3D)(1/r_b - 1/r0)`.
pub fn mean_binding_smol(geometry: &Geometry, r0: f64) -> Result<f64> {
    let (r_b, radius, d) = (geometry.r_b(), geometry.radius(), geometry.diffusivity());
    if !(r0 >= r_b && r0 <= radius) {
        return Err(SolutionError::Domain(format!(
            "r0 = {r0} outside [r_b, R] = [{r_b}, {radius}]"
        )));
    }
    Ok((r_b * r_b - r0 * r0) / (6.0 * d) + radius.powi(3) / (3.0 * d) * (1.0 / r_b - 1.0 / r0))
}

fn check_rate(lambda: f64) -> Result<()> {
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(SolutionError::Domain(format!(
            "need lambda > 0, got {lambda}"
        )));
    }
    Ok(())
}

/// Mean binding time for the reaction-potential model from any start `r0` in
/// `[0, R]`. Outside the core it is the Smoluchowski time plus the constant
/// [`mean_diff`]; inside it decays towards `1 / lambda` at the centre.
pub fn mean_binding_doi(geometry: &Geometry, lambda: f64, r0: f64) -> Result<f64> {
    check_rate(lambda)?;
    let (r_b, radius, d) = (geometry.r_b(), geometry.radius(), geometry.diffusivity());
    if !(r0 >= 0.0 && r0 <= radius) {
        return Err(SolutionError::Domain(format!(
            "r0 = {r0} outside [0, {radius}]"
        )));
    }
    if r0 >= r_b {
        return Ok(mean_binding_smol(geometry, r0)? + doi_excess(geometry, lambda));
    }
    let q = geometry.lambda_hat(lambda).sqrt();
    let a = q * r_b;
    let flux = tanh_over_excess(a) * (radius.powi(3) - r_b.powi(3)) / (3.0 * d);
    // sinh(q r0) / (r0 sinh(a)), bounded for any rate.
    let profile = if r0 == 0.0 {
        x_over_sinh(a) / r_b
    } else {
        sinh_ratio(q * r0, a).map_err(SpectralError::from)? / r0
    };
    Ok(1.0 / lambda + profile * flux)
}

/// `<T_Doi> - <T_Smol>` for a start outside the core, where it does not
/// depend on `r0`: `1/lambda + tanh(a)/(a - tanh a) (R^3 - r_b^3)/(3 D r_b)`,
/// `a = r_b sqrt(lambda / D)`.
fn doi_excess(geometry: &Geometry, lambda: f64) -> f64 {
    let (r_b, radius, d) = (geometry.r_b(), geometry.radius(), geometry.diffusivity());
    let a = geometry.lambda_hat(lambda).sqrt() * r_b;
    1.0 / lambda + tanh_over_excess(a) / r_b * (radius.powi(3) - r_b.powi(3)) / (3.0 * d)
}

pub fn mean_diff(geometry: &Geometry, lambda: f64, r0: f64) -> Result<f64> {
    check_rate(lambda)?;
    if !(r0 > geometry.r_b() && r0 <= geometry.radius()) {
        return Err(SolutionError::Domain(format!("r0 = {r0} outside (r_b, R]")));
    }
    Ok(doi_excess(geometry, lambda))
}

/// `|<T_Smol> - <T_Doi>| / <T_Smol>`.
pub fn rel_diff(geometry: &Geometry, lambda: f64, r0: f64) -> Result<f64> {
    Ok(mean_diff(geometry, lambda, r0)?.abs() / mean_binding_smol(geometry, r0)?)
}

/// Mean binding time together with its distribution.
#[derive(Debug, Clone)]
pub struct BindingStats {
    pub mean: f64,
    pub model: Model,
    pub geometry: Geometry,
    pub r0: f64,
    solution: SpectralSolution,
}

impl BindingStats {
    /// Statistics for a point release at `r0`, with the distribution resolved
    /// down to `t_min`.
    pub fn new(geometry: &Geometry, model: Model, r0: f64, t_min: f64) -> Result<Self> {
        let mean = match model {
            Model::Smoluchowski => mean_binding_smol(geometry, r0)?,
            Model::Doi { lambda_hat } => {
                mean_binding_doi(geometry, lambda_hat * geometry.diffusivity(), r0)?
            }
        };
        let solution = SpectralSolution::delta(geometry, model, r0, t_min)?;
        Ok(Self {
            mean,
            model,
            geometry: *geometry,
            r0,
            solution,
        })
    }

    pub fn cdf(&self, t: f64) -> Result<f64> {
        self.solution.cdf(t)
    }

    pub fn solution(&self) -> &SpectralSolution {
        &self.solution
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::integrate;

    fn geom(r_b: f64) -> Geometry {
        Geometry::new(r_b, 1.0, 10.0).unwrap()
    }

    #[test]
    fn smoluchowski_mean_values() {
        let t = mean_binding_smol(&geom(1e-3), 1.0).unwrap();
        assert!((t - 33.283_333_35).abs() < 1e-8, "{t}");
        let t = mean_binding_smol(&geom(0.1), 1.0).unwrap();
        assert!((t - 0.2835).abs() < 1e-12, "{t}");
        assert_eq!(mean_binding_smol(&geom(0.1), 0.1).unwrap(), 0.0);
        assert!(mean_binding_smol(&geom(0.1), 0.05).is_err());
    }

    #[test]
    fn doi_mean_value_and_continuity() {
        let g = geom(0.1);
        let t = mean_binding_doi(&g, 1e3, 1.0).unwrap();
        assert!((t - 1.348_277_84).abs() < 1e-8, "{t}");
        let inside = mean_binding_doi(&g, 1e3, 0.1 * (1.0 - 1e-15)).unwrap();
        let outside = mean_binding_doi(&g, 1e3, 0.1).unwrap();
        assert!((inside / outside - 1.0).abs() < 1e-12);
        let centre = mean_binding_doi(&g, 1e3, 0.0).unwrap();
        let near = mean_binding_doi(&g, 1e3, 1e-9).unwrap();
        assert!((centre / near - 1.0).abs() < 1e-12);
        assert!(centre < outside);
        assert!(mean_binding_doi(&g, 1e3, 1.1).is_err());
        assert!(mean_binding_doi(&g, 0.0, 0.5).is_err());
    }

    #[test]
    fn doi_mean_survives_huge_rates() {
        let g = geom(1e-3);
        for &lambda in &[1e11, 1e20, 1e300] {
            for &r0 in &[0.0, 5e-4, 1.0] {
                assert!(mean_binding_doi(&g, lambda, r0).unwrap().is_finite());
            }
        }
    }

    #[test]
    fn mean_diff_identity() {
        let g = geom(0.1);
        let diff = mean_diff(&g, 1e3, 0.7).unwrap();
        let direct = mean_binding_doi(&g, 1e3, 0.7).unwrap() - mean_binding_smol(&g, 0.7).unwrap();
        assert!((diff / direct - 1.0).abs() < 1e-12);
    }

    #[test]
    fn mean_diff_scaling_in_rate_and_radius() {
        // O(lambda^(-1/2)) at fixed radius.
        let g = geom(1e-3);
        let s: Vec<f64> = [1e9, 1e10, 1e11]
            .iter()
            .map(|&l| mean_diff(&g, l, 1.0).unwrap() * l.sqrt())
            .collect();
        for w in s.windows(2) {
            assert!((0.7..=1.4).contains(&(w[1] / w[0])), "{s:?}");
        }
        // Once r_b sqrt(lambda/D) is large the difference grows like r_b^(-2)
        // and the relative difference like r_b^(-1).
        let small = geom(1e-3);
        let large = geom(1e-2);
        let ratio = mean_diff(&small, 1e9, 1.0).unwrap() / mean_diff(&large, 1e9, 1.0).unwrap();
        assert!((ratio - 110.0).abs() < 0.01, "{ratio}");
        let rel = rel_diff(&small, 1e9, 1.0).unwrap() / rel_diff(&large, 1e9, 1.0).unwrap();
        assert!((5.0..=20.0).contains(&rel), "{rel}");
    }

    #[test]
    fn relative_difference_at_the_fast_rate() {
        let r = rel_diff(&geom(1e-3), 1e11, 1.0).unwrap();
        assert!((r - 0.010_116_184_362_7).abs() < 1e-12, "{r}");
    }

    #[test]
    fn smol_density_vanishes_at_the_target() {
        let g = geom(0.1);
        let sol = SpectralSolution::delta(&g, Model::Smoluchowski, 1.0, 0.01).unwrap();
        assert!(sol.density(g.r_b(), 0.01).unwrap().abs() < 1e-8);
    }

    #[test]
    fn green_function_symmetry() {
        let g = geom(0.1);
        for model in [Model::Smoluchowski, Model::Doi { lambda_hat: 1e3 }] {
            let a = SpectralSolution::delta(&g, model, 0.5, 0.1).unwrap();
            let b = SpectralSolution::delta(&g, model, 0.8, 0.1).unwrap();
            let x = a.density(0.8, 0.1).unwrap();
            let y = b.density(0.5, 0.1).unwrap();
            assert!((x / y - 1.0).abs() < 1e-9, "{x} vs {y}");
        }
    }

    #[test]
    fn long_time_single_mode() {
        let g = geom(0.1);
        let sol = SpectralSolution::delta(&g, Model::Smoluchowski, 0.5, 1e-3).unwrap();
        let m = sol.modes().modes[0];
        let t = 5.0 / (g.diffusivity() * m.value);
        let f = RadialEigenfunction::smoluchowski(&g, m.value);
        let r = 0.8;
        let lead = m.norm_const * f.eval(0.5) * f.eval(r) * (-g.diffusivity() * m.value * t).exp()
            / (4.0 * PI);
        let ratio = sol.density(r, t).unwrap() / lead;
        assert!((ratio - 1.0).abs() < 1e-4, "{ratio}");
    }

    #[test]
    fn doi_has_interior_mass() {
        let g = geom(0.1);
        let sol = SpectralSolution::delta(&g, Model::Doi { lambda_hat: 1e4 }, 1.0, 0.01).unwrap();
        for &r in &[0.0, 0.05, 0.099] {
            assert!(sol.density(r, 0.01).unwrap() > 0.0);
        }
    }

    #[test]
    fn cdf_reaches_one() {
        let g = geom(0.1);
        let stats = BindingStats::new(&g, Model::Smoluchowski, 1.0, 1e-3).unwrap();
        assert!(stats.cdf(10.0 * stats.mean).unwrap() >= 0.999);
        let doi = BindingStats::new(&g, Model::Doi { lambda_hat: 100.0 }, 1.0, 1e-3).unwrap();
        assert!(doi.cdf(30.0 * doi.mean).unwrap() > 0.999_999);
    }

    #[test]
    fn mean_equals_integrated_survival() {
        let g = geom(0.1);
        let t0 = 1e-4;
        let sol = SpectralSolution::delta(&g, Model::doi_from_rate(&g, 1e3), 1.0, t0).unwrap();
        let tail = integrate(|t| sol.survival(t).unwrap(), t0, 80.0, 1e-9).unwrap();
        // Survival is 1 to within e^-(distance^2/Dt) before t0.
        let integral = t0 + tail;
        let mean = mean_binding_doi(&g, 1e3, 1.0).unwrap();
        assert!((integral / mean - 1.0).abs() < 1e-6, "{integral} vs {mean}");
    }

    #[test]
    fn grid_matches_pointwise() {
        let g = geom(0.05);
        let sol = SpectralSolution::delta(&g, Model::Doi { lambda_hat: 1e5 }, 1.0, 1e-4).unwrap();
        let rs = [0.0, 0.01, 0.05, 0.3, 0.999, 1.0];
        let ts = [1e-4, 1e-3, 0.05, 2.0, 300.0];
        let grid = sol.density_grid(&rs, &ts).unwrap();
        assert!(grid.unconverged.is_none());
        for (j, &t) in ts.iter().enumerate() {
            for (i, &r) in rs.iter().enumerate() {
                assert_eq!(
                    grid.at(i, j),
                    sol.density(r, t).unwrap(),
                    "r = {r}, t = {t}"
                );
            }
        }
    }

    #[test]
    fn truncation_is_reported() {
        let g = geom(0.1);
        let tr = Truncation {
            term_tol: 1e-10,
            max_modes: 4,
        };
        let sol = SpectralSolution::delta_with(&g, Model::Smoluchowski, 1.0, 1e-4, tr).unwrap();
        let s = sol.density_series(0.5, 1e-4).unwrap();
        assert!(!s.converged && s.terms == 4);
        assert!(matches!(
            sol.density(0.5, 1e-4),
            Err(SolutionError::Truncated { terms: 4, .. })
        ));
        assert!(sol.density_series(0.5, 1e-6).unwrap().slow_regime);
    }

    #[test]
    fn domain_checks() {
        let g = geom(0.1);
        let sol = SpectralSolution::delta(&g, Model::Smoluchowski, 1.0, 1e-3).unwrap();
        assert!(sol.density(0.05, 1.0).is_err());
        assert!(sol.density(0.5, 0.0).is_err());
        assert!(sol.density(0.5, 1e-9).is_err());
        assert!(SpectralSolution::delta(&g, Model::Smoluchowski, 0.1, 1e-3).is_err());
    }

    #[test]
    fn four_pi_is_presentation_only() {
        let g = geom(0.1);
        let mut sol = SpectralSolution::delta(&g, Model::Smoluchowski, 1.0, 1e-3).unwrap();
        let scaled = sol.density(0.5, 0.1).unwrap();
        sol.scale_4pi = false;
        let raw = sol.density(0.5, 0.1).unwrap();
        assert!((raw / scaled - 4.0 * PI).abs() < 1e-12);
        let s = sol.survival(0.1).unwrap();
        sol.scale_4pi = true;
        assert_eq!(s, sol.survival(0.1).unwrap());
    }

    mod props {
        use super::*;
        use crate::harness::comparison_grids;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn survival_nonincreasing_and_doi_binds_slower(
                log_rb in -3.0f64..-1.0,
                log_lambda in 4.0f64..11.0,
                r0_frac in 0.2f64..=1.0,
            ) {
                let g = geom(10f64.powf(log_rb));
                let r0 = g.r_b() + r0_frac * g.shell();
                let times = comparison_grids(&g).subsample_times(50).t_points;
                let smol = SpectralSolution::delta(&g, Model::Smoluchowski, r0, times[0]).unwrap();
                let model = Model::doi_from_rate(&g, 10f64.powf(log_lambda));
                let doi = SpectralSolution::delta(&g, model, r0, times[0]).unwrap();
                let mut prev = 1.0;
                for &t in &times {
                    let s = doi.survival(t).unwrap();
                    // A series can stop early at a term that sits near a node of psi_n(r0).
                    prop_assert!(s <= prev + 1e-6, "survival rose at t = {}: {} after {}", t, s, prev);
                    prev = s;
                    prop_assert!(doi.cdf(t).unwrap() <= smol.cdf(t).unwrap() + 1e-6, "t = {}", t);
                }
            }

            #[test]
            fn mean_diff_positive(log_rb in -3.0f64..-0.5, log_lambda in 0.0f64..14.0, r0_frac in 0.0f64..=1.0) {
                let g = geom(10f64.powf(log_rb));
                let r0 = g.r_b() + r0_frac * g.shell();
                let d = mean_diff(&g, 10f64.powf(log_lambda), r0).unwrap();
                prop_assert!(d > 0.0);
            }
        }
    }
}
