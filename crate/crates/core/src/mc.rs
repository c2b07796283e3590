//! Brownian-dynamics simulation of a single particle in the ball, binding
//! either on contact with the target sphere or at a fixed rate while inside it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::spectral::Geometry;

/// Distance from the wall, relative to `R`, below which far-field steps stop
/// shrinking.
const WALL_LAYER: f64 = 0.1;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum McError {
    #[error("invalid Monte Carlo configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, McError>;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum McModel {
    /// Bind on reaching `|x| <= r_b`.
    Smoluchowski,
    /// Bind with rate `lambda` (s⁻¹) while `|x| < r_b`.
    Doi { lambda: f64 },
}

/// How step sizes are chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Stepping {
    /// Every step has length `dt`.
    Fixed,
    /// Steps of `dt` near the target and the wall; far from both, a single
    /// Gaussian step whose standard deviation per axis is at most a
    /// `1 / (6 sqrt 3)` fraction of the distance to the nearest of them.
    /// Free-space Brownian increments are exact, so only the boundary layers
    /// need the small step.
    FarField,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct McConfig {
    pub dt: f64,
    pub n_paths: usize,
    pub seed: u64,
    pub t_max: f64,
    pub model: McModel,
    pub stepping: Stepping,
}

impl McConfig {
    pub fn new(model: McModel, dt: f64, n_paths: usize, seed: u64, t_max: f64) -> Self {
        Self {
            dt,
            n_paths,
            seed,
            t_max,
            model,
            stepping: Stepping::FarField,
        }
    }

    pub fn validate(&self, geometry: &Geometry) -> Result<()> {
        let d = geometry.diffusivity();
        if !(self.dt > 0.0) {
            return Err(McError::Config(format!(
                "dt must be positive, got {}",
                self.dt
            )));
        }
        let sigma = (2.0 * d * self.dt).sqrt();
        if sigma > geometry.r_b() / 10.0 {
            return Err(McError::Config(format!(
                "step sqrt(2 D dt) = {sigma} exceeds r_b / 10 = {}",
                geometry.r_b() / 10.0
            )));
        }
        if self.n_paths == 0 {
            return Err(McError::Config("n_paths must be at least 1".into()));
        }
        if !(self.t_max > 0.0 && self.t_max.is_finite()) {
            return Err(McError::Config(format!(
                "t_max must be positive, got {}",
                self.t_max
            )));
        }
        if let McModel::Doi { lambda } = self.model {
            if !(lambda >= 0.0 && lambda.is_finite()) {
                return Err(McError::Config(format!(
                    "lambda must be >= 0, got {lambda}"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Outcome {
    Bound,
    Censored,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BindingSample {
    /// Binding (or censoring) times, sorted.
    pub times: Vec<(f64, Outcome)>,
    pub n_bound: usize,
    pub n_paths: usize,
    /// Mean of `min(T, t_max)`.
    pub mean_restricted: f64,
    pub ci95_halfwidth: f64,
    /// Estimated `E[T] - E[min(T, t_max)]` assuming an exponential tail.
    pub censoring_bias: f64,
}

impl BindingSample {
    fn from_times(mut times: Vec<(f64, Outcome)>) -> Self {
        times.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        let n = times.len() as f64;
        let n_bound = times.iter().filter(|(_, o)| *o == Outcome::Bound).count();
        let mean = times.iter().map(|(t, _)| t).sum::<f64>() / n;
        let var = if times.len() > 1 {
            times.iter().map(|(t, _)| (t - mean).powi(2)).sum::<f64>() / (n - 1.0)
        } else {
            0.0
        };
        let survival = 1.0 - n_bound as f64 / n;
        let censoring_bias = if n_bound == 0 {
            f64::INFINITY
        } else {
            survival * mean / (1.0 - survival)
        };
        Self {
            n_bound,
            n_paths: times.len(),
            mean_restricted: mean,
            ci95_halfwidth: 1.96 * (var / n).sqrt(),
            censoring_bias,
            times,
        }
    }

    /// Binomial standard error of the ECDF at `t`.
    pub fn ecdf_stderr(&self, t: f64) -> f64 {
        let p = ecdf_at(self, t);
        (p * (1.0 - p) / self.n_paths as f64).sqrt()
    }
}

/// Fraction of paths bound by time `t`.
pub fn ecdf_at(sample: &BindingSample, t: f64) -> f64 {
    let bound = sample.times.partition_point(|&(s, _)| s <= t);
    let bound = sample.times[..bound]
        .iter()
        .filter(|(_, o)| *o == Outcome::Bound)
        .count();
    bound as f64 / sample.n_paths as f64
}

struct Walker<'a> {
    geometry: &'a Geometry,
    cfg: &'a McConfig,
    rng: ChaCha8Rng,
    pos: [f64; 3],
    t: f64,
}

impl<'a> Walker<'a> {
    fn new(geometry: &'a Geometry, cfg: &'a McConfig, r0: f64, path: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(path);
        Self {
            geometry,
            cfg,
            rng,
            pos: [r0, 0.0, 0.0],
            t: 0.0,
        }
    }

    fn radius(&self) -> f64 {
        let [x, y, z] = self.pos;
        (x * x + y * y + z * z).sqrt()
    }

    /// Advances one step; returns the binding time if the particle bound.
    fn step(&mut self) -> Option<f64> {
        let g = self.geometry;
        let d = g.diffusivity();
        let r = self.radius();
        let mut h = self.cfg.dt;
        if self.cfg.stepping == Stepping::FarField && r > g.r_b() {
            // Crossing the target must never go unseen; crossing the wall is
            // undone by mirroring, so there the step only has to stay small
            // against the curvature.
            let target = (r - g.r_b()) / (6.0 * 3f64.sqrt());
            let wall = (g.radius() - r).max(WALL_LAYER * g.radius()) / 4.0;
            let sigma = target.min(wall);
            h = h.max(sigma * sigma / (2.0 * d));
        }
        h = h.min(self.cfg.t_max - self.t);
        let s = (2.0 * d * h).sqrt();
        for c in &mut self.pos {
            let xi: f64 = self.rng.sample(StandardNormal);
            *c += s * xi;
        }
        self.t += h;
        let mut r = self.radius();
        if r > g.radius() {
            let scale = (2.0 * g.radius() - r).abs() / r;
            for c in &mut self.pos {
                *c *= scale;
            }
            r = self.radius();
        }
        match self.cfg.model {
            McModel::Smoluchowski => (r <= g.r_b()).then_some(self.t),
            McModel::Doi { lambda } => {
                if r < g.r_b() && lambda > 0.0 {
                    let p = -(-lambda * h).exp_m1();
                    (self.rng.random::<f64>() < p).then_some(self.t)
                } else {
                    None
                }
            }
        }
    }

    fn run(mut self) -> (f64, Outcome) {
        while self.t < self.cfg.t_max {
            if let Some(t) = self.step() {
                return (t, Outcome::Bound);
            }
        }
        (self.cfg.t_max, Outcome::Censored)
    }
}

fn check_start(geometry: &Geometry, r0: f64) -> Result<()> {
    if !(r0 > geometry.r_b() && r0 <= geometry.radius()) {
        return Err(McError::Config(format!(
            "r0 = {r0} outside (r_b, R] = ({}, {}]",
            geometry.r_b(),
            geometry.radius()
        )));
    }
    Ok(())
}

/// Simulates `cfg.n_paths` independent particles released at `(r0, 0, 0)`.
///
/// Path `i` draws from ChaCha8 stream `i` of `cfg.seed`, so the sample does
/// not depend on scheduling.
pub fn simulate(geometry: &Geometry, r0: f64, cfg: &McConfig) -> Result<BindingSample> {
    cfg.validate(geometry)?;
    check_start(geometry, r0)?;
    let times: Vec<(f64, Outcome)> = (0..cfg.n_paths as u64)
        .into_par_iter()
        .map(|i| Walker::new(geometry, cfg, r0, i).run())
        .collect();
    Ok(BindingSample::from_times(times))
}

/// Positions visited by path `path` (including the start), up to `max_steps`
/// steps or binding.
pub fn trace_path(
    geometry: &Geometry,
    r0: f64,
    cfg: &McConfig,
    path: u64,
    max_steps: usize,
) -> Result<Vec<[f64; 3]>> {
    cfg.validate(geometry)?;
    check_start(geometry, r0)?;
    let mut w = Walker::new(geometry, cfg, r0, path);
    let mut out = vec![w.pos];
    for _ in 0..max_steps {
        if w.t >= cfg.t_max {
            break;
        }
        let bound = w.step();
        out.push(w.pos);
        if bound.is_some() {
            break;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn geom() -> Geometry {
        Geometry::new(0.1, 1.0, 10.0).unwrap()
    }

    #[test]
    fn config_guards() {
        let g = geom();
        let ok = McConfig::new(McModel::Smoluchowski, 5e-7, 10, 1, 1.0);
        assert!(ok.validate(&g).is_ok());
        // sqrt(2 * 10 * 1e-4) = 0.045 > 0.01
        assert!(McConfig { dt: 1e-4, ..ok }.validate(&g).is_err());
        assert!(McConfig { n_paths: 0, ..ok }.validate(&g).is_err());
        assert!(McConfig { t_max: 0.0, ..ok }.validate(&g).is_err());
        let doi = McConfig::new(McModel::Doi { lambda: -1.0 }, 5e-7, 10, 1, 1.0);
        assert!(doi.validate(&g).is_err());
        assert!(simulate(&g, 0.05, &ok).is_err());
    }

    #[test]
    fn deterministic_for_a_seed() {
        let g = geom();
        let cfg = McConfig::new(McModel::Smoluchowski, 5e-7, 64, 42, 0.5);
        let a = simulate(&g, 1.0, &cfg).unwrap();
        let b = simulate(&g, 1.0, &cfg).unwrap();
        assert_eq!(a, b);
        let c = simulate(&g, 1.0, &McConfig { seed: 43, ..cfg }).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn no_reaction_without_rate() {
        let g = geom();
        let cfg = McConfig::new(McModel::Doi { lambda: 0.0 }, 5e-7, 16, 7, 0.05);
        let s = simulate(&g, 1.0, &cfg).unwrap();
        assert_eq!(s.n_bound, 0);
        assert!(s
            .times
            .iter()
            .all(|&(t, o)| o == Outcome::Censored && t == 0.05));
        assert_eq!(ecdf_at(&s, 0.05), 0.0);
    }

    #[test]
    fn paths_stay_in_the_ball() {
        let g = geom();
        for stepping in [Stepping::Fixed, Stepping::FarField] {
            let cfg = McConfig {
                stepping,
                ..McConfig::new(McModel::Doi { lambda: 1e3 }, 5e-7, 1, 3, 1.0)
            };
            for path in 0..4 {
                for p in trace_path(&g, 1.0, &cfg, path, 50_000).unwrap() {
                    let r = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
                    assert!(r <= g.radius() * (1.0 + 1e-15), "{r}");
                }
            }
        }
    }

    #[test]
    fn ecdf_endpoints() {
        let g = geom();
        let cfg = McConfig::new(McModel::Smoluchowski, 5e-7, 200, 11, 0.3);
        let s = simulate(&g, 1.0, &cfg).unwrap();
        assert_eq!(ecdf_at(&s, 0.0), 0.0);
        assert_eq!(ecdf_at(&s, cfg.t_max), s.n_bound as f64 / s.n_paths as f64);
        assert!(s.times.iter().all(|&(t, _)| t <= cfg.t_max));
        assert!(s.times.windows(2).all(|w| w[0].0 <= w[1].0));
    }

    #[test]
    fn halving_dt_moves_mean_less_than_ci() {
        let g = geom();
        let coarse = McConfig::new(McModel::Smoluchowski, 5e-7, 4000, 5, 5.0);
        let fine = McConfig {
            dt: 2.5e-7,
            ..coarse
        };
        let a = simulate(&g, 1.0, &coarse).unwrap();
        let b = simulate(&g, 1.0, &fine).unwrap();
        let width = 2.0 * a.ci95_halfwidth;
        assert!(
            (a.mean_restricted - b.mean_restricted).abs() < width,
            "{} vs {} (width {width})",
            a.mean_restricted,
            b.mean_restricted
        );
    }

    #[test]
    fn doi_binds_no_faster_than_smoluchowski() {
        let g = geom();
        let smol = simulate(
            &g,
            1.0,
            &McConfig::new(McModel::Smoluchowski, 5e-7, 2000, 9, 2.0),
        )
        .unwrap();
        let doi = McConfig::new(McModel::Doi { lambda: 1e3 }, 5e-7, 2000, 9, 2.0);
        let doi = simulate(&g, 1.0, &doi).unwrap();
        for k in 1..=10 {
            let t = 0.2 * k as f64;
            let (fs, fd) = (ecdf_at(&smol, t), ecdf_at(&doi, t));
            let se = ((fs * (1.0 - fs) + fd * (1.0 - fd)) / 2000.0).sqrt();
            assert!(fd <= fs + 3.0 * se, "t = {t}: doi {fd}, smol {fs}");
        }
    }
}
