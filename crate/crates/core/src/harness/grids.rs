use serde::Serialize;

use crate::spectral::Geometry;

/// Offsets (relative to `r_b`) of the points packed against the target.
const NEAR_TARGET: [f64; 7] = [5e-6, 1e-5, 5e-5, 1e-4, 5e-4, 1e-3, 5e-3];

/// Radial and temporal evaluation points of the comparison studies.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridSpec {
    pub r_points: Vec<f64>,
    pub t_points: Vec<f64>,
}

impl GridSpec {
    /// Keeps every `stride`-th time point (always including the first).
    pub fn subsample_times(&self, stride: usize) -> Self {
        let stride = stride.max(1);
        Self {
            r_points: self.r_points.clone(),
            t_points: self.t_points.iter().copied().step_by(stride).collect(),
        }
    }

    /// Keeps every `stride`-th point on both axes.
    pub fn subsample(&self, stride: usize) -> Self {
        let stride = stride.max(1);
        Self {
            r_points: self.r_points.iter().copied().step_by(stride).collect(),
            t_points: self.t_points.iter().copied().step_by(stride).collect(),
        }
    }
}

/// Inclusive arithmetic progression built from integer indices, so every
/// value is `start + k * step` rounded once.
fn progression(start: f64, step: f64, count: usize) -> impl Iterator<Item = f64> {
    (0..count).map(move |k| start + k as f64 * step)
}

/// 107 radii and 10229 times: seven radii hugging the target, then 100
/// evenly spaced across the shell; times from 1e-5 s to 1e4 s on
/// progressively coarser steps. The value 200 appears twice.
pub fn comparison_grids(geometry: &Geometry) -> GridSpec {
    let (r_b, shell) = (geometry.r_b(), geometry.shell());
    let mut r_points: Vec<f64> = NEAR_TARGET.iter().map(|&f| r_b + r_b * f).collect();
    r_points.extend(progression(0.01, 0.01, 100).map(|x| x * shell + r_b));

    let mut t_points = vec![1e-5, 1e-4, 1e-3];
    t_points.extend(progression(0.01, 0.01, 10_000));
    t_points.extend(progression(101.0, 1.0, 100));
    t_points.extend(progression(200.0, 10.0, 81));
    t_points.extend(progression(1200.0, 200.0, 45));
    GridSpec { r_points, t_points }
}
