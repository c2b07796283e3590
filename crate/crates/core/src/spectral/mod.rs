//! Radially symmetric eigenproblems for the absorbing-boundary (Smoluchowski)
//! and reaction-potential (Doi) models in a ball of radius `R` with a
//! reactive core of radius `r_b`.
//!
//! Everything here is expressed with the diffusion constant scaled out: the
//! Doi rate enters as `lambda_hat = lambda / D` and eigenvalues carry units of
//! length⁻². Root finding never touches the characteristic functions `f` and
//! `A` directly, because both have poles; it works with entire rescalings of
//! them instead (see [`smol_root_fn`] and [`doi_matching`]). `f` and `A` are
//! kept for residual checks.

mod characteristic;
mod eigenfunction;
mod eigenvalues;

pub use characteristic::{doi_matching, f_smol, reaction_kernel_a, smol_pole_fn, smol_root_fn};
pub use eigenfunction::{h_norm, mode_norms, phi, psi, term_integral, RadialEigenfunction};
pub use eigenvalues::{doi_eigenvalues, neumann_ball_eigenvalues, smol_eigenvalues, smol_poles};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numerics::NumericsError;

/// Relative bracket width used for every eigenvalue solve.
pub const ROOT_REL_TOL: f64 = 1e-14;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("invalid geometry: {0}")]
    Geometry(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("evaluation at a pole (mu = {mu})")]
    Pole { mu: f64 },
    #[error("found only {found} of {requested} eigenvalues below the scan ceiling")]
    Exhausted {
        requested: usize,
        found: usize,
        partial: Box<ModeSet>,
    },
    #[error("eigenvalue verification failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

pub type Result<T> = std::result::Result<T, SpectralError>;

/// Reaction radius `r_b`, domain radius `R` (μm) and diffusivity `D` (μm²/s).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Geometry {
    r_b: f64,
    radius: f64,
    diffusivity: f64,
}

impl Geometry {
    pub fn new(r_b: f64, radius: f64, diffusivity: f64) -> Result<Self> {
        if !(r_b > 0.0 && r_b < radius && radius.is_finite()) {
            return Err(SpectralError::Geometry(format!(
                "need 0 < r_b < R, got r_b = {r_b}, R = {radius}"
            )));
        }
        if !(diffusivity > 0.0 && diffusivity.is_finite()) {
            return Err(SpectralError::Geometry(format!(
                "need D > 0, got {diffusivity}"
            )));
        }
        Ok(Self {
            r_b,
            radius,
            diffusivity,
        })
    }

    #[inline]
    pub fn r_b(&self) -> f64 {
        self.r_b
    }

    #[inline]
    pub fn radius(&self) -> f64 {
        self.radius
    }

    #[inline]
    pub fn diffusivity(&self) -> f64 {
        self.diffusivity
    }

    /// Width of the diffusive shell, `R - r_b`.
    #[inline]
    pub fn shell(&self) -> f64 {
        self.radius - self.r_b
    }

    /// `1 - r_b / R`.
    #[inline]
    pub fn kappa(&self) -> f64 {
        self.shell() / self.radius
    }

    pub fn lambda_hat(&self, lambda: f64) -> f64 {
        lambda / self.diffusivity
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Model {
    Smoluchowski,
    /// Reaction-potential model with `lambda_hat = lambda / D` (μm⁻²).
    Doi {
        lambda_hat: f64,
    },
}

impl Model {
    pub fn doi_from_rate(geometry: &Geometry, lambda: f64) -> Self {
        Model::Doi {
            lambda_hat: geometry.lambda_hat(lambda),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Model::Smoluchowski => "smoluchowski",
            Model::Doi { .. } => "doi",
        }
    }
}

/// One eigenpair: the eigenvalue (`alpha_n` or `mu_n`) and the reciprocal
/// squared norm of its eigenfunction (`a_n` or `b_n`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EigenMode {
    pub n: usize,
    pub value: f64,
    pub norm_const: f64,
    pub model: Model,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModeSet {
    pub geometry: Geometry,
    pub model: Model,
    pub modes: Vec<EigenMode>,
}

impl ModeSet {
    pub fn len(&self) -> usize {
        self.modes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modes.is_empty()
    }

    pub fn values(&self) -> Vec<f64> {
        self.modes.iter().map(|m| m.value).collect()
    }

    pub fn eigenfunctions(&self) -> Vec<RadialEigenfunction> {
        self.modes
            .iter()
            .map(|m| RadialEigenfunction::new(&self.geometry, self.model, m.value))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometry_validation() {
        assert!(Geometry::new(0.1, 1.0, 10.0).is_ok());
        assert!(Geometry::new(2.0, 1.0, 10.0).is_err());
        assert!(Geometry::new(0.0, 1.0, 10.0).is_err());
        assert!(Geometry::new(0.1, 1.0, 0.0).is_err());
        assert!(Geometry::new(0.1, 1.0, -1.0).is_err());
    }

    #[test]
    fn lambda_hat_scales_by_diffusivity() {
        let g = Geometry::new(1e-3, 1.0, 10.0).unwrap();
        assert_eq!(
            Model::doi_from_rate(&g, 1e11),
            Model::Doi { lambda_hat: 1e10 }
        );
    }
}
