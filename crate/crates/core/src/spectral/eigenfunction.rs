use std::f64::consts::PI;

use super::characteristic::outer_boundary;
use super::{EigenMode, Geometry, ModeSet, Model, Result, SpectralError};
use crate::numerics::sinh_ratio;
use crate::numerics::special::{
    coth_moment, sin_minus_xcos_cubed, sinc, sinh_square_moment, x_minus_sin_cubed, x_over_sinh,
};

#[derive(Debug, Clone, Copy, PartialEq)]
enum Interior {
    /// Smoluchowski: identically zero inside the reaction radius.
    Absorbing,
    /// Doi with `mu <= lambda_hat`: `r psi = u(r_b) sinh(q r) / sinh(q r_b)`.
    Evanescent { q: f64, a: f64 },
    /// Doi with `mu > lambda_hat`: `psi = cq * sinc(q r)`.
    Oscillatory { q: f64, a: f64, cq: f64 },
}

/// A radial eigenfunction with its trigonometric data cached for repeated
/// evaluation. Unnormalized: the outer branch is always
/// `[sin(k(R-r))/(Rk) - cos(k(R-r))] / r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialEigenfunction {
    geometry: Geometry,
    value: f64,
    k: f64,
    u_b: f64,
    du_b: f64,
    interior: Interior,
}

impl RadialEigenfunction {
    pub fn new(geometry: &Geometry, model: Model, value: f64) -> Self {
        match model {
            Model::Smoluchowski => Self::smoluchowski(geometry, value),
            Model::Doi { lambda_hat } => Self::doi(geometry, lambda_hat, value),
        }
    }

    pub fn smoluchowski(geometry: &Geometry, alpha: f64) -> Self {
        let k = alpha.max(0.0).sqrt();
        let (u_b, du_b) = outer_boundary(geometry, k);
        Self {
            geometry: *geometry,
            value: alpha,
            k,
            u_b,
            du_b,
            interior: Interior::Absorbing,
        }
    }

    pub fn doi(geometry: &Geometry, lambda_hat: f64, mu: f64) -> Self {
        let k = mu.max(0.0).sqrt();
        let (u_b, du_b) = outer_boundary(geometry, k);
        let r_b = geometry.r_b();
        let interior = if mu <= lambda_hat {
            let q = (lambda_hat - mu).sqrt();
            Interior::Evanescent { q, a: q * r_b }
        } else {
            let q = (mu - lambda_hat).sqrt();
            let a = q * r_b;
            // C sin(a) = u_b and C q cos(a) = u'_b combine to C q without dividing by sin(a).
            let cq = u_b * q * a.sin() + du_b * a.cos();
            Interior::Oscillatory { q, a, cq }
        };
        Self {
            geometry: *geometry,
            value: mu,
            k,
            u_b,
            du_b,
            interior,
        }
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn boundary_value(&self) -> f64 {
        self.u_b
    }

    pub fn boundary_slope(&self) -> f64 {
        self.du_b
    }

    /// `r * psi(r)` on the shell `r_b <= r <= R`.
    #[inline]
    fn outer_u(&self, r: f64) -> f64 {
        let s = self.geometry.radius() - r;
        (s / self.geometry.radius()) * sinc(self.k * s) - (self.k * s).cos()
    }

    /// Evaluates the eigenfunction at `0 <= r <= R` (no range check).
    #[inline]
    pub fn eval(&self, r: f64) -> f64 {
        let r_b = self.geometry.r_b();
        if r >= r_b {
            return self.outer_u(r) / r;
        }
        match self.interior {
            Interior::Absorbing => 0.0,
            Interior::Evanescent { q, a } => {
                if a == 0.0 {
                    self.u_b / r_b
                } else if r == 0.0 {
                    self.u_b / r_b * x_over_sinh(a)
                } else {
                    self.u_b * sinh_ratio(q * r, a).unwrap_or(0.0) / r
                }
            }
            Interior::Oscillatory { q, cq, .. } => cq * sinc(q * r),
        }
    }

    /// `∫ psi(r)^2 r^2 dr` over the support, in closed form.
    pub fn norm_sq(&self) -> f64 {
        let r_b = self.geometry.r_b();
        let outer = h_from_k(&self.geometry, self.k);
        let inner = match self.interior {
            Interior::Absorbing => 0.0,
            Interior::Evanescent { a, .. } => self.u_b * self.u_b * r_b * sinh_square_moment(a),
            Interior::Oscillatory { a, cq, .. } => {
                2.0 * cq * cq * r_b.powi(3) * x_minus_sin_cubed(2.0 * a)
            }
        };
        outer + inner
    }

    /// `∫ psi(r) r^2 dr` over the support, in closed form.
    pub fn moment(&self) -> f64 {
        let g = &self.geometry;
        let (c, r_b) = (g.shell(), g.r_b());
        let x = self.k * c;
        let outer = -c.powi(3) * sin_minus_xcos_cubed(x) / g.radius() - c * r_b * sinc(x);
        let inner = match self.interior {
            Interior::Absorbing => 0.0,
            Interior::Evanescent { a, .. } => self.u_b * r_b * r_b * coth_moment(a),
            Interior::Oscillatory { a, cq, .. } => cq * r_b.powi(3) * sin_minus_xcos_cubed(a),
        };
        outer + inner
    }

    /// Upper bound on `sup |psi|` over the support.
    pub fn sup_bound(&self) -> f64 {
        let g = &self.geometry;
        let osc = if self.k > 0.0 {
            (g.shell() / g.radius()).min(1.0 / (g.radius() * self.k))
        } else {
            g.shell() / g.radius()
        };
        let outer = (1.0 + osc) / g.r_b();
        let inner = match self.interior {
            Interior::Absorbing => 0.0,
            Interior::Evanescent { .. } => self.u_b.abs() / g.r_b(),
            Interior::Oscillatory { cq, .. } => cq.abs(),
        };
        outer.max(inner)
    }

    /// Number of sign changes of `r psi(r)` on the open support; the n-th
    /// eigenfunction of a regular Sturm-Liouville problem has exactly `n - 1`.
    pub fn node_count(&self) -> usize {
        let g = &self.geometry;
        // On the shell u = rho sin(k s - delta) with s = R - r, rho > 0 and
        // delta = atan(R k), so zeros sit at k s = m pi + delta, m >= 0.
        let delta = (g.radius() * self.k).atan();
        let phase = self.k * g.shell() - delta;
        match self.interior {
            Interior::Absorbing => (phase / PI).round().max(0.0) as usize,
            Interior::Evanescent { .. } => usize::from(phase > 0.0) + sin_zeros(phase, self.u_b),
            Interior::Oscillatory { a, cq, .. } => {
                usize::from(phase > 0.0) + sin_zeros(phase, self.u_b) + sin_zeros(a, self.u_b * cq)
            }
        }
    }
}

/// Number of `m >= 1` with `m pi < phase`. `end_sign` carries the sign of
/// `sin(phase)` and decides ties where `phase` is within rounding of `m pi`.
fn sin_zeros(phase: f64, end_sign: f64) -> usize {
    if phase <= 0.0 {
        return 0;
    }
    let m = (phase / PI).round();
    if m >= 1.0 && (phase - m * PI).abs() < 1e-9 * phase.max(1.0) {
        let parity = if (m as u64) % 2 == 0 { 1.0 } else { -1.0 };
        if end_sign * parity > 0.0 {
            m as usize
        } else {
            m as usize - 1
        }
    } else {
        (phase / PI).ceil() as usize - 1
    }
}

/// `h(z) = ∫_{r_b}^R H(z, r)^2 r^2 dr` in closed form, from the elementary
/// antiderivatives of `sin^2`, `cos^2` and `sin cos` on `s = R - r`.
pub fn h_norm(geometry: &Geometry, z: f64) -> f64 {
    h_from_k(geometry, z.max(0.0).sqrt())
}

fn h_from_k(geometry: &Geometry, k: f64) -> f64 {
    let c = geometry.shell();
    let radius = geometry.radius();
    let x = k * c;
    let sc = sinc(x);
    2.0 * c.powi(3) * x_minus_sin_cubed(2.0 * x) / (radius * radius) - c * c * sc * sc / radius
        + 0.5 * c * (1.0 + sinc(2.0 * x))
}

fn check_radius(geometry: &Geometry, r: f64) -> Result<()> {
    if !(r >= 0.0 && r <= geometry.radius()) {
        return Err(SpectralError::Domain(format!(
            "r = {r} outside [0, {}]",
            geometry.radius()
        )));
    }
    Ok(())
}

/// Smoluchowski eigenfunction `phi_n(r)` for eigenvalue `alpha`, extended by
/// zero inside the reaction radius.
pub fn phi(geometry: &Geometry, alpha: f64, r: f64) -> Result<f64> {
    check_radius(geometry, r)?;
    Ok(RadialEigenfunction::smoluchowski(geometry, alpha).eval(r))
}

/// Doi eigenfunction `psi_n(r)` for eigenvalue `mu`.
pub fn psi(geometry: &Geometry, lambda_hat: f64, mu: f64, r: f64) -> Result<f64> {
    check_radius(geometry, r)?;
    Ok(RadialEigenfunction::doi(geometry, lambda_hat, mu).eval(r))
}

/// Recomputes `norm_const = 1 / ||eigenfunction||^2` for every mode.
pub fn mode_norms(geometry: &Geometry, modes: &ModeSet) -> ModeSet {
    let modes_out = modes
        .modes
        .iter()
        .map(|m| EigenMode {
            norm_const: 1.0 / RadialEigenfunction::new(geometry, modes.model, m.value).norm_sq(),
            ..*m
        })
        .collect();
    ModeSet {
        geometry: *geometry,
        model: modes.model,
        modes: modes_out,
    }
}

/// `∫ eigenfunction(r) r^2 dr`, the weight a mode carries in the survival
/// probability.
pub fn term_integral(geometry: &Geometry, model: Model, value: f64) -> f64 {
    RadialEigenfunction::new(geometry, model, value).moment()
}
