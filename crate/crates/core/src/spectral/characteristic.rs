use super::{Geometry, Result, SpectralError};
use crate::numerics::special::{sinc, tanh_over_excess, tanhc};

const POLE_EPS: f64 = 1e-300;

/// Value and radial derivative of `u(r) = r * H(z, r)` at `r = r_b`, with
/// `H(z, r) = [sin(k(R-r))/(Rk) - cos(k(R-r))] / r` and `k = sqrt(z)`.
#[inline]
pub(crate) fn outer_boundary(geometry: &Geometry, k: f64) -> (f64, f64) {
    let c = geometry.shell();
    let radius = geometry.radius();
    let (s, co) = (k * c).sin_cos();
    let u_b = (c / radius) * sinc(k * c) - co;
    let du_b = -co / radius - k * s;
    (u_b, du_b)
}

/// Smoluchowski characteristic function
/// `f(mu) = (R sqrt(mu) - tan(sqrt(mu)(R - r_b))) / (R mu tan(sqrt(mu)(R - r_b)) + sqrt(mu))`.
pub fn f_smol(geometry: &Geometry, mu: f64) -> Result<f64> {
    if !(mu > 0.0) {
        return Err(SpectralError::Domain(format!(
            "f requires mu > 0, got {mu}"
        )));
    }
    let k = mu.sqrt();
    let radius = geometry.radius();
    let t = (k * geometry.shell()).tan();
    let den = radius * mu * t + k;
    if den.abs() < POLE_EPS || !den.is_finite() {
        return Err(SpectralError::Pole { mu });
    }
    Ok((radius * k - t) / den)
}

/// Doi reaction kernel `A(mu, lambda_hat)`: `tanh(q r_b)/q` with
/// `q = sqrt(lambda_hat - mu)` below the rate, `tan(q r_b)/q` with
/// `q = sqrt(mu - lambda_hat)` above it. Both branches meet at `r_b`.
pub fn reaction_kernel_a(geometry: &Geometry, mu: f64, lambda_hat: f64) -> Result<f64> {
    if !(mu >= 0.0) || !(lambda_hat >= 0.0) {
        return Err(SpectralError::Domain(format!(
            "A requires mu >= 0 and lambda_hat >= 0, got mu = {mu}, lambda_hat = {lambda_hat}"
        )));
    }
    let r_b = geometry.r_b();
    if mu <= lambda_hat {
        let a = (lambda_hat - mu).sqrt() * r_b;
        Ok(r_b * tanhc(a))
    } else {
        let a = (mu - lambda_hat).sqrt() * r_b;
        let (s, c) = a.sin_cos();
        if c.abs() <= 1e-15 * s.abs() {
            return Err(SpectralError::Pole { mu });
        }
        Ok(r_b * sinc(a) / c)
    }
}

/// `kappa * sinc(kappa x) - cos(kappa x)` with `x = R sqrt(mu)`: the value of
/// `u` at the reaction radius. Its zeros are the Smoluchowski eigenvalues; it
/// equals `(sin(kappa x) - x cos(kappa x)) / x` and has no poles.
pub fn smol_root_fn(geometry: &Geometry, x: f64) -> f64 {
    let kappa = geometry.kappa();
    kappa * sinc(kappa * x) - (kappa * x).cos()
}

/// `cos(kappa x) + x sin(kappa x)`; its zeros are the poles `beta_n` of `f`.
pub fn smol_pole_fn(geometry: &Geometry, x: f64) -> f64 {
    let kappa = geometry.kappa();
    (kappa * x).cos() + x * (kappa * x).sin()
}

/// Interface-matching function whose zeros are the Doi eigenvalues.
///
/// Below the rate it is `u(r_b) - A(mu) u'(r_b)`; above it the same
/// expression multiplied through by `cos(q r_b)`. Both are continuous across
/// `mu = lambda_hat` (where `A = r_b`) and free of poles. `f(mu) = A(mu)`
/// holds exactly at its zeros.
pub fn doi_matching(geometry: &Geometry, lambda_hat: f64, mu: f64) -> f64 {
    let r_b = geometry.r_b();
    if mu == 0.0 {
        // u(r_b) = -r_b/R and u'(r_b) = -1/R exactly at mu = 0.
        let a = lambda_hat.sqrt() * r_b;
        if a == 0.0 {
            return 0.0;
        }
        return -(r_b / geometry.radius()) * tanhc(a) / tanh_over_excess(a);
    }
    let (u_b, du_b) = outer_boundary(geometry, mu.sqrt());
    if mu <= lambda_hat {
        let a = (lambda_hat - mu).sqrt() * r_b;
        u_b - r_b * tanhc(a) * du_b
    } else {
        let a = (mu - lambda_hat).sqrt() * r_b;
        a.cos() * u_b - r_b * sinc(a) * du_b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn geom() -> Geometry {
        Geometry::new(0.1, 1.0, 10.0).unwrap()
    }

    #[test]
    fn f_tends_to_r_b_at_origin() {
        let g = geom();
        let v = f_smol(&g, 1e-12).unwrap();
        assert!((v / g.r_b() - 1.0).abs() < 1e-6, "{v}");
    }

    #[test]
    fn a_at_zero() {
        let g = geom();
        let lh = 400.0;
        let v = reaction_kernel_a(&g, 0.0, lh).unwrap();
        let expected = (lh.sqrt() * g.r_b()).tanh() / lh.sqrt();
        assert!((v - expected).abs() < 1e-15);
    }

    #[test]
    fn a_is_continuous_at_the_rate() {
        let g = geom();
        let lh = 250.0;
        let below = reaction_kernel_a(&g, lh * (1.0 - 1e-12), lh).unwrap();
        let at = reaction_kernel_a(&g, lh, lh).unwrap();
        let above = reaction_kernel_a(&g, lh * (1.0 + 1e-12), lh).unwrap();
        assert!((at - g.r_b()).abs() < 1e-15);
        assert!((below - at).abs() < 1e-12);
        assert!((above - at).abs() < 1e-12);
    }

    #[test]
    fn a_decays_like_inverse_sqrt_rate() {
        let g = geom();
        let ratio =
            reaction_kernel_a(&g, 1.0, 1e6).unwrap() / reaction_kernel_a(&g, 1.0, 1e8).unwrap();
        assert!((ratio - 10.0).abs() < 1e-4);
    }

    #[test]
    fn a_monotone_increasing_below_half_rate() {
        let g = geom();
        let lh = 1e4;
        let mut prev = f64::NEG_INFINITY;
        for i in 0..100 {
            let mu = 0.5 * lh * i as f64 / 99.0;
            let v = reaction_kernel_a(&g, mu, lh).unwrap();
            assert!(v > prev);
            prev = v;
        }
    }

    #[test]
    fn a_pole_is_reported() {
        let g = geom();
        // q r_b = pi/2 exactly lands on a pole of tan.
        let q = std::f64::consts::FRAC_PI_2 / g.r_b();
        let lh = 10.0;
        let r = reaction_kernel_a(&g, lh + q * q, lh);
        assert!(matches!(r, Err(SpectralError::Pole { .. })), "{r:?}");
    }

    #[test]
    fn matching_fn_continuous_across_rate() {
        let g = geom();
        let lh = 300.0;
        let lo = doi_matching(&g, lh, lh * (1.0 - 1e-13));
        let hi = doi_matching(&g, lh, lh * (1.0 + 1e-13));
        assert!((lo - hi).abs() < 1e-9);
    }

    #[test]
    fn matching_fn_sign_at_zero() {
        let g = geom();
        assert!(doi_matching(&g, 1e4, 0.0) < 0.0);
        assert!(doi_matching(&g, 1e-8, 0.0) < 0.0);
        assert_eq!(doi_matching(&g, 0.0, 0.0), 0.0);
        // Continuity of the exact mu = 0 value with the general formula.
        let near = doi_matching(&g, 1e4, 1e-12);
        assert!((near - doi_matching(&g, 1e4, 0.0)).abs() < 1e-10);
    }

    #[test]
    fn root_fn_sign_agrees_with_tan_form() {
        let g = geom();
        let kappa = g.kappa();
        for i in 1..2000 {
            let x = 0.01 * i as f64;
            let c = (kappa * x).cos();
            if c.abs() < 1e-3 {
                continue;
            }
            let tan_form = (kappa * x).tan() - x;
            // S(x)/x = cos(kx) (tan(kx) - x) / x
            let s = smol_root_fn(&g, x);
            assert_eq!(s.signum(), (c * tan_form).signum(), "x = {x}");
        }
    }
}
