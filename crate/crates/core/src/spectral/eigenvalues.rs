use std::f64::consts::PI;

use super::characteristic::{doi_matching, smol_pole_fn, smol_root_fn};
use super::eigenfunction::RadialEigenfunction;
use super::{EigenMode, Geometry, ModeSet, Model, Result, SpectralError, ROOT_REL_TOL};
use crate::numerics::{find_root, Bracket};

/// Scan refinements tried before giving up on a node-count mismatch.
const MAX_REFINEMENTS: usize = 3;

/// `theta_n = (2n - 1) pi / (2 kappa)`: the zeros of `cos(kappa x)`.
fn theta(geometry: &Geometry, n: usize) -> f64 {
    if n == 0 {
        0.0
    } else {
        (2 * n - 1) as f64 * PI / (2.0 * geometry.kappa())
    }
}

/// Root `x` of `g` between consecutive cosine zeros, `(theta_lo, theta_hi)`.
fn root_between(g: impl Fn(f64) -> f64, lo: f64, hi: f64) -> Result<f64> {
    let bracket = Bracket::new(&g, lo, hi)?;
    Ok(find_root(&g, bracket, ROOT_REL_TOL)?)
}

/// The first `count` Smoluchowski eigenvalues `alpha_n`, with
/// `a_n = 1 / ||phi_n||^2`.
///
/// `R sqrt(alpha_n)` is the unique root of `tan(kappa x) = x` on
/// `(theta_{n-1}, theta_n)`.
pub fn smol_eigenvalues(geometry: &Geometry, count: usize) -> Result<ModeSet> {
    let radius = geometry.radius();
    let mut modes = Vec::with_capacity(count);
    for n in 1..=count {
        let x = root_between(
            |x| smol_root_fn(geometry, x),
            theta(geometry, n - 1),
            theta(geometry, n),
        )?;
        let alpha = (x / radius).powi(2);
        let norm = RadialEigenfunction::smoluchowski(geometry, alpha).norm_sq();
        modes.push(EigenMode {
            n,
            value: alpha,
            norm_const: 1.0 / norm,
            model: Model::Smoluchowski,
        });
    }
    Ok(ModeSet {
        geometry: *geometry,
        model: Model::Smoluchowski,
        modes,
    })
}

/// The first `count` poles `beta_n` of `f`, one in each `(theta_n, theta_{n+1})`,
/// so that `alpha_n < beta_n < alpha_{n+1}`.
pub fn smol_poles(geometry: &Geometry, count: usize) -> Result<Vec<f64>> {
    let radius = geometry.radius();
    (1..=count)
        .map(|n| {
            root_between(
                |x| smol_pole_fn(geometry, x),
                theta(geometry, n),
                theta(geometry, n + 1),
            )
            .map(|x| (x / radius).powi(2))
        })
        .collect()
}

/// Eigenvalues of the Neumann Laplacian on the ball `|x| < R` restricted to
/// radial functions: `0` followed by `(x_n / R)^2` with `tan(x_n) = x_n`.
pub fn neumann_ball_eigenvalues(radius: f64, count: usize) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return Ok(out);
    }
    out.push(0.0);
    for n in 1..count {
        let lo = n as f64 * PI;
        let x = root_between(|x| x.sin() - x * x.cos(), lo, lo + 0.5 * PI)?;
        out.push((x / radius).powi(2));
    }
    Ok(out)
}

/// The first `count` Doi eigenvalues `mu_n(lambda_hat)`, with
/// `b_n = 1 / ||psi_n||^2`.
///
/// Eigenvalues below the rate are bracketed by `(beta_{n-1}, alpha_n)`, where
/// `f` sweeps `(0, inf)` once while the kernel stays in `(0, r_b]`. The rest
/// are found by a sign scan of [`doi_matching`] up to `alpha_count`, which
/// bounds `mu_count` from above. Every mode is checked to have the node count
/// of its index; a mismatch triggers a finer scan.
pub fn doi_eigenvalues(geometry: &Geometry, lambda_hat: f64, count: usize) -> Result<ModeSet> {
    if !(lambda_hat >= 0.0 && lambda_hat.is_finite()) {
        return Err(SpectralError::Domain(format!(
            "lambda_hat must be finite and >= 0, got {lambda_hat}"
        )));
    }
    let model = Model::Doi { lambda_hat };
    let mut set = ModeSet {
        geometry: *geometry,
        model,
        modes: Vec::with_capacity(count),
    };
    if count == 0 {
        return Ok(set);
    }
    let smol = smol_eigenvalues(geometry, count)?.values();
    let poles = smol_poles(geometry, count)?;
    let phi = |mu: f64| doi_matching(geometry, lambda_hat, mu);

    let mut values = Vec::with_capacity(count);
    if lambda_hat == 0.0 {
        values.push(0.0);
    } else {
        for n in 1..=count {
            if smol[n - 1] > lambda_hat {
                break;
            }
            let lo = if n == 1 { 0.0 } else { poles[n - 2] };
            let bracket = Bracket::new(phi, lo, smol[n - 1])?;
            values.push(find_root(phi, bracket, ROOT_REL_TOL)?);
        }
    }

    let fixed = values.len();
    let ceiling = smol[count - 1].sqrt() * (1.0 + 1e-12);
    let mut step = PI / (64.0 * geometry.radius());
    let mut refinements = 0;
    loop {
        values.truncate(fixed);
        if values.len() < count {
            scan(&phi, &mut values, count, step, ceiling)?;
        }
        match verify(geometry, lambda_hat, &values) {
            Ok(()) => break,
            Err(_) if refinements < MAX_REFINEMENTS => {
                refinements += 1;
                step *= 0.25;
            }
            Err(e) => return Err(e),
        }
    }

    set.modes = values
        .iter()
        .enumerate()
        .map(|(i, &mu)| EigenMode {
            n: i + 1,
            value: mu,
            norm_const: 1.0 / RadialEigenfunction::doi(geometry, lambda_hat, mu).norm_sq(),
            model,
        })
        .collect();
    if set.modes.len() < count {
        let found = set.modes.len();
        return Err(SpectralError::Exhausted {
            requested: count,
            found,
            partial: Box::new(set),
        });
    }
    Ok(set)
}

/// Appends roots of `phi` found by stepping `k = sqrt(mu)` in increments of
/// `step`, starting half a step past the last known root.
fn scan(
    phi: &impl Fn(f64) -> f64,
    values: &mut Vec<f64>,
    count: usize,
    step: f64,
    ceiling: f64,
) -> Result<()> {
    let mut k_lo = values.last().map_or(0.0, |mu| mu.sqrt()) + 0.5 * step;
    let mut f_lo = phi(k_lo * k_lo);
    while values.len() < count && k_lo < ceiling {
        let k_hi = (k_lo + step).min(ceiling);
        let f_hi = phi(k_hi * k_hi);
        if f_hi == 0.0 {
            values.push(k_hi * k_hi);
        } else if f_lo != 0.0 && f_lo.signum() != f_hi.signum() {
            let bracket = Bracket::from_values(k_lo * k_lo, k_hi * k_hi, f_lo, f_hi)?;
            values.push(find_root(phi, bracket, ROOT_REL_TOL)?);
        }
        k_lo = k_hi;
        f_lo = f_hi;
    }
    Ok(())
}

fn verify(geometry: &Geometry, lambda_hat: f64, values: &[f64]) -> Result<()> {
    for (i, &mu) in values.iter().enumerate() {
        let nodes = RadialEigenfunction::doi(geometry, lambda_hat, mu).node_count();
        if nodes != i {
            return Err(SpectralError::Verification(format!(
                "mode {} at mu = {mu} has {nodes} nodes, expected {i}",
                i + 1
            )));
        }
    }
    Ok(())
}
