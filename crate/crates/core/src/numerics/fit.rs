use super::{NumericsError, Result};

/// Least-squares line through `(ln x, ln y)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlopeFit {
    pub slope: f64,
    pub intercept: f64,
    pub residual_rms: f64,
    pub n_points: usize,
}

impl SlopeFit {
    pub fn predict(&self, x: f64) -> f64 {
        (self.intercept + self.slope * x.ln()).exp()
    }
}

pub fn loglog_slope(points: &[(f64, f64)]) -> Result<SlopeFit> {
    if points.len() < 2 {
        return Err(NumericsError::Domain(format!(
            "slope fit needs at least 2 points, got {}",
            points.len()
        )));
    }
    if let Some(&(x, y)) = points
        .iter()
        .find(|(x, y)| !(*x > 0.0 && *y > 0.0 && x.is_finite() && y.is_finite()))
    {
        return Err(NumericsError::Domain(format!(
            "slope fit needs positive finite values, got ({x}, {y})"
        )));
    }

    let n = points.len() as f64;
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    if sxx == 0.0 {
        return Err(NumericsError::Domain("all x values coincide".into()));
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let residual_rms = (logs
        .iter()
        .map(|&(lx, ly)| (ly - intercept - slope * lx).powi(2))
        .sum::<f64>()
        / n)
        .sqrt();

    Ok(SlopeFit {
        slope,
        intercept,
        residual_rms,
        n_points: points.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn inverse_square_root() {
        let pts: Vec<_> = [10.0, 100.0, 1000.0]
            .iter()
            .map(|&x: &f64| (x, 7.0 / x.sqrt()))
            .collect();
        let fit = loglog_slope(&pts).unwrap();
        assert!((fit.slope + 0.5).abs() < 1e-14);
        assert!((fit.intercept - 7f64.ln()).abs() < 1e-12);
        assert!(fit.residual_rms < 1e-14);
    }

    #[test]
    fn inverse() {
        let pts: Vec<_> = (1..6).map(|i| (i as f64, 3.0 / i as f64)).collect();
        assert!((loglog_slope(&pts).unwrap().slope + 1.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(loglog_slope(&[(1.0, 1.0)]).is_err());
        assert!(loglog_slope(&[(1.0, 1.0), (2.0, 0.0)]).is_err());
        assert!(loglog_slope(&[(-1.0, 1.0), (2.0, 1.0)]).is_err());
        assert!(loglog_slope(&[(2.0, 1.0), (2.0, 3.0)]).is_err());
    }

    proptest! {
        #[test]
        fn recovers_power_law(c in 1e-6f64..1e6, p in -3.0f64..3.0, n in 2usize..12) {
            let pts: Vec<_> = (0..n).map(|i| {
                let x = 10f64.powf(i as f64 * 0.7 - 2.0);
                (x, c * x.powf(p))
            }).collect();
            let fit = loglog_slope(&pts).unwrap();
            prop_assert!((fit.slope - p).abs() < 1e-12);
            prop_assert!(fit.residual_rms >= 0.0);
        }
    }
}
