use super::{NumericsError, Result};

/// `sinh(a) / sinh(b)` for `0 <= a <= b`, evaluated as
/// `exp(a - b) * (1 - exp(-2a)) / (1 - exp(-2b))` so that neither factor
/// overflows however large `b` is.
pub fn sinh_ratio(a: f64, b: f64) -> Result<f64> {
    if !(b > 0.0) || !b.is_finite() {
        return Err(NumericsError::Domain(format!(
            "sinh_ratio requires b > 0, got {b}"
        )));
    }
    if !(a >= 0.0) || a > b {
        return Err(NumericsError::Domain(format!(
            "sinh_ratio requires 0 <= a <= b, got a = {a}, b = {b}"
        )));
    }
    Ok((a - b).exp() * (-(-2.0 * a).exp_m1()) / (-(-2.0 * b).exp_m1()))
}
