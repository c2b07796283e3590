use super::{NumericsError, Result};

const MAX_ITERATIONS: usize = 1000;

/// A closed interval known to contain a sign change of some scalar function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
    pub f_lo: f64,
    pub f_hi: f64,
}

impl Bracket {
    /// Evaluates `f` at both ends and validates the sign change.
    pub fn new<F: FnMut(f64) -> f64>(mut f: F, lo: f64, hi: f64) -> Result<Self> {
        let f_lo = f(lo);
        if f_lo.is_nan() {
            return Err(NumericsError::Evaluation { x: lo });
        }
        let f_hi = f(hi);
        if f_hi.is_nan() {
            return Err(NumericsError::Evaluation { x: hi });
        }
        Self::from_values(lo, hi, f_lo, f_hi)
    }

    pub fn from_values(lo: f64, hi: f64, f_lo: f64, f_hi: f64) -> Result<Self> {
        let ordered = lo < hi && lo.is_finite() && hi.is_finite();
        if !ordered || f_lo.is_nan() || f_hi.is_nan() || f_lo * f_hi > 0.0 {
            return Err(NumericsError::InvalidBracket { lo, hi, f_lo, f_hi });
        }
        Ok(Self { lo, hi, f_lo, f_hi })
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

/// Locates a sign change of `f` inside `bracket`.
///
/// Bisection and secant steps alternate: the secant candidate is only taken
/// when it lies strictly inside the current bracket, and every second step is
/// a plain bisection, so the width at least halves every two evaluations.
/// Iteration stops once the bracket is narrower than
/// `rel_tol * max(1, |x|)`; the midpoint of the final bracket is returned.
pub fn find_root<F: FnMut(f64) -> f64>(mut f: F, bracket: Bracket, rel_tol: f64) -> Result<f64> {
    if !(rel_tol >= f64::EPSILON) {
        return Err(NumericsError::InvalidTolerance(rel_tol));
    }
    let Bracket {
        lo: mut a,
        hi: mut b,
        f_lo: mut fa,
        f_hi: mut fb,
    } = bracket;
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }

    let mut secant_turn = true;
    for _ in 0..MAX_ITERATIONS {
        let mid = a + 0.5 * (b - a);
        if b - a <= rel_tol * mid.abs().max(1.0) || mid <= a || mid >= b {
            return Ok(mid);
        }
        let mut x = mid;
        if secant_turn && fa.is_finite() && fb.is_finite() {
            let s = b - fb * (b - a) / (fb - fa);
            if s > a && s < b {
                x = s;
            }
        }
        secant_turn = !secant_turn;

        let fx = f(x);
        if fx.is_nan() {
            return Err(NumericsError::Evaluation { x });
        }
        if fx == 0.0 {
            return Ok(x);
        }
        if (fx < 0.0) == (fa < 0.0) {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
    }
    Ok(a + 0.5 * (b - a))
}
