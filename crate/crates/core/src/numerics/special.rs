//! Elementary combinations that lose all their digits to cancellation when
//! written naively near the origin (or overflow far from it). Each one switches
//! to its Taylor series for `|x| < 1`.

const SERIES_CUTOFF: f64 = 1.0;

/// Iterates `p_n = x^(2n-2) / (2n+1)!` for n = 1, 2, ... and folds
/// `weight(n) * p_n` until the terms stop contributing.
fn odd_factorial_series(x: f64, weight: impl Fn(usize) -> f64) -> f64 {
    let x2 = x * x;
    let mut p = 1.0 / 6.0;
    let mut sum = 0.0;
    for n in 1..40 {
        let term = weight(n) * p;
        sum += term;
        if term.abs() <= 1e-18 * sum.abs() {
            break;
        }
        let m = 2.0 * n as f64;
        p *= x2 / ((m + 2.0) * (m + 3.0));
    }
    sum
}

fn alternating(n: usize) -> f64 {
    if n % 2 == 1 {
        1.0
    } else {
        -1.0
    }
}

/// `sin(x) / x`, equal to 1 at the origin.
#[inline]
pub fn sinc(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        x.sin() / x
    }
}

/// `(1 - cos x) / x^2`.
#[inline]
pub fn versine_over_sq(x: f64) -> f64 {
    let s = sinc(0.5 * x);
    0.5 * s * s
}

/// `(sin x - x cos x) / x^3`, tending to 1/3.
pub fn sin_minus_xcos_cubed(x: f64) -> f64 {
    if x.abs() < SERIES_CUTOFF {
        odd_factorial_series(x, |n| alternating(n) * 2.0 * n as f64)
    } else {
        (x.sin() - x * x.cos()) / (x * x * x)
    }
}

/// `(x - sin x) / x^3`, tending to 1/6.
pub fn x_minus_sin_cubed(x: f64) -> f64 {
    if x.abs() < SERIES_CUTOFF {
        odd_factorial_series(x, alternating)
    } else {
        (x - x.sin()) / (x * x * x)
    }
}

/// `(x cosh x - sinh x) / x^3`, tending to 1/3. Only used for `|x| < 1`
/// callers; larger arguments are evaluated directly and may overflow.
pub fn xcosh_minus_sinh_cubed(x: f64) -> f64 {
    if x.abs() < SERIES_CUTOFF {
        odd_factorial_series(x, |n| 2.0 * n as f64)
    } else {
        (x * x.cosh() - x.sinh()) / (x * x * x)
    }
}

/// `(sinh x - x) / x^3`, tending to 1/6.
pub fn sinh_minus_x_cubed(x: f64) -> f64 {
    if x.abs() < SERIES_CUTOFF {
        odd_factorial_series(x, |_| 1.0)
    } else {
        (x.sinh() - x) / (x * x * x)
    }
}

/// `tanh(x) / x`, equal to 1 at the origin.
#[inline]
pub fn tanhc(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        x.tanh() / x
    }
}

/// `x / sinh(x)` without overflow, equal to 1 at the origin.
pub fn x_over_sinh(x: f64) -> f64 {
    let a = x.abs();
    if a == 0.0 {
        1.0
    } else if a < 20.0 {
        a / a.sinh()
    } else {
        2.0 * a * (-a).exp() / (-(-2.0 * a).exp_m1())
    }
}

/// `(a coth a - 1) / a^2` for `a >= 0`, tending to 1/3.
pub fn coth_moment(a: f64) -> f64 {
    if a < SERIES_CUTOFF {
        xcosh_minus_sinh_cubed(a) * x_over_sinh(a)
    } else {
        (a / a.tanh() - 1.0) / (a * a)
    }
}

/// `(sinh 2a - 2a) / (4 a sinh^2 a)` for `a >= 0`, tending to 1/3.
pub fn sinh_square_moment(a: f64) -> f64 {
    if a < 0.5 * SERIES_CUTOFF {
        let r = x_over_sinh(a);
        2.0 * sinh_minus_x_cubed(2.0 * a) * r * r
    } else {
        let inv_sinh = if a < 20.0 {
            1.0 / a.sinh()
        } else {
            2.0 * (-a).exp() / (-(-2.0 * a).exp_m1())
        };
        0.5 / (a * a.tanh()) - 0.5 * inv_sinh * inv_sinh
    }
}

/// `tanh(a) / (a - tanh a)` for `a > 0`, which behaves like `3 / a^2` near 0.
pub fn tanh_over_excess(a: f64) -> f64 {
    if a < SERIES_CUTOFF {
        // sinh(a) / (a cosh a - sinh a)
        1.0 / (a * a * xcosh_minus_sinh_cubed(a) * x_over_sinh(a))
    } else {
        let t = a.tanh();
        t / (a - t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * b.abs().max(1e-300)
    }

    #[test]
    fn limits_at_origin() {
        assert_eq!(sinc(0.0), 1.0);
        assert!(close(sin_minus_xcos_cubed(0.0), 1.0 / 3.0, 1e-16));
        assert!(close(x_minus_sin_cubed(0.0), 1.0 / 6.0, 1e-16));
        assert!(close(xcosh_minus_sinh_cubed(0.0), 1.0 / 3.0, 1e-16));
        assert!(close(sinh_minus_x_cubed(0.0), 1.0 / 6.0, 1e-16));
        assert!(close(coth_moment(0.0), 1.0 / 3.0, 1e-16));
        assert!(close(sinh_square_moment(0.0), 1.0 / 3.0, 1e-16));
        assert!(close(versine_over_sq(0.0), 0.5, 1e-16));
    }

    #[test]
    fn series_and_direct_forms_meet_at_cutoff() {
        for &x in &[0.999_999_9f64, 1.000_000_1] {
            assert!(close(
                sin_minus_xcos_cubed(x),
                (x.sin() - x * x.cos()) / x.powi(3),
                1e-14
            ));
            assert!(close(
                x_minus_sin_cubed(x),
                (x - x.sin()) / x.powi(3),
                1e-14
            ));
            assert!(close(
                xcosh_minus_sinh_cubed(x),
                (x * x.cosh() - x.sinh()) / x.powi(3),
                1e-14
            ));
            assert!(close(
                sinh_minus_x_cubed(x),
                (x.sinh() - x) / x.powi(3),
                1e-14
            ));
            assert!(close(coth_moment(x), (x / x.tanh() - 1.0) / (x * x), 1e-14));
            let t = x.tanh();
            assert!(close(tanh_over_excess(x), t / (x - t), 1e-13));
        }
        for &a in &[0.499_999_9f64, 0.500_000_1, 3.0] {
            let direct = ((2.0 * a).sinh() - 2.0 * a) / (4.0 * a * a.sinh().powi(2));
            assert!(close(sinh_square_moment(a), direct, 1e-14));
        }
    }

    #[test]
    fn large_arguments_are_finite() {
        assert!(close(coth_moment(1e6), (1e6 - 1.0) / 1e12, 1e-15));
        assert!(close(sinh_square_moment(1e6), 0.5e-6, 1e-15));
        assert!(close(tanh_over_excess(1e6), 1.0 / (1e6 - 1.0), 1e-15));
        assert_eq!(x_over_sinh(1e6), 0.0);
        assert!(close(x_over_sinh(30.0), 30.0 / 30f64.sinh(), 1e-14));
    }

    #[test]
    fn small_argument_cancellation_free() {
        // (x cosh x - sinh x)/x^3 at x = 1e-4: 1/3 + x^2/30 + ...
        let x = 1e-4;
        assert!(close(
            xcosh_minus_sinh_cubed(x),
            1.0 / 3.0 + x * x / 30.0,
            1e-15
        ));
        assert!(close(
            tanh_over_excess(x),
            3.0 / (x * x) * (1.0 + x * x / 15.0),
            1e-12
        ));
    }
}
