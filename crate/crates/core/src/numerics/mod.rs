//! Foundation kernels shared by the spectral, solution and harness layers:
//! bracketed root finding, adaptive Gauss–Kronrod quadrature, overflow-safe
//! hyperbolic ratios, log–log slope fitting and a handful of cancellation-free
//! elementary functions.

mod fit;
mod hyperbolic;
mod quadrature;
mod roots;
pub mod special;
mod sum;

pub use fit::{loglog_slope, SlopeFit};
pub use hyperbolic::sinh_ratio;
pub use quadrature::{integrate, integrate_with_limit};
pub use roots::{find_root, Bracket};
pub use sum::CompensatedSum;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericsError {
    #[error("bracket [{lo}, {hi}] does not enclose a sign change (f_lo = {f_lo}, f_hi = {f_hi})")]
    InvalidBracket {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },
    #[error("function evaluated to NaN at x = {x}")]
    Evaluation { x: f64 },
    #[error("tolerance {0} is below machine precision")]
    InvalidTolerance(f64),
    #[error("quadrature did not reach tolerance: estimate {estimate}, error bound {error_bound}")]
    Accuracy { estimate: f64, error_bound: f64 },
    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, NumericsError>;
