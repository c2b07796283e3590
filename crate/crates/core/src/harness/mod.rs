//! Comparison studies between the two models: evaluation grids, sup-norm
//! differences, parameter sweeps, CSV/SVG output and the command-line front end.

mod cli;
mod csv;
mod grids;
mod norms;
mod svg;
mod sweep;

pub use cli::run_cli;
pub use csv::{fmt_float, read_columns, CsvTable};
pub use svg::{LinePlot, Series};
pub use sweep::{eigen_table, study_cell, study_table, sweep, EigenRow, StudyRow, STUDY_HEADER};

pub use grids::{comparison_grids, GridSpec};
pub use norms::{
    cdf_diff_on, cdf_norm_between, density_diff_on, sup_norm_between, sup_norm_cdf_diff,
    sup_norm_density_diff, NormReport,
};

use thiserror::Error;

use crate::mc::McError;
use crate::numerics::NumericsError;
use crate::solution::SolutionError;
use crate::spectral::SpectralError;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Solution(#[from] SolutionError),
    #[error(transparent)]
    MonteCarlo(#[from] McError),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, HarnessError>;
