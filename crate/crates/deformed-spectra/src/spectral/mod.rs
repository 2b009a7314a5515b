//! Independent finite-difference eigensolver for constant-mass Dirichlet
//! problems, plus a shooting cross-check. This module is the numerical oracle
//! against which every closed-form spectrum in the crate is validated.

mod grid;
mod shooting;
mod solve;
mod tridiagonal;

pub use grid::Grid;
pub use shooting::shooting_eigenvalue;
pub use solve::{
    overlap, overlap_simpson, refine, solve_dirichlet, solve_pdm_dirichlet, Spectrum,
    SpectrumEntry,
};
pub use tridiagonal::{inverse_iteration, sturm_count, tridiag_eigenvalues};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("requested {requested} states but the grid resolves at most {resolvable}")]
    TooManyStates { requested: usize, resolvable: usize },
    #[error("eigensolver failed to converge: {0}")]
    NoConvergence(String),
    #[error("grid cap of 2^20 points reached before tolerance {0:e}")]
    GridCap(f64),
    #[error("no sign change of the matching function in bracket ({0}, {1})")]
    NoSignChange(f64, f64),
    #[error("grids do not match")]
    GridMismatch,
}
