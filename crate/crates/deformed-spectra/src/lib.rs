//! Bound-state spectra and eigenfunctions of PT-symmetric Hamiltonians built on
//! the non-standard (Jordanian) quantum algebra U_z(sl(2,R)).
//!
//! The crate implements the full solution pipeline for this family of models:
//!
//! 1. [`algebra`] — differential realizations of sl(2,R) and U_z(sl(2,R)),
//!    operator composition, and numerical verification of the deformed
//!    commutation relations and the Casimir.
//! 2. [`transform`] — similarity transformation of an algebraic Hamiltonian to
//!    position-dependent-mass (PDM) form, and the point canonical
//!    transformation (PCT) that maps a PDM system to a constant-mass
//!    Schrödinger problem on a finite interval.
//! 3. [`specfun`] — special functions needed by the closed-form spectra:
//!    log-Gamma, terminating Gauss hypergeometric, generalized Laguerre,
//!    confluent Heun, and angular spheroidal eigenvalues/functions.
//! 4. [`spectral`] — an independent finite-difference eigensolver for Dirichlet
//!    problems; the oracle every closed form is checked against.
//! 5. [`models`] — the catalog of concrete models: the sl(2,R) warm-up, the
//!    three deformed examples, the finite-dimensional comparison formulas and
//!    the double-well trigonometric (DWT) application.
//! 6. [`cli`] — the command-line surface (spectra, potentials, z-scans,
//!    figures, algebra verification) used by the thin `deformed-spectra` bin.
//!
//! Each capability has a runnable demo under `examples/`; see the README.

pub mod algebra;
pub mod cli;
pub mod models;
pub mod specfun;
pub mod spectral;
pub mod transform;

pub use num_complex::Complex64;
