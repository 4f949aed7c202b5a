//! Deterministic transport on `k` copies of the star graph `S_k`, perturbed by an
//! interface at the center and by jumps between copies, together with the exact
//! Walsh-spider limit objects used to verify the diffusive-scaling convergence.
//!
//! Modules map onto the pieces of the pipeline:
//!
//! - [`model`] — graph/weight configuration and the spatial grid,
//! - [`matrices`] — the interface matrices `P`, `R`, the jump intensities `Q^j`,
//!   matrix exponentials and the stochastic resolvent,
//! - [`semigroup`] — finite-volume densities on the `k²` edges and the exact
//!   transport/scatter/splitting evolutions,
//! - [`spectral`] — eigenfunctions of the scaled generator, the boundary
//!   functional and its solver, and their small-`eps` limits,
//! - [`walsh`] — the spider heat kernel, resolvent and the embedding between
//!   spider densities and copy-invariant edge densities,
//! - [`pdmp`] — event-driven Monte Carlo simulation of the scaled process,
//! - [`analytic`] — polynomial-Gaussian test functions with closed-form
//!   derivatives,
//! - [`experiments`] — the ladder runs shared by the CLI and the acceptance
//!   suite.

pub mod analytic;
pub mod experiments;
pub mod matrices;
pub mod model;
pub mod pdmp;
pub mod quad;
pub mod semigroup;
pub mod spectral;
pub mod walsh;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A parameter is outside its admissible range.
    #[error("parameter error: {0}")]
    Parameter(String),
    /// Array/grid shapes do not match.
    #[error("shape mismatch: {0}")]
    Shape(String),
    /// A numerical tolerance or convergence requirement was violated.
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed file: {0}")]
    Format(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub(crate) fn numerical(msg: impl Into<String>) -> Self {
        Error::Numerical(msg.into())
    }
}
