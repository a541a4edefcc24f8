//! Numerical study of the Douglas-Kazakov phase transition.
//!
//! The crate solves the constrained equilibrium problem of the log-gas with
//! quadratic potential under a unit density cap, evaluates the free energy
//! `F(T)` on both sides of the critical lifetime `T = pi^2`, and exposes two
//! independent cross-checks: a convex grid minimiser of the energy functional
//! and direct summation of the finite-N partition function over strictly
//! decreasing integer vectors.
//!
//! Module map:
//! - [`quad`]: adaptive Gauss-Kronrod quadrature used by the potential
//!   evaluations and by the in-repo reference integrals.
//! - [`elliptic`]: complete/incomplete elliptic integrals (Carlson forms).
//! - [`transition`]: the `T = 8EK - 4(1-k^2)K^2` parameter solve, free energy
//!   and its first three derivatives, lateral limits at the critical point.
//! - [`equilibrium`]: analytic densities, Stieltjes transform, log-potential,
//!   Mhaskar-Saff functional and Euler-Lagrange certification.
//! - [`partition`]: exact finite-N partition sums in log space.
//! - [`oracle`]: projected-gradient minimiser of the discretised energy over
//!   the capped simplex.

pub mod elliptic;
pub mod equilibrium;
pub mod oracle;
pub mod partition;
pub mod quad;
pub mod transition;

/// Error type shared by all modules.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Input outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// An iterative procedure failed to reach its tolerance.
    #[error("no convergence: {0}")]
    NoConvergence(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn no_convergence(msg: impl Into<String>) -> Self {
        Error::NoConvergence(msg.into())
    }
}
