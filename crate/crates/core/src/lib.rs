//! Exact computation of cohomological invariants for moduli spaces of
//! rank-2 semistable sheaves with fixed odd-degree determinant, over smooth
//! projective curves and their one-nodal degenerations.
//!
//! The crate computes, with exact rational arithmetic throughout:
//!
//! - closed-form Hodge–Poincaré polynomials for the smooth fiber, the
//!   Gieseker central fiber and the Simpson moduli space
//!   ([`closed_forms`]);
//! - the Zagier recursion generating the Mumford relation ideals in the
//!   weighted ring `Q[alpha, beta, gamma]` and exact Hilbert dimensions of
//!   the quotients ([`relations`]);
//! - brute-force primitive and monodromy-invariant primitive subspaces of
//!   the exterior algebra on the degree-3 generators, monomial bases, and
//!   the assembled ring models ([`exterior`]);
//! - two-component SNC weight spectral sequences, Gysin and specialization
//!   rank bookkeeping, and full mixed dimension tables `(n, w, p, q)`
//!   ([`degeneration`]);
//! - a verification suite cross-checking every pair of independent routes
//!   ([`verify`]).

pub mod bipoly;
pub mod closed_forms;
pub mod degeneration;
pub mod error;
pub mod exterior;
pub mod linalg;
pub mod rational;
pub mod relations;
pub mod tables;
pub mod verify;

pub use error::{Error, Result};
