//! Exact construction and verification of difference/differential relations
//! for orthogonal polynomials of a continuous variable in the Askey scheme.
//!
//! The crate builds the polynomials of eighteen families (Askey-Wilson,
//! Wilson, continuous Hahn, Jacobi, ... down to Hermite) over exact
//! Gaussian-rational arithmetic and mechanically checks, identity by
//! identity, the structural relations these families satisfy:
//!
//! - eigen relations of the square-root-free Hamiltonian,
//! - forward/backward shift relations and their factorization,
//! - Christoffel expansions of `Φ̌·P̌_n` at shifted parameters, with the
//!   expansion coefficients computed both from determinants and from
//!   closed forms,
//! - the difference relations (idQM) and differential relations (oQM)
//!   that follow from them,
//! - the Askey-Wilson single-parameter-shift ladder and its composition,
//! - floating-point checks of weight-function ratios and orthogonality
//!   norms, the only places infinite products and Gamma functions appear.
//!
//! Modules:
//! - [`scalar`], [`laurent`], [`rational`], [`det`]: the exact-arithmetic
//!   substrate (Q(i) scalars, Laurent polynomials, rational functions,
//!   small determinants)
//! - [`families`]: per-family data and exact polynomial construction
//! - [`christoffel`]: Φ̌, determinant/closed-form expansion coefficients,
//!   expansion identities
//! - [`operators`]: shift operators, Hamiltonian, difference/differential
//!   relation checks
//! - [`numeric`]: floating-point weight and orthogonality checks
//! - [`suite`], [`report`], [`config`]: the verification harness

pub mod config;
pub mod christoffel;
pub mod det;
pub mod error;
pub mod families;
pub mod laurent;
pub mod numeric;
pub mod operators;
pub mod rational;
pub mod report;
pub mod scalar;
pub mod suite;

pub use error::{Error, Result};
pub use laurent::{LaurentPoly, Var};
pub use rational::RationalFn;
pub use scalar::Scalar;
