//! Exact computer algebra for Rota-Baxter operators on the polynomial algebra `F[a]`.
//!
//! The crate is organized bottom-up:
//!
//! - [`arith`]: big integers, normalized rationals, binomials and factorials.
//! - [`poly`]: dense univariate polynomials over [`Rational`] and the
//!   [`Discrepancy`] classifier used by every verifier.
//! - [`bernoulli`]: Bernoulli numbers and polynomials, their divided variants,
//!   Faulhaber power-sum polynomials, harmonic numbers and a persistent cache.
//! - [`rbop`]: Rota-Baxter operators represented by their images on the
//!   monomial basis, the `phi` involution, weight scaling and axiom checkers.
//! - [`identities`]: one verifier per Bernoulli identity, a catalog of them, and
//!   verification reports.
//! - [`cli`]: the `rbb` command-line harness (tables, single verifications,
//!   sweeps, cache files).
//!
//! Everything is exact; there is no floating-point path anywhere.

pub mod arith;
pub mod bernoulli;
pub mod cli;
pub mod identities;
pub mod poly;
pub mod rbop;

mod error;

pub use arith::{binomial, factorial, rat, BigInt, Rational};
pub use bernoulli::BernoulliCache;
pub use error::{Error, Result};
pub use poly::{classify_discrepancy, Discrepancy, Poly};
pub use rbop::RbOperator;
