//! Exact symbolic computation with the ladder operators `a`, `a†` subject to
//! `[a, a†] = 1`, together with the algebra of composable diagram graphs that
//! represents it.
//!
//! - [`ladder`]: normally ordered polynomials, the closed-form product,
//!   commutators, and normal ordering of words.
//! - [`graph`]: acyclic graphs with dangling in/out lines, enumeration of all
//!   compositions, formal sums of graphs and the forgetful projection.
//! - [`expr`]: a small textual language for operator expressions.
//! - [`oracle`]: cross-checks between the independent routes.

pub mod coefficient;
pub mod error;
pub mod expr;
pub mod graph;
pub mod ladder;
pub mod oracle;

pub use coefficient::Coefficient;
pub use graph::{DiagGraph, GraphSum, PortId};
pub use ladder::{NormalMonomial, NormalPolynomial, Word};
