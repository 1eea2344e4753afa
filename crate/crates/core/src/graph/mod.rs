//! The algebra of composable diagram graphs.
//!
//! A [`DiagGraph`] is a set of vertices whose ingoing and outgoing lines are
//! distinguishable. Lines are joined only out of one vertex and into another
//! and never form a closed path; the loose ends are gray (ingoing) and white
//! (outgoing) spots. Composing `g1` with `g2` joins some gray spots of `g1`
//! with white spots of `g2`, and the product of two graphs is the sum of all
//! such compositions. Forgetting the inner structure maps a graph to the
//! monomial `a†^white a^gray`, which turns graph products into normally
//! ordered operator products.

mod build;
mod compose;
mod diagram;
mod dot;
mod encode;
mod sum;

pub use build::{build_iteratively, BuildStep, GraphBuilder, MatchingChoice};
pub use compose::{compose, enumerate_compositions, enumerate_matchings, Matching};
pub use diagram::{DiagGraph, Edge, PortId, Vertex};
pub use dot::to_dot;
pub use encode::{canonical_decode, canonical_encode};
pub use sum::{graph_multiply, project_sum, GraphSum};
