//! Two-party communication protocols for graph properties.
//!
//! A graph's edges are split between Alice and Bob ([`EdgePartition`]). The
//! [`comm`] runtime executes party state machines in lockstep and records a
//! bit-exact [`Transcript`]; [`protocols`] holds the classical protocols for
//! connectivity, spanning forests, bipartiteness, bipartite matching,
//! Eulerian tours and triangles. [`reductions`] builds the gadget instances
//! that encode inner product and parity into graph properties and verifies
//! each construction against the centralized oracles in [`algo`].
//!
//! Linear algebra in [`algo::linalg`] is generic over the scalar: exact
//! integers (`i64`, `i128`, `BigInt`) for fraction-free determinants and any
//! field ([`ModP`], exact rationals) for Gaussian elimination. The aliases below
//! pin the defaults used throughout the crate.

pub mod algo;
pub mod bench;
pub mod bits;
pub mod comm;
pub mod error;
pub mod graph;
pub mod io;
pub mod protocols;
pub mod random;
pub mod reductions;
pub mod union_find;

pub use algo::linalg::{ExactInteger, Field, Matrix, ModP};
pub use bits::{BitMatrix, BitVector};
pub use comm::{ProtocolOutcome, Role, Transcript};
pub use error::{Error, Result};
pub use graph::{ArcPartition, DiGraph, Edge, EdgePartition, Graph, Matching, Owner};

/// Default exact integer for determinants of adjacency matrices.
pub type DetInt = i128;
/// Arbitrary-precision fallback when [`DetInt`] would overflow.
pub type BigDetInt = num_bigint::BigInt;
pub type IntMatrix = Matrix<DetInt>;
pub type ModPMatrix = Matrix<ModP>;
pub type RationalMatrix = Matrix<num_rational::BigRational>;
