//! Exact evaluation of the graph invariant φ, its companion ψ, and the
//! sl(2) weight system at `c = 3/8` on chord diagrams, together with
//! exhaustive checkers for the identities these functions satisfy.
//!
//! Every value is a dyadic rational and is computed without rounding; two
//! evaluators agree only when their normal forms are identical.

pub mod arith;
pub mod chords;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod par;
pub mod relations;

pub use arith::{Dyadic, Gf2Matrix};
pub use chords::ChordDiagram;
pub use error::{Error, Result};
pub use graph::{EdgeSet, Graph, VertexSet};
pub use invariants::{EvalCache, EvalOptions};
pub use par::Exec;
pub use relations::FormalSum;
