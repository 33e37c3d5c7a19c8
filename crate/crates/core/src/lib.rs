//! Injective edge-colorings of finite simple graphs.
//!
//! An edge coloring is *injective* when any two edges that are the end edges
//! of a path of length three, or that lie in a common triangle, receive
//! different colors. Adjacent edges may share a color.
//!
//! The crate provides the graph model and the conflict graph, validators for
//! injective edge colorings and star vertex colorings, an exact solver, one
//! constructive coloring algorithm per known upper bound, a fixture corpus
//! and text formats (graph6, edge list, DIMACS, JSON results).

pub mod bounds;
pub mod coloring;
pub mod conflict;
pub mod corpus;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod mad;
pub mod solver;

pub use coloring::{EdgeColoring, Verdict, VertexColoring, Witness};
pub use conflict::ConflictGraph;
pub use error::{Error, Result};
pub use graph::{Bipartition, Girth, Graph};
pub use mad::{mad_exact, Rational};
pub use solver::SolveResult;
