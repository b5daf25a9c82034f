//! Grundy, color-dominating and z-colorings of simple graphs.
//!
//! The crate bundles
//!
//! * the color-reduction heuristics ([`reduce`]): Grundy reduction, the
//!   Grundy color-dominating transform, the nice-vertex z-transform, the
//!   z-coloring heuristic, its complementary augmentation and the iterated
//!   variant;
//! * exact verification of every coloring property ([`verify`]);
//! * brute-force oracles for χ, Γ, b and z on small graphs ([`oracle`]);
//! * generation of z-atom catalogs, colored embeddings and an upper-bound
//!   prover built on them ([`atoms`]);
//! * constructors for the named graph families ([`families`]) and random
//!   instance generators ([`random`]);
//! * DIMACS and JSON record I/O ([`io`]) plus the command-line front end
//!   ([`cli`]).
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod atoms;
pub mod canon;
pub mod cli;
pub mod coloring;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod random;
pub mod reduce;
pub mod verify;

pub use coloring::{ColoredGraph, Coloring};
pub use error::{Error, Result};
pub use graph::Graph;
pub use verify::Verdict;
