//! Exact counting of digraph homomorphisms with directed-tree patterns,
//! executable checks for the star/degree-moment inequalities they satisfy,
//! exhaustive witness search in the homomorphism order on directed trees,
//! and step-kernel configuration products with a matching random-digraph
//! sampler.
//!
//! Everything countable is counted exactly (arbitrary-precision integers and
//! rationals); floating point only enters where fractional exponents force
//! it, and those comparisons carry an explicit guard band.
//!
//! The `examples/` directory has one runnable program per capability; the
//! `dihom` binary exposes the same operations as subcommands.

pub mod cli;
pub mod digraph;
pub mod error;
pub mod homcount;
pub mod inequalities;
pub mod kernels;
pub mod models;
pub mod order;
pub mod ratio;
pub mod report;
pub mod suites;
pub mod tree;

pub use digraph::{enumerate_hosts, host_from_index, DegreeProfile, Digraph};
pub use error::{Error, Result};
pub use tree::{enumerate_directed_trees, Orient, RootedDirectedTree};
