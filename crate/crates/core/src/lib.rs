//! Executable boxicity certificates.
//!
//! Every upper bound produced here comes with an [`IntervalCover`]: a list of
//! interval representations whose realized graphs intersect to exactly the
//! target graph. Covers are checked with [`verify_cover`] before they leave
//! the crate.
//!
//! Modules:
//! - [`graph`]: graph values, generalized joins, reduced graphs, exact χ/ω.
//! - [`interval`]: exact-rational interval representations, recognition,
//!   cover verification and an exhaustive boxicity oracle.
//! - [`circular`]: circular cliques and their χ-sized covers.
//! - [`join_cover`]: covers of generalized joins and the clique lower bound.
//! - [`zdg`]: zero-divisor graphs of ℤ_N and ℤ_2^k.
//! - [`cli`]: the `boxlab` command line.

pub mod circular;
pub mod cli;
mod error;
pub mod graph;
pub mod interval;
pub mod join_cover;
pub mod zdg;

pub use error::{Error, Result};
pub use graph::{Coloring, Graph, VertexPartition};
pub use interval::{
    boxicity_exact, graph_of_intervals, is_interval_graph, verify_cover, BoxResult, Budget,
    IntervalCover, IntervalRep, Obstruction, Rational, Recognition,
};
