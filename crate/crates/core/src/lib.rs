//! Exact and modular counting of list colorings and connected spanning edge
//! sets on graphs supplied with a linear arrangement or a tree decomposition.
//!
//! The crate is organised around the data each counter consumes:
//!
//! * [`fp`]: prime-field arithmetic, dense matrices and color compatibility
//!   matrices.
//! * [`graph`]: graphs, color lists, linear arrangements, cut profiles,
//!   edge-introduce tree decompositions and the text file formats.
//! * [`coloring`]: brute-force, cut-DP and rank-reduced counters for list
//!   colorings.
//! * [`cse`]: connected spanning edge sets by enumeration and by a
//!   cut-and-count tree-decomposition DP.
//! * [`tutte`]: subset-sum Tutte evaluation and the stretch/chromatic
//!   identities built on it.
//! * [`gadgets`]: list-coloring gadgets with prescribed extension counts and
//!   the CSP and clique-chain reductions.
//!
//! Hot loops run on rayon when the `parallel` feature is enabled (the
//! default); [`Exec`] selects the schedule explicitly where a caller wants to
//! compare both.

pub mod coloring;
pub mod cse;
mod error;
mod exec;
pub mod fp;
pub mod gadgets;
pub mod graph;
pub mod guard;
pub mod tutte;

pub use error::{Error, Result};
pub use exec::Exec;
