//! Exact machinery around induced suns in graphs.
//!
//! A *t-sun* is the graph on 2t vertices made of a clique `c_1..c_t` (the
//! hub) and a stable set `e_1..e_t` (the ears), where ear `e_i` is adjacent
//! to exactly `c_i` and `c_{i+1}` (cyclically). Suns are the obstruction
//! separating strongly chordal graphs from chordal ones, and detecting an
//! induced sun in an arbitrary graph is NP-complete, so every search here is
//! exact, budgeted, and certificate-producing.
//!
//! The crate provides:
//!
//! - [`graph`]: immutable simple graphs, the edge-list text format, and
//!   elementary queries.
//! - [`sun`]: sun witnesses, verification, and budgeted exhaustive search.
//! - [`chordal`]: chordal / strongly chordal recognition by greedy
//!   elimination orderings, plus hole and antihole certificate finders.
//! - [`reduction`]: the two gadgets tying sun detection to stable sets in
//!   triangle-free graphs (`build_f`) and to cliques (`build_h`), with
//!   witness translators in both directions and executable checks of the
//!   structural facts the constructions guarantee.
//! - [`oracle`]: deliberately naive independent solvers (maximum stable set,
//!   clique decision, brute-force sun check) that anchor the equivalence
//!   tests without sharing code with the production searches.
//! - [`corpus`]: deterministic instance generation for exhaustive and seeded
//!   sweeps.

pub mod chordal;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod reduction;
pub mod sun;

mod bits;

pub use error::{Error, Result};
pub use graph::{emit_graph, parse_graph, random_triangle_free, Graph, VertexSet};
pub use sun::{SearchBudget, SearchOutcome, SunWitness};
