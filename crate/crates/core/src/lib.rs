//! Finite-scale constructions, reductions and exhaustive checkers for two
//! questions in graph Ramsey theory:
//!
//! * the generalized Ramsey function `f_k(n, s, t)` on red/blue colourings of
//!   k-subsets, and its graph counterpart `g(n, s, t)`;
//! * semisaturated (and saturated) edge-coloured complete graphs and the
//!   numbers `ssat_r(K_k)`.
//!
//! Modules:
//!
//! * [`graph`], [`search`]: bit-row graphs, clique / independent-set search,
//!   greedy Turán extraction, Erdős–Szekeres extraction.
//! * [`geometry`]: prime fields, AG(2, q), slope families of lines in F_q^3.
//! * [`pattern`], [`constructions`]: colour patterns and the explicit
//!   colourings built from the geometries, plus `G(N, p)` experiments.
//! * [`reduction`]: k-subset colourings, the graph/colouring transforms, and
//!   brute-force oracles for `f` and `g`.
//! * [`saturation`]: semisaturation checkers, the observation criterion,
//!   reference formulas and exhaustive pattern search.
//! * [`certificate`], [`cli`]: JSON certificates and the command-line surface.

pub mod certificate;
pub mod cli;
pub mod combinatorics;
pub mod constructions;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod pattern;
pub mod reduction;
pub mod saturation;
pub mod search;

pub use error::{Error, Result};
pub use graph::{SimpleGraph, VertexSet};
pub use pattern::ColoredCompleteGraph;
