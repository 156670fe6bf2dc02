//! Exact-arithmetic invariants of Booth-Lueker edge ideals.
//!
//! For a simple graph `G`, the Booth-Lueker graph `BL(G)` and its complement
//! are chordal split graphs, so their edge ideals have 2-linear resolutions.
//! This crate computes, with arbitrary-precision arithmetic throughout:
//!
//! - the reduced Betti vector of `BL(G)` and of its complement, both by a
//!   subset-enumeration oracle and by closed forms in the degree vector,
//! - the Boij-Söderberg coefficients (closed form and matrix conversion),
//! - the associated anti-lecture-hall compositions,
//! - a greedy decomposition of arbitrary Betti tables into pure tables,
//! - graph-comparison signatures built from all of the above.
//!
//! Every closed form has an independent verification route, and the two are
//! cross-checked in the test suites.

pub mod alhc;
pub mod betti;
pub mod boij_soderberg;
pub mod booth_lueker;
mod error;
pub mod exact;
pub mod graph;
pub mod invariant;
pub mod matrix;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
