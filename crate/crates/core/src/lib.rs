//! Grundy domination on graphs.
//!
//! A legal sequence picks vertices one at a time so that each new vertex dominates something not
//! yet dominated; the Grundy domination number `γ_gr(G)` is the longest such sequence that ends
//! up dominating the whole graph. This crate provides
//!
//! * an exact exponential solver plus an independent brute-force enumerator ([`solver`]),
//! * closed-form values and two explicit optimal sequences for Sierpiński graphs ([`sierpinski`]),
//! * a linear sweep for interval graphs given an interval model ([`interval`]),
//! * per-edge and per-vertex removal profiles with bound checks ([`removal`]),
//!
//! on top of a small bitset graph type ([`graph`]) and sequence utilities ([`sequence`]).
//!
//! ```
//! use grundy::{generators::make_path, solver::{grundy_domination_number, SolverConfig}};
//!
//! let p4 = make_path(4).unwrap();
//! let r = grundy_domination_number(&p4, &SolverConfig::default()).unwrap();
//! assert_eq!(r.gamma_gr, 3);
//! assert_eq!(r.witness.as_slice(), [0, 1, 2]);
//! ```

pub mod acceptance;
pub mod cli;
pub mod error;
pub mod generators;
pub mod graph;
pub mod interval;
pub mod io;
pub mod removal;
pub mod sequence;
pub mod sierpinski;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{Graph, VertexMap, VertexSet};
pub use sequence::VertexSequence;
