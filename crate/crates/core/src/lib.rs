//! Exact Drazin inverses and walk structure of oriented Dutch windmill digraphs.
//!
//! The crate builds `D^m_n` (m directed n-cycles sharing hub vertex 1),
//! computes Drazin inverses of adjacency matrices in exact rational
//! arithmetic, and checks walk-count identities against a matrix-free oracle.
//!
//! Runnable walkthroughs live in `examples/`; try
//! `cargo run --example drazin_closed_form`.

pub mod cli;
pub mod drazin;
pub mod error;
pub mod graph;
pub mod matrix;
pub mod polynomial;
pub mod verify;
pub mod walks;

pub use drazin::{
    drazin_general, drazin_index, drazin_windmill_closed, verify_drazin, verify_power_identities,
    windmill_support_pattern, DrazinCheck, DrazinResult, Method, PowerIdentityReport,
};
pub use error::{Error, Result};
pub use graph::{build_windmill, cycle_vertices, export_dot, Digraph, WindmillParams};
pub use matrix::{Matrix, Rational};
pub use polynomial::{char_polynomial, minimal_polynomial, Polynomial};
pub use walks::{
    count_walks, count_walks_matrices, count_walks_matrix, enumerate_walks, shortest_walk_length,
    windmill_length_n_minus_1_support, Walk, WalkList,
};
