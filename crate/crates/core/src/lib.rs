//! Exact evaluation of the Tutte polynomial on graphs of bounded width.
//!
//! The crate offers a general counting DP over nice tree decompositions, a
//! rank-based forest counter, dedicated routines for the Ising curve and
//! chromatic points, the stretch and thickening reductions that move between
//! points of one hyperbola, and a brute-force oracle for checking all of it.

pub mod counts;
pub mod error;
pub mod forest;
pub mod general;
pub mod generators;
pub mod graph;
pub mod linalg;
pub mod oracle;
mod par;
pub mod partition;
pub mod poly;
pub mod reduction;
pub mod scalar;
pub mod special;
mod walk;

pub use counts::{eval_from_counts, tutte_coefficients, EdgeSetCounts};
pub use error::{Error, Result};
pub use forest::{count_forests, curve_y1_restriction};
pub use general::general_dp;
pub use graph::{Decompositions, Multigraph, NiceDecomposition, TreeDecomposition};
pub use poly::{interpolate, TuttePoly, UniPoly};
pub use reduction::{evaluate_point, Evaluation, Route};
pub use scalar::Scalar;

/// Whether the crate was built with the rayon-backed parallel core.
pub fn is_parallel() -> bool {
    par::is_parallel()
}
