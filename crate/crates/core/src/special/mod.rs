//! Dedicated DPs for the Ising curve `(x - 1)(y - 1) = 2` and for chromatic
//! points `(1 - q, 0)`.

mod coloring;
mod parity;

pub use coloring::{count_colorings, tutte_chromatic_point, MAX_COLORING_TABLE};
pub use parity::{even_subgraph_poly, even_subgraph_poly_naive, tutte_on_h2, MAX_PARITY_BAG};
