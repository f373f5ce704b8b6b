//! Set partitions of ordered grounds, the forest compatibility matrix and the
//! uncrossing rewrites used by the rank-based forest DP.

mod compat;
mod set_partition;
mod uncross;

pub use compat::{compat_matrix, compat_matrix_on, CompatMatrix, MAX_COMPAT_N};
pub use set_partition::{bell, catalan, enumerate_noncrossing, enumerate_partitions, OrderedGround, Partition};
pub(crate) use uncross::uncross_swapped;
pub use uncross::{build_uncross_tables, uncross_after_swap, uncross_tables, Combination, UncrossTable};
