use std::collections::HashMap;
use std::fmt::Write as _;

use num::bigint::BigInt;

use super::set_partition::{enumerate_partitions, Partition};
use crate::error::{Error, Result};
use crate::linalg;

pub const MAX_COMPAT_N: usize = 8;

/// The forest compatibility matrix over all partitions of a ground set.
#[derive(Debug, Clone)]
pub struct CompatMatrix {
    ground: Vec<usize>,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    entries: Vec<Vec<u8>>,
}

/// `F_n` over the ground `{1, ..., n}`.
pub fn compat_matrix(n: usize) -> Result<CompatMatrix> {
    compat_matrix_on(&(1..=n).collect::<Vec<_>>())
}

/// Compatibility matrix over an arbitrary ground; partitions are enumerated
/// in restricted-growth order of the given label order.
pub fn compat_matrix_on(ground: &[usize]) -> Result<CompatMatrix> {
    if ground.len() > MAX_COMPAT_N {
        return Err(Error::ResourceGuard(format!(
            "compatibility matrix on {} labels exceeds the limit of {MAX_COMPAT_N}",
            ground.len()
        )));
    }
    let partitions = enumerate_partitions(ground);
    let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let rows = crate::par::map((0..partitions.len()).collect(), |i| {
        partitions.iter().map(|q| u8::from(partitions[i].compatible(q))).collect::<Vec<u8>>()
    });
    let mut sorted = ground.to_vec();
    sorted.sort_unstable();
    Ok(CompatMatrix { ground: sorted, partitions, index, entries: rows })
}

impl CompatMatrix {
    pub fn ground(&self) -> &[usize] {
        &self.ground
    }

    pub fn size(&self) -> usize {
        self.partitions.len()
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn entry(&self, i: usize, j: usize) -> u8 {
        self.entries[i][j]
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.entries[i]
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<BigInt>> =
            self.entries.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
        linalg::integer_rank(&rows)
    }

    /// Rank of the rows selected by `indices`.
    pub fn rank_of_rows(&self, indices: &[usize]) -> usize {
        let rows: Vec<Vec<BigInt>> =
            indices.iter().map(|&i| self.entries[i].iter().map(|&v| BigInt::from(v)).collect()).collect();
        linalg::integer_rank(&rows)
    }

    /// Row-major 0/1 text, one row per line.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for row in &self.entries {
            let line: Vec<&str> = row.iter().map(|&v| if v == 1 { "1" } else { "0" }).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{catalan, enumerate_noncrossing};

    #[test]
    fn small_matrices() {
        assert_eq!(compat_matrix(1).unwrap().dump(), "1\n");
        let f2 = compat_matrix(2).unwrap();
        let s = f2.index_of(&Partition::singletons(&[1, 2])).unwrap();
        let one = f2.index_of(&Partition::new(vec![vec![1, 2]]).unwrap()).unwrap();
        assert_eq!([f2.entry(s, s), f2.entry(s, one), f2.entry(one, s), f2.entry(one, one)], [1, 1, 1, 0]);
        assert!(compat_matrix(9).is_err());
    }

    #[test]
    fn symmetric_with_singleton_column() {
        let f = compat_matrix(4).unwrap();
        let s = f.index_of(&Partition::singletons(&[1, 2, 3, 4])).unwrap();
        for i in 0..f.size() {
            assert_eq!(f.entry(i, s), 1);
            for j in 0..f.size() {
                assert_eq!(f.entry(i, j), f.entry(j, i));
            }
        }
    }

    #[test]
    fn rank_is_catalan_and_noncrossing_rows_are_a_basis() {
        for n in 1..=5 {
            let f = compat_matrix(n).unwrap();
            assert_eq!(f.rank() as u128, catalan(n));
            let ground: Vec<usize> = (1..=n).collect();
            let nc: Vec<usize> = enumerate_noncrossing(&ground).iter().map(|p| f.index_of(p).unwrap()).collect();
            assert_eq!(f.rank_of_rows(&nc), nc.len());
        }
    }
}
