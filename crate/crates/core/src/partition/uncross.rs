use std::collections::HashMap;
use std::sync::OnceLock;

use num::{One, Zero};

use super::compat::compat_matrix_on;
use super::set_partition::{enumerate_noncrossing, enumerate_partitions, Partition};
use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::Scalar;

/// A sparse rational combination of partitions.
pub type Combination = Vec<(Partition, Scalar)>;

/// For ground sizes 4 and 5 (labels `0..n`), every partition written as a
/// combination of compatibility rows of non-crossing partitions.
#[derive(Debug, Clone)]
pub struct UncrossTable {
    tables: [HashMap<Partition, Combination>; 2],
}

impl UncrossTable {
    pub fn get(&self, n: usize, p: &Partition) -> Option<&Combination> {
        match n {
            4 | 5 => self.tables[n - 4].get(p),
            _ => None,
        }
    }

    pub fn len(&self, n: usize) -> usize {
        match n {
            4 | 5 => self.tables[n - 4].len(),
            _ => 0,
        }
    }

    pub fn basis_size(&self, n: usize) -> usize {
        enumerate_noncrossing(&(0..n).collect::<Vec<_>>()).len()
    }
}

pub fn build_uncross_tables() -> Result<UncrossTable> {
    Ok(UncrossTable { tables: [solve_table(4)?, solve_table(5)?] })
}

/// The cached table, built on first use.
pub fn uncross_tables() -> &'static UncrossTable {
    static TABLE: OnceLock<UncrossTable> = OnceLock::new();
    TABLE.get_or_init(|| build_uncross_tables().expect("non-crossing rows of F_4 and F_5 form a basis"))
}

fn solve_table(n: usize) -> Result<HashMap<Partition, Combination>> {
    let ground: Vec<usize> = (0..n).collect();
    let f = compat_matrix_on(&ground)?;
    let basis = enumerate_noncrossing(&ground);
    let basis_idx: Vec<usize> = basis.iter().map(|p| f.index_of(p).unwrap()).collect();
    let all = enumerate_partitions(&ground);
    let size = f.size();
    let to_q = |v: u8| if v == 1 { Scalar::one() } else { Scalar::zero() };
    // Columns of A are the basis rows of F; columns of B are all rows of F.
    let a: Vec<Vec<Scalar>> = (0..size).map(|s| basis_idx.iter().map(|&r| to_q(f.entry(r, s))).collect()).collect();
    let b: Vec<Vec<Scalar>> = (0..size).map(|s| (0..size).map(|r| to_q(f.entry(r, s))).collect()).collect();
    let x = linalg::solve_columns(&a, &b).ok_or(Error::BasisFailure(n))?;
    let mut table = HashMap::with_capacity(all.len());
    for (col, p) in all.into_iter().enumerate() {
        let r = f.index_of(&p).unwrap();
        debug_assert_eq!(r, col);
        let combo: Combination =
            x[r].iter().zip(&basis).filter(|(c, _)| !c.is_zero()).map(|(c, rho)| (rho.clone(), c.clone())).collect();
        table.insert(p, combo);
    }
    Ok(table)
}

/// Rewrites the compatibility row of `pi` (non-crossing on `order`) as a
/// combination of rows of partitions that are non-crossing on `order` with
/// positions `i` and `i + 1` exchanged.
pub fn uncross_after_swap(pi: &Partition, order: &[usize], i: usize) -> Result<Combination> {
    if i + 1 >= order.len() {
        return Err(Error::InvalidArgument(format!("swap position {i} out of range for {} labels", order.len())));
    }
    if !pi.is_noncrossing(order) {
        return Err(Error::CrossingPartition(pi.to_string()));
    }
    let mut swapped = order.to_vec();
    swapped.swap(i, i + 1);
    uncross_swapped(pi, &swapped, i, uncross_tables())
}

/// Like [`uncross_after_swap`] but takes the already swapped order and skips
/// the precondition check.
pub(crate) fn uncross_swapped(
    pi: &Partition,
    swapped: &[usize],
    i: usize,
    table: &UncrossTable,
) -> Result<Combination> {
    let a = pi.block_index(swapped[i + 1]).unwrap();
    let b = pi.block_index(swapped[i]).unwrap();
    if a == b || pi.is_noncrossing(swapped) {
        return Ok(vec![(pi.clone(), Scalar::one())]);
    }
    let blocks = pi.blocks();
    // Maximal runs of A u B in the swapped order that stay in one block.
    let mut runs: Vec<(usize, Vec<usize>)> = Vec::new();
    for &l in swapped {
        let Some(k) = pi.block_index(l).filter(|&k| k == a || k == b) else { continue };
        match runs.last_mut() {
            Some((bk, run)) if *bk == k => run.push(l),
            _ => runs.push((k, vec![l])),
        }
    }
    let n = runs.len();
    if !(4..=5).contains(&n) {
        return Err(Error::Invariant(format!("{n} alternating runs after a single swap of {pi}")));
    }
    let contracted =
        Partition::canonical([a, b].iter().map(|&k| (0..n).filter(|&j| runs[j].0 == k).collect()).collect());
    let combo =
        table.get(n, &contracted).ok_or_else(|| Error::Invariant(format!("no table entry for {contracted}")))?;
    let rest: Vec<Vec<usize>> =
        blocks.iter().enumerate().filter(|&(k, _)| k != a && k != b).map(|(_, blk)| blk.clone()).collect();
    let mut out = Vec::with_capacity(combo.len());
    for (rho, c) in combo {
        let mut new_blocks = rest.clone();
        for blk in rho.blocks() {
            new_blocks.push(blk.iter().flat_map(|&j| runs[j].1.iter().copied()).collect());
        }
        let r = Partition::canonical(new_blocks);
        debug_assert!(r.is_noncrossing(swapped), "{r} crosses on {swapped:?}");
        out.push((r, c.clone()));
    }
    Ok(out)
}
