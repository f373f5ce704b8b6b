//! Counting DP for `c[i][j]` over a nice tree decomposition.
//!
//! A table maps a partition of the bag (the connectivity pattern the chosen
//! edges induce on it) to a grid indexed by the number of components that
//! no longer touch the bag and the number of chosen edges.

use std::collections::HashMap;

use num::bigint::BigUint;
use num::{One, Zero};

use crate::counts::EdgeSetCounts;
use crate::error::{Error, Result};
use crate::graph::{Multigraph, NiceDecomposition, NiceKind, NiceNode};
use crate::partition::Partition;
use crate::walk::{evaluate, NiceVisitor};

pub const MAX_GENERAL_BAG: usize = 12;

/// Exact nonnegative counters. Counts of edge sets never exceed `2^|E|`, so
/// `u128` is exact whenever `|E| < 128`.
pub(crate) trait Count: Clone + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign(&mut self, other: &Self);
    fn add_product(&mut self, a: &Self, b: &Self);
    fn to_biguint(&self) -> BigUint;
}

impl Count for u128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn add_product(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
    fn to_biguint(&self) -> BigUint {
        BigUint::from(*self)
    }
}

impl Count for BigUint {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn add_product(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
    fn to_biguint(&self) -> BigUint {
        self.clone()
    }
}

/// Dense grid over (closed components, edges).
#[derive(Debug, Clone)]
struct Grid<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Count> Grid<T> {
    fn unit() -> Self {
        Self { rows: 1, cols: 1, data: vec![T::one()] }
    }

    fn empty(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    fn get(&self, c: usize, j: usize) -> &T {
        &self.data[c * self.cols + j]
    }

    fn grow(&mut self, rows: usize, cols: usize) {
        if rows <= self.rows && cols <= self.cols {
            return;
        }
        let (rows, cols) = (rows.max(self.rows), cols.max(self.cols));
        let mut next = Self::empty(rows, cols);
        for c in 0..self.rows {
            for j in 0..self.cols {
                next.data[c * cols + j] = self.data[c * self.cols + j].clone();
            }
        }
        *self = next;
    }

    /// Adds `other` shifted by `(dc, dj)`.
    fn add_shifted(&mut self, other: &Self, dc: usize, dj: usize) {
        self.grow(other.rows + dc, other.cols + dj);
        for c in 0..other.rows {
            for j in 0..other.cols {
                let v = other.get(c, j);
                if !v.is_zero() {
                    self.data[(c + dc) * self.cols + j + dj].add_assign(v);
                }
            }
        }
    }

    /// Adds the 2D convolution of `a` and `b`.
    fn add_convolution(&mut self, a: &Self, b: &Self) {
        self.grow(a.rows + b.rows - 1, a.cols + b.cols - 1);
        let nz_b: Vec<(usize, usize, &T)> = (0..b.rows)
            .flat_map(|c| (0..b.cols).map(move |j| (c, j)))
            .map(|(c, j)| (c, j, b.get(c, j)))
            .filter(|(_, _, v)| !v.is_zero())
            .collect();
        for c1 in 0..a.rows {
            for j1 in 0..a.cols {
                let x = a.get(c1, j1);
                if x.is_zero() {
                    continue;
                }
                for &(c2, j2, y) in &nz_b {
                    self.data[(c1 + c2) * self.cols + j1 + j2].add_product(x, y);
                }
            }
        }
    }
}

type Table<T> = HashMap<Partition, Grid<T>>;

fn add_entry<T: Count>(table: &mut Table<T>, p: Partition, grid: &Grid<T>, dc: usize, dj: usize) {
    table.entry(p).or_insert_with(|| Grid::empty(1, 1)).add_shifted(grid, dc, dj);
}

struct GeneralVisitor<'a, T> {
    g: &'a Multigraph,
    _count: std::marker::PhantomData<T>,
}

impl<T: Count> NiceVisitor for GeneralVisitor<'_, T> {
    type Table = Table<T>;

    fn leaf(&self, _id: usize, node: &NiceNode) -> Result<Table<T>> {
        debug_assert!(node.bag.is_empty());
        Ok(HashMap::from([(Partition::empty(), Grid::unit())]))
    }

    fn unary(&self, _id: usize, node: &NiceNode, child: Table<T>) -> Result<Table<T>> {
        let mut out: Table<T> = HashMap::with_capacity(child.len());
        match node.kind {
            NiceKind::IntroduceVertex(v) => {
                for (p, grid) in child {
                    out.insert(p.with_singleton(v), grid);
                }
            }
            NiceKind::ForgetVertex(v) => {
                for (p, grid) in &child {
                    let closes = p.blocks()[p.block_index(v).unwrap()].len() == 1;
                    add_entry(&mut out, p.without(v), grid, usize::from(closes), 0);
                }
            }
            NiceKind::IntroduceEdge(e) => {
                let (u, v) = self.g.edge(e);
                for (p, grid) in &child {
                    add_entry(&mut out, p.clone(), grid, 0, 0);
                    add_entry(&mut out, p.merge(u, v), grid, 0, 1);
                }
            }
            NiceKind::Leaf | NiceKind::Join => unreachable!("not a unary node"),
        }
        Ok(out)
    }

    fn join(&self, _id: usize, _node: &NiceNode, left: Table<T>, right: Table<T>) -> Result<Table<T>> {
        let right: Vec<(Partition, Grid<T>)> = right.into_iter().collect();
        let partials = crate::par::map(left.into_iter().collect(), |(p1, g1)| {
            let mut part: Table<T> = HashMap::new();
            for (p2, g2) in &right {
                part.entry(p1.join(p2)).or_insert_with(|| Grid::empty(1, 1)).add_convolution(&g1, g2);
            }
            part
        });
        let mut out: Table<T> = HashMap::new();
        for part in partials {
            for (p, grid) in part {
                add_entry(&mut out, p, &grid, 0, 0);
            }
        }
        Ok(out)
    }
}

fn run<T: Count>(g: &Multigraph, nd: &NiceDecomposition) -> Result<EdgeSetCounts> {
    let visitor = GeneralVisitor::<T> { g, _count: std::marker::PhantomData };
    let table = evaluate(nd, &visitor)?;
    let grid =
        table.get(&Partition::empty()).ok_or_else(|| Error::Invariant("root table has no empty partition".into()))?;
    let mut counts = EdgeSetCounts::new(g.vertex_count(), g.edge_count(), g.component_count());
    for c in 0..grid.rows {
        for j in 0..grid.cols {
            counts.add(c, j, grid.get(c, j).to_biguint());
        }
    }
    Ok(counts)
}

/// All edge-set counts `c[i][j]` of `g`.
pub fn general_dp(g: &Multigraph, nd: &NiceDecomposition) -> Result<EdgeSetCounts> {
    nd.validate(g)?;
    if nd.max_bag_size() > MAX_GENERAL_BAG {
        return Err(Error::ResourceGuard(format!(
            "bag of size {} exceeds the general DP limit of {MAX_GENERAL_BAG}",
            nd.max_bag_size()
        )));
    }
    if g.edge_count() < 128 {
        run::<u128>(g, nd)
    } else {
        run::<BigUint>(g, nd)
    }
}
