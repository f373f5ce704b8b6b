//! Rank-based forest counting.
//!
//! Rows are kept supported on partitions that are non-crossing with respect
//! to a per-row order of the bag, so a row never holds more than a Catalan
//! number of entries. Entries are rational because uncrossing rewrites use
//! rational coefficients.

use std::collections::HashMap;
use std::sync::Mutex;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{Multigraph, NiceDecomposition, NiceKind, NiceNode};
use crate::partition::{catalan, uncross_swapped, uncross_tables, Partition, UncrossTable};
use crate::poly::{interpolate, UniPoly};
use crate::scalar::{int, Scalar};
use crate::walk::{evaluate, NiceVisitor};

/// A DP row together with the bag order it is reduced on.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedRow {
    order: Vec<usize>,
    entries: HashMap<Partition, Scalar>,
}

impl ReducedRow {
    fn unit() -> Self {
        Self { order: Vec::new(), entries: HashMap::from([(Partition::empty(), Scalar::one())]) }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn entries(&self) -> &HashMap<Partition, Scalar> {
        &self.entries
    }

    pub fn support(&self) -> usize {
        self.entries.len()
    }

    fn add(&mut self, p: Partition, c: Scalar) {
        add_to(&mut self.entries, p, c);
    }

    /// Swaps positions `i` and `i + 1` of the order and re-expresses every
    /// entry on the new order.
    fn swap(&mut self, i: usize, table: &UncrossTable) -> Result<()> {
        self.order.swap(i, i + 1);
        let old = std::mem::take(&mut self.entries);
        for (p, c) in old {
            for (q, d) in uncross_swapped(&p, &self.order, i, table)? {
                add_to(&mut self.entries, q, &c * d);
            }
        }
        Ok(())
    }
}

fn add_to(map: &mut HashMap<Partition, Scalar>, p: Partition, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let e = map.entry(p).or_insert_with(Scalar::zero);
    *e += c;
    if e.is_zero() {
        // Cancellation leaves no entry behind.
        let key = map.iter().find(|(_, v)| v.is_zero()).map(|(k, _)| k.clone());
        if let Some(k) = key {
            map.remove(&k);
        }
    }
}

/// Rewrites `p` (any partition of `order`'s labels) as a combination of
/// partitions that are non-crossing on `order`.
fn reduce_to_order(p: &Partition, order: &[usize], table: &UncrossTable) -> Result<Vec<(Partition, Scalar)>> {
    if p.is_noncrossing(order) {
        return Ok(vec![(p.clone(), Scalar::one())]);
    }
    let pos: HashMap<usize, usize> = order.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    // Blocks laid out contiguously, by first position in the target order.
    let mut blocks: Vec<Vec<usize>> = p.blocks().to_vec();
    for b in &mut blocks {
        b.sort_by_key(|l| pos[l]);
    }
    blocks.sort_by_key(|b| pos[&b[0]]);
    let mut current: Vec<usize> = blocks.concat();
    let mut combo: HashMap<Partition, Scalar> = HashMap::from([(p.clone(), Scalar::one())]);
    // Bubble sort towards the target order, one adjacent swap at a time.
    let n = current.len();
    for pass in 0..n {
        let mut moved = false;
        for i in 0..n - 1 - pass {
            if pos[&current[i]] > pos[&current[i + 1]] {
                current.swap(i, i + 1);
                let old = std::mem::take(&mut combo);
                for (q, c) in old {
                    for (r, d) in uncross_swapped(&q, &current, i, table)? {
                        add_to(&mut combo, r, &c * d);
                    }
                }
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    Ok(combo.into_iter().collect())
}

/// Per-node support statistics gathered during a run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ForestTrace {
    /// `(bag size, support)` for every node, indexed by node id.
    pub supports: Vec<(usize, usize)>,
}

impl ForestTrace {
    pub fn max_support(&self) -> usize {
        self.supports.iter().map(|&(_, s)| s).max().unwrap_or(0)
    }
}

struct ForestVisitor<'a> {
    g: &'a Multigraph,
    weight: Scalar,
    reduce: bool,
    table: &'a UncrossTable,
    trace: Mutex<ForestTrace>,
    rows: Option<Mutex<Vec<Option<ReducedRow>>>>,
}

impl ForestVisitor<'_> {
    fn finish(&self, id: usize, node: &NiceNode, row: ReducedRow) -> Result<ReducedRow> {
        let bag = node.bag.len();
        if self.reduce {
            if row.support() as u128 > catalan(bag) {
                return Err(Error::Invariant(format!(
                    "row at node {id} has support {} above the Catalan bound {} for bag {:?}",
                    row.support(),
                    catalan(bag),
                    node.bag
                )));
            }
            if let Some(p) = row.entries.keys().find(|p| !p.is_noncrossing(&row.order)) {
                return Err(Error::Invariant(format!("row at node {id} holds {p}, crossing on {:?}", row.order)));
            }
        }
        self.trace.lock().unwrap().supports[id] = (bag, row.support());
        if let Some(rows) = &self.rows {
            rows.lock().unwrap()[id] = Some(row.clone());
        }
        Ok(row)
    }

    fn introduce_edge(&self, mut row: ReducedRow, e: usize) -> Result<ReducedRow> {
        let (u, v) = self.g.edge(e);
        if u == v {
            return Ok(row);
        }
        if self.reduce {
            let pu = row.order.iter().position(|&l| l == u).unwrap();
            let mut pv = row.order.iter().position(|&l| l == v).unwrap();
            let (lo, mut hi) = (pu.min(pv), pu.max(pv));
            while hi > lo + 1 {
                row.swap(hi - 1, self.table)?;
                hi -= 1;
            }
            pv = hi;
            debug_assert_eq!(pv.abs_diff(lo), 1);
        }
        let mut out = row.clone();
        for (p, c) in &row.entries {
            if !p.same_block(u, v) {
                out.add(p.merge(u, v), c * &self.weight);
            }
        }
        Ok(out)
    }
}

impl NiceVisitor for ForestVisitor<'_> {
    type Table = ReducedRow;

    fn leaf(&self, id: usize, node: &NiceNode) -> Result<ReducedRow> {
        self.finish(id, node, ReducedRow::unit())
    }

    fn unary(&self, id: usize, node: &NiceNode, mut child: ReducedRow) -> Result<ReducedRow> {
        let row = match node.kind {
            NiceKind::IntroduceVertex(v) => {
                child.order.push(v);
                let entries = child.entries.into_iter().map(|(p, c)| (p.with_singleton(v), c)).collect();
                ReducedRow { order: child.order, entries }
            }
            NiceKind::ForgetVertex(v) => {
                let mut out = ReducedRow {
                    order: child.order.iter().copied().filter(|&l| l != v).collect(),
                    entries: HashMap::new(),
                };
                for (p, c) in child.entries {
                    out.add(p.without(v), c);
                }
                out
            }
            NiceKind::IntroduceEdge(e) => self.introduce_edge(child, e)?,
            NiceKind::Leaf | NiceKind::Join => unreachable!("not a unary node"),
        };
        self.finish(id, node, row)
    }

    fn join(&self, id: usize, node: &NiceNode, left: ReducedRow, right: ReducedRow) -> Result<ReducedRow> {
        let right_entries: Vec<(&Partition, &Scalar)> = right.entries.iter().collect();
        let mut joined: HashMap<Partition, Scalar> = HashMap::new();
        for (p1, c1) in &left.entries {
            for &(p2, c2) in &right_entries {
                if p1.compatible(p2) {
                    add_to(&mut joined, p1.join(p2), c1 * c2);
                }
            }
        }
        let order = node.bag.clone();
        let row = if self.reduce {
            let pieces = crate::par::map(joined.into_iter().collect(), |(p, c)| {
                reduce_to_order(&p, &order, self.table).map(|combo| (c, combo))
            });
            let mut out = ReducedRow { order: order.clone(), entries: HashMap::new() };
            for piece in pieces {
                let (c, combo) = piece?;
                for (q, d) in combo {
                    out.add(q, &c * d);
                }
            }
            out
        } else {
            ReducedRow { order, entries: joined }
        };
        self.finish(id, node, row)
    }
}

fn run(
    g: &Multigraph,
    nd: &NiceDecomposition,
    weight: &Scalar,
    reduce: bool,
    keep_rows: bool,
) -> Result<(Scalar, ForestTrace, Option<Vec<ReducedRow>>)> {
    nd.validate(g)?;
    let visitor = ForestVisitor {
        g,
        weight: weight.clone(),
        reduce,
        table: uncross_tables(),
        trace: Mutex::new(ForestTrace { supports: vec![(0, 0); nd.len()] }),
        rows: keep_rows.then(|| Mutex::new(vec![None; nd.len()])),
    };
    let root = evaluate(nd, &visitor)?;
    let value = root.entries.get(&Partition::empty()).cloned().unwrap_or_else(Scalar::zero);
    let rows = visitor.rows.map(|m| m.into_inner().unwrap().into_iter().map(Option::unwrap).collect());
    Ok((value, visitor.trace.into_inner().unwrap(), rows))
}

/// `sum over forests A of weight^|A|`; weight 1 counts forests.
pub fn count_forests(g: &Multigraph, nd: &NiceDecomposition, weight: &Scalar) -> Result<Scalar> {
    Ok(run(g, nd, weight, true, false)?.0)
}

/// Like [`count_forests`], also reporting the support of every row.
pub fn count_forests_traced(g: &Multigraph, nd: &NiceDecomposition, weight: &Scalar) -> Result<(Scalar, ForestTrace)> {
    let (v, t, _) = run(g, nd, weight, true, false)?;
    Ok((v, t))
}

/// Rows of every node, indexed by node id; `reduce = false` runs the plain
/// DP over all partitions.
pub fn forest_rows(g: &Multigraph, nd: &NiceDecomposition, weight: &Scalar, reduce: bool) -> Result<Vec<ReducedRow>> {
    Ok(run(g, nd, weight, reduce, true)?.2.unwrap())
}

/// `F(t) = sum over forests A of t^|A|`, interpolated from weighted runs.
pub fn forest_polynomial(g: &Multigraph, nd: &NiceDecomposition) -> Result<UniPoly> {
    let rank = g.vertex_count() - g.component_count();
    let samples = rank.min(g.edge_count()) + 1;
    let points =
        crate::par::map((1..=samples as i64).collect(), |t| count_forests(g, nd, &int(t)).map(|v| (int(t), v)));
    let points: Vec<(Scalar, Scalar)> = points.into_iter().collect::<Result<_>>()?;
    interpolate(&points)
}

/// `T(G; x, 1)` as a polynomial in `x`.
pub fn curve_y1_restriction(g: &Multigraph, nd: &NiceDecomposition) -> Result<UniPoly> {
    let rank = g.vertex_count() - g.component_count();
    let f = forest_polynomial(g, nd)?;
    // A forest of size s has k(A) - k(E) = rank - s.
    let mut in_shift = vec![Scalar::zero(); rank + 1];
    for (s, c) in f.terms() {
        let s = usize::try_from(s).map_err(|_| Error::Invariant("negative forest size".into()))?;
        if s > rank {
            return Err(Error::Invariant(format!("forest of size {s} exceeds rank {rank}")));
        }
        in_shift[rank - s] = c.clone();
    }
    UniPoly::from_coeffs(in_shift).compose_shift(&-Scalar::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_nice, trivial_decompositions, TreeDecomposition};
    use crate::oracle::brute_forest_count;

    fn nice(g: &Multigraph) -> NiceDecomposition {
        let (td, _) = trivial_decompositions(g);
        make_nice(g, &td).unwrap()
    }

    #[test]
    fn complete_graphs() {
        let k3 = Multigraph::complete(3);
        assert_eq!(count_forests(&k3, &nice(&k3), &int(1)).unwrap(), int(7));
        let k4 = Multigraph::complete(4);
        assert_eq!(count_forests(&k4, &nice(&k4), &int(1)).unwrap(), int(38));
        let k5 = Multigraph::complete(5);
        let expected = Scalar::from_integer(brute_forest_count(&k5).unwrap().into());
        assert_eq!(count_forests(&k5, &nice(&k5), &int(1)).unwrap(), expected);
    }

    #[test]
    fn weighted_triangle() {
        let k3 = Multigraph::complete(3);
        assert_eq!(forest_polynomial(&k3, &nice(&k3)).unwrap(), UniPoly::from_ints(&[1, 3, 3]));
    }

    #[test]
    fn y1_curves() {
        let k3 = Multigraph::complete(3);
        assert_eq!(curve_y1_restriction(&k3, &nice(&k3)).unwrap(), UniPoly::from_ints(&[1, 1, 1]));
        let p5 = Multigraph::path(5);
        assert_eq!(curve_y1_restriction(&p5, &nice(&p5)).unwrap(), UniPoly::monomial(int(1), 4));
        let k4 = Multigraph::complete(4);
        assert_eq!(curve_y1_restriction(&k4, &nice(&k4)).unwrap().eval(&int(2)).unwrap(), int(38));
    }

    #[test]
    fn join_with_crossing_products() {
        // Two 4-cycles glued along the bag {0, 1, 2, 3} from both sides.
        let g =
            Multigraph::new(6, vec![(0, 4), (4, 2), (1, 4), (3, 4), (0, 5), (5, 3), (1, 5), (2, 5), (0, 1)]).unwrap();
        let td = TreeDecomposition::new(
            vec![vec![0], vec![0, 1, 2, 3], vec![0, 1, 2, 3, 4], vec![0, 1, 2, 3, 5]],
            vec![(0, 1), (1, 2), (1, 3)],
        );
        let nd = make_nice(&g, &td).unwrap();
        assert!(nd.join_count() > 0);
        let expected = Scalar::from_integer(brute_forest_count(&g).unwrap().into());
        assert_eq!(count_forests(&g, &nd, &int(1)).unwrap(), expected);
    }

    #[test]
    fn parallel_edges_and_loops() {
        let g = Multigraph::new(3, vec![(0, 1), (0, 1), (1, 2), (2, 2), (0, 2)]).unwrap();
        let expected = Scalar::from_integer(brute_forest_count(&g).unwrap().into());
        assert_eq!(count_forests(&g, &nice(&g), &int(1)).unwrap(), expected);
    }
}
