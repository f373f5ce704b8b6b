use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::DisjointSets;

/// A ground set with a linear order (the order is the list order).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedGround {
    labels: Vec<usize>,
}

impl OrderedGround {
    pub fn new(labels: Vec<usize>) -> Result<Self> {
        let distinct: BTreeSet<_> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::InvalidArgument(format!("ground labels repeat: {labels:?}")));
        }
        Ok(Self { labels })
    }

    /// `0, 1, ..., n-1` in natural order.
    pub fn natural(n: usize) -> Self {
        Self { labels: (0..n).collect() }
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn position(&self, label: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    /// The order with positions `i` and `i + 1` exchanged.
    pub fn swapped(&self, i: usize) -> Self {
        let mut labels = self.labels.clone();
        labels.swap(i, i + 1);
        Self { labels }
    }

    /// Positions of `set` if they form a contiguous run, in order.
    pub fn interval_span(&self, set: &[usize]) -> Option<(usize, usize)> {
        let mut pos: Vec<usize> = set.iter().map(|&l| self.position(l)).collect::<Option<_>>()?;
        if pos.is_empty() {
            return None;
        }
        pos.sort_unstable();
        pos.dedup();
        (pos.len() == set.len() && pos[pos.len() - 1] - pos[0] + 1 == pos.len()).then(|| (pos[0], pos[pos.len() - 1]))
    }
}

/// A set partition in canonical form: elements sorted inside each block and
/// blocks sorted by their minimum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Canonicalizes; fails on empty or overlapping blocks.
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidArgument("empty block".into()));
            }
            for &x in block {
                if !seen.insert(x) {
                    return Err(Error::InvalidArgument(format!("label {x} appears twice")));
                }
            }
        }
        Ok(Self::canonical(blocks))
    }

    pub(crate) fn canonical(mut blocks: Vec<Vec<usize>>) -> Self {
        blocks.retain(|b| !b.is_empty());
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Self { blocks }
    }

    pub fn empty() -> Self {
        Self { blocks: Vec::new() }
    }

    pub fn singletons(ground: &[usize]) -> Self {
        Self::canonical(ground.iter().map(|&x| vec![x]).collect())
    }

    /// The partition with one block `{u, v}` and every other label of the
    /// ground a singleton.
    pub fn pair(ground: &[usize], u: usize, v: usize) -> Self {
        let mut blocks: Vec<Vec<usize>> = ground.iter().filter(|&&x| x != u && x != v).map(|&x| vec![x]).collect();
        blocks.push(if u == v { vec![u] } else { vec![u, v] });
        Self::canonical(blocks)
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Sorted ground labels.
    pub fn ground(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.blocks.iter().flatten().copied().collect();
        g.sort_unstable();
        g
    }

    pub fn ground_len(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn block_index(&self, label: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(&label).is_ok())
    }

    pub fn same_block(&self, a: usize, b: usize) -> bool {
        matches!((self.block_index(a), self.block_index(b)), (Some(x), Some(y)) if x == y)
    }

    /// Finest partition of the union of both grounds that is coarser than
    /// both on their respective grounds.
    pub fn join(&self, other: &Partition) -> Partition {
        let mut labels: Vec<usize> = self.blocks.iter().chain(&other.blocks).flatten().copied().collect();
        labels.sort_unstable();
        labels.dedup();
        let idx = |x: usize| labels.binary_search(&x).unwrap();
        let mut dsu = DisjointSets::new(labels.len());
        for block in self.blocks.iter().chain(&other.blocks) {
            for w in block.windows(2) {
                dsu.union(idx(w[0]), idx(w[1]));
            }
        }
        let mut groups: Vec<Vec<usize>> = vec![Vec::new(); labels.len()];
        for (i, &l) in labels.iter().enumerate() {
            let r = dsu.find(i);
            groups[r].push(l);
        }
        Self::canonical(groups)
    }

    /// Blocks intersected with `set`, empty blocks dropped.
    pub fn restrict(&self, set: &[usize]) -> Partition {
        Self::canonical(self.blocks.iter().map(|b| b.iter().copied().filter(|x| set.contains(x)).collect()).collect())
    }

    /// Removes one label from the ground.
    pub fn without(&self, label: usize) -> Partition {
        Self::canonical(self.blocks.iter().map(|b| b.iter().copied().filter(|&x| x != label).collect()).collect())
    }

    /// Adds `label` as a new singleton block.
    pub fn with_singleton(&self, label: usize) -> Partition {
        let mut blocks = self.blocks.clone();
        blocks.push(vec![label]);
        Self::canonical(blocks)
    }

    /// Merges the blocks containing `a` and `b`.
    pub fn merge(&self, a: usize, b: usize) -> Partition {
        let (ia, ib) = (self.block_index(a).unwrap(), self.block_index(b).unwrap());
        if ia == ib {
            return self.clone();
        }
        let mut blocks = self.blocks.clone();
        let moved = std::mem::take(&mut blocks[ib]);
        blocks[ia].extend(moved);
        Self::canonical(blocks)
    }

    /// `pi -_i I`: blocks meeting the interval `I` are merged, `I` is removed
    /// and replaced by the fresh label `i` at the interval's position.
    pub fn contract(
        &self,
        order: &OrderedGround,
        interval: &[usize],
        fresh: usize,
    ) -> Result<(Partition, OrderedGround)> {
        let (lo, hi) = order
            .interval_span(interval)
            .ok_or_else(|| Error::InvalidArgument(format!("{interval:?} is not an interval of {:?}", order.labels)))?;
        if order.labels.contains(&fresh) && !interval.contains(&fresh) {
            return Err(Error::InvalidArgument(format!("label {fresh} is not fresh")));
        }
        let mut merged = vec![fresh];
        let mut blocks = Vec::new();
        for b in &self.blocks {
            if b.iter().any(|x| interval.contains(x)) {
                merged.extend(b.iter().copied().filter(|x| !interval.contains(x)));
            } else {
                blocks.push(b.clone());
            }
        }
        blocks.push(merged);
        let mut labels = order.labels[..lo].to_vec();
        labels.push(fresh);
        labels.extend_from_slice(&order.labels[hi + 1..]);
        Ok((Self::canonical(blocks), OrderedGround { labels }))
    }

    /// `pi +_i I`: the labels of `I` join the block of `i`, `i` is removed and
    /// `I` takes its place in the order.
    pub fn blowup(
        &self,
        order: &OrderedGround,
        label: usize,
        interval: &[usize],
    ) -> Result<(Partition, OrderedGround)> {
        let pos = order
            .position(label)
            .filter(|_| self.block_index(label).is_some())
            .ok_or_else(|| Error::InvalidArgument(format!("label {label} is not in the ground")))?;
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                if b.contains(&label) {
                    b.iter().copied().filter(|&x| x != label).chain(interval.iter().copied()).collect()
                } else {
                    b.clone()
                }
            })
            .collect();
        let mut labels = order.labels[..pos].to_vec();
        labels.extend_from_slice(interval);
        labels.extend_from_slice(&order.labels[pos + 1..]);
        Ok((Self::canonical(blocks), OrderedGround::new(labels)?))
    }

    /// True iff no two blocks interleave as `a1 < b1 < a2 < b2` under the
    /// order. Labels missing from the order make the answer `false`.
    pub fn is_noncrossing(&self, order: &[usize]) -> bool {
        let mut first = vec![usize::MAX; self.blocks.len()];
        let mut last = vec![0usize; self.blocks.len()];
        let mut seq = Vec::with_capacity(order.len());
        for (p, &l) in order.iter().enumerate() {
            if let Some(b) = self.block_index(l) {
                first[b] = first[b].min(p);
                last[b] = p;
                seq.push((p, b));
            }
        }
        if seq.len() != self.ground_len() {
            return false;
        }
        let mut stack: Vec<usize> = Vec::new();
        for (p, b) in seq {
            if p == first[b] {
                if p != last[b] {
                    stack.push(b);
                }
            } else {
                if stack.last() != Some(&b) {
                    return false;
                }
                if p == last[b] {
                    stack.pop();
                }
            }
        }
        true
    }

    /// Whether gluing star forests of both partitions (same ground) creates a
    /// cycle. Computed by explicit gluing and cross-checked against the
    /// count `n - |pi| - |rho| + |pi join rho| > 0`.
    pub fn induces_cycle(&self, other: &Partition) -> Result<bool> {
        let ground = self.ground();
        if ground != other.ground() {
            return Err(Error::InvalidArgument("partitions live on different grounds".into()));
        }
        Ok(self.induces_cycle_unchecked(other, &ground))
    }

    pub(crate) fn induces_cycle_unchecked(&self, other: &Partition, ground: &[usize]) -> bool {
        let idx = |x: usize| ground.binary_search(&x).unwrap();
        let mut dsu = DisjointSets::new(ground.len());
        let mut cyclic = false;
        for block in self.blocks.iter().chain(&other.blocks) {
            let root = idx(block[0]);
            for &x in &block[1..] {
                cyclic |= !dsu.union(root, idx(x));
            }
        }
        debug_assert_eq!(
            cyclic,
            ground.len() + self.join(other).block_count() > self.block_count() + other.block_count()
        );
        cyclic
    }

    /// Compatibility `pi ~ rho`: the glued forests stay acyclic.
    pub fn compatible(&self, other: &Partition) -> bool {
        // Cycle rank of the glued star forests.
        self.block_count() + other.block_count() == self.ground_len() + self.join(other).block_count()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            let items: Vec<String> = b.iter().map(ToString::to_string).collect();
            write!(f, "{{{}}}", items.join(","))?;
        }
        f.write_str("}")
    }
}

/// All partitions of `ground`, in lexicographic order of restricted growth
/// strings over the given label order.
pub fn enumerate_partitions(ground: &[usize]) -> Vec<Partition> {
    let n = ground.len();
    let mut out = Vec::new();
    if n == 0 {
        out.push(Partition::empty());
        return out;
    }
    let mut rgs = vec![0usize; n];
    loop {
        let blocks_n = rgs.iter().max().unwrap() + 1;
        let mut blocks = vec![Vec::new(); blocks_n];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(ground[i]);
        }
        out.push(Partition::canonical(blocks));
        // Next restricted growth string: rgs[i] <= 1 + max(rgs[..i]).
        let mut i = n - 1;
        loop {
            if i == 0 {
                return out;
            }
            let prefix_max = *rgs[..i].iter().max().unwrap();
            if rgs[i] <= prefix_max {
                rgs[i] += 1;
                for r in &mut rgs[i + 1..] {
                    *r = 0;
                }
                break;
            }
            i -= 1;
        }
    }
}

/// Partitions of the order's labels that are non-crossing on that order.
pub fn enumerate_noncrossing(order: &[usize]) -> Vec<Partition> {
    enumerate_partitions(order).into_iter().filter(|p| p.is_noncrossing(order)).collect()
}

pub fn bell(n: usize) -> u128 {
    // Bell triangle.
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            let v = next.last().unwrap() + x;
            next.push(v);
        }
        row = next;
    }
    row[0]
}

pub fn catalan(n: usize) -> u128 {
    let mut c = 1u128;
    for k in 0..n as u128 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(blocks: &[&[usize]]) -> Partition {
        Partition::new(blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn join_examples() {
        assert_eq!(p(&[&[1, 2], &[3]]).join(&p(&[&[1], &[2, 3]])), p(&[&[1, 2, 3]]));
        let pi = p(&[&[1, 4], &[2], &[3]]);
        assert_eq!(pi.join(&Partition::singletons(&[1, 2, 3, 4])), pi);
        assert_eq!(pi.join(&p(&[&[2, 3], &[4, 5]])), p(&[&[1, 4, 5], &[2, 3]]));
    }

    #[test]
    fn restrict_examples() {
        assert_eq!(p(&[&[1, 2], &[3]]).restrict(&[1, 3]), p(&[&[1], &[3]]));
        let pi = p(&[&[1, 3, 5], &[2, 4]]);
        assert_eq!(pi.restrict(&pi.ground()), pi);
        assert_eq!(pi.restrict(&[1, 2, 3]), p(&[&[1, 3], &[2]]));
    }

    #[test]
    fn contract_examples() {
        const X: usize = 100;
        let g4 = OrderedGround::natural(5);
        let (c, order) = p(&[&[1, 2], &[3, 4]]).contract(&g4, &[2, 3], X).unwrap();
        assert_eq!(c, p(&[&[1, X, 4]]));
        assert_eq!(order.labels(), &[0, 1, X, 4]);

        let g = OrderedGround::new(vec![1, 2, 3]).unwrap();
        let (c, _) = p(&[&[1], &[2], &[3]]).contract(&g, &[2], X).unwrap();
        assert_eq!(c, p(&[&[1], &[X], &[3]]));

        let g = OrderedGround::new(vec![1, 2, 3, 4, 5]).unwrap();
        let (c, order) = p(&[&[1, 4], &[2], &[3, 5]]).contract(&g, &[2, 3], X).unwrap();
        assert_eq!(c, p(&[&[1, 4], &[X, 5]]));
        assert_eq!(order.labels(), &[1, X, 4, 5]);

        assert!(p(&[&[1], &[2], &[3]]).contract(&g, &[1, 3], X).is_err());
    }

    #[test]
    fn blowup_examples() {
        const X: usize = 100;
        let g = OrderedGround::new(vec![X]).unwrap();
        assert_eq!(p(&[&[X]]).blowup(&g, X, &[1, 2]).unwrap().0, p(&[&[1, 2]]));
        let g = OrderedGround::new(vec![X, 3]).unwrap();
        assert_eq!(p(&[&[X, 3]]).blowup(&g, X, &[1, 2]).unwrap().0, p(&[&[1, 2, 3]]));
        assert!(p(&[&[3]]).blowup(&g, X, &[1]).is_err());

        let ground = OrderedGround::new(vec![1, 2, 3, 4]).unwrap();
        let (c, order) = p(&[&[1, 2], &[3, 4]]).contract(&ground, &[2, 3], X).unwrap();
        let (back, order) = c.blowup(&order, X, &[2, 3]).unwrap();
        assert_eq!(back, p(&[&[1, 2, 3, 4]]));
        assert_eq!(order.labels(), &[1, 2, 3, 4]);
    }

    #[test]
    fn crossing_examples() {
        assert!(!p(&[&[1, 3], &[2, 4]]).is_noncrossing(&[1, 2, 3, 4]));
        assert!(p(&[&[1, 4], &[2, 3]]).is_noncrossing(&[1, 2, 3, 4]));
        assert!(p(&[&[1, 3], &[2, 4]]).is_noncrossing(&[1, 3, 2, 4]));
        assert!(!p(&[&[1, 3, 5], &[2, 6], &[4]]).is_noncrossing(&[1, 2, 3, 4, 5, 6]));
        assert!(p(&[&[1, 5], &[2, 3], &[4]]).is_noncrossing(&[1, 2, 3, 4, 5]));
    }

    #[test]
    fn cycle_examples() {
        assert!(p(&[&[1, 2]]).induces_cycle(&p(&[&[1, 2]])).unwrap());
        let s = Partition::singletons(&[1, 2, 3, 4]);
        for pi in enumerate_partitions(&[1, 2, 3, 4]) {
            assert!(!pi.induces_cycle(&s).unwrap());
        }
        assert!(p(&[&[1, 2], &[3, 4]]).induces_cycle(&p(&[&[2, 3], &[1, 4]])).unwrap());
        assert!(p(&[&[1, 2]]).induces_cycle(&p(&[&[1], &[3]])).is_err());
    }

    #[test]
    fn counts_match_bell_and_catalan() {
        for n in 0..=7 {
            let ground: Vec<usize> = (0..n).collect();
            assert_eq!(enumerate_partitions(&ground).len() as u128, bell(n));
            assert_eq!(enumerate_noncrossing(&ground).len() as u128, catalan(n));
        }
    }

    #[test]
    fn rgs_order_starts_with_one_block() {
        let all = enumerate_partitions(&[0, 1, 2]);
        assert_eq!(all[0], p(&[&[0, 1, 2]]));
        assert_eq!(all[4], Partition::singletons(&[0, 1, 2]));
    }
}
