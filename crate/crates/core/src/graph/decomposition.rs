use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use super::multigraph::{DisjointSets, Multigraph, Vertex};
use crate::error::{Error, Result};

/// A tree decomposition: a tree on bag nodes `0..bags.len()` plus one vertex
/// set per node. A path decomposition is a tree decomposition whose tree is a
/// path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    bags: Vec<Vec<Vertex>>,
    tree_edges: Vec<(usize, usize)>,
    declared_width: usize,
}

/// Why a decomposition failed to validate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EmptyTree,
    TreeEdgeOutOfRange { edge: (usize, usize) },
    TreeNotAcyclic { edge: (usize, usize) },
    TreeNotConnected { unreached: usize },
    VertexOutOfRange { bag: usize, vertex: Vertex },
    VertexUncovered { vertex: Vertex },
    EdgeUncovered { edge: usize, endpoints: (Vertex, Vertex) },
    NotSubtree { vertex: Vertex },
    WidthExceedsDeclared { width: usize, declared: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyTree => write!(f, "decomposition has no bags"),
            Violation::TreeEdgeOutOfRange { edge } => {
                write!(f, "tree edge {edge:?} references a missing bag")
            }
            Violation::TreeNotAcyclic { edge } => write!(f, "tree edge {edge:?} closes a cycle"),
            Violation::TreeNotConnected { unreached } => {
                write!(f, "bag {unreached} is not connected to the rest of the tree")
            }
            Violation::VertexOutOfRange { bag, vertex } => {
                write!(f, "bag {bag} contains unknown vertex {vertex}")
            }
            Violation::VertexUncovered { vertex } => write!(f, "vertex {vertex} is in no bag"),
            Violation::EdgeUncovered { edge, endpoints } => {
                write!(f, "edge {edge} {endpoints:?} is not covered by any bag")
            }
            Violation::NotSubtree { vertex } => {
                write!(f, "bags containing vertex {vertex} do not induce a subtree")
            }
            Violation::WidthExceedsDeclared { width, declared } => {
                write!(f, "width {width} exceeds declared width {declared}")
            }
        }
    }
}

impl TreeDecomposition {
    /// Bags are stored sorted and deduplicated; `declared_width` defaults to
    /// the actual width.
    pub fn new(bags: Vec<Vec<Vertex>>, tree_edges: Vec<(usize, usize)>) -> Self {
        let bags: Vec<Vec<Vertex>> =
            bags.into_iter().map(|b| b.into_iter().collect::<BTreeSet<_>>().into_iter().collect()).collect();
        let declared_width = bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1);
        Self { bags, tree_edges, declared_width }
    }

    pub fn with_declared_width(mut self, declared_width: usize) -> Self {
        self.declared_width = declared_width;
        self
    }

    /// A path decomposition from a bag sequence.
    pub fn path(bags: Vec<Vec<Vertex>>) -> Self {
        let edges = (1..bags.len()).map(|i| (i - 1, i)).collect();
        Self::new(bags, edges)
    }

    pub fn bags(&self) -> &[Vec<Vertex>] {
        &self.bags
    }

    pub fn bag(&self, node: usize) -> &[Vertex] {
        &self.bags[node]
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.tree_edges
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    pub fn declared_width(&self) -> usize {
        self.declared_width
    }

    /// max bag size - 1 (0 for decompositions whose bags are all empty).
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1)
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.tree_edges {
            if a < adj.len() && b < adj.len() {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// If the tree is a path, its nodes from one end to the other (starting at
    /// the lower-indexed end).
    pub fn path_order(&self) -> Option<Vec<usize>> {
        let adj = self.adjacency();
        if adj.is_empty() || adj.iter().any(|l| l.len() > 2) {
            return None;
        }
        if self.tree_edges.len() + 1 != adj.len() {
            return None;
        }
        let start = (0..adj.len()).find(|&x| adj[x].len() <= 1)?;
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(&next) = adj[cur].iter().find(|&&y| y != prev) {
            order.push(next);
            prev = cur;
            cur = next;
        }
        (order.len() == adj.len()).then_some(order)
    }

    pub fn is_path(&self) -> bool {
        self.path_order().is_some()
    }

    /// Checks the three decomposition axioms plus tree shape and declared
    /// width, returning the width on success.
    pub fn validate(&self, g: &Multigraph) -> std::result::Result<usize, Violation> {
        let nodes = self.bags.len();
        if nodes == 0 {
            return Err(Violation::EmptyTree);
        }
        let mut dsu = DisjointSets::new(nodes);
        for &(a, b) in &self.tree_edges {
            if a >= nodes || b >= nodes {
                return Err(Violation::TreeEdgeOutOfRange { edge: (a, b) });
            }
            if !dsu.union(a, b) {
                return Err(Violation::TreeNotAcyclic { edge: (a, b) });
            }
        }
        if dsu.set_count() != 1 {
            let root = dsu.find(0);
            let unreached = (0..nodes).find(|&x| dsu.find(x) != root).unwrap_or(0);
            return Err(Violation::TreeNotConnected { unreached });
        }

        let n = g.vertex_count();
        let mut holders: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (x, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                if v >= n {
                    return Err(Violation::VertexOutOfRange { bag: x, vertex: v });
                }
                holders[v].push(x);
            }
        }
        if let Some(v) = (0..n).find(|&v| holders[v].is_empty()) {
            return Err(Violation::VertexUncovered { vertex: v });
        }
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            let covered = holders[u].iter().any(|&x| self.bags[x].binary_search(&v).is_ok());
            if !covered {
                return Err(Violation::EdgeUncovered { edge: i, endpoints: (u, v) });
            }
        }
        // Nodes holding v induce a subtree iff they are connected using only
        // tree edges between holders: count such edges (|holders| - 1).
        let mut inside = vec![0usize; n];
        for &(a, b) in &self.tree_edges {
            for &v in &self.bags[a] {
                if self.bags[b].binary_search(&v).is_ok() {
                    inside[v] += 1;
                }
            }
        }
        if let Some(v) = (0..n).find(|&v| inside[v] + 1 != holders[v].len()) {
            return Err(Violation::NotSubtree { vertex: v });
        }
        let width = self.width();
        if width > self.declared_width {
            return Err(Violation::WidthExceedsDeclared { width, declared: self.declared_width });
        }
        Ok(width)
    }
}

/// A linear order of all vertices (a cut decomposition).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutOrder {
    order: Vec<Vertex>,
}

impl CutOrder {
    pub fn new(order: Vec<Vertex>) -> Self {
        Self { order }
    }

    pub fn identity(n: usize) -> Self {
        Self { order: (0..n).collect() }
    }

    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        if self.order.len() != n {
            return Err(Error::InvalidCutOrder(format!("order has {} entries for {n} vertices", self.order.len())));
        }
        let mut seen = vec![false; n];
        for &v in &self.order {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidCutOrder(format!("vertex {v} is out of range or repeated")));
            }
        }
        Ok(())
    }

    /// position[v] = index of v in the order.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

/// Maximum number of edges crossing a cut `{v_1..v_i} | {v_(i+1)..v_n}`.
pub fn cut_order_width(g: &Multigraph, co: &CutOrder) -> Result<usize> {
    co.validate(g.vertex_count())?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(0);
    }
    let pos = co.positions();
    // Difference array over cut indices: edge (j < l) crosses cuts j..l-1.
    let mut delta = vec![0i64; n + 1];
    for &(u, v) in g.edges() {
        let (a, b) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
        if a != b {
            delta[a] += 1;
            delta[b] -= 1;
        }
    }
    let mut best = 0i64;
    let mut running = 0i64;
    for d in &delta[..n] {
        running += d;
        best = best.max(running);
    }
    Ok(best as usize)
}

/// Fallback decompositions: one bag per connected component (linked in a
/// path) and the identity vertex order.
pub fn trivial_decompositions(g: &Multigraph) -> (TreeDecomposition, CutOrder) {
    let n = g.vertex_count();
    let mut dsu = DisjointSets::new(n);
    for &(u, v) in g.edges() {
        dsu.union(u, v);
    }
    let mut bag_of_root = vec![usize::MAX; n];
    let mut bags: Vec<Vec<Vertex>> = Vec::new();
    for v in 0..n {
        let r = dsu.find(v);
        if bag_of_root[r] == usize::MAX {
            bag_of_root[r] = bags.len();
            bags.push(Vec::new());
        }
        bags[bag_of_root[r]].push(v);
    }
    if bags.is_empty() {
        bags.push(Vec::new());
    }
    (TreeDecomposition::path(bags), CutOrder::identity(n))
}

/// Width-1 decomposition of a forest (loops and parallel edges ignored): a
/// bag `{parent, v}` per non-root vertex, `{root}` per tree, roots chained
/// together. `None` when `g` has a cycle through distinct vertices.
pub fn forest_decomposition(g: &Multigraph) -> Option<TreeDecomposition> {
    let n = g.vertex_count();
    let mut dsu = DisjointSets::new(n);
    let mut seen = std::collections::HashSet::new();
    let simple = g.edges().iter().filter(|&&(u, v)| u != v && seen.insert((u.min(v), u.max(v))));
    if !simple.into_iter().all(|&(u, v)| dsu.union(u, v)) {
        return None;
    }
    if n == 0 {
        return Some(TreeDecomposition::path(vec![Vec::new()]));
    }
    let adj = g.incidence();
    let mut parent = vec![usize::MAX; n];
    let mut bags: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut tree_edges = Vec::new();
    let mut last_root: Option<Vertex> = None;
    for r in 0..n {
        if parent[r] != usize::MAX {
            continue;
        }
        parent[r] = r;
        bags[r] = vec![r];
        if let Some(prev) = last_root {
            tree_edges.push((prev, r));
        }
        last_root = Some(r);
        let mut queue = VecDeque::from([r]);
        while let Some(x) = queue.pop_front() {
            for &(y, _) in &adj[x] {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    bags[y] = vec![x, y];
                    tree_edges.push((x, y));
                    queue.push_back(y);
                }
            }
        }
    }
    Some(TreeDecomposition::new(bags, tree_edges))
}

/// BFS distances in the decomposition tree from `root`.
pub(crate) fn tree_parents(adj: &[Vec<usize>], root: usize) -> (Vec<usize>, Vec<usize>) {
    let mut parent = vec![usize::MAX; adj.len()];
    let mut order = Vec::with_capacity(adj.len());
    let mut queue = VecDeque::from([root]);
    parent[root] = root;
    while let Some(x) = queue.pop_front() {
        order.push(x);
        for &y in &adj[x] {
            if parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    (parent, order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k3_single_bag_has_width_two() {
        let g = Multigraph::complete(3);
        let td = TreeDecomposition::new(vec![vec![0, 1, 2]], vec![]);
        assert_eq!(td.validate(&g), Ok(2));
    }

    #[test]
    fn k3_path_of_two_bags_misses_an_edge() {
        let g = Multigraph::complete(3);
        let td = TreeDecomposition::path(vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(td.validate(&g), Err(Violation::EdgeUncovered { edge: 1, endpoints: (0, 2) }));
    }

    #[test]
    fn p4_path_decomposition_has_width_one() {
        let g = Multigraph::path(4);
        let td = TreeDecomposition::path(vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        assert_eq!(td.validate(&g), Ok(1));
        assert!(td.is_path());
    }

    #[test]
    fn detects_broken_subtree_and_cycles() {
        let g = Multigraph::path(3);
        let td = TreeDecomposition::path(vec![vec![0, 1], vec![1, 2], vec![0]]);
        assert_eq!(td.validate(&g), Err(Violation::NotSubtree { vertex: 0 }));
        let cyc = TreeDecomposition::new(vec![vec![0, 1], vec![1, 2], vec![1]], vec![(0, 1), (1, 2), (2, 0)]);
        assert!(matches!(cyc.validate(&g), Err(Violation::TreeNotAcyclic { .. })));
        let declared = TreeDecomposition::new(vec![vec![0, 1, 2]], vec![]).with_declared_width(1);
        assert!(matches!(declared.validate(&g), Err(Violation::WidthExceedsDeclared { .. })));
    }

    #[test]
    fn cut_widths() {
        assert_eq!(cut_order_width(&Multigraph::path(3), &CutOrder::identity(3)).unwrap(), 1);
        assert_eq!(cut_order_width(&Multigraph::star(3), &CutOrder::identity(4)).unwrap(), 3);
        // P3 = 0-1-2 ordered (0, 2, 1): cut after 0 holds 0-1, cut after 2 holds 0-1 and 2-1.
        assert_eq!(cut_order_width(&Multigraph::path(3), &CutOrder::new(vec![0, 2, 1])).unwrap(), 2);
        let looped = Multigraph::new(2, vec![(0, 0), (1, 1)]).unwrap();
        assert_eq!(cut_order_width(&looped, &CutOrder::identity(2)).unwrap(), 0);
        assert!(cut_order_width(&Multigraph::path(3), &CutOrder::new(vec![0, 0, 1])).is_err());
    }

    #[test]
    fn trivial_fallbacks() {
        let (td, co) = trivial_decompositions(&Multigraph::complete(3));
        assert_eq!(td.validate(&Multigraph::complete(3)), Ok(2));
        assert_eq!(td.node_count(), 1);
        assert_eq!(co.order(), &[0, 1, 2]);

        let edgeless = Multigraph::empty(4);
        let (td, _) = trivial_decompositions(&edgeless);
        assert_eq!(td.node_count(), 4);
        assert_eq!(td.validate(&edgeless), Ok(0));
    }
}
