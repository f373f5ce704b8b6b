//! Nice decompositions with explicit edge-introduce nodes.

use std::collections::BTreeSet;

use super::decomposition::{tree_parents, TreeDecomposition};
use super::multigraph::{Multigraph, Vertex};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NiceKind {
    Leaf,
    IntroduceVertex(Vertex),
    ForgetVertex(Vertex),
    IntroduceEdge(usize),
    Join,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceNode {
    pub kind: NiceKind,
    /// Sorted bag.
    pub bag: Vec<Vertex>,
    pub children: Vec<usize>,
}

/// Nodes are stored in post-order: every child precedes its parent, and the
/// last node is the root (whose bag is empty).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceDecomposition {
    nodes: Vec<NiceNode>,
}

impl NiceDecomposition {
    pub fn nodes(&self) -> &[NiceNode] {
        &self.nodes
    }

    pub fn node(&self, id: usize) -> &NiceNode {
        &self.nodes[id]
    }

    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn max_bag_size(&self) -> usize {
        self.nodes.iter().map(|n| n.bag.len()).max().unwrap_or(0)
    }

    pub fn width(&self) -> usize {
        self.max_bag_size().saturating_sub(1)
    }

    pub fn join_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.kind == NiceKind::Join).count()
    }

    /// Checks node-local shape rules, post-order, an empty root bag and that
    /// every edge is introduced exactly once with both endpoints present.
    pub fn validate(&self, g: &Multigraph) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidNice(msg));
        if self.nodes.is_empty() {
            return bad("no nodes".into());
        }
        let mut introduced = vec![0usize; g.edge_count()];
        let mut has_parent = vec![false; self.nodes.len()];
        for (id, node) in self.nodes.iter().enumerate() {
            if node.bag.windows(2).any(|w| w[0] >= w[1]) || node.bag.iter().any(|&v| v >= g.vertex_count()) {
                return bad(format!("node {id} has an unsorted or out-of-range bag"));
            }
            for &c in &node.children {
                if c >= id {
                    return bad(format!("node {id} has child {c} that is not earlier in post-order"));
                }
                if std::mem::replace(&mut has_parent[c], true) {
                    return bad(format!("node {c} has two parents"));
                }
            }
            let child_bag = |i: usize| &self.nodes[node.children[i]].bag;
            let arity = node.children.len();
            match node.kind {
                NiceKind::Leaf => {
                    if arity != 0 || !node.bag.is_empty() {
                        return bad(format!("leaf {id} must be childless with an empty bag"));
                    }
                }
                NiceKind::IntroduceVertex(v) => {
                    let mut expect = child_bag(0).clone();
                    if arity != 1 || expect.contains(&v) {
                        return bad(format!("introduce node {id} is malformed"));
                    }
                    expect.push(v);
                    expect.sort_unstable();
                    if expect != node.bag {
                        return bad(format!("introduce node {id} bag mismatch"));
                    }
                }
                NiceKind::ForgetVertex(v) => {
                    if arity != 1 {
                        return bad(format!("forget node {id} needs one child"));
                    }
                    let expect: Vec<_> = child_bag(0).iter().copied().filter(|&w| w != v).collect();
                    if expect.len() + 1 != child_bag(0).len() || expect != node.bag {
                        return bad(format!("forget node {id} bag mismatch"));
                    }
                }
                NiceKind::IntroduceEdge(e) => {
                    if arity != 1 || *child_bag(0) != node.bag || e >= g.edge_count() {
                        return bad(format!("edge node {id} is malformed"));
                    }
                    let (u, v) = g.edge(e);
                    if node.bag.binary_search(&u).is_err() || node.bag.binary_search(&v).is_err() {
                        return bad(format!("edge node {id} introduces edge {e} outside its bag"));
                    }
                    introduced[e] += 1;
                }
                NiceKind::Join => {
                    if arity != 2 || *child_bag(0) != node.bag || *child_bag(1) != node.bag {
                        return bad(format!("join node {id} is malformed"));
                    }
                }
            }
        }
        if !self.nodes.last().unwrap().bag.is_empty() {
            return bad("root bag is not empty".into());
        }
        if let Some(pos) = has_parent[..self.nodes.len() - 1].iter().position(|&p| !p) {
            return bad(format!("node {pos} is detached from the root"));
        }
        if let Some(e) = introduced.iter().position(|&c| c != 1) {
            return bad(format!("edge {e} introduced {} times", introduced[e]));
        }
        // Every vertex must be introduced and forgotten exactly once along any
        // root path; checking that forget counts equal vertex count suffices
        // for connected trees with an empty root.
        let mut forgotten = vec![0usize; g.vertex_count()];
        for node in &self.nodes {
            if let NiceKind::ForgetVertex(v) = node.kind {
                forgotten[v] += 1;
            }
        }
        if let Some(v) = forgotten.iter().position(|&c| c != 1) {
            return bad(format!("vertex {v} forgotten {} times", forgotten[v]));
        }
        Ok(())
    }
}

struct Builder<'a> {
    td: &'a TreeDecomposition,
    children: Vec<Vec<usize>>,
    edges_at: Vec<Vec<usize>>,
    nodes: Vec<NiceNode>,
}

impl Builder<'_> {
    fn push(&mut self, kind: NiceKind, bag: Vec<Vertex>, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode { kind, bag, children });
        self.nodes.len() - 1
    }

    fn forget(&mut self, mut top: usize, v: Vertex) -> usize {
        let bag: Vec<_> = self.nodes[top].bag.iter().copied().filter(|&w| w != v).collect();
        top = self.push(NiceKind::ForgetVertex(v), bag, vec![top]);
        top
    }

    fn introduce(&mut self, top: usize, v: Vertex) -> usize {
        let mut bag = self.nodes[top].bag.clone();
        bag.push(v);
        bag.sort_unstable();
        self.push(NiceKind::IntroduceVertex(v), bag, vec![top])
    }

    /// Builds the chain for decomposition node `x` from the finished chains
    /// of its children; the returned nice node has bag `B_x` and all edges
    /// assigned inside the subtree are introduced.
    fn build(&mut self, x: usize, child_tops: &[usize]) -> usize {
        let target: BTreeSet<Vertex> = self.td.bag(x).iter().copied().collect();
        let mut branches = Vec::new();
        if child_tops.is_empty() {
            let mut top = self.push(NiceKind::Leaf, Vec::new(), Vec::new());
            for &v in &target {
                top = self.introduce(top, v);
            }
            branches.push(top);
        }
        for &child_top in child_tops {
            let mut top = child_top;
            let have: BTreeSet<Vertex> = self.nodes[top].bag.iter().copied().collect();
            for &v in have.difference(&target) {
                top = self.forget(top, v);
            }
            for &v in target.difference(&have) {
                top = self.introduce(top, v);
            }
            branches.push(top);
        }
        let mut top = branches[0];
        for &other in &branches[1..] {
            let bag = self.nodes[top].bag.clone();
            top = self.push(NiceKind::Join, bag, vec![top, other]);
        }
        for e in self.edges_at[x].clone() {
            let bag = self.nodes[top].bag.clone();
            top = self.push(NiceKind::IntroduceEdge(e), bag, vec![top]);
        }
        top
    }
}

/// Turns a valid tree decomposition into a nice one. The root is the
/// lowest-indexed tree leaf among those with the smallest bag; each edge is
/// introduced at the top of the highest decomposition node containing both
/// endpoints. Path-shaped inputs therefore yield join-free outputs.
pub fn make_nice(g: &Multigraph, td: &TreeDecomposition) -> Result<NiceDecomposition> {
    td.validate(g).map_err(Error::InvalidDecomposition)?;
    let adj = td.adjacency();
    let root = (0..td.node_count())
        .filter(|&x| adj[x].len() <= 1)
        .min_by_key(|&x| (td.bag(x).len(), x))
        .expect("a finite tree has a leaf");
    let (parent, bfs) = tree_parents(&adj, root);
    let mut depth = vec![0usize; td.node_count()];
    let mut children = vec![Vec::new(); td.node_count()];
    for &x in &bfs[1..] {
        depth[x] = depth[parent[x]] + 1;
        children[parent[x]].push(x);
    }
    for list in &mut children {
        list.sort_unstable();
    }
    let mut edges_at = vec![Vec::new(); td.node_count()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let home = (0..td.node_count())
            .filter(|&x| td.bag(x).binary_search(&u).is_ok() && td.bag(x).binary_search(&v).is_ok())
            .min_by_key(|&x| (depth[x], x))
            .expect("validated decomposition covers every edge");
        edges_at[home].push(i);
    }
    let mut builder = Builder { td, children, edges_at, nodes: Vec::new() };
    // Children before parents: reverse BFS order, so no recursion is needed
    // on deep decompositions.
    let mut tops = vec![usize::MAX; td.node_count()];
    for &x in bfs.iter().rev() {
        let child_tops: Vec<usize> = builder.children[x].iter().map(|&c| tops[c]).collect();
        tops[x] = builder.build(x, &child_tops);
    }
    let mut top = tops[root];
    for v in td.bag(root).to_vec() {
        top = builder.forget(top, v);
    }
    let nice = NiceDecomposition { nodes: builder.nodes };
    debug_assert_eq!(top, nice.root());
    debug_assert!(nice.validate(g).is_ok());
    Ok(nice)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(nd: &NiceDecomposition) -> Vec<NiceKind> {
        nd.nodes().iter().map(|n| n.kind).collect()
    }

    #[test]
    fn single_vertex_chain() {
        let g = Multigraph::empty(1);
        let td = TreeDecomposition::new(vec![vec![0]], vec![]);
        let nd = make_nice(&g, &td).unwrap();
        assert_eq!(kinds(&nd), vec![NiceKind::Leaf, NiceKind::IntroduceVertex(0), NiceKind::ForgetVertex(0)]);
    }

    #[test]
    fn k3_gets_three_edge_nodes() {
        let g = Multigraph::complete(3);
        let td = TreeDecomposition::new(vec![vec![0, 1, 2]], vec![]);
        let nd = make_nice(&g, &td).unwrap();
        nd.validate(&g).unwrap();
        let edge_nodes = kinds(&nd).iter().filter(|k| matches!(k, NiceKind::IntroduceEdge(_))).count();
        assert_eq!(edge_nodes, 3);
        assert_eq!(nd.join_count(), 0);
    }

    #[test]
    fn parallel_edges_are_introduced_separately() {
        let g = Multigraph::new(2, vec![(0, 1), (1, 0)]).unwrap();
        let td = TreeDecomposition::new(vec![vec![0, 1]], vec![]);
        let nd = make_nice(&g, &td).unwrap();
        let edges: Vec<_> = kinds(&nd)
            .into_iter()
            .filter_map(|k| match k {
                NiceKind::IntroduceEdge(e) => Some(e),
                _ => None,
            })
            .collect();
        assert_eq!(edges, vec![0, 1]);
    }

    #[test]
    fn paths_stay_join_free_and_trees_get_joins() {
        let g = Multigraph::path(4);
        let pd = TreeDecomposition::path(vec![vec![1, 2], vec![0, 1], vec![2, 3]]);
        assert!(pd.validate(&g).is_err());
        let pd = TreeDecomposition::path(vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        let nd = make_nice(&g, &pd).unwrap();
        assert_eq!(nd.join_count(), 0);
        assert_eq!(nd.max_bag_size(), 2);

        let star = Multigraph::star(3);
        let td =
            TreeDecomposition::new(vec![vec![0], vec![0, 1], vec![0, 2], vec![0, 3]], vec![(0, 1), (0, 2), (0, 3)]);
        let nd = make_nice(&star, &td).unwrap();
        nd.validate(&star).unwrap();
        assert!(nd.join_count() >= 1);
    }

    #[test]
    fn rejects_invalid_input() {
        let g = Multigraph::complete(3);
        let td = TreeDecomposition::path(vec![vec![0, 1], vec![1, 2]]);
        assert!(make_nice(&g, &td).is_err());
    }
}
