use crate::error::{Error, Result};

pub type Vertex = usize;

/// Undirected multigraph on vertices `0..vertex_count`. Parallel edges and
/// self-loops are allowed; edge indices are positions in `edges`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl Multigraph {
    pub fn new(vertex_count: usize, edges: Vec<(Vertex, Vertex)>) -> Result<Self> {
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= vertex_count || v >= vertex_count) {
            return Err(Error::InvalidArgument(format!("edge ({u}, {v}) has an endpoint outside 0..{vertex_count}")));
        }
        Ok(Self { vertex_count, edges })
    }

    pub fn empty(vertex_count: usize) -> Self {
        Self { vertex_count, edges: Vec::new() }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Self { vertex_count: n, edges }
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|v| (v - 1, v)).collect();
        Self { vertex_count: n, edges }
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 1);
        let edges = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Self { vertex_count: n, edges }
    }

    pub fn star(leaves: usize) -> Self {
        let edges = (1..=leaves).map(|v| (0, v)).collect();
        Self { vertex_count: leaves + 1, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> (Vertex, Vertex) {
        self.edges[index]
    }

    pub fn is_loop(&self, index: usize) -> bool {
        let (u, v) = self.edges[index];
        u == v
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    /// Number of connected components of `(V, E)`, isolated vertices included.
    pub fn component_count(&self) -> usize {
        let mut dsu = DisjointSets::new(self.vertex_count);
        for &(u, v) in &self.edges {
            dsu.union(u, v);
        }
        dsu.set_count()
    }

    /// |V| - k(E), the rank of the cycle matroid.
    pub fn rank(&self) -> usize {
        self.vertex_count - self.component_count()
    }

    /// |E| - |V| + k(E), the dimension of the cycle space.
    pub fn nullity(&self) -> usize {
        self.edges.len() - self.rank()
    }

    /// Adds a fresh vertex and returns its id.
    pub fn add_vertex(&mut self) -> Vertex {
        self.vertex_count += 1;
        self.vertex_count - 1
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> usize {
        assert!(u < self.vertex_count && v < self.vertex_count, "endpoint out of range");
        self.edges.push((u, v));
        self.edges.len() - 1
    }

    /// `G \ e`: the edge is removed, all other indices shift down past it.
    pub fn delete_edge(&self, index: usize) -> Self {
        let mut edges = self.edges.clone();
        edges.remove(index);
        Self { vertex_count: self.vertex_count, edges }
    }

    /// `G / e`: endpoints are identified (the larger id merges into the smaller,
    /// ids above it shift down); parallel partners of `e` become loops.
    /// Contracting a loop is the same as deleting it.
    pub fn contract_edge(&self, index: usize) -> Self {
        let (a, b) = self.edges[index];
        if a == b {
            return self.delete_edge(index);
        }
        let (keep, gone) = (a.min(b), a.max(b));
        let relabel = |w: Vertex| {
            if w == gone {
                keep
            } else if w > gone {
                w - 1
            } else {
                w
            }
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != index)
            .map(|(_, &(u, v))| (relabel(u), relabel(v)))
            .collect();
        Self { vertex_count: self.vertex_count - 1, edges }
    }

    /// Disjoint union; the vertices of `other` are shifted past ours.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = self.vertex_count;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Self { vertex_count: self.vertex_count + other.vertex_count, edges }
    }

    /// True if the edge is a bridge (its removal increases k).
    pub fn is_bridge(&self, index: usize) -> bool {
        !self.is_loop(index) && self.delete_edge(index).component_count() > self.component_count()
    }

    /// Adjacency lists with edge indices, loops listed once.
    pub fn incidence(&self) -> Vec<Vec<(Vertex, usize)>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, i));
            if u != v {
                adj[v].push((u, i));
            }
        }
        adj
    }
}

/// Union-find with path halving and union by size.
#[derive(Debug, Clone)]
pub struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
    sets: usize,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), size: vec![1; n], sets: n }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already together.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.sets -= 1;
        true
    }

    pub fn set_count(&self) -> usize {
        self.sets
    }
}
