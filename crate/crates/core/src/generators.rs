//! Seeded graph families for tests, benches and the CLI.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{CutOrder, Decompositions, Multigraph, TreeDecomposition, Vertex};

/// A graph together with decompositions known to be valid for it.
#[derive(Debug, Clone)]
pub struct Instance {
    pub graph: Multigraph,
    pub decompositions: Decompositions,
}

impl Instance {
    pub fn trivial(graph: Multigraph) -> Self {
        let decompositions = Decompositions::trivial(&graph);
        Self { graph, decompositions }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn canonical_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Vec<(Vertex, Vertex)> {
    let mut perm: Vec<Vertex> = (0..n).collect();
    let mut best: Option<Vec<(Vertex, Vertex)>> = None;
    loop {
        let mut mapped: Vec<_> = edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        mapped.sort_unstable();
        if best.as_ref().is_none_or(|b| mapped < *b) {
            best = Some(mapped);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap_or_default()
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("p[i] qualifies");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Every connected simple graph on `1..=max_vertices` vertices, one per
/// isomorphism class (1, 1, 2, 6, 21 classes for 1..=5 vertices).
pub fn connected_simple_graphs(max_vertices: usize) -> Vec<Multigraph> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let pairs: Vec<(Vertex, Vertex)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut seen = BTreeSet::new();
        for mask in 0u64..1 << pairs.len() {
            let edges: Vec<_> = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
            if edges.len() + 1 < n {
                continue;
            }
            let g = Multigraph::new(n, edges).expect("pairs are in range");
            if g.component_count() != 1 {
                continue;
            }
            if seen.insert(canonical_edges(n, g.edges())) {
                out.push(g);
            }
        }
    }
    out
}

/// A multigraph on `1..=max_vertices` vertices with at most `max_edges`
/// edges, loops and parallel edges allowed.
pub fn random_multigraph<R: Rng>(rng: &mut R, max_vertices: usize, max_edges: usize) -> Multigraph {
    let n = rng.gen_range(1..=max_vertices);
    let m = rng.gen_range(0..=max_edges);
    let edges = (0..m).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
    Multigraph::new(n, edges).expect("endpoints are in range")
}

pub fn random_multigraphs(seed: u64, count: usize, max_vertices: usize, max_edges: usize) -> Vec<Multigraph> {
    let mut rng = rng(seed);
    (0..count).map(|_| random_multigraph(&mut rng, max_vertices, max_edges)).collect()
}

/// Keeps each edge of a `k`-tree (or `k`-path) with probability `keep`.
/// Vertex `v > k` is attached to `k` vertices of an earlier bag; the bags
/// form the returned decomposition.
fn partial_ktree<R: Rng>(rng: &mut R, n: usize, k: usize, keep: f64, path: bool) -> Instance {
    assert!(n > k, "need more than k vertices");
    let mut bags: Vec<Vec<Vertex>> = vec![(0..=k).collect()];
    let mut tree_edges = Vec::new();
    let mut edges = Vec::new();
    let offer = |rng: &mut R, u: Vertex, v: Vertex, edges: &mut Vec<(Vertex, Vertex)>| {
        if rng.gen_bool(keep) {
            edges.push((u, v));
        }
    };
    for u in 0..=k {
        for v in u + 1..=k {
            offer(rng, u, v, &mut edges);
        }
    }
    for v in k + 1..n {
        let parent = if path { bags.len() - 1 } else { rng.gen_range(0..bags.len()) };
        let mut clique = bags[parent].clone();
        clique.remove(rng.gen_range(0..clique.len()));
        for &u in &clique {
            offer(rng, u, v, &mut edges);
        }
        clique.push(v);
        bags.push(clique);
        tree_edges.push((parent, bags.len() - 1));
    }
    let graph = Multigraph::new(n, edges).expect("endpoints are in range");
    let tree = TreeDecomposition::new(bags, tree_edges);
    let mut decompositions = Decompositions::new(tree.clone()).with_cut(CutOrder::identity(n));
    if path {
        decompositions = decompositions.with_path(tree);
    }
    Instance { graph, decompositions }
}

/// A random subgraph of a `k`-tree on `n` vertices with a width-`k` tree
/// decomposition and the insertion order as cut order.
pub fn partial_ktree_instance<R: Rng>(rng: &mut R, n: usize, k: usize, keep: f64) -> Instance {
    partial_ktree(rng, n, k, keep, false)
}

/// Like [`partial_ktree_instance`] but every vertex attaches to the previous
/// bag, so the decomposition is also a width-`k` path decomposition.
pub fn partial_kpath_instance<R: Rng>(rng: &mut R, n: usize, k: usize, keep: f64) -> Instance {
    partial_ktree(rng, n, k, keep, true)
}

/// Shuffles vertex labels, carrying the decompositions along.
pub fn relabel<R: Rng>(rng: &mut R, inst: &Instance) -> Instance {
    let n = inst.graph.vertex_count();
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(rng);
    let edges = inst.graph.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    let map_td = |td: &TreeDecomposition| {
        let bags = td.bags().iter().map(|b| b.iter().map(|&v| perm[v]).collect()).collect();
        TreeDecomposition::new(bags, td.tree_edges().to_vec())
    };
    let d = &inst.decompositions;
    Instance {
        graph: Multigraph::new(n, edges).expect("permutation keeps range"),
        decompositions: Decompositions {
            tree: map_td(&d.tree),
            path: d.path.as_ref().map(map_td),
            cut: d.cut.as_ref().map(|c| CutOrder::new(c.order().iter().map(|&v| perm[v]).collect())),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cut_order_width;

    #[test]
    fn corpus_sizes() {
        let counts: Vec<usize> = (1..=5).map(|n| connected_simple_graphs(n).len()).collect();
        assert_eq!(counts, [1, 2, 4, 10, 31]);
    }

    #[test]
    fn ktree_decompositions_validate() {
        let mut r = rng(7);
        for k in 1..=4 {
            for path in [false, true] {
                let inst = partial_ktree(&mut r, 12, k, 0.7, path);
                let d = &inst.decompositions;
                assert!(d.tree.validate(&inst.graph).unwrap() <= k);
                assert_eq!(d.path.is_some(), path);
                if let Some(pd) = &d.path {
                    assert!(pd.is_path());
                }
                cut_order_width(&inst.graph, d.cut.as_ref().unwrap()).unwrap();
                let shuffled = relabel(&mut r, &inst);
                assert!(shuffled.decompositions.tree.validate(&shuffled.graph).is_ok());
            }
        }
    }

    #[test]
    fn random_multigraphs_respect_bounds() {
        let gs = random_multigraphs(1, 200, 7, 10);
        assert!(gs.iter().all(|g| g.vertex_count() <= 7 && g.edge_count() <= 10));
        assert!(gs.iter().any(|g| g.has_loops()));
        assert_eq!(gs, random_multigraphs(1, 200, 7, 10));
    }
}
