//! Stretch, thickening and insulated thickening, each carrying the input
//! decompositions over to the transformed graph.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{forest_decomposition, CutOrder, Decompositions, Multigraph, TreeDecomposition, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TransformKind {
    Stretch,
    Thicken,
    Insulated,
}

impl fmt::Display for TransformKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Stretch => "stretch",
            Self::Thicken => "thicken",
            Self::Insulated => "insulated",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformResult {
    pub graph: Multigraph,
    pub decompositions: Decompositions,
    pub kind: TransformKind,
    pub k: usize,
}

/// Applies `kind` with parameter `k`.
pub fn transform(g: &Multigraph, decomps: &Decompositions, kind: TransformKind, k: usize) -> Result<TransformResult> {
    match kind {
        TransformKind::Stretch => k_stretch(g, decomps, k),
        TransformKind::Thicken => k_thicken(g, decomps, k),
        TransformKind::Insulated => insulated_k_thicken(g, decomps, k),
    }
}

fn check(g: &Multigraph, decomps: &Decompositions, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    decomps.tree.validate(g).map_err(Error::InvalidDecomposition)?;
    if let Some(pd) = &decomps.path {
        pd.validate(g).map_err(Error::InvalidDecomposition)?;
        if pd.path_order().is_none() {
            return Err(Error::InvalidArgument("path decomposition is not a path".into()));
        }
    }
    if let Some(co) = &decomps.cut {
        co.validate(g.vertex_count())?;
    }
    Ok(())
}

/// Internal path vertices per original edge: `paths[e]` lists the vertices
/// strictly between the endpoints, from the first endpoint to the second.
struct Subdivision {
    graph: Multigraph,
    paths: Vec<Vec<Vertex>>,
}

/// Replaces edge `e` by a path with `inner` internal vertices, the middle
/// edge repeated `middle` times (`middle = 1` for a plain path).
fn subdivide(g: &Multigraph, inner: usize, middle_edge: Option<(usize, usize)>) -> Subdivision {
    let mut next = g.vertex_count();
    let mut edges = Vec::new();
    let mut paths = Vec::with_capacity(g.edge_count());
    for &(u, v) in g.edges() {
        let inner_vertices: Vec<Vertex> = (next..next + inner).collect();
        next += inner;
        let mut chain = vec![u];
        chain.extend(&inner_vertices);
        chain.push(v);
        for (i, w) in chain.windows(2).enumerate() {
            let copies = match middle_edge {
                Some((idx, copies)) if idx == i => copies,
                _ => 1,
            };
            for _ in 0..copies {
                edges.push((w[0], w[1]));
            }
        }
        paths.push(inner_vertices);
    }
    Subdivision { graph: Multigraph::new(next, edges).expect("fresh vertices are in range"), paths }
}

fn stretched_tree(g: &Multigraph, td: &TreeDecomposition, sub: &Subdivision) -> TreeDecomposition {
    if td.width() < 2 {
        if let Some(fd) = forest_decomposition(&sub.graph) {
            return fd;
        }
    }
    let mut bags = td.bags().to_vec();
    let mut tree_edges = td.tree_edges().to_vec();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let inner = &sub.paths[e];
        if inner.is_empty() {
            continue;
        }
        let anchor = (0..td.node_count())
            .find(|&x| td.bag(x).contains(&u) && td.bag(x).contains(&v))
            .expect("validated decomposition covers every edge");
        // Chain {u, v, w1}, {w1, v, w2}, ..., {w_{k-2}, v, w_{k-1}}.
        let mut prev = anchor;
        let mut left = u;
        for &w in inner {
            bags.push(vec![left, v, w]);
            tree_edges.push((prev, bags.len() - 1));
            prev = bags.len() - 1;
            left = w;
        }
    }
    TreeDecomposition::new(bags, tree_edges)
}

fn stretched_path(g: &Multigraph, pd: &TreeDecomposition, sub: &Subdivision) -> TreeDecomposition {
    let order = pd.path_order().expect("checked to be a path");
    let mut placed = vec![false; g.edge_count()];
    let mut bags = Vec::new();
    for &x in &order {
        let bag = pd.bag(x);
        bags.push(bag.to_vec());
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if placed[e] || !bag.contains(&u) || !bag.contains(&v) {
                continue;
            }
            placed[e] = true;
            let inner = &sub.paths[e];
            // Bags B_x + {p_i, p_{i+1}} along u = p_0, ..., p_k = v.
            let mut chain = vec![u];
            chain.extend(inner);
            chain.push(v);
            for w in chain.windows(2) {
                if w.iter().any(|x| !bag.contains(x)) {
                    let mut b = bag.to_vec();
                    b.extend_from_slice(w);
                    bags.push(b);
                }
            }
        }
    }
    TreeDecomposition::path(bags)
}

fn stretched_cut(g: &Multigraph, co: &CutOrder, sub: &Subdivision) -> CutOrder {
    let pos = co.positions();
    let mut after: Vec<Vec<Vertex>> = vec![Vec::new(); g.vertex_count()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let inner = &sub.paths[e];
        if pos[u] <= pos[v] {
            after[u].extend(inner.iter().copied());
        } else {
            after[v].extend(inner.iter().rev().copied());
        }
    }
    let mut order = Vec::with_capacity(sub.graph.vertex_count());
    for &v in co.order() {
        order.push(v);
        order.extend(after[v].iter().copied());
    }
    CutOrder::new(order)
}

fn subdivided(
    g: &Multigraph,
    decomps: &Decompositions,
    sub: Subdivision,
    kind: TransformKind,
    k: usize,
) -> TransformResult {
    let tree = stretched_tree(g, &decomps.tree, &sub);
    let path = decomps.path.as_ref().map(|pd| stretched_path(g, pd, &sub));
    let cut = decomps.cut.as_ref().map(|co| stretched_cut(g, co, &sub));
    TransformResult { graph: sub.graph, decompositions: Decompositions { tree, path, cut }, kind, k }
}

/// Every edge becomes a path of length `k`; a loop becomes a `k`-cycle.
pub fn k_stretch(g: &Multigraph, decomps: &Decompositions, k: usize) -> Result<TransformResult> {
    check(g, decomps, k)?;
    let sub = subdivide(g, k - 1, None);
    Ok(subdivided(g, decomps, sub, TransformKind::Stretch, k))
}

/// Every edge becomes `k` parallel edges. Decompositions carry over as is.
pub fn k_thicken(g: &Multigraph, decomps: &Decompositions, k: usize) -> Result<TransformResult> {
    check(g, decomps, k)?;
    let edges = g.edges().iter().flat_map(|&e| std::iter::repeat_n(e, k)).collect();
    Ok(TransformResult {
        graph: Multigraph::new(g.vertex_count(), edges)?,
        decompositions: decomps.clone(),
        kind: TransformKind::Thicken,
        k,
    })
}

/// Every edge becomes a path of length 3 whose middle edge is repeated `k`
/// times.
pub fn insulated_k_thicken(g: &Multigraph, decomps: &Decompositions, k: usize) -> Result<TransformResult> {
    check(g, decomps, k)?;
    let sub = subdivide(g, 2, Some((1, k)));
    Ok(subdivided(g, decomps, sub, TransformKind::Insulated, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cut_order_width;

    fn widths(r: &TransformResult) -> (usize, Option<usize>, Option<usize>) {
        let d = &r.decompositions;
        let tw = d.tree.validate(&r.graph).unwrap();
        let pw = d.path.as_ref().map(|p| p.validate(&r.graph).unwrap());
        let cw = d.cut.as_ref().map(|c| cut_order_width(&r.graph, c).unwrap());
        (tw, pw, cw)
    }

    fn k3_decomps() -> Decompositions {
        let td = TreeDecomposition::new(vec![vec![0, 1, 2]], vec![]);
        Decompositions::new(td.clone()).with_path(td).with_cut(CutOrder::identity(3))
    }

    #[test]
    fn stretch_of_triangle_is_hexagon() {
        let r = k_stretch(&Multigraph::complete(3), &k3_decomps(), 2).unwrap();
        assert_eq!((r.graph.vertex_count(), r.graph.edge_count()), (6, 6));
        assert_eq!(r.graph.component_count(), 1);
        assert!((0..6).all(|v| r.graph.edges().iter().filter(|&&(a, b)| a == v || b == v).count() == 2));
        let (tw, pw, cw) = widths(&r);
        assert_eq!((tw, cw), (2, Some(2)));
        assert!(pw.unwrap() <= 4);
    }

    #[test]
    fn thicken_multiplies_edges() {
        let r = k_thicken(&Multigraph::complete(3), &k3_decomps(), 2).unwrap();
        assert_eq!((r.graph.vertex_count(), r.graph.edge_count()), (3, 6));
        assert_eq!(widths(&r), (2, Some(2), Some(4)));
    }

    #[test]
    fn insulated_single_edge() {
        let g = Multigraph::path(2);
        let td = TreeDecomposition::new(vec![vec![0, 1]], vec![]);
        let d = Decompositions::new(td.clone()).with_path(td).with_cut(CutOrder::identity(2));
        let r = insulated_k_thicken(&g, &d, 4).unwrap();
        assert_eq!(r.graph.edges(), &[(0, 2), (2, 3), (2, 3), (2, 3), (2, 3), (3, 1)]);
        let (tw, pw, cw) = widths(&r);
        assert_eq!(tw, 1);
        assert!(pw.unwrap() <= 3);
        assert_eq!(cw, Some(4));
    }

    #[test]
    fn stretch_of_tree_stays_a_tree() {
        let g = Multigraph::star(3);
        let (td, co) = crate::graph::trivial_decompositions(&g);
        let fd = forest_decomposition(&g).unwrap();
        let d = Decompositions { tree: fd, path: None, cut: Some(co) };
        let r = k_stretch(&g, &d, 3).unwrap();
        assert_eq!(widths(&r).0, 1);
        assert!(td.validate(&g).is_ok());
    }

    #[test]
    fn loops_become_cycles() {
        let g = Multigraph::new(2, vec![(0, 1), (1, 1)]).unwrap();
        let d = Decompositions::trivial(&g);
        let r = k_stretch(&g, &d, 3).unwrap();
        assert_eq!(r.graph.edge_count(), 6);
        assert!(!r.graph.has_loops());
        widths(&r);
        let t = k_thicken(&g, &d, 3).unwrap();
        assert_eq!(t.graph.edges().iter().filter(|&&(a, b)| a == b).count(), 3);
    }

    #[test]
    fn rejects_zero() {
        let g = Multigraph::complete(3);
        assert!(k_stretch(&g, &k3_decomps(), 0).is_err());
    }
}
