//! Pointed tensor products and the point shift they induce.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::oracle::brute_tutte;
use crate::scalar::{format_scalar, pow, Scalar};

/// A small graph with a distinguished edge whose endpoints are glued onto
/// each edge of the host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadget {
    pub graph: Multigraph,
    pub special: usize,
}

impl Gadget {
    /// `C_{k+1}`: the product is the `k`-stretch.
    pub fn stretch(k: usize) -> Self {
        Self { graph: Multigraph::cycle(k + 1), special: k }
    }

    /// `k + 1` parallel edges: the product is the `k`-thickening.
    pub fn thicken(k: usize) -> Self {
        Self { graph: Multigraph::new(2, vec![(0, 1); k + 1]).unwrap(), special: 0 }
    }

    /// Special edge `st` plus the insulated bundle `s - w1 =k= w2 - t`.
    pub fn insulated(k: usize) -> Self {
        let mut edges = vec![(0, 1), (0, 2)];
        edges.extend(std::iter::repeat_n((2, 3), k));
        edges.push((3, 1));
        Self { graph: Multigraph::new(4, edges).unwrap(), special: 0 }
    }
}

/// `G (x)_e H`: every edge `ab` of `G` is replaced by a copy of `H \ e` with
/// the endpoints of `e` identified with `a` and `b`.
pub fn pointed_tensor(g: &Multigraph, h: &Multigraph, special: usize) -> Result<Multigraph> {
    if special >= h.edge_count() {
        return Err(Error::InvalidArgument(format!("special edge {special} out of range")));
    }
    let (s, t) = h.edge(special);
    let mut next = g.vertex_count();
    let mut edges = Vec::new();
    for &(a, b) in g.edges() {
        let mut map = vec![usize::MAX; h.vertex_count()];
        map[s] = a;
        map[t] = b;
        for m in map.iter_mut().filter(|m| **m == usize::MAX) {
            *m = next;
            next += 1;
        }
        for (i, &(p, q)) in h.edges().iter().enumerate() {
            if i != special {
                edges.push((map[p], map[q]));
            }
        }
    }
    Multigraph::new(next, edges)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrylawskiFactors {
    pub t_c: Scalar,
    pub t_l: Scalar,
    pub x: Scalar,
    pub y: Scalar,
}

impl BrylawskiFactors {
    /// `T_C^(|E| - r(G)) T_L^r(G)` with `r` the rank of the host graph, so
    /// that `T(G (x) H; x, y) = prefactor * T(G; x', y')`.
    pub fn prefactor_for(&self, g: &Multigraph) -> Scalar {
        pow(&self.t_c, g.nullity()) * pow(&self.t_l, g.rank())
    }
}

/// Solves `(x-1) T_C + T_L = T(H\e)`, `T_C + (y-1) T_L = T(H/e)` and returns
/// the shifted point `(T(H\e)/T_L, T(H/e)/T_C)`.
pub fn brylawski_factors(h: &Multigraph, special: usize, x: &Scalar, y: &Scalar) -> Result<BrylawskiFactors> {
    if special >= h.edge_count() {
        return Err(Error::InvalidArgument(format!("special edge {special} out of range")));
    }
    let degenerate =
        |why: &str| Error::DegenerateGadget(format!("({}, {}): {why}", format_scalar(x), format_scalar(y)));
    let (xm, ym) = (x - Scalar::one(), y - Scalar::one());
    let det = &xm * &ym - Scalar::one();
    if det.is_zero() {
        return Err(degenerate("(x-1)(y-1) = 1 makes the system singular"));
    }
    let deleted = brute_tutte(&h.delete_edge(special), x, y)?;
    let contracted = brute_tutte(&h.contract_edge(special), x, y)?;
    let t_c = (&deleted * &ym - &contracted) / &det;
    let t_l = (&xm * &contracted - &deleted) / &det;
    if t_c.is_zero() || t_l.is_zero() {
        return Err(degenerate("T_C or T_L vanishes"));
    }
    Ok(BrylawskiFactors { x: deleted / &t_l, y: contracted / &t_c, t_c, t_l })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    #[test]
    fn triangle_through_cycle_gadget() {
        let k3 = Multigraph::complete(3);
        let gadget = Gadget::stretch(2);
        let c6 = pointed_tensor(&k3, &gadget.graph, gadget.special).unwrap();
        assert_eq!((c6.vertex_count(), c6.edge_count()), (6, 6));
        let (x, y) = (int(2), int(3));
        let f = brylawski_factors(&gadget.graph, gadget.special, &x, &y).unwrap();
        let lhs = brute_tutte(&c6, &x, &y).unwrap();
        assert_eq!(lhs, f.prefactor_for(&k3) * brute_tutte(&k3, &f.x, &f.y).unwrap());
    }

    #[test]
    fn stretch_specialization() {
        let (a, b) = (int(3), ratio(5, 2));
        for k in 1..=4 {
            let g = Gadget::stretch(k);
            let f = brylawski_factors(&g.graph, g.special, &a, &b).unwrap();
            let s: Scalar = (0..k).map(|i| pow(&a, i)).sum();
            assert_eq!(f.x, pow(&a, k));
            assert_eq!(f.y, (&b + &s - Scalar::one()) / &s);
            assert_eq!((f.t_c, f.t_l), (s, Scalar::one()));
        }
    }

    #[test]
    fn two_thickening_specialization() {
        let (a, b) = (ratio(1, 3), int(4));
        let g = Gadget::thicken(2);
        let f = brylawski_factors(&g.graph, g.special, &a, &b).unwrap();
        assert_eq!(f.x, (&a + &b) / (&b + int(1)));
        assert_eq!(f.y, &b * &b);
        let host = Multigraph::complete(4);
        assert_eq!(f.prefactor_for(&host), pow(&(&b + int(1)), 3));
    }

    #[test]
    fn prefactor_uses_host_rank() {
        // A single edge stretched is a path: T = x^k with no extra factor.
        let edge = Multigraph::path(2);
        let g = Gadget::stretch(3);
        let (x, y) = (int(2), int(5));
        let f = brylawski_factors(&g.graph, g.special, &x, &y).unwrap();
        assert_eq!(f.prefactor_for(&edge), Scalar::one());
        assert_eq!(brute_tutte(&pointed_tensor(&edge, &g.graph, g.special).unwrap(), &x, &y).unwrap(), int(8));
    }

    #[test]
    fn degenerate_on_h1() {
        let g = Gadget::stretch(2);
        assert!(matches!(brylawski_factors(&g.graph, g.special, &int(2), &int(2)), Err(Error::DegenerateGadget(_))));
    }
}
