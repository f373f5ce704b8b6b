//! Even-subgraph generating function over a nice decomposition, and the
//! Tutte polynomial on the hyperbola `(x - 1)(y - 1) = 2` derived from it.

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{Multigraph, NiceDecomposition, NiceKind, NiceNode};
use crate::poly::UniPoly;
use crate::scalar::{format_scalar, int, pow, Scalar};
use crate::walk::{evaluate, NiceVisitor};

pub const MAX_PARITY_BAG: usize = 20;

/// `table[p][k]`: edge sets of size `k` whose odd-degree bag vertices are
/// the bits of `p` (bit `i` is the `i`-th bag vertex in sorted order) and
/// whose forgotten vertices all have even degree.
type ParityTable = Vec<Vec<BigInt>>;

fn add_at(slot: &mut Vec<BigInt>, k: usize, c: &BigInt) {
    if slot.len() <= k {
        slot.resize(k + 1, BigInt::zero());
    }
    slot[k] += c;
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// In-place Walsh-Hadamard transform across the mask index, applied to each
/// coefficient of the size polynomial.
fn walsh_hadamard(table: &mut ParityTable) {
    let width = table.iter().map(Vec::len).max().unwrap_or(0);
    for slot in table.iter_mut() {
        slot.resize(width, BigInt::zero());
    }
    let n = table.len();
    let mut h = 1;
    while h < n {
        for start in (0..n).step_by(2 * h) {
            for i in start..start + h {
                let (lo, hi) = table.split_at_mut(i + h);
                for (a, b) in lo[i].iter_mut().zip(hi[0].iter_mut()) {
                    let s = &*a + &*b;
                    let d = &*a - &*b;
                    *a = s;
                    *b = d;
                }
            }
        }
        h *= 2;
    }
}

pub(crate) fn xor_join(left: &ParityTable, right: &ParityTable) -> ParityTable {
    let (mut l, mut r) = (left.clone(), right.clone());
    walsh_hadamard(&mut l);
    walsh_hadamard(&mut r);
    let mut out: ParityTable = crate::par::map(l.into_iter().zip(r).collect(), |(a, b)| poly_mul(&a, &b));
    walsh_hadamard(&mut out);
    let size = BigInt::from(out.len());
    for slot in out.iter_mut() {
        for c in slot.iter_mut() {
            *c /= &size;
        }
    }
    out
}

pub(crate) fn naive_join(left: &ParityTable, right: &ParityTable) -> ParityTable {
    let mut out: ParityTable = vec![Vec::new(); left.len()];
    for (p1, a) in left.iter().enumerate() {
        for (p2, b) in right.iter().enumerate() {
            for (k, c) in poly_mul(a, b).iter().enumerate() {
                add_at(&mut out[p1 ^ p2], k, c);
            }
        }
    }
    out
}

struct ParityVisitor<'a> {
    g: &'a Multigraph,
    naive: bool,
}

impl NiceVisitor for ParityVisitor<'_> {
    type Table = ParityTable;

    fn leaf(&self, _id: usize, _node: &NiceNode) -> Result<ParityTable> {
        Ok(vec![vec![BigInt::one()]])
    }

    fn unary(&self, _id: usize, node: &NiceNode, child: ParityTable) -> Result<ParityTable> {
        let bag = &node.bag;
        Ok(match node.kind {
            NiceKind::IntroduceVertex(v) => {
                let t = bag.binary_search(&v).unwrap();
                let mut out = vec![Vec::new(); 1 << bag.len()];
                for (p, slot) in child.into_iter().enumerate() {
                    out[insert_zero_bit(p, t)] = slot;
                }
                out
            }
            NiceKind::ForgetVertex(v) => {
                let t = child_position(bag, v);
                let mut out = vec![Vec::new(); 1 << bag.len()];
                for (p, slot) in child.into_iter().enumerate() {
                    if p >> t & 1 == 0 {
                        out[remove_bit(p, t)] = slot;
                    }
                }
                out
            }
            NiceKind::IntroduceEdge(e) => {
                let (u, v) = self.g.edge(e);
                let flip = if u == v {
                    0
                } else {
                    (1 << bag.binary_search(&u).unwrap()) | (1 << bag.binary_search(&v).unwrap())
                };
                let mut out = child.clone();
                for (p, slot) in child.iter().enumerate() {
                    for (k, c) in slot.iter().enumerate() {
                        if !c.is_zero() {
                            add_at(&mut out[p ^ flip], k + 1, c);
                        }
                    }
                }
                out
            }
            NiceKind::Leaf | NiceKind::Join => unreachable!("not a unary node"),
        })
    }

    fn join(&self, _id: usize, _node: &NiceNode, left: ParityTable, right: ParityTable) -> Result<ParityTable> {
        Ok(if self.naive { naive_join(&left, &right) } else { xor_join(&left, &right) })
    }
}

/// Position of `v` in the bag `bag + {v}`.
fn child_position(bag: &[usize], v: usize) -> usize {
    bag.partition_point(|&w| w < v)
}

fn insert_zero_bit(p: usize, t: usize) -> usize {
    let low = p & ((1 << t) - 1);
    ((p >> t) << (t + 1)) | low
}

fn remove_bit(p: usize, t: usize) -> usize {
    let low = p & ((1 << t) - 1);
    ((p >> (t + 1)) << t) | low
}

fn run(g: &Multigraph, nd: &NiceDecomposition, naive: bool) -> Result<UniPoly> {
    nd.validate(g)?;
    if nd.max_bag_size() > MAX_PARITY_BAG {
        return Err(Error::ResourceGuard(format!(
            "bag of size {} exceeds the parity DP limit of {MAX_PARITY_BAG}",
            nd.max_bag_size()
        )));
    }
    let root = evaluate(nd, &ParityVisitor { g, naive })?;
    let coeffs = root[0].iter().map(|c| Scalar::from_integer(c.clone())).collect();
    Ok(UniPoly::from_coeffs(coeffs))
}

/// `C_G(z) = sum over even edge sets A of z^|A|`.
pub fn even_subgraph_poly(g: &Multigraph, nd: &NiceDecomposition) -> Result<UniPoly> {
    run(g, nd, false)
}

/// Same result, with the quadratic join used as a reference.
pub fn even_subgraph_poly_naive(g: &Multigraph, nd: &NiceDecomposition) -> Result<UniPoly> {
    run(g, nd, true)
}

/// `T(G; x, y)` for a point with `(x - 1)(y - 1) = 2` and `y` not in `{1, -1}`.
///
/// With `v = y - 1` the Ising high-temperature expansion gives
/// `sum_A 2^k(A) v^|A| = ((v + 2)/2)^|E| 2^|V| C_G(v/(v + 2))`, and on this
/// curve the left side equals `2^k(E) v^(|V| - k(E)) T(G; x, y)`.
pub fn tutte_on_h2(g: &Multigraph, nd: &NiceDecomposition, x: &Scalar, y: &Scalar) -> Result<Scalar> {
    let one = Scalar::one();
    if (x - &one) * (y - &one) != int(2) {
        return Err(Error::InvalidArgument(format!(
            "({}, {}) is not on (x-1)(y-1) = 2",
            format_scalar(x),
            format_scalar(y)
        )));
    }
    if y.abs().is_one() {
        return Err(Error::InapplicablePoint {
            x: format_scalar(x),
            y: format_scalar(y),
            reason: "the Ising route needs y outside {1, -1}".into(),
        });
    }
    let c = even_subgraph_poly(g, nd)?;
    let v = y - &one;
    let w = &v / (&v + int(2));
    let z = pow(&((&v + int(2)) / int(2)), g.edge_count()) * pow(&int(2), g.vertex_count()) * c.eval(&w)?;
    let k = g.component_count();
    Ok(z / (pow(&int(2), k) * pow(&v, g.vertex_count() - k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_nice, trivial_decompositions, TreeDecomposition};
    use crate::oracle::brute_tutte;

    fn nice(g: &Multigraph) -> NiceDecomposition {
        make_nice(g, &trivial_decompositions(g).0).unwrap()
    }

    #[test]
    fn small_generating_functions() {
        let k3 = Multigraph::complete(3);
        assert_eq!(even_subgraph_poly(&k3, &nice(&k3)).unwrap(), UniPoly::from_ints(&[1, 0, 0, 1]));
        let k4 = Multigraph::complete(4);
        assert_eq!(even_subgraph_poly(&k4, &nice(&k4)).unwrap(), UniPoly::from_ints(&[1, 0, 0, 4, 3]));
        let p = Multigraph::path(6);
        assert_eq!(even_subgraph_poly(&p, &nice(&p)).unwrap(), UniPoly::from_ints(&[1]));
        let l = Multigraph::new(2, vec![(0, 0), (0, 1), (0, 1)]).unwrap();
        assert_eq!(even_subgraph_poly(&l, &nice(&l)).unwrap(), UniPoly::from_ints(&[1, 1, 1, 1]));
    }

    #[test]
    fn joins_agree() {
        let g = Multigraph::new(5, vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (1, 3), (0, 4)]).unwrap();
        let td = TreeDecomposition::new(
            vec![vec![0, 1, 2, 3, 4], vec![0, 1, 2], vec![2, 3, 4], vec![1, 3], vec![0, 4]],
            vec![(0, 1), (0, 2), (0, 3), (0, 4)],
        );
        let nd = make_nice(&g, &td).unwrap();
        assert!(nd.join_count() > 0);
        assert_eq!(even_subgraph_poly(&g, &nd).unwrap(), even_subgraph_poly_naive(&g, &nd).unwrap());
    }

    #[test]
    fn h2_points() {
        let k3 = Multigraph::complete(3);
        let nd = nice(&k3);
        assert_eq!(tutte_on_h2(&k3, &nd, &int(3), &int(2)).unwrap(), int(14));
        assert_eq!(tutte_on_h2(&k3, &nd, &int(-1), &int(0)).unwrap(), int(0));
        assert_eq!(tutte_on_h2(&k3, &nd, &int(-1), &int(0)).unwrap(), brute_tutte(&k3, &int(-1), &int(0)).unwrap());
        let t = Multigraph::star(4);
        assert_eq!(tutte_on_h2(&t, &nice(&t), &int(5), &crate::scalar::ratio(3, 2)).unwrap(), int(625));
        assert!(matches!(tutte_on_h2(&k3, &nd, &int(0), &int(-1)), Err(Error::InapplicablePoint { .. })));
        assert!(tutte_on_h2(&k3, &nd, &int(2), &int(2)).is_err());
    }
}
