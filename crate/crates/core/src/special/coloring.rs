//! Proper colorings over a nice decomposition and the chromatic points of the
//! Tutte polynomial.

use num::bigint::{BigInt, BigUint};

use crate::error::{Error, Result};
use crate::general::Count;
use crate::graph::{Multigraph, NiceDecomposition, NiceKind, NiceNode};
use crate::scalar::{pow, Scalar};
use crate::walk::{evaluate, NiceVisitor};

pub const MAX_COLORING_TABLE: u128 = 1 << 24;

/// Indexed by bag colorings in mixed radix: the `i`-th sorted bag vertex is
/// digit `i` in base `q`.
struct ColoringVisitor<'a, T> {
    g: &'a Multigraph,
    q: usize,
    _count: std::marker::PhantomData<T>,
}

impl<T: Count> ColoringVisitor<'_, T> {
    fn digit(&self, code: usize, t: usize) -> usize {
        code / self.q.pow(t as u32) % self.q
    }
}

impl<T: Count> NiceVisitor for ColoringVisitor<'_, T> {
    type Table = Vec<T>;

    fn leaf(&self, _id: usize, _node: &NiceNode) -> Result<Vec<T>> {
        Ok(vec![T::one()])
    }

    fn unary(&self, _id: usize, node: &NiceNode, child: Vec<T>) -> Result<Vec<T>> {
        let bag = &node.bag;
        let q = self.q;
        Ok(match node.kind {
            NiceKind::IntroduceVertex(v) => {
                let t = bag.binary_search(&v).unwrap();
                let unit = q.pow(t as u32);
                (0..q.pow(bag.len() as u32))
                    .map(|code| {
                        let old = code % unit + code / (unit * q) * unit;
                        child[old].clone()
                    })
                    .collect()
            }
            NiceKind::ForgetVertex(v) => {
                let t = bag.partition_point(|&w| w < v);
                let unit = q.pow(t as u32);
                let mut out = vec![T::zero(); q.pow(bag.len() as u32)];
                for (code, c) in child.iter().enumerate() {
                    let new = code % unit + code / (unit * q) * unit;
                    out[new].add_assign(c);
                }
                out
            }
            NiceKind::IntroduceEdge(e) => {
                let (u, v) = self.g.edge(e);
                let (tu, tv) = (bag.binary_search(&u).unwrap(), bag.binary_search(&v).unwrap());
                let mut out = child;
                for (code, c) in out.iter_mut().enumerate() {
                    if self.digit(code, tu) == self.digit(code, tv) {
                        *c = T::zero();
                    }
                }
                out
            }
            NiceKind::Leaf | NiceKind::Join => unreachable!("not a unary node"),
        })
    }

    fn join(&self, _id: usize, _node: &NiceNode, left: Vec<T>, right: Vec<T>) -> Result<Vec<T>> {
        Ok(left
            .iter()
            .zip(&right)
            .map(|(a, b)| {
                let mut c = T::zero();
                c.add_product(a, b);
                c
            })
            .collect())
    }
}

fn run<T: Count>(g: &Multigraph, nd: &NiceDecomposition, q: usize) -> Result<BigUint> {
    let visitor = ColoringVisitor::<T> { g, q, _count: std::marker::PhantomData };
    Ok(evaluate(nd, &visitor)?[0].to_biguint())
}

/// Number of proper colorings of `g` with `q >= 1` colors.
pub fn count_colorings(g: &Multigraph, nd: &NiceDecomposition, q: usize) -> Result<BigUint> {
    nd.validate(g)?;
    if q == 0 {
        return Err(Error::InvalidArgument("q must be at least 1".into()));
    }
    let bag = nd.max_bag_size() as u32;
    if (q as u128).checked_pow(bag).is_none_or(|s| s > MAX_COLORING_TABLE) {
        return Err(Error::ResourceGuard(format!("{q}^{bag} bag colorings exceed the coloring DP limit")));
    }
    // Counts are at most q^|V|.
    if (g.vertex_count() as f64) * (q as f64).log2() < 127.0 {
        run::<u128>(g, nd, q)
    } else {
        run::<BigUint>(g, nd, q)
    }
}

/// `T(G; 1 - q, 0)` from `P(G; q) = (-1)^(|V| - k(E)) q^k(E) T(G; 1 - q, 0)`.
pub fn tutte_chromatic_point(g: &Multigraph, nd: &NiceDecomposition, q: usize) -> Result<Scalar> {
    let p = Scalar::from_integer(BigInt::from(count_colorings(g, nd, q)?));
    let k = g.component_count();
    let sign = if (g.vertex_count() - k).is_multiple_of(2) {
        Scalar::from_integer(1.into())
    } else {
        Scalar::from_integer((-1).into())
    };
    Ok(p / (sign * pow(&Scalar::from_integer(BigInt::from(q)), k)))
}
