//! Edge-set counts `c[i][j]`: the number of edge sets with `i` components and
//! `j` edges. Every Tutte evaluation factors through this table.

use std::collections::BTreeMap;

use num::bigint::{BigInt, BigUint};
use num::{One, Zero};

use crate::poly::{TuttePoly, UniPoly};
use crate::scalar::{pow, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSetCounts {
    vertices: usize,
    edges: usize,
    components: usize,
    table: BTreeMap<(usize, usize), BigUint>,
}

impl EdgeSetCounts {
    /// `components` is `k(E)` of the whole graph.
    pub fn new(vertices: usize, edges: usize, components: usize) -> Self {
        Self { vertices, edges, components, table: BTreeMap::new() }
    }

    pub fn add(&mut self, i: usize, j: usize, c: BigUint) {
        if !c.is_zero() {
            *self.table.entry((i, j)).or_default() += c;
        }
    }

    pub fn get(&self, i: usize, j: usize) -> BigUint {
        self.table.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Nonzero entries in ascending `(i, j)` order.
    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &BigUint)> {
        self.table.iter()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    /// Sum over all entries; `2^|E|` for a complete table.
    pub fn total(&self) -> BigUint {
        self.table.values().sum()
    }

    /// `T(G; x, y)`.
    pub fn eval(&self, x: &Scalar, y: &Scalar) -> Scalar {
        let (xm, ym) = (x - Scalar::one(), y - Scalar::one());
        self.table
            .iter()
            .map(|(&(i, j), c)| {
                Scalar::from_integer(BigInt::from(c.clone()))
                    * pow(&xm, i - self.components)
                    * pow(&ym, i + j - self.vertices)
            })
            .sum()
    }

    /// The full Tutte polynomial, expanded binomially from the shifted form.
    pub fn tutte_polynomial(&self) -> TuttePoly {
        let mut out = TuttePoly::new();
        for (&(i, j), c) in &self.table {
            let a = i - self.components;
            let b = i + j - self.vertices;
            let c = BigInt::from(c.clone());
            let ra = signed_binomials(a);
            let rb = signed_binomials(b);
            for (r, ca) in ra.iter().enumerate() {
                for (s, cb) in rb.iter().enumerate() {
                    out.add_term(r, s, &c * ca * cb);
                }
            }
        }
        out
    }

    /// `t^|V| * T(G; alpha/t + 1, t + 1) = sum c[i][j] alpha^(i-k) t^(j+k)`.
    pub fn h_alpha_curve(&self, alpha: &Scalar) -> UniPoly {
        let k = self.components;
        let mut coeffs = vec![Scalar::zero(); self.edges + k + 1];
        for (&(i, j), c) in &self.table {
            coeffs[j + k] += Scalar::from_integer(BigInt::from(c.clone())) * pow(alpha, i - k);
        }
        UniPoly::from_coeffs(coeffs)
    }
}

/// Coefficients of `(z - 1)^a` by ascending power of `z`.
fn signed_binomials(a: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..a {
        let mut next = vec![BigInt::zero(); row.len() + 1];
        for (r, c) in row.iter().enumerate() {
            next[r + 1] += c;
            next[r] -= c;
        }
        row = next;
    }
    row
}

pub fn eval_from_counts(counts: &EdgeSetCounts, x: &Scalar, y: &Scalar) -> Scalar {
    counts.eval(x, y)
}

pub fn tutte_coefficients(counts: &EdgeSetCounts) -> TuttePoly {
    counts.tutte_polynomial()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn k3() -> EdgeSetCounts {
        let mut c = EdgeSetCounts::new(3, 3, 1);
        for (i, j, v) in [(3, 0, 1u32), (2, 1, 3), (1, 2, 3), (1, 3, 1)] {
            c.add(i, j, v.into());
        }
        c
    }

    #[test]
    fn triangle() {
        let c = k3();
        assert_eq!(c.eval(&int(2), &int(2)), int(8));
        assert_eq!(c.eval(&int(-2), &int(0)), int(2));
        assert_eq!(c.tutte_polynomial().to_string(), "x^2 + x + y");
        assert_eq!(c.total(), BigUint::from(8u32));
    }

    #[test]
    fn curve_matches_pointwise() {
        let c = k3();
        let alpha = int(2);
        let curve = c.h_alpha_curve(&alpha);
        for t in [1, 2, -3, 5] {
            let t = int(t);
            let x = &alpha / &t + int(1);
            let y = &t + int(1);
            assert_eq!(curve.eval(&t).unwrap(), pow(&t, 3) * c.eval(&x, &y));
        }
    }
}
