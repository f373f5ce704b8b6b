//! Exhaustive reference computations over all edge subsets or all vertex
//! colorings. Exponential; only for small instances.

use std::collections::BTreeMap;

use num::bigint::{BigInt, BigUint};
use num::{One, Zero};

use crate::counts::EdgeSetCounts;
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::scalar::{pow, Scalar};

pub const MAX_ORACLE_EDGES: usize = 24;
pub const MAX_ORACLE_COLORINGS: u128 = 1 << 24;

fn guard(g: &Multigraph) -> Result<()> {
    if g.edge_count() > MAX_ORACLE_EDGES {
        return Err(Error::ResourceGuard(format!(
            "oracle enumerates 2^{} edge sets (limit 2^{MAX_ORACLE_EDGES})",
            g.edge_count()
        )));
    }
    Ok(())
}

/// Runs `f(component_count, |A|, mask)` for every edge subset `A`.
fn for_each_subset<R, F>(
    g: &Multigraph,
    identity: impl Fn() -> R + Send + Sync,
    f: F,
    combine: impl Fn(R, R) -> R + Send + Sync,
) -> R
where
    R: Send,
    F: Fn(&mut R, usize, usize, u32) + Send + Sync,
{
    let m = g.edge_count();
    let n = g.vertex_count();
    let split = m.min(8);
    let low_bits = m - split;
    crate::par::map_reduce(
        1usize << split,
        identity,
        |high, acc| {
            let mut parent = vec![0usize; n];
            for low in 0..(1u32 << low_bits) {
                let mask = ((high as u32) << low_bits) | low;
                for (i, p) in parent.iter_mut().enumerate() {
                    *p = i;
                }
                let mut comps = n;
                for (e, &(u, v)) in g.edges().iter().enumerate() {
                    if mask >> e & 1 == 1 {
                        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                        if ru != rv {
                            parent[ru] = rv;
                            comps -= 1;
                        }
                    }
                }
                f(acc, comps, mask.count_ones() as usize, mask);
            }
        },
        combine,
    )
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn merge_maps<K: Ord>(mut a: BTreeMap<K, u64>, b: BTreeMap<K, u64>) -> BTreeMap<K, u64> {
    for (k, v) in b {
        *a.entry(k).or_default() += v;
    }
    a
}

/// `T(G; x, y)` from the subset expansion.
pub fn brute_tutte(g: &Multigraph, x: &Scalar, y: &Scalar) -> Result<Scalar> {
    guard(g)?;
    let n = g.vertex_count();
    let k_e = g.component_count();
    // Keyed by the two exponents of the subset expansion.
    let exps = for_each_subset(
        g,
        BTreeMap::<(usize, usize), u64>::new,
        |acc, comps, size, _| *acc.entry((comps - k_e, comps + size - n)).or_default() += 1,
        merge_maps,
    );
    let (xm, ym) = (x - Scalar::one(), y - Scalar::one());
    Ok(exps.into_iter().map(|((a, b), c)| Scalar::from_integer(BigInt::from(c)) * pow(&xm, a) * pow(&ym, b)).sum())
}

pub fn brute_counts(g: &Multigraph) -> Result<EdgeSetCounts> {
    guard(g)?;
    let table = for_each_subset(
        g,
        BTreeMap::<(usize, usize), u64>::new,
        |acc, comps, size, _| *acc.entry((comps, size)).or_default() += 1,
        merge_maps,
    );
    let mut out = EdgeSetCounts::new(g.vertex_count(), g.edge_count(), g.component_count());
    for ((i, j), c) in table {
        out.add(i, j, BigUint::from(c));
    }
    Ok(out)
}

/// Number of forests (acyclic edge sets), by size.
pub fn brute_forest_sizes(g: &Multigraph) -> Result<Vec<BigUint>> {
    guard(g)?;
    let n = g.vertex_count();
    let by_size = for_each_subset(
        g,
        BTreeMap::<usize, u64>::new,
        |acc, comps, size, _| {
            if comps + size == n {
                *acc.entry(size).or_default() += 1;
            }
        },
        merge_maps,
    );
    let top = by_size.keys().max().copied().unwrap_or(0);
    Ok((0..=top).map(|s| BigUint::from(by_size.get(&s).copied().unwrap_or(0))).collect())
}

pub fn brute_forest_count(g: &Multigraph) -> Result<BigUint> {
    Ok(brute_forest_sizes(g)?.into_iter().sum())
}

/// Coefficients of `C_G(z)`: even edge sets by size.
pub fn brute_even_subgraphs(g: &Multigraph) -> Result<Vec<BigUint>> {
    guard(g)?;
    let n = g.vertex_count();
    let by_size = for_each_subset(
        g,
        BTreeMap::<usize, u64>::new,
        |acc, _, size, mask| {
            let mut degree = vec![0u32; n];
            for (e, &(u, v)) in g.edges().iter().enumerate() {
                if mask >> e & 1 == 1 {
                    degree[u] += 1;
                    degree[v] += 1;
                }
            }
            if degree.iter().all(|d| d % 2 == 0) {
                *acc.entry(size).or_default() += 1;
            }
        },
        merge_maps,
    );
    let top = by_size.keys().max().copied().unwrap_or(0);
    Ok((0..=top).map(|s| BigUint::from(by_size.get(&s).copied().unwrap_or(0))).collect())
}

/// Proper colorings with `q` colors, by enumerating all `q^|V|` maps.
pub fn brute_colorings(g: &Multigraph, q: usize) -> Result<BigUint> {
    let n = g.vertex_count();
    let total = (q as u128).checked_pow(n as u32).filter(|&t| t <= MAX_ORACLE_COLORINGS);
    let Some(total) = total else {
        return Err(Error::ResourceGuard(format!("{q}^{n} colorings exceed the oracle limit")));
    };
    if q == 0 {
        return Ok(if n == 0 { BigUint::one() } else { BigUint::zero() });
    }
    let count = crate::par::map_reduce(
        total as usize,
        || 0u64,
        |code, acc| {
            let mut colors = vec![0usize; n];
            let mut c = code;
            for slot in colors.iter_mut() {
                *slot = c % q;
                c /= q;
            }
            if g.edges().iter().all(|&(u, v)| colors[u] != colors[v]) {
                *acc += 1;
            }
        },
        |a, b| a + b,
    );
    Ok(BigUint::from(count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn named_values() {
        let k3 = Multigraph::complete(3);
        assert_eq!(brute_tutte(&k3, &int(2), &int(2)).unwrap(), int(8));
        assert_eq!(brute_tutte(&k3, &int(1), &int(1)).unwrap(), int(3));
        assert_eq!(brute_tutte(&Multigraph::complete(4), &int(2), &int(1)).unwrap(), int(38));
        assert_eq!(brute_forest_count(&k3).unwrap(), 7u32.into());
        assert_eq!(brute_colorings(&k3, 3).unwrap(), 6u32.into());
        let even: Vec<u32> =
            brute_even_subgraphs(&Multigraph::complete(4)).unwrap().iter().map(|c| u32::try_from(c).unwrap()).collect();
        assert_eq!(even, vec![1, 0, 0, 4, 3]);
    }

    #[test]
    fn count_tables() {
        let c = brute_counts(&Multigraph::complete(3)).unwrap();
        let entries: Vec<_> = c.iter().map(|(&k, v)| (k, u32::try_from(v).unwrap())).collect();
        assert_eq!(entries, vec![((1, 2), 3), ((1, 3), 1), ((2, 1), 3), ((3, 0), 1)]);
        let e = brute_counts(&Multigraph::empty(4)).unwrap();
        assert_eq!(e.iter().count(), 1);
        assert_eq!(e.get(4, 0), BigUint::one());
        let l = brute_counts(&Multigraph::new(1, vec![(0, 0)]).unwrap()).unwrap();
        assert_eq!((l.get(1, 0), l.get(1, 1)), (BigUint::one(), BigUint::one()));
    }

    #[test]
    fn guards() {
        let big = Multigraph::new(2, vec![(0, 1); 25]).unwrap();
        assert!(matches!(brute_tutte(&big, &int(1), &int(1)), Err(Error::ResourceGuard(_))));
        assert!(brute_colorings(&Multigraph::empty(30), 3).is_err());
    }
}
