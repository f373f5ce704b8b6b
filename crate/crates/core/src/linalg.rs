//! Exact linear algebra over the rationals.

use num::bigint::BigInt;
use num::{One, Zero};

use crate::scalar::Scalar;

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn integer_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            for k in c + 1..cols {
                let v = (&m[rank][c] * &m[r][k] - &m[r][c] * &m[rank][k]) / &prev;
                m[r][k] = v;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Rank of a rational matrix.
pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    let mut m = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        eliminate_below(&mut m, rank, c);
        rank += 1;
    }
    rank
}

fn eliminate_below(m: &mut [Vec<Scalar>], pivot_row: usize, c: usize) {
    let (head, tail) = m.split_at_mut(pivot_row + 1);
    let pivot = &head[pivot_row];
    for row in tail {
        if row[c].is_zero() {
            continue;
        }
        let f = &row[c] / &pivot[c];
        for k in c..row.len() {
            if !pivot[k].is_zero() {
                row[k] -= &f * &pivot[k];
            }
        }
    }
}

/// Solves `A X = B` for `X` where `A` is `m x n` with full column rank and
/// every column of `B` is in the column space of `A`. Returns the columns of
/// `X`, or `None` when `A` is rank deficient or some column is inconsistent.
pub fn solve_columns(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let k = b.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Scalar>> = a.iter().zip(b).map(|(ra, rb)| ra.iter().chain(rb).cloned().collect()).collect();
    for c in 0..n {
        let p = (c..m).find(|&r| !aug[r][c].is_zero())?;
        aug.swap(c, p);
        let inv = aug[c][c].recip();
        for v in aug[c].iter_mut() {
            *v *= &inv;
        }
        for r in 0..m {
            if r != c && !aug[r][c].is_zero() {
                let f = aug[r][c].clone();
                let (pivot, row) = if r < c {
                    let (lo, hi) = aug.split_at_mut(c);
                    (&hi[0], &mut lo[r])
                } else {
                    let (lo, hi) = aug.split_at_mut(r);
                    (&lo[c], &mut hi[0])
                };
                for j in c..n + k {
                    if !pivot[j].is_zero() {
                        row[j] -= &f * &pivot[j];
                    }
                }
            }
        }
    }
    if aug[n..].iter().any(|row| row[n..].iter().any(|v| !v.is_zero())) {
        return None;
    }
    Some((0..k).map(|j| (0..n).map(|i| aug[i][n + j].clone()).collect()).collect())
}

/// Solves a square nonsingular system `A x = b`.
pub fn solve(a: &[Vec<Scalar>], b: &[Scalar]) -> Option<Vec<Scalar>> {
    let rhs: Vec<Vec<Scalar>> = b.iter().map(|v| vec![v.clone()]).collect();
    solve_columns(a, &rhs).map(|mut cols| cols.remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn q(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()
    }

    #[test]
    fn ranks_agree() {
        let m = [[1, 2, 3], [2, 4, 6], [1, 0, 1]];
        let zi: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
        let zq = q(&[&m[0], &m[1], &m[2]]);
        assert_eq!(integer_rank(&zi), 2);
        assert_eq!(rank(&zq), 2);
        assert_eq!(rank(&q(&[&[0, 0], &[0, 0]])), 0);
    }

    #[test]
    fn solves_square_and_tall_systems() {
        let a = q(&[&[2, 1], &[1, 3]]);
        let x = solve(&a, &[int(3), int(5)]).unwrap();
        assert_eq!(x, vec![crate::scalar::ratio(4, 5), crate::scalar::ratio(7, 5)]);
        let tall = q(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert!(solve(&tall, &[int(1), int(2), int(3)]).is_some());
        assert!(solve(&tall, &[int(1), int(2), int(4)]).is_none());
        assert!(solve(&q(&[&[1, 1], &[1, 1]]), &[int(1), int(1)]).is_none());
    }
}
