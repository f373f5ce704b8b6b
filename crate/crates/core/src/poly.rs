//! Exact univariate (Laurent) and bivariate polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{format_scalar, pow, pow_signed, Scalar};

/// `sum_i coeffs[i] * t^(low + i)`, trimmed so the first and last
/// coefficients are nonzero. The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    low: i64,
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self { low: 0, coeffs: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `c * t^exp`.
    pub fn monomial(c: Scalar, exp: i64) -> Self {
        Self::laurent(exp, vec![c])
    }

    /// Lowest degree first.
    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Self {
        Self::laurent(0, coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Scalar::from_integer(c.into())).collect())
    }

    /// Coefficients starting at exponent `low`.
    pub fn laurent(low: i64, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        Self { low: low + lead as i64, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// True when no negative exponent occurs.
    pub fn is_polynomial(&self) -> bool {
        self.is_zero() || self.low >= 0
    }

    pub fn coeff(&self, exp: i64) -> Scalar {
        let i = exp - self.low;
        if i < 0 {
            return Scalar::zero();
        }
        self.coeffs.get(i as usize).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Dense coefficients from exponent 0 to the degree; fails on negative
    /// exponents.
    pub fn dense(&self) -> Result<Vec<Scalar>> {
        if !self.is_polynomial() {
            return Err(Error::Invariant(format!("{self} has negative exponents")));
        }
        let Some(deg) = self.degree() else { return Ok(Vec::new()) };
        Ok((0..=deg).map(|e| self.coeff(e)).collect())
    }

    /// Iterates `(exponent, coefficient)` over the nonzero terms.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Scalar)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (self.low + i as i64, c))
    }

    /// Horner evaluation; fails at `t = 0` when negative exponents occur.
    pub fn eval(&self, t: &Scalar) -> Result<Scalar> {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        Ok(acc * pow_signed(t, self.low)?)
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::laurent(self.low, self.coeffs.iter().map(|v| v * c).collect())
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::constant(Scalar::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `p(t + c)`; only for ordinary polynomials.
    pub fn compose_shift(&self, c: &Scalar) -> Result<Self> {
        let dense = self.dense()?;
        let lin = Self::from_coeffs(vec![c.clone(), Scalar::one()]);
        let mut acc = Self::zero();
        for coef in dense.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(coef.clone());
        }
        Ok(acc)
    }

    /// Formats with the given variable name.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let mono = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{e}"),
            };
            push_term(&mut out, c, &mono);
        }
        out
    }
}

fn push_term(out: &mut String, c: &Scalar, mono: &str) {
    let neg = c.is_negative();
    let mag = c.abs();
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    if mono.is_empty() {
        out.push_str(&format_scalar(&mag));
    } else if mag.is_one() {
        out.push_str(mono);
    } else {
        out.push_str(&format_scalar(&mag));
        out.push('*');
        out.push_str(mono);
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.degree().unwrap().max(rhs.degree().unwrap());
        UniPoly::laurent(low, (low..=high).map(|e| self.coeff(e) + rhs.coeff(e)).collect())
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        self.scale(&-Scalar::one())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::laurent(self.low + rhs.low, out)
    }
}

/// The unique polynomial of degree `< points.len()` through the points,
/// by exact Vandermonde elimination.
pub fn interpolate(points: &[(Scalar, Scalar)]) -> Result<UniPoly> {
    for (i, (a, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(b, _)| a == b) {
            return Err(Error::DuplicateAbscissa(format_scalar(a)));
        }
    }
    let n = points.len();
    if n == 0 {
        return Ok(UniPoly::zero());
    }
    let a: Vec<Vec<Scalar>> = points.iter().map(|(t, _)| (0..n).map(|k| pow(t, k)).collect()).collect();
    let b: Vec<Scalar> = points.iter().map(|(_, v)| v.clone()).collect();
    let coeffs = linalg::solve(&a, &b).ok_or_else(|| Error::Invariant("singular Vandermonde system".into()))?;
    Ok(UniPoly::from_coeffs(coeffs))
}

/// A bivariate integer polynomial in `x` and `y`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TuttePoly {
    terms: BTreeMap<(usize, usize), BigInt>,
}

impl TuttePoly {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, i: usize, j: usize, c: BigInt) {
        let e = self.terms.entry((i, j)).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    /// Coefficient of `x^i y^j`.
    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Nonzero `((i, j), coefficient)` in ascending `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &BigInt)> {
        self.terms.iter()
    }

    pub fn eval(&self, x: &Scalar, y: &Scalar) -> Scalar {
        self.terms.iter().map(|(&(i, j), c)| Scalar::from_integer(c.clone()) * pow(x, i) * pow(y, j)).sum()
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }
}

impl fmt::Display for TuttePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<&(usize, usize)> = self.terms.keys().collect();
        keys.sort_by_key(|&&(i, j)| std::cmp::Reverse((i + j, i)));
        let var = |name: &str, e: usize| match e {
            0 => String::new(),
            1 => name.to_string(),
            _ => format!("{name}^{e}"),
        };
        let mut out = String::new();
        for &(i, j) in keys {
            let mono = [var("x", i), var("y", j)].into_iter().filter(|s| !s.is_empty()).collect::<Vec<_>>().join("*");
            push_term(&mut out, &Scalar::from_integer(self.terms[&(i, j)].clone()), &mono);
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    #[test]
    fn arithmetic_and_eval() {
        let p = UniPoly::from_ints(&[1, 0, 1]);
        let q = UniPoly::from_ints(&[-1, 1]);
        assert_eq!((&p * &q).dense().unwrap(), UniPoly::from_ints(&[-1, 1, -1, 1]).dense().unwrap());
        assert_eq!(p.eval(&int(3)).unwrap(), int(10));
        assert!((&p - &p).is_zero());
        let l = UniPoly::laurent(-2, vec![int(1), int(0), int(4)]);
        assert_eq!(l.eval(&int(2)).unwrap(), ratio(17, 4));
        assert!(l.eval(&int(0)).is_err());
        assert_eq!(l.shift(2).dense().unwrap(), vec![int(1), int(0), int(4)]);
    }

    #[test]
    fn compose_shift_moves_roots() {
        let p = UniPoly::from_ints(&[0, 0, 1]);
        assert_eq!(p.compose_shift(&int(-1)).unwrap(), UniPoly::from_ints(&[1, -2, 1]));
    }

    #[test]
    fn interpolation_examples() {
        let pts = [(int(0), int(1)), (int(1), int(2)), (int(2), int(5))];
        assert_eq!(interpolate(&pts).unwrap(), UniPoly::from_ints(&[1, 0, 1]));
        assert_eq!(interpolate(&[(int(3), int(7))]).unwrap(), UniPoly::constant(int(7)));
        assert!(matches!(interpolate(&[(int(1), int(1)), (int(1), int(2))]), Err(Error::DuplicateAbscissa(_))));
    }

    #[test]
    fn tutte_display() {
        let mut t = TuttePoly::new();
        t.add_term(1, 0, 1.into());
        t.add_term(0, 1, 1.into());
        t.add_term(2, 0, 1.into());
        assert_eq!(t.to_string(), "x^2 + x + y");
        assert_eq!(t.eval(&int(-2), &int(0)), int(2));
        assert_eq!(UniPoly::from_ints(&[1, -3, 0, 2]).to_string(), "2*t^3 - 3*t + 1");
    }
}
