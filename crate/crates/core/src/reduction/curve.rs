//! Recovering `T` along a hyperbola `(x - 1)(y - 1) = alpha` from a single
//! point on it, and the point evaluation driver built on top.

use std::fmt;

use num::{One, Signed, ToPrimitive, Zero};

use super::brylawski::{brylawski_factors, BrylawskiFactors, Gadget};
use super::transforms::{k_stretch, transform, TransformKind};
use crate::error::{Error, Result};
use crate::forest::{count_forests, curve_y1_restriction};
use crate::general::general_dp;
use crate::graph::{Decompositions, Multigraph};
use crate::poly::{interpolate, UniPoly};
use crate::scalar::{format_scalar, int, pow, Scalar};
use crate::special::{tutte_chromatic_point, tutte_on_h2};

/// Computes `T(H; a, b)` for one fixed point `(a, b)` and any graph `H`.
pub type PointEvaluator<'a> = dyn Fn(&Multigraph, &Decompositions) -> Result<Scalar> + Sync + 'a;

/// Evaluator backed by the Ising DP; the point must lie on `alpha = 2`.
pub fn ising_evaluator(x: Scalar, y: Scalar) -> impl Fn(&Multigraph, &Decompositions) -> Result<Scalar> + Sync {
    move |h, d| tutte_on_h2(h, &d.nice(h)?, &x, &y)
}

/// Evaluator for `T(H; 1 - q, 0)` through proper colorings.
pub fn chromatic_evaluator(q: usize) -> impl Fn(&Multigraph, &Decompositions) -> Result<Scalar> + Sync {
    move |h, d| tutte_chromatic_point(h, &d.nice(h)?, q)
}

/// Evaluator through the general counting DP.
pub fn general_evaluator(x: Scalar, y: Scalar) -> impl Fn(&Multigraph, &Decompositions) -> Result<Scalar> + Sync {
    move |h, d| Ok(general_dp(h, &d.nice(h)?)?.eval(&x, &y))
}

/// Number of curve samples: `t^|V| T(G; alpha/t + 1, t + 1)` has degree at
/// most `|E| + k(E)`.
fn sample_budget(g: &Multigraph) -> usize {
    g.edge_count() + g.component_count() + 1
}

fn usable(a: &Scalar) -> bool {
    a.is_one() || !(a.is_zero() || a.abs().is_one())
}

fn inapplicable(a: &Scalar, b: &Scalar, reason: &str) -> Error {
    Error::InapplicablePoint { x: format_scalar(a), y: format_scalar(b), reason: reason.into() }
}

fn gadget(kind: TransformKind, k: usize) -> Gadget {
    match kind {
        TransformKind::Stretch => Gadget::stretch(k),
        TransformKind::Thicken => Gadget::thicken(k),
        TransformKind::Insulated => Gadget::insulated(k),
    }
}

type Step = (TransformKind, usize, BrylawskiFactors);

/// Gadget steps that move `(a, b)` to a point the stretch sampler can use.
fn preprocessing(a: &Scalar, b: &Scalar) -> Option<(Vec<Step>, Scalar, Scalar)> {
    if usable(a) {
        return Some((Vec::new(), a.clone(), b.clone()));
    }
    let candidates = [
        (TransformKind::Insulated, 2),
        (TransformKind::Insulated, 3),
        (TransformKind::Thicken, 2),
        (TransformKind::Thicken, 3),
        (TransformKind::Stretch, 2),
        (TransformKind::Stretch, 3),
    ];
    let apply = |(kind, k): (TransformKind, usize), x: &Scalar, y: &Scalar| {
        let h = gadget(kind, k);
        brylawski_factors(&h.graph, h.special, x, y).ok().map(|f| (kind, k, f))
    };
    let done = |f: &BrylawskiFactors| usable(&f.x) && !f.y.is_one();
    for &first in &candidates {
        let Some(s1) = apply(first, a, b) else { continue };
        if done(&s1.2) {
            let (x, y) = (s1.2.x.clone(), s1.2.y.clone());
            return Some((vec![s1], x, y));
        }
        for &second in &candidates {
            let Some(s2) = apply(second, &s1.2.x, &s1.2.y) else { continue };
            if done(&s2.2) {
                let (x, y) = (s2.2.x.clone(), s2.2.y.clone());
                return Some((vec![s1.clone(), s2], x, y));
            }
        }
    }
    None
}

/// `T(H; p)` where `p` is the point reached by `steps`, via the evaluator at
/// the starting point on the transformed graph.
fn through_steps(h: &Multigraph, d: &Decompositions, steps: &[Step], evaluator: &PointEvaluator<'_>) -> Result<Scalar> {
    let mut graph = h.clone();
    let mut decomps = d.clone();
    let mut divisor = Scalar::one();
    for (kind, k, factors) in steps.iter().rev() {
        divisor *= factors.prefactor_for(&graph);
        let r = transform(&graph, &decomps, *kind, *k)?;
        graph = r.graph;
        decomps = r.decompositions;
    }
    Ok(evaluator(&graph, &decomps)? / divisor)
}

/// `t^|V| * T(G; alpha/t + 1, t + 1)` with `alpha = (a - 1)(b - 1)`, from
/// evaluations of `T(.; a, b)` on stretched copies of `g`. When `|a|` is 0 or
/// 1 (and `a != 1`) the point is first moved by thickening gadgets.
pub fn curve_restriction(
    g: &Multigraph,
    decomps: &Decompositions,
    a: &Scalar,
    b: &Scalar,
    evaluator: &PointEvaluator<'_>,
) -> Result<UniPoly> {
    if b.is_one() {
        return Err(inapplicable(a, b, "the stretch sampler needs y != 1"));
    }
    let (steps, a, b) =
        preprocessing(a, b).ok_or_else(|| inapplicable(a, b, "no gadget chain reaches |x| outside {0, 1}"))?;
    let budget = sample_budget(g);
    let n = g.vertex_count();
    let nullity = g.nullity();
    let samples = crate::par::map((1..=budget + 1).collect(), |k: usize| -> Result<(Scalar, Scalar)> {
        let s: Scalar = (0..k).map(|i| pow(&a, i)).sum();
        let t = (&b - Scalar::one()) / &s;
        let stretched = k_stretch(g, decomps, k)?;
        let value = through_steps(&stretched.graph, &stretched.decompositions, &steps, evaluator)?;
        let on_curve = value / pow(&s, nullity);
        Ok((t.clone(), pow(&t, n) * on_curve))
    });
    let samples: Vec<(Scalar, Scalar)> = samples.into_iter().collect::<Result<_>>()?;
    let poly = interpolate(&samples[..budget])?;
    let (t, v) = &samples[budget];
    if &poly.eval(t)? != v {
        return Err(Error::Invariant("curve samples do not fit a polynomial of the expected degree".into()));
    }
    let top = (g.edge_count() + g.component_count()) as i64;
    if poly.degree().is_some_and(|d| d > top) || poly.low_degree().is_some_and(|d| d < g.component_count() as i64) {
        return Err(Error::Invariant(format!("curve polynomial {poly} violates the exponent bounds")));
    }
    Ok(poly)
}

/// `T(G; x, y)` read off a curve polynomial from [`curve_restriction`].
pub fn eval_curve(curve: &UniPoly, g: &Multigraph, y: &Scalar) -> Result<Scalar> {
    let t = y - Scalar::one();
    if t.is_zero() {
        return Err(Error::InvalidArgument("the curve parameter t = y - 1 must be nonzero".into()));
    }
    Ok(curve.eval(&t)? / pow(&t, g.vertex_count()))
}

/// Which algorithm produced a point value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    /// Closed form on `(x - 1)(y - 1) = 1`.
    Hyperbola1,
    /// Weighted forest count on `y = 1`.
    Forest,
    /// Even-subgraph DP on `(x - 1)(y - 1) = 2`.
    Ising,
    /// Coloring DP at `(1 - q, 0)`.
    Chromatic,
    /// Curve interpolation through the coloring DP on `(x - 1)(y - 1) = q`.
    ChromaticCurve,
    /// General counting DP.
    General,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Hyperbola1 => "hyperbola-1",
            Self::Forest => "forest",
            Self::Ising => "ising",
            Self::Chromatic => "coloring",
            Self::ChromaticCurve => "coloring-curve",
            Self::General => "general",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub value: Scalar,
    pub route: Route,
}

/// `T(G; x, y)` by the cheapest applicable route.
pub fn evaluate_point(g: &Multigraph, decomps: &Decompositions, x: &Scalar, y: &Scalar) -> Result<Evaluation> {
    let one = Scalar::one();
    let alpha = (x - &one) * (y - &one);
    let done = |value, route| Ok(Evaluation { value, route });
    if alpha.is_one() {
        // Every edge set contributes (y - 1)^(|A| + k(E) - |V|).
        let value = pow(y, g.edge_count()) / pow(&(y - &one), g.vertex_count() - g.component_count());
        return done(value, Route::Hyperbola1);
    }
    let nd = decomps.nice(g)?;
    if y.is_one() {
        let rank = g.vertex_count() - g.component_count();
        let value = if x.is_one() {
            curve_y1_restriction(g, &nd)?.eval(x)?
        } else {
            let xm = x - &one;
            pow(&xm, rank) * count_forests(g, &nd, &xm.recip())?
        };
        return done(value, Route::Forest);
    }
    if alpha == int(2) && y != &-one.clone() {
        return done(tutte_on_h2(g, &nd, x, y)?, Route::Ising);
    }
    if alpha.is_integer() && alpha >= int(3) {
        if let Some(q) = alpha.to_integer().to_usize() {
            if x == &(int(1) - &alpha) && y.is_zero() {
                match tutte_chromatic_point(g, &nd, q) {
                    Ok(v) => return done(v, Route::Chromatic),
                    Err(Error::ResourceGuard(_)) => {}
                    Err(e) => return Err(e),
                }
            } else {
                let eval = chromatic_evaluator(q);
                match curve_restriction(g, decomps, &(int(1) - &alpha), &Scalar::zero(), &eval) {
                    Ok(curve) => return done(eval_curve(&curve, g, y)?, Route::ChromaticCurve),
                    Err(Error::ResourceGuard(_)) => {}
                    Err(e) => return Err(e),
                }
            }
        }
    }
    done(general_dp(g, &nd)?.eval(x, y), Route::General)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counts::EdgeSetCounts;
    use crate::graph::TreeDecomposition;
    use crate::oracle::{brute_counts, brute_tutte};
    use crate::scalar::ratio;

    fn k3() -> (Multigraph, Decompositions) {
        let g = Multigraph::complete(3);
        (g.clone(), Decompositions::trivial(&g))
    }

    fn oracle_curve(g: &Multigraph, alpha: &Scalar) -> UniPoly {
        let c: EdgeSetCounts = brute_counts(g).unwrap();
        c.h_alpha_curve(alpha)
    }

    #[test]
    fn ising_curve_on_triangle() {
        let (g, d) = k3();
        let eval = ising_evaluator(int(3), int(2));
        let curve = curve_restriction(&g, &d, &int(3), &int(2), &eval).unwrap();
        assert_eq!(curve, oracle_curve(&g, &int(2)));
        assert_eq!(curve.eval(&int(1)).unwrap(), int(14));
    }

    #[test]
    fn chromatic_curve_on_triangle() {
        let (g, d) = k3();
        let eval = chromatic_evaluator(3);
        let curve = curve_restriction(&g, &d, &int(-2), &int(0), &eval).unwrap();
        assert_eq!(curve, oracle_curve(&g, &int(3)));
        assert_eq!(eval_curve(&curve, &g, &int(2)).unwrap(), brute_tutte(&g, &int(4), &int(2)).unwrap());
        assert_eq!(eval_curve(&curve, &g, &int(4)).unwrap(), brute_tutte(&g, &int(2), &int(4)).unwrap());
    }

    #[test]
    fn tree_curve_closed_form() {
        let g = Multigraph::star(3);
        let d = Decompositions::trivial(&g);
        let alpha = int(5);
        let eval = general_evaluator(int(6), int(2));
        let curve = curve_restriction(&g, &d, &int(6), &int(2), &eval).unwrap();
        // t^4 (alpha/t + 1)^3 = t (alpha + t)^3
        let expected = &UniPoly::monomial(int(1), 1) * &UniPoly::from_coeffs(vec![alpha, int(1)]).pow(3);
        assert_eq!(curve, expected);
    }

    #[test]
    fn unit_magnitude_points_use_gadgets() {
        let (g, d) = k3();
        for (x, y) in [(int(-1), int(3)), (int(0), int(3)), (int(1), int(3))] {
            let alpha = (&x - int(1)) * (&y - int(1));
            let eval = general_evaluator(x.clone(), y.clone());
            let curve = curve_restriction(&g, &d, &x, &y, &eval).unwrap();
            assert_eq!(curve, oracle_curve(&g, &alpha), "({x}, {y})");
        }
    }

    #[test]
    fn special_points_are_fixed_by_every_gadget() {
        let (g, d) = k3();
        for (x, y) in [(int(-1), int(0)), (int(0), int(-1))] {
            let eval = general_evaluator(x.clone(), y.clone());
            let err = curve_restriction(&g, &d, &x, &y, &eval).unwrap_err();
            assert!(matches!(err, Error::InapplicablePoint { .. }), "{err:?}");
        }
    }

    #[test]
    fn dispatch_routes() {
        let k4 = Multigraph::complete(4);
        let d4 = Decompositions::new(TreeDecomposition::new(vec![vec![0, 1, 2, 3]], vec![]));
        let e = evaluate_point(&k4, &d4, &int(2), &int(1)).unwrap();
        assert_eq!((e.value, e.route), (int(38), Route::Forest));
        let (g, d) = k3();
        let e = evaluate_point(&g, &d, &int(3), &int(2)).unwrap();
        assert_eq!((e.value, e.route), (int(14), Route::Ising));
        let e = evaluate_point(&g, &d, &int(-2), &int(0)).unwrap();
        assert_eq!((e.value, e.route), (int(2), Route::Chromatic));
        let e = evaluate_point(&g, &d, &int(4), &int(2)).unwrap();
        assert_eq!((e.value, e.route), (brute_tutte(&g, &int(4), &int(2)).unwrap(), Route::ChromaticCurve));
        let e = evaluate_point(&g, &d, &int(2), &int(2)).unwrap();
        assert_eq!((e.value, e.route), (int(8), Route::Hyperbola1));
        let e = evaluate_point(&g, &d, &int(1), &int(1)).unwrap();
        assert_eq!((e.value, e.route), (int(3), Route::Forest));
        let e = evaluate_point(&g, &d, &ratio(1, 2), &int(-2)).unwrap();
        assert_eq!((e.value, e.route), (brute_tutte(&g, &ratio(1, 2), &int(-2)).unwrap(), Route::General));
    }
}
