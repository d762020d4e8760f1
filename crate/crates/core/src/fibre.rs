//! Embedded resolution of the plane curve `xy(x^p + y^q)`, the Euler
//! characteristic of the Milnor fibre of `f = conj(xy)(x^p + y^q)`, and the
//! mod-12 smoothing test for `F = f + z^r`.
//!
//! The resolution graph is the minimal regular subdivision of the positive
//! quadrant through the ray `(q, p)`, which is what the Euclidean blow-up
//! sequence of the cusp produces. A divisor with ray `(u, v)` has
//! `ord x = u`, `ord y = v`. The boundary rays `(1, 0)` and `(0, 1)` are the
//! strict transforms of `{x = 0}` and `{y = 0}`, and the rupture ray
//! `(q, p)` carries the strict transform of the cusp. Multiplicities are
//! then solved from `A m = -(arrow incidence)`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::canonical::{canonical_report, CanonicalClassReport};
use crate::error::Error;
use crate::exact::{solve, Rational};
use crate::germ::GermParams;
use crate::plumbing::star_plumbing;
use crate::seifert::seifert_invariants;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FibreError {
    #[error("curve exponents must be coprime and at least 2, not (2, 2) (got p={p}, q={q})")]
    InvalidParams { p: BigInt, q: BigInt },
    #[error("multiplicity {value} at vertex {vertex} is not positive")]
    NonPositiveMultiplicity { vertex: usize, value: Rational },
    #[error("multiplicity {value} at vertex {vertex} is not an integer")]
    NonIntegralMultiplicity { vertex: usize, value: Rational },
    #[error("curve resolution graph is singular")]
    SingularGraph,
    #[error("rupture multiplicities ({mult_h}, {mult_g}) differ from (pq, p + q)")]
    UnsupportedParams { mult_h: BigInt, mult_g: BigInt },
}

/// Branches of `xy(x^p + y^q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Branch {
    /// `{y = 0}`.
    XAxis,
    /// `{x = 0}`.
    YAxis,
    /// `{x^p + y^q = 0}`.
    Cusp,
}

impl Branch {
    pub const ALL: [Branch; 3] = [Branch::XAxis, Branch::YAxis, Branch::Cusp];
    pub const AXES: [Branch; 2] = [Branch::XAxis, Branch::YAxis];

    pub fn name(self) -> &'static str {
        match self {
            Branch::XAxis => "x-axis",
            Branch::YAxis => "y-axis",
            Branch::Cusp => "cusp",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CurveVertex {
    pub id: usize,
    pub weight: BigInt,
    /// `(ord x, ord y)` along the divisor.
    pub valuation: [BigInt; 2],
}

/// Undecorated dual graph: vertex 0 is the rupture vertex, then the chain
/// towards the `{x = 0}` arrow, then the chain towards the `{y = 0}` arrow,
/// each listed outward from the rupture vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CurveResolutionShape {
    pub vertices: Vec<CurveVertex>,
    pub edges: Vec<(usize, usize)>,
    pub arrows: Vec<(usize, Branch)>,
    pub rupture: usize,
}

impl CurveResolutionShape {
    pub fn valence(&self, id: usize) -> usize {
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a == id || b == id)
            .count();
        let arrows = self.arrows.iter().filter(|&&(v, _)| v == id).count();
        edges + arrows
    }

    fn matrix(&self) -> Vec<Vec<BigInt>> {
        let n = self.vertices.len();
        let mut m = vec![vec![BigInt::zero(); n]; n];
        for v in &self.vertices {
            m[v.id][v.id] = v.weight.clone();
        }
        for &(a, b) in &self.edges {
            m[a][b] += BigInt::one();
            m[b][a] += BigInt::one();
        }
        m
    }

    pub fn arrow_counts(&self, branches: &[Branch]) -> Vec<BigInt> {
        let mut counts = vec![BigInt::zero(); self.vertices.len()];
        for &(v, b) in &self.arrows {
            if branches.contains(&b) {
                counts[v] += BigInt::one();
            }
        }
        counts
    }
}

/// Resolution graph decorated with multiplicities of `h = x^p + y^q`, of
/// `g = xy`, and their difference.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DecoratedCurveGraph {
    pub shape: CurveResolutionShape,
    pub mult_h: Vec<BigInt>,
    pub mult_g: Vec<BigInt>,
    pub net: Vec<BigInt>,
}

fn det(u: &[BigInt; 2], w: &[BigInt; 2]) -> BigInt {
    &u[0] * &w[1] - &u[1] * &w[0]
}

/// Rays strictly inside the cone `<u, w>` (`det(u, w) > 0`, both primitive)
/// of its minimal regular subdivision, ordered starting next to `u`.
fn regular_rays(u: &[BigInt; 2], w: &[BigInt; 2]) -> Vec<[BigInt; 2]> {
    let mut rays = Vec::new();
    let mut u = u.clone();
    let mut d = det(&u, w);
    debug_assert!(d.is_positive());
    while !d.is_one() {
        // (u, u_perp) is a lattice basis and w = c u + d u_perp.
        let egcd = u[0].extended_gcd(&u[1]);
        debug_assert!(egcd.gcd.is_one());
        let u_perp = [-egcd.y.clone(), egcd.x.clone()];
        let c = det(w, &u_perp);
        let j = (-c).mod_floor(&d);
        let v = [
            (&w[0] + &j * &u[0]) / &d,
            (&w[1] + &j * &u[1]) / &d,
        ];
        debug_assert!(det(&u, &v).is_one());
        rays.push(v.clone());
        u = v;
        d = j;
    }
    rays
}

fn check_curve_exponents(p: &BigInt, q: &BigInt) -> Result<(), FibreError> {
    let two = BigInt::from(2);
    if *p < two || *q < two || (*p == two && *q == two) || !p.gcd(q).is_one() {
        return Err(FibreError::InvalidParams {
            p: p.clone(),
            q: q.clone(),
        });
    }
    Ok(())
}

/// Shape of the minimal embedded resolution of `xy(x^p + y^q)`.
pub fn curve_resolution_shape(p: &BigInt, q: &BigInt) -> Result<CurveResolutionShape, FibreError> {
    check_curve_exponents(p, q)?;
    let x_zero = [BigInt::one(), BigInt::zero()];
    let y_zero = [BigInt::zero(), BigInt::one()];
    let rupture = [q.clone(), p.clone()];

    // Sequence from the {x = 0} arrow through the rupture to the {y = 0} arrow.
    let toward_x_zero = regular_rays(&x_zero, &rupture);
    let toward_y_zero = regular_rays(&rupture, &y_zero);
    let mut rays = vec![x_zero.clone()];
    rays.extend(toward_x_zero.iter().cloned());
    let rupture_pos = rays.len();
    rays.push(rupture.clone());
    rays.extend(toward_y_zero.iter().cloned());
    rays.push(y_zero);

    // Vertex ids: rupture, then outward on each side.
    let mut id_of = vec![usize::MAX; rays.len()];
    id_of[rupture_pos] = 0;
    let mut next = 1;
    let last = rays.len() - 1;
    let (before, after) = id_of.split_at_mut(rupture_pos);
    for slot in before[1..].iter_mut().rev().chain(&mut after[1..last - rupture_pos]) {
        *slot = next;
        next += 1;
    }

    let mut vertices: Vec<CurveVertex> = Vec::with_capacity(next);
    for pos in 1..rays.len() - 1 {
        let sum = [&rays[pos - 1][0] + &rays[pos + 1][0], &rays[pos - 1][1] + &rays[pos + 1][1]];
        let self_intersection = if rays[pos][0].is_zero() {
            &sum[1] / &rays[pos][1]
        } else {
            &sum[0] / &rays[pos][0]
        };
        vertices.push(CurveVertex {
            id: id_of[pos],
            weight: -self_intersection,
            valuation: rays[pos].clone(),
        });
    }
    vertices.sort_by_key(|v| v.id);

    let edges = (1..rays.len() - 2)
        .map(|pos| {
            let (a, b) = (id_of[pos], id_of[pos + 1]);
            (a.min(b), a.max(b))
        })
        .collect();
    let arrows = vec![
        (id_of[rays.len() - 2], Branch::XAxis),
        (id_of[1], Branch::YAxis),
        (0, Branch::Cusp),
    ];
    Ok(CurveResolutionShape {
        vertices,
        edges,
        arrows,
        rupture: 0,
    })
}

/// Unique integer solution of `A m = -(arrows of the given branches)`,
/// required to be positive everywhere.
pub fn solve_multiplicities(
    shape: &CurveResolutionShape,
    branches: &[Branch],
) -> Result<Vec<BigInt>, FibreError> {
    let rhs: Vec<Rational> = shape
        .arrow_counts(branches)
        .into_iter()
        .map(|c| Rational::from_integer(-c))
        .collect();
    let solution = solve(&shape.matrix(), &rhs).map_err(|_| FibreError::SingularGraph)?;
    solution
        .into_iter()
        .enumerate()
        .map(|(vertex, value)| {
            if !value.is_positive() {
                Err(FibreError::NonPositiveMultiplicity { vertex, value })
            } else {
                value
                    .to_integer()
                    .ok_or(FibreError::NonIntegralMultiplicity { vertex, value })
            }
        })
        .collect()
}

pub fn curve_resolution_graph(p: &BigInt, q: &BigInt) -> Result<DecoratedCurveGraph, FibreError> {
    let shape = curve_resolution_shape(p, q)?;
    let mult_h = solve_multiplicities(&shape, &[Branch::Cusp])?;
    let mult_g = solve_multiplicities(&shape, &Branch::AXES)?;
    let (h, g) = (&mult_h[shape.rupture], &mult_g[shape.rupture]);
    if *h != p * q || *g != p + q {
        return Err(FibreError::UnsupportedParams {
            mult_h: h.clone(),
            mult_g: g.clone(),
        });
    }
    let net = mult_h.iter().zip(&mult_g).map(|(h, g)| h - g).collect();
    Ok(DecoratedCurveGraph {
        shape,
        mult_h,
        mult_g,
        net,
    })
}

/// `sum_i net_i (2 - valence_i)`, arrowheads counted in the valence.
pub fn chi_fibre_plane(graph: &DecoratedCurveGraph) -> BigInt {
    graph
        .net
        .iter()
        .enumerate()
        .map(|(i, m)| m * (BigInt::from(2) - BigInt::from(graph.shape.valence(i))))
        .sum()
}

/// Euler characteristic of a join: `a + b - ab`.
pub fn join_chi(chi_a: &BigInt, chi_b: &BigInt) -> BigInt {
    chi_a + chi_b - chi_a * chi_b
}

/// How `chi` of the Milnor fibre of `F` is derived from that of `f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChiConvention {
    /// `(r - 1) chi(F_f)`.
    Literal,
    /// `chi(F_f * {r points})`.
    Join,
}

impl ChiConvention {
    pub fn name(self) -> &'static str {
        match self {
            ChiConvention::Literal => "literal",
            ChiConvention::Join => "join",
        }
    }
}

fn chi_from_plane(chi_f: &BigInt, r: &BigInt, convention: ChiConvention) -> BigInt {
    match convention {
        ChiConvention::Literal => (r - BigInt::one()) * chi_f,
        ChiConvention::Join => join_chi(chi_f, r),
    }
}

pub fn chi_milnor_f(params: &GermParams, convention: ChiConvention) -> Result<BigInt, FibreError> {
    let curve = curve_resolution_graph(params.p(), params.q())?;
    Ok(chi_from_plane(&chi_fibre_plane(&curve), params.r(), convention))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ObstructionReport {
    pub chi_fibre_f: BigInt,
    pub chi_f_literal: BigInt,
    pub chi_f_join: BigInt,
    /// `chi + K^2` of the link; `None` when `K` is not integral.
    pub chi_plus_k2: Option<BigInt>,
    pub residue_literal: u8,
    pub residue_join: u8,
    pub target_residue: Option<u8>,
    /// Neither convention matches the target mod 12. `None` when `K` is not
    /// integral and the test does not apply.
    pub obstructed: Option<bool>,
    /// `K` is integral, so a Gorenstein germ with this link is not ruled out.
    pub gorenstein_possible: bool,
    /// `p = 2`, the range with worked decorated graphs; other `p` use the
    /// same construction, checked only by its internal consistency.
    pub validated_range: bool,
}

fn residue12(value: &BigInt) -> u8 {
    let r = value.mod_floor(&BigInt::from(12));
    u8::try_from(&r).expect("residue in 0..12")
}

pub fn smoothing_obstruction(params: &GermParams) -> Result<ObstructionReport, Error> {
    let data = seifert_invariants(params)?;
    let graph = star_plumbing(&data)?;
    let canonical = canonical_report(&graph)?;
    Ok(obstruction_with_canonical(params, &canonical)?)
}

/// As [`smoothing_obstruction`], reusing a canonical-class report already
/// computed for the plumbing graph of `params`.
pub fn obstruction_with_canonical(
    params: &GermParams,
    canonical: &CanonicalClassReport,
) -> Result<ObstructionReport, FibreError> {
    let curve = curve_resolution_graph(params.p(), params.q())?;
    let chi_f = chi_fibre_plane(&curve);
    let chi_f_literal = chi_from_plane(&chi_f, params.r(), ChiConvention::Literal);
    let chi_f_join = chi_from_plane(&chi_f, params.r(), ChiConvention::Join);
    let residue_literal = residue12(&chi_f_literal);
    let residue_join = residue12(&chi_f_join);

    let chi_plus_k2 = if canonical.is_integral {
        canonical.chi_plus_k2.to_integer()
    } else {
        None
    };
    let target_residue = chi_plus_k2.as_ref().map(residue12);
    let obstructed = target_residue.map(|t| residue_literal != t && residue_join != t);
    Ok(ObstructionReport {
        chi_fibre_f: chi_f,
        chi_f_literal,
        chi_f_join,
        chi_plus_k2,
        residue_literal,
        residue_join,
        target_residue,
        obstructed,
        gorenstein_possible: canonical.is_integral,
        validated_range: *params.p() == BigInt::from(2),
    })
}

/// Graphviz rendering with weights, `(net)` multiplicities and one
/// point-shaped node per arrowhead.
pub fn curve_to_dot(graph: &DecoratedCurveGraph) -> String {
    let mut out = String::from("graph curve_resolution {\n  node [shape=circle];\n");
    for v in &graph.shape.vertices {
        let _ = writeln!(
            out,
            "  v{} [label=\"{} ({})\"];",
            v.id, v.weight, graph.net[v.id]
        );
    }
    for &(a, b) in &graph.shape.edges {
        let _ = writeln!(out, "  v{a} -- v{b};");
    }
    for (i, &(v, branch)) in graph.shape.arrows.iter().enumerate() {
        let net = if branch == Branch::Cusp { 1 } else { -1 };
        let name = format!("a{i}");
        let _ = writeln!(
            out,
            "  {name} [shape=none, label=\"{} ({net})\"];\n  v{v} -- {name} [dir=forward];",
            branch.name()
        );
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::germ::validate;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    fn curve(p: i64, q: i64) -> DecoratedCurveGraph {
        curve_resolution_graph(&big(p), &big(q)).unwrap()
    }

    fn weights(g: &DecoratedCurveGraph) -> Vec<i64> {
        g.shape
            .vertices
            .iter()
            .map(|v| i64::try_from(&v.weight).unwrap())
            .collect()
    }

    #[test]
    fn cusp_2_3() {
        let g = curve(2, 3);
        assert_eq!(weights(&g), [-1, -2, -3]);
        assert_eq!(g.shape.edges, [(0, 1), (0, 2)]);
        assert_eq!(
            g.shape.arrows,
            [(2, Branch::XAxis), (1, Branch::YAxis), (0, Branch::Cusp)]
        );
        assert_eq!(ints(&g.net), [1, 0, 0]);
        assert_eq!(ints(&g.mult_h), [6, 3, 2]);
        assert_eq!(ints(&g.mult_g), [5, 3, 2]);
    }

    #[test]
    fn cusp_2_5() {
        let g = curve(2, 5);
        assert_eq!(weights(&g), [-1, -2, -3, -2]);
        assert_eq!(g.shape.edges, [(0, 1), (0, 2), (2, 3)]);
        assert_eq!(ints(&g.net), [3, 1, 1, 0]);
        assert_eq!(chi_fibre_plane(&g), big(-3));
    }

    #[test]
    fn cusp_2_7() {
        let g = curve(2, 7);
        assert_eq!(g.net[0], big(5));
        assert_eq!((g.mult_h[0].clone(), g.mult_g[0].clone()), (big(14), big(9)));
        assert_eq!(chi_fibre_plane(&g), big(-5));
    }

    #[test]
    fn rupture_multiplicities_via_solver() {
        let shape = curve_resolution_shape(&big(2), &big(3)).unwrap();
        assert_eq!(solve_multiplicities(&shape, &[Branch::Cusp]).unwrap()[0], big(6));
        assert_eq!(solve_multiplicities(&shape, &Branch::AXES).unwrap()[0], big(5));
    }

    #[test]
    fn wrong_shape_is_detected() {
        let mut shape = curve_resolution_shape(&big(2), &big(5)).unwrap();
        shape.vertices[2].weight = big(-4);
        assert!(matches!(
            solve_multiplicities(&shape, &[Branch::Cusp]),
            Err(FibreError::NonIntegralMultiplicity { .. })
        ));
        // A positive rupture weight makes every multiplicity negative.
        let mut shape = curve_resolution_shape(&big(2), &big(3)).unwrap();
        shape.vertices[0].weight = big(1);
        assert!(matches!(
            solve_multiplicities(&shape, &[Branch::Cusp]),
            Err(FibreError::NonPositiveMultiplicity { vertex: 0, .. })
        ));
    }

    #[test]
    fn multiplicities_match_valuations() {
        for p in 2..=13i64 {
            for q in 2..=40i64 {
                let Ok(g) = curve_resolution_graph(&big(p), &big(q)) else {
                    assert!(p == q || num_integer::gcd(p, q) != 1);
                    continue;
                };
                for v in &g.shape.vertices {
                    let [u, w] = &v.valuation;
                    assert_eq!(g.mult_h[v.id], (big(p) * u).min(big(q) * w));
                    assert_eq!(g.mult_g[v.id], u + w);
                    assert!(v.weight <= big(-1));
                }
                assert_eq!(chi_fibre_plane(&g), big(p + q - p * q));
                assert_eq!(g.shape.valence(g.shape.rupture), 3);
            }
        }
    }

    #[test]
    fn invalid_curve_params() {
        for (p, q) in [(2, 2), (2, 4), (1, 3), (3, 1)] {
            assert!(matches!(
                curve_resolution_graph(&big(p), &big(q)),
                Err(FibreError::InvalidParams { .. })
            ));
        }
    }

    #[test]
    fn joins() {
        for k in 0..6i64 {
            for r in 1..6i64 {
                assert_eq!(join_chi(&big(1 - k), &big(r)), big(1 + k * (r - 1)));
            }
        }
        assert_eq!(join_chi(&big(0), &big(17)), big(17));
        assert_eq!(join_chi(&big(-3), &big(2)), big(5));
        assert_eq!(join_chi(&big(-3), &big(1)), big(1));
        assert_eq!(join_chi(&big(4), &big(-2)), join_chi(&big(-2), &big(4)));
    }

    #[test]
    fn milnor_fibre_conventions() {
        let params = validate(2, 5, 2).unwrap();
        assert_eq!(chi_milnor_f(&params, ChiConvention::Literal).unwrap(), big(-3));
        assert_eq!(chi_milnor_f(&params, ChiConvention::Join).unwrap(), big(5));
        let params = validate(2, 3, 2).unwrap();
        assert_eq!(chi_milnor_f(&params, ChiConvention::Literal).unwrap(), big(-1));
    }

    #[test]
    fn obstruction_examples() {
        // a = 1: q = 5, residue 9 against 7.
        let report = smoothing_obstruction(&validate(2, 5, 2).unwrap()).unwrap();
        assert_eq!(report.residue_literal, 9);
        assert_eq!(report.chi_plus_k2, Some(big(7)));
        assert_eq!(report.obstructed, Some(true));
        // a = 2: q = 7, residue 7 against 1.
        let report = smoothing_obstruction(&validate(2, 7, 2).unwrap()).unwrap();
        assert_eq!(report.residue_literal, 7);
        assert_eq!(report.target_residue, Some(1));
        assert_eq!(report.obstructed, Some(true));

        let report = smoothing_obstruction(&validate(2, 3, 5).unwrap()).unwrap();
        assert!(!report.gorenstein_possible);
        assert_eq!(report.obstructed, None);
        assert_eq!(report.chi_plus_k2, None);
    }

    #[test]
    fn dot_has_arrows() {
        let dot = curve_to_dot(&curve(2, 5));
        assert_eq!(dot.matches("dir=forward").count(), 3);
        assert!(dot.contains("v0 [label=\"-1 (3)\"]"));
    }
}
