//! Canonical class of a plumbed resolution and the invariant
//! `chi(resolution) + K^2`.
//!
//! `K = sum k_i E_i` is the unique rational cycle with
//! `2 g_i - 2 = E_i^2 + K . E_i` for every vertex, i.e. `A k = d` with
//! `d_i = 2 g_i - 2 - w_i`.

use alloc::boxed::Box;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{solve, LinearError, Rational};
use crate::plumbing::{intersection_matrix, IntersectionMatrix, PlumbingGraph};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CanonicalError {
    #[error("intersection matrix is singular")]
    SingularMatrix,
    #[error("adjunction residual is non-zero at vertex {0}")]
    ResidualNonZero(usize),
    #[error("K^T A K = {quadratic} but K . d = {linear}")]
    QuadraticMismatch {
        quadratic: Box<Rational>,
        linear: Box<Rational>,
    },
    #[error("coefficient vector has length {got}, graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalClassReport {
    pub coefficients: Vec<Rational>,
    pub is_integral: bool,
    pub chi_resolution: BigInt,
    pub k_squared: Rational,
    pub chi_plus_k2: Rational,
}

/// `d_i = 2 g_i - 2 - w_i`.
pub fn adjunction_rhs(graph: &PlumbingGraph) -> Vec<Rational> {
    let two = BigInt::from(2);
    graph
        .vertices()
        .iter()
        .map(|v| Rational::from_integer(&two * &v.genus - &two - &v.weight))
        .collect()
}

pub fn canonical_class(graph: &PlumbingGraph) -> Result<Vec<Rational>, CanonicalError> {
    canonical_class_with(&intersection_matrix(graph), graph)
}

fn canonical_class_with(
    matrix: &IntersectionMatrix,
    graph: &PlumbingGraph,
) -> Result<Vec<Rational>, CanonicalError> {
    let rhs = adjunction_rhs(graph);
    let k = solve(matrix.entries(), &rhs).map_err(|e| match e {
        LinearError::Singular | LinearError::NotSquare | LinearError::DimensionMismatch { .. } => {
            CanonicalError::SingularMatrix
        }
    })?;
    for (i, row) in matrix.entries().iter().enumerate() {
        let lhs: Rational = row
            .iter()
            .zip(&k)
            .filter(|(a, _)| !a.is_zero())
            .map(|(a, x)| Rational::from_integer(a.clone()) * x)
            .sum();
        if lhs != rhs[i] {
            return Err(CanonicalError::ResidualNonZero(i));
        }
    }
    Ok(k)
}

pub fn is_numerically_gorenstein(coefficients: &[Rational]) -> bool {
    coefficients.iter().all(Rational::is_integer)
}

/// `sum chi(E_i) - sum_{i<j} E_i . E_j` with `chi(E_i) = 2 - 2 g_i`.
pub fn chi_resolution(graph: &PlumbingGraph) -> BigInt {
    let two = BigInt::from(2);
    let euler: BigInt = graph
        .vertices()
        .iter()
        .map(|v| &two - &two * &v.genus)
        .sum();
    euler - BigInt::from(graph.edges().len())
}

/// `K^T A K`, cross-checked against `K . d`.
pub fn k_squared(
    coefficients: &[Rational],
    matrix: &IntersectionMatrix,
    graph: &PlumbingGraph,
) -> Result<Rational, CanonicalError> {
    if coefficients.len() != matrix.size() || matrix.size() != graph.len() {
        return Err(CanonicalError::LengthMismatch {
            expected: graph.len(),
            got: coefficients.len(),
        });
    }
    let quadratic = matrix.bilinear(coefficients, coefficients);
    let linear: Rational = coefficients
        .iter()
        .zip(adjunction_rhs(graph))
        .map(|(k, d)| k * d)
        .sum();
    if quadratic != linear {
        return Err(CanonicalError::QuadraticMismatch {
            quadratic: Box::new(quadratic),
            linear: Box::new(linear),
        });
    }
    Ok(quadratic)
}

pub fn chi_plus_k2(graph: &PlumbingGraph) -> Result<Rational, CanonicalError> {
    Ok(canonical_report(graph)?.chi_plus_k2)
}

pub fn canonical_report(graph: &PlumbingGraph) -> Result<CanonicalClassReport, CanonicalError> {
    let matrix = intersection_matrix(graph);
    let coefficients = canonical_class_with(&matrix, graph)?;
    let k2 = k_squared(&coefficients, &matrix, graph)?;
    let chi = chi_resolution(graph);
    let chi_plus_k2 = Rational::from_integer(chi.clone()) + &k2;
    let is_integral = is_numerically_gorenstein(&coefficients);
    debug_assert!(!is_integral || (k2.is_integer() && chi_plus_k2.is_integer()));
    Ok(CanonicalClassReport {
        coefficients,
        is_integral,
        chi_resolution: chi,
        k_squared: k2,
        chi_plus_k2,
    })
}

/// First coefficient with a non-trivial denominator, if any.
pub fn non_integral_witness(coefficients: &[Rational]) -> Option<(usize, &Rational)> {
    coefficients
        .iter()
        .enumerate()
        .find(|(_, k)| !k.denom().is_one())
}
