//! Parameter validation and the polar weighted homogeneous structure of
//! `F = conj(xy)(x^p + y^q) + z^r`.

pub mod scan;

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub use scan::{critical_point_scan, ScanAccumulator, ScanConfig, ScanReport};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GermError {
    #[error("p, q and r must all be at least 2 (got p={p}, q={q}, r={r})")]
    ParameterTooSmall { p: BigInt, q: BigInt, r: BigInt },
    #[error("(p, q) = (2, 2) gives a non-isolated singularity")]
    NonIsolated,
    #[error("p={p} and q={q} are not coprime")]
    NotCoprime { p: BigInt, q: BigInt },
    #[error("monomial {index} has degrees {degrees}")]
    NotPolarHomogeneous {
        index: usize,
        degrees: Box<DegreeMismatch>,
    },
    #[error("empty monomial list")]
    NoMonomials,
}

/// Radial and polar degree of one monomial against the common ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeMismatch {
    pub radial: BigInt,
    pub polar: BigInt,
    pub expected_radial: BigInt,
    pub expected_polar: BigInt,
}

impl core::fmt::Display for DegreeMismatch {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "(radial {}, polar {}), expected ({}, {})",
            self.radial, self.polar, self.expected_radial, self.expected_polar
        )
    }
}

/// A validated triple `(p, q, r)` with `delta = gcd(r, pq - p - q)` and the
/// reduced slice rotation `w = (pq - p - q) / delta`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GermParams {
    p: BigInt,
    q: BigInt,
    r: BigInt,
    delta: BigInt,
    w: BigInt,
}

impl GermParams {
    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn r(&self) -> &BigInt {
        &self.r
    }

    pub fn delta(&self) -> &BigInt {
        &self.delta
    }

    pub fn w(&self) -> &BigInt {
        &self.w
    }

    /// `pq - p - q`.
    pub fn rotation(&self) -> BigInt {
        &self.p * &self.q - &self.p - &self.q
    }
}

/// Accepts `p, q, r >= 2` with `gcd(p, q) = 1`, `(p, q) != (2, 2)`.
pub fn validate(
    p: impl Into<BigInt>,
    q: impl Into<BigInt>,
    r: impl Into<BigInt>,
) -> Result<GermParams, GermError> {
    let (p, q, r) = (p.into(), q.into(), r.into());
    let two = BigInt::from(2);
    if p < two || q < two || r < two {
        return Err(GermError::ParameterTooSmall { p, q, r });
    }
    if p == two && q == two {
        return Err(GermError::NonIsolated);
    }
    if !p.gcd(&q).is_one() {
        return Err(GermError::NotCoprime { p, q });
    }
    let rotation = &p * &q - &p - &q;
    let delta = r.gcd(&rotation);
    let w = &rotation / &delta;
    Ok(GermParams { p, q, r, delta, w })
}

/// `coefficient * z^mu * conj(z)^nu` in the variables `(x, y, z)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub coefficient: BigInt,
    pub mu: [BigInt; 3],
    pub nu: [BigInt; 3],
}

impl Monomial {
    pub fn new(coefficient: impl Into<BigInt>, mu: [u64; 3], nu: [u64; 3]) -> Self {
        Monomial {
            coefficient: coefficient.into(),
            mu: mu.map(BigInt::from),
            nu: nu.map(BigInt::from),
        }
    }

    fn radial_degree(&self, weights: &[BigInt; 3]) -> BigInt {
        (0..3)
            .map(|i| (&self.mu[i] + &self.nu[i]) * &weights[i])
            .sum()
    }

    fn polar_degree(&self, weights: &[BigInt; 3]) -> BigInt {
        (0..3)
            .map(|i| (&self.mu[i] - &self.nu[i]) * &weights[i])
            .sum()
    }
}

/// The three monomials `x^p conj(x y)`, `y^q conj(x y)`, `z^r`.
pub fn monomials_of_f(params: &GermParams) -> Vec<Monomial> {
    let zero = BigInt::zero;
    let one = BigInt::one;
    vec![
        Monomial {
            coefficient: one(),
            mu: [params.p.clone(), zero(), zero()],
            nu: [one(), one(), zero()],
        },
        Monomial {
            coefficient: one(),
            mu: [zero(), params.q.clone(), zero()],
            nu: [one(), one(), zero()],
        },
        Monomial {
            coefficient: one(),
            mu: [zero(), zero(), params.r.clone()],
            nu: [zero(), zero(), zero()],
        },
    ]
}

/// Radial weights `(p_1, p_2, p_3)` and polar weights `(u_1, u_2, u_3)`,
/// each with gcd 1, and the degrees `a` and `c` of the `R+ x S^1` action
/// `(t, l) . z_i = t^{p_i} l^{u_i} z_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolarWeightSystem {
    pub radial_weights: [BigInt; 3],
    pub polar_weights: [BigInt; 3],
    pub radial_degree: BigInt,
    pub polar_degree: BigInt,
}

fn gcd3(v: &[BigInt; 3]) -> BigInt {
    v[0].gcd(&v[1]).gcd(&v[2])
}

pub fn polar_weights(params: &GermParams) -> PolarWeightSystem {
    let GermParams { p, q, r, delta, w } = params;
    let radial = [q * r, p * r, p * q + p + q];
    let radial_degree = r * (p * q + p + q);
    let polar = [r * q / delta, r * p / delta, w.clone()];
    let polar_degree = r * w;

    let g = gcd3(&radial);
    let radial = radial.map(|x| x / &g);
    let radial_degree = radial_degree / &g;
    let h = gcd3(&polar);
    let polar = polar.map(|x| x / &h);
    let polar_degree = polar_degree / &h;

    let system = PolarWeightSystem {
        radial_weights: radial,
        polar_weights: polar,
        radial_degree,
        polar_degree,
    };
    debug_assert_eq!(
        verify_polar_homogeneity(&monomials_of_f(params), &system)
            .expect("F is polar weighted homogeneous"),
        (system.radial_degree.clone(), system.polar_degree.clone())
    );
    system
}

/// Common `(radial, polar)` degree of every monomial, or the first monomial
/// that disagrees with the first one.
pub fn verify_polar_homogeneity(
    monomials: &[Monomial],
    weights: &PolarWeightSystem,
) -> Result<(BigInt, BigInt), GermError> {
    let first = monomials.first().ok_or(GermError::NoMonomials)?;
    let a = first.radial_degree(&weights.radial_weights);
    let c = first.polar_degree(&weights.polar_weights);
    for (index, m) in monomials.iter().enumerate().skip(1) {
        let radial = m.radial_degree(&weights.radial_weights);
        let polar = m.polar_degree(&weights.polar_weights);
        if radial != a || polar != c {
            return Err(GermError::NotPolarHomogeneous {
                index,
                degrees: Box::new(DegreeMismatch {
                    radial,
                    polar,
                    expected_radial: a,
                    expected_polar: c,
                }),
            });
        }
    }
    Ok((a, c))
}
