//! Seifert invariants of the link `L_F`.
//!
//! The `S^1` action `l * (x, y, z) = (l^{rq/d} x, l^{rp/d} y, l^{w} z)`
//! (`d = delta`) has three candidate exceptional orbits, over `y = z = 0`,
//! `x = z = 0` and `xy != 0, z = 0`, with isotropy orders `qr/d`, `pr/d`
//! and `r/d`. The slice representations give
//!
//! ```text
//! w b_1 = -1 (mod qr/d),   w b_2 = -1 (mod pr/d),   w b_3 = 1 (mod r/d)
//! ```
//!
//! An orbit whose isotropy order is 1 is not exceptional and is dropped.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::exact::{mod_inverse, ExactError, Rational};
use crate::germ::GermParams;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeifertError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("delta = {0} must be odd and positive")]
    EvenDelta(BigInt),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExceptionalOrbit {
    /// 1, 2 or 3, following the order of the isotropy groups.
    pub index: usize,
    pub alpha: BigInt,
    pub beta: BigInt,
}

/// Normalized Seifert invariants `(g; e0; (a_1, b_1), ..., (a_s, b_s))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeifertData {
    pub genus: BigInt,
    pub e0: Rational,
    pub orbits: Vec<ExceptionalOrbit>,
    /// Indices of candidate orbits whose isotropy order is 1.
    pub dropped: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IsotropyReport {
    pub orders: [BigInt; 3],
    pub dropped: Vec<usize>,
}

pub fn isotropy_orders(params: &GermParams) -> IsotropyReport {
    let reduced = params.r() / params.delta();
    let orders = [params.q() * &reduced, params.p() * &reduced, reduced];
    let dropped = (1..=3).filter(|&i| orders[i - 1].is_one()).collect();
    IsotropyReport { orders, dropped }
}

pub fn seifert_invariants(params: &GermParams) -> Result<SeifertData, SeifertError> {
    let isotropy = isotropy_orders(params);
    let w = params.w();
    let mut orbits = Vec::with_capacity(3);
    for (i, alpha) in isotropy.orders.iter().enumerate() {
        let index = i + 1;
        if isotropy.dropped.contains(&index) {
            continue;
        }
        let inverse = mod_inverse(w, alpha)?;
        let beta = if index == 3 { inverse } else { alpha - inverse };
        orbits.push(ExceptionalOrbit {
            index,
            alpha: alpha.clone(),
            beta,
        });
    }

    let delta = params.delta();
    let e0 = -Rational::new(delta * delta, params.p() * params.q() * params.r());
    Ok(SeifertData {
        genus: genus_riemann_hurwitz(delta)?,
        e0,
        orbits,
        dropped: isotropy.dropped,
    })
}

/// Recomputes `e0` from the two coverings `L_F -> S^3` (degree `r/d` on a
/// regular fibre) and `B -> S^2` (degree `d`), starting from
/// `e0(S^3 -> S^2) = -1/pq`.
pub fn functoriality_check(data: &SeifertData, params: &GermParams) -> bool {
    let base_degree = params.delta().clone();
    let fibre_degree = params.r() / params.delta();
    let hopf_like = -Rational::new(1, params.p() * params.q());
    let expected = Rational::new(base_degree, fibre_degree) * hopf_like;
    data.e0 == expected
}

/// Genus of the orbit surface, from Riemann–Hurwitz for a cyclic
/// `delta`-fold cover of `S^2` branched at three points:
/// `2g - 2 = delta (0 - 2) + 3 (delta - 1)`.
pub fn genus_riemann_hurwitz(delta: &BigInt) -> Result<BigInt, SeifertError> {
    if !delta.is_positive() || delta.is_even() {
        return Err(SeifertError::EvenDelta(delta.clone()));
    }
    let euler_total = delta * BigInt::from(-2) + BigInt::from(3) * (delta - BigInt::one());
    let twice_genus = euler_total + BigInt::from(2);
    debug_assert!(twice_genus.is_even());
    let genus = twice_genus / BigInt::from(2);
    debug_assert_eq!(genus, (delta - BigInt::one()) / BigInt::from(2));
    Ok(genus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::germ::validate;
    use num_traits::Zero;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn orbit(index: usize, alpha: i64, beta: i64) -> ExceptionalOrbit {
        ExceptionalOrbit {
            index,
            alpha: big(alpha),
            beta: big(beta),
        }
    }

    #[test]
    fn cusp_family() {
        for r in 3..12 {
            let s = seifert_invariants(&validate(2, 3, r).unwrap()).unwrap();
            assert_eq!(s.genus, big(0));
            assert_eq!(s.e0, Rational::new(-1, 6 * r));
            assert_eq!(
                s.orbits,
                [
                    orbit(1, 3 * r, 3 * r - 1),
                    orbit(2, 2 * r, 2 * r - 1),
                    orbit(3, r, 1)
                ]
            );
        }
    }

    #[test]
    fn delta_three_drops_third_orbit() {
        let s = seifert_invariants(&validate(2, 5, 3).unwrap()).unwrap();
        assert_eq!(s.genus, big(1));
        assert_eq!(s.e0, Rational::new(-3, 10));
        assert_eq!(s.orbits, [orbit(1, 5, 4), orbit(2, 2, 1)]);
        assert_eq!(s.dropped, [3]);
    }

    #[test]
    fn isotropy() {
        let iso = isotropy_orders(&validate(2, 3, 4).unwrap());
        assert_eq!(iso.orders, [12, 8, 4].map(big));
        assert!(iso.dropped.is_empty());
        let iso = isotropy_orders(&validate(2, 5, 3).unwrap());
        assert_eq!(iso.orders, [5, 2, 1].map(big));
        assert_eq!(iso.dropped, [3]);
        assert_eq!(
            isotropy_orders(&validate(2, 3, 2).unwrap()).orders,
            [6, 4, 2].map(big)
        );
    }

    #[test]
    fn functoriality() {
        for (p, q, r) in [(2, 3, 5), (2, 5, 3), (3, 5, 7), (3, 7, 11)] {
            let params = validate(p, q, r).unwrap();
            let data = seifert_invariants(&params).unwrap();
            assert!(functoriality_check(&data, &params));
            let mut tampered = data.clone();
            tampered.e0 = -tampered.e0;
            assert!(!functoriality_check(&tampered, &params));
        }
    }

    #[test]
    fn riemann_hurwitz() {
        assert_eq!(genus_riemann_hurwitz(&big(1)).unwrap(), big(0));
        assert_eq!(genus_riemann_hurwitz(&big(3)).unwrap(), big(1));
        assert_eq!(genus_riemann_hurwitz(&big(5)).unwrap(), big(2));
        assert!(genus_riemann_hurwitz(&big(4)).is_err());
        assert!(genus_riemann_hurwitz(&big(0)).is_err());
    }

    #[test]
    fn sweep_invariants() {
        for p in 2..=50u32 {
            for q in 2..=50u32 {
                for r in [2u32, 3, 5, 9, 15, 27, 49, 50] {
                    let Ok(params) = validate(p, q, r) else { continue };
                    let data = seifert_invariants(&params).unwrap();
                    assert!(data.e0.is_negative());
                    assert!(functoriality_check(&data, &params));
                    for o in &data.orbits {
                        assert!(o.beta > BigInt::zero() && o.beta < o.alpha);
                        assert!(o.alpha.gcd(&o.beta).is_one());
                    }
                }
            }
        }
    }
}
