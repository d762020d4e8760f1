//! Exact integer and rational arithmetic: gcd, modular inverses, negative
//! (Hirzebruch–Jung) continued fractions and a small exact linear solver.

mod linalg;
mod ncf;
mod rational;

pub use linalg::{leading_principal_minors, symmetric_pivots, solve, LinearError};
pub use ncf::{ncf_evaluate, ncf_evaluate_fraction, ncf_expand, NcfExpansion, MAX_TERMS};
pub use rational::Rational;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("{value} is not invertible modulo {modulus}")]
    NotInvertible { value: BigInt, modulus: BigInt },
    #[error("modulus {0} is smaller than 2")]
    DegenerateModulus(BigInt),
    #[error("{numerator}/{denominator} has no negative continued fraction (need coprime n > d >= 1)")]
    InvalidFraction {
        numerator: BigInt,
        denominator: BigInt,
    },
    #[error("continued fraction terms must all be >= 2")]
    InvalidTerms,
    #[error("continued fraction would have more than {limit} terms")]
    TooLong { limit: usize },
}

/// Greatest common divisor, always non-negative; `gcd(0, 0) = 0`.
pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

/// The unique `u` in `[1, m-1]` with `w * u = 1 (mod m)`.
pub fn mod_inverse(w: &BigInt, m: &BigInt) -> Result<BigInt, ExactError> {
    if *m < BigInt::from(2) {
        return Err(ExactError::DegenerateModulus(m.clone()));
    }
    let reduced = w.mod_floor(m);
    let egcd = reduced.extended_gcd(m);
    if !egcd.gcd.is_one() {
        return Err(ExactError::NotInvertible {
            value: w.clone(),
            modulus: m.clone(),
        });
    }
    let inverse = egcd.x.mod_floor(m);
    debug_assert!(!inverse.is_zero() && !inverse.is_negative());
    Ok(inverse)
}
