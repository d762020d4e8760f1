use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{ExactError, Rational};

/// Terms `[b_1, ..., b_k]`, all `>= 2`, of the negative continued fraction
/// `b_1 - 1/(b_2 - 1/(... - 1/b_k))`.
///
/// Generic over the integer type so that exhaustive checks can run on
/// machine integers; the library itself uses `BigInt`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NcfExpansion<T = BigInt> {
    terms: Vec<T>,
}

impl<T: Integer + Clone> NcfExpansion<T> {
    pub fn new(terms: Vec<T>) -> Result<Self, ExactError> {
        let two = T::one() + T::one();
        if terms.is_empty() || terms.iter().any(|t| *t < two) {
            return Err(ExactError::InvalidTerms);
        }
        Ok(NcfExpansion { terms })
    }

    pub fn terms(&self) -> &[T] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn into_terms(self) -> Vec<T> {
        self.terms
    }
}

/// Longest expansion [`ncf_expand`] will materialise. Each term becomes a
/// graph vertex downstream, so anything longer is out of reach anyway.
pub const MAX_TERMS: usize = 1 << 24;

/// Expands `n/d` by repeated ceiling division: `b = ceil(n/d)`, then recurse
/// on `d / (b*d - n)`. Requires `n > d >= 1` and `gcd(n, d) = 1`.
///
/// While the terms are 2 the difference `n - d` is unchanged and `d` drops
/// by it each step, so a whole run of twos costs one division.
pub fn ncf_expand<T: Integer + Clone + ToPrimitive>(
    n: &T,
    d: &T,
) -> Result<NcfExpansion<T>, ExactError>
where
    BigInt: From<T>,
{
    let invalid = || ExactError::InvalidFraction {
        numerator: BigInt::from(n.clone()),
        denominator: BigInt::from(d.clone()),
    };
    if *d < T::one() || *n <= *d || !n.gcd(d).is_one() {
        return Err(invalid());
    }
    let two = T::one() + T::one();
    let mut terms = Vec::new();
    let (mut num, mut den) = (n.clone(), d.clone());
    loop {
        let diff = num.clone() - den.clone();
        if diff <= den {
            // ceil(num/den) = 2 for the next den/diff steps.
            let (run, left) = den.div_rem(&diff);
            let run = run
                .to_usize()
                .filter(|run| terms.len() + run <= MAX_TERMS)
                .ok_or(ExactError::TooLong { limit: MAX_TERMS })?;
            terms.extend(core::iter::repeat(two.clone()).take(run));
            if left.is_zero() {
                break;
            }
            num = left.clone() + diff;
            den = left;
            continue;
        }
        let b = num.div_ceil(&den);
        let rest = b.clone() * den.clone() - num;
        if terms.len() == MAX_TERMS {
            return Err(ExactError::TooLong { limit: MAX_TERMS });
        }
        terms.push(b);
        if rest.is_zero() {
            break;
        }
        num = den;
        den = rest;
    }
    Ok(NcfExpansion { terms })
}

/// Numerator and denominator of the expansion, evaluated from the last
/// term inward. The pair is already coprime with positive denominator.
pub fn ncf_evaluate_fraction<T: Integer + Clone>(expansion: &NcfExpansion<T>) -> (T, T) {
    let mut iter = expansion.terms.iter().rev();
    let last = iter.next().expect("expansion is non-empty").clone();
    let (mut num, mut den) = (last, T::one());
    for b in iter {
        let next = b.clone() * num.clone() - den;
        den = num;
        num = next;
    }
    (num, den)
}

pub fn ncf_evaluate(expansion: &NcfExpansion) -> Rational {
    let (num, den) = ncf_evaluate_fraction(expansion);
    Rational::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn expand(n: i64, d: i64) -> Vec<i64> {
        ncf_expand(&n, &d).unwrap().into_terms()
    }

    #[test]
    fn known_expansions() {
        assert_eq!(expand(9, 1), vec![9]);
        assert_eq!(expand(4, 3), vec![2, 2, 2]);
        assert_eq!(expand(10, 7), vec![2, 2, 4]);
        assert_eq!(expand(6, 1), vec![6]);
        assert_eq!(expand(14, 3), vec![5, 3]);
        assert_eq!(expand(18, 13), vec![2, 2, 3, 3]);
    }

    #[test]
    fn known_evaluations() {
        let e = NcfExpansion::new(vec![BigInt::from(2), 2.into(), 4.into()]).unwrap();
        assert_eq!(ncf_evaluate(&e), Rational::new(10, 7));
        let e = NcfExpansion::new(vec![BigInt::from(2)]).unwrap();
        assert_eq!(ncf_evaluate(&e), Rational::from_integer(2));
        let e = NcfExpansion::new(vec![BigInt::from(5), 3.into()]).unwrap();
        assert_eq!(ncf_evaluate(&e), Rational::new(14, 3));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(ncf_expand(&1i64, &1).is_err());
        assert!(ncf_expand(&6i64, &4).is_err());
        assert!(ncf_expand(&3i64, &5).is_err());
        assert!(ncf_expand(&3i64, &0).is_err());
        assert!(NcfExpansion::new(vec![2i64, 1]).is_err());
        assert!(NcfExpansion::<i64>::new(vec![]).is_err());
    }

    /// One ceiling division per term, no run skipping.
    fn naive(mut num: i64, mut den: i64) -> Vec<i64> {
        let mut terms = Vec::new();
        while den != 0 {
            let b = Integer::div_ceil(&num, &den);
            terms.push(b);
            (num, den) = (den, b * den - num);
        }
        terms
    }

    #[test]
    fn overlong_expansion_is_an_error() {
        let d = BigInt::from(10).pow(20);
        let n = &d + 1;
        assert_eq!(ncf_expand(&n, &d), Err(ExactError::TooLong { limit: MAX_TERMS }));
        let n = BigInt::from(MAX_TERMS + 1);
        assert_eq!(ncf_expand(&n, &(&n - 1)).unwrap().len(), MAX_TERMS);
    }

    #[test]
    fn run_skipping_matches_naive_expansion() {
        for n in 2..400i64 {
            for d in 1..n {
                if n.gcd(&d) == 1 {
                    assert_eq!(expand(n, d), naive(n, d), "{n}/{d}");
                }
            }
        }
    }

    proptest! {
        #[test]
        fn round_trip_bigint(n in 2u64..1_000_000, d in 1u64..1_000_000) {
            prop_assume!(d < n && n.gcd(&d) == 1);
            let e = ncf_expand(&BigInt::from(n), &BigInt::from(d)).unwrap();
            prop_assert!(e.terms().iter().all(|t| *t >= BigInt::from(2)));
            prop_assert_eq!(ncf_evaluate(&e), Rational::new(n, d));
        }
    }
}
