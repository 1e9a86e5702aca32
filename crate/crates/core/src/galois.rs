//! One-sided test for Galois polynomials (root field equal to splitting
//! field). At a prime not dividing the discriminant, the factor degrees of
//! `f mod p` are the cycle lengths of Frobenius acting on the roots. For a
//! Galois polynomial the group acts regularly, so all cycles have the same
//! length; unequal degrees at an unramified prime are a certificate that
//! `f` is not Galois.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::cyclo::primes_up_to;
use crate::zfactor::factor_mod_p;
use crate::zpoly::{discriminant, IntPoly};

/// Default scan bound for [`is_galois_heuristic`].
pub const DEFAULT_PRIME_BOUND: u64 = 200;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPattern {
    pub prime: u64,
    /// Factor degrees, ascending, repeated by multiplicity.
    pub degrees: Vec<usize>,
    pub ramified: bool,
}

impl SplitPattern {
    pub fn has_equal_degrees(&self) -> bool {
        self.degrees.windows(2).all(|w| w[0] == w[1])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GaloisVerdict {
    /// An unramified prime with unequal factor degrees.
    NotGalois { witness: u64 },
    /// Every unramified prime up to the bound showed equal degrees.
    LikelyGalois { primes_tested: usize },
}

fn pattern_with_disc(f: &IntPoly, prime: u64, disc: &BigInt, seed: u64) -> SplitPattern {
    let ramified = (disc % BigInt::from(prime)).is_zero();
    let mut degrees: Vec<usize> = match factor_mod_p(f, prime, seed) {
        Ok(factors) => factors
            .iter()
            .flat_map(|(g, e)| core::iter::repeat_n(g.degree().unwrap_or(0), *e))
            .collect(),
        Err(_) => Vec::new(),
    };
    degrees.sort_unstable();
    SplitPattern {
        prime,
        degrees,
        ramified,
    }
}

fn disc_or_one(f: &IntPoly) -> BigInt {
    if f.degree().unwrap_or(0) >= 2 {
        discriminant(f)
    } else {
        BigInt::from(1)
    }
}

pub fn split_pattern(f: &IntPoly, prime: u64, seed: u64) -> SplitPattern {
    pattern_with_disc(f, prime, &disc_or_one(f), seed)
}

/// Scans primes up to `prime_bound` in increasing order, skipping ramified
/// ones, and stops at the first unequal pattern.
pub fn is_galois_heuristic(f: &IntPoly, prime_bound: u64, seed: u64) -> GaloisVerdict {
    let disc = disc_or_one(f);
    let mut tested = 0;
    for prime in primes_up_to(prime_bound) {
        let pat = pattern_with_disc(f, prime, &disc, seed);
        if pat.ramified {
            continue;
        }
        tested += 1;
        if !pat.has_equal_degrees() {
            return GaloisVerdict::NotGalois { witness: prime };
        }
    }
    GaloisVerdict::LikelyGalois {
        primes_tested: tested,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::cyclotomic;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn patterns() {
        let pat = split_pattern(&p(&[-2, 0, 0, 1]), 5, 0);
        assert_eq!(pat.degrees, [1, 2]);
        assert!(!pat.ramified);
        assert_eq!(split_pattern(&cyclotomic(5), 2, 0).degrees, [4]);
        let pat = split_pattern(&p(&[1, 0, 1]), 2, 0);
        assert!(pat.ramified);
        assert_eq!(pat.degrees, [1, 1]);
    }

    #[test]
    fn cube_root_of_two_is_not_galois() {
        assert_eq!(
            is_galois_heuristic(&p(&[-2, 0, 0, 1]), 100, 0),
            GaloisVerdict::NotGalois { witness: 5 }
        );
    }

    #[test]
    fn quadratic_always_galois() {
        assert!(matches!(
            is_galois_heuristic(&p(&[-1, -2, 1]), 200, 0),
            GaloisVerdict::LikelyGalois { primes_tested: 45 }
        ));
    }
}
