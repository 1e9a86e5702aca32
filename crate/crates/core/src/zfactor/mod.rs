//! Factorization of integer polynomials: modular factorization, Hensel
//! lifting to a Mignotte-bound modulus, and recombination of lifted factors
//! by subset trial division.

mod hensel;
mod modp;

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::zpoly::{squarefree_part, IntPoly};

pub use hensel::{hensel_lift, LiftedFactors};
pub use modp::{
    distinct_degree_factorization, equal_degree_factorization, expand_factors, factor_mod_p,
    is_irreducible_mod_p, is_prime_u64, squarefree_decomposition, ModPoly,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FactorError {
    #[error("prime {0} is unusable (not prime, or divides the leading coefficient)")]
    BadPrime(u64),
    #[error("Hensel lifting needs pairwise coprime monic factors of a squarefree reduction")]
    LiftPreconditionViolated,
    #[error("the zero polynomial has no factorization")]
    ZeroPolynomial,
}

/// Good primes examined before settling on the one with fewest factors.
const PRIME_CANDIDATES: usize = 20;

/// `unit * content * prod factor^multiplicity` equals the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    /// Sign of the leading coefficient, `1` or `-1`.
    pub unit: i8,
    /// Positive integer content; `1` for primitive input.
    pub content: BigInt,
    /// Primitive irreducible factors with positive leading coefficient,
    /// pairwise distinct, in canonical order.
    pub factors: Vec<(IntPoly, usize)>,
}

impl Factorization {
    /// Number of irreducible factors counted with multiplicity.
    pub fn count_with_multiplicity(&self) -> usize {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    pub fn is_single_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    /// Multiplies everything back together.
    pub fn expand(&self) -> IntPoly {
        let body: IntPoly = self
            .factors
            .iter()
            .map(|(f, e)| f.pow(*e as u32))
            .product();
        let scale = if self.unit < 0 {
            -&self.content
        } else {
            self.content.clone()
        };
        body.scale(&scale)
    }
}

/// `2^n * (1 + ||p||_2)`, rounded up, where `n = deg p`.
pub fn mignotte_bound(p: &IntPoly) -> BigInt {
    let n = p.degree().expect("mignotte_bound of zero");
    let norm_sq: BigInt = p.coeffs().iter().map(|c| c * c).sum();
    let scaled = norm_sq << (2 * n);
    let mut root = scaled.sqrt();
    if &root * &root < scaled {
        root += 1;
    }
    (BigInt::one() << n) + root
}

/// Small primes in increasing order starting at 3.
fn odd_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| is_prime_u64(n))
}

/// Chooses the prime with the fewest modular factors among the first
/// good candidates. Returns `None` if the polynomial is proven irreducible
/// by some prime along the way.
fn choose_prime(f: &IntPoly, seed: u64) -> Option<(u64, Vec<ModPoly>)> {
    let lc = f.leading_coeff().expect("nonzero");
    let mut best: Option<(u64, Vec<ModPoly>)> = None;
    let mut good = 0;
    for prime in odd_primes() {
        if good == PRIME_CANDIDATES {
            break;
        }
        if (lc % BigInt::from(prime)).is_zero() {
            continue;
        }
        let reduced = ModPoly::from_int_poly(f, prime).monic();
        if !reduced.gcd(&reduced.derivative()).is_one() {
            continue;
        }
        good += 1;
        let factors: Vec<ModPoly> = modp::factor_monic_mod_p(&reduced, seed)
            .into_iter()
            .map(|(g, _)| g)
            .collect();
        if factors.len() == 1 {
            return None;
        }
        if best.as_ref().is_none_or(|(_, b)| factors.len() < b.len()) {
            best = Some((prime, factors));
        }
    }
    best
}

/// Iterates `k`-subsets of `0..n` in lexicographic order.
struct Subsets {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Subsets {
    fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Subsets {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Zassenhaus on a squarefree primitive polynomial with positive leading
/// coefficient and degree at least one.
fn factor_squarefree(f: &IntPoly, seed: u64) -> Vec<IntPoly> {
    if f.degree() == Some(1) {
        return alloc::vec![f.clone()];
    }
    let Some((_, modular)) = choose_prime(f, seed) else {
        return alloc::vec![f.clone()];
    };
    let lc = f.leading_coeff().expect("nonzero").abs();
    let bound = &lc * mignotte_bound(f);
    let lifted = hensel_lift(&modular, f, &bound).expect("prime chosen to satisfy lifting");
    let modulus = lifted.modulus;
    let mut pool = lifted.factors;
    let mut remaining = f.clone();
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= pool.len() {
        let mut hit = None;
        let lc_rem = remaining.leading_coeff().expect("nonzero").clone();
        let const_rem = remaining.constant_term() * &lc_rem;
        for subset in Subsets::new(pool.len(), size) {
            let members: Vec<&IntPoly> = subset.iter().map(|&i| &pool[i]).collect();
            // cheap constant-term screen before the full trial division
            let c = members
                .iter()
                .fold(lc_rem.clone(), |acc, g| (acc * g.constant_term()).mod_floor(&modulus));
            let c = hensel::symmetric(&IntPoly::constant(c), &modulus).constant_term();
            if c.is_zero() {
                if !const_rem.is_zero() {
                    continue;
                }
            } else if !(&const_rem % &c).is_zero() {
                continue;
            }
            let candidate = hensel::symmetric(
                &hensel::product_mod(&members, &lc_rem, &modulus),
                &modulus,
            )
            .primitive_part();
            if let Ok(q) = remaining.div_exact(&candidate) {
                hit = Some((subset, candidate, q));
                break;
            }
        }
        match hit {
            Some((subset, candidate, q)) => {
                found.push(candidate);
                remaining = q;
                for &i in subset.iter().rev() {
                    pool.remove(i);
                }
            }
            None => size += 1,
        }
    }
    if remaining.degree().unwrap_or(0) > 0 {
        found.push(remaining.primitive_part());
    }
    found
}

/// Complete factorization over the integers.
pub fn factor_over_z(p: &IntPoly, seed: u64) -> Result<Factorization, FactorError> {
    let lc = p.leading_coeff().ok_or(FactorError::ZeroPolynomial)?;
    let unit = if lc.is_negative() { -1 } else { 1 };
    let content = p.content();
    let mut rest = p.primitive_part();
    let mut factors = Vec::new();
    if rest.degree().unwrap_or(0) > 0 {
        let sqf = squarefree_part(&rest);
        for g in factor_squarefree(&sqf, seed) {
            let mut mult = 0;
            while let Ok(q) = rest.div_exact(&g) {
                rest = q;
                mult += 1;
            }
            debug_assert!(mult > 0);
            factors.push((g, mult));
        }
        debug_assert!(rest.is_one());
    }
    factors.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    Ok(Factorization {
        unit,
        content,
        factors,
    })
}

/// Irreducible over the rationals: a single factor of multiplicity one.
pub fn is_irreducible(p: &IntPoly, seed: u64) -> bool {
    assert!(p.degree().unwrap_or(0) >= 1, "is_irreducible needs degree >= 1");
    factor_over_z(p, seed).is_ok_and(|f| f.is_single_irreducible())
}
