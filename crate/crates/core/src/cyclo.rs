//! Divisors, Euler's totient, the Möbius function and classical cyclotomic
//! polynomials.

use alloc::vec::Vec;

use crate::zpoly::IntPoly;

/// The divisors of `n` in ascending order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorSet {
    n: u64,
    divisors: Vec<u64>,
}

impl DivisorSet {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.divisors
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.divisors.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.divisors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.divisors.is_empty()
    }
}

impl<'a> IntoIterator for &'a DivisorSet {
    type Item = &'a u64;
    type IntoIter = core::slice::Iter<'a, u64>;
    fn into_iter(self) -> Self::IntoIter {
        self.divisors.iter()
    }
}

/// Prime factorization by trial division: `(prime, exponent)` ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "factorize needs n >= 1");
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn divisors(m: u64) -> DivisorSet {
    assert!(m >= 1, "divisors needs m >= 1");
    let mut divisors = alloc::vec![1u64];
    for (p, e) in factorize(m) {
        let len = divisors.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divisors.push(divisors[i] * pk);
            }
        }
    }
    divisors.sort_unstable();
    DivisorSet { n: m, divisors }
}

/// Number of divisors.
pub fn tau(n: u64) -> u64 {
    factorize(n).iter().map(|&(_, e)| e as u64 + 1).product()
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

pub fn mobius(n: u64) -> i8 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Product of the distinct primes dividing `n`.
pub fn radical(n: u64) -> u64 {
    factorize(n).iter().map(|&(p, _)| p).product()
}

/// Primes `<= bound` by a sieve.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    let n = bound as usize;
    if n < 2 {
        return Vec::new();
    }
    let mut sieve = alloc::vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter(|(_, &is_p)| is_p)
        .map(|(i, _)| i as u64)
        .collect()
}

/// The classical cyclotomic polynomial `Φ_n`.
///
/// For squarefree `n` this is the Möbius product of the `x^d - 1`; in general
/// `Φ_n(x) = Φ_rad(n)(x^(n / rad(n)))`.
pub fn cyclotomic(n: u64) -> IntPoly {
    assert!(n >= 1, "cyclotomic needs n >= 1");
    let r = radical(n);
    let core = squarefree_cyclotomic(r);
    core.substitute_power((n / r) as usize)
}

fn squarefree_cyclotomic(n: u64) -> IntPoly {
    let mut num = IntPoly::one();
    let mut den = IntPoly::one();
    for d in divisors(n).iter() {
        let term = IntPoly::x_pow_minus(d as usize, 1);
        match mobius(n / d) {
            1 => num = &num * &term,
            -1 => den = &den * &term,
            _ => {}
        }
    }
    num.div_exact(&den)
        .expect("Möbius product of x^d - 1 is a polynomial")
}
