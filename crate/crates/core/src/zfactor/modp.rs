//! Polynomials over a prime field `F_p` with word-sized `p`, and their
//! factorization: squarefree decomposition, distinct-degree splitting and
//! Cantor-Zassenhaus equal-degree splitting.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::FactorError;
use crate::zpoly::IntPoly;

/// A polynomial with residues in `[0, modulus)`, ascending degree order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModPoly {
    modulus: u64,
    coeffs: Vec<u64>,
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n % w == 0 {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

impl ModPoly {
    pub fn new(modulus: u64, coeffs: Vec<u64>) -> Self {
        let mut p = Self {
            modulus,
            coeffs: coeffs.into_iter().map(|c| c % modulus).collect(),
        };
        p.normalize();
        p
    }

    pub fn zero(modulus: u64) -> Self {
        Self {
            modulus,
            coeffs: Vec::new(),
        }
    }

    pub fn one(modulus: u64) -> Self {
        Self::new(modulus, vec![1])
    }

    pub fn x(modulus: u64) -> Self {
        Self::new(modulus, vec![0, 1])
    }

    /// Reduces an integer polynomial into `[0, modulus)`.
    pub fn from_int_poly(p: &IntPoly, modulus: u64) -> Self {
        let m = BigInt::from(modulus);
        let coeffs = p
            .coeffs()
            .iter()
            .map(|c| {
                let r = ((c % &m) + &m) % &m;
                r.iter_u64_digits().next().unwrap_or(0)
            })
            .collect();
        Self::new(modulus, coeffs)
    }

    /// Lifts residues to integers in `[0, modulus)`.
    pub fn to_int_poly(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<u64> {
        self.coeffs.last().copied()
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None | Some(1) => self.clone(),
            Some(lc) => self.scale(inv_mod(lc, self.modulus)),
        }
    }

    pub fn scale(&self, c: u64) -> Self {
        Self::new(
            self.modulus,
            self.coeffs.iter().map(|&a| mul_mod(a, c, self.modulus)).collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.modulus;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                (a + b) % p
            })
            .collect();
        Self::new(p, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let p = self.modulus;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                (a + p - b) % p
            })
            .collect();
        Self::new(p, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let p = self.modulus;
        if self.is_zero() || other.is_zero() {
            return Self::zero(p);
        }
        let mut out = vec![0u128; self.coeffs.len() + other.coeffs.len() - 1];
        let pp = p as u128;
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u128 * b as u128) % pp;
            }
        }
        Self::new(p, out.into_iter().map(|c| c as u64).collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let p = self.modulus;
        let dd = d.degree().expect("division by zero polynomial");
        let inv = inv_mod(d.coeffs[dd], p);
        let mut rem = self.coeffs.clone();
        let Some(dr) = self.degree() else {
            return (Self::zero(p), Self::zero(p));
        };
        if dr < dd {
            return (Self::zero(p), self.clone());
        }
        let mut quot = vec![0u64; dr - dd + 1];
        for i in (0..=dr - dd).rev() {
            let c = mul_mod(rem[i + dd], inv, p);
            if c == 0 {
                continue;
            }
            quot[i] = c;
            for (j, &b) in d.coeffs.iter().enumerate() {
                rem[i + j] = (rem[i + j] + p - mul_mod(c, b, p)) % p;
            }
        }
        (Self::new(p, quot), Self::new(p, rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Monic gcd; zero only if both inputs are zero.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let p = self.modulus;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(p), Self::zero(p));
        let (mut t0, mut t1) = (Self::zero(p), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = core::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = core::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = core::mem::replace(&mut t1, t);
        }
        match r0.leading_coeff() {
            None | Some(1) => (r0, s0, t0),
            Some(lc) => {
                let inv = inv_mod(lc, p);
                (r0.scale(inv), s0.scale(inv), t0.scale(inv))
            }
        }
    }

    pub fn derivative(&self) -> Self {
        let p = self.modulus;
        Self::new(
            p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
                .collect(),
        )
    }

    /// `self^e mod m` with a big exponent.
    pub fn pow_mod_big(&self, e: &BigUint, m: &Self) -> Self {
        let mut acc = Self::one(self.modulus);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(m);
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
        }
        acc
    }

    pub fn pow_mod(&self, e: u64, m: &Self) -> Self {
        self.pow_mod_big(&BigUint::from(e), m)
    }

    /// For `f` with only exponents divisible by `p`, the `g` with `g^p = f`.
    fn pth_root(&self) -> Self {
        let p = self.modulus as usize;
        // a^p = a in F_p, so coefficients carry over unchanged
        Self::new(
            self.modulus,
            self.coeffs.iter().step_by(p).copied().collect(),
        )
    }

    fn canonical_cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl fmt::Display for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) mod {}", self.to_int_poly(), self.modulus)
    }
}

impl fmt::Debug for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModPoly{self}")
    }
}

/// Squarefree decomposition of a monic polynomial over `F_p`: pairs of
/// coprime squarefree monic factors and their multiplicities.
pub fn squarefree_decomposition(f: &ModPoly) -> Vec<(ModPoly, usize)> {
    let mut out = Vec::new();
    let p = f.modulus;
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let mut c = f.gcd(&f.derivative());
    let mut w = f.div_rem(&c).0;
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.div_rem(&y).0;
        if fac.degree().unwrap_or(0) > 0 {
            out.push((fac.monic(), i));
        }
        w = y;
        c = c.div_rem(&w).0;
        i += 1;
    }
    if !c.is_one() {
        for (g, j) in squarefree_decomposition(&c.monic().pth_root()) {
            out.push((g, j * p as usize));
        }
    }
    out
}

/// Splits a squarefree monic polynomial into products of irreducible
/// factors of equal degree: `(product, degree)` pairs.
pub fn distinct_degree_factorization(f: &ModPoly) -> Vec<(ModPoly, usize)> {
    let p = f.modulus;
    let mut out = Vec::new();
    let mut g = f.monic();
    let x = ModPoly::x(p);
    let mut h = x.rem(&g);
    let mut d = 1;
    while let Some(dg) = g.degree() {
        if dg < 2 * d {
            break;
        }
        h = h.pow_mod(p, &g);
        let t = h.sub(&x).gcd(&g);
        if t.degree().unwrap_or(0) > 0 {
            g = g.div_rem(&t).0;
            h = h.rem(&g);
            out.push((t, d));
        }
        d += 1;
    }
    if let Some(dg) = g.degree() {
        if dg > 0 {
            out.push((g, dg));
        }
    }
    out
}

fn random_poly(rng: &mut ChaCha8Rng, p: u64, below: usize) -> ModPoly {
    ModPoly::new(p, (0..below).map(|_| rng.next_u64() % p).collect())
}

/// Cantor-Zassenhaus: splits a squarefree monic product of irreducible
/// degree-`d` factors into those factors.
pub fn equal_degree_factorization(f: &ModPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<ModPoly> {
    let n = f.degree().expect("nonzero");
    if n == d {
        return vec![f.monic()];
    }
    let p = f.modulus;
    let splitter = loop {
        let a = random_poly(rng, p, n);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let g = a.gcd(f);
        if g.degree().unwrap_or(0) > 0 {
            break g;
        }
        let b = if p == 2 {
            // trace map a + a^2 + ... + a^(2^(d-1))
            let mut t = a.clone();
            let mut acc = a.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(f);
                acc = acc.add(&t);
            }
            acc
        } else {
            let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
            a.pow_mod_big(&e, f).sub(&ModPoly::one(p))
        };
        let g = b.gcd(f);
        if let Some(dg) = g.degree() {
            if dg > 0 && dg < n {
                break g;
            }
        }
    };
    let other = f.div_rem(&splitter).0;
    let mut out = equal_degree_factorization(&splitter, d, rng);
    out.extend(equal_degree_factorization(&other, d, rng));
    out
}

/// Rabin's irreducibility test over `F_p`.
pub fn is_irreducible_mod_p(f: &ModPoly) -> bool {
    let Some(n) = f.degree() else {
        return false;
    };
    if n == 0 {
        return false;
    }
    let f = f.monic();
    let p = f.modulus;
    let x = ModPoly::x(p);
    let q = BigUint::from(p);
    let mut m = n;
    let mut prime_divisors = Vec::new();
    let mut q_div = 2;
    while q_div * q_div <= m {
        if m % q_div == 0 {
            prime_divisors.push(q_div);
            while m % q_div == 0 {
                m /= q_div;
            }
        }
        q_div += 1;
    }
    if m > 1 {
        prime_divisors.push(m);
    }
    for r in prime_divisors {
        let e = q.pow((n / r) as u32);
        let h = x.pow_mod_big(&e, &f).sub(&x);
        if !h.gcd(&f).is_one() {
            return false;
        }
    }
    x.pow_mod_big(&q.pow(n as u32), &f).sub(&x).rem(&f).is_zero()
}

/// Complete factorization of `p` modulo `prime` into monic irreducible
/// factors with multiplicities, sorted by degree then coefficients. The
/// output does not depend on `seed`.
pub fn factor_mod_p(p: &IntPoly, prime: u64, seed: u64) -> Result<Vec<(ModPoly, usize)>, FactorError> {
    if !is_prime_u64(prime) {
        return Err(FactorError::BadPrime(prime));
    }
    let Some(lc) = p.leading_coeff() else {
        return Err(FactorError::ZeroPolynomial);
    };
    let big = BigInt::from(prime);
    if (lc % &big).sign() == Sign::NoSign {
        return Err(FactorError::BadPrime(prime));
    }
    let reduced = ModPoly::from_int_poly(p, prime).monic();
    Ok(factor_monic_mod_p(&reduced, seed))
}

pub(crate) fn factor_monic_mod_p(f: &ModPoly, seed: u64) -> Vec<(ModPoly, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ f.modulus.rotate_left(17));
    let mut out = Vec::new();
    for (sqf, mult) in squarefree_decomposition(f) {
        for (block, d) in distinct_degree_factorization(&sqf) {
            for g in equal_degree_factorization(&block, d, &mut rng) {
                out.push((g, mult));
            }
        }
    }
    out.sort_by(|a, b| a.0.canonical_cmp(&b.0).then(a.1.cmp(&b.1)));
    out
}

/// Product of factors with multiplicities, for checking.
pub fn expand_factors(modulus: u64, factors: &[(ModPoly, usize)]) -> ModPoly {
    factors.iter().fold(ModPoly::one(modulus), |acc, (g, e)| {
        (0..*e).fold(acc, |a, _| a.mul(g))
    })
}
