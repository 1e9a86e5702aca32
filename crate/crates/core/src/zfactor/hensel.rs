//! Multifactor quadratic Hensel lifting from `p` to `p^(2^j)`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::modp::ModPoly;
use super::FactorError;
use crate::zpoly::IntPoly;

/// Monic factors modulo `modulus = prime^exponent`, residues in `[0, modulus)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedFactors {
    pub prime: u64,
    pub exponent: u32,
    pub modulus: BigInt,
    pub factors: Vec<IntPoly>,
}

fn reduce(p: &IntPoly, m: &BigInt) -> IntPoly {
    IntPoly::new(p.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn mul_mod(a: &IntPoly, b: &IntPoly, m: &BigInt) -> IntPoly {
    reduce(&(a * b), m)
}

/// Division by a monic polynomial modulo `m`.
fn div_rem_mod(a: &IntPoly, h: &IntPoly, m: &BigInt) -> (IntPoly, IntPoly) {
    debug_assert!(h.is_monic());
    let (q, r) = reduce(a, m).div_rem_monic(h);
    (reduce(&q, m), reduce(&r, m))
}

/// One quadratic step for `f = g*h mod m` with `s*g + t*h = 1 mod m`,
/// producing the same relations modulo `m2 = m^2` (or a divisor of it).
fn lift_step(
    f: &IntPoly,
    g: &IntPoly,
    h: &IntPoly,
    s: &IntPoly,
    t: &IntPoly,
    m2: &BigInt,
) -> (IntPoly, IntPoly, IntPoly, IntPoly) {
    let e = reduce(&(f - &(g * h)), m2);
    let (q, r) = div_rem_mod(&mul_mod(s, &e, m2), h, m2);
    let g_new = reduce(&(&(g + &(t * &e)) + &(&q * g)), m2);
    let h_new = reduce(&(h + &r), m2);

    let b = reduce(&(&(&(s * &g_new) + &(t * &h_new)) - &IntPoly::one()), m2);
    let (c, d) = div_rem_mod(&mul_mod(s, &b, m2), &h_new, m2);
    let s_new = reduce(&(s - &d), m2);
    let t_new = reduce(&(&(t - &(t * &b)) - &(&c * &g_new)), m2);
    (g_new, h_new, s_new, t_new)
}

/// Smallest `(j, prime^(2^j))` with `prime^(2^j) >= floor`.
fn lifting_schedule(prime: u64, floor: &BigInt) -> (u32, Vec<BigInt>) {
    let mut moduli = Vec::new();
    let mut m = BigInt::from(prime);
    let mut e = 1;
    moduli.push(m.clone());
    while &m < floor {
        m = &m * &m;
        e *= 2;
        moduli.push(m.clone());
    }
    (e, moduli)
}

/// Lifts pairwise coprime monic factors of `p mod prime` to factors modulo
/// `prime^e >= 2 * target_bound`. Each lifted factor is monic and reduces to
/// its starting point modulo `prime`.
pub fn hensel_lift(
    factors: &[ModPoly],
    p: &IntPoly,
    target_bound: &BigInt,
) -> Result<LiftedFactors, FactorError> {
    let first = factors.first().ok_or(FactorError::LiftPreconditionViolated)?;
    let prime = first.modulus();
    let lc = p.leading_coeff().ok_or(FactorError::ZeroPolynomial)?;
    let big_p = BigInt::from(prime);
    if (lc % &big_p).is_zero() {
        return Err(FactorError::BadPrime(prime));
    }
    if factors
        .iter()
        .any(|g| g.modulus() != prime || g.leading_coeff() != Some(1) || g.is_constant())
    {
        return Err(FactorError::LiftPreconditionViolated);
    }
    let product = factors
        .iter()
        .fold(ModPoly::one(prime), |acc, g| acc.mul(g));
    let target = ModPoly::from_int_poly(p, prime).monic();
    if product != target || !product.gcd(&product.derivative()).is_one() {
        return Err(FactorError::LiftPreconditionViolated);
    }

    let floor = target_bound * 2u32;
    let (exponent, moduli) = lifting_schedule(prime, &floor);
    let modulus = moduli.last().cloned().expect("nonempty schedule");

    let lc_inv = lc
        .extended_gcd(&modulus)
        .x
        .mod_floor(&modulus);
    let mut rest = reduce(&p.scale(&lc_inv), &modulus);
    debug_assert!(rest.is_monic());

    let mut lifted = Vec::with_capacity(factors.len());
    for (i, g0) in factors.iter().enumerate().take(factors.len() - 1) {
        let h0 = factors[i + 1..]
            .iter()
            .fold(ModPoly::one(prime), |acc, g| acc.mul(g));
        let (one, s0, t0) = g0.ext_gcd(&h0);
        if !one.is_one() {
            return Err(FactorError::LiftPreconditionViolated);
        }
        let mut g = g0.to_int_poly();
        let mut h = h0.to_int_poly();
        let mut s = s0.to_int_poly();
        let mut t = t0.to_int_poly();
        for m2 in &moduli[1..] {
            let f = reduce(&rest, m2);
            (g, h, s, t) = lift_step(&f, &g, &h, &s, &t, m2);
        }
        lifted.push(g);
        rest = h;
    }
    lifted.push(rest);
    Ok(LiftedFactors {
        prime,
        exponent,
        modulus,
        factors: lifted,
    })
}

/// Symmetric residue in `(-m/2, m/2]`.
pub(crate) fn symmetric(p: &IntPoly, m: &BigInt) -> IntPoly {
    let half: BigInt = m / 2u32;
    IntPoly::new(
        p.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

pub(crate) fn product_mod(factors: &[&IntPoly], scale: &BigInt, m: &BigInt) -> IntPoly {
    let mut acc = IntPoly::constant(scale.mod_floor(m));
    for f in factors {
        acc = mul_mod(&acc, f, m);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use num_traits::One;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn lift_to_25() {
        let fs = vec![ModPoly::new(5, vec![2, 1]), ModPoly::new(5, vec![3, 1])];
        let lifted = hensel_lift(&fs, &ip(&[1, 0, 1]), &BigInt::from(10)).unwrap();
        assert_eq!(lifted.modulus, BigInt::from(25));
        assert_eq!(lifted.exponent, 2);
        assert_eq!(lifted.factors, vec![ip(&[7, 1]), ip(&[18, 1])]);
    }

    #[test]
    fn single_factor_is_monic_reduction() {
        let f = ip(&[1, 0, 2]);
        let base = ModPoly::from_int_poly(&f, 5).monic();
        for bound in [1, 100, 1_000_000] {
            let lifted = hensel_lift(core::slice::from_ref(&base), &f, &BigInt::from(bound)).unwrap();
            let m = &lifted.modulus;
            let inv = BigInt::from(2).extended_gcd(m).x.mod_floor(m);
            assert_eq!(lifted.factors, vec![reduce(&f.scale(&inv), m)]);
        }
    }

    #[test]
    fn duplicate_factors_rejected() {
        let fs = vec![ModPoly::new(3, vec![1, 1]), ModPoly::new(3, vec![1, 1])];
        assert_eq!(
            hensel_lift(&fs, &ip(&[-1, 0, 1]), &BigInt::from(10)),
            Err(FactorError::LiftPreconditionViolated)
        );
    }

    #[test]
    fn lifted_product_matches_to_high_precision() {
        // x^4 + 1 mod 17 splits into linear factors
        let f = ip(&[1, 0, 0, 0, 1]);
        let fs: Vec<ModPoly> = super::super::modp::factor_mod_p(&f, 17, 0)
            .unwrap()
            .into_iter()
            .map(|(g, _)| g)
            .collect();
        assert_eq!(fs.len(), 4);
        let bound = BigInt::from(10).pow(40);
        let lifted = hensel_lift(&fs, &f, &bound).unwrap();
        assert!(lifted.modulus >= &bound * 2);
        let refs: Vec<&IntPoly> = lifted.factors.iter().collect();
        let prod = product_mod(&refs, &BigInt::one(), &lifted.modulus);
        assert_eq!(prod, reduce(&f, &lifted.modulus));
        for (g, g0) in lifted.factors.iter().zip(&fs) {
            assert_eq!(&ModPoly::from_int_poly(g, 17), g0);
        }
    }
}
