//! High-precision complex root finding used as an independent oracle.
//!
//! Values are fixed-point complex numbers `(re + i im) * 2^-PREC` held in
//! big integers, and roots come from Durand-Kerner iteration. Nothing here
//! touches resultants, gcds or factorization.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use relcyc_core::IntPoly;

pub const PREC: u32 = 320;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fx {
    pub re: BigInt,
    pub im: BigInt,
}

impl Fx {
    pub fn zero() -> Self {
        Fx { re: BigInt::zero(), im: BigInt::zero() }
    }

    pub fn from_int(n: &BigInt) -> Self {
        Fx { re: n << PREC, im: BigInt::zero() }
    }

    /// From an f64 pair at full fixed-point precision (low bits zero).
    pub fn from_f64(re: f64, im: f64) -> Self {
        let conv = |v: f64| BigInt::from((v * (1u64 << 52) as f64) as i64) << (PREC - 52);
        Fx { re: conv(re), im: conv(im) }
    }

    pub fn add(&self, o: &Fx) -> Fx {
        Fx { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    pub fn sub(&self, o: &Fx) -> Fx {
        Fx { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    pub fn mul(&self, o: &Fx) -> Fx {
        Fx {
            re: (&self.re * &o.re - &self.im * &o.im) >> PREC,
            im: (&self.re * &o.im + &self.im * &o.re) >> PREC,
        }
    }

    pub fn div(&self, o: &Fx) -> Fx {
        let den = &o.re * &o.re + &o.im * &o.im;
        assert!(!den.is_zero(), "fixed-point division by zero");
        let re = (&self.re * &o.re + &self.im * &o.im) << PREC;
        let im = (&self.im * &o.re - &self.re * &o.im) << PREC;
        Fx { re: re / &den, im: im / den }
    }

    /// `|z|^2` at scale `2^(2 PREC)`.
    pub fn norm_sq_raw(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn pow(&self, m: u64) -> Fx {
        let mut acc = Fx::from_int(&BigInt::from(1));
        for _ in 0..m {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn to_f64(&self) -> (f64, f64) {
        let f = |v: &BigInt| {
            let shifted: BigInt = v >> (PREC - 60);
            let s: f64 = shifted.to_string().parse().unwrap();
            s / (1u64 << 60) as f64
        };
        (f(&self.re), f(&self.im))
    }
}

/// `|a - b| < tol * max(1, |a|)` with `tol = 10^-digits`.
pub fn close(a: &Fx, b: &Fx, digits: u32) -> bool {
    let diff = a.sub(b).norm_sq_raw();
    let scale = a.norm_sq_raw().max(BigInt::from(1) << (2 * PREC));
    diff * BigInt::from(10).pow(2 * digits) < scale
}

/// All complex roots of `p` (degree >= 1), by Durand-Kerner on the monic
/// normalization.
pub fn roots(p: &IntPoly) -> Vec<Fx> {
    let n = p.degree().expect("nonzero");
    assert!(n >= 1);
    let lc = p.leading_coeff().unwrap().clone();
    // monic coefficients a_i / lc in fixed point
    let coeffs: Vec<Fx> = p
        .coeffs()
        .iter()
        .map(|c| Fx { re: (c << PREC) / &lc, im: BigInt::zero() })
        .collect();
    let eval = |z: &Fx| {
        coeffs
            .iter()
            .rev()
            .fold(Fx::zero(), |acc, c| acc.mul(z).add(c))
    };
    // Cauchy radius
    let radius = 1.0
        + p.coeffs()
            .iter()
            .map(|c| {
                let q: f64 = (c.abs().to_string().parse::<f64>().unwrap())
                    / lc.abs().to_string().parse::<f64>().unwrap();
                q
            })
            .fold(0.0, f64::max);
    let seed = (0.4f64, 0.9f64);
    let mut z: Vec<Fx> = Vec::with_capacity(n);
    let (mut wr, mut wi) = (1.0f64, 0.0f64);
    for _ in 0..n {
        z.push(Fx::from_f64(wr * radius / 2.0, wi * radius / 2.0));
        let (nr, ni) = (wr * seed.0 - wi * seed.1, wr * seed.1 + wi * seed.0);
        wr = nr;
        wi = ni;
    }
    let threshold = BigInt::from(1) << 120;
    for _ in 0..1500 {
        let mut max_step = BigInt::zero();
        for i in 0..n {
            let mut den = Fx::from_int(&BigInt::from(1));
            for j in 0..n {
                if i != j {
                    let mut d = z[i].sub(&z[j]);
                    if d.norm_sq_raw().is_zero() {
                        d.re += 1;
                    }
                    den = den.mul(&d);
                }
            }
            if den.norm_sq_raw().is_zero() {
                den.re += 1;
            }
            let step = eval(&z[i]).div(&den);
            max_step = max_step.max(step.norm_sq_raw());
            z[i] = z[i].sub(&step);
        }
        if max_step < threshold {
            break;
        }
    }
    z
}

/// Whether the numeric roots of `p` are pairwise separated by `10^-digits`.
pub fn roots_distinct(p: &IntPoly, digits: u32) -> bool {
    let rs = roots(p);
    for i in 0..rs.len() {
        for j in i + 1..rs.len() {
            let diff = rs[i].sub(&rs[j]).norm_sq_raw();
            let tol = (BigInt::from(1) << (2 * PREC)) / BigInt::from(10).pow(2 * digits);
            if diff < tol {
                return false;
            }
        }
    }
    true
}

/// Whether some pair of distinct roots has equal `m`-th powers at the
/// given relative precision.
pub fn powers_collide(roots: &[Fx], m: u64, digits: u32) -> bool {
    let powers: Vec<Fx> = roots.iter().map(|r| r.pow(m)).collect();
    for i in 0..powers.len() {
        for j in i + 1..powers.len() {
            if close(&powers[i], &powers[j], digits) {
                return true;
            }
        }
    }
    false
}
