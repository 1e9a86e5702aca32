//! Relative cyclotomic polynomials.
//!
//! For a monic irreducible `f` with root `a` and an exponent `m`, let `f_m`
//! be the minimal polynomial of `a^m` and `F_m(x) = f_m(x^m)`. The roots of
//! `F_m` are the `a_i * z` with `z^m = 1`; grouping them by the exact order
//! `d` of `z` gives one Galois-stable block per divisor `d | m`, whose
//! polynomial is `Ψ_d`. When `Q(a)` is linearly disjoint from the `m`-th
//! cyclotomic field and `a^m` keeps full degree, every `Ψ_d` is irreducible
//! of degree `deg f * φ(d)`, so `F_m` factors exactly like `x^m - 1`.
//!
//! `Ψ_d` is computed as `f_d(x^d)` divided by all `Ψ_e` with `e | d, e < d`,
//! which needs no assignment of factors to divisors and stays well defined
//! when the hypotheses fail (the blocks are then reducible).

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::cyclo::{self, tau};
use crate::zfactor::{factor_over_z, is_irreducible, Factorization};
use crate::zpoly::{discriminant, is_squarefree, resultant, BivarPoly, IntPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RelCycError {
    #[error("base polynomial must have degree at least 1")]
    Constant,
    #[error("base polynomial must be monic")]
    NotMonic,
    #[error("base polynomial must be irreducible over the rationals")]
    Reducible,
    #[error("base polynomial has the root 0")]
    ZeroRoot,
    #[error("exponent must be at least 1")]
    ZeroExponent,
    #[error("the root raised to the power {0} has lower degree than the root")]
    DefectivePower(u64),
    #[error("internal inconsistency: exact division failed at d = {0}")]
    InternalInconsistency(u64),
}

/// A monic irreducible integer polynomial with nonzero constant term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasePoly {
    poly: IntPoly,
}

impl BasePoly {
    /// Validates `f`. Irreducibility is decided by a full factorization; the
    /// verdict does not depend on the splitting seed, so a fixed one is used.
    pub fn new(f: IntPoly) -> Result<Self, RelCycError> {
        match f.degree() {
            None | Some(0) => return Err(RelCycError::Constant),
            _ => {}
        }
        if !f.is_monic() {
            return Err(RelCycError::NotMonic);
        }
        if f.constant_term().is_zero() {
            return Err(RelCycError::ZeroRoot);
        }
        if !is_irreducible(&f, 0) {
            return Err(RelCycError::Reducible);
        }
        Ok(Self { poly: f })
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    /// `k = deg f`.
    pub fn degree(&self) -> usize {
        self.poly.degree().expect("validated")
    }

    /// `f(x - t)`, still monic and irreducible; `None` if it has the root 0.
    fn shifted(&self, t: &BigInt) -> Option<BasePoly> {
        let poly = self.poly.shift(t);
        (!poly.constant_term().is_zero()).then_some(BasePoly { poly })
    }
}

/// `f_m = Res_y(f(y), x - y^m)`, the monic polynomial with roots `a_i^m`.
/// It is the minimal polynomial of `a^m` exactly when it is squarefree.
pub fn power_min_poly(base: &BasePoly, m: u64) -> IntPoly {
    assert!(m >= 1, "power_min_poly needs m >= 1");
    if m == 1 {
        return base.poly.clone();
    }
    resultant(
        &BivarPoly::from_inner(&base.poly),
        &BivarPoly::x_minus_y_pow(m as usize),
    )
}

pub fn is_uniform_for_m(base: &BasePoly, m: u64) -> bool {
    is_squarefree(&power_min_poly(base, m))
}

/// `F_m(x) = f_m(x^m)`.
pub fn build_f(base: &BasePoly, m: u64) -> Result<IntPoly, RelCycError> {
    if m == 0 {
        return Err(RelCycError::ZeroExponent);
    }
    let fm = power_min_poly(base, m);
    if !is_squarefree(&fm) {
        return Err(RelCycError::DefectivePower(m));
    }
    Ok(fm.substitute_power(m as usize))
}

/// Orders `n >= 2` for which some ratio of distinct conjugates is a
/// primitive `n`-th root of unity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniformReport {
    pub bad_orders: Vec<u64>,
    pub uniform_for_all_m: bool,
}

impl UniformReport {
    /// `a^m` loses degree iff some bad order divides `m`.
    pub fn defective(&self, m: u64) -> bool {
        self.bad_orders.iter().any(|&n| m % n == 0)
    }
}

/// Largest `n` with `φ(n) <= bound`, using `φ(n) >= sqrt(n / 2)`.
pub fn bad_order_search_limit(k: usize) -> u64 {
    let pairs = (k * k.saturating_sub(1)) as u64;
    2 * pairs * pairs
}

/// `R(x) = Res_y(f(y), f(x y))` has roots `a_j / a_i`; after removing the
/// `k`-fold root 1, each cyclotomic factor `Φ_n` of the quotient is a bad
/// order `n`.
pub fn ratio_polynomial(base: &BasePoly) -> IntPoly {
    let k = base.degree();
    let r = resultant(
        &BivarPoly::from_inner(&base.poly),
        &BivarPoly::scaled_argument(&base.poly),
    );
    let x_minus_1 = IntPoly::x_pow_minus(1, 1);
    r.div_exact(&x_minus_1.pow(k as u32))
        .expect("x = 1 is a root of multiplicity k")
}

pub fn uniform_degree_report(base: &BasePoly) -> UniformReport {
    let k = base.degree();
    let reduced = ratio_polynomial(base);
    let max_phi = (k * k.saturating_sub(1)) as u64;
    let mut bad_orders = Vec::new();
    for n in 2..=bad_order_search_limit(k) {
        if cyclo::euler_phi(n) > max_phi {
            continue;
        }
        // Φ_n is irreducible, so a nonconstant gcd means Φ_n divides
        let (_, rem) = reduced.div_rem_monic(&cyclo::cyclotomic(n));
        if rem.is_zero() {
            bad_orders.push(n);
        }
    }
    UniformReport {
        uniform_for_all_m: bad_orders.is_empty(),
        bad_orders,
    }
}

/// First `t` in `0, 1, -1, 2, -2, ...` such that the root moved by `t` has
/// uniform degree.
pub fn find_uniform_shift(base: &BasePoly) -> i64 {
    let mut step: i64 = 0;
    loop {
        let t = if step % 2 == 1 { (step + 1) / 2 } else { -step / 2 };
        if let Some(shifted) = base.shifted(&BigInt::from(t)) {
            if uniform_degree_report(&shifted).uniform_for_all_m {
                return t;
            }
        }
        step += 1;
    }
}

/// The base after applying a shift, for reporting.
pub fn shifted_base(base: &BasePoly, t: i64) -> Option<BasePoly> {
    base.shifted(&BigInt::from(t))
}

/// One divisor's block of `F_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub d: u64,
    pub psi: IntPoly,
    pub irreducible: bool,
    pub factorization: Factorization,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelCycSystem {
    pub base: BasePoly,
    pub m: u64,
    /// `f_m`.
    pub power_poly: IntPoly,
    /// `F_m(x) = f_m(x^m)`.
    pub composed: IntPoly,
    /// Ascending in `d`.
    pub components: Vec<Component>,
    pub pattern_holds: bool,
}

impl RelCycSystem {
    pub fn component(&self, d: u64) -> Option<&Component> {
        self.components.iter().find(|c| c.d == d)
    }

    /// Count of irreducible factors of `F_m`, with multiplicity.
    pub fn factor_count(&self) -> usize {
        self.components
            .iter()
            .map(|c| c.factorization.count_with_multiplicity())
            .sum()
    }

    /// The factorization theorem is stated for `m > 2`; smaller `m` still
    /// work but are flagged.
    pub fn outside_theorem_hypotheses(&self) -> bool {
        self.m <= 2
    }
}

/// `Ψ_d` for every `d | m`, without factoring.
fn relative_blocks(base: &BasePoly, m: u64) -> Result<Vec<(u64, IntPoly)>, RelCycError> {
    if m == 0 {
        return Err(RelCycError::ZeroExponent);
    }
    let mut blocks: Vec<(u64, IntPoly)> = Vec::new();
    for d in cyclo::divisors(m).iter() {
        let composed = build_f(base, d)?;
        let lower: IntPoly = blocks
            .iter()
            .filter(|(e, _)| d % e == 0)
            .map(|(_, psi)| psi)
            .product();
        let psi = composed
            .div_exact(&lower)
            .map_err(|_| RelCycError::InternalInconsistency(d))?;
        blocks.push((d, psi));
    }
    Ok(blocks)
}

pub fn relative_factorization(
    base: &BasePoly,
    m: u64,
    seed: u64,
) -> Result<RelCycSystem, RelCycError> {
    let blocks = relative_blocks(base, m)?;
    let power_poly = power_min_poly(base, m);
    let composed = power_poly.substitute_power(m as usize);
    let mut components = Vec::with_capacity(blocks.len());
    for (d, psi) in blocks {
        let factorization = factor_over_z(&psi, seed).expect("Ψ_d is nonzero");
        components.push(Component {
            d,
            irreducible: factorization.is_single_irreducible(),
            psi,
            factorization,
        });
    }
    let pattern_holds = components.iter().all(|c| c.irreducible);
    Ok(RelCycSystem {
        base: base.clone(),
        m,
        power_poly,
        composed,
        components,
        pattern_holds,
    })
}

/// `Ψ_m` through Möbius inversion: the product of `f_d(x^d)^μ(m/d)` over
/// `d | m`.
pub fn mobius_phi(base: &BasePoly, m: u64) -> Result<IntPoly, RelCycError> {
    if m == 0 {
        return Err(RelCycError::ZeroExponent);
    }
    let mut num = IntPoly::one();
    let mut den = IntPoly::one();
    for d in cyclo::divisors(m).iter() {
        let mu = cyclo::mobius(m / d);
        if mu == 0 {
            continue;
        }
        let term = build_f(base, d)?;
        if mu > 0 {
            num = &num * &term;
        } else {
            den = &den * &term;
        }
    }
    num.div_exact(&den)
        .map_err(|_| RelCycError::InternalInconsistency(m))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Disjointness {
    /// No prime divides both `disc(f)` and `m`, so `Q(a)` and the `m`-th
    /// cyclotomic field share no ramified prime and meet only in `Q`.
    Disjoint,
    /// The sufficient condition does not apply; nothing is claimed.
    Unknown,
}

pub fn disjointness_sufficient(base: &BasePoly, m: u64) -> Disjointness {
    let disc = if base.degree() == 1 {
        BigInt::from(1)
    } else {
        discriminant(&base.poly).abs()
    };
    disjointness_from_disc(&disc, m)
}

fn disjointness_from_disc(disc: &BigInt, m: u64) -> Disjointness {
    if disc.gcd(&BigInt::from(m)) == BigInt::from(1) {
        Disjointness::Disjoint
    } else {
        Disjointness::Unknown
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurveyOutcome {
    Computed {
        factor_count: usize,
        pattern_holds: bool,
    },
    /// Some `f_d` with `d | m` is not squarefree.
    Defective,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurveyRow {
    pub m: u64,
    pub tau: u64,
    pub outcome: SurveyOutcome,
    pub disjointness: Disjointness,
}

/// One row per `m` in `1..=m_max` comparing the factor count of `F_m` with
/// the divisor count of `m`.
pub fn survey(base: &BasePoly, m_max: u64, seed: u64) -> Result<Vec<SurveyRow>, RelCycError> {
    if m_max == 0 {
        return Err(RelCycError::ZeroExponent);
    }
    let disc = if base.degree() == 1 {
        BigInt::from(1)
    } else {
        discriminant(&base.poly).abs()
    };
    let mut rows = Vec::with_capacity(m_max as usize);
    for m in 1..=m_max {
        let outcome = match relative_factorization(base, m, seed) {
            Ok(sys) => SurveyOutcome::Computed {
                factor_count: sys.factor_count(),
                pattern_holds: sys.pattern_holds,
            },
            Err(RelCycError::DefectivePower(_)) => SurveyOutcome::Defective,
            Err(e) => return Err(e),
        };
        rows.push(SurveyRow {
            m,
            tau: tau(m),
            outcome,
            disjointness: disjointness_from_disc(&disc, m),
        });
    }
    Ok(rows)
}
