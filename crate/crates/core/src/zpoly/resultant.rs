//! Resultants of polynomials in an inner variable `y` whose coefficients
//! live in `Z[x]`, computed as the determinant of the Sylvester matrix by
//! fraction-free (Bareiss) elimination over `Z[x]`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use super::IntPoly;

/// A polynomial in `y` with coefficients in `Z[x]`, ascending in `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivarPoly {
    coeffs: Vec<IntPoly>,
}

impl BivarPoly {
    pub fn new(mut coeffs: Vec<IntPoly>) -> Self {
        while coeffs.last().is_some_and(IntPoly::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Reads `p` as a polynomial in `y` with constant coefficients.
    pub fn from_inner(p: &IntPoly) -> Self {
        Self::new(p.coeffs().iter().cloned().map(IntPoly::constant).collect())
    }

    /// `x - y^m`.
    pub fn x_minus_y_pow(m: usize) -> Self {
        assert!(m >= 1, "x_minus_y_pow needs m >= 1");
        let mut coeffs = alloc::vec![IntPoly::zero(); m + 1];
        coeffs[0] = IntPoly::x();
        coeffs[m] = IntPoly::constant(-BigInt::one());
        Self::new(coeffs)
    }

    /// `p(x * y)`: the coefficient of `y^i` is `a_i x^i`.
    pub fn scaled_argument(p: &IntPoly) -> Self {
        Self::new(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| IntPoly::monomial(c.clone(), i))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[IntPoly] {
        &self.coeffs
    }

    /// Degree in the inner variable, `None` when zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// `Res_y(p, q) = lc(p)^deg(q) * prod over roots b of p of q(b)`, as a
/// polynomial in the outer variable. Zero if either input is zero.
pub fn resultant(p: &BivarPoly, q: &BivarPoly) -> IntPoly {
    let (Some(n), Some(m)) = (p.degree(), q.degree()) else {
        return IntPoly::zero();
    };
    let size = n + m;
    if size == 0 {
        return IntPoly::one();
    }
    let mut mat = alloc::vec![alloc::vec![IntPoly::zero(); size]; size];
    for i in 0..m {
        for (j, c) in p.coeffs.iter().rev().enumerate() {
            mat[i][i + j] = c.clone();
        }
    }
    for i in 0..n {
        for (j, c) in q.coeffs.iter().rev().enumerate() {
            mat[m + i][i + j] = c.clone();
        }
    }
    bareiss_det(mat)
}

fn bareiss_det(mut mat: Vec<Vec<IntPoly>>) -> IntPoly {
    let n = mat.len();
    let mut negate = false;
    let mut prev = IntPoly::one();
    for k in 0..n.saturating_sub(1) {
        if mat[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !mat[r][k].is_zero()) else {
                return IntPoly::zero();
            };
            mat.swap(k, r);
            negate = !negate;
        }
        let (top, rest) = mat.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in rest.iter_mut() {
            let lead = core::mem::take(&mut row[k]);
            for j in k + 1..n {
                let num = &(&row[j] * pivot) - &(&lead * &pivot_row[j]);
                row[j] = if prev.is_one() {
                    num
                } else {
                    num.div_exact(&prev)
                        .expect("Bareiss elimination divides exactly")
                };
            }
        }
        prev = mat[k][k].clone();
    }
    let det = mat.pop().and_then(|mut r| r.pop()).unwrap_or_else(IntPoly::one);
    if negate {
        -det
    } else {
        det
    }
}

/// `(-1)^(d(d-1)/2) * Res(p, p') / lc(p)`.
pub fn discriminant(p: &IntPoly) -> BigInt {
    let d = p.degree().expect("discriminant of zero");
    assert!(d >= 1, "discriminant needs degree >= 1");
    let res = resultant(&BivarPoly::from_inner(p), &BivarPoly::from_inner(&p.derivative()));
    debug_assert!(res.is_constant());
    let disc = res.constant_term() / p.leading_coeff().expect("nonzero");
    if (d * (d - 1) / 2) % 2 == 1 {
        -disc
    } else {
        disc
    }
}
