#![allow(dead_code)]

pub mod numeric;

use num_bigint::BigInt;
use relcyc_core::{BasePoly, IntPoly};

pub fn p(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

pub fn base(c: &[i64]) -> BasePoly {
    BasePoly::new(p(c)).expect("corpus base is monic irreducible")
}

pub fn big(s: &str) -> BigInt {
    s.parse().unwrap()
}

/// x^6 + 3x^5 - 2x^4 - 9x^3 + 5x + 1.
pub const SEXTIC_F: [i64; 7] = [1, 5, 0, -9, -2, 3, 1];
/// x^6 + 3x^5 + 5x^4 + 5x^3 + 5x^2 + 3x + 1.
pub const SEXTIC_G: [i64; 7] = [1, 3, 5, 5, 5, 3, 1];

/// Small bases of degree <= 4 together with their bad orders, which were
/// computed independently (sympy) from the root ratios.
pub fn small_corpus() -> Vec<(Vec<i64>, Vec<u64>)> {
    vec![
        (vec![-1, 1], vec![]),
        (vec![2, 1], vec![]),
        (vec![1, 0, 1], vec![2]),
        (vec![2, -2, 1], vec![4]),
        (vec![-1, -2, 1], vec![]),
        (vec![1, 1, 1], vec![3]),
        (vec![-3, 0, 1], vec![2]),
        (vec![1, -1, 1], vec![3]),
        (vec![-1, -1, 1], vec![]),
        (vec![-2, 0, 0, 1], vec![3]),
        (vec![-1, -1, 0, 1], vec![]),
        (vec![1, 0, 0, 0, 1], vec![2, 4]),
        (vec![1, 0, -10, 0, 1], vec![2]),
        (vec![5, -4, 1], vec![]),
        (vec![-2, 0, 0, 0, 1], vec![2, 4]),
    ]
}
