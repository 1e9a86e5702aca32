//! Exact integer polynomial algebra for relative cyclotomic polynomials.
//!
//! Given a monic irreducible `f` with root `a`, the polynomial
//! `F_m(x) = f_m(x^m)` (where `f_m` is the minimal polynomial of `a^m`)
//! splits into one block `Ψ_d` per divisor `d | m`. Under the right
//! hypotheses every block is irreducible of degree `deg f * φ(d)`, and for
//! `f = x - 1` the blocks are the classical cyclotomic polynomials.
//!
//! The crate is `no_std` and only needs `alloc`.
//!
//! - [`zpoly`]: dense `Z[x]` arithmetic, gcd, resultants, discriminants.
//! - [`zfactor`]: factorization modulo primes and over the integers.
//! - [`cyclo`]: divisors, totient, Möbius function, `Φ_n`.
//! - [`relcyc`]: power minimal polynomials, the blocks `Ψ_d`, uniform degree.
//! - [`galois`]: splitting-pattern test for Galois polynomials.
#![no_std]

extern crate alloc;

pub mod cyclo;
pub mod galois;
pub mod relcyc;
pub mod zfactor;
pub mod zpoly;

pub use relcyc::{BasePoly, RelCycError, RelCycSystem};
pub use zfactor::Factorization;
pub use zpoly::IntPoly;
