//! Exact arithmetic for powers of Euler's q-series.
//!
//! The central object is the expansion of eta products
//! `prod_d prod_m (1 - q^(d*m))^(r_d)` with exact integer coefficients, together
//! with the multiplicative closed forms that the pure powers `(1 - q^m)^l`
//! admit for small `l`. The crate has five layers:
//!
//! - [`series`]: sparse pentagonal and Jacobi base series and exact convolution.
//! - [`arith`]: sieving, factorization, and the quadratic-form representations
//!   of primes (`p = u^2 + v^2`, `p = x^2 + 3y^2`, `4p = z^2 + 27w^2`).
//! - [`family`]: the per-family rules `f(p^r)` and the coefficient maps
//!   `a_n = f(An + B) / scale`, including the `Z[sqrt(-3)]`-valued case.
//! - [`moments`]: prefix statistics of coefficient sequences and their
//!   normalization against the known asymptotic laws.
//! - [`analytic`]: Euler products over arithmetic progressions and the three
//!   weight-3 L-values at `s = 2`.
//!
//! The crate is `no_std` (with `alloc`); IO, serialization, and the command
//! line live in the companion `etapowers` crate.

#![cfg_attr(not(test), no_std)]
#![allow(clippy::excessive_precision)]
#![allow(clippy::manual_is_multiple_of)]
#![allow(clippy::int_plus_one)]
#![allow(clippy::manual_div_ceil)]

extern crate alloc;

pub mod analytic;
pub mod arith;
mod error;
pub mod family;
pub mod moments;
pub mod series;

pub use error::Error;
