//! Exact evaluation of terminating hypergeometric series and the harmonic
//! number identities that fall out of them under differentiation at `x = 0`.
//!
//! Everything here is exact: values are [`Rational`]s, and the derivative
//! operator `D0` is realised by first-order [`Dual`] numbers. The crate is
//! `no_std` and only needs `alloc`.
//!
//! - [`exactnum`]: rationals, dual numbers and the [`Scalar`] abstraction.
//! - [`combinatorics`]: harmonic numbers, Pochhammer symbols, binomials.
//! - [`hyperseries`]: `(1+p)F(q)` evaluation and the classical summation oracles.
//! - [`identities`]: the executable registry of harmonic number identities.
//! - [`limits`]: reflection families and decay probes for the limiting relation.

#![no_std]

extern crate alloc;

pub mod combinatorics;
mod error;
pub mod exactnum;
pub mod hyperseries;
pub mod identities;
pub mod limits;

pub use error::{Error, Result};
pub use exactnum::{d0_eval, rat, Dual, Rational, Scalar};
