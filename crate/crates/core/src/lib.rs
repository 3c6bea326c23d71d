//! Exact computations around (k,j)-colored partitions.
//!
//! A (k,j)-colored partition is a partition whose parts carry one of `k`
//! colors, with at most `j` distinct colors used for any single part size.
//! `j = 1, k = 2` recovers overpartitions and `j = k` recovers ordinary
//! k-colored partitions.
//!
//! The crate is organised bottom-up:
//!
//! * [`partitions`]: integer partitions, conjugation, hook lengths.
//! * [`arith`]: factorization, divisor sums, valuations.
//! * [`series`]: truncated power series over exact rings, eta-quotients,
//!   polynomials in one variable over the rationals.
//! * [`colored`]: generating functions and brute-force enumeration of
//!   (k,j)-colored partitions, the `f_n(u)` polynomials, the `nu_i`
//!   counts and the marked-overpartition bijection.
//! * [`congruence`]: a registry of congruences and q-series identities and a
//!   verifier that checks them to a bound.
//! * [`hooklen`]: Nekrasov-Okounkov expansions and truncated hook sums.
//!
//! All arithmetic is exact; nothing is ever rounded.

pub mod arith;
pub mod colored;
pub mod congruence;
mod error;
pub mod hooklen;
pub mod partitions;
pub mod series;

pub use error::{Error, Result};
