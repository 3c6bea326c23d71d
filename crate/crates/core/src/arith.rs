//! Arithmetic functions on the naturals.
//!
//! Factorization is plain trial division; the arguments seen here stay well
//! below 10^7.

use num_bigint::BigUint;
use num_traits::{One, Pow};

use crate::{Error, Result};

/// Canonical prime factorization: primes strictly increasing, exponents >= 1.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn value(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// `d(n) = Π (e_i + 1)`.
    pub fn divisor_count(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| u64::from(e) + 1).product()
    }
}

pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::ZeroArgument { what: "factorize" });
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut push = |p: u64, rest: &mut u64| {
        let mut e = 0;
        while (*rest).is_multiple_of(p) {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    push(2, &mut rest);
    push(3, &mut rest);
    // 6k ± 1 wheel
    let mut p = 5;
    while p * p <= rest {
        push(p, &mut rest);
        push(p + 2, &mut rest);
        p += 6;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { factors })
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// `σ_r(n) = Σ_{d | n} d^r`, using `Π (p^{r(e+1)} - 1) / (p^r - 1)` for
/// `r >= 1` and `Π (e + 1)` for `r = 0`.
pub fn sigma(r: u32, n: u64) -> Result<BigUint> {
    let fact = factorize(n)?;
    if r == 0 {
        return Ok(BigUint::from(fact.divisor_count()));
    }
    let mut acc = BigUint::one();
    for &(p, e) in fact.factors() {
        let pr: BigUint = Pow::pow(BigUint::from(p), r);
        let num: BigUint = Pow::pow(&pr, e + 1) - BigUint::one();
        acc *= num / (pr - BigUint::one());
    }
    Ok(acc)
}

pub fn divisor_count(n: u64) -> Result<u64> {
    Ok(factorize(n)?.divisor_count())
}

/// Largest `e` with `p^e | n`.
pub fn valuation(p: u64, n: u64) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Err(Error::ZeroArgument { what: "valuation" });
    }
    let mut e = 0;
    let mut rest = n;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    Ok(e)
}

/// Number of primes appearing to odd order in `n`; zero exactly for squares.
pub fn odd_order_prime_count(n: u64) -> Result<usize> {
    Ok(factorize(n)?.factors().iter().filter(|&&(_, e)| e % 2 == 1).count())
}

pub fn is_square(n: u64) -> bool {
    let r = n.isqrt();
    r * r == n
}

pub fn is_twice_square(n: u64) -> bool {
    n.is_multiple_of(2) && is_square(n / 2)
}

/// Whether `r` is a nonzero square modulo the odd prime `p`.
pub fn is_quadratic_residue(r: u64, p: u64) -> bool {
    let r = r % p;
    r != 0 && (1..p).any(|x| x * x % p == r)
}

/// `d(0..=n)` by a divisor sieve; index 0 holds 0.
pub fn divisor_count_table(n: usize) -> Vec<u64> {
    let mut d = vec![0u64; n + 1];
    for a in 1..=n {
        for m in (a..=n).step_by(a) {
            d[m] += 1;
        }
    }
    d
}

/// `σ_1(0..=n)` by a divisor sieve; index 0 holds 0.
pub fn sigma1_table(n: usize) -> Vec<u64> {
    let mut s = vec![0u64; n + 1];
    for a in 1..=n {
        for m in (a..=n).step_by(a) {
            s[m] += a as u64;
        }
    }
    s
}
