//! Hook-length polynomials in `b`: the Nekrasov–Okounkov product, truncated
//! hook sums, restricted colored sums, and their low-order comparison.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::colored::binomial;
use crate::partitions::for_each_partition;
use crate::series::{check_order, symbolic_binomial_pow, BPolynomial, Coefficient, EtaQuotient, TruncatedSeries};
use crate::{Error, Result};

/// Default order ceiling for [`nekrasov_okounkov_series`].
pub const DEFAULT_NO_BOUND: usize = 15;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn one_minus_b() -> BPolynomial {
    BPolynomial::from_ints(&[1, -1])
}

/// `Π_{n>=1} (1 - q^n)^{b-1}` to `q^order`, refusing orders above `bound`.
pub fn nekrasov_okounkov_series_bounded(order: usize, bound: usize) -> Result<TruncatedSeries<BPolynomial>> {
    if order > bound {
        return Err(Error::OrderLimit { order, limit: bound });
    }
    check_order(order)?;
    let alpha = BPolynomial::from_ints(&[-1, 1]);
    let mut acc = TruncatedSeries::one(order);
    for n in 1..=order {
        acc = acc.mul(&symbolic_binomial_pow(n, &alpha, order));
    }
    Ok(acc)
}

pub fn nekrasov_okounkov_series(order: usize) -> Result<TruncatedSeries<BPolynomial>> {
    nekrasov_okounkov_series_bounded(order, DEFAULT_NO_BOUND)
}

/// Hook cutoff for [`hook_poly_sum`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Cutoff {
    Finite(usize),
    Infinite,
}

impl Cutoff {
    fn admits(&self, h: usize) -> bool {
        match self {
            Cutoff::Finite(m) => h <= *m,
            Cutoff::Infinite => true,
        }
    }
}

/// `Σ_{λ ⊢ n} Π_{cells, h <= cutoff} (1 - b/h²)`.
pub fn hook_poly_sum(n: usize, cutoff: Cutoff) -> BPolynomial {
    let mut total = BPolynomial::zero();
    for_each_partition(n, |parts| {
        total = &total + &hook_contribution(parts, cutoff);
    });
    total
}

/// One partition's term of [`hook_poly_sum`].
pub fn hook_contribution(parts: &[usize], cutoff: Cutoff) -> BPolynomial {
    let census = crate::partitions::Partition::from_unsorted(parts.to_vec()).hook_census();
    let mut acc = BPolynomial::one();
    for (&h, &count) in &census.multiset {
        if cutoff.admits(h) {
            acc = &acc * &BPolynomial::one_minus_var_over((h * h) as i64).pow(count as u32);
        }
    }
    acc
}

/// Runs of equal parts as `(size, frequency)`.
fn frequencies(parts: &[usize]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &p in parts {
        match out.last_mut() {
            Some((s, f)) if *s == p => *f += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

/// `Σ_{λ ⊢ n} Π_{sizes j} (1 - b/1)(1 - b/2)...(1 - b/min(λ_j, m))` where
/// `λ_j` is the frequency of `j`.
pub fn restricted_sum(n: usize, m: usize) -> Result<BPolynomial> {
    if m == 0 {
        return Err(Error::InvalidArgument("restricted sum needs m >= 1".into()));
    }
    let factors: Vec<BPolynomial> = {
        let mut acc = BPolynomial::one();
        let mut v = vec![acc.clone()];
        for t in 1..=m {
            acc = &acc * &BPolynomial::one_minus_var_over(t as i64);
            v.push(acc.clone());
        }
        v
    };
    let mut total = BPolynomial::zero();
    for_each_partition(n, |parts| {
        let mut term = BPolynomial::one();
        for (_, f) in frequencies(parts) {
            term = &term * &factors[f.min(m)];
        }
        total = &total + &term;
    });
    Ok(total)
}

/// `Σ_{λ ⊢ n} (1-b)^{ℓ₀(λ)} Π_{λ_j >= 2} (1 - (b/2)(λ_j - 1))`, the exact
/// coefficient of `C_{1-b,2}`.
pub fn c1b2_exact_sum(n: usize) -> BPolynomial {
    let mut total = BPolynomial::zero();
    for_each_partition(n, |parts| {
        let mut term = BPolynomial::one();
        for (_, f) in frequencies(parts) {
            term = &term * &one_minus_b();
            if f >= 2 {
                term = &term * &BPolynomial::linear(rat(1, 1), rat(-(f as i64 - 1), 2));
            }
        }
        total = &total + &term;
    });
    total
}

/// `Σ_{λ ⊢ n} (1-b)^{ℓ₀(λ)} Π_{λ_j >= 2} (1 - (b/2)(λ_j - 1) + ((b²+b)/6) binom(λ_j - 1, 2))`.
///
/// This is the exact coefficient of `C_{1-b,3}`; it agrees with
/// `restricted_sum(n, 3)` only while every frequency is at most 3.
pub fn c1b3_variant_sum(n: usize) -> BPolynomial {
    let mut total = BPolynomial::zero();
    for_each_partition(n, |parts| {
        let mut term = BPolynomial::one();
        for (_, f) in frequencies(parts) {
            term = &term * &one_minus_b();
            if f >= 2 {
                let f1 = f as i64 - 1;
                let c2 = f1 * (f1 - 1) / 2;
                let inner = BPolynomial::new(vec![rat(1, 1), rat(-f1, 2) + rat(c2, 6), rat(c2, 6)]);
                term = &term * &inner;
            }
        }
        total = &total + &term;
    });
    total
}

/// `C_{1-b,j}(q) = Π (Σ_{i<=j} binom(-b-j+i, i) q^{in}) / (1 - q^n)^j`,
/// i.e. the collected product form with `k = 1 - b`.
pub fn c1b_series(j: u32, order: usize) -> Result<TruncatedSeries<BPolynomial>> {
    if j == 0 {
        return Err(Error::InvalidColors { k: 0, j });
    }
    check_order(order)?;
    // binom(x, i) with x = -b - j + i, as a polynomial in b
    let numer: Vec<BPolynomial> = (0..=j as i64)
        .map(|i| {
            let x = BPolynomial::from_ints(&[i - j as i64, -1]);
            let mut acc = BPolynomial::one();
            for t in 0..i {
                acc = &acc * &(&x - &BPolynomial::from_ints(&[t]));
            }
            acc.div_int((1..=i).product::<i64>().max(1)).expect("nonzero factorial")
        })
        .collect();
    let mut c = vec![BPolynomial::zero(); order + 1];
    c[0] = BPolynomial::one();
    for n in 1..=order {
        for idx in (0..=order).rev() {
            let mut acc = c[idx].clone();
            for (i, p) in numer.iter().enumerate().skip(1) {
                let Some(src) = idx.checked_sub(i * n) else { break };
                if !c[src].is_zero() {
                    acc = &acc + &(p * &c[src]);
                }
            }
            c[idx] = acc;
        }
    }
    let denom = EtaQuotient::new([(1, -(j as i64))])?.expand(order)?;
    Ok(TruncatedSeries::from_coeffs(c).mul(&crate::series::to_bpoly_series(&denom)))
}

/// `∏ (1 - (b+1)q^n + ((b²+b)/2) q^{2n}) / (1 - q^n)²`.
pub fn c1b2_product_series(order: usize) -> Result<TruncatedSeries<BPolynomial>> {
    c1b_series(2, order)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Correction {
    None,
    Lambda4,
    /// right side replaced by [`c1b3_variant_sum`]; only with `m = 3`
    Variant,
}

impl fmt::Display for Correction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Correction::None => "none",
            Correction::Lambda4 => "lambda4",
            Correction::Variant => "variant",
        })
    }
}

/// Low-order agreement between a truncated hook sum and a restricted sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookComparison {
    pub n: usize,
    pub cutoff: usize,
    pub correction: Correction,
    pub left: BPolynomial,
    pub right: BPolynomial,
    /// highest `d` with the coefficients of `b^0..b^d` equal; `None` when
    /// even the constant terms differ
    pub matched_orders: Option<usize>,
}

impl HookComparison {
    pub fn identical(&self) -> bool {
        self.left == self.right
    }

    pub fn difference(&self) -> BPolynomial {
        &self.left - &self.right
    }

    /// Whether `b²(1 - b)` divides `left - right`.
    pub fn difference_divisible_by_b2_one_minus_b(&self) -> bool {
        let d = BPolynomial::from_ints(&[0, 0, 1, -1]);
        self.difference().is_divisible_by(&d)
    }
}

fn matched_orders(a: &BPolynomial, b: &BPolynomial) -> Option<usize> {
    let top = a.degree().unwrap_or(0).max(b.degree().unwrap_or(0));
    let first_diff = (0..=top).find(|&i| a.coeff(i) != b.coeff(i));
    match first_diff {
        None => Some(top),
        Some(0) => None,
        Some(i) => Some(i - 1),
    }
}

/// Number of parts equal to 4, summed over all partitions of `n`.
fn total_fours(n: usize) -> u64 {
    let mut total = 0u64;
    for_each_partition(n, |parts| total += parts.iter().filter(|&&p| p == 4).count() as u64);
    total
}

pub fn compare_low_order(n: usize, m: usize, correction: Correction) -> Result<HookComparison> {
    if m == 0 {
        return Err(Error::InvalidArgument("cutoff must be at least 1".into()));
    }
    if correction == Correction::Lambda4 && m != 2 {
        return Err(Error::InvalidArgument("the lambda4 correction applies only to m = 2".into()));
    }
    if correction == Correction::Variant && m != 3 {
        return Err(Error::InvalidArgument("the variant formula applies only to m = 3".into()));
    }
    let left = hook_poly_sum(n, Cutoff::Finite(m));
    let mut right = match correction {
        Correction::Variant => c1b3_variant_sum(n),
        _ => restricted_sum(n, m)?,
    };
    if correction == Correction::Lambda4 {
        // λ₄ (b² - b³)/16 summed over λ
        let corr = BPolynomial::new(vec![rat(0, 1), rat(0, 1), rat(1, 16), rat(-1, 16)]);
        right = &right + &corr.scale(&BigRational::from_integer(BigInt::from(total_fours(n))));
    }
    let matched = matched_orders(&left, &right);
    Ok(HookComparison { n, cutoff: m, correction, left, right, matched_orders: matched })
}

/// `Σ_λ λ₄ = Σ_λ #{sizes with frequency >= 4}` over `λ ⊢ n`.
pub fn lambda4_frequency_identity(n: usize) -> bool {
    let mut high = 0u64;
    for_each_partition(n, |parts| {
        high += frequencies(parts).iter().filter(|(_, f)| *f >= 4).count() as u64;
    });
    total_fours(n) == high
}

/// Verbatim comparison of `Π 1/(1-q^n)³` with `Σ binom(n+2, 2) q^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Binom3Check {
    pub expansion: Vec<BigInt>,
    pub claimed: Vec<BigInt>,
}

impl Binom3Check {
    pub fn holds(&self) -> bool {
        self.expansion == self.claimed
    }

    pub fn first_mismatch(&self) -> Option<usize> {
        self.expansion.iter().zip(&self.claimed).position(|(a, b)| a != b)
    }
}

pub fn binom3_identity_check(order: usize) -> Result<Binom3Check> {
    let expansion = EtaQuotient::new([(1, -3)])?.expand(order)?.into_coeffs();
    let claimed = (0..=order as i64).map(|n| binomial(n + 2, 2)).collect();
    Ok(Binom3Check { expansion, claimed })
}

/// First `n <= order` where the product side and the hook sum disagree.
pub fn han_identity_mismatch(order: usize) -> Result<Option<usize>> {
    let series = nekrasov_okounkov_series_bounded(order, order)?;
    Ok((0..=order).find(|&n| *series.coeff(n) != hook_poly_sum(n, Cutoff::Infinite)))
}
