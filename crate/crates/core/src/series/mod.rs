//! Truncated formal power series over exact coefficient rings.

mod bpoly;
mod eta;
mod ring;
mod truncated;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use bpoly::BPolynomial;
pub use eta::{eta_expand, pentagonal, EtaExpr, EtaQuotient, EtaTerm};
pub use ring::Coefficient;
pub use truncated::{residue, ModComparison, ModFailure, TruncatedSeries};

use crate::{Error, Result};

/// Environment variable overriding [`DEFAULT_MAX_ORDER`].
pub const MAX_ORDER_ENV: &str = "KJPART_MAX_ORDER";

/// Largest series order accepted by default.
pub const DEFAULT_MAX_ORDER: usize = 100_000;

/// The configured order limit, read from `KJPART_MAX_ORDER` when set.
pub fn max_order() -> usize {
    std::env::var(MAX_ORDER_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_ORDER)
}

pub fn check_order(order: usize) -> Result<()> {
    let limit = max_order();
    if order > limit {
        return Err(Error::OrderLimit { order, limit });
    }
    Ok(())
}

/// `(1 - q^scale)^alpha = Σ_i binom(alpha, i) (-1)^i q^{i·scale}` with
/// `binom(alpha, i) = alpha (alpha - 1) ... (alpha - i + 1) / i!` computed
/// exactly in `Q[b]`.
pub fn symbolic_binomial_pow(scale: usize, alpha: &BPolynomial, order: usize) -> TruncatedSeries<BPolynomial> {
    assert!(scale >= 1, "scale must be positive");
    let mut terms = Vec::new();
    let mut binom = BPolynomial::one();
    let mut i = 0usize;
    while i * scale <= order {
        let signed = if i.is_multiple_of(2) { binom.clone() } else { -&binom };
        terms.push((i * scale, signed));
        // binom(alpha, i+1) = binom(alpha, i) · (alpha - i) / (i + 1)
        let shifted = alpha - &BPolynomial::from_ints(&[i as i64]);
        binom = (&binom * &shifted).div_int(i as i64 + 1).expect("nonzero divisor");
        if binom.is_zero() {
            break;
        }
        i += 1;
    }
    TruncatedSeries::from_terms(order, terms)
}

/// Lifts an integer series into `Q[b]`.
pub fn to_bpoly_series(s: &TruncatedSeries<BigInt>) -> TruncatedSeries<BPolynomial> {
    s.map(|c| BPolynomial::from_bigints([c.clone()]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn b_minus_1() -> BPolynomial {
        BPolynomial::from_ints(&[-1, 1])
    }

    #[test]
    fn alpha_one_is_binomial() {
        let s = symbolic_binomial_pow(3, &BPolynomial::one(), 10);
        let mut expect = TruncatedSeries::zero(10);
        expect = expect.add(&TruncatedSeries::one(10));
        expect = expect.sub(&TruncatedSeries::monomial(10, 3, BPolynomial::one()));
        assert_eq!(s, expect);
    }

    #[test]
    fn first_terms_of_hook_product() {
        let order = 2;
        let p = symbolic_binomial_pow(1, &b_minus_1(), order).mul(&symbolic_binomial_pow(2, &b_minus_1(), order));
        // (b^2 - 5b + 4) / 2
        let half = |n: i64| BigRational::new(BigInt::from(n), BigInt::from(2));
        assert_eq!(p.coeff(2), &BPolynomial::new(vec![half(4), half(-5), half(1)]));
        assert_eq!(p.coeff(1), &BPolynomial::from_ints(&[1, -1]));
    }

    #[test]
    fn sign_of_linear_term() {
        let one_minus_b = BPolynomial::from_ints(&[1, -1]);
        let s = symbolic_binomial_pow(1, &one_minus_b, 3);
        assert_eq!(s.coeff(1), &BPolynomial::from_ints(&[-1, 1]));
    }

    #[test]
    fn integer_alpha_terminates() {
        let s = symbolic_binomial_pow(1, &BPolynomial::from_ints(&[2]), 6);
        let expect: Vec<BPolynomial> =
            [1, -2, 1, 0, 0, 0, 0].iter().map(|&c| BPolynomial::from_ints(&[c])).collect();
        assert_eq!(s.coeffs(), expect.as_slice());
    }

    #[test]
    fn order_limit() {
        assert!(check_order(10).is_ok());
        assert!(matches!(check_order(usize::MAX), Err(Error::OrderLimit { .. })));
    }
}
