use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::Coefficient;
use crate::{Error, Result};

/// Output length above which Cauchy products are split across threads.
const PARALLEL_THRESHOLD: usize = 512;

/// A power series known exactly up to and including `q^order`.
///
/// Binary operations truncate to the smaller of the two orders, so the
/// order of a result always states how far it is actually known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Coefficient> TruncatedSeries<R> {
    /// `coeffs[i]` is the coefficient of `q^i`; the order is `len - 1`.
    /// An empty vector is treated as the zero series of order 0.
    pub fn from_coeffs(mut coeffs: Vec<R>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(R::zero());
        }
        TruncatedSeries { coeffs }
    }

    pub fn from_fn<F: FnMut(usize) -> R>(order: usize, f: F) -> Self {
        TruncatedSeries { coeffs: (0..=order).map(f).collect() }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_| R::zero())
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, R::one())
    }

    /// `c q^exp`, or zero when `exp > order`.
    pub fn monomial(order: usize, exp: usize, c: R) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = c;
        }
        s
    }

    /// `Σ c_i q^{e_i}` from sparse terms; terms beyond `order` are dropped.
    pub fn from_terms<I: IntoIterator<Item = (usize, R)>>(order: usize, terms: I) -> Self {
        let mut s = Self::zero(order);
        for (e, c) in terms {
            if e <= order {
                s.coeffs[e].add_in(&c);
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `q^n`. Panics when `n > order`.
    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn get(&self, n: usize) -> Option<&R> {
        self.coeffs.get(n)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        TruncatedSeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn map<S: Coefficient, F: FnMut(&R) -> S>(&self, f: F) -> TruncatedSeries<S> {
        TruncatedSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    fn nonzero_indices(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&i| !self.coeffs[i].is_zero()).collect()
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|a| a.mul_ref(c))
    }

    /// Multiplication by `q^k`; the order is kept.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        Self::from_fn(order, |i| if i >= k { self.coeffs[i - k].clone() } else { R::zero() })
    }

    /// Cauchy product to order `min(N_a, N_b)`.
    ///
    /// The sparser factor drives the inner loop, so multiplying by sparse
    /// series (pentagonal expansions, local factors) stays cheap. Each
    /// output coefficient is summed in the same order whether or not the
    /// work is split across threads.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let (sparse, dense) = {
            let a = self.truncate(order);
            let b = rhs.truncate(order);
            let (na, nb) = (a.nonzero_indices(), b.nonzero_indices());
            if na.len() <= nb.len() {
                ((a, na), b)
            } else {
                ((b, nb), a)
            }
        };
        let (a, nz) = sparse;
        let coeff_at = |n: usize| {
            let mut acc = R::zero();
            for &i in nz.iter().take_while(|&&i| i <= n) {
                let b = &dense.coeffs[n - i];
                if !b.is_zero() {
                    acc.mul_add_in(&a.coeffs[i], b);
                }
            }
            acc
        };
        let coeffs: Vec<R> = if order + 1 >= PARALLEL_THRESHOLD {
            (0..=order).into_par_iter().map(coeff_at).collect()
        } else {
            (0..=order).map(coeff_at).collect()
        };
        TruncatedSeries { coeffs }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        Self::from_fn(order, |i| {
            let mut c = self.coeffs[i].clone();
            c.add_in(&rhs.coeffs[i]);
            c
        })
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        Self::from_fn(order, |i| {
            let mut c = self.coeffs[i].clone();
            c.sub_in(&rhs.coeffs[i]);
            c
        })
    }

    pub fn neg(&self) -> Self {
        self.map(R::neg_ref)
    }

    /// Multiplicative inverse; needs a unit constant term.
    pub fn inverse(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].inverse().ok_or(Error::NonInvertibleConstant)?;
        let nz = self.nonzero_indices();
        let order = self.order();
        let mut out: Vec<R> = Vec::with_capacity(order + 1);
        out.push(inv0.clone());
        for n in 1..=order {
            let mut acc = R::zero();
            for &k in nz.iter().skip_while(|&&k| k == 0).take_while(|&&k| k <= n) {
                acc.mul_add_in(&self.coeffs[k], &out[n - k]);
            }
            out.push(acc.neg_ref().mul_ref(&inv0));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Integer power. Negative exponents invert first.
    ///
    /// With a unit constant term the power comes from the recurrence
    /// `n a_0 b_n = Σ_{k=1}^{n} ((e+1)k - n) a_k b_{n-k}`, which costs
    /// `O(order · nnz)`; otherwise binary exponentiation is used.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let order = self.order();
        if e == 0 {
            return Ok(Self::one(order));
        }
        let Some(inv0) = self.coeffs[0].inverse() else {
            if e < 0 {
                return Err(Error::NonInvertibleConstant);
            }
            return Ok(self.pow_binary(e as u64));
        };
        let base0 = if e > 0 { &self.coeffs[0] } else { &inv0 };
        let mut b0 = R::one();
        for _ in 0..e.unsigned_abs() {
            b0 = b0.mul_ref(base0);
        }
        let nz: Vec<usize> = self.nonzero_indices().into_iter().filter(|&k| k > 0).collect();
        let mut out: Vec<R> = Vec::with_capacity(order + 1);
        out.push(b0);
        for n in 1..=order {
            let mut acc = R::zero();
            for &k in nz.iter().take_while(|&&k| k <= n) {
                let weight = (e + 1) * k as i64 - n as i64;
                if weight == 0 {
                    continue;
                }
                let term = self.coeffs[k].mul_ref(&out[n - k]);
                acc.add_in(&term.mul_ref(&R::from_int(weight)));
            }
            let bn = acc
                .div_int(n as i64)
                .expect("power recurrence: exact division by n")
                .mul_ref(&inv0);
            out.push(bn);
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    fn pow_binary(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Substitution `q -> q^c`. The order is preserved.
    pub fn rescale(&self, c: usize) -> Self {
        assert!(c >= 1, "rescale factor must be positive");
        let order = self.order();
        Self::from_fn(order, |i| if i % c == 0 { self.coeffs[i / c].clone() } else { R::zero() })
    }

    /// `c_B, c_{A+B}, c_{2A+B}, ...` for every index up to the order.
    /// `B >= A` is accepted and simply starts further in.
    pub fn progression(&self, a: usize, b: usize) -> Vec<R> {
        assert!(a >= 1, "progression step must be positive");
        (b..=self.order()).step_by(a).map(|i| self.coeffs[i].clone()).collect()
    }
}

impl<R: Coefficient> Add for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn add(self, rhs: Self) -> TruncatedSeries<R> {
        TruncatedSeries::add(self, rhs)
    }
}

impl<R: Coefficient> Sub for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn sub(self, rhs: Self) -> TruncatedSeries<R> {
        TruncatedSeries::sub(self, rhs)
    }
}

impl<R: Coefficient> Mul for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn mul(self, rhs: Self) -> TruncatedSeries<R> {
        TruncatedSeries::mul(self, rhs)
    }
}

impl<R: Coefficient> Neg for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn neg(self) -> TruncatedSeries<R> {
        TruncatedSeries::neg(self)
    }
}

/// Outcome of a coefficientwise comparison modulo `m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModComparison {
    pub holds: bool,
    /// order actually compared: the smaller of the two inputs
    pub order: usize,
    pub modulus: u64,
    pub first_failure: Option<ModFailure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModFailure {
    pub index: usize,
    pub left_residue: u64,
    pub right_residue: u64,
}

/// Least non-negative residue.
pub fn residue(v: &BigInt, m: u64) -> u64 {
    let r = v.mod_floor(&BigInt::from(m));
    u64::try_from(r).expect("residue below modulus")
}

impl TruncatedSeries<BigInt> {
    /// Checks `a(n) ≡ b(n) (mod m)` for every `n` up to the common order.
    pub fn congruent_mod(&self, rhs: &Self, m: u64) -> Result<ModComparison> {
        if m < 2 {
            return Err(Error::InvalidModulus(m));
        }
        let order = self.order().min(rhs.order());
        let first_failure = (0..=order).find_map(|n| {
            let (l, r) = (residue(&self.coeffs[n], m), residue(&rhs.coeffs[n], m));
            (l != r).then_some(ModFailure { index: n, left_residue: l, right_residue: r })
        });
        Ok(ModComparison { holds: first_failure.is_none(), order, modulus: m, first_failure })
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }
}
