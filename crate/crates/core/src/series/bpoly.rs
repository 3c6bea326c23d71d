//! Univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Coefficient;

/// Exact-rational polynomial in one indeterminate, stored in ascending
/// order of degree with no trailing zero coefficients.
///
/// The indeterminate is `b` in the hook-length setting and `u = k - 1` for
/// the `f_n(u)` polynomials; [`BPolynomial::display_in`] picks the name.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BPolynomial {
    coeffs: Vec<BigRational>,
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl BPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        BPolynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn from_bigints<I: IntoIterator<Item = BigInt>>(coeffs: I) -> Self {
        Self::new(coeffs.into_iter().map(BigRational::from_integer).collect())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// `c0 + c1 * x`.
    pub fn linear(c0: BigRational, c1: BigRational) -> Self {
        Self::new(vec![c0, c1])
    }

    /// `1 - x / d`, the hook factor `1 - b/h^2` when `d = h^2`.
    pub fn one_minus_var_over(d: i64) -> Self {
        Self::linear(rat(1), -BigRational::new(BigInt::one(), BigInt::from(d)))
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division over Q. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let Some(top) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if top < dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); top - dd + 1];
        for i in (0..=top - dd).rev() {
            let c = &rem[i + dd] / lead;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn is_divisible_by(&self, divisor: &Self) -> bool {
        self.div_rem(divisor).1.is_zero()
    }

    /// Canonical text form: descending powers, rationals as `p/q`, e.g.
    /// `1/2*b^2 - 5/2*b + 2`.
    pub fn display_in(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mag = c.abs();
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }
}

impl fmt::Display for BPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("b"))
    }
}

impl Add<&BPolynomial> for &BPolynomial {
    type Output = BPolynomial;
    fn add(self, rhs: &BPolynomial) -> BPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        BPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&BPolynomial> for &BPolynomial {
    type Output = BPolynomial;
    fn sub(self, rhs: &BPolynomial) -> BPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        BPolynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&BPolynomial> for &BPolynomial {
    type Output = BPolynomial;
    fn mul(self, rhs: &BPolynomial) -> BPolynomial {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return BPolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        BPolynomial::new(out)
    }
}

impl Neg for &BPolynomial {
    type Output = BPolynomial;
    fn neg(self) -> BPolynomial {
        BPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for BPolynomial {
            type Output = BPolynomial;
            fn $m(self, rhs: BPolynomial) -> BPolynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&BPolynomial> for BPolynomial {
            type Output = BPolynomial;
            fn $m(self, rhs: &BPolynomial) -> BPolynomial {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for BPolynomial {
    type Output = BPolynomial;
    fn neg(self) -> BPolynomial {
        -&self
    }
}

impl Zero for BPolynomial {
    fn zero() -> Self {
        BPolynomial { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for BPolynomial {
    fn one() -> Self {
        BPolynomial { coeffs: vec![BigRational::one()] }
    }
}

impl Coefficient for BPolynomial {
    fn from_int(v: i64) -> Self {
        BPolynomial::constant(rat(v))
    }

    fn add_in(&mut self, rhs: &Self) {
        *self = &*self + rhs;
    }

    fn sub_in(&mut self, rhs: &Self) {
        *self = &*self - rhs;
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn div_int(&self, d: i64) -> Option<Self> {
        (d != 0).then(|| self.scale(&BigRational::new(BigInt::one(), BigInt::from(d))))
    }

    fn inverse(&self) -> Option<Self> {
        match self.degree() {
            Some(0) => Some(BPolynomial::constant(self.coeffs[0].recip())),
            _ => None,
        }
    }
}
