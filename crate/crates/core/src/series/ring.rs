use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact coefficient ring for [`TruncatedSeries`](super::TruncatedSeries).
///
/// Implementations must never round. `div_int` and `inverse` return `None`
/// when the result does not exist in the ring.
pub trait Coefficient: Clone + PartialEq + Debug + Send + Sync + Zero + One {
    fn from_int(v: i64) -> Self;
    fn add_in(&mut self, rhs: &Self);
    fn sub_in(&mut self, rhs: &Self);
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn div_int(&self, d: i64) -> Option<Self>;
    fn inverse(&self) -> Option<Self>;

    fn mul_add_in(&mut self, a: &Self, b: &Self) {
        let p = a.mul_ref(b);
        self.add_in(&p);
    }
}

impl Coefficient for BigInt {
    fn from_int(v: i64) -> Self {
        BigInt::from(v)
    }

    fn add_in(&mut self, rhs: &Self) {
        *self += rhs;
    }

    fn sub_in(&mut self, rhs: &Self) {
        *self -= rhs;
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn div_int(&self, d: i64) -> Option<Self> {
        if d == 0 {
            return None;
        }
        let (q, r) = self.div_rem(&BigInt::from(d));
        r.is_zero().then_some(q)
    }

    fn inverse(&self) -> Option<Self> {
        (self.abs().is_one()).then(|| self.clone())
    }

    fn mul_add_in(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
}

impl Coefficient for BigRational {
    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn add_in(&mut self, rhs: &Self) {
        *self += rhs;
    }

    fn sub_in(&mut self, rhs: &Self) {
        *self -= rhs;
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn div_int(&self, d: i64) -> Option<Self> {
        (d != 0).then(|| self / BigRational::from_integer(BigInt::from(d)))
    }

    fn inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}
