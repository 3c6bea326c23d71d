mod common;

use kjpart::arith::{divisor_count, divisor_count_table, factorize, odd_order_prime_count, sigma, sigma1_table, valuation};
use kjpart::colored::{bijection_backward, bijection_forward, ckj_series, marked_overpartitions};
use kjpart::partitions::{enumerate_partitions, self_conjugate_two_size_count, Partition};
use kjpart::series::{BPolynomial, Coefficient, TruncatedSeries};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

const ORDER: usize = 30;

fn int_series() -> impl Strategy<Value = TruncatedSeries<BigInt>> {
    prop::collection::vec(-20i64..=20, ORDER + 1).prop_map(|v| TruncatedSeries::from_i64s(&v))
}

fn unit_series() -> impl Strategy<Value = TruncatedSeries<BigInt>> {
    prop::collection::vec(-5i64..=5, ORDER).prop_map(|v| {
        let mut c = vec![1];
        c.extend(v);
        TruncatedSeries::from_i64s(&c)
    })
}

fn rat_series() -> impl Strategy<Value = TruncatedSeries<BigRational>> {
    prop::collection::vec((-9i64..=9, 1i64..=6), ORDER + 1).prop_map(|v| {
        TruncatedSeries::from_coeffs(
            v.into_iter().map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d))).collect(),
        )
    })
}

fn poly() -> impl Strategy<Value = BPolynomial> {
    prop::collection::vec(-4i64..=4, 0..=3).prop_map(|v| BPolynomial::from_ints(&v))
}

fn poly_series() -> impl Strategy<Value = TruncatedSeries<BPolynomial>> {
    prop::collection::vec(poly(), ORDER + 1).prop_map(TruncatedSeries::from_coeffs)
}

fn ring_laws<R: Coefficient + std::fmt::Debug>(a: &TruncatedSeries<R>, b: &TruncatedSeries<R>, c: &TruncatedSeries<R>) {
    assert_eq!(a.mul(b), b.mul(a));
    assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
    assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
    assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
    assert_eq!(a.add(&a.neg()), TruncatedSeries::zero(a.order()));
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=9, 0..=12).prop_map(Partition::from_unsorted)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn integer_series_ring_laws(a in int_series(), b in int_series(), c in int_series()) {
        ring_laws(&a, &b, &c);
    }

    #[test]
    fn rational_series_ring_laws(a in rat_series(), b in rat_series(), c in rat_series()) {
        ring_laws(&a, &b, &c);
    }

    #[test]
    fn unit_powers_cancel(a in unit_series(), e in 1i64..=5) {
        let prod = a.pow(e).unwrap().mul(&a.pow(-e).unwrap());
        prop_assert!(prod.is_one());
        prop_assert_eq!(a.inverse().unwrap().mul(&a), TruncatedSeries::one(ORDER));
    }

    #[test]
    fn rescale_then_extract_is_identity(a in int_series(), scale in 1usize..=4) {
        let big = a.rescale(scale);
        let back = big.progression(scale, 0);
        prop_assert_eq!(&back[..], &a.coeffs()[..=ORDER / scale]);
    }

    #[test]
    fn polynomial_division(a in poly(), d in poly()) {
        prop_assume!(!d.is_zero());
        let (q, r) = a.div_rem(&d);
        prop_assert_eq!(&(&q * &d) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < d.degree());
    }

    #[test]
    fn conjugation_invariants(p in partition()) {
        let c = p.conjugate();
        prop_assert_eq!(c.conjugate(), p.clone());
        prop_assert_eq!(c.weight(), p.weight());
        let (hp, hc) = (p.hook_census(), c.hook_census());
        prop_assert_eq!(&hp.multiset, &hc.multiset);
        prop_assert_eq!(hp.a1, hc.a2);
        prop_assert_eq!(hp.cell_count(), p.weight());
        if p.is_self_conjugate() {
            prop_assert_eq!(hp.a1, hp.a2);
        }
    }

    #[test]
    fn sigma_is_multiplicative(m in 1u64..=10_000, n in 1u64..=10_000, r in 0u32..=2) {
        prop_assume!(common::gcd(m, n) == 1);
        prop_assert_eq!(sigma(r, m * n).unwrap(), sigma(r, m).unwrap() * sigma(r, n).unwrap());
        prop_assert_eq!(divisor_count(m * n).unwrap(), divisor_count(m).unwrap() * divisor_count(n).unwrap());
    }

    #[test]
    fn bijection_round_trip(n in 1usize..=12, pick in any::<prop::sample::Index>()) {
        let all = marked_overpartitions(n);
        let m = &all[pick.index(all.len())];
        let (pre, i) = bijection_backward(m);
        prop_assert_eq!(pre.weight() + i * (i + 1) / 2, n);
        prop_assert_eq!(&bijection_forward(&pre, i).unwrap(), m);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn polynomial_series_ring_laws(a in poly_series(), b in poly_series(), c in poly_series()) {
        ring_laws(&a, &b, &c);
    }
}

#[test]
fn conjugation_is_an_involution_to_25() {
    for n in 0..=25 {
        for p in enumerate_partitions(n) {
            assert_eq!(p.conjugate().conjugate(), p);
        }
    }
}

#[test]
fn two_size_partitions_are_closed_under_conjugation() {
    for n in 1..=20 {
        let all = enumerate_partitions(n);
        let two: Vec<&Partition> = all.iter().filter(|p| p.distinct_size_count() == 2).collect();
        for p in &two {
            assert_eq!(p.conjugate().distinct_size_count(), 2, "{p}");
        }
        let self_conj = two.iter().filter(|p| p.is_self_conjugate()).count();
        assert_eq!(two.len() % 2, self_conj % 2, "n = {n}");
    }
}

#[test]
fn divisor_criterion_counts_self_conjugate_shapes() {
    for m in 1..=500u64 {
        let sm = valuation(2, m).unwrap();
        let count = common::divisors(m)
            .into_iter()
            .filter(|&a| a * a < m && a % 2 == m % 2)
            .filter(|&a| {
                let sa = valuation(2, a).unwrap();
                sa < sm || (sa == 0 && sm == 0)
            })
            .count();
        assert_eq!(count, self_conjugate_two_size_count(m as usize), "m = {m}");
    }
}

#[test]
fn divisor_count_mod_four() {
    let d = divisor_count_table(10_000);
    for n in 1..=10_000u64 {
        let f = factorize(n).unwrap();
        let two_odd = odd_order_prime_count(n).unwrap() >= 2;
        let three_mod_four = f.factors().iter().any(|&(_, e)| e % 4 == 3);
        let zero = d[n as usize].is_multiple_of(4);
        // the converse of the first implication fails when an exponent is 3 mod 4
        if two_odd {
            assert!(zero, "n = {n}");
        }
        assert_eq!(zero, two_odd || three_mod_four, "n = {n}");
    }
    assert_eq!(d[8], 4);
    assert_eq!(odd_order_prime_count(8).unwrap(), 1);
}

#[test]
fn sigma_and_d_on_even_progressions() {
    let s = sigma1_table(100_000);
    let d = divisor_count_table(100_000);
    for m in (14..=100_000).step_by(16) {
        assert_eq!(s[m] % 8, 0, "m = {m}");
    }
    for m in (6..=100_000).step_by(8) {
        assert_eq!(s[m] % 4, 0, "m = {m}");
        assert_eq!(d[m] % 4, 0, "m = {m}");
    }
}

#[test]
fn colored_counts_are_monotone_in_j() {
    for k in 1..=5u32 {
        let series: Vec<_> = (1..=k).map(|j| ckj_series(k, j, 40).unwrap()).collect();
        for n in 0..=40 {
            for w in series.windows(2) {
                assert!(w[0].coeff(n) <= w[1].coeff(n));
            }
        }
        let full = kjpart::series::EtaQuotient::new([(1, -(k as i64))]).unwrap().expand(40).unwrap();
        assert_eq!(series.last().unwrap(), &full);
    }
}

#[test]
fn ck1_divisible_by_k() {
    for k in 1..=6u32 {
        let s = ckj_series(k, 1, 500).unwrap();
        for n in 1..=500 {
            assert!((s.coeff(n) % BigInt::from(k)).is_zero(), "c[{k},1]({n})");
        }
        assert!(s.coeff(0).is_one());
    }
}
