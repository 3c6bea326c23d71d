//! (k,j)-colored partitions: generating functions, brute-force enumeration,
//! the `f_n(u)` polynomials, the counts `ν_i(n)`, and the bijection between
//! marked overpartitions and partitions with two colors on small parts.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::congruence::nu2_divisor_identity;
use crate::partitions::{conjugate_parts, distinct_sizes, for_each_partition, max_distinct_sizes, Partition};
use crate::series::{check_order, BPolynomial, EtaQuotient, TruncatedSeries};
use crate::{Error, Result};

/// Default ceiling for brute-force enumeration.
pub const DEFAULT_ORACLE_BOUND: usize = 25;

/// Largest `n` for which `ν_i(n)` may be computed by listing partitions.
pub const NU_ENUMERATION_LIMIT: usize = 60;

fn check_colors(k: u32, j: u32) -> Result<()> {
    if j == 0 || j > k {
        return Err(Error::InvalidColors { k, j });
    }
    Ok(())
}

/// `binom(top, i)` for any integer `top`, as `top (top-1) ... (top-i+1) / i!`.
pub fn binomial(top: i64, i: u32) -> BigInt {
    let mut acc = BigInt::one();
    for t in 0..i as i64 {
        acc *= top - t;
    }
    for t in 1..=i as i64 {
        acc /= t;
    }
    acc
}

/// Which of the two closed product forms to use for `C_{k,j}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductForm {
    /// `(q)_∞^{-j} Π_n Σ_{i<=j} binom(k,i) (1-q^n)^{j-i} q^{in}`
    Binomial,
    /// `(q)_∞^{-j} Π_n Σ_{i<=j} binom(k-j+i-1, i) q^{in}`
    Collected,
}

/// Local numerator `Σ_i binom(k,i) (1-x)^{j-i} x^i`, expanded in `x`.
pub fn binomial_numerator(k: u32, j: u32) -> Vec<BigInt> {
    let mut poly = vec![BigInt::zero(); j as usize + 1];
    for i in 0..=j {
        let outer = binomial(k as i64, i);
        for r in 0..=(j - i) {
            let sign = if r % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            poly[(i + r) as usize] += &outer * binomial((j - i) as i64, r) * sign;
        }
    }
    poly
}

/// Local numerator `Σ_i binom(k-j+i-1, i) x^i`.
pub fn collected_numerator(k: u32, j: u32) -> Vec<BigInt> {
    (0..=j).map(|i| binomial(k as i64 - j as i64 + i as i64 - 1, i)).collect()
}

/// Multiplies `c` in place by `Σ_i p_i q^{i·n}`.
fn mul_local(c: &mut [BigInt], p: &[BigInt], n: usize) {
    let order = c.len() - 1;
    for m in (0..=order).rev() {
        let mut acc = &c[m] * &p[0];
        for (i, pi) in p.iter().enumerate().skip(1) {
            let Some(src) = m.checked_sub(i * n) else { break };
            if !pi.is_zero() && !c[src].is_zero() {
                acc += pi * &c[src];
            }
        }
        c[m] = acc;
    }
}

/// Divides `c` in place by `1 - q^n`.
fn div_one_minus(c: &mut [BigInt], n: usize) {
    for m in n..c.len() {
        let prev = c[m - n].clone();
        c[m] += prev;
    }
}

/// `Π_{n>=1} N(q^n) / (1 - q^n)^d` for an integer polynomial `N` with
/// constant term 1.
pub fn local_product(numerator: &[BigInt], denominator_power: u32, order: usize) -> Result<TruncatedSeries<BigInt>> {
    check_order(order)?;
    if numerator.first().is_none_or(|c| !c.is_one()) {
        return Err(Error::NonInvertibleConstant);
    }
    let mut c = vec![BigInt::zero(); order + 1];
    c[0] = BigInt::one();
    for n in 1..=order {
        mul_local(&mut c, numerator, n);
        for _ in 0..denominator_power {
            div_one_minus(&mut c, n);
        }
    }
    Ok(TruncatedSeries::from_coeffs(c))
}

/// `C_{k,j}` from a single product form.
pub fn ckj_series_form(k: u32, j: u32, order: usize, form: ProductForm) -> Result<TruncatedSeries<BigInt>> {
    check_colors(k, j)?;
    check_order(order)?;
    match form {
        ProductForm::Binomial => local_product(&binomial_numerator(k, j), j, order),
        ProductForm::Collected => {
            let p = collected_numerator(k, j);
            let mut c = vec![BigInt::zero(); order + 1];
            c[0] = BigInt::one();
            for n in 1..=order {
                mul_local(&mut c, &p, n);
            }
            let denom = EtaQuotient::new([(1, -(j as i64))])?.expand(order)?;
            Ok(TruncatedSeries::from_coeffs(c).mul(&denom))
        }
    }
}

/// `C_{k,j}(q) = Σ c_{k,j}(n) q^n` to `q^order`.
///
/// Both product forms are computed and compared coefficientwise; any
/// disagreement is reported as [`Error::FormMismatch`].
pub fn ckj_series(k: u32, j: u32, order: usize) -> Result<TruncatedSeries<BigInt>> {
    let (a, b) = rayon::join(
        || ckj_series_form(k, j, order, ProductForm::Binomial),
        || ckj_series_form(k, j, order, ProductForm::Collected),
    );
    let (a, b) = (a?, b?);
    if let Some(index) = (0..=order).find(|&n| a.coeff(n) != b.coeff(n)) {
        return Err(Error::FormMismatch { k, j, index });
    }
    Ok(a)
}

/// A colored partition in canonical order: sizes weakly decreasing, and
/// within one size colors weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredPartition {
    parts: Vec<(usize, u32)>,
}

impl ColoredPartition {
    /// Sorts `(size, color)` pairs into canonical order.
    pub fn new(mut parts: Vec<(usize, u32)>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        ColoredPartition { parts }
    }

    pub fn parts(&self) -> &[(usize, u32)] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().map(|&(s, _)| s).sum()
    }

    /// Largest number of distinct colors used on a single part size.
    pub fn max_colors_per_size(&self) -> usize {
        let mut per_size: BTreeMap<usize, BTreeSet<u32>> = BTreeMap::new();
        for &(s, c) in &self.parts {
            per_size.entry(s).or_default().insert(c);
        }
        per_size.values().map(BTreeSet::len).max().unwrap_or(0)
    }
}

impl fmt::Display for ColoredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let items: Vec<String> = self.parts.iter().map(|(s, c)| format!("{s}_{c}")).collect();
        write!(f, "{}", items.join(" + "))
    }
}

/// Weakly decreasing color sequences of length `len` over `1..=k` with at
/// most `j` distinct colors, in descending lexicographic order.
fn color_multisets(len: usize, k: u32, j: u32) -> Vec<Vec<u32>> {
    fn go(len: usize, max: u32, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for c in (1..=max).rev() {
            let fresh = cur.last() != Some(&c);
            if fresh && left == 0 {
                continue;
            }
            cur.push(c);
            go(len, c, if fresh { left - 1 } else { left }, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, k, j, &mut Vec::with_capacity(len), &mut out);
    out
}

/// Visits every (k,j)-colored partition of `n` in canonical listing order:
/// underlying partitions in reverse lexicographic order, then color
/// assignments in descending lexicographic order.
fn visit_colored<F: FnMut(&[(usize, u32)])>(n: usize, k: u32, j: u32, mut f: F) {
    let mut cache: BTreeMap<usize, Vec<Vec<u32>>> = BTreeMap::new();
    for_each_partition(n, |parts| {
        let mut groups: Vec<(usize, usize)> = Vec::new();
        for &p in parts {
            match groups.last_mut() {
                Some((s, c)) if *s == p => *c += 1,
                _ => groups.push((p, 1)),
            }
        }
        for &(_, len) in &groups {
            cache.entry(len).or_insert_with(|| color_multisets(len, k, j));
        }
        let choices: Vec<&Vec<Vec<u32>>> = groups.iter().map(|(_, len)| &cache[len]).collect();
        let mut buf = Vec::with_capacity(parts.len());
        fn rec<F: FnMut(&[(usize, u32)])>(
            idx: usize,
            groups: &[(usize, usize)],
            choices: &[&Vec<Vec<u32>>],
            buf: &mut Vec<(usize, u32)>,
            f: &mut F,
        ) {
            if idx == groups.len() {
                f(buf);
                return;
            }
            let size = groups[idx].0;
            for colors in choices[idx].iter() {
                let mark = buf.len();
                buf.extend(colors.iter().map(|&c| (size, c)));
                rec(idx + 1, groups, choices, buf, f);
                buf.truncate(mark);
            }
        }
        rec(0, &groups, &choices, &mut buf, &mut f);
    });
}

fn check_oracle(n: usize, bound: usize) -> Result<()> {
    if n > bound {
        return Err(Error::OracleBoundExceeded { n, bound });
    }
    Ok(())
}

/// Counts (k,j)-colored partitions of `n` by generating every one of them.
pub fn ckj_enumerate(n: usize, k: u32, j: u32, bound: usize) -> Result<u64> {
    check_colors(k, j)?;
    check_oracle(n, bound)?;
    let mut count = 0u64;
    visit_colored(n, k, j, |_| count += 1);
    Ok(count)
}

/// Lists (k,j)-colored partitions of `n` in canonical order.
pub fn ckj_list(n: usize, k: u32, j: u32, bound: usize) -> Result<Vec<ColoredPartition>> {
    check_colors(k, j)?;
    check_oracle(n, bound)?;
    let mut out = Vec::new();
    visit_colored(n, k, j, |parts| out.push(ColoredPartition { parts: parts.to_vec() }));
    Ok(out)
}

/// `ν_i(n)` for every `i`, by listing the partitions of `n`.
/// Index `i` of the result holds `ν_i(n)`.
pub fn nu_enumerate_all(n: usize) -> Result<Vec<u64>> {
    check_oracle(n, NU_ENUMERATION_LIMIT)?;
    let mut tally = vec![0u64; 1];
    for_each_partition(n, |parts| {
        let l = distinct_sizes(parts);
        if tally.len() <= l {
            tally.resize(l + 1, 0);
        }
        tally[l] += 1;
    });
    Ok(tally)
}

/// `f_n(u) = Σ_{λ ⊢ n} (1 + u)^{ℓ₀(λ)}`, so that `f_n(k-1) = c_{k,1}(n)`.
pub fn fn_polynomial(n: usize) -> BPolynomial {
    let mut tally = vec![0u64; 1];
    for_each_partition(n, |parts| {
        let l = distinct_sizes(parts);
        if tally.len() <= l {
            tally.resize(l + 1, 0);
        }
        tally[l] += 1;
    });
    // f_{n,i} = Σ_l ν_l binom(l, i)
    let coeffs = (0..tally.len()).map(|i| {
        tally
            .iter()
            .enumerate()
            .map(|(l, &nu)| BigInt::from(nu) * binomial(l as i64, i as u32))
            .sum::<BigInt>()
    });
    BPolynomial::from_bigints(coeffs)
}

/// `f_{n,i}` read off by marking part sizes of every partition of `n`, i.e.
/// counting overpartitions of `n` with exactly `i` marked sizes.
pub fn fn_coefficients_by_marking(n: usize) -> Vec<u64> {
    let mut counts = vec![0u64; 1];
    for m in marked_overpartitions(n) {
        let i = m.marked_count();
        if counts.len() <= i {
            counts.resize(i + 1, 0);
        }
        counts[i] += 1;
    }
    counts
}

/// How `nu_count` obtains its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NuMethod {
    Enumerate,
    Andrews,
    DivisorIdentity,
}

/// Andrews' generating functions
/// `N_i(q) = (q;q)_∞^{-1} Σ_{m>=i} (-1)^{m-i} binom(m,i) q^{m(m+1)/2} / (q;q)_m`
/// for every `i <= max_i`, to `q^order`.
///
/// The sum stops at the first `m` with `m(m+1)/2 > order`; every later term
/// starts beyond the truncation.
pub fn andrews_nu_series(max_i: usize, order: usize) -> Result<Vec<TruncatedSeries<BigInt>>> {
    check_order(order)?;
    let mut sums: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); order + 1]; max_i + 1];
    // term = q^{m(m+1)/2} / (q;q)_m, built incrementally
    let mut term = vec![BigInt::zero(); order + 1];
    term[0] = BigInt::one();
    let mut m = 0usize;
    loop {
        for (i, sum) in sums.iter_mut().enumerate() {
            if m < i {
                continue;
            }
            let mut w = binomial(m as i64, i as u32);
            if (m - i) % 2 == 1 {
                w = -w;
            }
            for (s, t) in sum.iter_mut().zip(&term) {
                if !t.is_zero() {
                    *s += &w * t;
                }
            }
        }
        m += 1;
        if m * (m + 1) / 2 > order {
            break;
        }
        // multiply by q^m / (1 - q^m)
        let mut next = vec![BigInt::zero(); order + 1];
        next[m..].clone_from_slice(&term[..=order - m]);
        div_one_minus(&mut next, m);
        term = next;
    }
    let partitions = EtaQuotient::new([(1, -1)])?.expand(order)?;
    Ok(sums.into_iter().map(|s| TruncatedSeries::from_coeffs(s).mul(&partitions)).collect())
}

/// `ν_i(n)`: the number of partitions of `n` with exactly `i` distinct part
/// sizes.
pub fn nu_count(i: usize, n: usize, method: NuMethod) -> Result<BigInt> {
    if i == 0 || n == 0 {
        return Err(Error::InvalidArgument("nu_count needs i >= 1 and n >= 1".into()));
    }
    match method {
        NuMethod::Enumerate => {
            let all = nu_enumerate_all(n)?;
            Ok(BigInt::from(all.get(i).copied().unwrap_or(0)))
        }
        NuMethod::Andrews => {
            let series = andrews_nu_series(i, n)?;
            Ok(series[i].coeff(n).clone())
        }
        NuMethod::DivisorIdentity => {
            if i != 2 {
                return Err(Error::InvalidArgument(
                    "the divisor identity only gives nu_2".into(),
                ));
            }
            Ok(BigInt::from(nu2_divisor_identity(n as u64)?))
        }
    }
}

/// Checks `c_{k,1}(n) = Σ_i k^i ν_i(n)` for `1 <= n <= order`, together with
/// its truncations `c_{k,1}(n) ≡ kν₁ (mod k²)` and `≡ kν₁ + k²ν₂ (mod k³)`.
pub fn ck1_decomposition_check(k: u32, order: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::InvalidColors { k, j: 1 });
    }
    if order == 0 {
        return Ok(true);
    }
    let c = ckj_series(k, 1, order)?;
    let t = max_distinct_sizes(order)?;
    let nu = andrews_nu_series(t, order)?;
    let kb = BigInt::from(k);
    let k2 = &kb * &kb;
    let k3 = &k2 * &kb;
    for n in 1..=order {
        let mut total = BigInt::zero();
        let mut kp = BigInt::one();
        for series in nu.iter().skip(1) {
            kp *= &kb;
            total += &kp * series.coeff(n);
        }
        if &total != c.coeff(n) {
            return Ok(false);
        }
        if k >= 2 {
            let cn = c.coeff(n);
            let first = &kb * nu[1].coeff(n);
            let second = &first + &k2 * nu.get(2).map_or(BigInt::zero(), |s| s.coeff(n).clone());
            if !((cn - &first) % &k2).is_zero() || !((cn - &second) % &k3).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// An overpartition in which a set of part sizes is marked (overlined).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedOverpartition {
    base: Partition,
    marked: BTreeSet<usize>,
}

impl MarkedOverpartition {
    pub fn new(base: Partition, marked: BTreeSet<usize>) -> Result<Self> {
        if let Some(s) = marked.iter().find(|&&s| base.multiplicity(s) == 0) {
            return Err(Error::InvalidArgument(format!("marked size {s} does not occur")));
        }
        Ok(MarkedOverpartition { base, marked })
    }

    pub fn base(&self) -> &Partition {
        &self.base
    }

    pub fn marked(&self) -> &BTreeSet<usize> {
        &self.marked
    }

    pub fn marked_count(&self) -> usize {
        self.marked.len()
    }

    pub fn weight(&self) -> usize {
        self.base.weight()
    }
}

impl fmt::Display for MarkedOverpartition {
    /// Marked sizes carry a combining overline on their last occurrence.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self.base.parts();
        let mut items = Vec::with_capacity(parts.len());
        for (idx, &p) in parts.iter().enumerate() {
            let last = parts.get(idx + 1) != Some(&p);
            if last && self.marked.contains(&p) {
                items.push(format!("{p}\u{305}"));
            } else {
                items.push(p.to_string());
            }
        }
        if items.is_empty() {
            return write!(f, "()");
        }
        write!(f, "{}", items.join(" + "))
    }
}

/// Every marked overpartition of `n`: each partition with each subset of its
/// distinct sizes marked.
pub fn marked_overpartitions(n: usize) -> Vec<MarkedOverpartition> {
    let mut out = Vec::new();
    for_each_partition(n, |parts| {
        let mut sizes: Vec<usize> = parts.to_vec();
        sizes.dedup();
        for mask in 0u64..(1 << sizes.len()) {
            let marked = sizes
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &s)| s)
                .collect();
            out.push(MarkedOverpartition { base: Partition::from_unsorted(parts.to_vec()), marked });
        }
    });
    out
}

/// A partition whose parts carry one of two colors; `second` holds the
/// color-2 parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoColoredPartition {
    pub first: Partition,
    pub second: Partition,
}

impl TwoColoredPartition {
    pub fn weight(&self) -> usize {
        self.first.weight() + self.second.weight()
    }
}

impl fmt::Display for TwoColoredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<(usize, u32)> = self.first.parts().iter().map(|&p| (p, 1)).collect();
        parts.extend(self.second.parts().iter().map(|&p| (p, 2)));
        write!(f, "{}", ColoredPartition::new(parts))
    }
}

/// Maps a two-colored partition of `n - i(i+1)/2`, whose color-2 parts are
/// all at most `i`, to an overpartition of `n` with exactly `i` marked sizes.
///
/// The color-2 parts are conjugated (giving at most `i` parts), padded to
/// `i` entries, and the staircase `i, i-1, ..., 1` is added, producing `i`
/// distinct sizes; these are merged with the color-1 parts and marked.
pub fn bijection_forward(input: &TwoColoredPartition, i: usize) -> Result<MarkedOverpartition> {
    if let Some(&big) = input.second.parts().first() {
        if big > i {
            return Err(Error::Bijection(format!(
                "color-2 part {big} exceeds the allowed size {i}"
            )));
        }
    }
    let mut conj = conjugate_parts(input.second.parts());
    conj.resize(i, 0);
    let distinct: Vec<usize> = conj.iter().enumerate().map(|(t, &c)| c + (i - t)).collect();
    let mut parts = input.first.parts().to_vec();
    parts.extend_from_slice(&distinct);
    Ok(MarkedOverpartition {
        base: Partition::from_unsorted(parts),
        marked: distinct.into_iter().collect(),
    })
}

/// Inverse of [`bijection_forward`]; returns the two-colored partition and `i`.
pub fn bijection_backward(m: &MarkedOverpartition) -> (TwoColoredPartition, usize) {
    let i = m.marked.len();
    let mut first = m.base.parts().to_vec();
    for s in &m.marked {
        let pos = first.iter().position(|p| p == s).expect("marked size occurs in base");
        first.remove(pos);
    }
    let reduced: Vec<usize> =
        m.marked.iter().rev().enumerate().map(|(t, &d)| d - (i - t)).filter(|&e| e > 0).collect();
    let second = Partition::from_unsorted(conjugate_parts(&reduced));
    (TwoColoredPartition { first: Partition::from_unsorted(first), second }, i)
}

/// Domain of [`bijection_forward`] for given `n` and `i`: two-colored
/// partitions of `n - i(i+1)/2` whose color-2 parts are at most `i`.
pub fn bijection_domain(n: usize, i: usize) -> Vec<TwoColoredPartition> {
    let tri = i * (i + 1) / 2;
    if tri > n {
        return Vec::new();
    }
    let rest = n - tri;
    let mut out = Vec::new();
    for r in 0..=rest {
        let mut seconds = Vec::new();
        for_each_partition(r, |parts| {
            if parts.first().is_none_or(|&p| p <= i) {
                seconds.push(Partition::from_unsorted(parts.to_vec()));
            }
        });
        let mut firsts = Vec::new();
        for_each_partition(rest - r, |parts| firsts.push(Partition::from_unsorted(parts.to_vec())));
        for second in &seconds {
            for first in &firsts {
                out.push(TwoColoredPartition { first: first.clone(), second: second.clone() });
            }
        }
    }
    out
}

/// Converts a small non-negative integer to `u64` for display and JSON.
pub fn to_u64(v: &BigInt) -> Option<u64> {
    if v.is_negative() {
        None
    } else {
        v.to_u64()
    }
}
