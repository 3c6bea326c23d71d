//! Divisor-function machinery behind the `ν₂` congruences.

use crate::arith::{divisor_count_table, is_prime, is_square, sigma1_table, valuation};
use crate::{Error, Result};

use super::VerificationReport;

/// `Σ_{k=1}^{n-1} d(k) d(n-k)` for every `n <= order`.
pub fn divisor_convolution_table(order: usize) -> Vec<u64> {
    let d = divisor_count_table(order);
    (0..=order)
        .map(|n| {
            // symmetric: pair k with n-k
            let half: u64 = (1..n.div_ceil(2)).map(|k| d[k] * d[n - k]).sum();
            let mid = if n % 2 == 0 && n > 0 { d[n / 2] * d[n / 2] } else { 0 };
            2 * half + mid
        })
        .collect()
}

/// `ν₂(n)` for every `n <= order` from
/// `ν₂(n) = ½ (Σ_{k=1}^{n-1} d(k) d(n-k) - σ₁(n) + d(n))`.
pub fn nu2_divisor_table(order: usize) -> Vec<u64> {
    let conv = divisor_convolution_table(order);
    let d = divisor_count_table(order);
    let s = sigma1_table(order);
    let mut out = vec![0u64; order + 1];
    for n in 1..=order {
        let twice = conv[n] + d[n] - s[n];
        assert!(twice.is_multiple_of(2), "odd numerator in the nu_2 divisor identity at n = {n}");
        out[n] = twice / 2;
    }
    out
}

pub fn nu2_divisor_identity(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroArgument { what: "nu_2 divisor identity" });
    }
    Ok(nu2_divisor_table(n as usize)[n as usize])
}

/// Checks `d(m) ≡ Σ_{k=1}^{m-1} d(k) d(m-k) (mod 8)` for `m ≡ 6 (mod 8)`,
/// `m <= bound`.
pub fn rouse_lemma_scan(bound: usize) -> VerificationReport {
    let conv = divisor_convolution_table(bound);
    let d = divisor_count_table(bound);
    let mut report = VerificationReport::new("divisor-convolution-6mod8", bound);
    for m in (6..=bound).step_by(8) {
        let diff = conv[m] as i128 - d[m] as i128;
        let residue = diff.rem_euclid(8) as u64;
        report.record(residue == 0, m as u64, || diff.to_string(), Some(residue));
    }
    report.finish()
}

/// `F(q) = Σ σ₁(2n+1) q^{2n+1}` to `q^order`.
pub fn f_series(order: usize) -> Vec<u128> {
    let s = sigma1_table(order);
    (0..=order).map(|n| if n % 2 == 1 { s[n] as u128 } else { 0 }).collect()
}

/// `H(q) = F(q) G(q) + F(q⁴) F(q²)` with `G(q) = Σ σ₁(8n+5) q^{8n+5}`.
///
/// Every `σ₁(8n+5)` is even. With `halve_g` the series uses `G/2` in place
/// of `G`; only that version has even coefficients throughout (the literal
/// one is already odd at `q^6`).
pub fn h_series(order: usize, halve_g: bool) -> Vec<u128> {
    let s = sigma1_table(order);
    let f = f_series(order);
    let g: Vec<u128> = (0..=order)
        .map(|n| match (n % 8 == 5, halve_g) {
            (false, _) => 0,
            (true, true) => s[n] as u128 / 2,
            (true, false) => s[n] as u128,
        })
        .collect();
    let mut h = vec![0u128; order + 1];
    for (a, &fa) in f.iter().enumerate().filter(|(_, v)| **v != 0) {
        for (b, &gb) in g.iter().enumerate().take(order + 1 - a).filter(|(_, v)| **v != 0) {
            h[a + b] += fa * gb;
        }
    }
    // F(q⁴) F(q²): exponents 4a + 2b with a, b odd
    for a in (1..=order / 4).step_by(2) {
        for b in (1..=(order - 4 * a) / 2).step_by(2) {
            h[4 * a + 2 * b] += f[a] * f[b];
        }
    }
    h
}

/// Parity scans to `q^bound`: `H` (with `G/2`) has only even coefficients,
/// and `F ≡ Σ_{n>=0} q^{(2n+1)²} (mod 2)`.
pub fn h_parity_scan(bound: usize) -> (VerificationReport, VerificationReport) {
    let h = h_series(bound, true);
    let mut hr = VerificationReport::new("h-series-even", bound);
    for (n, v) in h.iter().enumerate() {
        hr.record(v % 2 == 0, n as u64, || v.to_string(), Some((v % 2) as u64));
    }
    let f = f_series(bound);
    let mut fr = VerificationReport::new("f-series-odd-squares-mod2", bound);
    for (n, v) in f.iter().enumerate() {
        let odd_square = is_square(n as u64) && n.isqrt() % 2 == 1;
        let ok = (v % 2 == 1) == odd_square;
        fr.record(ok, n as u64, || v.to_string(), Some((v % 2) as u64));
    }
    (hr.finish(), fr.finish())
}

/// Number of `(x, y)` with `x, y >= 1`, `n = x² + p y²` and `s_p(y)` even.
pub fn representation_count(n: u64, p: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroArgument { what: "representation count" });
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut count = 0;
    let mut x = 1u64;
    while x * x < n {
        let rest = n - x * x;
        if rest.is_multiple_of(p) {
            let y2 = rest / p;
            let y = y2.isqrt();
            if y >= 1 && y * y == y2 && valuation(p, y)? % 2 == 0 {
                count += 1;
            }
        }
        x += 1;
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nu2_examples() {
        assert_eq!(nu2_divisor_identity(6), Ok(6));
        assert_eq!(nu2_divisor_identity(1), Ok(0));
        assert_eq!(nu2_divisor_identity(14), Ok(44));
        assert!(nu2_divisor_identity(0).is_err());
    }

    #[test]
    fn convolution_examples() {
        let c = divisor_convolution_table(14);
        assert_eq!(c[6], 20);
        assert_eq!(c[14], 108);
        assert_eq!(c[1], 0);
    }

    #[test]
    fn rouse_small() {
        let r = rouse_lemma_scan(14);
        assert!(r.passed());
        assert_eq!(r.checked, 2);
    }

    #[test]
    fn h_parity_to_sturm() {
        let (h, f) = h_parity_scan(32);
        assert!(h.passed() && f.passed());
        let fs = f_series(9);
        assert_eq!(fs[9], 13);
        assert_eq!(fs[3], 4);
    }

    #[test]
    fn literal_h_is_odd_at_six() {
        let h = h_series(40, false);
        assert_eq!(h[6], 7);
        assert_eq!(h_series(40, true)[6], 4);
    }

    #[test]
    fn representations() {
        assert_eq!(representation_count(6, 2), Ok(1));
        assert_eq!(representation_count(5, 5), Ok(0));
        assert!(representation_count(46, 5).unwrap() >= 1);
        assert_eq!(representation_count(6, 4), Err(Error::NotPrime(4)));
    }
}
