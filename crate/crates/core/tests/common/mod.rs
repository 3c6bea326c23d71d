//! Independent test-only oracles. Nothing here calls into the library's
//! series or enumeration code.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// All partitions of `n`, parts weakly decreasing, by plain recursion.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `p(0..=n)` from Euler's pentagonal recurrence.
pub fn euler_partition_numbers(n: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); n + 1];
    p[0] = BigInt::one();
    for m in 1..=n {
        let mut acc = BigInt::zero();
        let mut k = 1usize;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let sign_pos = k % 2 == 1;
            let mut term = p[m - g1].clone();
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= m {
                term += &p[m - g2];
            }
            if sign_pos {
                acc += term;
            } else {
                acc -= term;
            }
            k += 1;
        }
        p[m] = acc;
    }
    p
}

/// `Π_t Π_n (1 - q^{tn})^{e_t}` to `q^order` by repeated multiplication or
/// division by single binomials.
pub fn naive_eta_product(factors: &[(usize, i64)], order: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); order + 1];
    c[0] = BigInt::one();
    for &(t, e) in factors {
        for n in 1.. {
            let s = t * n;
            if s > order {
                break;
            }
            for _ in 0..e.unsigned_abs() {
                if e > 0 {
                    for i in (s..=order).rev() {
                        let v = c[i - s].clone();
                        c[i] -= v;
                    }
                } else {
                    for i in s..=order {
                        let v = c[i - s].clone();
                        c[i] += v;
                    }
                }
            }
        }
    }
    c
}

/// Multisets of size `f` over `k` colors using at most `j` distinct colors,
/// counted by listing color multiplicities.
pub fn color_multisets_brute(f: usize, k: usize, j: usize) -> u64 {
    fn go(color: usize, k: usize, left: usize, used: usize, j: usize) -> u64 {
        if color == k {
            return u64::from(left == 0);
        }
        let mut total = 0;
        for take in 0..=left {
            let u = used + usize::from(take > 0);
            if u <= j {
                total += go(color + 1, k, left - take, u, j);
            }
        }
        total
    }
    go(0, k, f, 0, j)
}

/// `c_{k,j}(n)` by enumerating partitions and coloring each size.
pub fn ckj_brute(n: usize, k: usize, j: usize) -> u64 {
    partitions(n)
        .iter()
        .map(|p| frequencies(p).iter().map(|&(_, f)| color_multisets_brute(f, k, j)).product::<u64>())
        .sum()
}

/// Runs of equal parts.
pub fn frequencies(p: &[usize]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &x in p {
        match out.last_mut() {
            Some((s, f)) if *s == x => *f += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

/// `ν_i(n)`: partitions of `n` with exactly `i` distinct part sizes.
pub fn nu_brute(i: usize, n: usize) -> u64 {
    partitions(n).iter().filter(|p| frequencies(p).len() == i).count() as u64
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

pub fn sigma_brute(r: u32, n: u64) -> BigInt {
    divisors(n).into_iter().map(|d| BigInt::from(d).pow(r)).sum()
}

pub fn d_brute(n: u64) -> u64 {
    divisors(n).len() as u64
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Conjugate by counting, for each column, the rows that reach it.
pub fn conjugate(p: &[usize]) -> Vec<usize> {
    let width = p.first().copied().unwrap_or(0);
    (1..=width).map(|c| p.iter().filter(|&&r| r >= c).count()).collect()
}

/// Hook lengths of every cell, straight from the diagram.
pub fn hooks(p: &[usize]) -> Vec<usize> {
    let conj = conjugate(p);
    let mut out = Vec::new();
    for (i, &row) in p.iter().enumerate() {
        for (j, &col) in conj.iter().enumerate().take(row) {
            out.push((row - j - 1) + (col - i - 1) + 1);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Overpartitions of `n` with exactly `i` overlined sizes: every partition
/// contributes `binom(#sizes, i)`.
pub fn marked_count_brute(n: usize, i: usize) -> u64 {
    fn binom(a: u64, b: u64) -> u64 {
        if b > a {
            return 0;
        }
        (0..b).fold(1, |acc, t| acc * (a - t) / (t + 1))
    }
    partitions(n).iter().map(|p| binom(frequencies(p).len() as u64, i as u64)).sum()
}

/// Self-conjugate partitions of `m`, built from their diagonal hooks (a set
/// of distinct odd numbers summing to `m`).
pub fn self_conjugate_partitions(m: usize) -> Vec<Vec<usize>> {
    fn odd_sets(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        let mut h = max.min(rest);
        if h.is_multiple_of(2) {
            h = h.saturating_sub(1);
        }
        while h >= 1 {
            cur.push(h);
            odd_sets(rest - h, h.saturating_sub(2), cur, out);
            cur.pop();
            if h < 2 {
                break;
            }
            h -= 2;
        }
    }
    let mut sets = Vec::new();
    odd_sets(m, m, &mut Vec::new(), &mut sets);
    sets.into_iter()
        .map(|hs| {
            let rows = hs.first().map_or(0, |h| h.div_ceil(2));
            let mut lens = vec![0usize; rows];
            for (i, &h) in hs.iter().enumerate() {
                let arm = (h - 1) / 2;
                // row i gets its diagonal cell and arm; column i adds one cell to rows below
                lens[i] += arm + 1;
                for len in lens.iter_mut().skip(i + 1).take(arm) {
                    *len += 1;
                }
            }
            lens.retain(|&l| l > 0);
            lens
        })
        .collect()
}
