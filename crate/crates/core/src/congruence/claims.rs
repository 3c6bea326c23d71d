//! The builtin registry of congruence claims.

use crate::arith::is_quadratic_residue;

use super::{CongruenceClaim as Claim, Hypothesis, SequenceSpec as S};

fn ck1(k: u32) -> S {
    S::Ckj { k, j: 1 }
}

/// `(p, p·p, p·r)`: progressions `p(pn + r)` with `r` a non-residue mod `p`.
fn nonresidue_progressions() -> Vec<(u64, u64, u64)> {
    let mut out = Vec::new();
    for p in [3u64, 5, 7] {
        for r in 1..p {
            if !is_quadratic_residue(r, p) {
                out.push((p, p * p, p * r));
            }
        }
    }
    out
}

/// Every builtin claim, sorted by id.
pub fn builtin_claims() -> Vec<Claim> {
    let mut v = Vec::new();

    // (k,1) congruences inherited from overpartitions
    let lifted = "overpartition congruence combined with c[k,1] ≡ 0 (mod k)";
    for (k, m) in [(5, 15), (11, 99), (29, 783), (17, 51)] {
        v.push(Claim::new(format!("c{k}1-24n19-mod{m}"), ck1(k), 24, 19, m).source(lifted));
    }
    v.push(Claim::new("c51-9a-27n18-mod15", ck1(5), 27, 18, 15).tower(9).source(lifted));
    v.push(Claim::new("c71-4a-40n35-mod35", ck1(7), 40, 35, 35).tower(4).source(lifted));
    v.push(Claim::new("c171-40n35-mod85", ck1(17), 40, 35, 85).source(lifted));
    v.push(Claim::new("c171-120n115-mod255", ck1(17), 120, 115, 255).source(lifted));

    // overpartition facts the lifted rows rest on
    let op = "known overpartition congruence";
    v.push(Claim::new("pbar-24n19-mod27", S::Overpartition, 24, 19, 27).source(op));
    v.push(Claim::new("pbar-9a-27n18-mod3", S::Overpartition, 27, 18, 3).tower(9).source(op));
    v.push(Claim::new("pbar-4a-40n35-mod5", S::Overpartition, 40, 35, 5).tower(4).source(op));
    v.push(
        Claim::new("pbar-mod8-nonsquare", S::Overpartition, 1, 1, 8)
            .hypothesis(Hypothesis::NotSquareOrTwiceSquare)
            .source(op),
    );
    v.push(
        Claim::new("pbar-nu-mod8", S::Overpartition, 1, 1, 8)
            .plus(-2, S::Nu { i: 1 })
            .plus(-4, S::Nu { i: 2 })
            .source("pbar(n) = Σ 2^i nu_i(n)"),
    );
    v.push(
        Claim::new("nu-alternating-9a-27n18-mod3", S::NuAlternating, 27, 18, 3)
            .tower(9)
            .source("pbar(n) ≡ Σ (-1)^i nu_i(n) (mod 3)"),
    );

    for k in 2..=6u32 {
        v.push(
            Claim::new(format!("c{k}1-mod{k}"), ck1(k), 1, 1, k as u64)
                .source("rotating the colors of a (k,1)-colored partition"),
        );
    }
    v.push(
        Claim::new("c41-nu-mod64", ck1(4), 1, 1, 64)
            .plus(-4, S::Nu { i: 1 })
            .plus(-16, S::Nu { i: 2 })
            .source("c[k,1](n) = Σ k^i nu_i(n)"),
    );
    for k in 4..=8u32 {
        let m = (k - 2) as u64;
        v.push(
            Claim::new(format!("c{k}1-pbar-mod{m}"), ck1(k), 1, 0, m)
                .plus(-1, S::Overpartition)
                .source("Π (1+(k-1)q^n)/(1-q^n) ≡ Π (1+q^n)/(1-q^n) (mod k-2)"),
        );
    }
    for k in 3..=8u32 {
        let m = (k - 1) as u64;
        v.push(
            Claim::new(format!("c{k}1-p-mod{m}"), ck1(k), 1, 0, m)
                .plus(-1, S::PlainPartition)
                .source("Π (1+(k-1)q^n)/(1-q^n) ≡ Π 1/(1-q^n) (mod k-1)"),
        );
    }

    // nu_2 parity and mod 4
    let nu2 = S::Nu { i: 2 };
    let parity = "self-conjugate two-size partitions pair off the rest under conjugation";
    v.push(Claim::new("nu2-4n2-mod2", nu2.clone(), 4, 2, 2).source(parity).bound(5000));
    for (p, a, b) in nonresidue_progressions() {
        v.push(
            Claim::new(format!("nu2-{a}n{b}-mod2"), nu2.clone(), a, b, 2)
                .source(&format!("p(pn+r) with r a non-residue mod {p}"))
                .bound(5000),
        );
    }
    v.push(
        Claim::new("nu2-two-odd-order-primes-mod2", nu2.clone(), 1, 1, 2)
            .hypothesis(Hypothesis::OddOrderPrimesAtLeast(2))
            .source(parity)
            .bound(5000),
    );
    v.push(
        Claim::new("nu2-16n14-mod4", nu2.clone(), 16, 14, 4)
            .source("divisor identity for nu_2 and the divisor convolution mod 8")
            .bound(5000),
    );

    // (2k,1) and (4k,1) congruences mod 8 and 16, k <= 3
    let cor = "nu_2 congruences applied to c[k,1] = Σ k^i nu_i";
    for k in 1..=3u32 {
        let two_k = 2 * k;
        let kk = k as i64;
        v.push(Claim::new(format!("c{two_k}1-8n6-mod8"), ck1(two_k), 8, 6, 8).source(cor).bound(1500));
        v.push(
            Claim::new(format!("c{two_k}1-16n14-d-nu3-mod16"), ck1(two_k), 16, 14, 16)
                .plus(-2 * kk, S::DivisorCount)
                .plus(-8 * kk * kk * kk, S::Nu { i: 3 })
                .source(cor)
                .bound(1500),
        );
        v.push(
            Claim::new(format!("c{}1-16n14-mod16", 4 * k), ck1(4 * k), 16, 14, 16).source(cor).bound(1500),
        );
        for (p, a, b) in nonresidue_progressions() {
            v.push(
                Claim::new(format!("c{two_k}1-{a}n{b}-mod8"), ck1(two_k), a, b, 8)
                    .source(&format!("p(pn+r) with r a non-residue mod {p}"))
                    .bound(1500),
            );
        }
    }
    // ν₃ ≡ d/4 (mod 2), i.e. 4ν₃ - d ≡ 0 (mod 8)
    let mut quarter = Claim::new("nu3-16n14-quarter-d-mod2", S::Nu { i: 3 }, 16, 14, 8)
        .plus(-1, S::DivisorCount)
        .source(cor)
        .bound(1500);
    quarter.terms[0].0 = 4;
    v.push(quarter);

    v.push(Claim::new("nu2-36n30-mod4", nu2, 36, 30, 4).conjecture().source("open").bound(5000));
    v.push(Claim::new("nu3-36n30-mod2", S::Nu { i: 3 }, 36, 30, 2).conjecture().source("open").bound(1500));

    // (k,k-1): eta-quotients f_k / f_1^k
    let kk1 = "eta-quotient dissection";
    v.push(Claim::new("c32-3n2-mod9", S::Ckj { k: 3, j: 2 }, 3, 2, 9).source("c[3,2](m) ≡ 3 sigma1(m) (mod 9)").bound(3000));
    v.push(Claim::new("c32-4n2-mod9", S::Ckj { k: 3, j: 2 }, 4, 2, 9).source(kk1).bound(3000));
    v.push(Claim::new("c54-4n2-mod20", S::Ckj { k: 5, j: 4 }, 4, 2, 20).source(kk1).bound(3000));
    v.push(
        Claim::new("c54-2n-mod10", S::Ckj { k: 5, j: 4 }, 2, 0, 10)
            .hypothesis(Hypothesis::Positive)
            .source(kk1)
            .bound(3000),
    );

    // general j
    let c72 = S::Ckj { k: 7, j: 2 };
    for b in 2..=4u64 {
        v.push(Claim::new(format!("c72-5n{b}-mod35"), c72.clone(), 5, b, 35).source("C[7,2] ≡ 1/f1^2 (mod 5)"));
        v.push(
            Claim::new(format!("c22-5n{b}-mod5"), S::KColored { k: 2 }, 5, b, 5)
                .source("known 2-colored partition congruence"),
        );
    }
    for b in [4u64, 6] {
        v.push(Claim::new(format!("c72-8n{b}-mod14"), c72.clone(), 8, b, 14).source("8-dissection of f3/f1^3 mod 2"));
    }
    for (k, j) in [(7u32, 2u32), (8, 3), (9, 2), (10, 3), (11, 4), (13, 2)] {
        let m = (k - j) as u64;
        v.push(
            Claim::new(format!("c{k}{j}-c{j}-mod{m}"), S::Ckj { k, j }, 1, 0, m)
                .plus(-1, S::KColored { k: j })
                .source("binom(k-j+i-1, i) ≡ 0 (mod k-j) for 0 < i <= j when k-j is a prime > j"),
        );
    }

    v.push(Claim::new("zero-mod2", S::Zero, 1, 0, 2).source("trivial"));

    for c in &mut v {
        c.family = family(c).to_string();
    }
    v.sort_by(|a, b| a.id.cmp(&b.id));
    v
}

fn family(c: &Claim) -> &'static str {
    match &c.terms[0].1 {
        S::Ckj { k, j: 1 } if *k > 1 => "(k,1)",
        S::Ckj { k, j } if *j + 1 == *k => "(k,k-1)",
        S::Ckj { .. } | S::KColored { .. } => "general-j",
        S::Overpartition | S::NuAlternating => "overpartition",
        S::Nu { .. } => "nu",
        _ => "other",
    }
}
