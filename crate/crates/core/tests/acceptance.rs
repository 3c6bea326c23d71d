//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always print; exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use kjpart::colored::{
    bijection_backward, bijection_forward, ckj_enumerate, ckj_list, ckj_series, ckj_series_form, fn_polynomial,
    marked_overpartitions, nu_count, NuMethod, ProductForm,
};
use kjpart::congruence::{
    builtin_claims, builtin_identities, h_parity_scan, rouse_lemma_scan, verify_claims, verify_identity_entry,
    CongruenceClaim, VerificationReport,
};
use kjpart::hooklen::{compare_low_order, han_identity_mismatch, Correction};
use num_bigint::BigInt;
use num_rational::BigRational;

struct Outcome {
    ok: bool,
    detail: String,
    findings: Vec<String>,
}

impl Outcome {
    fn new(ok: bool, detail: impl Into<String>) -> Self {
        Outcome { ok, detail: detail.into(), findings: Vec::new() }
    }
}

fn claims(ids: &[&str]) -> Vec<CongruenceClaim> {
    let all = builtin_claims();
    ids.iter()
        .map(|id| all.iter().find(|c| c.id == *id).unwrap_or_else(|| panic!("missing claim {id}")).clone())
        .collect()
}

fn summarize(reports: &[VerificationReport]) -> Outcome {
    let failed: Vec<&str> = reports.iter().filter(|r| !r.passed()).map(|r| r.claim_id.as_str()).collect();
    let empty: Vec<&str> = reports.iter().filter(|r| r.checked == 0).map(|r| r.claim_id.as_str()).collect();
    let checked: usize = reports.iter().map(|r| r.checked).sum();
    let ok = failed.is_empty() && empty.is_empty();
    let mut detail = format!("{} claims, {checked} indices", reports.len());
    if !failed.is_empty() {
        detail.push_str(&format!(", failing: {}", failed.join(", ")));
    }
    if !empty.is_empty() {
        detail.push_str(&format!(", nothing checked: {}", empty.join(", ")));
    }
    Outcome::new(ok, detail)
}

fn c1() -> Outcome {
    let c21 = ckj_series(2, 1, 3).unwrap().coeff(3).clone();
    let c22 = ckj_series(2, 2, 3).unwrap().coeff(3).clone();
    let two_colored: Vec<String> = ckj_list(3, 2, 2, 25).unwrap().iter().map(|p| p.to_string()).collect();
    let listed_two = [
        "3_2", "3_1", "2_2 + 1_2", "2_2 + 1_1", "2_1 + 1_2", "2_1 + 1_1",
        "1_2 + 1_2 + 1_2", "1_2 + 1_2 + 1_1", "1_2 + 1_1 + 1_1", "1_1 + 1_1 + 1_1",
    ];
    // overpartitions: color 1 marks the overlined size
    let over: BTreeSet<Vec<(usize, usize, bool)>> = ckj_list(3, 2, 1, 25)
        .unwrap()
        .iter()
        .map(|p| {
            let mut v: Vec<(usize, usize, bool)> = Vec::new();
            for &(s, c) in p.parts() {
                match v.last_mut() {
                    Some((size, n, _)) if *size == s => *n += 1,
                    _ => v.push((s, 1, c == 1)),
                }
            }
            v
        })
        .collect();
    let listed_over: BTreeSet<Vec<(usize, usize, bool)>> = [
        vec![(3, 1, false)],
        vec![(3, 1, true)],
        vec![(2, 1, false), (1, 1, false)],
        vec![(2, 1, true), (1, 1, false)],
        vec![(2, 1, false), (1, 1, true)],
        vec![(2, 1, true), (1, 1, true)],
        vec![(1, 3, false)],
        vec![(1, 3, true)],
    ]
    .into_iter()
    .collect();
    let ok = c21 == BigInt::from(8) && c22 == BigInt::from(10) && two_colored == listed_two && over == listed_over;
    Outcome::new(ok, format!("c[2,1](3) = {c21}, c[2,2](3) = {c22}, listings of {} and {}", over.len(), two_colored.len()))
}

fn c2() -> Outcome {
    let mut bad = Vec::new();
    let mut compared = 0;
    for k in 1..=4u32 {
        for j in 1..=k {
            let s = ckj_series(k, j, 18).unwrap();
            for n in 0..=18 {
                compared += 1;
                if BigInt::from(ckj_enumerate(n, k, j, 18).unwrap()) != *s.coeff(n) {
                    bad.push(format!("c[{k},{j}]({n})"));
                }
            }
        }
    }
    Outcome::new(bad.is_empty(), format!("{compared} values compared{}", mismatch_text(&bad)))
}

fn mismatch_text(bad: &[String]) -> String {
    if bad.is_empty() {
        String::new()
    } else {
        format!(", mismatches: {}", bad.join(", "))
    }
}

fn c3() -> Outcome {
    let mut bad = Vec::new();
    for k in 1..=8u32 {
        for j in 1..=k {
            let a = ckj_series_form(k, j, 100, ProductForm::Binomial).unwrap();
            let b = ckj_series_form(k, j, 100, ProductForm::Collected).unwrap();
            if a != b {
                bad.push(format!("({k},{j})"));
            }
        }
    }
    Outcome::new(bad.is_empty(), format!("36 pairs to q^100{}", mismatch_text(&bad)))
}

fn c4() -> Outcome {
    let c = claims(&["c32-3n2-mod9", "c32-4n2-mod9", "c54-4n2-mod20", "c54-2n-mod10"]);
    summarize(&verify_claims(&c, Some(3000), true).unwrap())
}

fn c5() -> Outcome {
    let ids = [
        "c51-24n19-mod15",
        "c111-24n19-mod99",
        "c291-24n19-mod783",
        "c171-24n19-mod51",
        "c51-9a-27n18-mod15",
        "c71-4a-40n35-mod35",
        "c171-40n35-mod85",
        "c171-120n115-mod255",
    ];
    let reports = verify_claims(&claims(&ids), Some(2000), true).unwrap();
    let mut out = summarize(&reports);
    let nine = reports.iter().find(|r| r.claim_id == "c51-9a-27n18-mod15").unwrap();
    let deepest = nine.tower.iter().filter(|l| l.checked > 0).map(|l| l.alpha).max().unwrap_or(0);
    out.ok &= deepest == 2;
    out.detail.push_str(&format!(", 9^a tower levels reached a <= {deepest}"));
    out
}

fn c6() -> Outcome {
    let ids = ["c72-5n2-mod35", "c72-5n3-mod35", "c72-5n4-mod35", "c72-8n4-mod14", "c72-8n6-mod14"];
    summarize(&verify_claims(&claims(&ids), Some(2000), true).unwrap())
}

fn c7() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=60 {
        let e = nu_count(2, n, NuMethod::Enumerate).unwrap();
        let a = nu_count(2, n, NuMethod::Andrews).unwrap();
        let d = nu_count(2, n, NuMethod::DivisorIdentity).unwrap();
        if e != a || e != d {
            bad.push(n.to_string());
        }
    }
    let ids = [
        "nu2-4n2-mod2",
        "nu2-9n6-mod2",
        "nu2-25n10-mod2",
        "nu2-25n15-mod2",
        "nu2-49n21-mod2",
        "nu2-49n35-mod2",
        "nu2-49n42-mod2",
        "nu2-two-odd-order-primes-mod2",
        "nu2-16n14-mod4",
    ];
    let mut out = summarize(&verify_claims(&claims(&ids), Some(5000), true).unwrap());
    out.ok &= bad.is_empty();
    out.detail = format!("three methods agree for n <= 60{}; {}", mismatch_text(&bad), out.detail);
    out
}

fn c8() -> Outcome {
    let c: Vec<CongruenceClaim> = builtin_claims()
        .into_iter()
        .filter(|c| {
            ["c21-", "c41-", "c61-", "c81-", "c121-", "nu3-16n14"].iter().any(|p| c.id.starts_with(p))
                && c.progression.a > 1
        })
        .collect();
    let reports = verify_claims(&c, Some(1500), true).unwrap();
    let mut out = summarize(&reports);
    out.ok &= reports.len() >= 25;
    out
}

fn c9() -> Outcome {
    let lemma = rouse_lemma_scan(4094);
    let (h, f) = h_parity_scan(1000);
    let ok = [&lemma, &h, &f].iter().all(|r| r.passed() && r.checked > 0);
    Outcome::new(
        ok,
        format!("{} values m ≡ 6 (mod 8), H to q^{}, F to q^{}", lemma.checked, h.checked - 1, f.checked - 1),
    )
}

fn c10() -> Outcome {
    let mut bad = Vec::new();
    let mut total = 0;
    for n in 1..=12 {
        let all = marked_overpartitions(n);
        total += all.len();
        let poly = fn_polynomial(n);
        let mut counts = [0usize; 8];
        for m in &all {
            let (pre, i) = bijection_backward(m);
            if bijection_forward(&pre, i).as_ref() != Ok(m) {
                bad.push(format!("round trip n={n}"));
            }
            counts[i] += 1;
        }
        for (i, &c) in counts.iter().enumerate() {
            if BigInt::from(c) != poly.coeff(i).to_integer() {
                bad.push(format!("f[{n},{i}]"));
            }
        }
    }
    let pbar = ckj_series(2, 1, 18).unwrap();
    for n in 1..=18 {
        let f = fn_polynomial(n);
        if f.eval(&BigRational::from_integer(1.into())) != BigRational::from_integer(pbar.coeff(n).clone()) {
            bad.push(format!("f_{n}(1)"));
        }
        for k in 2..=5u32 {
            let c = ckj_series(k, 1, n).unwrap().coeff(n).clone();
            if f.eval(&BigRational::from_integer((k as i64 - 1).into())) != BigRational::from_integer(c) {
                bad.push(format!("f_{n}({})", k - 1));
            }
        }
    }
    Outcome::new(bad.is_empty(), format!("{total} marked overpartitions{}", mismatch_text(&bad)))
}

fn c11() -> Outcome {
    let entries = builtin_identities();
    let reports: Vec<VerificationReport> = entries.iter().map(|e| verify_identity_entry(e, 400).unwrap()).collect();
    summarize(&reports)
}

fn c12() -> Outcome {
    let han = han_identity_mismatch(11).unwrap();
    let mut bad = Vec::new();
    for n in 1..=14 {
        let c = compare_low_order(n, 2, Correction::None).unwrap();
        if !c.matched_orders.is_some_and(|d| d >= 1) {
            bad.push(format!("m=2 n={n}"));
        }
    }
    let mut out = Outcome::new(
        han.is_none() && bad.is_empty(),
        format!(
            "Han exact to n = 11{}, low-order theorem to n = 14{}",
            han.map_or(String::new(), |n| format!(" (fails at {n})")),
            mismatch_text(&bad)
        ),
    );
    let mut evidence = Vec::new();
    for (m, correction, need) in [(3, Correction::None, 1), (4, Correction::None, 1), (2, Correction::Lambda4, 2)] {
        let mut worst = usize::MAX;
        let mut divisible = 0;
        for n in 1..=12 {
            let c = compare_low_order(n, m, correction).unwrap();
            let matched = if c.identical() { usize::MAX } else { c.matched_orders.map_or(0, |d| d + 1) };
            worst = worst.min(matched);
            if c.difference_divisible_by_b2_one_minus_b() {
                divisible += 1;
            }
            if matched < need + 1 && matched != usize::MAX {
                out.findings.push(format!("m={m} {correction}: n={n} matched_orders={:?}", c.matched_orders));
            }
        }
        let worst_text = match worst {
            usize::MAX => "identical".to_string(),
            0 => "none".to_string(),
            w => (w - 1).to_string(),
        };
        evidence.push(format!("m={m} {correction}: min matched_orders {worst_text}, b²(1-b) | diff for {divisible}/12"));
    }
    out.detail.push_str(&format!("; evidence: {}", evidence.join("; ")));
    out
}

fn main() -> ExitCode {
    type Criterion = (u32, &'static str, fn() -> Outcome, Option<Duration>);
    let criteria: [Criterion; 12] = [
        (1, "small-n listings reproduced", c1, Some(Duration::from_secs(1))),
        (2, "enumeration equals series, n <= 18, j <= k <= 4", c2, Some(Duration::from_secs(120))),
        (3, "second and third product forms agree to q^100, k <= 8", c3, Some(Duration::from_secs(60))),
        (4, "(k,k-1) congruences to 3000", c4, Some(Duration::from_secs(120))),
        (5, "(k,1) congruences from overpartitions to 2000", c5, None),
        (6, "c[7,2] congruences to 2000", c6, None),
        (7, "nu_2 pipeline", c7, Some(Duration::from_secs(180))),
        (8, "(2k,1) and (4k,1) congruences, k <= 3, to 1500", c8, None),
        (9, "divisor convolution scan and H, F parity", c9, None),
        (10, "marked-overpartition bijection", c10, None),
        (11, "dissection identities to q^400", c11, Some(Duration::from_secs(60))),
        (12, "hook-length comparisons", c12, None),
    ];
    let mut all_ok = true;
    let mut passed = BTreeSet::new();
    for (id, name, run, limit) in criteria {
        let start = Instant::now();
        let mut out = run();
        let elapsed = start.elapsed();
        if let Some(l) = limit {
            if elapsed > l {
                out.ok = false;
                out.detail.push_str(&format!(", over the {}s budget", l.as_secs()));
            }
        }
        if out.ok {
            passed.insert(id);
        }
        all_ok &= out.ok;
        println!("{} {id:>2} {name}: {} [{:.2}s]", if out.ok { "PASS" } else { "FAIL" }, out.detail, elapsed.as_secs_f64());
        for f in &out.findings {
            println!("        FINDING (conjecture, not a failure): {f}");
        }
    }
    // full-scale claims are out of scope; their numeric shadows are 9 and 11
    let shadows = passed.contains(&9) && passed.contains(&11);
    all_ok &= shadows;
    println!(
        "{} 13 out-of-scope claims (infinite families, modular weight/level, Sturm justification): not reproduced; stand-ins 9 and 11 {}",
        if shadows { "PASS" } else { "FAIL" },
        if shadows { "pass" } else { "fail" }
    );
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
