//! Congruence claims and series identities as checkable data, and the
//! verifier that evaluates them to a bound.

mod claims;
mod divisor;
mod identities;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

pub use claims::builtin_claims;
pub use divisor::{
    divisor_convolution_table, f_series, h_parity_scan, h_series, nu2_divisor_identity, nu2_divisor_table,
    representation_count, rouse_lemma_scan,
};
pub use identities::{builtin_identities, find_identity, verify_identity, verify_identity_entry, IdentityEntry, Relation, SeriesExpr};

use crate::arith::{divisor_count_table, is_square, is_twice_square, odd_order_prime_count, sigma};
use crate::colored::{andrews_nu_series, ckj_series, local_product, nu_enumerate_all, NU_ENUMERATION_LIMIT};
use crate::series::{check_order, residue, EtaQuotient};
use crate::{Error, Result};

/// Counterexamples kept per report; the total is always recorded.
pub const MAX_COUNTEREXAMPLES: usize = 100;

/// A coefficient stream the verifier knows how to produce.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SequenceSpec {
    Ckj { k: u32, j: u32 },
    Overpartition,
    PlainPartition,
    KColored { k: u32 },
    Nu { i: usize },
    /// `Σ_i (-1)^i ν_i(n)`
    NuAlternating,
    DivisorCount,
    SigmaR { r: u32 },
    /// left-hand side of a registered identity
    Named { id: String },
    Zero,
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceSpec::Ckj { k, j } => write!(f, "c[{k},{j}]"),
            SequenceSpec::Overpartition => write!(f, "pbar"),
            SequenceSpec::PlainPartition => write!(f, "p"),
            SequenceSpec::KColored { k } => write!(f, "c[{k}]"),
            SequenceSpec::Nu { i } => write!(f, "nu{i}"),
            SequenceSpec::NuAlternating => write!(f, "nu_alt"),
            SequenceSpec::DivisorCount => write!(f, "d"),
            SequenceSpec::SigmaR { r } => write!(f, "sigma{r}"),
            SequenceSpec::Named { id } => write!(f, "[{id}]"),
            SequenceSpec::Zero => write!(f, "0"),
        }
    }
}

fn to_vec(s: crate::series::TruncatedSeries<BigInt>) -> Vec<BigInt> {
    s.into_coeffs()
}

fn cross_check(what: &str, fast: &[BigInt], slow: impl Fn(usize) -> Result<BigInt>) -> Result<()> {
    for (n, v) in fast.iter().enumerate().take(NU_ENUMERATION_LIMIT + 1).skip(1) {
        if *v != slow(n)? {
            return Err(Error::OracleMismatch { what: what.to_string(), index: n });
        }
    }
    Ok(())
}

impl SequenceSpec {
    /// Coefficients `0..=order`.
    pub fn resolve(&self, order: usize) -> Result<Vec<BigInt>> {
        check_order(order)?;
        Ok(match self {
            SequenceSpec::Ckj { k, j } => to_vec(ckj_series(*k, *j, order)?),
            SequenceSpec::Overpartition => to_vec(EtaQuotient::new([(2, 1), (1, -2)])?.expand(order)?),
            SequenceSpec::PlainPartition => to_vec(EtaQuotient::new([(1, -1)])?.expand(order)?),
            SequenceSpec::KColored { k } => to_vec(EtaQuotient::new([(1, -(*k as i64))])?.expand(order)?),
            SequenceSpec::Nu { i: 0 } => {
                return Err(Error::InvalidArgument("nu_0 is not a supported sequence".into()))
            }
            SequenceSpec::Nu { i: 2 } => {
                let v: Vec<BigInt> = nu2_divisor_table(order).into_iter().map(BigInt::from).collect();
                cross_check("nu_2", &v, |n| Ok(BigInt::from(nu_enumerate_all(n)?.get(2).copied().unwrap_or(0))))?;
                v
            }
            SequenceSpec::Nu { i } => {
                let v = to_vec(andrews_nu_series(*i, order)?.swap_remove(*i));
                cross_check(&format!("nu_{i}"), &v, |n| {
                    Ok(BigInt::from(nu_enumerate_all(n)?.get(*i).copied().unwrap_or(0)))
                })?;
                v
            }
            SequenceSpec::NuAlternating => {
                // Σ_λ (-1)^{ℓ₀(λ)} = Π (1 - 2q^n) / (1 - q^n)
                to_vec(local_product(&[BigInt::from(1), BigInt::from(-2)], 1, order)?)
            }
            SequenceSpec::DivisorCount => {
                let mut t: Vec<BigInt> = divisor_count_table(order).into_iter().map(BigInt::from).collect();
                t[0] = BigInt::zero();
                t
            }
            SequenceSpec::SigmaR { r } => {
                let mut t = vec![BigInt::zero(); order + 1];
                for (n, slot) in t.iter_mut().enumerate().skip(1) {
                    *slot = BigInt::from(sigma(*r, n as u64)?);
                }
                t
            }
            SequenceSpec::Named { id } => to_vec(find_identity(id)?.left.expand(order)?),
            SequenceSpec::Zero => vec![BigInt::zero(); order + 1],
        })
    }
}

/// Shared, read-only coefficient streams keyed by sequence.
#[derive(Default)]
pub struct SequenceCache {
    map: Mutex<HashMap<SequenceSpec, Arc<Vec<BigInt>>>>,
}

impl SequenceCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, spec: &SequenceSpec, order: usize) -> Result<Arc<Vec<BigInt>>> {
        if let Some(v) = self.map.lock().expect("cache poisoned").get(spec) {
            if v.len() > order {
                return Ok(Arc::clone(v));
            }
        }
        let fresh = Arc::new(spec.resolve(order)?);
        let mut map = self.map.lock().expect("cache poisoned");
        let entry = map.entry(spec.clone()).or_insert_with(|| Arc::clone(&fresh));
        if entry.len() < fresh.len() {
            *entry = Arc::clone(&fresh);
        }
        Ok(fresh)
    }
}

/// Condition on the index that must hold for the congruence to be claimed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Hypothesis {
    None,
    Positive,
    /// `n` is neither `k²` nor `2k²`
    NotSquareOrTwiceSquare,
    /// at least this many primes divide `n` to an odd power
    OddOrderPrimesAtLeast(usize),
}

impl Hypothesis {
    pub fn holds(&self, n: u64) -> Result<bool> {
        Ok(match self {
            Hypothesis::None => true,
            Hypothesis::Positive => n > 0,
            Hypothesis::NotSquareOrTwiceSquare => !is_square(n) && !is_twice_square(n),
            Hypothesis::OddOrderPrimesAtLeast(t) => n > 0 && odd_order_prime_count(n)? >= *t,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Progression {
    pub a: u64,
    pub b: u64,
}

impl fmt::Display for Progression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (1, 0) => write!(f, "n"),
            (a, 0) => write!(f, "{a}n"),
            (1, b) => write!(f, "n+{b}"),
            (a, b) => write!(f, "{a}n+{b}"),
        }
    }
}

/// `Σ coefficient · sequence(β^α (A n + B)) ≡ 0 (mod m)` for every index
/// satisfying the hypothesis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CongruenceClaim {
    pub id: String,
    pub terms: Vec<(i64, SequenceSpec)>,
    pub progression: Progression,
    pub tower: Option<u64>,
    pub modulus: u64,
    pub hypothesis: Hypothesis,
    pub source: String,
    pub family: String,
    pub conjecture: bool,
    pub default_bound: usize,
}

impl CongruenceClaim {
    pub fn new(id: impl Into<String>, seq: SequenceSpec, a: u64, b: u64, modulus: u64) -> Self {
        CongruenceClaim {
            id: id.into(),
            terms: vec![(1, seq)],
            progression: Progression { a, b },
            tower: None,
            modulus,
            hypothesis: Hypothesis::None,
            source: String::new(),
            family: String::new(),
            conjecture: false,
            default_bound: 2000,
        }
    }

    pub fn plus(mut self, coefficient: i64, seq: SequenceSpec) -> Self {
        self.terms.push((coefficient, seq));
        self
    }

    pub fn tower(mut self, base: u64) -> Self {
        self.tower = Some(base);
        self
    }

    pub fn hypothesis(mut self, h: Hypothesis) -> Self {
        self.hypothesis = h;
        self
    }

    pub fn source(mut self, s: &str) -> Self {
        self.source = s.to_string();
        self
    }

    pub fn family(mut self, s: &str) -> Self {
        self.family = s.to_string();
        self
    }

    pub fn conjecture(mut self) -> Self {
        self.conjecture = true;
        self
    }

    pub fn bound(mut self, bound: usize) -> Self {
        self.default_bound = bound;
        self
    }

    /// `"theorem"` or `"conjecture"`.
    pub fn kind(&self) -> &'static str {
        if self.conjecture {
            "conjecture"
        } else {
            "theorem"
        }
    }

    /// Human-readable form, e.g. `c[5,1](24n+19) ≡ 0 (mod 15)`.
    pub fn statement(&self) -> String {
        let arg = match self.tower {
            Some(beta) => format!("{beta}^a({})", self.progression),
            None => self.progression.to_string(),
        };
        let mut lhs = String::new();
        for (i, (c, seq)) in self.terms.iter().enumerate() {
            let mag = c.unsigned_abs();
            let sign = match (i, *c < 0) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let coef = if mag == 1 { String::new() } else { format!("{mag}*") };
            lhs.push_str(&format!("{sign}{coef}{seq}({arg})"));
        }
        let cond = match self.hypothesis {
            Hypothesis::None => String::new(),
            Hypothesis::Positive => ", index > 0".into(),
            Hypothesis::NotSquareOrTwiceSquare => ", index not k^2 or 2k^2".into(),
            Hypothesis::OddOrderPrimesAtLeast(t) => format!(", index has >= {t} primes to odd order"),
        };
        format!("{lhs} ≡ 0 (mod {}){cond}", self.modulus)
    }

    fn validate(&self) -> Result<()> {
        if self.modulus < 2 {
            return Err(Error::InvalidModulus(self.modulus));
        }
        if self.progression.a == 0 {
            return Err(Error::InvalidArgument(format!("{}: progression step must be positive", self.id)));
        }
        if let Some(beta) = self.tower {
            if beta < 2 || self.progression.b == 0 {
                return Err(Error::InvalidArgument(format!(
                    "{}: towers need base >= 2 and a positive offset",
                    self.id
                )));
            }
        }
        Ok(())
    }

    /// Indices `β^α (A n + B) <= bound`, grouped by `α`.
    fn index_sets(&self, bound: usize) -> Vec<(u32, u64, Vec<u64>)> {
        let bound = bound as u64;
        let Progression { a, b } = self.progression;
        let mut out = Vec::new();
        let mut scale = 1u64;
        let mut alpha = 0u32;
        loop {
            let idx: Vec<u64> =
                (0..).map(|n| scale * (a * n + b)).take_while(|&m| m <= bound).collect();
            if idx.is_empty() {
                if alpha == 0 {
                    out.push((0, 1, idx));
                }
                break;
            }
            out.push((alpha, scale, idx));
            match self.tower {
                Some(beta) => match scale.checked_mul(beta) {
                    Some(s) => scale = s,
                    None => break,
                },
                None => break,
            }
            alpha += 1;
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: u64,
    /// exact value, as a decimal string
    pub value: String,
    /// least non-negative residue; absent for exact identities
    pub residue: Option<u64>,
}

/// Coverage of one level `α` of a power tower.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TowerLevel {
    pub alpha: u32,
    pub scale: u64,
    pub checked: usize,
    pub largest_index: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub bound: usize,
    pub checked: usize,
    pub status: Status,
    pub counterexamples: Vec<Counterexample>,
    /// total failures, which may exceed the stored counterexamples
    pub failures: usize,
    pub conjecture: bool,
    #[serde(skip_serializing_if = "usize_is_zero")]
    pub skipped_by_hypothesis: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub tower: Vec<TowerLevel>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

fn usize_is_zero(v: &usize) -> bool {
    *v == 0
}

impl VerificationReport {
    pub fn new(claim_id: impl Into<String>, bound: usize) -> Self {
        VerificationReport {
            claim_id: claim_id.into(),
            bound,
            checked: 0,
            status: Status::Pass,
            counterexamples: Vec::new(),
            failures: 0,
            conjecture: false,
            skipped_by_hypothesis: 0,
            tower: Vec::new(),
            warning: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn record(&mut self, ok: bool, n: u64, value: impl FnOnce() -> String, residue: Option<u64>) {
        self.checked += 1;
        if ok {
            return;
        }
        self.status = Status::Fail;
        self.failures += 1;
        if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
            self.counterexamples.push(Counterexample { n, value: value(), residue });
        }
    }

    pub(crate) fn finish(mut self) -> Self {
        if self.checked == 0 && self.warning.is_none() {
            self.warning = Some("no index within the bound".into());
        }
        self
    }
}

/// Checks a claim at every progression element `<= bound`.
pub fn verify_claim(claim: &CongruenceClaim, bound: usize) -> Result<VerificationReport> {
    verify_claim_cached(claim, bound, &SequenceCache::new())
}

/// As [`verify_claim`], reading sequences from a shared cache.
pub fn verify_claim_cached(claim: &CongruenceClaim, bound: usize, cache: &SequenceCache) -> Result<VerificationReport> {
    claim.validate()?;
    let streams = claim
        .terms
        .iter()
        .map(|(c, s)| Ok((BigInt::from(*c), cache.get(s, bound)?)))
        .collect::<Result<Vec<_>>>()?;
    let m = BigInt::from(claim.modulus);
    let mut report = VerificationReport::new(&claim.id, bound);
    report.conjecture = claim.conjecture;
    for (alpha, scale, indices) in claim.index_sets(bound) {
        let mut level = TowerLevel { alpha, scale, checked: 0, largest_index: None };
        for n in indices {
            if !claim.hypothesis.holds(n)? {
                report.skipped_by_hypothesis += 1;
                continue;
            }
            let value: BigInt = streams.iter().map(|(c, s)| c * &s[n as usize]).sum();
            let ok = (&value % &m).is_zero();
            report.record(ok, n, || value.to_string(), Some(residue(&value, claim.modulus)));
            level.checked += 1;
            level.largest_index = Some(n);
        }
        if claim.tower.is_some() {
            report.tower.push(level);
        }
    }
    Ok(report.finish())
}

/// Verifies many claims, each at `bound` or its own default, sorted by id.
///
/// Sequences are resolved once at the largest order any claim needs and
/// shared; the result does not depend on `parallel`.
pub fn verify_claims(claims: &[CongruenceClaim], bound: Option<usize>, parallel: bool) -> Result<Vec<VerificationReport>> {
    let mut needed: BTreeMap<SequenceSpec, usize> = BTreeMap::new();
    for c in claims {
        c.validate()?;
        let b = bound.unwrap_or(c.default_bound);
        for (_, s) in &c.terms {
            let e = needed.entry(s.clone()).or_insert(0);
            *e = (*e).max(b);
        }
    }
    let cache = SequenceCache::new();
    let prefetch = |(s, order): (&SequenceSpec, &usize)| cache.get(s, *order).map(|_| ());
    if parallel {
        needed.par_iter().try_for_each(prefetch)?;
    } else {
        needed.iter().try_for_each(prefetch)?;
    }
    let run = |c: &CongruenceClaim| verify_claim_cached(c, bound.unwrap_or(c.default_bound), &cache);
    let mut reports = if parallel {
        claims.par_iter().map(run).collect::<Result<Vec<_>>>()?
    } else {
        claims.iter().map(run).collect::<Result<Vec<_>>>()?
    };
    reports.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
    Ok(reports)
}

/// Looks up a builtin claim by id.
pub fn find_claim(id: &str) -> Result<CongruenceClaim> {
    builtin_claims().into_iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownId(id.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_claim_checks_everything() {
        let c = CongruenceClaim::new("zero", SequenceSpec::Zero, 1, 0, 7);
        let r = verify_claim(&c, 50).unwrap();
        assert!(r.passed());
        assert_eq!(r.checked, 51);
    }

    #[test]
    fn below_first_index_warns() {
        let c = CongruenceClaim::new("late", SequenceSpec::Zero, 10, 100, 3);
        let r = verify_claim(&c, 50).unwrap();
        assert!(r.passed());
        assert_eq!(r.checked, 0);
        assert!(r.warning.is_some());
    }

    #[test]
    fn failing_claim_reports_counterexample() {
        let c = CongruenceClaim::new("p-mod2", SequenceSpec::PlainPartition, 1, 0, 2);
        let r = verify_claim(&c, 10).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.counterexamples[0], Counterexample { n: 0, value: "1".into(), residue: Some(1) });
        assert_eq!(r.failures, r.counterexamples.len());
    }

    #[test]
    fn tower_levels() {
        let c = CongruenceClaim::new("t", SequenceSpec::Zero, 27, 18, 3).tower(9);
        let r = verify_claim(&c, 2000).unwrap();
        let levels: Vec<(u32, usize)> = r.tower.iter().map(|l| (l.alpha, l.checked)).collect();
        // 27n+18 <= 2000: 74 values; 9(27n+18): 8; 81(27n+18): 1
        assert_eq!(levels, vec![(0, 74), (1, 8), (2, 1)]);
    }

    #[test]
    fn kim_claim() {
        let c = CongruenceClaim::new("kim", SequenceSpec::Overpartition, 1, 1, 8)
            .hypothesis(Hypothesis::NotSquareOrTwiceSquare);
        let r = verify_claim(&c, 50).unwrap();
        assert!(r.passed());
        assert_eq!(r.skipped_by_hypothesis, 7 + 5);
        let pbar = SequenceSpec::Overpartition.resolve(5).unwrap();
        assert_eq!(pbar[5], BigInt::from(24));
    }

    #[test]
    fn c32_thm() {
        let c = CongruenceClaim::new("c32", SequenceSpec::Ckj { k: 3, j: 2 }, 3, 2, 9);
        assert!(verify_claim(&c, 600).unwrap().passed());
    }

    #[test]
    fn invalid_claims() {
        let c = CongruenceClaim::new("m1", SequenceSpec::Zero, 1, 0, 1);
        assert_eq!(verify_claim(&c, 5), Err(Error::InvalidModulus(1)));
        let c = CongruenceClaim::new("a0", SequenceSpec::Zero, 0, 0, 2);
        assert!(verify_claim(&c, 5).is_err());
    }

    #[test]
    fn statement_text() {
        let c = CongruenceClaim::new("x", SequenceSpec::Ckj { k: 5, j: 1 }, 24, 19, 15);
        assert_eq!(c.statement(), "c[5,1](24n+19) ≡ 0 (mod 15)");
        let c = CongruenceClaim::new("y", SequenceSpec::Nu { i: 3 }, 16, 14, 8).plus(-1, SequenceSpec::DivisorCount);
        assert_eq!(c.statement(), "nu3(16n+14) - d(16n+14) ≡ 0 (mod 8)");
    }

    #[test]
    fn alternating_nu_matches_enumeration() {
        let alt = SequenceSpec::NuAlternating.resolve(30).unwrap();
        for (n, v) in alt.iter().enumerate().skip(1) {
            let nu = nu_enumerate_all(n).unwrap();
            let expect: i64 = nu.iter().enumerate().map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) }).sum();
            assert_eq!(*v, BigInt::from(expect), "n = {n}");
        }
    }

    #[test]
    fn parallel_matches_sequential() {
        let claims: Vec<_> = builtin_claims().into_iter().filter(|c| c.family == "(k,k-1)").collect();
        assert!(!claims.is_empty());
        let a = verify_claims(&claims, Some(300), false).unwrap();
        let b = verify_claims(&claims, Some(300), true).unwrap();
        assert_eq!(a, b);
    }
}
