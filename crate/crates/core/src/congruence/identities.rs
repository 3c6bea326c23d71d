//! Registered series identities: exact equalities and congruences between
//! eta-quotient expressions, colored-partition series and friends.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::arith::sigma;
use crate::colored::{ckj_series, local_product};
use crate::series::{check_order, residue, EtaExpr, TruncatedSeries};
use crate::{Error, Result};

use super::VerificationReport;

/// A series built from the pieces the registry needs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesExpr {
    Eta(EtaExpr),
    Ckj { k: u32, j: u32 },
    /// `scale · σ_r(n)` for `n >= 1`, zero at `n = 0`
    ScaledSigma { scale: i64, r: u32 },
    /// `Π_{n>=1} N(q^n) / (1 - q^n)^d`
    LocalProduct { numerator: Vec<i64>, denominator_power: u32 },
    /// `P(q)^e` for an integer polynomial `P`
    PolyPower { base: Vec<i64>, exponent: u32 },
    Product(Vec<SeriesExpr>),
    /// the terms of `inner` whose exponent is `≡ residue (mod modulus)`
    Dissect { inner: Box<SeriesExpr>, modulus: usize, residue: usize },
}

impl SeriesExpr {
    /// Parses the eta text format; panics on malformed registry literals.
    fn eta(text: &str) -> Self {
        SeriesExpr::Eta(text.parse().unwrap_or_else(|e| panic!("registry literal `{text}`: {e}")))
    }

    pub fn expand(&self, order: usize) -> Result<TruncatedSeries<BigInt>> {
        check_order(order)?;
        match self {
            SeriesExpr::Eta(e) => e.expand(order),
            SeriesExpr::Ckj { k, j } => ckj_series(*k, *j, order),
            SeriesExpr::ScaledSigma { scale, r } => {
                let mut c = vec![BigInt::zero(); order + 1];
                for (n, slot) in c.iter_mut().enumerate().skip(1) {
                    *slot = BigInt::from(sigma(*r, n as u64)?) * scale;
                }
                Ok(TruncatedSeries::from_coeffs(c))
            }
            SeriesExpr::LocalProduct { numerator, denominator_power } => {
                let num: Vec<BigInt> = numerator.iter().map(|&c| BigInt::from(c)).collect();
                local_product(&num, *denominator_power, order)
            }
            SeriesExpr::PolyPower { base, exponent } => {
                let p = TruncatedSeries::from_fn(order, |i| base.get(i).map_or(BigInt::zero(), |&c| BigInt::from(c)));
                let mut acc = TruncatedSeries::one(order);
                for _ in 0..*exponent {
                    acc = acc.mul(&p);
                }
                Ok(acc)
            }
            SeriesExpr::Product(parts) => {
                let mut acc = TruncatedSeries::one(order);
                for p in parts {
                    acc = acc.mul(&p.expand(order)?);
                }
                Ok(acc)
            }
            SeriesExpr::Dissect { inner, modulus, residue } => {
                let full = inner.expand(order)?;
                Ok(TruncatedSeries::from_fn(order, |n| {
                    if n % modulus == *residue {
                        full.coeff(n).clone()
                    } else {
                        BigInt::zero()
                    }
                }))
            }
        }
    }
}

fn poly_text(coeffs: &[i64], monomial: impl Fn(usize) -> String) -> String {
    let mut out = String::new();
    for (i, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mono = if i == 0 { String::new() } else { monomial(i) };
        let mag = c.unsigned_abs();
        let body = match (mono.is_empty(), mag) {
            (true, _) => mag.to_string(),
            (false, 1) => mono,
            (false, _) => format!("{mag}{mono}"),
        };
        match (out.is_empty(), c < 0) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

impl fmt::Display for SeriesExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesExpr::Eta(e) => write!(f, "{e}"),
            SeriesExpr::Ckj { k, j } => write!(f, "C[{k},{j}]"),
            SeriesExpr::ScaledSigma { scale: 1, r } => write!(f, "sigma{r}"),
            SeriesExpr::ScaledSigma { scale, r } => write!(f, "{scale} sigma{r}"),
            SeriesExpr::LocalProduct { numerator, denominator_power } => {
                write!(f, "prod ({}) / (1 - q^n)^{denominator_power}", poly_text(numerator, |i| match i {
                    1 => "q^n".into(),
                    _ => format!("q^{i}n"),
                }))
            }
            SeriesExpr::PolyPower { base, exponent } => write!(f, "({})^{exponent}", poly_text(base, |i| match i {
                1 => "q".into(),
                _ => format!("q^{i}"),
            })),
            SeriesExpr::Product(parts) => {
                let items: Vec<String> = parts.iter().map(|p| format!("({p})")).collect();
                write!(f, "{}", items.join(" * "))
            }
            SeriesExpr::Dissect { inner, modulus, residue } => {
                write!(f, "[q^({modulus}n+{residue})] ({inner})")
            }
        }
    }
}

impl Serialize for SeriesExpr {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "modulus", rename_all = "snake_case")]
pub enum Relation {
    Equal,
    Congruent(u64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityEntry {
    pub id: String,
    pub description: String,
    pub left: SeriesExpr,
    pub right: SeriesExpr,
    pub relation: Relation,
    pub default_bound: usize,
    /// first exponent compared
    pub start: usize,
}

impl IdentityEntry {
    fn new(id: &str, description: &str, left: SeriesExpr, right: SeriesExpr, relation: Relation) -> Self {
        IdentityEntry {
            id: id.into(),
            description: description.into(),
            left,
            right,
            relation,
            default_bound: 400,
            start: 0,
        }
    }

    fn from(mut self, start: usize) -> Self {
        self.start = start;
        self
    }

    pub fn statement(&self) -> String {
        match self.relation {
            Relation::Equal => format!("{} = {}", self.left, self.right),
            Relation::Congruent(m) => format!("{} ≡ {} (mod {m})", self.left, self.right),
        }
    }
}

fn eq(id: &str, description: &str, left: &str, right: &str) -> IdentityEntry {
    IdentityEntry::new(id, description, SeriesExpr::eta(left), SeriesExpr::eta(right), Relation::Equal)
}

fn cong(id: &str, description: &str, left: &str, right: &str, m: u64) -> IdentityEntry {
    IdentityEntry::new(id, description, SeriesExpr::eta(left), SeriesExpr::eta(right), Relation::Congruent(m))
}

/// The registered identities, sorted by id.
pub fn builtin_identities() -> Vec<IdentityEntry> {
    use SeriesExpr as S;
    // pieces of the 8-dissection behind c_{7,2}(8n+4) and c_{7,2}(8n+6)
    let a = "f16^6 / f48^2 + q^8 f8^4 f48^6 / f16^2 f24^4";
    let bc = "f16^6 f24^3 / f8^9 f48^2 + q^4 f16^2 f24 f48^2 / f8^7";
    let d = "f8^6 / f24^2 + q^2 f8^3 f24 + q^4 f24^4 + q^6 f24^7 / f8^3";
    let even_part = "f4^6 f6^3 / f2^9 f12^2";
    let f5_f1 = "f8 f20^2 / f2^2 f40 + q f4^3 f10 f40 / f2^3 f8 f20";
    let inv_f1_4 = "f4^14 / f2^14 f8^4 + 4 q f4^2 f8^4 / f2^10";

    let mut out = vec![
        eq(
            "f3-f1cubed-2dissection",
            "2-dissection of f3/f1^3",
            "f3 / f1^3",
            "f4^6 f6^3 / f2^9 f12^2 + 3 q f4^2 f6 f12^2 / f2^7",
        ),
        cong(
            "f3-f1cubed-mod9",
            "2-dissection of f3/f1^3 reduced mod 9",
            "f3 / f1^3",
            "f4^6 / f12^2 + 3 q f4^2 f12^2 / f2^4",
            9,
        ),
        eq(
            "f1cubed-f3-2dissection",
            "2-dissection of f1^3/f3",
            "f1^3 / f3",
            "f4^3 / f12 - 3 q f2^2 f12^3 / f4 f6^2",
        ),
        eq("f5-f1-2dissection", "2-dissection of f5/f1", "f5 / f1", f5_f1),
        eq("inv-f1-4th-2dissection", "2-dissection of 1/f1^4", "1 / f1^4", inv_f1_4),
        IdentityEntry::new(
            "f5-f1fifth-product",
            "f5/f1^5 as the product of the two 2-dissections",
            S::eta("f5 / f1^5"),
            S::Product(vec![S::eta(f5_f1), S::eta(inv_f1_4)]),
            Relation::Equal,
        ),
        IdentityEntry::new(
            "f5-f1fifth-even-mod4",
            "even part of f5/f1^5 mod 4",
            S::Dissect { inner: Box::new(S::eta("f5 / f1^5")), modulus: 2, residue: 0 },
            S::eta("f20^2 f4^14 / f40 f8^3 f2^16"),
            Relation::Congruent(4),
        ),
        cong(
            "f5-f1fifth-even-reduced-mod4",
            "reduction of the even part with f_a^4 ≡ f_2a^2 (mod 4)",
            "f20^2 f4^14 / f40 f8^3 f2^16",
            "f20^2 f4^6 / f40 f8^3",
            4,
        ),
        IdentityEntry::new(
            "c54-eta",
            "C[5,4] is the eta-quotient f5/f1^5",
            S::Ckj { k: 5, j: 4 },
            S::eta("f5 / f1^5"),
            Relation::Equal,
        ),
        IdentityEntry::new(
            "c32-eta",
            "C[3,2] is the eta-quotient f3/f1^3",
            S::Ckj { k: 3, j: 2 },
            S::eta("f3 / f1^3"),
            Relation::Equal,
        ),
        IdentityEntry::new(
            "c32-sigma-mod9",
            "c[3,2](m) ≡ 3 sigma1(m) (mod 9) for m >= 1",
            S::Ckj { k: 3, j: 2 },
            S::ScaledSigma { scale: 3, r: 1 },
            Relation::Congruent(9),
        )
        .from(1),
        IdentityEntry::new(
            "c72-local-form",
            "collected local factor of C[7,2]",
            S::Ckj { k: 7, j: 2 },
            S::LocalProduct { numerator: vec![1, 5, 15], denominator_power: 2 },
            Relation::Equal,
        ),
        IdentityEntry::new(
            "c72-mod2-local",
            "C[7,2] reduced mod 2",
            S::Ckj { k: 7, j: 2 },
            S::LocalProduct { numerator: vec![1, 1, 1], denominator_power: 2 },
            Relation::Congruent(2),
        ),
        IdentityEntry::new(
            "local-111-eta",
            "prod (1 + q^n + q^2n)/(1 - q^n)^2 = f3/f1^3",
            S::LocalProduct { numerator: vec![1, 1, 1], denominator_power: 2 },
            S::eta("f3 / f1^3"),
            Relation::Equal,
        ),
        IdentityEntry::new(
            "c72-mod5",
            "C[7,2] ≡ 1/f1^2 (mod 5)",
            S::Ckj { k: 7, j: 2 },
            S::eta("1 / f1^2"),
            Relation::Congruent(5),
        ),
        IdentityEntry::new(
            "even-part-f3-f1cubed",
            "even part of f3/f1^3",
            S::Dissect { inner: Box::new(S::eta("f3 / f1^3")), modulus: 2, residue: 0 },
            S::eta(even_part),
            Relation::Equal,
        ),
        IdentityEntry::new(
            "even-part-8dissection-mod2",
            "even part of f3/f1^3 ≡ (B + q^4 C) A (D + q^2 E + q^4 F + q^6 G) (mod 2)",
            S::eta(even_part),
            S::Product(vec![S::eta(bc), S::eta(a), S::eta(d)]),
            Relation::Congruent(2),
        ),
        IdentityEntry::new(
            "even-part-8dissection-f12-mod2",
            "even part of f3/f1^3 ≡ (f12/f4^3) A (D + q^2 E + q^4 F + q^6 G) (mod 2)",
            S::eta(even_part),
            S::Product(vec![S::eta("f12 / f4^3"), S::eta(a), S::eta(d)]),
            Relation::Congruent(2),
        ),
        cong("bf-cd-mod2", "BF ≡ CD (mod 2)", "f16^6 f24^7 / f8^9 f48^2", "f16^2 f48^2 / f8 f24", 2),
        cong("bg-ce-mod2", "BG ≡ CE (mod 2)", "f16^6 f24^10 / f8^12 f48^2", "f16^2 f24^2 f48^2 / f8^4", 2),
        cong("f1-squared-mod2", "f1^2 ≡ f2 (mod 2)", "f1^2", "f2", 2),
        IdentityEntry::new(
            "one-minus-q-ninth-mod3",
            "(1 - q)^9 ≡ (1 - q^3)^3 (mod 3)",
            S::PolyPower { base: vec![1, -1], exponent: 9 },
            S::PolyPower { base: vec![1, 0, 0, -1], exponent: 3 },
            Relation::Congruent(3),
        ),
        IdentityEntry::new(
            "one-minus-q-fifth-mod5",
            "1 - q^5 ≡ (1 - q)^5 (mod 5)",
            S::PolyPower { base: vec![1, 0, 0, 0, 0, -1], exponent: 1 },
            S::PolyPower { base: vec![1, -1], exponent: 5 },
            Relation::Congruent(5),
        ),
        IdentityEntry::new(
            "one-minus-q-squared-mod2",
            "1 - q^2 ≡ (1 - q)^2 (mod 2)",
            S::PolyPower { base: vec![1, 0, -1], exponent: 1 },
            S::PolyPower { base: vec![1, -1], exponent: 2 },
            Relation::Congruent(2),
        ),
    ];
    for t in 1..=3u32 {
        out.push(cong(
            &format!("f{t}-fourth-mod4"),
            &format!("f{t}^4 ≡ f{}^2 (mod 4)", 2 * t),
            &format!("f{t}^4"),
            &format!("f{}^2", 2 * t),
            4,
        ));
    }
    out.sort_by(|x, y| x.id.cmp(&y.id));
    out
}

pub fn find_identity(id: &str) -> Result<IdentityEntry> {
    builtin_identities().into_iter().find(|e| e.id == id).ok_or_else(|| Error::UnknownId(id.to_string()))
}

/// Expands both sides of the registered identity `id` to `q^order` and
/// compares them under its relation.
pub fn verify_identity(id: &str, order: usize) -> Result<VerificationReport> {
    verify_identity_entry(&find_identity(id)?, order)
}

pub fn verify_identity_entry(entry: &IdentityEntry, order: usize) -> Result<VerificationReport> {
    let (l, r) = rayon::join(|| entry.left.expand(order), || entry.right.expand(order));
    let diff = l?.sub(&r?);
    let mut report = VerificationReport::new(&entry.id, order);
    for n in entry.start..=order {
        let v = diff.coeff(n);
        match entry.relation {
            Relation::Equal => report.record(v.is_zero(), n as u64, || v.to_string(), None),
            Relation::Congruent(m) => {
                let res = residue(v, m);
                report.record(res == 0, n as u64, || v.to_string(), Some(res));
            }
        }
    }
    Ok(report.finish())
}
