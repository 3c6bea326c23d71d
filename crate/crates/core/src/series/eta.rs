//! Eta-quotients `Π f_t^{e_t}` with `f_t = Π_{n>=1} (1 - q^{tn})`, and the
//! text format used by the identity registry.
//!
//! A term is written `[scalar] [q | q^k] factors [/ factors]`, factors being
//! `f<t>` or `f<t>^<e>`, e.g. `3 q f4^2 f6 f12^2 / f2^7`. Terms are joined
//! with `+` or `-`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{check_order, TruncatedSeries};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct EtaQuotient {
    factors: BTreeMap<u32, i64>,
}

impl EtaQuotient {
    /// Repeated scales are combined and zero exponents dropped.
    pub fn new<I: IntoIterator<Item = (u32, i64)>>(factors: I) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (t, e) in factors {
            if t == 0 {
                return Err(Error::InvalidArgument("eta scale must be at least 1".into()));
            }
            *map.entry(t).or_insert(0) += e;
        }
        map.retain(|_, e| *e != 0);
        Ok(EtaQuotient { factors: map })
    }

    pub fn factors(&self) -> &BTreeMap<u32, i64> {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// Product of two quotients (exponents add).
    pub fn times(&self, other: &EtaQuotient) -> EtaQuotient {
        let mut out = self.clone();
        for (&t, &e) in &other.factors {
            *out.factors.entry(t).or_insert(0) += e;
        }
        out.factors.retain(|_, e| *e != 0);
        out
    }

    /// Expansion to `q^order`: each `f_t` from the pentagonal number
    /// theorem, raised to its exponent, then the factors multiplied.
    pub fn expand(&self, order: usize) -> Result<TruncatedSeries<BigInt>> {
        check_order(order)?;
        let mut acc = TruncatedSeries::one(order);
        for (&t, &e) in &self.factors {
            let factor = pentagonal(t as usize, order).pow(e)?;
            acc = acc.mul(&factor);
        }
        Ok(acc)
    }
}

/// `eta_expand` under its operational name.
pub fn eta_expand(eq: &EtaQuotient, order: usize) -> Result<TruncatedSeries<BigInt>> {
    eq.expand(order)
}

/// `f_t = Σ_{k ∈ Z} (-1)^k q^{t k(3k-1)/2}` to `q^order`.
pub fn pentagonal(t: usize, order: usize) -> TruncatedSeries<BigInt> {
    assert!(t >= 1);
    let mut terms = vec![(0usize, BigInt::one())];
    for k in 1usize.. {
        let sign = if k % 2 == 1 { -BigInt::one() } else { BigInt::one() };
        let lo = t * k * (3 * k - 1) / 2;
        if lo > order {
            break;
        }
        terms.push((lo, sign.clone()));
        let hi = t * k * (3 * k + 1) / 2;
        if hi <= order {
            terms.push((hi, sign));
        }
    }
    TruncatedSeries::from_terms(order, terms)
}

impl fmt::Display for EtaQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let render = |out: &mut Vec<String>, t: u32, e: i64| {
            let e = e.abs();
            out.push(if e == 1 { format!("f{t}") } else { format!("f{t}^{e}") });
        };
        let mut num = Vec::new();
        let mut den = Vec::new();
        for (&t, &e) in &self.factors {
            if e > 0 {
                render(&mut num, t, e);
            } else {
                render(&mut den, t, e);
            }
        }
        if num.is_empty() {
            num.push("1".into());
        }
        write!(f, "{}", num.join(" "))?;
        if !den.is_empty() {
            write!(f, " / {}", den.join(" "))?;
        }
        Ok(())
    }
}

/// `coefficient · q^shift · quotient`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EtaTerm {
    pub coefficient: BigInt,
    pub shift: usize,
    pub quotient: EtaQuotient,
}

impl EtaTerm {
    pub fn expand(&self, order: usize) -> Result<TruncatedSeries<BigInt>> {
        check_order(order)?;
        if self.shift > order || self.coefficient.is_zero() {
            return Ok(TruncatedSeries::zero(order));
        }
        let body = self.quotient.expand(order - self.shift)?;
        let mut coeffs = vec![BigInt::zero(); self.shift];
        coeffs.extend(body.into_coeffs().into_iter().map(|c| c * &self.coefficient));
        Ok(TruncatedSeries::from_coeffs(coeffs))
    }
}

/// A signed sum of eta terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EtaExpr {
    pub terms: Vec<EtaTerm>,
}

impl EtaExpr {
    pub fn expand(&self, order: usize) -> Result<TruncatedSeries<BigInt>> {
        let mut acc = TruncatedSeries::zero(order);
        for term in &self.terms {
            acc = acc.add(&term.expand(order)?);
        }
        Ok(acc)
    }
}

impl From<EtaQuotient> for EtaExpr {
    fn from(quotient: EtaQuotient) -> Self {
        EtaExpr { terms: vec![EtaTerm { coefficient: BigInt::one(), shift: 0, quotient }] }
    }
}

impl fmt::Display for EtaTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut head = Vec::new();
        let mag = self.coefficient.abs();
        if !mag.is_one() {
            head.push(mag.to_string());
        }
        match self.shift {
            0 => {}
            1 => head.push("q".into()),
            k => head.push(format!("q^{k}")),
        }
        let body = self.quotient.to_string();
        if head.is_empty() {
            write!(f, "{body}")
        } else if body == "1" {
            write!(f, "{}", head.join(" "))
        } else if let Some(den) = body.strip_prefix("1 / ") {
            write!(f, "{} / {den}", head.join(" "))
        } else {
            write!(f, "{} {body}", head.join(" "))
        }
    }
}

impl fmt::Display for EtaExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, term) in self.terms.iter().enumerate() {
            let neg = term.coefficient.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write!(f, "{term}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Q(usize),
    F(u32, i64),
    Slash,
    Plus,
    Minus,
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let err = |reason: String| Error::Parse { input: input.to_string(), reason };
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    let read_digits = |i: &mut usize| -> String {
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        chars[start..*i].iter().collect()
    };
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() || c == '*' => i += 1,
            '/' => {
                out.push(Token::Slash);
                i += 1;
            }
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' | '\u{2212}' => {
                out.push(Token::Minus);
                i += 1;
            }
            '0'..='9' => {
                let digits = read_digits(&mut i);
                out.push(Token::Int(digits.parse().map_err(|_| err("bad integer".into()))?));
            }
            'q' => {
                i += 1;
                let mut k = 1;
                if i < chars.len() && chars[i] == '^' {
                    i += 1;
                    let digits = read_digits(&mut i);
                    k = digits.parse().map_err(|_| err("bad exponent after q^".into()))?;
                }
                out.push(Token::Q(k));
            }
            'f' => {
                i += 1;
                let digits = read_digits(&mut i);
                let t: u32 = digits.parse().map_err(|_| err("expected scale after f".into()))?;
                if t == 0 {
                    return Err(err("eta scale must be at least 1".into()));
                }
                let mut e: i64 = 1;
                if i < chars.len() && chars[i] == '^' {
                    i += 1;
                    let neg = i < chars.len() && chars[i] == '-';
                    if neg {
                        i += 1;
                    }
                    let digits = read_digits(&mut i);
                    e = digits.parse().map_err(|_| err(format!("bad exponent for f{t}")))?;
                    if neg {
                        e = -e;
                    }
                }
                out.push(Token::F(t, e));
            }
            other => return Err(err(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

fn parse_term(input: &str, sign: bool, tokens: &[Token]) -> Result<EtaTerm> {
    let err = |reason: &str| Error::Parse { input: input.to_string(), reason: reason.into() };
    if tokens.is_empty() {
        return Err(err("empty term"));
    }
    let mut coefficient = BigInt::one();
    let mut shift = 0;
    let mut factors = Vec::new();
    let mut in_denominator = false;
    for tok in tokens {
        match tok {
            Token::Slash if in_denominator => return Err(err("more than one `/` in a term")),
            Token::Slash => in_denominator = true,
            Token::Int(v) if in_denominator => {
                if !v.is_one() {
                    return Err(err("integer divisors are not supported"));
                }
            }
            Token::Int(v) => coefficient *= v,
            Token::Q(_) if in_denominator => return Err(err("q powers must be in the numerator")),
            Token::Q(k) => shift += k,
            Token::F(t, e) => factors.push((*t, if in_denominator { -e } else { *e })),
            Token::Plus | Token::Minus => unreachable!("split out by the caller"),
        }
    }
    if sign {
        coefficient = -coefficient;
    }
    Ok(EtaTerm { coefficient, shift, quotient: EtaQuotient::new(factors)? })
}

impl FromStr for EtaExpr {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let tokens = tokenize(input)?;
        let mut terms = Vec::new();
        let mut current = Vec::new();
        let mut negative = false;
        for tok in tokens {
            match tok {
                Token::Plus | Token::Minus => {
                    if !current.is_empty() {
                        terms.push(parse_term(input, negative, &current)?);
                        current.clear();
                        negative = false;
                    } else if !terms.is_empty() && tok == Token::Plus {
                        return Err(Error::Parse {
                            input: input.to_string(),
                            reason: "dangling operator".into(),
                        });
                    }
                    if tok == Token::Minus {
                        negative = !negative;
                    }
                }
                other => current.push(other),
            }
        }
        if current.is_empty() {
            return Err(Error::Parse { input: input.to_string(), reason: "empty term".into() });
        }
        terms.push(parse_term(input, negative, &current)?);
        Ok(EtaExpr { terms })
    }
}

impl FromStr for EtaQuotient {
    type Err = Error;

    /// A single term with coefficient 1 and no `q` prefix.
    fn from_str(input: &str) -> Result<Self> {
        let expr: EtaExpr = input.parse()?;
        match expr.terms.as_slice() {
            [t] if t.shift == 0 && t.coefficient.is_one() => Ok(t.quotient.clone()),
            _ => Err(Error::Parse {
                input: input.to_string(),
                reason: "expected a bare eta-quotient".into(),
            }),
        }
    }
}
