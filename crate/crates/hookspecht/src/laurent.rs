//! Laurent polynomials in `v` with arbitrary-precision integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{Map, Number, Value};

use crate::{Error, Result};

/// Sparse map from exponent to nonzero coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    /// Adds `coeff * v^exp`, dropping the term if it cancels.
    pub fn add_term(&mut self, exp: i64, coeff: impl Into<BigInt>) {
        let coeff = coeff.into();
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(exp, coeff)` when the polynomial is a single term.
    pub fn as_monomial(&self) -> Option<(i64, &BigInt)> {
        match self.terms.len() {
            1 => self.terms().next(),
            _ => None,
        }
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Invariance under `v <-> v^-1`.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(k, c)| self.terms.get(&-k) == Some(c))
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Splits `self = v^x * c` with `c` having `max_exp = -min_exp`; returns `(x, c)`.
    pub fn center(&self) -> Result<(i64, Self)> {
        let (lo, hi) = match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) if (lo + hi) % 2 == 0 => (lo, hi),
            _ => return Err(Error::NonCenterable(self.to_string())),
        };
        let x = (lo + hi) / 2;
        Ok((x, self.shift(-x)))
    }

    /// `{"exp": coeff}` with string keys.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (k, c) in &self.terms {
            map.insert(k.to_string(), bigint_json(c));
        }
        Value::Object(map)
    }

    /// TeX rendering, e.g. `2v^{3}+v^{2}+2v`.
    pub fn to_tex(&self) -> String {
        self.render(|k| format!("v^{{{k}}}"))
    }

    fn render(&self, pow: impl Fn(i64) -> String) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.terms.iter().rev() {
            let mag = c.abs();
            if c.is_negative() {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let var = match k {
                0 => String::new(),
                1 => "v".into(),
                _ => pow(*k),
            };
            if var.is_empty() || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(&var);
        }
        out
    }
}

pub(crate) fn bigint_json(c: &BigInt) -> Value {
    Value::Number(Number::from_str(&c.to_string()).expect("integer literal is valid JSON"))
}

impl fmt::Display for LaurentPoly {
    /// Decreasing exponents: `2v^3+v^2+2v`, `2v+2+2v^-1`, `1`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|k| format!("v^{k}")))
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Parses the [`Display`](fmt::Display) form.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("cannot parse Laurent polynomial {s:?}"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t == "0" {
            return Ok(Self::zero());
        }
        if t.is_empty() || !t.is_ascii() {
            return Err(bad());
        }
        let mut p = Self::zero();
        let mut rest = t.as_str();
        while !rest.is_empty() {
            let (neg, body) = match rest.as_bytes()[0] {
                b'-' => (true, &rest[1..]),
                b'+' => (false, &rest[1..]),
                _ => (false, rest),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let end = body[1..].find(['+', '-']).map_or(body.len(), |i| i + 1);
            let end = match body[..end].strip_suffix('^') {
                // the sign belongs to a negative exponent
                Some(_) if end + 1 >= body.len() => return Err(bad()),
                Some(_) => body[end + 1..].find(['+', '-']).map_or(body.len(), |i| i + end + 1),
                None => end,
            };
            let term = &body[..end];
            rest = &body[end..];
            let (coeff, exp) = match term.split_once('v') {
                None => (term, 0),
                Some((c, e)) => {
                    let exp = if e.is_empty() {
                        1
                    } else {
                        e.strip_prefix('^').ok_or_else(bad)?.parse().map_err(|_| bad())?
                    };
                    (c, exp)
                }
            };
            let mut c: BigInt = if coeff.is_empty() { BigInt::one() } else { coeff.parse().map_err(|_| bad())? };
            if neg {
                c = -c;
            }
            p.add_term(exp, c);
        }
        Ok(p)
    }
}

impl Add for LaurentPoly {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs.clone();
        out
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: Self) {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
    }
}

impl Neg for LaurentPoly {
    type Output = Self;
    fn neg(self) -> Self {
        Self { terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect() }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &-rhs.clone()
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}
