//! Sparse univariate polynomials with arbitrary-precision integer
//! coefficients.
//!
//! The representation is canonical: a sorted map from exponent to nonzero
//! coefficient. Two polynomials are equal iff their term maps are equal, so
//! derived `Eq`/`Ord`/`Hash` give exact structural comparison and the type
//! can serve directly as a grouping key.
//!
//! All arithmetic is exact. `div_exact` refuses with a descriptive error
//! when the divisor does not divide the dividend; nothing is ever rounded.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Pow, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// A polynomial in one variable over the integers, stored sparsely.
///
/// Invariant: no zero coefficients are stored, so the map is a canonical
/// form of the polynomial. The zero polynomial is the empty map.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntPolynomial {
    terms: BTreeMap<u64, BigInt>,
}

impl IntPolynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::constant(1)
    }

    /// A constant polynomial.
    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    /// The monomial `c * x^e`.
    pub fn monomial(e: u64, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs.
    ///
    /// Duplicate exponents are summed; zero coefficients are dropped.
    /// A negative exponent is refused.
    pub fn from_terms<C: Into<BigInt>>(pairs: impl IntoIterator<Item = (i64, C)>) -> Result<Self> {
        let mut terms: BTreeMap<u64, BigInt> = BTreeMap::new();
        for (e, c) in pairs {
            if e < 0 {
                return Err(Error::NegativeExponent(e));
            }
            let c = c.into();
            let entry = terms.entry(e as u64).or_insert_with(BigInt::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Self { terms })
    }

    /// True when this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().next_back().copied()
    }

    /// The smallest exponent carrying a nonzero coefficient.
    pub fn min_exponent(&self) -> Option<u64> {
        self.terms.keys().next().copied()
    }

    /// The coefficient of `x^e` (zero when the term is absent).
    pub fn coeff(&self, e: u64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Number of stored (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Exact division. Returns the quotient iff `den * q == self`, otherwise
    /// a "not divisible" error naming how far elimination got.
    pub fn div_exact(&self, den: &Self) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let den_deg = den.degree().expect("nonzero divisor has a degree");
        let den_lead = den.coeff(den_deg);
        let mut rem = self.clone();
        let mut quotient = Self::zero();
        let mut steps = 0usize;
        while !rem.is_zero() {
            let rem_deg = rem.degree().expect("nonzero remainder has a degree");
            if rem_deg < den_deg {
                return Err(Error::NotDivisible(steps));
            }
            let rem_lead = rem.coeff(rem_deg);
            if (&rem_lead % &den_lead) != BigInt::zero() {
                return Err(Error::NotDivisible(steps));
            }
            let q_term = Self::monomial(rem_deg - den_deg, rem_lead / &den_lead);
            rem = &rem - &(den * &q_term);
            quotient = &quotient + &q_term;
            steps += 1;
        }
        Ok(quotient)
    }

    /// Evaluates at an integer point by Horner's rule over exponent gaps.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut prev_exp: Option<u64> = None;
        for (e, c) in self.terms.iter().rev() {
            if let Some(p) = prev_exp {
                acc *= Pow::pow(x, p - e);
            }
            acc += c;
            prev_exp = Some(*e);
        }
        if let Some(e) = prev_exp {
            acc *= Pow::pow(x, e);
        }
        acc
    }

    /// Convenience evaluation at a machine integer.
    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// Raises the polynomial to the power `e` by repeated squaring.
    pub fn pow_u64(&self, e: u64) -> Self {
        let mut base = self.clone();
        let mut e = e;
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes `inner` for the variable: returns `self(inner(x))`.
    pub fn substitute(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        let mut prev_exp: Option<u64> = None;
        for (e, c) in self.terms.iter().rev() {
            if let Some(p) = prev_exp {
                acc = &acc * &inner.pow_u64(p - e);
            }
            acc = &acc + &Self::monomial(0, c.clone());
            prev_exp = Some(*e);
        }
        if let Some(e) = prev_exp {
            acc = &acc * &inner.pow_u64(e);
        }
        acc
    }

    /// Renders with the default variable `x`, e.g. `4x^3 - 3x^2 - 6x`.
    pub fn to_text(&self) -> String {
        self.to_text_var("x")
    }

    /// Renders with a caller-chosen variable name.
    ///
    /// Terms appear in descending exponent order with normalized signs;
    /// unit coefficients are suppressed except on the constant term.
    pub fn to_text_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag_one = mag == BigInt::from(1);
            match (*e, mag_one) {
                (0, _) => out.push_str(&mag.to_string()),
                (1, true) => out.push_str(var),
                (1, false) => {
                    out.push_str(&mag.to_string());
                    out.push_str(var);
                }
                (_, true) => {
                    out.push_str(var);
                    out.push('^');
                    out.push_str(&e.to_string());
                }
                (_, false) => {
                    out.push_str(&mag.to_string());
                    out.push_str(var);
                    out.push('^');
                    out.push_str(&e.to_string());
                }
            }
        }
        out
    }

    /// Parses the same grammar `to_text` produces (variable `x`).
    ///
    /// Duplicate exponents are summed, matching `from_terms`.
    pub fn parse_text(input: &str) -> Result<Self> {
        let s = input.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let bytes: Vec<char> = s.chars().collect();
        let mut pos = 0usize;
        let mut pairs: Vec<(i64, BigInt)> = Vec::new();
        let mut first = true;
        while pos < bytes.len() {
            skip_ws(&bytes, &mut pos);
            if pos >= bytes.len() {
                break;
            }
            let sign = match bytes[pos] {
                '+' => {
                    pos += 1;
                    1
                }
                '-' => {
                    pos += 1;
                    -1
                }
                _ if first => 1,
                c => {
                    return Err(Error::Parse(format!(
                        "expected '+' or '-' before term, found {c:?}"
                    )))
                }
            };
            first = false;
            skip_ws(&bytes, &mut pos);
            let (exp, coeff) = parse_term(&bytes, &mut pos)?;
            pairs.push((exp, coeff * sign));
        }
        if pairs.is_empty() {
            return Err(Error::Parse("no terms found".into()));
        }
        Self::from_terms(pairs)
    }
}

fn skip_ws(chars: &[char], pos: &mut usize) {
    while *pos < chars.len() && chars[*pos].is_whitespace() {
        *pos += 1;
    }
}

fn parse_uint(chars: &[char], pos: &mut usize) -> Option<String> {
    let start = *pos;
    while *pos < chars.len() && chars[*pos].is_ascii_digit() {
        *pos += 1;
    }
    if *pos == start {
        None
    } else {
        Some(chars[start..*pos].iter().collect())
    }
}

/// Parses one signless term: INT | INT? 'x' ('^' UINT)?
fn parse_term(chars: &[char], pos: &mut usize) -> Result<(i64, BigInt)> {
    let digits = parse_uint(chars, pos);
    let coeff = match &digits {
        Some(d) => BigInt::from_str(d).map_err(|e| Error::Parse(e.to_string()))?,
        None => BigInt::from(1),
    };
    skip_ws(chars, pos);
    if *pos < chars.len() && chars[*pos] == 'x' {
        *pos += 1;
        skip_ws(chars, pos);
        if *pos < chars.len() && chars[*pos] == '^' {
            *pos += 1;
            skip_ws(chars, pos);
            let exp_digits = parse_uint(chars, pos)
                .ok_or_else(|| Error::Parse("expected exponent after '^'".into()))?;
            let exp: i64 = exp_digits
                .parse()
                .map_err(|_| Error::Parse(format!("exponent {exp_digits} too large")))?;
            Ok((exp, coeff))
        } else {
            Ok((1, coeff))
        }
    } else if digits.is_some() {
        Ok((0, coeff))
    } else {
        let found = chars.get(*pos).map(|c| c.to_string());
        Err(Error::Parse(format!(
            "expected term, found {:?}",
            found.unwrap_or_else(|| "end of input".into())
        )))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for IntPolynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse_text(s)
    }
}

// ---- Arithmetic ----

impl std::ops::Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let entry = terms.entry(*e).or_insert_with(BigInt::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        IntPolynomial { terms }
    }
}

impl std::ops::Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let entry = terms.entry(*e).or_insert_with(BigInt::zero);
            *entry -= c;
        }
        terms.retain(|_, c| !c.is_zero());
        IntPolynomial { terms }
    }
}

impl std::ops::Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut terms: BTreeMap<u64, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let entry = terms.entry(e1 + e2).or_insert_with(BigInt::zero);
                *entry += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        IntPolynomial { terms }
    }
}

impl std::ops::Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        let terms = self.terms.iter().map(|(e, c)| (*e, -c)).collect();
        IntPolynomial { terms }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$method(&rhs)
            }
        }
        impl std::ops::$trait<&IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: &IntPolynomial) -> IntPolynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

// ---- JSON form ----
//
// A polynomial serializes as a list of [exponent, coefficient-as-string]
// pairs in descending exponent order; coefficients travel as decimal strings
// so arbitrary precision survives any JSON reader.

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<(u64, String)> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| (*e, c.to_string()))
            .collect();
        pairs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<(i64, String)> = Vec::deserialize(deserializer)?;
        let mut converted: Vec<(i64, BigInt)> = Vec::with_capacity(pairs.len());
        for (e, c) in pairs {
            let coeff = BigInt::from_str(&c)
                .map_err(|err| D::Error::custom(format!("bad coefficient {c:?}: {err}")))?;
            converted.push((e, coeff));
        }
        Self::from_terms(converted).map_err(D::Error::custom)
    }
}
