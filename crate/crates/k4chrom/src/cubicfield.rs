//! Exact arithmetic in the quotient ring Z[t]/(t^3 + t + 1).
//!
//! Elements are triples `c0 + c1*t + c2*t^2`; multiplication rewrites
//! `t^3 = -t - 1`. The modulus is irreducible over Q and `t` is not a root
//! of unity (its real root has absolute value below one), so the powers
//! `t^0, t^1, t^2, ...` are pairwise distinct. That makes the discrete-log
//! style searches `solve_power` and `solve_power_scaled` well-posed: the
//! first hit inside the bound is the only hit.
//!
//! The point of the module is replaying size-difference identities: showing
//! that a claimed relation between exponent sums holds (or fails) after
//! reduction, and recovering the unique exponent that satisfies an equation
//! of the shape `t^n * f = g`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::polyring::IntPolynomial;

/// An element `c0 + c1*t + c2*t^2` of Z[t]/(t^3 + t + 1).
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CubicElement {
    c: [BigInt; 3],
}

impl CubicElement {
    /// Builds an element from its three coefficients (constant first).
    pub fn new(c0: impl Into<BigInt>, c1: impl Into<BigInt>, c2: impl Into<BigInt>) -> Self {
        Self {
            c: [c0.into(), c1.into(), c2.into()],
        }
    }

    /// The zero element.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit element.
    pub fn one() -> Self {
        Self::new(1, 0, 0)
    }

    /// The generator `t`.
    pub fn t() -> Self {
        Self::new(0, 1, 0)
    }

    /// The coefficients `(c0, c1, c2)`, constant first.
    pub fn coefficients(&self) -> &[BigInt; 3] {
        &self.c
    }

    /// True for the zero element.
    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|v| v.is_zero())
    }

    /// Reduces an integer polynomial modulo `t^3 + t + 1`.
    ///
    /// Horner's rule over exponent gaps, so sparse polynomials with huge
    /// exponents reduce in logarithmic work per gap.
    pub fn reduce(p: &IntPolynomial) -> Self {
        let mut acc = Self::zero();
        let mut prev_exp: Option<u64> = None;
        for (e, coeff) in p.terms().collect::<Vec<_>>().into_iter().rev() {
            if let Some(prev) = prev_exp {
                acc = &acc * &Self::t().pow_u64(prev - e);
            }
            acc.c[0] += coeff;
            prev_exp = Some(e);
        }
        if let Some(e) = prev_exp {
            acc = &acc * &Self::t().pow_u64(e);
        }
        acc
    }

    /// Raises to the power `e` by repeated squaring.
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

    /// Finds the unique `n <= bound` with `t^n == target`, if any.
    pub fn solve_power(target: &Self, bound: u64) -> Option<u64> {
        Self::solve_power_scaled(&Self::one(), target, bound)
    }

    /// Finds the unique `n <= bound` with `t^n * factor == target`, if any.
    ///
    /// Scans forward, multiplying by `t` once per step; since the powers of
    /// `t` are pairwise distinct, at most one `n` can ever satisfy the
    /// equation, so the first hit is returned without ambiguity.
    pub fn solve_power_scaled(factor: &Self, target: &Self, bound: u64) -> Option<u64> {
        let mut acc = factor.clone();
        for n in 0..=bound {
            if &acc == target {
                return Some(n);
            }
            acc = &acc * &Self::t();
        }
        None
    }

    /// Decides whether two integer polynomials agree after reduction, i.e.
    /// whether their difference is divisible by `t^3 + t + 1`.
    pub fn verify_identity(lhs: &IntPolynomial, rhs: &IntPolynomial) -> bool {
        Self::reduce(lhs) == Self::reduce(rhs)
    }
}

// ---- Arithmetic ----

impl std::ops::Add for &CubicElement {
    type Output = CubicElement;
    fn add(self, rhs: &CubicElement) -> CubicElement {
        CubicElement {
            c: [
                &self.c[0] + &rhs.c[0],
                &self.c[1] + &rhs.c[1],
                &self.c[2] + &rhs.c[2],
            ],
        }
    }
}

impl std::ops::Sub for &CubicElement {
    type Output = CubicElement;
    fn sub(self, rhs: &CubicElement) -> CubicElement {
        CubicElement {
            c: [
                &self.c[0] - &rhs.c[0],
                &self.c[1] - &rhs.c[1],
                &self.c[2] - &rhs.c[2],
            ],
        }
    }
}

impl std::ops::Mul for &CubicElement {
    type Output = CubicElement;
    fn mul(self, rhs: &CubicElement) -> CubicElement {
        // Raw product degrees 0..4, then t^3 = -1 - t and t^4 = -t - t^2.
        let a = &self.c;
        let b = &rhs.c;
        let d0 = &a[0] * &b[0];
        let d1 = &a[0] * &b[1] + &a[1] * &b[0];
        let d2 = &a[0] * &b[2] + &a[1] * &b[1] + &a[2] * &b[0];
        let d3 = &a[1] * &b[2] + &a[2] * &b[1];
        let d4 = &a[2] * &b[2];
        CubicElement {
            c: [d0 - &d3, d1 - &d3 - &d4, d2 - &d4],
        }
    }
}

impl std::ops::Neg for &CubicElement {
    type Output = CubicElement;
    fn neg(self) -> CubicElement {
        CubicElement {
            c: [-&self.c[0], -&self.c[1], -&self.c[2]],
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait for CubicElement {
            type Output = CubicElement;
            fn $method(self, rhs: CubicElement) -> CubicElement {
                (&self).$method(&rhs)
            }
        }
        impl std::ops::$trait<&CubicElement> for CubicElement {
            type Output = CubicElement;
            fn $method(self, rhs: &CubicElement) -> CubicElement {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

// ---- Text and JSON forms ----

impl fmt::Display for CubicElement {
    /// Renders like `2*t^2 - t + 1`, descending powers, zero terms omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for power in (0..3usize).rev() {
            let coeff = &self.c[power];
            if coeff.is_zero() {
                continue;
            }
            let negative = coeff.is_negative();
            let mag = coeff.abs();
            if first {
                if negative {
                    f.write_str("-")?;
                }
                first = false;
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mag_one = mag == BigInt::from(1);
            match (power, mag_one) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{power}")?,
                (_, false) => write!(f, "{mag}*t^{power}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for CubicElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: [String; 3] = [
            self.c[0].to_string(),
            self.c[1].to_string(),
            self.c[2].to_string(),
        ];
        strings.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CubicElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let strings = <[String; 3]>::deserialize(deserializer)?;
        let mut c = [BigInt::zero(), BigInt::zero(), BigInt::zero()];
        for (i, s) in strings.iter().enumerate() {
            c[i] = s
                .parse()
                .map_err(|e| D::Error::custom(format!("bad coefficient {s:?}: {e}")))?;
        }
        Ok(Self { c })
    }
}
