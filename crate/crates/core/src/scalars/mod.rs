//! Exact coefficient arithmetic.
//!
//! Two coefficient rings are in play: the rationals, used when the loop
//! parameter has been specialized to a number, and the parametric ring
//! ℚ[z] ⊂ ℚ(z), used when the loop parameter stays a formal variable.

mod poly;
mod ratfun;
mod rational;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

pub use poly::Poly;
pub use ratfun::RatFun;
pub use rational::Rational;

/// Which coefficient ring a scalar lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RingTag {
    /// ℚ
    Rational,
    /// ℚ[z] and its fraction field ℚ(z)
    Parametric,
}

/// An exact coefficient.
///
/// Parametric values with denominator 1 are always stored as [`Scalar::Poly`],
/// so structural equality coincides with mathematical equality within a ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    Poly(Poly),
    RatFun(RatFun),
}

impl Scalar {
    pub fn tag(&self) -> RingTag {
        match self {
            Scalar::Rational(_) => RingTag::Rational,
            Scalar::Poly(_) | Scalar::RatFun(_) => RingTag::Parametric,
        }
    }

    pub fn zero(tag: RingTag) -> Scalar {
        match tag {
            RingTag::Rational => Scalar::Rational(Rational::zero()),
            RingTag::Parametric => Scalar::Poly(Poly::zero()),
        }
    }

    pub fn one(tag: RingTag) -> Scalar {
        Scalar::from_rational(tag, Rational::one())
    }

    pub fn from_rational(tag: RingTag, q: Rational) -> Scalar {
        match tag {
            RingTag::Rational => Scalar::Rational(q),
            RingTag::Parametric => Scalar::Poly(Poly::constant(q)),
        }
    }

    pub fn from_integer(tag: RingTag, n: i64) -> Scalar {
        Scalar::from_rational(tag, Rational::from_integer(n))
    }

    pub fn from_ratfun(f: RatFun) -> Scalar {
        if f.is_polynomial() {
            Scalar::Poly(f.into_poly().expect("checked polynomial"))
        } else {
            Scalar::RatFun(f)
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Poly(p) => p.is_zero(),
            Scalar::RatFun(f) => f.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Poly(p) => p.is_one(),
            Scalar::RatFun(f) => f.is_one(),
        }
    }

    /// The value as a rational when it does not depend on `z`.
    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            Scalar::Rational(q) => Some(q.clone()),
            Scalar::Poly(p) => p.as_constant(),
            Scalar::RatFun(_) => None,
        }
    }

    pub fn to_ratfun(&self) -> Option<RatFun> {
        match self {
            Scalar::Rational(_) => None,
            Scalar::Poly(p) => Some(RatFun::from_poly(p.clone())),
            Scalar::RatFun(f) => Some(f.clone()),
        }
    }

    fn check(&self, other: &Scalar) -> Result<(), Error> {
        if self.tag() == other.tag() {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar, Error> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Poly(a), Scalar::Poly(b)) => Scalar::Poly(a + b),
            _ => Scalar::from_ratfun(&self.to_ratfun().unwrap() + &other.to_ratfun().unwrap()),
        })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar, Error> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar, Error> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Poly(a), Scalar::Poly(b)) => Scalar::Poly(a * b),
            _ => Scalar::from_ratfun(&self.to_ratfun().unwrap() * &other.to_ratfun().unwrap()),
        })
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar, Error> {
        self.check(other)?;
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a / b),
            _ => Scalar::from_ratfun(&self.to_ratfun().unwrap() / &other.to_ratfun().unwrap()),
        })
    }

    /// Ring-checked equality.
    pub fn try_eq(&self, other: &Scalar) -> Result<bool, Error> {
        self.check(other)?;
        Ok(self == other)
    }

    /// Multiplies by a rational constant, staying in the same ring.
    pub fn scale(&self, c: &Rational) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(q * c),
            Scalar::Poly(p) => Scalar::Poly(p.scale(c)),
            Scalar::RatFun(f) => {
                Scalar::from_ratfun(&RatFun::from_poly(Poly::constant(c.clone())) * f)
            }
        }
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        let mut acc = Scalar::one(self.tag());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates a parametric scalar at `z = v`; rationals pass through.
    pub fn specialize(&self, v: &Rational) -> Result<Rational, Error> {
        match self {
            Scalar::Rational(q) => Ok(q.clone()),
            Scalar::Poly(p) => Ok(p.specialize(v)),
            Scalar::RatFun(f) => f.specialize(v),
        }
    }

    /// Parses `text` as an element of the ring `tag`.
    pub fn parse(tag: RingTag, text: &str) -> Result<Scalar, Error> {
        match tag {
            RingTag::Rational => Ok(Scalar::Rational(text.parse()?)),
            RingTag::Parametric => Ok(Scalar::from_ratfun(text.parse()?)),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Poly(p) => write!(f, "{p}"),
            Scalar::RatFun(r) => write!(f, "{r}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "Q({q})"),
            Scalar::Poly(p) => write!(f, "Z({p})"),
            Scalar::RatFun(r) => write!(f, "Z({r})"),
        }
    }
}

// The operator forms panic on a ring mismatch; use the `try_*` methods when
// the operands come from different computations.
impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.try_add(rhs).expect("ring mismatch")
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self.try_sub(rhs).expect("ring mismatch")
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.try_mul(rhs).expect("ring mismatch")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Poly(p) => Scalar::Poly(-p),
            Scalar::RatFun(f) => Scalar::RatFun(-f),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// The loop parameter δ: either a specialized rational value or the formal
/// parameter `z`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub enum Delta {
    #[default]
    Generic,
    Value(Rational),
}

impl Delta {
    pub fn value(q: Rational) -> Delta {
        Delta::Value(q)
    }

    pub fn int(n: i64) -> Delta {
        Delta::Value(Rational::from_integer(n))
    }

    pub fn tag(&self) -> RingTag {
        match self {
            Delta::Generic => RingTag::Parametric,
            Delta::Value(_) => RingTag::Rational,
        }
    }

    pub fn is_generic(&self) -> bool {
        matches!(self, Delta::Generic)
    }

    /// δ as a scalar of its ring: `z` or the specialized value.
    pub fn scalar(&self) -> Scalar {
        match self {
            Delta::Generic => Scalar::Poly(Poly::z()),
            Delta::Value(q) => Scalar::Rational(q.clone()),
        }
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero(self.tag())
    }

    pub fn one(&self) -> Scalar {
        Scalar::one(self.tag())
    }

    /// `[1, δ, δ², …, δ^max]`
    pub fn powers(&self, max: usize) -> Vec<Scalar> {
        let d = self.scalar();
        let mut out = Vec::with_capacity(max + 1);
        out.push(self.one());
        for k in 1..=max {
            let next = &out[k - 1] * &d;
            out.push(next);
        }
        out
    }
}

impl fmt::Display for Delta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Delta::Generic => f.write_str("generic"),
            Delta::Value(q) => write!(f, "{q}"),
        }
    }
}

impl FromStr for Delta {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("generic") {
            Ok(Delta::Generic)
        } else {
            s.parse::<Rational>().map(Delta::Value).map_err(|_| {
                Error::Parse(format!(
                    "delta must be `generic` or an exact rational, got {s:?}"
                ))
            })
        }
    }
}

impl Serialize for Delta {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Delta {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
