use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::Error;
use crate::scalars::{Poly, Rational};

/// Element of the rational function field ℚ(z), kept reduced with a monic
/// denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    pub fn new(num: Poly, den: Poly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFun::zero();
        }
        if let Some(c) = den.as_constant() {
            return RatFun {
                num: num.scale(&c.recip()),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        let lc = den.leading().expect("nonzero denominator").recip();
        RatFun {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }

    pub fn zero() -> Self {
        RatFun {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatFun::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFun {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn into_poly(self) -> Option<Poly> {
        self.den.is_one().then_some(self.num)
    }

    pub fn recip(&self) -> Result<RatFun, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFun::reduce(self.den.clone(), self.num.clone()))
    }

    /// Evaluation at `v`; fails when `v` is a pole.
    pub fn specialize(&self, v: &Rational) -> Result<Rational, Error> {
        let d = self.den.specialize(v);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(&self.num.specialize(v) / &d)
    }
}

impl From<Poly> for RatFun {
    fn from(p: Poly) -> Self {
        RatFun::from_poly(p)
    }
}

impl<'a> Add<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn add(self, rhs: &'a RatFun) -> RatFun {
        if self.den.is_one() && rhs.den.is_one() {
            return RatFun::from_poly(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return RatFun::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RatFun::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &'a RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &'a RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFun::from_poly(&self.num * &rhs.num);
        }
        // cross-cancel before multiplying keeps the gcd work on small factors
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let num = &self.num.div_exact(&g1) * &rhs.num.div_exact(&g2);
        let den = &self.den.div_exact(&g2) * &rhs.den.div_exact(&g1);
        let lc = den.leading().expect("nonzero denominator").recip();
        RatFun {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }
}

impl<'a> Div<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    /// Panics on division by zero.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &'a RatFun) -> RatFun {
        self * &rhs.recip().expect("division by zero rational function")
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}

impl FromStr for RatFun {
    type Err = Error;

    /// Accepts a polynomial or `(num)/(den)`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('(') {
            if let Some((num, den)) = rest.split_once(")/(") {
                let den = den
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in {s:?}")))?;
                return RatFun::new(num.parse()?, den.parse()?);
            }
            if let Some(inner) = rest.strip_suffix(')') {
                return Ok(RatFun::from_poly(inner.parse()?));
            }
            return Err(Error::Parse(format!("unbalanced parentheses in {s:?}")));
        }
        Ok(RatFun::from_poly(s.parse()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RatFun {
        s.parse().unwrap()
    }

    #[test]
    fn normalization_cancels_common_factor() {
        let f = RatFun::new("z^2 - 1".parse().unwrap(), "z - 1".parse().unwrap()).unwrap();
        assert_eq!(f, r("z + 1"));
        assert!(f.is_polynomial());
    }

    #[test]
    fn denominator_is_monic() {
        let f = RatFun::new("2".parse().unwrap(), "4*z + 2".parse().unwrap()).unwrap();
        assert_eq!(f.to_string(), "(1/2)/(z + 1/2)");
        assert_eq!(f.den().leading(), Some(&Rational::one()));
    }

    #[test]
    fn arithmetic() {
        let a = r("(1)/(z)");
        let b = r("(1)/(z + 1)");
        assert_eq!(&a - &b, r("(1)/(z^2 + z)"));
        assert_eq!(&(&a * &b) / &b, a);
        assert!((&a - &a).is_zero());
        assert_eq!(RatFun::zero().recip(), Err(Error::DivisionByZero));
    }

    #[test]
    fn text_round_trip() {
        for s in ["(z - 1)/(z^2 + 3)", "z + 1", "0", "(-3/2)/(z)"] {
            assert_eq!(r(s).to_string(), s);
        }
    }

    #[test]
    fn specialize_at_pole_fails() {
        assert!(r("(1)/(z - 2)")
            .specialize(&Rational::from_integer(2))
            .is_err());
        assert_eq!(
            r("(z)/(z - 2)")
                .specialize(&Rational::from_integer(4))
                .unwrap(),
            Rational::from_integer(2)
        );
    }
}
