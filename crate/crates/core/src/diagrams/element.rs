use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::diagrams::{WalledDiagram, WalledShape};
use crate::error::Error;
use crate::scalars::{Delta, Rational, Scalar};

/// A finite linear combination of diagrams of one shape, with coefficients in
/// the ring determined by the loop parameter.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    shape: WalledShape,
    delta: Delta,
    terms: BTreeMap<WalledDiagram, Scalar>,
}

impl AlgebraElement {
    pub fn zero(shape: WalledShape, delta: &Delta) -> Self {
        AlgebraElement {
            shape,
            delta: delta.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(shape: WalledShape, delta: &Delta) -> Self {
        Self::from_diagram(WalledDiagram::identity(shape), delta)
    }

    pub fn from_diagram(d: WalledDiagram, delta: &Delta) -> Self {
        let mut e = Self::zero(d.shape(), delta);
        e.terms.insert(d, delta.one());
        e
    }

    /// Collects `(diagram, coefficient)` pairs, summing repeats and dropping zeros.
    pub fn from_terms<I>(shape: WalledShape, delta: &Delta, terms: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (WalledDiagram, Scalar)>,
    {
        let mut e = Self::zero(shape, delta);
        for (d, c) in terms {
            if d.shape() != shape {
                return Err(Error::ShapeMismatch(
                    shape.to_string(),
                    d.shape().to_string(),
                ));
            }
            if c.tag() != delta.tag() {
                return Err(Error::RingMismatch);
            }
            e.add_term(d, &c);
        }
        Ok(e)
    }

    fn add_term(&mut self, d: WalledDiagram, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&d) {
            Some(existing) => {
                let sum = &*existing + c;
                if sum.is_zero() {
                    self.terms.remove(&d);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(d, c.clone());
            }
        }
    }

    pub fn shape(&self) -> WalledShape {
        self.shape
    }

    pub fn delta(&self) -> &Delta {
        &self.delta
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of diagrams with a nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: &WalledDiagram) -> Scalar {
        self.terms
            .get(d)
            .cloned()
            .unwrap_or_else(|| self.delta.zero())
    }

    /// Terms in diagram order.
    pub fn terms(&self) -> impl Iterator<Item = (&WalledDiagram, &Scalar)> {
        self.terms.iter()
    }

    fn check(&self, other: &AlgebraElement) -> Result<(), Error> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch(
                self.shape.to_string(),
                other.shape.to_string(),
            ));
        }
        if self.delta != other.delta {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement, Error> {
        self.check(other)?;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(*d, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &AlgebraElement) -> Result<AlgebraElement, Error> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> AlgebraElement {
        AlgebraElement {
            shape: self.shape,
            delta: self.delta.clone(),
            terms: self.terms.iter().map(|(d, c)| (*d, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Result<AlgebraElement, Error> {
        if c.tag() != self.delta.tag() {
            return Err(Error::RingMismatch);
        }
        let mut out = AlgebraElement::zero(self.shape, &self.delta);
        if c.is_zero() {
            return Ok(out);
        }
        for (d, a) in &self.terms {
            let prod = a * c;
            if !prod.is_zero() {
                out.terms.insert(*d, prod);
            }
        }
        Ok(out)
    }

    pub fn scale_rational(&self, q: &Rational) -> AlgebraElement {
        let c = Scalar::from_rational(self.delta.tag(), q.clone());
        self.scale(&c).expect("same ring")
    }

    /// Bilinear extension of diagram multiplication; each closed loop contributes δ.
    pub fn mul(&self, other: &AlgebraElement) -> Result<AlgebraElement, Error> {
        self.check(other)?;
        let powers = self.delta.powers(self.shape.n());
        // group by loop count so each coefficient product is formed once per pair
        let mut acc: HashMap<WalledDiagram, Vec<Scalar>> = HashMap::new();
        for (d1, c1) in &self.terms {
            for (d2, c2) in &other.terms {
                let (d, loops) = d1.multiply_unchecked(d2);
                let prod = c1 * c2;
                let slot = acc
                    .entry(d)
                    .or_insert_with(|| vec![self.delta.zero(); powers.len()]);
                slot[loops] = &slot[loops] + &prod;
            }
        }
        let mut out = AlgebraElement::zero(self.shape, &self.delta);
        for (d, by_loops) in acc {
            let mut total = self.delta.zero();
            for (k, c) in by_loops.iter().enumerate() {
                if !c.is_zero() {
                    total = &total + &(c * &powers[k]);
                }
            }
            if !total.is_zero() {
                out.terms.insert(d, total);
            }
        }
        Ok(out)
    }

    /// Linear extension of the diagram flip; an anti-automorphism.
    pub fn flip(&self) -> AlgebraElement {
        AlgebraElement {
            shape: self.shape,
            delta: self.delta.clone(),
            terms: self
                .terms
                .iter()
                .map(|(d, c)| (d.flip(), c.clone()))
                .collect(),
        }
    }

    /// `self * other - other * self`
    pub fn commutator(&self, other: &AlgebraElement) -> Result<AlgebraElement, Error> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn pow(&self, exp: u32) -> AlgebraElement {
        let mut acc = AlgebraElement::identity(self.shape, &self.delta);
        for _ in 0..exp {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Substitutes `z = v` into a generic element.
    pub fn specialize(&self, v: &Rational) -> Result<AlgebraElement, Error> {
        let delta = Delta::Value(v.clone());
        let mut out = AlgebraElement::zero(self.shape, &delta);
        for (d, c) in &self.terms {
            let value = c.specialize(v)?;
            if !value.is_zero() {
                out.terms.insert(*d, Scalar::Rational(value));
            }
        }
        Ok(out)
    }

    /// Coefficient vector against an ordered diagram basis.
    pub fn coordinates(&self, basis: &[WalledDiagram]) -> Vec<Scalar> {
        basis.iter().map(|d| self.coeff(d)).collect()
    }

    /// Parses the `(c)*[diagram] + ...` form produced by `Display`.
    pub fn parse(text: &str, shape: WalledShape, delta: &Delta) -> Result<AlgebraElement, Error> {
        let text = text.trim();
        let mut out = AlgebraElement::zero(shape, delta);
        if text == "0" {
            return Ok(out);
        }
        let mut rest = text;
        loop {
            let (coeff, after) = take_parenthesized(rest)?;
            let after = after
                .strip_prefix("*[")
                .ok_or_else(|| Error::Parse(format!("expected `*[` in {text:?}")))?;
            let (diagram, after) = after
                .split_once(']')
                .ok_or_else(|| Error::Parse(format!("unterminated diagram in {text:?}")))?;
            let d: WalledDiagram = diagram.parse()?;
            if d.shape() != shape {
                return Err(Error::ShapeMismatch(
                    shape.to_string(),
                    d.shape().to_string(),
                ));
            }
            let c = Scalar::parse(delta.tag(), coeff)?;
            out.add_term(d, &c);
            let after = after.trim_start();
            if after.is_empty() {
                break;
            }
            rest = after
                .strip_prefix('+')
                .ok_or_else(|| Error::Parse(format!("expected `+` in {text:?}")))?
                .trim_start();
        }
        Ok(out)
    }
}

fn take_parenthesized(s: &str) -> Result<(&str, &str), Error> {
    if !s.starts_with('(') {
        return Err(Error::Parse(format!("expected `(` at {s:?}")));
    }
    let mut depth = 0usize;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Ok((&s[1..i], &s[i + 1..]));
                }
            }
            _ => {}
        }
    }
    Err(Error::Parse(format!("unbalanced parentheses in {s:?}")))
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (d, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*[{d}]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElement[{} δ={}]({self})", self.shape, self.delta)
    }
}
