use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::scalars::Rational;
use crate::text;

/// Sparse polynomial in `x_1..x_m, y_1..y_n` with rational coefficients.
///
/// Exponent vectors list the `x` exponents first, then the `y` exponents.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    m: usize,
    n: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero(m: usize, n: usize) -> Self {
        MultiPoly {
            m,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(m: usize, n: usize, c: Rational) -> Self {
        let mut p = MultiPoly::zero(m, n);
        p.add_term(vec![0; m + n], c);
        p
    }

    pub fn one(m: usize, n: usize) -> Self {
        MultiPoly::constant(m, n, Rational::one())
    }

    /// `x_i`, 1-based.
    pub fn x(m: usize, n: usize, i: usize) -> Result<Self, Error> {
        if i == 0 || i > m {
            return Err(Error::IndexOutOfRange(format!("x{i} with m = {m}")));
        }
        Ok(MultiPoly::variable(m, n, i - 1))
    }

    /// `y_j`, 1-based.
    pub fn y(m: usize, n: usize, j: usize) -> Result<Self, Error> {
        if j == 0 || j > n {
            return Err(Error::IndexOutOfRange(format!("y{j} with n = {n}")));
        }
        Ok(MultiPoly::variable(m, n, m + j - 1))
    }

    fn variable(m: usize, n: usize, slot: usize) -> Self {
        let mut e = vec![0; m + n];
        e[slot] = 1;
        let mut p = MultiPoly::zero(m, n);
        p.add_term(e, Rational::one());
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs.
    pub fn from_terms<I>(m: usize, n: usize, terms: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = MultiPoly::zero(m, n);
        for (e, c) in terms {
            if e.len() != m + n {
                return Err(Error::VariableCountMismatch {
                    expected: format!("{} exponents", m + n),
                    got: format!("{}", e.len()),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn num_x(&self) -> usize {
        self.m
    }

    pub fn num_y(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    fn check(&self, other: &MultiPoly) -> Result<(), Error> {
        if (self.m, self.n) != (other.m, other.n) {
            return Err(Error::VariableCountMismatch {
                expected: format!("{} x and {} y", self.m, self.n),
                got: format!("{} x and {} y", other.m, other.n),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly, Error> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<MultiPoly, Error> {
        self.add(&other.scale(&Rational::from_integer(-1)))
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        let mut out = MultiPoly::zero(self.m, self.n);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &MultiPoly) -> Result<MultiPoly, Error> {
        self.check(other)?;
        let mut out = MultiPoly::zero(self.m, self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(self.m, self.n);
        for _ in 0..exp {
            acc = acc.mul(self).expect("same variables");
        }
        acc
    }

    /// Exchanges the variables in exponent slots `a` and `b`.
    fn swap_slots(&self, a: usize, b: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.m, self.n);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.swap(a, b);
            out.add_term(e, c.clone());
        }
        out
    }

    /// Substitutes `x_m = t, y_1 = -t`, storing the power of `t` in the `x_m` slot.
    fn cancellation_substitution(&self) -> MultiPoly {
        let (xm, y1) = (self.m - 1, self.m);
        let mut out = MultiPoly::zero(self.m, self.n);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            let b = e[y1];
            e[xm] += b;
            e[y1] = 0;
            let c = if b % 2 == 1 { -c } else { c.clone() };
            out.add_term(e, c);
        }
        out
    }

    /// Parses text such as `x1^2*y1 - 3/2*x2`.
    pub fn parse(text: &str, m: usize, n: usize) -> Result<MultiPoly, Error> {
        let mut p = MultiPoly::zero(m, n);
        for (c, factors) in text::parse_terms(text)? {
            let mut e = vec![0u32; m + n];
            for (name, exp) in factors {
                let slot = variable_slot(&name, m, n)?;
                e[slot] += exp;
            }
            p.add_term(e, c);
        }
        Ok(p)
    }
}

fn variable_slot(name: &str, m: usize, n: usize) -> Result<usize, Error> {
    let bad = || Error::Parse(format!("unknown variable {name:?}"));
    let (kind, index) = name.split_at(1);
    let i: usize = index.parse().map_err(|_| bad())?;
    match kind {
        "x" if (1..=m).contains(&i) => Ok(i - 1),
        "y" if (1..=n).contains(&i) => Ok(m + i - 1),
        _ => Err(bad()),
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut ordered: Vec<(&Vec<u32>, &Rational)> = self.terms.iter().collect();
        ordered.sort_by(|(a, _), (b, _)| {
            let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        let rendered = ordered.into_iter().map(|(e, c)| {
            let mut names = Vec::new();
            for (slot, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let name = if slot < self.m {
                    format!("x{}", slot + 1)
                } else {
                    format!("y{}", slot - self.m + 1)
                };
                names.push(if k == 1 { name } else { format!("{name}^{k}") });
            }
            (c, names.join("*"))
        });
        f.write_str(&text::format_terms(rendered))
    }
}

/// True iff `p` is symmetric in the `x`'s and in the `y`'s separately and the
/// substitution `x_m = t, y_1 = -t` leaves no dependence on `t`.
pub fn is_supersymmetric(p: &MultiPoly, m: usize, n: usize) -> bool {
    if (p.m, p.n) != (m, n) {
        return false;
    }
    for a in 1..m {
        if p.swap_slots(a - 1, a) != *p {
            return false;
        }
    }
    for b in 1..n {
        if p.swap_slots(m + b - 1, m + b) != *p {
            return false;
        }
    }
    if m == 0 || n == 0 {
        return true;
    }
    p.cancellation_substitution()
        .terms
        .keys()
        .all(|e| e[m - 1] == 0)
}

/// `p_k = Σ x_i^k + (-1)^(k+1) Σ y_j^k`.
pub fn supersym_power_sum(k: u32, m: usize, n: usize) -> Result<MultiPoly, Error> {
    if k == 0 {
        return Err(Error::IndexOutOfRange(
            "power sums start at degree 1".into(),
        ));
    }
    let sign = if k % 2 == 1 {
        Rational::one()
    } else {
        Rational::from_integer(-1)
    };
    let mut p = MultiPoly::zero(m, n);
    for slot in 0..m + n {
        let mut e = vec![0; m + n];
        e[slot] = k;
        let c = if slot < m {
            Rational::one()
        } else {
            sign.clone()
        };
        p.add_term(e, c);
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_sum_forms() {
        assert_eq!(
            supersym_power_sum(1, 2, 1).unwrap().to_string(),
            "x1 + x2 + y1"
        );
        assert_eq!(
            supersym_power_sum(2, 1, 1).unwrap().to_string(),
            "x1^2 - y1^2"
        );
        assert!(supersym_power_sum(0, 1, 1).is_err());
    }

    #[test]
    fn power_sums_are_supersymmetric() {
        for k in 1..=6 {
            for m in 0..=3 {
                for n in 0..=3 {
                    let p = supersym_power_sum(k, m, n).unwrap();
                    assert!(is_supersymmetric(&p, m, n), "p_{k} at ({m},{n})");
                }
            }
        }
    }

    #[test]
    fn non_examples() {
        let x1 = MultiPoly::x(2, 0, 1).unwrap();
        assert!(!is_supersymmetric(&x1.pow(2), 2, 0));
        // symmetric but fails the cancellation condition
        let wrong_sign = MultiPoly::parse("x1^2 + y1^2", 1, 1).unwrap();
        assert!(!is_supersymmetric(&wrong_sign, 1, 1));
        let p1 = MultiPoly::parse("x1 + y1", 1, 1).unwrap();
        assert!(is_supersymmetric(&p1, 1, 1));
        assert!(!is_supersymmetric(&p1, 2, 1));
    }

    #[test]
    fn products_stay_supersymmetric() {
        let (m, n) = (2, 2);
        for a in 1..=3 {
            for b in 1..=3 {
                let pa = supersym_power_sum(a, m, n).unwrap();
                let pb = supersym_power_sum(b, m, n).unwrap();
                assert!(is_supersymmetric(&pa.mul(&pb).unwrap(), m, n));
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let p = MultiPoly::parse("x1^2*y1 - 3/2*x2 + 4", 2, 1).unwrap();
        assert_eq!(p.to_string(), "x1^2*y1 - 3/2*x2 + 4");
        assert_eq!(MultiPoly::parse(&p.to_string(), 2, 1).unwrap(), p);
        assert!(MultiPoly::parse("x3", 2, 1).is_err());
        assert!(MultiPoly::parse("z", 2, 1).is_err());
        assert!(MultiPoly::parse("0.5*x1", 2, 1).is_err());
        assert_eq!(MultiPoly::parse("x1 - x1", 2, 1).unwrap().to_string(), "0");
    }

    #[test]
    fn arithmetic() {
        let x = MultiPoly::x(1, 1, 1).unwrap();
        let y = MultiPoly::y(1, 1, 1).unwrap();
        let sq = x.add(&y).unwrap().pow(2);
        assert_eq!(sq.to_string(), "x1^2 + 2*x1*y1 + y1^2");
        assert!(sq.sub(&sq).unwrap().is_zero());
        assert!(x.mul(&MultiPoly::one(2, 1)).is_err());
    }
}
