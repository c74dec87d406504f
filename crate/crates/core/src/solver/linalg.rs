//! Fraction-free exact elimination over ℚ and ℚ(z).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::diagrams::{AlgebraElement, WalledDiagram};
use crate::error::Error;
use crate::scalars::{Delta, Poly, RatFun, Rational, RingTag, Scalar};

/// Integral domain used for division-free elimination: ℤ for ℚ, ℚ[z] for ℚ(z).
trait Domain: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn lcm(&self, other: &Self) -> Self;
    fn div_exact(&self, other: &Self) -> Self;
    /// Divides out the common content and fixes the sign/leading coefficient
    /// of the first nonzero entry.
    fn normalize(row: &mut [Self]);
    fn quotient(&self, den: &Self) -> Scalar;
}

impl Domain for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn lcm(&self, other: &Self) -> Self {
        Integer::lcm(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn normalize(row: &mut [Self]) {
        let mut g = <BigInt as Zero>::zero();
        for x in row.iter() {
            if !Zero::is_zero(x) {
                g = g.gcd(x);
                if g.is_one() {
                    break;
                }
            }
        }
        if Zero::is_zero(&g) {
            return;
        }
        let lead_negative = row
            .iter()
            .find(|x| !Zero::is_zero(*x))
            .is_some_and(|x| x.is_negative());
        if lead_negative {
            g = -g;
        }
        if !g.is_one() {
            for x in row.iter_mut() {
                if !Zero::is_zero(x) {
                    *x = &*x / &g;
                }
            }
        }
    }
    fn quotient(&self, den: &Self) -> Scalar {
        Scalar::Rational(Rational::from_bigints(self.clone(), den.clone()).expect("nonzero pivot"))
    }
}

impl Domain for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn lcm(&self, other: &Self) -> Self {
        (self * other).div_exact(&self.gcd(other))
    }
    fn div_exact(&self, other: &Self) -> Self {
        Poly::div_exact(self, other)
    }
    fn normalize(row: &mut [Self]) {
        let mut g = Poly::zero();
        for x in row.iter() {
            if !x.is_zero() {
                g = g.gcd(x);
                if g.is_one() {
                    break;
                }
            }
        }
        if g.is_zero() {
            return;
        }
        let lead = row.iter().find(|x| !x.is_zero()).expect("nonzero row");
        let unit = lead.div_exact(&g).leading().expect("nonzero").recip();
        let g = g.scale(&unit.recip());
        for x in row.iter_mut() {
            if !x.is_zero() {
                *x = x.div_exact(&g);
            }
        }
    }
    fn quotient(&self, den: &Self) -> Scalar {
        Scalar::from_ratfun(RatFun::new(self.clone(), den.clone()).expect("nonzero pivot"))
    }
}

/// Reduced fraction-free echelon form: every pivot column is zero outside its pivot row.
struct Echelon<D> {
    rows: Vec<Vec<D>>,
    pivots: Vec<usize>,
}

fn gauss_jordan<D: Domain>(mut rows: Vec<Vec<D>>, ncols: usize) -> Echelon<D> {
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    for r in rows.iter_mut() {
        D::normalize(r);
    }
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(found) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, found);
        let pivot_row = rows[rank].clone();
        let p = pivot_row[col].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == rank || row[col].is_zero() {
                continue;
            }
            let a = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if y.is_zero() {
                    if !x.is_zero() {
                        *x = p.mul(x);
                    }
                } else {
                    *x = p.mul(x).sub(&a.mul(y));
                }
            }
            D::normalize(row);
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    Echelon { rows, pivots }
}

impl<D: Domain> Echelon<D> {
    /// Kernel basis with domain entries, one vector per free column.
    fn kernel(&self, ncols: usize) -> Vec<Vec<D>> {
        let mut is_pivot = vec![false; ncols];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        let mut out = Vec::new();
        for f in (0..ncols).filter(|&c| !is_pivot[c]) {
            let involved: Vec<usize> = (0..self.rows.len())
                .filter(|&i| !self.rows[i][f].is_zero())
                .collect();
            let mut l: Option<D> = None;
            for &i in &involved {
                let p = &self.rows[i][self.pivots[i]];
                l = Some(match l {
                    None => p.clone(),
                    Some(acc) => acc.lcm(p),
                });
            }
            let mut v: Vec<D> = vec![D::zero(); ncols];
            let Some(l) = l else {
                v[f] = D::one();
                out.push(v);
                continue;
            };
            for &i in &involved {
                let p = &self.rows[i][self.pivots[i]];
                v[self.pivots[i]] = self.rows[i][f].mul(&l.div_exact(p)).neg();
            }
            v[f] = l;
            D::normalize(&mut v);
            out.push(v);
        }
        out
    }

    /// Rows divided by their pivots.
    fn unit_rows(&self) -> Vec<Vec<Scalar>> {
        self.rows
            .iter()
            .zip(&self.pivots)
            .map(|(row, &c)| row.iter().map(|x| x.quotient(&row[c])).collect())
            .collect()
    }
}

/// Clears denominators row by row.
fn to_integer_rows(rows: &[Vec<Scalar>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let qs: Vec<Rational> = row
                .iter()
                .map(|x| x.as_rational().expect("rational ring"))
                .collect();
            let l = qs.iter().fold(<BigInt as One>::one(), |acc, q| {
                Integer::lcm(&acc, q.denom())
            });
            qs.iter().map(|q| q.numer() * (&l / q.denom())).collect()
        })
        .collect()
}

fn to_poly_rows(rows: &[Vec<Scalar>]) -> Vec<Vec<Poly>> {
    rows.iter()
        .map(|row| {
            let fs: Vec<RatFun> = row
                .iter()
                .map(|x| x.to_ratfun().expect("parametric ring"))
                .collect();
            let l = fs.iter().fold(Poly::one(), |acc, f| {
                if f.den().is_one() {
                    acc
                } else {
                    Domain::lcm(&acc, f.den())
                }
            });
            fs.iter().map(|f| f.num() * &l.div_exact(f.den())).collect()
        })
        .collect()
}

fn from_domain_rows<D: Domain>(rows: Vec<Vec<D>>) -> Vec<Vec<Scalar>> {
    let one = D::one();
    rows.into_iter()
        .map(|r| r.iter().map(|x| x.quotient(&one)).collect())
        .collect()
}

/// A dense matrix of scalars from a single ring.
#[derive(Clone, PartialEq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    tag: RingTag,
    entries: Vec<Vec<Scalar>>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize, tag: RingTag) -> Self {
        ExactMatrix {
            rows,
            cols,
            tag,
            entries: vec![vec![Scalar::zero(tag); cols]; rows],
        }
    }

    pub fn from_rows(tag: RingTag, cols: usize, entries: Vec<Vec<Scalar>>) -> Result<Self, Error> {
        for row in &entries {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a matrix with {cols} columns",
                    row.len()
                )));
            }
            if row.iter().any(|x| x.tag() != tag) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(ExactMatrix {
            rows: entries.len(),
            cols,
            tag,
            entries,
        })
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(
        tag: RingTag,
        nrows: usize,
        columns: &[Vec<Scalar>],
    ) -> Result<Self, Error> {
        let mut m = ExactMatrix::zeros(nrows, columns.len(), tag);
        for (j, col) in columns.iter().enumerate() {
            if col.len() != nrows {
                return Err(Error::DimensionMismatch(format!(
                    "column of length {} in a matrix with {nrows} rows",
                    col.len()
                )));
            }
            for (i, x) in col.iter().enumerate() {
                if x.tag() != tag {
                    return Err(Error::RingMismatch);
                }
                m.entries[i][j] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn tag(&self) -> RingTag {
        self.tag
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) -> Result<(), Error> {
        if value.tag() != self.tag {
            return Err(Error::RingMismatch);
        }
        self.entries[i][j] = value;
        Ok(())
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.entries
    }

    /// Keeps only the listed rows, in the given order.
    pub fn select_rows(&self, which: &[usize]) -> ExactMatrix {
        ExactMatrix {
            rows: which.len(),
            cols: self.cols,
            tag: self.tag,
            entries: which.iter().map(|&i| self.entries[i].clone()).collect(),
        }
    }

    /// Whether every entry lies in ℚ, so the parametric matrix can be
    /// eliminated over the integers.
    fn constant_entries(&self) -> Option<Vec<Vec<Scalar>>> {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| x.as_rational().map(Scalar::Rational))
                    .collect::<Option<Vec<_>>>()
            })
            .collect()
    }

    pub fn mul_vector(&self, v: &[Scalar]) -> Result<Vec<Scalar>, Error> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        self.entries
            .iter()
            .map(|row| {
                let mut acc = Scalar::zero(self.tag);
                for (a, x) in row.iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc = acc.try_add(&a.try_mul(x)?)?;
                    }
                }
                Ok(acc)
            })
            .collect()
    }

    /// Substitutes `z = v` into every entry.
    pub fn specialize(&self, v: &Rational) -> Result<ExactMatrix, Error> {
        let entries = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| x.specialize(v).map(Scalar::Rational))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            tag: RingTag::Rational,
            entries,
        })
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "ExactMatrix {}x{} over {:?}",
            self.rows, self.cols, self.tag
        )?;
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Rank and a kernel basis of `m`, computed by fraction-free elimination.
///
/// Kernel vectors have coefficients in the field of fractions of the entry ring.
pub fn rank_kernel(m: &ExactMatrix) -> (usize, Vec<Vec<Scalar>>) {
    let tag = m.tag;
    let constant = match tag {
        RingTag::Rational => Some(m.entries.clone()),
        RingTag::Parametric => m.constant_entries(),
    };
    let lift = |v: Vec<Vec<Scalar>>| -> Vec<Vec<Scalar>> {
        match tag {
            RingTag::Rational => v,
            RingTag::Parametric => v
                .into_iter()
                .map(|r| {
                    r.into_iter()
                        .map(|x| Scalar::Poly(Poly::constant(x.as_rational().expect("rational"))))
                        .collect()
                })
                .collect(),
        }
    };
    match constant {
        Some(rows) => {
            let ech = gauss_jordan(to_integer_rows(&rows), m.cols);
            let kernel = from_domain_rows(ech.kernel(m.cols));
            (ech.rows.len(), lift(kernel))
        }
        None => {
            let ech = gauss_jordan(to_poly_rows(&m.entries), m.cols);
            let kernel = from_domain_rows(ech.kernel(m.cols));
            (ech.rows.len(), kernel)
        }
    }
}

pub fn rank(m: &ExactMatrix) -> usize {
    let tag = m.tag;
    match (tag, m.constant_entries()) {
        (RingTag::Parametric, None) => gauss_jordan(to_poly_rows(&m.entries), m.cols).rows.len(),
        (_, rows) => {
            let rows = rows.unwrap_or_else(|| m.entries.clone());
            gauss_jordan(to_integer_rows(&rows), m.cols).rows.len()
        }
    }
}

/// Reduced echelon form with unit pivots of the row space of `vectors`.
pub(crate) fn rref(
    tag: RingTag,
    ncols: usize,
    vectors: &[Vec<Scalar>],
) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let constant = match tag {
        RingTag::Rational => Some(vectors.to_vec()),
        RingTag::Parametric => vectors
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| x.as_rational().map(Scalar::Rational))
                    .collect::<Option<Vec<_>>>()
            })
            .collect(),
    };
    match constant {
        Some(rows) => {
            let ech = gauss_jordan(to_integer_rows(&rows), ncols);
            let mut unit = ech.unit_rows();
            if tag == RingTag::Parametric {
                for row in unit.iter_mut() {
                    for x in row.iter_mut() {
                        *x = Scalar::Poly(Poly::constant(x.as_rational().expect("rational")));
                    }
                }
            }
            (unit, ech.pivots)
        }
        None => {
            let ech = gauss_jordan(to_poly_rows(vectors), ncols);
            (ech.unit_rows(), ech.pivots)
        }
    }
}

/// How two subspaces of the same ambient space sit relative to each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Equal,
    ASubsetB,
    BSubsetA,
    Incomparable,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Equal => "equal",
            Relation::ASubsetB => "A_subset_B",
            Relation::BSubsetA => "B_subset_A",
            Relation::Incomparable => "incomparable",
        })
    }
}

/// A subspace of the algebra, in reduced echelon form against the diagram basis.
#[derive(Clone, PartialEq)]
pub struct Subspace {
    ambient: Vec<WalledDiagram>,
    tag: RingTag,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Span of `vectors`, given as coordinates against `ambient`.
    pub fn span(
        ambient: Vec<WalledDiagram>,
        tag: RingTag,
        vectors: &[Vec<Scalar>],
    ) -> Result<Self, Error> {
        for v in vectors {
            if v.len() != ambient.len() {
                return Err(Error::DimensionMismatch(format!(
                    "vector of length {} in a space of dimension {}",
                    v.len(),
                    ambient.len()
                )));
            }
            if v.iter().any(|x| x.tag() != tag) {
                return Err(Error::RingMismatch);
            }
        }
        let (basis, pivots) = rref(tag, ambient.len(), vectors);
        Ok(Subspace {
            ambient,
            tag,
            basis,
            pivots,
        })
    }

    /// Span of algebra elements.
    pub fn span_elements(
        ambient: Vec<WalledDiagram>,
        delta: &Delta,
        elements: &[AlgebraElement],
    ) -> Result<Self, Error> {
        let vectors: Vec<Vec<Scalar>> = elements.iter().map(|e| e.coordinates(&ambient)).collect();
        Subspace::span(ambient, delta.tag(), &vectors)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> &[WalledDiagram] {
        &self.ambient
    }

    pub fn tag(&self) -> RingTag {
        self.tag
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as algebra elements.
    pub fn elements(&self, delta: &Delta) -> Result<Vec<AlgebraElement>, Error> {
        if delta.tag() != self.tag {
            return Err(Error::RingMismatch);
        }
        let shape = self
            .ambient
            .first()
            .map(|d| d.shape())
            .ok_or_else(|| Error::DimensionMismatch("empty ambient basis".into()))?;
        self.basis
            .iter()
            .map(|v| {
                AlgebraElement::from_terms(
                    shape,
                    delta,
                    self.ambient.iter().copied().zip(v.iter().cloned()),
                )
            })
            .collect()
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool, Error> {
        let mut all = self.basis.clone();
        all.push(v.to_vec());
        Ok(Subspace::span(self.ambient.clone(), self.tag, &all)?.dim() == self.dim())
    }

    /// Exact containment relation, decided by the rank of the stacked bases.
    pub fn relate(&self, other: &Subspace) -> Result<Relation, Error> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(
                "subspaces live in different ambient spaces".into(),
            ));
        }
        if self.tag != other.tag {
            return Err(Error::RingMismatch);
        }
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        let sum = Subspace::span(self.ambient.clone(), self.tag, &all)?.dim();
        Ok(match (sum == self.dim(), sum == other.dim()) {
            (true, true) => Relation::Equal,
            (false, true) => Relation::ASubsetB,
            (true, false) => Relation::BSubsetA,
            (false, false) => Relation::Incomparable,
        })
    }

    /// Basis vectors in the `(c)*[diagram] + …` text form.
    pub fn basis_strings(&self, delta: &Delta) -> Result<Vec<String>, Error> {
        Ok(self
            .elements(delta)?
            .iter()
            .map(ToString::to_string)
            .collect())
    }
}

/// Free-function form of [`Subspace::relate`].
pub fn subspace_relate(a: &Subspace, b: &Subspace) -> Result<Relation, Error> {
    a.relate(b)
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Subspace of dimension {} in {} coordinates",
            self.dim(),
            self.ambient.len()
        )?;
        for row in &self.basis {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let ambient: Vec<String> = self.ambient.iter().map(ToString::to_string).collect();
        let basis: Vec<Vec<String>> = self
            .basis
            .iter()
            .map(|v| v.iter().map(ToString::to_string).collect())
            .collect();
        let mut s = ser.serialize_struct("Subspace", 4)?;
        s.serialize_field("dim", &self.dim())?;
        s.serialize_field("ambient", &ambient)?;
        s.serialize_field("pivots", &self.pivots)?;
        s.serialize_field("basis", &basis)?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::{enumerate_diagrams, WalledShape};
    use crate::Bounds;

    fn q(n: i64) -> Scalar {
        Scalar::Rational(Rational::from_integer(n))
    }

    fn p(text: &str) -> Scalar {
        Scalar::parse(RingTag::Parametric, text).unwrap()
    }

    #[test]
    fn identity_has_full_rank() {
        let rows = (0..3)
            .map(|i| (0..3).map(|j| q((i == j) as i64)).collect())
            .collect();
        let m = ExactMatrix::from_rows(RingTag::Rational, 3, rows).unwrap();
        let (rank, kernel) = rank_kernel(&m);
        assert_eq!(rank, 3);
        assert!(kernel.is_empty());
    }

    #[test]
    fn proportional_parametric_rows() {
        let m = ExactMatrix::from_rows(
            RingTag::Parametric,
            2,
            vec![vec![p("z"), p("1")], vec![p("z^2"), p("z")]],
        )
        .unwrap();
        let (rank, kernel) = rank_kernel(&m);
        assert_eq!(rank, 1);
        assert_eq!(kernel.len(), 1);
        let v = &kernel[0];
        assert!(m.mul_vector(v).unwrap().iter().all(Scalar::is_zero));
        // proportional to (1, -z)
        let ratio = v[1].try_div(&v[0]).unwrap();
        assert_eq!(ratio, p("-z"));
    }

    #[test]
    fn kernel_needs_rational_functions() {
        // z*x + (z+1)*y = 0 has kernel (z+1, -z), or (1, -z/(z+1)) after scaling
        let m =
            ExactMatrix::from_rows(RingTag::Parametric, 2, vec![vec![p("z"), p("z + 1")]]).unwrap();
        let (rank, kernel) = rank_kernel(&m);
        assert_eq!(rank, 1);
        assert!(m
            .mul_vector(&kernel[0])
            .unwrap()
            .iter()
            .all(Scalar::is_zero));
        let (unit, pivots) = rref(RingTag::Parametric, 2, &kernel);
        assert_eq!(pivots, [0]);
        assert_eq!(unit[0][1], p("(-z)/(z + 1)"));
    }

    #[test]
    fn rational_kernel_is_exact() {
        let rows = vec![
            vec![q(1), q(2), q(3), q(4)],
            vec![q(2), q(4), q(6), q(8)],
            vec![Scalar::Rational(Rational::new(1, 2)), q(0), q(1), q(-1)],
        ];
        let m = ExactMatrix::from_rows(RingTag::Rational, 4, rows).unwrap();
        let (rank, kernel) = rank_kernel(&m);
        assert_eq!(rank, 2);
        assert_eq!(kernel.len(), 2);
        for v in &kernel {
            assert!(m.mul_vector(v).unwrap().iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn constant_parametric_matrix_takes_integer_path() {
        let m =
            ExactMatrix::from_rows(RingTag::Parametric, 2, vec![vec![p("2"), p("-2")]]).unwrap();
        let (rank, kernel) = rank_kernel(&m);
        assert_eq!(rank, 1);
        assert_eq!(kernel, vec![vec![p("1"), p("1")]]);
    }

    #[test]
    fn relations() {
        let ambient =
            enumerate_diagrams(WalledShape::new(2, 0).unwrap(), &Bounds::default()).unwrap();
        let e1 = vec![q(1), q(0)];
        let e2 = vec![q(0), q(1)];
        let a = Subspace::span(
            ambient.clone(),
            RingTag::Rational,
            std::slice::from_ref(&e1),
        )
        .unwrap();
        let b = Subspace::span(
            ambient.clone(),
            RingTag::Rational,
            &[e1.clone(), e2.clone()],
        )
        .unwrap();
        let c = Subspace::span(ambient.clone(), RingTag::Rational, &[e2]).unwrap();
        assert_eq!(a.relate(&a).unwrap(), Relation::Equal);
        assert_eq!(a.relate(&b).unwrap(), Relation::ASubsetB);
        assert_eq!(b.relate(&a).unwrap(), Relation::BSubsetA);
        assert_eq!(a.relate(&c).unwrap(), Relation::Incomparable);
        let other =
            enumerate_diagrams(WalledShape::new(1, 1).unwrap(), &Bounds::default()).unwrap();
        let d = Subspace::span(other, RingTag::Rational, &[e1]).unwrap();
        assert!(a.relate(&d).is_err());
    }

    #[test]
    fn rref_is_canonical() {
        let ambient =
            enumerate_diagrams(WalledShape::new(1, 1).unwrap(), &Bounds::default()).unwrap();
        let a = Subspace::span(
            ambient.clone(),
            RingTag::Parametric,
            &[vec![p("z"), p("z^2")]],
        )
        .unwrap();
        let b = Subspace::span(ambient, RingTag::Parametric, &[vec![p("3"), p("3*z")]]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.basis()[0], vec![p("1"), p("z")]);
    }
}
