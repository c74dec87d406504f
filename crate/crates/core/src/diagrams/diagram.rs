use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Largest `r + s` a diagram can hold.
pub const MAX_STRANDS: usize = 16;

const UNSET: u8 = u8::MAX;

/// The `(r, s)` shape: `r` strands left of the wall, `s` to its right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WalledShape {
    pub r: usize,
    pub s: usize,
}

impl WalledShape {
    pub fn new(r: usize, s: usize) -> Result<Self, Error> {
        if r + s == 0 {
            return Err(Error::InvalidShape("r + s must be at least 1".into()));
        }
        if r + s > MAX_STRANDS {
            return Err(Error::InvalidShape(format!(
                "r + s = {} exceeds the supported maximum {MAX_STRANDS}",
                r + s
            )));
        }
        Ok(WalledShape { r, s })
    }

    /// Number of vertices per row.
    pub fn n(&self) -> usize {
        self.r + self.s
    }

    /// Whether the 1-based column `i` lies left of the wall.
    pub fn is_left(&self, column: usize) -> bool {
        column <= self.r
    }
}

impl fmt::Display for WalledShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.r, self.s)
    }
}

/// A vertex of a diagram with a 1-based column index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Vertex {
    Top(usize),
    Bottom(usize),
}

impl Vertex {
    pub(crate) fn id(self, n: usize) -> usize {
        match self {
            Vertex::Top(i) => i - 1,
            Vertex::Bottom(i) => n + i - 1,
        }
    }

    pub(crate) fn from_id(id: usize, n: usize) -> Vertex {
        if id < n {
            Vertex::Top(id + 1)
        } else {
            Vertex::Bottom(id - n + 1)
        }
    }

    pub fn column(self) -> usize {
        match self {
            Vertex::Top(i) | Vertex::Bottom(i) => i,
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Top(i) => write!(f, "t{i}"),
            Vertex::Bottom(i) => write!(f, "b{i}"),
        }
    }
}

impl FromStr for Vertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad vertex {s:?}"));
        let (row, idx) = s.split_at_checked(1).ok_or_else(bad)?;
        let i: usize = idx.parse().map_err(|_| bad())?;
        if i == 0 {
            return Err(bad());
        }
        match row {
            "t" | "T" => Ok(Vertex::Top(i)),
            "b" | "B" => Ok(Vertex::Bottom(i)),
            _ => Err(bad()),
        }
    }
}

/// Kind of a diagram edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    NorthernArc,
    SouthernArc,
    LeftLine,
    RightLine,
}

/// An `(r, s)`-walled Brauer diagram.
///
/// Vertex `Ti` has id `i - 1` and `Bi` has id `n + i - 1`; `partner[v]` is the
/// vertex matched with `v`. Entries past `2n` are unused and kept at a fixed
/// sentinel so the derived ordering is lexicographic on the partner array.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct WalledDiagram {
    shape: WalledShape,
    partner: [u8; 2 * MAX_STRANDS],
}

impl Ord for WalledDiagram {
    fn cmp(&self, other: &Self) -> Ordering {
        self.shape
            .cmp(&other.shape)
            .then_with(|| self.partner.cmp(&other.partner))
    }
}

impl PartialOrd for WalledDiagram {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl WalledDiagram {
    /// Builds a diagram from a list of edges, checking the matching and wall rules.
    pub fn new(shape: WalledShape, edges: &[(Vertex, Vertex)]) -> Result<Self, Error> {
        let n = shape.n();
        let mut partner = [UNSET; 2 * MAX_STRANDS];
        for &(a, b) in edges {
            for v in [a, b] {
                if v.column() == 0 || v.column() > n {
                    return Err(Error::NotAMatching(format!("vertex {v} out of range")));
                }
            }
            let (ia, ib) = (a.id(n), b.id(n));
            if ia == ib {
                return Err(Error::NotAMatching(format!("loop edge at {a}")));
            }
            for v in [ia, ib] {
                if partner[v] != UNSET {
                    return Err(Error::NotAMatching(format!(
                        "vertex {} used twice",
                        Vertex::from_id(v, n)
                    )));
                }
            }
            partner[ia] = ib as u8;
            partner[ib] = ia as u8;
        }
        if let Some(v) = (0..2 * n).find(|&v| partner[v] == UNSET) {
            return Err(Error::NotAMatching(format!(
                "vertex {} unmatched",
                Vertex::from_id(v, n)
            )));
        }
        Self::from_partner_u8(shape, &partner[..2 * n])
    }

    /// Builds a diagram from a full partner array of length `2n`.
    pub fn from_partner(shape: WalledShape, partner: &[usize]) -> Result<Self, Error> {
        Self::from_partner_u8(shape, &partner.iter().map(|&p| p as u8).collect::<Vec<_>>())
    }

    fn from_partner_u8(shape: WalledShape, partner: &[u8]) -> Result<Self, Error> {
        let n = shape.n();
        if partner.len() != 2 * n {
            return Err(Error::NotAMatching("partner array has wrong length".into()));
        }
        let mut arr = [UNSET; 2 * MAX_STRANDS];
        for (v, &p) in partner.iter().enumerate() {
            let p = p as usize;
            if p >= 2 * n || p == v || partner[p] as usize != v {
                return Err(Error::NotAMatching(format!(
                    "vertex {} is not properly paired",
                    Vertex::from_id(v, n)
                )));
            }
            arr[v] = p as u8;
        }
        let d = WalledDiagram {
            shape,
            partner: arr,
        };
        for v in 0..2 * n {
            let w = d.partner_id(v);
            if v < w {
                d.check_wall(v, w)?;
            }
        }
        Ok(d)
    }

    fn check_wall(&self, a: usize, b: usize) -> Result<(), Error> {
        let n = self.n();
        let (va, vb) = (Vertex::from_id(a, n), Vertex::from_id(b, n));
        let (ca, cb) = (va.column(), vb.column());
        let left_a = self.shape.is_left(ca);
        let left_b = self.shape.is_left(cb);
        match (va, vb) {
            (Vertex::Top(_), Vertex::Bottom(_)) | (Vertex::Bottom(_), Vertex::Top(_)) => {
                if left_a != left_b {
                    return Err(Error::WallViolation(format!(
                        "propagating line {va}-{vb} crosses the wall"
                    )));
                }
            }
            _ => {
                if left_a == left_b {
                    return Err(Error::WallViolation(format!(
                        "arc {va}-{vb} does not cross the wall"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> WalledShape {
        self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    #[inline]
    pub(crate) fn partner_id(&self, v: usize) -> usize {
        self.partner[v] as usize
    }

    /// The vertex joined to `v`.
    pub fn partner(&self, v: Vertex) -> Vertex {
        let n = self.n();
        Vertex::from_id(self.partner_id(v.id(n)), n)
    }

    /// Kind of the edge incident to vertex id `v`.
    pub(crate) fn edge_kind(&self, v: usize) -> EdgeKind {
        let n = self.n();
        let w = self.partner_id(v);
        match (v < n, w < n) {
            (true, true) => EdgeKind::NorthernArc,
            (false, false) => EdgeKind::SouthernArc,
            _ => {
                if (v % n) < self.shape.r {
                    EdgeKind::LeftLine
                } else {
                    EdgeKind::RightLine
                }
            }
        }
    }

    /// Edges with endpoints sorted (top before bottom, lower index first),
    /// listed in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let n = self.n();
        (0..2 * n)
            .filter(|&v| v < self.partner_id(v))
            .map(|v| {
                (
                    Vertex::from_id(v, n),
                    Vertex::from_id(self.partner_id(v), n),
                )
            })
            .collect()
    }

    /// Number of northern arcs (equal to the number of southern arcs).
    pub fn arc_count(&self) -> usize {
        let n = self.n();
        (0..n).filter(|&v| self.partner_id(v) < n).count() / 2
    }

    pub fn is_permutation(&self) -> bool {
        self.arc_count() == 0
    }

    /// For a permutation diagram, `image[i-1] = j` when `Ti` is joined to `Bj`.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        let n = self.n();
        if !self.is_permutation() {
            return None;
        }
        Some((0..n).map(|v| self.partner_id(v) - n + 1).collect())
    }

    /// Permutation diagram joining `Ti` to `B(image[i-1])`.
    pub fn permutation(shape: WalledShape, image: &[usize]) -> Result<Self, Error> {
        let n = shape.n();
        if image.len() != n {
            return Err(Error::NotAMatching("permutation has wrong length".into()));
        }
        let edges: Vec<_> = image
            .iter()
            .enumerate()
            .map(|(i, &j)| (Vertex::Top(i + 1), Vertex::Bottom(j)))
            .collect();
        Self::new(shape, &edges)
    }

    pub fn identity(shape: WalledShape) -> Self {
        let image: Vec<usize> = (1..=shape.n()).collect();
        Self::permutation(shape, &image).expect("identity is valid")
    }

    /// The Coxeter generator swapping columns `i` and `i + 1`.
    pub fn gen_s(shape: WalledShape, i: usize) -> Result<Self, Error> {
        let n = shape.n();
        if i == 0 || i >= n || i == shape.r {
            return Err(Error::GeneratorCrossesWall(i));
        }
        Self::transposition(shape, i, i + 1)
    }

    /// The generator `e` with arcs joining columns `r` and `r + 1` on both rows.
    pub fn gen_e(shape: WalledShape) -> Result<Self, Error> {
        if shape.r == 0 || shape.s == 0 {
            return Err(Error::NoWallAdjacentPair);
        }
        Self::contraction(shape, shape.r, shape.r + 1)
    }

    /// The permutation diagram of the transposition `(a, b)`.
    pub fn transposition(shape: WalledShape, a: usize, b: usize) -> Result<Self, Error> {
        let n = shape.n();
        let (a, b) = (a.min(b), a.max(b));
        if a == 0 || b > n || a == b {
            return Err(Error::IndexOutOfRange(format!("transposition ({a},{b})")));
        }
        if shape.is_left(a) != shape.is_left(b) {
            return Err(Error::WallViolation(format!(
                "transposition ({a},{b}) crosses the wall"
            )));
        }
        let mut image: Vec<usize> = (1..=n).collect();
        image.swap(a - 1, b - 1);
        Self::permutation(shape, &image)
    }

    /// The diagram `e_{j,k}`: arcs `Tj-Tk` and `Bj-Bk`, identity elsewhere.
    pub fn contraction(shape: WalledShape, j: usize, k: usize) -> Result<Self, Error> {
        let n = shape.n();
        if !(1 <= j && j <= shape.r && shape.r < k && k <= n) {
            return Err(Error::InvalidContraction(j, k));
        }
        let mut edges = vec![
            (Vertex::Top(j), Vertex::Top(k)),
            (Vertex::Bottom(j), Vertex::Bottom(k)),
        ];
        edges.extend(
            (1..=n)
                .filter(|&i| i != j && i != k)
                .map(|i| (Vertex::Top(i), Vertex::Bottom(i))),
        );
        Self::new(shape, &edges)
    }

    /// Mirror image exchanging the top and bottom rows.
    pub fn flip(&self) -> Self {
        let n = self.n();
        let swap = |v: usize| if v < n { v + n } else { v - n };
        let mut partner = [UNSET; 2 * MAX_STRANDS];
        for v in 0..2 * n {
            partner[swap(v)] = swap(self.partner_id(v)) as u8;
        }
        WalledDiagram {
            shape: self.shape,
            partner,
        }
    }

    /// Stacks `self` above `other`; returns the resulting diagram and the number of
    /// closed loops formed in the middle row.
    pub fn multiply(&self, other: &WalledDiagram) -> Result<(WalledDiagram, usize), Error> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch(
                self.shape.to_string(),
                other.shape.to_string(),
            ));
        }
        Ok(self.multiply_unchecked(other))
    }

    pub(crate) fn multiply_unchecked(&self, other: &WalledDiagram) -> (WalledDiagram, usize) {
        let n = self.n();
        let mut partner = [UNSET; 2 * MAX_STRANDS];
        let mut visited = [false; MAX_STRANDS];

        // Follow a strand entering the upper diagram at vertex `v` (or the lower
        // one when `in_upper` is false) until it exits on an outer row.
        // Outer ids: upper top row 0..n, lower bottom row n..2n.
        let mut trace = |mut v: usize, mut in_upper: bool| -> usize {
            loop {
                if in_upper {
                    let w = self.partner_id(v);
                    if w < n {
                        return w;
                    }
                    let m = w - n;
                    visited[m] = true;
                    v = m;
                    in_upper = false;
                } else {
                    let w = other.partner_id(v);
                    if w >= n {
                        return w;
                    }
                    visited[w] = true;
                    v = w + n;
                    in_upper = true;
                }
            }
        };

        for start in 0..2 * n {
            if partner[start] != UNSET {
                continue;
            }
            let end = if start < n {
                trace(start, true)
            } else {
                trace(start, false)
            };
            partner[start] = end as u8;
            partner[end] = start as u8;
        }

        let mut loops = 0;
        for m in 0..n {
            if visited[m] {
                continue;
            }
            loops += 1;
            let mut cur = m;
            loop {
                visited[cur] = true;
                // lower diagram's top vertex `cur`, then back up through the upper diagram
                let down = other.partner_id(cur);
                visited[down] = true;
                let up = self.partner_id(down + n) - n;
                if up == m {
                    break;
                }
                cur = up;
            }
        }

        (
            WalledDiagram {
                shape: self.shape,
                partner,
            },
            loops,
        )
    }

    /// `sigma * self * sigma^{-1}` for a permutation diagram `sigma`.
    pub fn conjugate_by(&self, sigma: &WalledDiagram) -> Result<WalledDiagram, Error> {
        if !sigma.is_permutation() {
            return Err(Error::NotAPermutation);
        }
        let (left, _) = sigma.multiply(self)?;
        let (out, loops) = left.multiply(&sigma.flip())?;
        debug_assert_eq!(loops, 0);
        Ok(out)
    }
}

/// `sigma * d * sigma^{-1}`.
pub fn conjugate(sigma: &WalledDiagram, d: &WalledDiagram) -> Result<WalledDiagram, Error> {
    d.conjugate_by(sigma)
}

impl fmt::Display for WalledDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r={},s={};", self.shape.r, self.shape.s)?;
        for (k, (a, b)) in self.edges().iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}-{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for WalledDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WalledDiagram({self})")
    }
}

fn parse_header_value(part: &str, key: &str) -> Result<usize, Error> {
    let part = part.trim();
    part.strip_prefix(key)
        .and_then(|v| v.strip_prefix('='))
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| Error::Parse(format!("expected `{key}=<n>`, found {part:?}")))
}

impl FromStr for WalledDiagram {
    type Err = Error;

    /// Parses `r=R,s=S;t1-b2,...`. Edges and endpoints may come in any order.
    fn from_str(s: &str) -> Result<Self, Error> {
        let (header, body) = s
            .trim()
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("missing ';' in diagram {s:?}")))?;
        let (r, s_part) = header
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("bad diagram header {header:?}")))?;
        let shape = WalledShape::new(
            parse_header_value(r, "r")?,
            parse_header_value(s_part, "s")?,
        )?;
        let mut edges = Vec::new();
        for edge in body.split(',').map(str::trim).filter(|e| !e.is_empty()) {
            let (a, b) = edge
                .split_once('-')
                .ok_or_else(|| Error::Parse(format!("bad edge {edge:?}")))?;
            edges.push((a.parse()?, b.parse()?));
        }
        WalledDiagram::new(shape, &edges)
    }
}

impl Serialize for WalledDiagram {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for WalledDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn d(s: &str) -> WalledDiagram {
        s.parse().unwrap()
    }

    fn shape(r: usize, s: usize) -> WalledShape {
        WalledShape::new(r, s).unwrap()
    }

    const X: &str = "r=4,s=2;t1-b2,t2-b1,t3-t6,t4-t5,b3-b5,b4-b6";
    const Y: &str = "r=4,s=2;t1-b1,t2-b2,t3-t5,t4-t6,b3-b5,b4-b6";

    #[test]
    fn build_x_from_edges() {
        use Vertex::*;
        let x = WalledDiagram::new(
            shape(4, 2),
            &[
                (Top(1), Bottom(2)),
                (Top(2), Bottom(1)),
                (Top(3), Top(6)),
                (Top(4), Top(5)),
                (Bottom(3), Bottom(5)),
                (Bottom(4), Bottom(6)),
            ],
        )
        .unwrap();
        assert_eq!(x.to_string(), X);
        assert_eq!(x, d(X));
    }

    #[test]
    fn construction_errors() {
        use Vertex::*;
        let sh = shape(2, 1);
        let arc = WalledDiagram::new(
            sh,
            &[
                (Top(1), Top(2)),
                (Bottom(1), Bottom(2)),
                (Top(3), Bottom(3)),
            ],
        );
        assert!(matches!(arc, Err(Error::WallViolation(_))));
        let crossing = WalledDiagram::new(
            sh,
            &[
                (Top(1), Bottom(1)),
                (Top(2), Bottom(3)),
                (Top(3), Bottom(2)),
            ],
        );
        assert!(matches!(crossing, Err(Error::WallViolation(_))));
        let dup = WalledDiagram::new(
            sh,
            &[
                (Top(1), Bottom(1)),
                (Top(1), Bottom(2)),
                (Top(3), Bottom(3)),
            ],
        );
        assert!(matches!(dup, Err(Error::NotAMatching(_))));
        let missing = WalledDiagram::new(sh, &[(Top(1), Bottom(1)), (Top(2), Bottom(2))]);
        assert!(matches!(missing, Err(Error::NotAMatching(_))));
        assert!(matches!(
            "r=2,s=1;t1-t2,b1-b2,t3-b3".parse::<WalledDiagram>(),
            Err(Error::WallViolation(_))
        ));
        assert!("r=2,s=1;t1-b1,t2-b2,t3-b4"
            .parse::<WalledDiagram>()
            .is_err());
        assert!("r=2;t1-b1".parse::<WalledDiagram>().is_err());
    }

    #[test]
    fn identity_of_one_one() {
        use Vertex::*;
        let id =
            WalledDiagram::new(shape(1, 1), &[(Top(1), Bottom(1)), (Top(2), Bottom(2))]).unwrap();
        assert_eq!(id, WalledDiagram::identity(shape(1, 1)));
        assert_eq!(
            WalledDiagram::identity(shape(2, 1)).to_string(),
            "r=2,s=1;t1-b1,t2-b2,t3-b3"
        );
    }

    #[test]
    fn generators() {
        assert_eq!(
            WalledDiagram::gen_s(shape(2, 1), 1).unwrap().to_string(),
            "r=2,s=1;t1-b2,t2-b1,t3-b3"
        );
        assert_eq!(
            WalledDiagram::gen_s(shape(2, 2), 3).unwrap().to_string(),
            "r=2,s=2;t1-b1,t2-b2,t3-b4,t4-b3"
        );
        assert_eq!(
            WalledDiagram::gen_s(shape(2, 1), 2),
            Err(Error::GeneratorCrossesWall(2))
        );
        assert_eq!(
            WalledDiagram::gen_s(shape(2, 1), 3),
            Err(Error::GeneratorCrossesWall(3))
        );
        assert_eq!(
            WalledDiagram::gen_e(shape(2, 1)).unwrap().to_string(),
            "r=2,s=1;t1-b1,t2-t3,b2-b3"
        );
        assert_eq!(
            WalledDiagram::gen_e(shape(0, 3)),
            Err(Error::NoWallAdjacentPair)
        );
    }

    #[test]
    fn e_squared_closes_one_loop() {
        let e = WalledDiagram::gen_e(shape(2, 1)).unwrap();
        assert_eq!(e.multiply(&e).unwrap(), (e, 1));
    }

    #[test]
    fn transpositions_and_contractions() {
        assert_eq!(
            WalledDiagram::transposition(shape(3, 1), 1, 3)
                .unwrap()
                .to_string(),
            "r=3,s=1;t1-b3,t2-b2,t3-b1,t4-b4"
        );
        assert_eq!(
            WalledDiagram::transposition(shape(1, 3), 2, 4)
                .unwrap()
                .to_string(),
            "r=1,s=3;t1-b1,t2-b4,t3-b3,t4-b2"
        );
        assert!(matches!(
            WalledDiagram::transposition(shape(2, 2), 2, 3),
            Err(Error::WallViolation(_))
        ));
        let sh = shape(2, 1);
        assert_eq!(
            WalledDiagram::contraction(sh, 2, 3).unwrap(),
            WalledDiagram::gen_e(sh).unwrap()
        );
        assert_eq!(
            WalledDiagram::contraction(sh, 1, 3).unwrap().to_string(),
            "r=2,s=1;t1-t3,t2-b2,b1-b3"
        );
        assert_eq!(
            WalledDiagram::contraction(sh, 2, 2),
            Err(Error::InvalidContraction(2, 2))
        );
    }

    #[test]
    fn worked_products() {
        let (x, y) = (d(X), d(Y));
        assert_eq!(x.multiply(&y).unwrap(), (x, 2));
        let (yx, loops) = y.multiply(&x).unwrap();
        assert_eq!(yx, d("r=4,s=2;t1-b2,t2-b1,t3-t5,t4-t6,b3-b5,b4-b6"));
        assert_eq!(loops, 1);
    }

    #[test]
    fn flip_examples() {
        let x = d(X);
        assert_eq!(x.flip(), d("r=4,s=2;t1-b2,t2-b1,b3-b6,b4-b5,t3-t5,t4-t6"));
        let e = WalledDiagram::gen_e(shape(3, 2)).unwrap();
        assert_eq!(e.flip(), e);
        let id = WalledDiagram::identity(shape(2, 3));
        assert_eq!(id.flip(), id);
    }

    #[test]
    fn conjugation() {
        let sh = shape(2, 1);
        let s1 = WalledDiagram::gen_s(sh, 1).unwrap();
        let e = WalledDiagram::gen_e(sh).unwrap();
        assert_eq!(
            conjugate(&s1, &e).unwrap(),
            WalledDiagram::contraction(sh, 1, 3).unwrap()
        );
        assert_eq!(conjugate(&WalledDiagram::identity(sh), &e).unwrap(), e);
        assert_eq!(conjugate(&e, &s1), Err(Error::NotAPermutation));
    }

    #[test]
    fn shape_mismatch() {
        let a = WalledDiagram::identity(shape(2, 1));
        let b = WalledDiagram::identity(shape(1, 2));
        assert!(matches!(a.multiply(&b), Err(Error::ShapeMismatch(_, _))));
    }
}
