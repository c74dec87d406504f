//! Walled generalized cycle types: the complete invariant of
//! `S_r × S_s`-conjugacy on diagrams.
//!
//! Overlaying the vertical edges `Ti–Bi` on a diagram turns every connected
//! component into a closed loop. Reading the diagram edges along a loop gives
//! a word over `{L, N, R, S}`; the multiset of these words, each taken up to
//! rotation and reversal, is the cycle type.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{factorial, Bounds};
use crate::central::Bipartition;
use crate::diagrams::{
    enumerate_diagrams, wall_permutations, AlgebraElement, EdgeKind, WalledDiagram, WalledShape,
};
use crate::error::Error;
use crate::scalars::Delta;

/// Edge letter. The declaration order `L < N < R < S` is the canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    L,
    N,
    R,
    S,
}

impl Letter {
    pub fn from_char(c: char) -> Result<Letter, Error> {
        match c {
            'L' => Ok(Letter::L),
            'N' => Ok(Letter::N),
            'R' => Ok(Letter::R),
            'S' => Ok(Letter::S),
            other => Err(Error::Parse(format!(
                "letter {other:?} is not one of L, N, R, S"
            ))),
        }
    }

    fn of_edge(kind: EdgeKind) -> Letter {
        match kind {
            EdgeKind::NorthernArc => Letter::N,
            EdgeKind::SouthernArc => Letter::S,
            EdgeKind::LeftLine => Letter::L,
            EdgeKind::RightLine => Letter::R,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::L => 'L',
            Letter::N => 'N',
            Letter::R => 'R',
            Letter::S => 'S',
        }
    }
}

/// One part of a cycle type, stored as the lexicographically least word among
/// its rotations and the rotations of its reversal.
///
/// Reversal does not exchange `N` and `S`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartWord(Vec<Letter>);

impl PartWord {
    /// Canonical representative of the rotation/reversal class of `letters`.
    pub fn canonical(letters: &[Letter]) -> Result<PartWord, Error> {
        if letters.is_empty() {
            return Err(Error::Parse("empty part".into()));
        }
        let len = letters.len();
        let reversed: Vec<Letter> = letters.iter().rev().copied().collect();
        let mut best: Option<Vec<Letter>> = None;
        for word in [letters, &reversed[..]] {
            for shift in 0..len {
                let candidate: Vec<Letter> = word[shift..]
                    .iter()
                    .chain(&word[..shift])
                    .copied()
                    .collect();
                if best.as_ref().is_none_or(|b| candidate < *b) {
                    best = Some(candidate);
                }
            }
        }
        Ok(PartWord(best.expect("nonempty")))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }

    /// `L^a`, `R^b` or exactly `NS`.
    pub fn is_trivial(&self) -> bool {
        let all = |l: Letter| self.0.iter().all(|&x| x == l);
        all(Letter::L) || all(Letter::R) || self.0 == [Letter::N, Letter::S]
    }

    pub fn repeat(letter: Letter, times: usize) -> PartWord {
        PartWord(vec![letter; times])
    }

    pub fn ns() -> PartWord {
        PartWord(vec![Letter::N, Letter::S])
    }
}

/// Canonical part for a string such as `"SNSN"`.
pub fn canonical_part(word: &str) -> Result<PartWord, Error> {
    let letters = word
        .chars()
        .map(Letter::from_char)
        .collect::<Result<Vec<_>, _>>()?;
    PartWord::canonical(&letters)
}

/// Whether `part` is trivial: `L^a`, `R^b`, or `NS`.
pub fn is_trivial_part(part: &PartWord) -> bool {
    part.is_trivial()
}

impl fmt::Display for PartWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for PartWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        canonical_part(s.trim())
    }
}

/// The multiset of parts of a diagram, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    shape: WalledShape,
    parts: Vec<PartWord>,
}

impl CycleType {
    /// Builds a type from parts, checking the letter counts against the shape.
    pub fn new(shape: WalledShape, mut parts: Vec<PartWord>) -> Result<CycleType, Error> {
        parts.sort();
        let ct = CycleType { shape, parts };
        let (l, n, r, s) = ct.letter_counts();
        if n != s || n > shape.r.min(shape.s) || l + n != shape.r || r + n != shape.s {
            return Err(Error::Parse(format!(
                "cycle type {ct} does not fit shape {shape}"
            )));
        }
        Ok(ct)
    }

    pub fn shape(&self) -> WalledShape {
        self.shape
    }

    pub fn parts(&self) -> &[PartWord] {
        &self.parts
    }

    /// Totals of `(L, N, R, S)` over all parts.
    pub fn letter_counts(&self) -> (usize, usize, usize, usize) {
        let total = |l| self.parts.iter().map(|p| p.count(l)).sum::<usize>();
        (
            total(Letter::L),
            total(Letter::N),
            total(Letter::R),
            total(Letter::S),
        )
    }

    pub fn has_only_trivial_parts(&self) -> bool {
        self.parts.iter().all(PartWord::is_trivial)
    }

    /// Number of parts equal to `NS`.
    pub fn trivial_ns_count(&self) -> usize {
        self.parts.iter().filter(|p| **p == PartWord::ns()).count()
    }

    /// The type `{L^λ1, …, R^μ1, …, NS × k}` of a bipartition.
    pub fn from_bipartition(shape: WalledShape, bp: &Bipartition) -> Result<CycleType, Error> {
        let mut parts: Vec<PartWord> = bp
            .lambda
            .iter()
            .map(|&a| PartWord::repeat(Letter::L, a))
            .collect();
        parts.extend(bp.mu.iter().map(|&b| PartWord::repeat(Letter::R, b)));
        parts.extend(std::iter::repeat_n(PartWord::ns(), bp.k));
        CycleType::new(shape, parts)
    }

    /// Inverse of [`CycleType::from_bipartition`] on types whose parts are all trivial.
    pub fn bipartition(&self) -> Option<Bipartition> {
        if !self.has_only_trivial_parts() {
            return None;
        }
        let mut lambda = Vec::new();
        let mut mu = Vec::new();
        let mut k = 0;
        for p in &self.parts {
            match p.letters()[0] {
                Letter::L => lambda.push(p.len()),
                Letter::R => mu.push(p.len()),
                _ => k += 1,
            }
        }
        Some(Bipartition::new(lambda, mu, k))
    }

    /// Parses `"LL+NSNS"`; the shape is recovered from the letter counts.
    pub fn parse_with_shape(text: &str, shape: WalledShape) -> Result<CycleType, Error> {
        let parts = text
            .split('+')
            .map(|p| p.trim().parse())
            .collect::<Result<Vec<PartWord>, _>>()?;
        CycleType::new(shape, parts)
    }
}

/// Returns the parsed type of a diagram's shape as deduced from the counts:
/// `r = #L + #N`, `s = #R + #N`.
impl FromStr for CycleType {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self, Error> {
        let parts = text
            .split('+')
            .map(|p| p.trim().parse())
            .collect::<Result<Vec<PartWord>, _>>()?;
        let total = |l| parts.iter().map(|p: &PartWord| p.count(l)).sum::<usize>();
        let n = total(Letter::N);
        let shape = WalledShape::new(total(Letter::L) + n, total(Letter::R) + n)?;
        CycleType::new(shape, parts)
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl Serialize for CycleType {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CycleType {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Raw (uncanonicalized) words read off the loops of `d`, one per component.
pub fn loop_words(d: &WalledDiagram) -> Vec<Vec<Letter>> {
    let n = d.n();
    let mut seen = vec![false; 2 * n];
    let mut words = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut word = Vec::new();
        let mut v = start;
        loop {
            let w = d.partner_id(v);
            seen[v] = true;
            seen[w] = true;
            word.push(Letter::of_edge(d.edge_kind(v)));
            // vertical identification edge Ti–Bi
            v = if w < n { w + n } else { w - n };
            if v == start {
                break;
            }
        }
        words.push(word);
    }
    words
}

/// The walled generalized cycle type of `d`.
pub fn cycle_type(d: &WalledDiagram) -> CycleType {
    let parts = loop_words(d)
        .iter()
        .map(|w| PartWord::canonical(w).expect("loops are nonempty"))
        .collect();
    let mut parts: Vec<PartWord> = parts;
    parts.sort();
    CycleType {
        shape: d.shape(),
        parts,
    }
}

/// Every diagram of a shape grouped by cycle type.
#[derive(Debug, Clone)]
pub struct CycleTypeCensus {
    shape: WalledShape,
    diagrams: Vec<WalledDiagram>,
    types: Vec<CycleType>,
    classes: Vec<Vec<usize>>,
    type_of: Vec<usize>,
    diagram_index: HashMap<WalledDiagram, usize>,
    type_index: HashMap<CycleType, usize>,
}

impl CycleTypeCensus {
    pub fn new(shape: WalledShape, bounds: &Bounds) -> Result<Self, Error> {
        let diagrams = enumerate_diagrams(shape, bounds)?;
        let computed: Vec<CycleType> = diagrams.par_iter().map(cycle_type).collect();
        let mut grouped: BTreeMap<CycleType, Vec<usize>> = BTreeMap::new();
        for (i, ct) in computed.into_iter().enumerate() {
            grouped.entry(ct).or_default().push(i);
        }
        let mut type_of = vec![0; diagrams.len()];
        let mut types = Vec::with_capacity(grouped.len());
        let mut classes = Vec::with_capacity(grouped.len());
        for (t, (ct, members)) in grouped.into_iter().enumerate() {
            for &i in &members {
                type_of[i] = t;
            }
            types.push(ct);
            classes.push(members);
        }
        let diagram_index = diagrams.iter().enumerate().map(|(i, d)| (*d, i)).collect();
        let type_index = types
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        Ok(CycleTypeCensus {
            shape,
            diagrams,
            types,
            classes,
            type_of,
            diagram_index,
            type_index,
        })
    }

    pub fn shape(&self) -> WalledShape {
        self.shape
    }

    /// The diagram basis in enumeration order.
    pub fn diagrams(&self) -> &[WalledDiagram] {
        &self.diagrams
    }

    pub fn types(&self) -> &[CycleType] {
        &self.types
    }

    /// Diagram indices with type `types()[t]`.
    pub fn class(&self, t: usize) -> &[usize] {
        &self.classes[t]
    }

    pub fn class_members(&self, t: usize) -> impl Iterator<Item = &WalledDiagram> {
        self.classes[t].iter().map(|&i| &self.diagrams[i])
    }

    pub fn type_of_index(&self, i: usize) -> usize {
        self.type_of[i]
    }

    pub fn diagram_index(&self, d: &WalledDiagram) -> Option<usize> {
        self.diagram_index.get(d).copied()
    }

    pub fn type_index(&self, ct: &CycleType) -> Option<usize> {
        self.type_index.get(ct).copied()
    }

    /// Sum of all diagrams of type `ct`, each with coefficient 1.
    pub fn class_sum(&self, ct: &CycleType, delta: &Delta) -> Result<AlgebraElement, Error> {
        let t = self
            .type_index(ct)
            .ok_or_else(|| Error::UnknownCycleType(ct.to_string()))?;
        Ok(self.class_sum_by_index(t, delta))
    }

    pub fn class_sum_by_index(&self, t: usize, delta: &Delta) -> AlgebraElement {
        AlgebraElement::from_terms(
            self.shape,
            delta,
            self.class_members(t).map(|d| (*d, delta.one())),
        )
        .expect("same shape and ring")
    }
}

/// Distinct cycle types of a shape, in sorted order.
pub fn enumerate_cycle_types(shape: WalledShape, bounds: &Bounds) -> Result<Vec<CycleType>, Error> {
    Ok(CycleTypeCensus::new(shape, bounds)?.types().to_vec())
}

/// Sum of all diagrams with cycle type `ct`.
pub fn class_sum(ct: &CycleType, delta: &Delta, bounds: &Bounds) -> Result<AlgebraElement, Error> {
    CycleTypeCensus::new(ct.shape(), bounds)?.class_sum(ct, delta)
}

/// How [`is_conjugate`] decides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConjugacyMode {
    CycleType,
    BruteForce,
}

/// Whether `d2 = σ d1 σ⁻¹` for some `σ ∈ S_r × S_s`.
pub fn is_conjugate(
    d1: &WalledDiagram,
    d2: &WalledDiagram,
    mode: ConjugacyMode,
    bounds: &Bounds,
) -> Result<bool, Error> {
    if d1.shape() != d2.shape() {
        return Err(Error::ShapeMismatch(
            d1.shape().to_string(),
            d2.shape().to_string(),
        ));
    }
    match mode {
        ConjugacyMode::CycleType => Ok(cycle_type(d1) == cycle_type(d2)),
        ConjugacyMode::BruteForce => {
            let shape = d1.shape();
            let group_order = factorial(shape.r) * factorial(shape.s);
            if group_order > bounds.conjugacy {
                return Err(Error::EnumerationTooLarge(format!(
                    "|S_r x S_s| = {group_order} exceeds the conjugacy bound {}",
                    bounds.conjugacy
                )));
            }
            for sigma in wall_permutations(shape) {
                if d1.conjugate_by(&sigma)? == *d2 {
                    return Ok(true);
                }
            }
            Ok(false)
        }
    }
}

/// Bipartition of a type with only trivial parts, `None` otherwise.
pub fn bipartition_of_type(ct: &CycleType) -> Option<Bipartition> {
    ct.bipartition()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> WalledDiagram {
        s.parse().unwrap()
    }

    fn shape(r: usize, s: usize) -> WalledShape {
        WalledShape::new(r, s).unwrap()
    }

    const X: &str = "r=4,s=2;t1-b2,t2-b1,t3-t6,t4-t5,b3-b5,b4-b6";
    const Y: &str = "r=4,s=2;t1-b1,t2-b2,t3-t5,t4-t6,b3-b5,b4-b6";
    const D33: &str = "r=3,s=3;t1-t6,t2-t5,t3-b1,t4-b5,b2-b6,b3-b4";

    #[test]
    fn worked_cycle_types() {
        assert_eq!(cycle_type(&d(X)).to_string(), "LL+NSNS");
        assert_eq!(cycle_type(&d(Y)).to_string(), "L+L+NS+NS");
        let dd = d(D33);
        assert_eq!(cycle_type(&dd), "NSNRSL".parse().unwrap());
        assert_eq!(cycle_type(&dd.flip()), "NSLNRS".parse().unwrap());
        assert_ne!(cycle_type(&dd), cycle_type(&dd.flip()));
    }

    #[test]
    fn raw_reading_of_remark_diagram() {
        // starting at T1 the loop reads N S N R S L literally
        let words = loop_words(&d(D33));
        assert_eq!(words.len(), 1);
        let text: String = words[0].iter().map(|l| l.as_char()).collect();
        assert_eq!(text, "NSNRSL");
    }

    #[test]
    fn canonical_parts() {
        assert_eq!(
            canonical_part("SNSN").unwrap(),
            canonical_part("NSNS").unwrap()
        );
        assert_eq!(canonical_part("SN").unwrap().to_string(), "NS");
        assert_eq!(canonical_part("L").unwrap().to_string(), "L");
        assert!(canonical_part("LXN").is_err());
        assert!(canonical_part("").is_err());
    }

    #[test]
    fn trivial_parts() {
        assert!(is_trivial_part(&canonical_part("LLL").unwrap()));
        assert!(is_trivial_part(&canonical_part("NS").unwrap()));
        assert!(is_trivial_part(&canonical_part("RR").unwrap()));
        assert!(!is_trivial_part(&canonical_part("NSNS").unwrap()));
        assert!(!is_trivial_part(&canonical_part("NSL").unwrap()));
    }

    #[test]
    fn censuses_of_small_shapes() {
        let b = Bounds::default();
        let show = |r, s| -> Vec<String> {
            enumerate_cycle_types(shape(r, s), &b)
                .unwrap()
                .iter()
                .map(ToString::to_string)
                .collect()
        };
        assert_eq!(show(2, 1), ["L+L+R", "L+NS", "LL+R", "LNS"]);
        assert_eq!(show(1, 1), ["L+R", "NS"]);
        assert_eq!(show(2, 0), ["L+L", "LL"]);
    }

    #[test]
    fn class_sums() {
        let b = Bounds::default();
        let delta = Delta::Generic;
        let census = CycleTypeCensus::new(shape(2, 1), &b).unwrap();
        let id_type = cycle_type(&WalledDiagram::identity(shape(2, 1)));
        let id_sum = census.class_sum(&id_type, &delta).unwrap();
        assert_eq!(id_sum, AlgebraElement::identity(shape(2, 1), &delta));
        let nsl: CycleType = "NSL".parse().unwrap();
        assert_eq!(census.class_sum(&nsl, &delta).unwrap().len(), 2);

        let c11 = CycleTypeCensus::new(shape(1, 1), &b).unwrap();
        let arc = WalledDiagram::gen_e(shape(1, 1)).unwrap();
        assert_eq!(
            c11.class_sum(&"NS".parse().unwrap(), &delta).unwrap(),
            AlgebraElement::from_diagram(arc, &delta)
        );
        let foreign: CycleType = "LL+R".parse().unwrap();
        assert!(matches!(
            c11.class_sum(&foreign, &delta),
            Err(Error::UnknownCycleType(_))
        ));
    }

    #[test]
    fn conjugacy_modes_agree_on_two_one() {
        let b = Bounds::default();
        let all = enumerate_diagrams(shape(2, 1), &b).unwrap();
        let mut pairs = 0;
        for d1 in &all {
            for d2 in &all {
                let fast = is_conjugate(d1, d2, ConjugacyMode::CycleType, &b).unwrap();
                let slow = is_conjugate(d1, d2, ConjugacyMode::BruteForce, &b).unwrap();
                assert_eq!(fast, slow, "{d1} vs {d2}");
                pairs += 1;
            }
        }
        assert_eq!(pairs, 36);
        assert!(!is_conjugate(&d(X), &d(Y), ConjugacyMode::CycleType, &b).unwrap());
    }

    #[test]
    fn bipartition_map() {
        let ct = CycleType::new(
            shape(4, 2),
            vec![
                canonical_part("LL").unwrap(),
                canonical_part("L").unwrap(),
                canonical_part("R").unwrap(),
                PartWord::ns(),
            ],
        )
        .unwrap();
        assert_eq!(
            bipartition_of_type(&ct),
            Some(Bipartition::new(vec![2, 1], vec![1], 1))
        );
        assert_eq!(bipartition_of_type(&cycle_type(&d(X))), None);
    }

    #[test]
    fn text_forms_round_trip() {
        for s in ["LL+NSNS", "L+L+NS+NS", "LNRSNS", "L+L+R"] {
            let ct: CycleType = s.parse().unwrap();
            assert_eq!(ct.to_string().parse::<CycleType>().unwrap(), ct);
        }
        assert_eq!("NSLNRS".parse::<CycleType>().unwrap().to_string(), "LNRSNS");
        assert!("NN".parse::<CycleType>().is_err());
    }
}
