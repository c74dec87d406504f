//! Structural checks on the commutator system for `B_{r,1}(δ)`.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::Serialize;

use super::report::system_rank;
use super::{commutator_system, rank, ExactMatrix};
use crate::bounds::Bounds;
use crate::central::bipartitions;
use crate::cycletype::{cycle_type, CycleType, CycleTypeCensus, Letter, PartWord};
use crate::diagrams::{Vertex, WalledDiagram, WalledShape};
use crate::error::Error;
use crate::scalars::{Delta, Scalar};

/// One named check and whether it passed.
#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn new(name: &str, passed: bool, detail: String) -> Self {
        CheckOutcome {
            name: name.to_string(),
            passed,
            detail,
        }
    }
}

/// Results of [`section5_suite`].
#[derive(Debug, Clone, Serialize)]
pub struct Suite5Report {
    pub r: usize,
    pub delta: Delta,
    pub lambda_count: usize,
    pub cycle_type_count: usize,
    /// `|C_{r,1}| − |Λ_{r,1}|`
    pub expected_rank: usize,
    pub selected_rank: usize,
    pub system_rank: usize,
    pub checks: Vec<CheckOutcome>,
}

impl Suite5Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// For `x` with arcs `Tr–T(r+1)` and `B(i_x)–B(r+1)`, `i_x ≠ r`, returns
/// `(i_x, f_x)` where `f_x(k)` is the bottom end of the line leaving `Tk`.
pub fn arc_data(x: &WalledDiagram) -> Result<(usize, Vec<usize>), Error> {
    let shape = x.shape();
    let r = shape.r;
    let bad = || {
        Error::Unsupported(format!(
            "{x} is not of the form Tr–T(r+1), Bi–B(r+1) with i != r"
        ))
    };
    if shape.s != 1 || r == 0 {
        return Err(bad());
    }
    if x.partner(Vertex::Top(r)) != Vertex::Top(r + 1) {
        return Err(bad());
    }
    let i_x = match x.partner(Vertex::Bottom(r + 1)) {
        Vertex::Bottom(i) if i != r => i,
        _ => return Err(bad()),
    };
    let f_x = (1..r)
        .map(|k| match x.partner(Vertex::Top(k)) {
            Vertex::Bottom(j) => Ok(j),
            Vertex::Top(_) => Err(bad()),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((i_x, f_x))
}

/// The permutation `σ_x`: `k ↦ f_x(k)` for `k < r`, `r ↦ i_x`, `r+1 ↦ r+1`.
pub fn sigma_x(x: &WalledDiagram) -> Result<WalledDiagram, Error> {
    let (i_x, f_x) = arc_data(x)?;
    let r = x.shape().r;
    let mut image = f_x;
    image.push(i_x);
    image.push(r + 1);
    WalledDiagram::permutation(x.shape(), &image)
}

/// The diagram `z_x`: arcs `T(i_x)–T(r+1)` and `B(i_x)–B(r+1)`, lines
/// `Tk–B(f_x(k))` for `k ≠ i_x, r`, and `Tr–B(f_x(i_x))`.
pub fn z_x(x: &WalledDiagram) -> Result<WalledDiagram, Error> {
    let (i_x, f_x) = arc_data(x)?;
    let r = x.shape().r;
    let mut edges = vec![
        (Vertex::Top(i_x), Vertex::Top(r + 1)),
        (Vertex::Bottom(i_x), Vertex::Bottom(r + 1)),
    ];
    for k in (1..=r).filter(|&k| k != i_x) {
        let target = if k == r { f_x[i_x - 1] } else { f_x[k - 1] };
        edges.push((Vertex::Top(k), Vertex::Bottom(target)));
    }
    WalledDiagram::new(x.shape(), &edges)
}

/// The one part of a type that contains `N`, with its number of `L`s.
fn arc_part(ct: &CycleType) -> Option<(usize, &PartWord)> {
    ct.parts()
        .iter()
        .enumerate()
        .find(|(_, p)| p.count(Letter::N) > 0)
}

/// `c(x)` with the part `NS L^a` replaced by `L^(a+1)` plus the freed right
/// strand `R` (for σ_x), or by `L^a` and `NS` (for z_x).
fn transformed_types(ct: &CycleType) -> Option<(CycleType, CycleType)> {
    let (idx, part) = arc_part(ct)?;
    let a = part.count(Letter::L);
    let mut rest: Vec<PartWord> = ct.parts().to_vec();
    rest.remove(idx);
    let mut for_sigma = rest.clone();
    for_sigma.push(PartWord::repeat(Letter::L, a + 1));
    for_sigma.push(PartWord::repeat(Letter::R, 1));
    let mut for_z = rest;
    if a > 0 {
        for_z.push(PartWord::repeat(Letter::L, a));
    }
    for_z.push(PartWord::ns());
    Some((
        CycleType::new(ct.shape(), for_sigma).ok()?,
        CycleType::new(ct.shape(), for_z).ok()?,
    ))
}

/// Permutations of `1..=m` as image vectors.
fn permutations_of(m: usize) -> Vec<Vec<usize>> {
    (1..=m).permutations(m).collect()
}

/// `x` with arcs `Tr–T(r+1)`, `Br–B(r+1)` and lines `Tk–B(q(k))`.
fn arc_block_diagram(shape: WalledShape, q: &[usize]) -> WalledDiagram {
    let r = shape.r;
    let mut edges = vec![
        (Vertex::Top(r), Vertex::Top(r + 1)),
        (Vertex::Bottom(r), Vertex::Bottom(r + 1)),
    ];
    edges.extend(
        q.iter()
            .enumerate()
            .map(|(k, &j)| (Vertex::Top(k + 1), Vertex::Bottom(j))),
    );
    WalledDiagram::new(shape, &edges).expect("valid by construction")
}

/// All diagrams with arcs `Tr–T(r+1)` and `Bi–B(r+1)`, `i ≠ r`.
fn open_arc_family(census: &CycleTypeCensus) -> Vec<WalledDiagram> {
    census
        .diagrams()
        .iter()
        .filter(|d| arc_data(d).is_ok())
        .copied()
        .collect()
}

/// Permutation diagram of `σ ∈ S_{r−1}`, fixing `r` and `r + 1`.
fn small_permutation(shape: WalledShape, sigma: &[usize]) -> WalledDiagram {
    let mut image = sigma.to_vec();
    image.push(shape.r);
    image.push(shape.r + 1);
    WalledDiagram::permutation(shape, &image).expect("wall-respecting")
}

fn row(m: &ExactMatrix, i: usize) -> &[Scalar] {
    &m.rows()[i]
}

/// The worked `(6,1)` example: `f_x`, `i_x`, `σ_x`, `z_x` and both products with `e`.
pub fn worked_example() -> Result<CheckOutcome, Error> {
    let x: WalledDiagram = "r=6,s=1;t1-b4,t2-b1,t3-b2,t4-b5,t5-b6,t6-t7,b3-b7".parse()?;
    let (i_x, f_x) = arc_data(&x)?;
    let sigma = sigma_x(&x)?;
    let z = z_x(&x)?;
    let expected_sigma: WalledDiagram =
        "r=6,s=1;t1-b4,t2-b1,t3-b2,t4-b5,t5-b6,t6-b3,t7-b7".parse()?;
    let expected_z: WalledDiagram = "r=6,s=1;t1-b4,t2-b1,t3-t7,t4-b5,t5-b6,t6-b2,b3-b7".parse()?;
    let e = WalledDiagram::gen_e(x.shape())?;
    let ok = i_x == 3
        && f_x == [4, 1, 2, 5, 6]
        && sigma == expected_sigma
        && z == expected_z
        && e.multiply(&sigma)? == (x, 0)
        && e.multiply(&z)? == (x, 0)
        && transformed_types(&cycle_type(&x)) == Some((cycle_type(&sigma), cycle_type(&z)));
    Ok(CheckOutcome::new(
        "worked (6,1) example",
        ok,
        format!("i_x = {i_x}, f_x = {f_x:?}, sigma_x = {sigma}, z_x = {z}"),
    ))
}

/// Runs every structural check on the commutator system of `B_{r,1}(δ)`.
pub fn section5_suite(r: usize, delta: &Delta, bounds: &Bounds) -> Result<Suite5Report, Error> {
    if r == 0 || r > 5 {
        return Err(Error::Unsupported(format!(
            "the s = 1 suite needs 1 <= r <= 5, got {r}"
        )));
    }
    let shape = WalledShape::new(r, 1)?;
    let census = CycleTypeCensus::new(shape, bounds)?;
    let system = commutator_system(&census, delta)?;
    let index = |d: &WalledDiagram| census.diagram_index(d).expect("diagram of this shape");
    let mut checks = Vec::new();

    // (a) each B_μ is closed under the flip
    let unstable: Vec<String> = (0..census.types().len())
        .filter(|&t| {
            let members: BTreeSet<WalledDiagram> = census.class_members(t).copied().collect();
            let flipped: BTreeSet<WalledDiagram> =
                members.iter().map(WalledDiagram::flip).collect();
            members != flipped
        })
        .map(|t| census.types()[t].to_string())
        .collect();
    checks.push(CheckOutcome::new(
        "flip-stability of every class",
        unstable.is_empty(),
        format!("{} classes, unstable: {unstable:?}", census.types().len()),
    ));

    // (b) b_{x*} = −b_x
    let mut antisym_failures = 0;
    let mut self_flip = 0;
    for (i, x) in census.diagrams().iter().enumerate() {
        let j = index(&x.flip());
        let negated: Vec<Scalar> = row(&system, i).iter().map(|c| -c).collect();
        if row(&system, j) != negated.as_slice() {
            antisym_failures += 1;
        }
        if i == j {
            self_flip += 1;
        }
    }
    checks.push(CheckOutcome::new(
        "antisymmetry b(x*) = -b(x)",
        antisym_failures == 0,
        format!("{antisym_failures} failures, {self_flip} flip-invariant diagrams with zero rows"),
    ));

    // (c) zero rows for the arcs Tr–T(r+1), Br–B(r+1) with a permutation block
    let family: Vec<WalledDiagram> = permutations_of(r - 1)
        .iter()
        .map(|q| arc_block_diagram(shape, q))
        .collect();
    let nonzero = family
        .iter()
        .filter(|x| row(&system, index(x)).iter().any(|c| !c.is_zero()))
        .count();
    checks.push(CheckOutcome::new(
        "zero rows for the closed-arc family",
        nonzero == 0,
        format!("{} diagrams, {nonzero} nonzero rows", family.len()),
    ));

    // (d) b_x = b_{σxσ⁻¹} for σ ∈ S_{r−1}
    let open = open_arc_family(&census);
    let small: Vec<WalledDiagram> = permutations_of(r - 1)
        .iter()
        .map(|s| small_permutation(shape, s))
        .collect();
    let mut conj_failures = 0;
    for x in &open {
        for sigma in &small {
            let y = x.conjugate_by(sigma)?;
            if row(&system, index(x)) != row(&system, index(&y)) {
                conj_failures += 1;
            }
        }
    }
    checks.push(CheckOutcome::new(
        "conjugation invariance under S_(r-1)",
        conj_failures == 0,
        format!(
            "{} diagrams x {} permutations, {conj_failures} failures",
            open.len(),
            small.len()
        ),
    ));

    // (e) e·σ_x = x and e·z_x = x, the type transformations, and uniqueness
    let e = WalledDiagram::gen_e(shape)?;
    let mut e_failures = Vec::new();
    for x in &open {
        let sigma = sigma_x(x)?;
        let z = z_x(x)?;
        let products_ok = e.multiply(&sigma)? == (*x, 0) && e.multiply(&z)? == (*x, 0);
        let types_ok =
            transformed_types(&cycle_type(x)) == Some((cycle_type(&sigma), cycle_type(&z)));
        let mut no_ns = Vec::new();
        let mut trivial_ns = Vec::new();
        for (k, y) in census.diagrams().iter().enumerate() {
            if e.multiply(y)? != (*x, 0) {
                continue;
            }
            let ct = &census.types()[census.type_of_index(k)];
            let with_n: Vec<&PartWord> = ct
                .parts()
                .iter()
                .filter(|p| p.count(Letter::N) > 0)
                .collect();
            if with_n.is_empty() {
                no_ns.push(*y);
            } else if with_n.iter().all(|p| **p == PartWord::ns()) {
                trivial_ns.push(*y);
            }
        }
        let unique_ok = no_ns == [sigma] && trivial_ns == [z];
        if !(products_ok && types_ok && unique_ok) {
            e_failures.push(x.to_string());
        }
    }
    checks.push(CheckOutcome::new(
        "e*sigma_x = x and e*z_x = x with unique preimages",
        e_failures.is_empty(),
        format!("{} diagrams, failures: {e_failures:?}", open.len()),
    ));
    checks.push(worked_example()?);

    // (f) one equation per type with a non-trivial part
    let nontrivial: Vec<usize> = (0..census.types().len())
        .filter(|&t| !census.types()[t].has_only_trivial_parts())
        .collect();
    let mut selected = Vec::new();
    let mut missing = Vec::new();
    for &t in &nontrivial {
        match census
            .class(t)
            .iter()
            .copied()
            .find(|&i| arc_data(&census.diagrams()[i]).is_ok())
        {
            Some(i) => selected.push(i),
            None => missing.push(census.types()[t].to_string()),
        }
    }
    let lambda_count = bipartitions(shape).len();
    let cycle_type_count = census.types().len();
    let expected_rank = cycle_type_count - lambda_count;
    let selected_rank = rank(&system.select_rows(&selected));
    let total_rank = system_rank(&census, delta)?;
    checks.push(CheckOutcome::new(
        "selected equations are independent",
        missing.is_empty()
            && selected.len() == expected_rank
            && selected_rank == expected_rank
            && total_rank == expected_rank,
        format!(
            "{} selected rows, rank {selected_rank}, system rank {total_rank}, expected {expected_rank}",
            selected.len()
        ),
    ));

    Ok(Suite5Report {
        r,
        delta: delta.clone(),
        lambda_count,
        cycle_type_count,
        expected_rank,
        selected_rank,
        system_rank: total_rank,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example_reproduces() {
        let out = worked_example().unwrap();
        assert!(out.passed, "{}", out.detail);
    }

    #[test]
    fn suite_passes_for_small_r() {
        let b = Bounds::default();
        for r in 1..=3 {
            for d in [Delta::Generic, Delta::int(0), Delta::int(1)] {
                let rep = section5_suite(r, &d, &b).unwrap();
                for c in &rep.checks {
                    assert!(c.passed, "r = {r}, δ = {d}: {} ({})", c.name, c.detail);
                }
            }
        }
        let rep = section5_suite(2, &Delta::Generic, &b).unwrap();
        assert_eq!(rep.expected_rank, 1);
        assert_eq!(rep.selected_rank, 1);
    }

    #[test]
    fn rejects_other_shapes() {
        assert!(section5_suite(0, &Delta::Generic, &Bounds::default()).is_err());
        assert!(section5_suite(6, &Delta::Generic, &Bounds::default()).is_err());
        let x: WalledDiagram = "r=2,s=1;t1-b1,t2-t3,b2-b3".parse().unwrap();
        assert!(sigma_x(&x).is_err());
    }
}
