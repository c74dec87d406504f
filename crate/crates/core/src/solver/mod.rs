//! Centre computations, the conjecture check and the semisimplicity criterion.

mod linalg;
mod report;
mod suite5;

use rayon::prelude::*;

pub use linalg::{rank, rank_kernel, subspace_relate, ExactMatrix, Relation, Subspace};
pub use report::{
    verify_centralizer, verify_conjecture, CentralizerReport, ConjectureReport, Verdict,
};
pub use suite5::{section5_suite, sigma_x, z_x, CheckOutcome, Suite5Report};

use crate::bounds::{factorial, Bounds};
use crate::cycletype::CycleTypeCensus;
use crate::diagrams::{enumerate_diagrams, generators, AlgebraElement, WalledDiagram, WalledShape};
use crate::error::Error;
use crate::scalars::{Delta, Rational, RingTag, Scalar};

/// Which centre algorithm to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CentreMethod {
    BruteForce,
    Reduced,
}

/// Coordinates of `x·g − g·x` against `basis`.
fn commutator_coords(
    x: &AlgebraElement,
    g: &WalledDiagram,
    basis: &[WalledDiagram],
) -> Vec<Scalar> {
    let g = AlgebraElement::from_diagram(*g, x.delta());
    x.commutator(&g)
        .expect("same shape and ring")
        .coordinates(basis)
}

/// `Σ_j w_j v_j` over the field of fractions.
fn combine(tag: RingTag, w: &[Scalar], vs: &[Vec<Scalar>], len: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(tag); len];
    for (wj, v) in w.iter().zip(vs) {
        if wj.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            if !x.is_zero() {
                *o = o
                    .try_add(&wj.try_mul(x).expect("same ring"))
                    .expect("same ring");
            }
        }
    }
    out
}

/// Kernel of the stacked maps `X ↦ Xg − gX` over `gens`, refined one generator at a time.
fn common_commutant(
    basis: &[WalledDiagram],
    gens: &[WalledDiagram],
    delta: &Delta,
) -> Result<Vec<Vec<Scalar>>, Error> {
    let tag = delta.tag();
    let shape = basis[0].shape();
    let mut current: Option<Vec<Vec<Scalar>>> = None;
    for g in gens {
        let columns: Vec<Vec<Scalar>> = match &current {
            None => basis
                .par_iter()
                .map(|d| commutator_coords(&AlgebraElement::from_diagram(*d, delta), g, basis))
                .collect(),
            Some(vs) => vs
                .par_iter()
                .map(|v| {
                    let x = AlgebraElement::from_terms(
                        shape,
                        delta,
                        basis.iter().copied().zip(v.iter().cloned()),
                    )
                    .expect("same ring");
                    commutator_coords(&x, g, basis)
                })
                .collect(),
        };
        let m = ExactMatrix::from_columns(tag, basis.len(), &columns)?;
        let (_, kernel) = rank_kernel(&m);
        current = Some(match &current {
            None => kernel,
            Some(vs) => kernel
                .iter()
                .map(|w| combine(tag, w, vs, basis.len()))
                .collect(),
        });
        if current.as_ref().is_some_and(Vec::is_empty) {
            break;
        }
    }
    Ok(current.unwrap_or_else(|| {
        (0..basis.len())
            .map(|i| {
                (0..basis.len())
                    .map(|j| Scalar::from_integer(tag, (i == j) as i64))
                    .collect()
            })
            .collect()
    }))
}

fn check_brute_force_bound(shape: WalledShape, bounds: &Bounds) -> Result<(), Error> {
    let size = factorial(shape.n());
    if shape.n() > bounds.max_strands || size > bounds.brute_force {
        return Err(Error::EnumerationTooLarge(format!(
            "(r + s)! = {size} exceeds the brute-force bound {}",
            bounds.brute_force
        )));
    }
    Ok(())
}

/// The centre as the common kernel of `X ↦ Xg − gX` over all generators `s_i` and `e`.
pub fn centre_bruteforce(
    shape: WalledShape,
    delta: &Delta,
    bounds: &Bounds,
) -> Result<Subspace, Error> {
    check_brute_force_bound(shape, bounds)?;
    let basis = enumerate_diagrams(shape, bounds)?;
    let vectors = common_commutant(&basis, &generators(shape), delta)?;
    Subspace::span(basis, delta.tag(), &vectors)
}

/// The centralizer of `S_r × S_s`, by brute force against the Coxeter generators only.
pub fn centralizer_bruteforce(
    shape: WalledShape,
    delta: &Delta,
    bounds: &Bounds,
) -> Result<Subspace, Error> {
    check_brute_force_bound(shape, bounds)?;
    let basis = enumerate_diagrams(shape, bounds)?;
    let gens: Vec<WalledDiagram> = generators(shape)
        .into_iter()
        .filter(WalledDiagram::is_permutation)
        .collect();
    let vectors = common_commutant(&basis, &gens, delta)?;
    Subspace::span(basis, delta.tag(), &vectors)
}

/// The `|B| × |C|` system whose column `μ` holds the coefficients `b_x` of
/// `C_μ·e − e·C_μ`.
pub fn commutator_system(census: &CycleTypeCensus, delta: &Delta) -> Result<ExactMatrix, Error> {
    let shape = census.shape();
    let e = WalledDiagram::gen_e(shape).map_err(|_| Error::NoGeneratorE)?;
    let columns: Vec<Vec<Scalar>> = (0..census.types().len())
        .into_par_iter()
        .map(|t| commutator_coords(&census.class_sum_by_index(t, delta), &e, census.diagrams()))
        .collect();
    ExactMatrix::from_columns(delta.tag(), census.diagrams().len(), &columns)
}

/// The centre as combinations `Σ a_μ C_μ` of class sums commuting with `e`.
pub fn centre_reduced(
    shape: WalledShape,
    delta: &Delta,
    bounds: &Bounds,
) -> Result<Subspace, Error> {
    if shape.r == 0 || shape.s == 0 {
        return Err(Error::NoGeneratorE);
    }
    let census = CycleTypeCensus::new(shape, bounds)?;
    centre_reduced_from(&census, delta)
}

pub(crate) fn centre_reduced_from(
    census: &CycleTypeCensus,
    delta: &Delta,
) -> Result<Subspace, Error> {
    let tag = delta.tag();
    let system = commutator_system(census, delta)?;
    let (_, kernel) = rank_kernel(&system);
    let class_vectors: Vec<Vec<Scalar>> = (0..census.types().len())
        .map(|t| {
            census
                .class_sum_by_index(t, delta)
                .coordinates(census.diagrams())
        })
        .collect();
    let vectors: Vec<Vec<Scalar>> = kernel
        .iter()
        .map(|a| combine(tag, a, &class_vectors, census.diagrams().len()))
        .collect();
    Subspace::span(census.diagrams().to_vec(), tag, &vectors)
}

/// Dispatches to one of the two centre algorithms.
pub fn centre(
    shape: WalledShape,
    delta: &Delta,
    method: CentreMethod,
    bounds: &Bounds,
) -> Result<Subspace, Error> {
    match method {
        CentreMethod::BruteForce => centre_bruteforce(shape, delta, bounds),
        CentreMethod::Reduced => centre_reduced(shape, delta, bounds),
    }
}

/// Generic rank of the commutator system against its ranks at sample values of δ.
#[derive(Debug, Clone)]
pub struct SpecializationCheck {
    pub generic_rank: usize,
    pub specialized: Vec<(Rational, usize)>,
}

impl SpecializationCheck {
    /// Specializing can only lower the rank.
    pub fn consistent(&self) -> bool {
        self.specialized
            .iter()
            .all(|(_, k)| *k <= self.generic_rank)
    }
}

/// Compares the rank of the commutator system over ℚ(z) with its rank after
/// substituting each sample value for `z`.
pub fn specialization_check(
    shape: WalledShape,
    samples: &[Rational],
    bounds: &Bounds,
) -> Result<SpecializationCheck, Error> {
    let census = CycleTypeCensus::new(shape, bounds)?;
    let system = commutator_system(&census, &Delta::Generic)?;
    let generic_rank = rank(&system);
    let specialized = samples
        .iter()
        .map(|v| Ok((v.clone(), rank(&system.specialize(v)?))))
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(SpecializationCheck {
        generic_rank,
        specialized,
    })
}

/// Semisimplicity criterion for `B_{r,s}(δ)`.
pub fn is_semisimple(shape: WalledShape, delta: &Delta) -> bool {
    let (r, s) = (shape.r, shape.s);
    if r == 0 || s == 0 {
        return true;
    }
    let Delta::Value(v) = delta else {
        return true;
    };
    if !v.is_integer() {
        return true;
    }
    let d = v.to_i64().expect("small integer");
    if d.unsigned_abs() as usize + 2 > r + s {
        return true;
    }
    d == 0 && matches!((r, s), (1, 2) | (1, 3) | (2, 1) | (3, 1))
}
