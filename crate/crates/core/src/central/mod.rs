//! Jucys–Murphy elements and the central elements built from supersymmetric
//! polynomials in them.

mod bipartition;
mod multipoly;

use std::collections::HashMap;

use rayon::prelude::*;

pub use bipartition::{bipartitions, partition_count, partitions, Bipartition};
pub use multipoly::{is_supersymmetric, supersym_power_sum, MultiPoly};

use crate::bounds::Bounds;
use crate::diagrams::{enumerate_diagrams, AlgebraElement, WalledDiagram, WalledShape};
use crate::error::Error;
use crate::scalars::{Delta, Rational};
use crate::solver::Subspace;

/// The Jucys–Murphy element `L_k`, `1 ≤ k ≤ r + s`.
pub fn jm_element(shape: WalledShape, k: usize, delta: &Delta) -> Result<AlgebraElement, Error> {
    let (r, n) = (shape.r, shape.n());
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange(format!("L_{k} with r + s = {n}")));
    }
    let one = delta.one();
    let minus_one = -&one;
    let mut terms: Vec<(WalledDiagram, _)> = Vec::new();
    if k <= r {
        for j in 1..k {
            terms.push((WalledDiagram::transposition(shape, j, k)?, one.clone()));
        }
    } else {
        for j in 1..=r {
            terms.push((WalledDiagram::contraction(shape, j, k)?, minus_one.clone()));
        }
        for j in r + 1..k {
            terms.push((WalledDiagram::transposition(shape, j, k)?, one.clone()));
        }
        terms.push((WalledDiagram::identity(shape), delta.scalar()));
    }
    AlgebraElement::from_terms(shape, delta, terms)
}

/// All `L_1, …, L_{r+s}`.
pub fn jm_elements(shape: WalledShape, delta: &Delta) -> Vec<AlgebraElement> {
    (1..=shape.n())
        .map(|k| jm_element(shape, k, delta).expect("index in range"))
        .collect()
}

/// Errors with the first pair `(i, j)` whose Jucys–Murphy elements fail to commute.
pub fn check_jm_commutation(shape: WalledShape, delta: &Delta) -> Result<(), Error> {
    let ls = jm_elements(shape, delta);
    for i in 0..ls.len() {
        for j in i + 1..ls.len() {
            if !ls[i].commutator(&ls[j])?.is_zero() {
                return Err(Error::JucysMurphyNotCommuting(i + 1, j + 1));
            }
        }
    }
    Ok(())
}

/// `p(L_1, …, L_{r+s})`, each monomial multiplied out in ascending index order.
pub fn eval_at_jm(
    p: &MultiPoly,
    shape: WalledShape,
    delta: &Delta,
) -> Result<AlgebraElement, Error> {
    if p.num_x() != shape.r || p.num_y() != shape.s {
        return Err(Error::VariableCountMismatch {
            expected: format!("{} x and {} y", shape.r, shape.s),
            got: format!("{} x and {} y", p.num_x(), p.num_y()),
        });
    }
    let ls = jm_elements(shape, delta);
    let max_exp: Vec<u32> = (0..shape.n())
        .map(|i| p.terms().map(|(e, _)| e[i]).max().unwrap_or(0))
        .collect();
    let powers: Vec<Vec<AlgebraElement>> = ls
        .iter()
        .zip(&max_exp)
        .map(|(l, &top)| {
            let mut pw = vec![AlgebraElement::identity(shape, delta)];
            for _ in 0..top {
                let next = pw.last().expect("nonempty").mul(l).expect("same ring");
                pw.push(next);
            }
            pw
        })
        .collect();
    let terms: Vec<(&Vec<u32>, &Rational)> = p.terms().collect();
    let evaluated: Vec<AlgebraElement> = terms
        .par_iter()
        .map(|(e, c)| {
            let mut acc = AlgebraElement::identity(shape, delta);
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    acc = acc.mul(&powers[i][k as usize]).expect("same ring");
                }
            }
            acc.scale_rational(c)
        })
        .collect();
    let mut total = AlgebraElement::zero(shape, delta);
    for x in &evaluated {
        total = total.add(x)?;
    }
    Ok(total)
}

/// Result of [`supersym_span`].
#[derive(Debug, Clone)]
pub struct SupersymSpan {
    /// Evaluations of every power-sum monomial up to `degree`.
    pub elements: Vec<AlgebraElement>,
    /// The span, in the diagram basis.
    pub subspace: Subspace,
    /// Highest weighted degree used.
    pub degree: usize,
    /// `(D, dim)` after each degree from `r + s` on.
    pub history: Vec<(usize, usize)>,
    /// Set when the degree cap `2(r + s)` was reached before stabilizing.
    pub capped: bool,
}

/// Partitions of `d` with parts at most `max_part`, parts weakly decreasing.
fn bounded_partitions(d: usize, max_part: usize) -> Vec<Vec<usize>> {
    partitions(d)
        .into_iter()
        .filter(|p| p.first().is_none_or(|&a| a <= max_part))
        .collect()
}

/// Images of the monomials `p_{k1} ⋯ p_{kt}` (weighted degree `Σ k ≤ D`) at the
/// Jucys–Murphy elements, with `D` raised from `r + s` until the span has the
/// same dimension at two consecutive degrees, capped at `2(r + s)`.
///
/// A monomial's image is formed as the product of the images of its power
/// sums; this agrees with [`eval_at_jm`] because the Jucys–Murphy elements
/// commute, which is checked first.
pub fn supersym_span(
    shape: WalledShape,
    delta: &Delta,
    bounds: &Bounds,
) -> Result<SupersymSpan, Error> {
    let n = shape.n();
    let basis = enumerate_diagrams(shape, bounds)?;
    check_jm_commutation(shape, delta)?;
    let power_sums: Vec<AlgebraElement> = (1..=n as u32)
        .into_par_iter()
        .map(|k| {
            let pk = supersym_power_sum(k, shape.r, shape.s).expect("k >= 1");
            eval_at_jm(&pk, shape, delta).expect("variables match shape")
        })
        .collect();

    let mut images: HashMap<Vec<usize>, AlgebraElement> = HashMap::new();
    images.insert(Vec::new(), AlgebraElement::identity(shape, delta));
    let mut elements = vec![AlgebraElement::identity(shape, delta)];
    let mut subspace = Subspace::span_elements(basis.clone(), delta, &elements)?;
    let mut history = Vec::new();
    let cap = 2 * n;
    let mut capped = false;
    let mut degree = 0;
    for d in 1..=cap {
        let monomials = bounded_partitions(d, n);
        let new: Vec<(Vec<usize>, AlgebraElement)> = monomials
            .into_par_iter()
            .map(|mono| {
                let (&last, rest) = mono.split_last().expect("d >= 1");
                let image = images[rest].mul(&power_sums[last - 1]).expect("same ring");
                (mono, image)
            })
            .collect();
        let fresh: Vec<AlgebraElement> = new.iter().map(|(_, e)| e.clone()).collect();
        images.extend(new);
        let mut vectors = subspace.basis().to_vec();
        vectors.extend(fresh.iter().map(|e| e.coordinates(&basis)));
        subspace = Subspace::span(basis.clone(), delta.tag(), &vectors)?;
        elements.extend(fresh);
        degree = d;
        if d >= n {
            history.push((d, subspace.dim()));
            let stable = history.len() >= 2 && history[history.len() - 2].1 == subspace.dim();
            if stable {
                break;
            }
            if d == cap {
                capped = true;
            }
        }
    }
    Ok(SupersymSpan {
        elements,
        subspace,
        degree,
        history,
        capped,
    })
}
