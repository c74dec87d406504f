use std::fmt;
use std::time::Instant;

use serde::Serialize;

use super::{
    centralizer_bruteforce, centre_bruteforce, centre_reduced_from, commutator_system,
    is_semisimple, rank, Relation, Subspace,
};
use crate::bounds::{factorial, Bounds};
use crate::central::{bipartitions, supersym_span};
use crate::cycletype::CycleTypeCensus;
use crate::diagrams::{wall_permutations, AlgebraElement, WalledShape};
use crate::error::Error;
use crate::scalars::Delta;

/// Outcome of a conjecture check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// The supersymmetric span equals the centre and every proven claim checks out.
    Holds,
    /// A claim that is a theorem at this shape and parameter failed.
    Fails,
    /// Non-semisimple with `s ≥ 2`: the statement is open here, so the
    /// computation is reported without being treated as a regression.
    Exploratory,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Exploratory => "exploratory",
        })
    }
}

/// Everything [`verify_conjecture`] computes.
#[derive(Debug, Clone)]
pub struct ConjectureReport {
    pub shape: WalledShape,
    pub delta: Delta,
    pub centre: Subspace,
    pub centre_dim: usize,
    pub brute_force_dim: Option<usize>,
    pub reduced_dim: Option<usize>,
    /// `Some(true)` when both methods ran and returned the same subspace.
    pub methods_agree: Option<bool>,
    pub supersym_span_dim: usize,
    pub span_degree: usize,
    pub span_capped: bool,
    pub lambda_count: usize,
    pub cycle_type_count: usize,
    pub semisimple: bool,
    /// `dim Z ≥ |Λ_{r,s}|`
    pub lower_bound_holds: bool,
    /// How the supersymmetric span `S` sits relative to the centre `Z`.
    pub relation: Relation,
    pub verdict: Verdict,
    pub timing_ms: u128,
}

impl ConjectureReport {
    /// Whether the case is covered by a theorem (semisimple, generic, or `s = 1`).
    pub fn proven_case(&self) -> bool {
        self.semisimple || self.shape.s <= 1
    }

    /// Human-readable summary lines.
    pub fn summary(&self) -> Vec<String> {
        let mut lines = vec![
            format!(
                "shape ({}, {}), delta = {}",
                self.shape.r, self.shape.s, self.delta
            ),
            format!("centre dimension: {}", self.centre_dim),
            format!("|Lambda_(r,s)|: {}", self.lambda_count),
            format!("cycle types |C_(r,s)|: {}", self.cycle_type_count),
            format!(
                "supersymmetric span dimension: {} (degree {})",
                self.supersym_span_dim, self.span_degree
            ),
            format!("span vs centre: {}", self.relation),
            format!("semisimple: {}", self.semisimple),
        ];
        if let (Some(b), Some(r)) = (self.brute_force_dim, self.reduced_dim) {
            lines.push(format!(
                "brute force {b}, reduced {r}, equal subspaces: {}",
                self.methods_agree.unwrap_or(false)
            ));
        }
        if self.span_capped {
            lines.push("warning: degree cap reached before the span stabilized".into());
        }
        if self.verdict == Verdict::Exploratory {
            lines.push(format!(
                "open case: dim Z = {} >= {} = |Lambda|: {}",
                self.centre_dim, self.lambda_count, self.lower_bound_holds
            ));
        }
        lines.push(format!("verdict: {}", self.verdict));
        lines
    }
}

/// Compares the span of supersymmetric polynomials in the Jucys–Murphy
/// elements with the centre, computed by every applicable method.
pub fn verify_conjecture(
    shape: WalledShape,
    delta: &Delta,
    bounds: &Bounds,
) -> Result<ConjectureReport, Error> {
    let start = Instant::now();
    let lambda_count = bipartitions(shape).len();
    let census = CycleTypeCensus::new(shape, bounds)?;
    let brute_ok = factorial(shape.n()) <= bounds.brute_force;
    let reduced_ok = shape.r >= 1 && shape.s >= 1;

    let reduced = if reduced_ok {
        Some(centre_reduced_from(&census, delta)?)
    } else {
        None
    };
    let brute = if brute_ok || !reduced_ok {
        Some(centre_bruteforce(shape, delta, bounds)?)
    } else {
        None
    };
    let methods_agree = match (&brute, &reduced) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    let centre = reduced
        .clone()
        .or_else(|| brute.clone())
        .expect("at least one method runs");
    let span = supersym_span(shape, delta, bounds)?;
    let relation = span.subspace.relate(&centre)?;
    let semisimple = is_semisimple(shape, delta);
    let centre_dim = centre.dim();
    let lower_bound_holds = centre_dim >= lambda_count;

    let exploratory = !semisimple && shape.s >= 2;
    let mut ok = relation == Relation::Equal && lower_bound_holds && methods_agree != Some(false);
    if semisimple || shape.s == 1 {
        ok &= centre_dim == lambda_count;
    }
    let verdict = if exploratory {
        Verdict::Exploratory
    } else if ok {
        Verdict::Holds
    } else {
        Verdict::Fails
    };
    Ok(ConjectureReport {
        shape,
        delta: delta.clone(),
        centre_dim,
        brute_force_dim: brute.as_ref().map(Subspace::dim),
        reduced_dim: reduced.as_ref().map(Subspace::dim),
        methods_agree,
        supersym_span_dim: span.subspace.dim(),
        span_degree: span.degree,
        span_capped: span.capped,
        lambda_count,
        cycle_type_count: census.types().len(),
        semisimple,
        lower_bound_holds,
        relation,
        verdict,
        centre,
        timing_ms: start.elapsed().as_millis(),
    })
}

/// Checks that class sums span the centralizer of `S_r × S_s`.
#[derive(Debug, Clone, Serialize)]
pub struct CentralizerReport {
    pub cycle_type_count: usize,
    /// Every class sum commutes with every permutation diagram.
    pub class_sums_commute: bool,
    /// Rank of the class sums.
    pub class_sum_rank: usize,
    /// Dimension of the centralizer computed against the Coxeter generators.
    pub centralizer_dim: usize,
    /// Class sums and the brute-force centralizer span the same subspace.
    pub same_subspace: bool,
}

impl CentralizerReport {
    pub fn holds(&self) -> bool {
        self.class_sums_commute
            && self.class_sum_rank == self.cycle_type_count
            && self.centralizer_dim == self.cycle_type_count
            && self.same_subspace
    }
}

pub fn verify_centralizer(
    shape: WalledShape,
    delta: &Delta,
    bounds: &Bounds,
) -> Result<CentralizerReport, Error> {
    let census = CycleTypeCensus::new(shape, bounds)?;
    let perms: Vec<AlgebraElement> = wall_permutations(shape)
        .into_iter()
        .map(|p| AlgebraElement::from_diagram(p, delta))
        .collect();
    let sums: Vec<AlgebraElement> = (0..census.types().len())
        .map(|t| census.class_sum_by_index(t, delta))
        .collect();
    let class_sums_commute = sums.iter().all(|c| {
        perms
            .iter()
            .all(|p| c.commutator(p).map(|x| x.is_zero()).unwrap_or(false))
    });
    let span = Subspace::span_elements(census.diagrams().to_vec(), delta, &sums)?;
    let brute = centralizer_bruteforce(shape, delta, bounds)?;
    Ok(CentralizerReport {
        cycle_type_count: census.types().len(),
        class_sums_commute,
        class_sum_rank: span.dim(),
        centralizer_dim: brute.dim(),
        same_subspace: span == brute,
    })
}

/// Rank of the full commutator system.
pub(crate) fn system_rank(census: &CycleTypeCensus, delta: &Delta) -> Result<usize, Error> {
    Ok(rank(&commutator_system(census, delta)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Rational;

    fn shape(r: usize, s: usize) -> WalledShape {
        WalledShape::new(r, s).unwrap()
    }

    #[test]
    fn proven_cases_hold() {
        let b = Bounds::default();
        let r = verify_conjecture(shape(2, 1), &Delta::int(1), &b).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.centre_dim, 3);
        assert_eq!(r.methods_agree, Some(true));
        let r = verify_conjecture(shape(2, 2), &Delta::value(Rational::new(1, 2)), &b).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.centre_dim, 6);
    }

    #[test]
    fn open_case_is_exploratory() {
        let r = verify_conjecture(shape(2, 2), &Delta::int(0), &Bounds::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Exploratory);
        assert!(r.centre_dim >= 6);
        assert!(r.summary().iter().any(|l| l.starts_with("open case")));
    }

    #[test]
    fn class_sums_span_centralizer() {
        let b = Bounds::default();
        for (r, s) in [(2, 1), (1, 2), (2, 2)] {
            let rep = verify_centralizer(shape(r, s), &Delta::Generic, &b).unwrap();
            assert!(rep.holds(), "{rep:?}");
        }
    }
}
