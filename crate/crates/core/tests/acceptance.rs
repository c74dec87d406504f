//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::time::{Duration, Instant};

use walled_brauer::central::bipartitions;
use walled_brauer::cycletype::cycle_type;
use walled_brauer::diagrams::{enumerate_diagrams, WalledDiagram, WalledShape};
use walled_brauer::scalars::{Delta, Rational};
use walled_brauer::solver::{
    centre_bruteforce, centre_reduced, is_semisimple, section5_suite, verify_conjecture, Relation,
    Subspace, Verdict,
};
use walled_brauer::Bounds;

const X: &str = "r=4,s=2;t1-b2,t2-b1,t3-t6,t4-t5,b3-b5,b4-b6";
const Y: &str = "r=4,s=2;t1-b1,t2-b2,t3-t5,t4-t6,b3-b5,b4-b6";
const YX: &str = "r=4,s=2;t1-b2,t2-b1,t3-t5,t4-t6,b3-b5,b4-b6";
const D33: &str = "r=3,s=3;t1-t6,t2-t5,t3-b1,t4-b5,b2-b6,b3-b4";

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    passed: bool,
    detail: String,
}

fn shape(r: usize, s: usize) -> WalledShape {
    WalledShape::new(r, s).unwrap()
}

fn delta_set() -> Vec<Delta> {
    ["generic", "0", "1", "-1", "2", "-2", "3", "1/2"]
        .iter()
        .map(|t| t.parse().unwrap())
        .collect()
}

/// Centres by both methods, shared by several criteria.
struct CentrePair {
    shape: WalledShape,
    delta: Delta,
    brute: Subspace,
    reduced: Subspace,
}

fn centre_pairs(shapes: &[(usize, usize)]) -> Vec<CentrePair> {
    let b = Bounds::default();
    let mut out = Vec::new();
    for &(r, s) in shapes {
        for delta in delta_set() {
            let sh = shape(r, s);
            out.push(CentrePair {
                shape: sh,
                brute: centre_bruteforce(sh, &delta, &b).unwrap(),
                reduced: centre_reduced(sh, &delta, &b).unwrap(),
                delta,
            });
        }
    }
    out
}

fn timed(limit: Duration, outcome: Outcome, start: Instant) -> Outcome {
    let elapsed = start.elapsed();
    Outcome {
        passed: outcome.passed && elapsed < limit,
        detail: format!("{} [{:.2?} / limit {:.0?}]", outcome.detail, elapsed, limit),
    }
}

fn census() -> Outcome {
    let start = Instant::now();
    let b = Bounds::default();
    let mut bad = Vec::new();
    let mut checked = 0;
    for n in 1..=6usize {
        for r in 0..=n {
            let count = enumerate_diagrams(shape(r, n - r), &b).unwrap().len();
            checked += 1;
            if count != (1..=n).product::<usize>() {
                bad.push(format!("({r},{}) -> {count}", n - r));
            }
        }
    }
    timed(
        Duration::from_secs(5),
        Outcome {
            passed: bad.is_empty(),
            detail: format!("{checked} shapes with r+s <= 6, mismatches {bad:?}"),
        },
        start,
    )
}

fn paper_examples() -> Outcome {
    let start = Instant::now();
    let d = |t: &str| -> WalledDiagram { t.parse().unwrap() };
    let (x, y) = (d(X), d(Y));
    let xy = x.multiply(&y).unwrap();
    let yx = y.multiply(&x).unwrap();
    let types = [
        cycle_type(&x).to_string(),
        cycle_type(&y).to_string(),
        cycle_type(&d(D33)).to_string(),
        cycle_type(&d(D33).flip()).to_string(),
    ];
    let expected_types = [
        "LL+NSNS"
            .parse::<walled_brauer::cycletype::CycleType>()
            .unwrap()
            .to_string(),
        "L+L+NS+NS"
            .parse::<walled_brauer::cycletype::CycleType>()
            .unwrap()
            .to_string(),
        "NSNRSL"
            .parse::<walled_brauer::cycletype::CycleType>()
            .unwrap()
            .to_string(),
        "NSLNRS"
            .parse::<walled_brauer::cycletype::CycleType>()
            .unwrap()
            .to_string(),
    ];
    let passed =
        xy == (x, 2) && yx == (d(YX), 1) && types == expected_types && types[2] != types[3];
    timed(
        Duration::from_secs(1),
        Outcome {
            passed,
            detail: format!(
                "xy = δ^{} x, yx = δ^{} {}, types {types:?}",
                xy.1, yx.1, yx.0
            ),
        },
        start,
    )
}

fn theorem_r1(pairs: &[CentrePair], elapsed: Duration) -> Outcome {
    let mut bad = Vec::new();
    let mut dims = Vec::new();
    for p in pairs.iter().filter(|p| p.shape.s == 1) {
        let r = p.shape.r;
        // p(r) + p(r - 1)
        let expected = match r {
            2 => 3,
            3 => 5,
            4 => 8,
            _ => unreachable!(),
        };
        if p.brute.dim() != expected || p.reduced.dim() != expected {
            bad.push(format!(
                "({r},1) δ={}: {} / {}",
                p.delta,
                p.brute.dim(),
                p.reduced.dim()
            ));
        }
        if p.delta.is_generic() {
            dims.push(format!("r={r}: {expected}"));
        }
    }
    Outcome {
        passed: bad.is_empty() && elapsed < Duration::from_secs(120),
        detail: format!(
            "p(r)+p(r-1) = [{}] by both methods over 8 values of δ, mismatches {bad:?} [{elapsed:.2?} / limit 120s]",
            dims.join(", ")
        ),
    }
}

fn conjecture_where_proven() -> Outcome {
    let start = Instant::now();
    let b = Bounds::default();
    let mut cases: Vec<(WalledShape, Delta)> = Vec::new();
    for r in 2..=4 {
        for d in delta_set() {
            cases.push((shape(r, 1), d));
        }
    }
    cases.push((shape(2, 2), Delta::int(5)));
    cases.push((shape(2, 2), Delta::value(Rational::new(1, 2))));
    let mut bad = Vec::new();
    for (sh, d) in &cases {
        let rep = verify_conjecture(*sh, d, &b).unwrap();
        let dim_ok = sh.s != 2 || rep.centre_dim == 6;
        if rep.relation != Relation::Equal || rep.verdict != Verdict::Holds || !dim_ok {
            bad.push(format!(
                "{sh} δ={d}: {} {} dim {}",
                rep.relation, rep.verdict, rep.centre_dim
            ));
        }
    }
    timed(
        Duration::from_secs(180),
        Outcome {
            passed: bad.is_empty(),
            detail: format!("{} cases with span = centre, failures {bad:?}", cases.len()),
        },
        start,
    )
}

fn oracle_equivalence(pairs: &[CentrePair]) -> Outcome {
    let wanted = [(2, 1), (3, 1), (2, 2)];
    let chosen: Vec<&CentrePair> = pairs
        .iter()
        .filter(|p| wanted.contains(&(p.shape.r, p.shape.s)))
        .collect();
    let bad: Vec<String> = chosen
        .iter()
        .filter(|p| p.brute != p.reduced)
        .map(|p| format!("{} δ={}", p.shape, p.delta))
        .collect();
    Outcome {
        passed: bad.is_empty() && chosen.len() == 24,
        detail: format!(
            "{} (shape, δ) pairs, unequal subspaces {bad:?}",
            chosen.len()
        ),
    }
}

fn lower_bound(pairs: &[CentrePair]) -> Outcome {
    let mut bad = Vec::new();
    for p in pairs {
        let lambda = bipartitions(p.shape).len();
        if p.reduced.dim() < lambda {
            bad.push(format!(
                "{} δ={}: {} < {lambda}",
                p.shape,
                p.delta,
                p.reduced.dim()
            ));
        }
        if p.delta.is_generic() && p.reduced.dim() != lambda {
            bad.push(format!(
                "{} generic: {} != {lambda}",
                p.shape,
                p.reduced.dim()
            ));
        }
    }
    let generic: Vec<String> = pairs
        .iter()
        .filter(|p| p.delta.is_generic())
        .map(|p| format!("{}={}", p.shape, p.reduced.dim()))
        .collect();
    Outcome {
        passed: bad.is_empty() && generic.len() == 4,
        detail: format!(
            "dim Z >= |Λ| at {} cases; generic dims {generic:?}; violations {bad:?}",
            pairs.len()
        ),
    }
}

fn suite() -> Outcome {
    let start = Instant::now();
    let b = Bounds::default();
    let mut bad = Vec::new();
    let mut runs = 0;
    for r in 2..=4 {
        for d in [Delta::Generic, Delta::int(0), Delta::int(1), Delta::int(-2)] {
            let rep = section5_suite(r, &d, &b).unwrap();
            runs += 1;
            let worked = rep
                .checks
                .iter()
                .any(|c| c.name.starts_with("worked") && c.passed);
            let rank_ok = rep.selected_rank == rep.cycle_type_count - rep.lambda_count;
            if !rep.passed() || !worked || !rank_ok {
                let failed: Vec<&str> = rep
                    .checks
                    .iter()
                    .filter(|c| !c.passed)
                    .map(|c| c.name.as_str())
                    .collect();
                bad.push(format!("r={r} δ={d}: {failed:?}"));
            }
        }
    }
    timed(
        Duration::from_secs(120),
        Outcome {
            passed: bad.is_empty(),
            detail: format!("{runs} runs (r = 2..4, δ in generic, 0, 1, -2), failures {bad:?}"),
        },
        start,
    )
}

/// Integer δ in −3..3 at which `B_{r,s}(δ)` is not semisimple, `r, s ≥ 1`.
fn non_semisimple_table(r: usize, s: usize) -> &'static [i64] {
    match (r, s) {
        (1, 1) => &[0],
        (1, 2) | (2, 1) => &[-1, 1],
        (1, 3) | (3, 1) => &[-2, -1, 1, 2],
        (2, 2) => &[-2, -1, 0, 1, 2],
        (2, 3) | (3, 2) | (3, 3) => &[-3, -2, -1, 0, 1, 2, 3],
        _ => &[],
    }
}

fn semisimplicity_grid() -> Outcome {
    let mut deltas: Vec<Delta> = (-3..=3).map(Delta::int).collect();
    deltas.push(Delta::value(Rational::new(1, 2)));
    deltas.push(Delta::Generic);
    let mut bad = Vec::new();
    let mut checked = 0;
    for r in 0..=3 {
        for s in 0..=3 {
            if r + s == 0 {
                continue;
            }
            for d in &deltas {
                let expected = match d {
                    Delta::Value(v) if v.is_integer() => {
                        !non_semisimple_table(r, s).contains(&v.to_i64().unwrap())
                    }
                    _ => true,
                };
                checked += 1;
                if is_semisimple(shape(r, s), d) != expected {
                    bad.push(format!("({r},{s}) δ={d}"));
                }
            }
        }
    }
    let exceptions = [(1, 2), (1, 3), (2, 1), (3, 1)]
        .iter()
        .all(|&(r, s)| is_semisimple(shape(r, s), &Delta::int(0)));
    Outcome {
        passed: bad.is_empty() && exceptions,
        detail: format!(
            "{checked} grid points, δ = 0 exceptions semisimple: {exceptions}, mismatches {bad:?}"
        ),
    }
}

fn exploratory() -> Outcome {
    let b = Bounds::default();
    let mut lines = Vec::new();
    let mut ok = true;
    for d in [0, 1, -1, 2, -2] {
        let rep = verify_conjecture(shape(2, 2), &Delta::int(d), &b).unwrap();
        let flagged = rep.verdict == Verdict::Exploratory
            && rep.summary().iter().any(|l| l.starts_with("open case"));
        ok &= flagged && rep.centre_dim >= 6;
        lines.push(format!(
            "δ={d}: dim {} ({}), {}",
            rep.centre_dim, rep.relation, rep.verdict
        ));
    }
    Outcome {
        passed: ok,
        detail: format!(
            "(2,2) open cases, dim >= 6 and flagged open: {}",
            lines.join("; ")
        ),
    }
}

fn main() {
    let start = Instant::now();
    let pairs = centre_pairs(&[(2, 1), (3, 1), (4, 1), (2, 2)]);
    let pair_time = start.elapsed();
    let criteria: Vec<Criterion> = vec![
        ("diagram census", Box::new(census)),
        (
            "multiplication and cycle-type examples",
            Box::new(paper_examples),
        ),
        (
            "centre dimension of B_{r,1}",
            Box::new(|| theorem_r1(&pairs, pair_time)),
        ),
        (
            "span equals centre where proven",
            Box::new(conjecture_where_proven),
        ),
        (
            "brute force and reduced centres agree",
            Box::new(|| oracle_equivalence(&pairs)),
        ),
        (
            "lower bound and generic dimension",
            Box::new(|| lower_bound(&pairs)),
        ),
        ("s = 1 invariant suite", Box::new(suite)),
        ("semisimplicity grid", Box::new(semisimplicity_grid)),
        ("exploratory B_{2,2} (non-gating)", Box::new(exploratory)),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = check();
        if !outcome.passed {
            failures += 1;
        }
        println!(
            "{} [{}] {name}: {}",
            if outcome.passed { "PASS" } else { "FAIL" },
            i + 1,
            outcome.detail
        );
    }
    println!(
        "{} of {} criteria passed in {:.2?}",
        criteria.len() - failures,
        criteria.len(),
        start.elapsed()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
