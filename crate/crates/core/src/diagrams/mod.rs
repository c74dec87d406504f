//! Walled Brauer diagrams and the algebra they span.

mod diagram;
mod element;

pub use diagram::{conjugate, EdgeKind, Vertex, WalledDiagram, WalledShape, MAX_STRANDS};
pub use element::AlgebraElement;

use crate::bounds::Bounds;
use crate::error::Error;

/// All `(r + s)!` diagrams of a shape in lexicographic order of the partner array.
pub fn enumerate_diagrams(
    shape: WalledShape,
    bounds: &Bounds,
) -> Result<Vec<WalledDiagram>, Error> {
    let n = shape.n();
    if n > bounds.max_strands {
        return Err(Error::EnumerationTooLarge(format!(
            "r + s = {n} exceeds the enumeration bound {}",
            bounds.max_strands
        )));
    }
    let mut partner = vec![usize::MAX; 2 * n];
    let mut out = Vec::new();
    extend_matchings(shape, &mut partner, &mut out);
    out.sort();
    Ok(out)
}

fn allowed(shape: WalledShape, a: usize, b: usize) -> bool {
    let n = shape.n();
    let (ca, cb) = (a % n + 1, b % n + 1);
    let same_side = shape.is_left(ca) == shape.is_left(cb);
    let same_row = (a < n) == (b < n);
    if same_row {
        !same_side
    } else {
        same_side
    }
}

fn extend_matchings(shape: WalledShape, partner: &mut [usize], out: &mut Vec<WalledDiagram>) {
    let Some(v) = partner.iter().position(|&p| p == usize::MAX) else {
        out.push(WalledDiagram::from_partner(shape, partner).expect("valid by construction"));
        return;
    };
    for w in v + 1..partner.len() {
        if partner[w] != usize::MAX || !allowed(shape, v, w) {
            continue;
        }
        partner[v] = w;
        partner[w] = v;
        extend_matchings(shape, partner, out);
        partner[v] = usize::MAX;
        partner[w] = usize::MAX;
    }
}

/// The Coxeter generators `s_i` of `S_r × S_s` followed by `e` when it exists.
pub fn generators(shape: WalledShape) -> Vec<WalledDiagram> {
    let mut gens: Vec<_> = (1..shape.n())
        .filter(|&i| i != shape.r)
        .map(|i| WalledDiagram::gen_s(shape, i).expect("index avoids the wall"))
        .collect();
    if let Ok(e) = WalledDiagram::gen_e(shape) {
        gens.push(e);
    }
    gens
}

/// Every permutation diagram of `S_r × S_s`.
pub fn wall_permutations(shape: WalledShape) -> Vec<WalledDiagram> {
    use itertools::Itertools;
    let (r, n) = (shape.r, shape.n());
    let left: Vec<Vec<usize>> = (1..=r).permutations(r).collect();
    let right: Vec<Vec<usize>> = (r + 1..=n).permutations(shape.s).collect();
    let mut out = Vec::with_capacity(left.len() * right.len());
    for l in &left {
        for rt in &right {
            let image: Vec<usize> = l.iter().chain(rt).copied().collect();
            out.push(WalledDiagram::permutation(shape, &image).expect("wall-respecting"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::factorial;

    #[test]
    fn census_matches_factorial() {
        let bounds = Bounds::default();
        for n in 1..=6 {
            for r in 0..=n {
                let shape = WalledShape::new(r, n - r).unwrap();
                let all = enumerate_diagrams(shape, &bounds).unwrap();
                assert_eq!(all.len(), factorial(n), "shape {shape}");
                assert!(all.windows(2).all(|w| w[0] < w[1]), "sorted and distinct");
            }
        }
    }

    #[test]
    fn small_counts() {
        let b = Bounds::default();
        assert_eq!(
            enumerate_diagrams(WalledShape::new(2, 1).unwrap(), &b)
                .unwrap()
                .len(),
            6
        );
        assert_eq!(
            enumerate_diagrams(WalledShape::new(2, 2).unwrap(), &b)
                .unwrap()
                .len(),
            24
        );
        assert_eq!(
            enumerate_diagrams(WalledShape::new(1, 0).unwrap(), &b)
                .unwrap()
                .len(),
            1
        );
    }

    #[test]
    fn bound_is_enforced() {
        let b = Bounds {
            max_strands: 4,
            ..Bounds::default()
        };
        assert!(matches!(
            enumerate_diagrams(WalledShape::new(3, 2).unwrap(), &b),
            Err(Error::EnumerationTooLarge(_))
        ));
    }

    #[test]
    fn generator_lists() {
        assert_eq!(generators(WalledShape::new(2, 2).unwrap()).len(), 3);
        assert_eq!(generators(WalledShape::new(3, 0).unwrap()).len(), 2);
        assert_eq!(wall_permutations(WalledShape::new(3, 2).unwrap()).len(), 12);
    }
}
