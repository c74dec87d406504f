use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagrams::WalledShape;

/// A pair of partitions `(λ, μ)` with `|λ| = r - k` and `|μ| = s - k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bipartition {
    pub lambda: Vec<usize>,
    pub mu: Vec<usize>,
    pub k: usize,
}

impl Bipartition {
    pub fn new(mut lambda: Vec<usize>, mut mu: Vec<usize>, k: usize) -> Self {
        lambda.retain(|&p| p > 0);
        mu.retain(|&p| p > 0);
        lambda.sort_unstable_by(|a, b| b.cmp(a));
        mu.sort_unstable_by(|a, b| b.cmp(a));
        Bipartition { lambda, mu, k }
    }

    /// The shape `(|λ| + k, |μ| + k)` this bipartition indexes.
    pub fn shape(&self) -> (usize, usize) {
        (
            self.lambda.iter().sum::<usize>() + self.k,
            self.mu.iter().sum::<usize>() + self.k,
        )
    }
}

fn write_partition(f: &mut fmt::Formatter<'_>, p: &[usize]) -> fmt::Result {
    if p.is_empty() {
        return f.write_str("∅");
    }
    f.write_str("(")?;
    for (i, part) in p.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{part}")?;
    }
    f.write_str(")")
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_partition(f, &self.lambda)?;
        f.write_str(", ")?;
        write_partition(f, &self.mu)?;
        f.write_str(")")
    }
}

/// Partitions of `n` as weakly decreasing sequences, in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of partitions of `n`.
pub fn partition_count(n: usize) -> usize {
    // Euler's recurrence via the pentagonal number theorem
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut total = 0i64;
        for j in 1.. {
            let sign = if j % 2 == 1 { 1 } else { -1 };
            let g1 = j * (3 * j - 1) / 2;
            if g1 > m {
                break;
            }
            total += sign * p[m - g1];
            let g2 = j * (3 * j + 1) / 2;
            if g2 <= m {
                total += sign * p[m - g2];
            }
        }
        p[m] = total;
    }
    p[n] as usize
}

/// The index set Λ_{r,s}: for each `k` from 0 to `min(r, s)`, all pairs of
/// partitions of `r - k` and `s - k`.
pub fn bipartitions(shape: WalledShape) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for k in 0..=shape.r.min(shape.s) {
        let lefts = partitions(shape.r - k);
        let rights = partitions(shape.s - k);
        for l in &lefts {
            for m in &rights {
                out.push(Bipartition::new(l.clone(), m.clone(), k));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(r: usize, s: usize) -> WalledShape {
        WalledShape::new(r, s).unwrap()
    }

    #[test]
    fn partition_counts() {
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &p) in expected.iter().enumerate() {
            assert_eq!(partition_count(n), p);
            assert_eq!(partitions(n).len(), p);
        }
    }

    #[test]
    fn lambda_counts() {
        assert_eq!(bipartitions(shape(2, 1)).len(), 3);
        assert_eq!(bipartitions(shape(3, 1)).len(), 5);
        assert_eq!(bipartitions(shape(2, 2)).len(), 6);
        assert_eq!(bipartitions(shape(4, 0)).len(), 5);
    }

    #[test]
    fn two_one_listing() {
        let listed: Vec<String> = bipartitions(shape(2, 1))
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(listed, ["((2), (1))", "((1,1), (1))", "((1), ∅)"]);
    }

    #[test]
    fn three_one_listing() {
        let expected = [
            Bipartition::new(vec![3], vec![1], 0),
            Bipartition::new(vec![2, 1], vec![1], 0),
            Bipartition::new(vec![1, 1, 1], vec![1], 0),
            Bipartition::new(vec![2], vec![], 1),
            Bipartition::new(vec![1, 1], vec![], 1),
        ];
        assert_eq!(bipartitions(shape(3, 1)), expected);
    }

    #[test]
    fn s_equals_one_count() {
        for r in 1..=8 {
            assert_eq!(
                bipartitions(shape(r, 1)).len(),
                partition_count(r) + partition_count(r - 1)
            );
        }
    }
}
