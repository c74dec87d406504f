use serde::{Deserialize, Serialize};

/// Caps on the exhaustive computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    /// Largest `r + s` for which the full diagram basis may be enumerated.
    pub max_strands: usize,
    /// Largest basis size `(r + s)!` for the brute-force centre.
    pub brute_force: usize,
    /// Largest `r! * s!` for a brute-force conjugacy search.
    pub conjugacy: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_strands: 7,
            brute_force: 720,
            conjugacy: 5040,
        }
    }
}

pub(crate) fn factorial(n: usize) -> usize {
    (1..=n).product()
}
