//! Centre dimension and semisimplicity of B_{2,2}(δ) across δ.

use walled_brauer::diagrams::WalledShape;
use walled_brauer::scalars::Delta;
use walled_brauer::solver::verify_conjecture;
use walled_brauer::Bounds;

fn main() -> Result<(), walled_brauer::Error> {
    let shape = WalledShape::new(2, 2)?;
    let deltas = ["generic", "-2", "-1", "0", "1", "2", "3", "1/2"];
    println!(
        "{:>8} {:>6} {:>6} {:>11} {:>12}",
        "delta", "dim Z", "|Λ|", "semisimple", "verdict"
    );
    for text in deltas {
        let delta: Delta = text.parse()?;
        let rep = verify_conjecture(shape, &delta, &Bounds::default())?;
        println!(
            "{:>8} {:>6} {:>6} {:>11} {:>12}",
            text,
            rep.centre_dim,
            rep.lambda_count,
            rep.semisimple,
            rep.verdict.to_string()
        );
    }
    Ok(())
}
