//! The centre of B_{3,1}(1) by both methods.

use walled_brauer::diagrams::WalledShape;
use walled_brauer::scalars::Delta;
use walled_brauer::solver::{centre, CentreMethod};
use walled_brauer::Bounds;

fn main() -> Result<(), walled_brauer::Error> {
    let shape = WalledShape::new(3, 1)?;
    let delta = Delta::int(1);
    let bounds = Bounds::default();
    let brute = centre(shape, &delta, CentreMethod::BruteForce, &bounds)?;
    let reduced = centre(shape, &delta, CentreMethod::Reduced, &bounds)?;
    println!(
        "dim Z(B_{shape}({delta})) = {} (brute force), {} (reduced)",
        brute.dim(),
        reduced.dim()
    );
    println!("same subspace: {}", brute == reduced);
    for (i, z) in reduced.basis_strings(&delta)?.iter().enumerate() {
        println!("z{} = {z}", i + 1);
    }
    Ok(())
}
