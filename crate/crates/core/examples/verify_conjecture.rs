//! Supersymmetric span against the centre, in a proven and an open case.

use walled_brauer::diagrams::WalledShape;
use walled_brauer::scalars::{Delta, Rational};
use walled_brauer::solver::verify_conjecture;
use walled_brauer::Bounds;

fn main() -> Result<(), walled_brauer::Error> {
    let shape = WalledShape::new(2, 2)?;
    for delta in [Delta::value(Rational::new(1, 2)), Delta::int(0)] {
        let report = verify_conjecture(shape, &delta, &Bounds::default())?;
        for line in report.summary() {
            println!("{line}");
        }
        println!();
    }
    Ok(())
}
