//! Stacking walled Brauer diagrams and counting the closed loops.

use walled_brauer::diagrams::{AlgebraElement, WalledDiagram};
use walled_brauer::scalars::Delta;

fn main() -> Result<(), walled_brauer::Error> {
    let x: WalledDiagram = "r=4,s=2;t1-b2,t2-b1,t3-t6,t4-t5,b3-b5,b4-b6".parse()?;
    let y: WalledDiagram = "r=4,s=2;t1-b1,t2-b2,t3-t5,t4-t6,b3-b5,b4-b6".parse()?;

    let (xy, loops) = x.multiply(&y)?;
    println!("x*y = delta^{loops} * {xy}");
    let (yx, loops) = y.multiply(&x)?;
    println!("y*x = delta^{loops} * {yx}");

    // the same products as algebra elements over Q(z) and at δ = 3
    for delta in [Delta::Generic, Delta::int(3)] {
        let a = AlgebraElement::from_diagram(x, &delta);
        let b = AlgebraElement::from_diagram(y, &delta);
        println!("delta = {delta}: x*y - y*x = {}", a.commutator(&b)?);
    }

    println!("flip(x) = {}", x.flip());
    Ok(())
}
