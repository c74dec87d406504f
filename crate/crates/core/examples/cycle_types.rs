//! Cycle types and the census of conjugacy classes under S_r x S_s.

use walled_brauer::cycletype::{cycle_type, CycleTypeCensus};
use walled_brauer::diagrams::{WalledDiagram, WalledShape};
use walled_brauer::Bounds;

fn main() -> Result<(), walled_brauer::Error> {
    for text in [
        "r=4,s=2;t1-b2,t2-b1,t3-t6,t4-t5,b3-b5,b4-b6",
        "r=4,s=2;t1-b1,t2-b2,t3-t5,t4-t6,b3-b5,b4-b6",
    ] {
        let d: WalledDiagram = text.parse()?;
        println!("{d}  ->  {}", cycle_type(&d));
    }

    let shape = WalledShape::new(3, 1)?;
    let census = CycleTypeCensus::new(shape, &Bounds::default())?;
    println!(
        "\n{} diagrams in B_{shape}, {} classes",
        census.diagrams().len(),
        census.types().len()
    );
    for (t, ct) in census.types().iter().enumerate() {
        let bp = ct.bipartition().map(|b| b.to_string()).unwrap_or_default();
        println!("  {ct:<10} {:>3}  {bp}", census.class(t).len());
    }
    Ok(())
}
