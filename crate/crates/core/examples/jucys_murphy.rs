//! Jucys–Murphy elements and a supersymmetric power sum evaluated at them.

use walled_brauer::central::{check_jm_commutation, eval_at_jm, jm_elements, supersym_power_sum};
use walled_brauer::diagrams::{generators, AlgebraElement, WalledShape};
use walled_brauer::scalars::Delta;

fn main() -> Result<(), walled_brauer::Error> {
    let shape = WalledShape::new(2, 1)?;
    let delta = Delta::Generic;
    for (k, l) in jm_elements(shape, &delta).iter().enumerate() {
        println!("L_{} = {l}", k + 1);
    }
    check_jm_commutation(shape, &delta)?;
    println!("the L_k commute pairwise");

    let p2 = supersym_power_sum(2, 2, 1)?;
    let image = eval_at_jm(&p2, shape, &delta)?;
    println!("\np_2 = {p2}\np_2(L) = {image}");
    let central = generators(shape).into_iter().all(|g| {
        let g = AlgebraElement::from_diagram(g, &delta);
        image.commutator(&g).map(|c| c.is_zero()).unwrap_or(false)
    });
    println!("p_2(L) commutes with every generator: {central}");
    Ok(())
}
