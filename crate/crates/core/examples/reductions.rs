//! Complete reductions, joint reductions and multiplicities.

use bigrees::context::RingContext;
use bigrees::ideal::Ideal;
use bigrees::reductions::{
    find_complete_reduction, is_joint_reduction, is_reduction, multiplicity,
};

fn main() -> bigrees::error::Result<()> {
    let k = RingContext::polynomial_ring(32003, &["x", "y"], true)?;
    let m = Ideal::from_strings(&k, &["x", "y"])?;
    let squares = Ideal::from_strings(&k, &["x^2", "y^2"])?;
    println!(
        "(x^2, y^2) reduces m^2 with n = {:?}",
        is_reduction(&squares, &m.power(2), 10)?
    );

    let i = m.clone();
    let j = Ideal::from_strings(&k, &["x", "y^2"])?;
    for seed in 1..=3 {
        let cr = find_complete_reduction(&i, &j, seed, 20, 10)?;
        let d = |f| k.display(f);
        println!(
            "seed {seed}: x = {}, y = {}, z = {}, w = {}  (n = {})",
            d(&cr.x1),
            d(&cr.x2),
            d(&cr.y1),
            d(&cr.y2),
            cr.verified_n
        );
        let e_xw = multiplicity(&Ideal::new(&k, vec![cr.x1.clone(), cr.y2.clone()]))?;
        let e_yz = multiplicity(&Ideal::new(&k, vec![cr.x2.clone(), cr.y1.clone()]))?;
        println!(
            "  joint reductions {:?} {:?}, e(x,w) = {}, e(y,z) = {}",
            is_joint_reduction(&cr.x1, &cr.y2, &i, &j, 10)?,
            is_joint_reduction(&cr.x2, &cr.y1, &i, &j, 10)?,
            e_xw.value,
            e_yz.value
        );
    }
    for a in [&m, &j, &squares, &i.product(&j)?] {
        let e = multiplicity(a)?;
        println!("e({a}) = {} via {:?}", e.value, e.route);
    }
    Ok(())
}
