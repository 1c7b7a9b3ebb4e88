//! The depth-one ring k[x,y,z]/(x^2, xy) with I = J = m: every quantity
//! that the Cohen-Macaulay formulas would relate, side by side.

use bigrees::bigraded::Bigraded;
use bigrees::context::RingContext;
use bigrees::reductions::{find_complete_reduction, multiplicity};

fn main() -> bigrees::error::Result<()> {
    let r = RingContext::from_strings(32003, &["x", "y", "z"], &["x^2", "x*y"], false, 2)?;
    let h = r.hilbert_series()?;
    println!(
        "Hilbert series: {:?} / (1-t)^{}, (e, e1, e2) = ({}, {}, {})",
        h.numerator, h.dimension, h.e, h.e1, h.e2
    );
    let m = r.maximal_ideal();
    println!("e(m) = {:?}", multiplicity(&m)?);
    let bg = Bigraded::new(&m, &m)?;
    let poly = bg.fit(6)?;
    println!("P: {poly:?}");
    let cr = find_complete_reduction(&m, &m, 0, 20, 10)?;
    println!(
        "reduction z = ({}, {})",
        r.display(&cr.z1),
        r.display(&cr.z2)
    );
    let rep = bg.euler_check(2, &poly, &cr, 16)?;
    for c in &rep.cells {
        println!(
            "({},{}): P - B = {:2}, h2 limit = {}, h2 formula = {:2}, residual = {:2}",
            c.r,
            c.s,
            c.p - c.b as i64,
            c.h2_limit,
            c.h2_formula,
            c.euler_residual
        );
    }
    Ok(())
}
