//! h1 and h2 of the bigraded Rees algebra, the Euler identity and the
//! coefficient formulas, in a Cohen-Macaulay ring.

use bigrees::bigraded::{coefficients_via_cohomology, Bigraded};
use bigrees::context::RingContext;
use bigrees::ideal::Ideal;
use bigrees::reductions::find_complete_reduction;

fn main() -> bigrees::error::Result<()> {
    let k = RingContext::polynomial_ring(32003, &["x", "y"], true)?;
    let i = Ideal::from_strings(&k, &["x^4", "x^3*y", "x*y^3", "y^4"])?;
    let bg = Bigraded::new(&i, &i)?;
    let poly = bg.fit(6)?;
    let cr = find_complete_reduction(&i, &i, 0, 20, 10)?;
    let rep = bg.euler_check(2, &poly, &cr, 16)?;
    println!(" r s |    B    P | h1 h2(formula) h2(limit) | residual");
    for c in &rep.cells {
        println!(
            " {} {} | {:4} {:4} | {:2} {:13} {:9} | {}",
            c.r, c.s, c.b, c.p, c.h1, c.h2_formula, c.h2_limit, c.euler_residual
        );
    }
    println!("fit:            {poly:?}");
    println!("via cohomology: {:?}", coefficients_via_cohomology(&rep)?);
    Ok(())
}
