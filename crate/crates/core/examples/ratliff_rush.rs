//! Ratliff-Rush closures of I^aJ^b by both colon routes.

use bigrees::bigraded::Bigraded;
use bigrees::context::RingContext;
use bigrees::ideal::Ideal;
use bigrees::reductions::find_complete_reduction;

fn main() -> bigrees::error::Result<()> {
    let k = RingContext::polynomial_ring(32003, &["x", "y"], true)?;
    let i = Ideal::from_strings(&k, &["x^4", "x^3*y", "x*y^3", "y^4"])?;
    let cr = find_complete_reduction(&i, &i, 0, 20, 10)?;
    println!(
        "reduction z = ({}, {})",
        k.display(&cr.z1),
        k.display(&cr.z2)
    );
    let bg = Bigraded::new(&i, &i)?;
    for (a, b) in [(1, 0), (0, 1), (1, 1), (2, 0), (3, 0)] {
        let c = bg.rr_closure(a, b, &cr, 16)?;
        let o = bg.rr_closure_by_products(a, b, 16)?;
        println!(
            "({a},{b}): λ(R/I^aJ^b) = {}, λ(R/closure) = {}, closed = {}, k_stab = {}, routes agree = {}",
            bg.power(a, b).colength().unwrap(),
            c.colength,
            c.is_closed,
            c.k_stab,
            c.ideal.equals(&o.ideal)?
        );
    }
    println!("closure of I = {}", bg.rr_closure(1, 0, &cr, 16)?.ideal);
    Ok(())
}
