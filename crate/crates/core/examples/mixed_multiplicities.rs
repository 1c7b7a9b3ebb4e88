//! e11 by joint reductions, by the Bhattacharya fit and by e(IJ).

use bigrees::context::RingContext;
use bigrees::ideal::Ideal;
use bigrees::reductions::mixed_multiplicity_e11;

fn main() -> bigrees::error::Result<()> {
    let k = RingContext::polynomial_ring(32003, &["x", "y"], true)?;
    let pairs = [
        (&["x", "y"][..], &["x", "y"][..]),
        (&["x", "y"][..], &["x", "y^2"][..]),
        (&["x^2", "y^3"][..], &["x^3", "y^2"][..]),
        (&["x^4", "x^3*y", "x*y^3", "y^4"][..], &["x", "y^3"][..]),
    ];
    for (ig, jg) in pairs {
        let i = Ideal::from_strings(&k, ig)?;
        let j = Ideal::from_strings(&k, jg)?;
        let e = mixed_multiplicity_e11(&i, &j, 7, 20, 10)?;
        println!("I = {i}, J = {j}: {e:?}");
    }
    Ok(())
}
