//! Reduced Gröbner bases, normal forms and elimination.

use bigrees::groebner::{buchberger, eliminate};
use bigrees::monomial::MonomialOrder;
use bigrees::poly::PolyRing;

fn main() -> bigrees::error::Result<()> {
    let ring = PolyRing::with_vars(32003, &["x", "y", "z"])?;
    let cyclic: Vec<_> = ["x + y + z", "x*y + y*z + z*x", "x*y*z - 1"]
        .iter()
        .map(|s| ring.parse(s))
        .collect::<Result<_, _>>()?;
    let gb = buchberger(&ring, &cyclic);
    println!("cyclic-3, degrevlex:");
    for g in gb.generators() {
        println!("  {}", ring.display(g));
    }
    let f = ring.parse("x^3 + y^3 + z^3")?;
    println!(
        "NF(x^3 + y^3 + z^3) = {}",
        ring.display(&gb.normal_form(&ring, &f))
    );
    println!(
        "x^3 - 1 in ideal: {}",
        gb.is_member(&ring, &ring.parse("x^3 - 1")?)
    );

    // twisted cubic: eliminate t from (x - t, y - t^2, z - t^3)
    let tagged = PolyRing::with_vars(32003, &["t", "x", "y", "z"])?
        .with_order(MonomialOrder::Elimination(1))?;
    let gens: Vec<_> = ["x - t", "y - t^2", "z - t^3"]
        .iter()
        .map(|s| tagged.parse(s))
        .collect::<Result<_, _>>()?;
    println!("twisted cubic:");
    for g in eliminate(&tagged, &gens, 1) {
        println!("  {}", tagged.display(&g));
    }
    Ok(())
}
