//! Parsing, arithmetic and monomial orders over F_p.

use bigrees::monomial::{Monomial, MonomialOrder};
use bigrees::poly::PolyRing;

fn main() -> bigrees::error::Result<()> {
    let ring = PolyRing::with_vars(32003, &["x", "y", "z"])?;
    let s = ring.parse("x + y")?;
    let f = ring.sub(&ring.pow(&s, 3), &ring.mul(&ring.parse("3*x*y")?, &s));
    let g = ring.parse("x^2 - y^2")?;
    println!("f           = {}", ring.display(&f));
    println!("f * g       = {}", ring.display(&ring.mul(&f, &g)));
    println!("f - g       = {}", ring.display(&ring.sub(&f, &g)));
    println!("(x+y)^31999 has {} terms", ring.pow(&s, 31999).len());
    println!("-1 prints as {}", ring.display(&ring.constant(32002)));

    match ring.parse("x + 2x") {
        Err(e) => println!("implicit multiplication is rejected: {e}"),
        Ok(_) => unreachable!(),
    }

    let a = Monomial::from_exponents(&[1, 0, 2])?;
    let b = Monomial::from_exponents(&[0, 2, 1])?;
    for order in [
        MonomialOrder::DegRevLex,
        MonomialOrder::Lex,
        MonomialOrder::Elimination(1),
    ] {
        println!("{order:?}: x*z^2 vs y^2*z -> {:?}", order.compare(&a, &b));
    }
    Ok(())
}
