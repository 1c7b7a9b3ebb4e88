//! Hilbert series of a standard graded quotient.

use bigrees::context::RingContext;

fn main() -> bigrees::error::Result<()> {
    for (vars, rels) in [
        (&["x", "y"][..], &[][..]),
        (&["x", "y", "z"][..], &["x^2", "x*y"][..]),
        (&["x", "y", "z"][..], &["x*z - y^2"][..]),
        (
            &["x", "y", "z", "w"][..],
            &["x*z - y^2", "x*w - y*z", "y*w - z^2"][..],
        ),
    ] {
        let h = RingContext::from_strings(32003, vars, rels, false, 2)?.hilbert_series()?;
        println!(
            "S/({}): N(t) = {:?} over (1-t)^{}, e = {}, e1 = {}, e2 = {}",
            rels.join(", "),
            h.numerator,
            h.dimension,
            h.e,
            h.e1,
            h.e2
        );
        let samuel: Vec<i64> = (1..8).map(|n| h.samuel_function(n)).collect();
        println!("  λ(R/m^n), n = 1..7: {samuel:?}");
    }
    Ok(())
}
