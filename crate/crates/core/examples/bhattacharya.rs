//! Bhattacharya table and its exact polynomial.

use bigrees::bigraded::{bhattacharya_table, fit_bhattacharya, fit_by_differences};
use bigrees::context::RingContext;
use bigrees::ideal::Ideal;

fn main() -> bigrees::error::Result<()> {
    let k = RingContext::polynomial_ring(32003, &["x", "y"], true)?;
    let i = Ideal::from_strings(&k, &["x", "y"])?;
    let j = Ideal::from_strings(&k, &["x", "y^2"])?;
    let t = bhattacharya_table(&i, &j, 6)?;
    println!("B(r,s) = λ(R/I^rJ^s) for I = {i}, J = {j}");
    for row in &t.values {
        println!("  {row:?}");
    }
    let p = fit_bhattacharya(&t)?;
    println!("fit: {p:?}");
    println!(
        "finite differences agree: {}",
        fit_by_differences(&t).map(|q| q.coefficients()) == Some(p.coefficients())
    );
    println!("P(10, 10) = {}", p.eval(10, 10));
    Ok(())
}
