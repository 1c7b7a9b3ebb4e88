//! Ideal arithmetic in a quotient ring, colons and colengths.

use bigrees::context::RingContext;
use bigrees::ideal::{is_regular_sequence, Ideal};

fn main() -> bigrees::error::Result<()> {
    let r = RingContext::from_strings(32003, &["x", "y", "z"], &["x^2", "x*y"], false, 2)?;
    let m = r.maximal_ideal();
    println!("m^2 in S/(x^2, xy)  = {}", m.power(2));
    println!("colength of m^3     = {:?}", m.power(3).colength());
    let ann_x = Ideal::zero(&r).colon(&Ideal::from_strings(&r, &["x"])?)?;
    println!("0 : x               = {ann_x}");
    let (y, z) = (r.parse("y")?, r.parse("z")?);
    println!("z, y regular        = {}", is_regular_sequence(&r, &z, &y)?);

    let k = RingContext::polynomial_ring(32003, &["x", "y"], true)?;
    let a = Ideal::from_strings(&k, &["x + y", "x + y^2"])?;
    // two points: the origin and (1, -1)
    println!(
        "{a}: colength {:?}, local colength {}",
        a.colength(),
        a.local_colength()?
    );
    let i = Ideal::from_strings(&k, &["x^4", "x^3*y", "x*y^3", "y^4"])?;
    let i2 = i.power(2);
    println!("I^2 : I             = {}", i2.colon(&i)?);
    println!(
        "same by elimination = {}",
        i2.colon_by_elimination(&i)?.equals(&i2.colon(&i)?)?
    );
    Ok(())
}
