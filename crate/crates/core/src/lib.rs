pub mod bigraded;
pub mod cli;
pub mod context;
pub mod error;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod reductions;
pub mod staircase;
