//! Exact scalars: rationals and cyclotomic numbers.

pub mod cyclotomic;
pub mod field;
pub mod modp;
pub mod poly;
pub mod rational;

pub use cyclotomic::{root_of_unity, Cyclotomic};
pub use field::Field;
pub use poly::{cyclotomic_polynomial, Poly};
pub use rational::{format_rational, parse_rational, rat, Rational};

/// Exact value of a character or structure constant.
pub type ExactScalar = Cyclotomic;
