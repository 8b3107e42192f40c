//! Exact-arithmetic workbench for positive 2-algebras, involutive
//! bialgebras and their dilations into group and inverse-semigroup
//! bialgebras.

pub mod algebra;
pub mod cli;
pub mod dilation;
pub mod error;
pub mod hecke;
pub mod io;
pub mod semigroup;
pub mod linalg;
pub mod scalars;

pub use error::{Error, Result};
