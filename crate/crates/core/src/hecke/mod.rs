//! Iwahori–Hecke algebras of symmetric groups and their Borel double-coset
//! realization inside finite general linear groups.

pub mod algebra;
pub mod gl;
pub mod iwahori;
pub mod permutation;

pub use algebra::{build_hecke, hecke_two_algebra, HeckeAlgebra};
pub use permutation::Permutation;
pub use iwahori::{iwahori_check, IwahoriReport};
