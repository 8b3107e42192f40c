//! Finite groups, inverse semigroups and their bialgebras.

pub mod bialgebra;
pub mod catalog;
pub mod groups;
pub mod monoid;
pub mod partial;
pub mod structure;

pub use bialgebra::{
    almost_antipode_check, dual_semigroup_bialgebra, recover_semigroup, semigroup_bialgebra,
};
pub use groups::{build_group, GroupSpec};
pub use monoid::{is_inverse, FiniteMonoid, InverseSemigroup};
pub use partial::{matrix_unit_semigroup, symmetric_inverse_semigroup};
