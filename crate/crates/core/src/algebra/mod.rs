//! Tensor-level 2-algebras and verifiers for their axioms.

pub mod axioms;
pub mod dual;
pub mod positivity;
pub mod semisimple;
pub mod split;
pub mod tensor;
pub mod two_algebra;
pub mod verdict;

pub use axioms::{check_homogeneity, check_involutive, is_bialgebra, validate_2_algebra};
pub use dual::dual;
pub use positivity::{check_positive_2_algebra, check_positivity, positivity_tier1, positivity_tier2};
pub use semisimple::{is_semisimple, wedderburn_dims, Side};
pub use tensor::{SparseTensor, StructureTensor};
pub use two_algebra::{AntilinearMap, TwoAlgebra};
pub use verdict::{Status, Verdict, Witness};
