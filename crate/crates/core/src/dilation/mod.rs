//! Stable partitions, induced 2-algebras and dilation searches.

pub mod enumerate;
pub mod induced;
pub mod nonstrict;
pub mod partition;
pub mod quasi;
pub mod search;
pub mod stable;
pub mod two_dim;

pub use induced::{induced_two_algebra, is_strict_subobject};
pub use nonstrict::{coarse_grain_search, nonstrict_from_coarse_grain, verify_nonstrict_witness, CoarseGrainWitness, NonstrictWitness};
pub use partition::Partition;
pub use quasi::{algebra_from_quasicharacters, quasicharacter_matrix, QuasiCharacterMatrix};
pub use stable::{automorphism_orbit_partition, double_coset_partition, is_stable_partition, StablePartitionCert};
pub use two_dim::{a_lambda, classify_2dim, theorem3_predicate, TwoDimClass};
pub use enumerate::{enumerate_stable_partitions, EnumerationMode};
pub use search::{lambda_census, strict_dilation_search, Census, DilationWitness, StrictSearch};
