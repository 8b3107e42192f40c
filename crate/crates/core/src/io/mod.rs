//! File formats: the JSON 2-algebra encoding, semigroup tables and the
//! report envelope.

pub mod report;
pub mod two_alg;

pub use report::{Report, SCHEMA_VERSION};
pub use two_alg::{emit_2alg, parse_2alg, parse_semigroup, emit_semigroup};
