//! Up- and down-operators on Young's lattice.
//!
//! Words over `u_i` and `d_i` act on partitions by adding or removing a box
//! in column i. Two words act identically exactly when their fingerprints
//! (weight and α vectors) agree, and any two such words can be rewritten
//! into each other with five families of quadratic relations. This crate
//! computes the action, the fingerprints and canonical words, and produces
//! and checks rewrite certificates.

pub mod error;
pub mod normal_form;
pub mod partition;
pub mod rewrite;
pub mod semantics;
pub mod subalgebra;
pub mod word;

pub use error::{Error, Result, TraceError};
pub use normal_form::{canonical_word, normalization_params, NormalFormParams};
pub use partition::{enumerate_profiles, ColumnProfile, Partition};
pub use rewrite::{
    apply_step, certify_equivalence, normalize_with_trace, verify_trace, Direction, Rule, Step,
    Trace,
};
pub use semantics::{apply_word, apply_word_closed, fingerprint, semantically_equal, Fingerprint};
pub use word::{parse_word, Kind, Letter, Word};
