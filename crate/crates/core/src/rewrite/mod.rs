//! Rewriting with the five base relation families, and certificates.

mod builder;
pub mod macros;
mod normalize;
mod rule;
mod trace;
mod verify;

pub use normalize::{
    certify_equivalence, empty_normal_form_trace, normalize_with_params, normalize_with_trace,
};
pub use rule::{apply_step, Direction, Family, Rule, Step};
pub use trace::Trace;
pub use verify::verify_trace;
