//! Exact computation of equivariant fixed point invariants of cellular self-maps.

pub mod complex;
pub mod error;
pub mod exact_algebra;

pub use error::{Error, Result};
pub mod uz;
pub mod groups;
pub mod invariants;
pub mod json;
pub mod realize;
