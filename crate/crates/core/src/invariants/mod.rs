//! u, λ, Reidemeister traces, Lefschetz numbers, ℓ and induction.

mod ell;
mod induce;
mod kclass;
mod report;
mod traces;

pub use ell::{klein_williams, EllComponent, EllInvariant, EllSummand};
pub use induce::{induce, induce_ell};
pub use kclass::{canonical_block, normalize_terms, split_blocks, universal_invariant, KClass, KEntry};
pub use report::{vanishing_report, ClassTraces, InvariantReport, VanishingReport};
pub use traces::{
    component_matrix, lambda_invariant, lambda_of_class, lefschetz_number, quotient_lefschetz_number,
    reidemeister_from_fixed_points, reidemeister_trace, LambdaVector,
};
