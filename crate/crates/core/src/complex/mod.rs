//! Equivariant complexes presented by chain data per isomorphism class of the
//! fundamental category.

mod document;
mod model;
mod validate;

pub use document::{load_complex, to_json, ChainDoc, ComplexDoc, EntryDoc, GroupDoc, IsoClassDoc};
pub use model::{ChainDegree, EquivariantComplex, FixedPointDatum, IsoClassData, IsoClassKey};
pub use validate::validate_fixed_point_data;
pub(crate) use validate::check_fixed_points;

use crate::error::{Error, Result};

pub const BUILTIN_NAMES: [&str; 3] = ["example1", "example2", "example3"];

/// Raw document text of a builtin corpus entry.
pub fn builtin_document(name: &str) -> Result<&'static str> {
    match name {
        "example1" => Ok(include_str!("corpus/example1.json")),
        "example2" => Ok(include_str!("corpus/example2.json")),
        "example3" => Ok(include_str!("corpus/example3.json")),
        _ => Err(Error::Parse(format!(
            "unknown builtin '{name}' (expected one of {})",
            BUILTIN_NAMES.join(", ")
        ))),
    }
}

pub fn builtin(name: &str) -> Result<EquivariantComplex> {
    load_complex(builtin_document(name)?)
}

#[cfg(test)]
mod tests;
