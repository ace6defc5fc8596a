//! Exact integer linear algebra and polynomial arithmetic.

mod charpoly;
mod factor;
mod hermite;
mod matrix;
mod poly;
mod snf;

pub use charpoly::char_poly;
pub use factor::{factor_over_q, Factorization};
pub use hermite::HermiteBasis;
pub use matrix::IntMatrix;
pub use poly::IntPolynomial;
pub use snf::{kernel_basis, smith_normal_form, SmithNormalForm};
