//! Computable-field layer: exact rational functions over the Gaussian
//! rationals in the parameters, and complex double-precision approximations
//! with explicit tolerances.

mod cauchy;
mod complex;
mod gaussian;
pub mod linalg;
mod poly;
mod ratfunc;
mod scalar;

pub use cauchy::{cauchy_closed_form_full, cauchy_closed_form_plain, cauchy_matrix_full, cauchy_matrix_plain};
pub use complex::{principal_sqrt, ComplexApprox, Tolerance};
pub use gaussian::GaussianRational;
pub use poly::MultiPoly;
pub use ratfunc::RatFunc;
pub use scalar::{FieldError, Scalar};

pub type BigRational = num_rational::BigRational;
