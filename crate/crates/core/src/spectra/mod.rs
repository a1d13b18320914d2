//! Residues, q-values, eigenvalue functions, the separate condition,
//! c-coefficients with their closed product formulas, eta-factors, the
//! Gamma-polynomial and the closed Schur elements.

mod ccoeff;
mod eta;
mod gamma;
mod params;
mod qlambda;
mod residues;
mod schur;
mod separate;

pub use ccoeff::{
    c_between_sq, c_closed_col, c_closed_row, c_coeff, c_coeff_from_eigenvalues, c_coeff_rewrite,
    idempotency_pair,
};
pub use eta::{eta_factor, eta_factor_closed, eta_step};
pub use gamma::{gamma_condition, gamma_poly};
pub use params::{Params, SpectraError, Variant};
pub use qlambda::{q_lambda, q_lambda_at, q_lambda_independent};
pub use residues::{b_pm, u_pm, ResidueTable};
pub use schur::schur_closed;
pub use separate::is_separate;
