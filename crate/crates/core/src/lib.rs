//! Workbench for cyclotomic Hecke-Clifford and cyclotomic Sergeev algebras.
//!
//! The crate is organised in layers:
//!
//! * [`field`] — computable scalars: exact rational functions over the
//!   Gaussian rationals and tolerance-based complex approximations, plus
//!   exact linear algebra and two Cauchy-type determinant identities.
//! * [`shapes`] — multipartitions, standard tableaux, diagonal bookkeeping
//!   and the triple indices that label primitive idempotents.
//! * [`spectra`] — residues, eigenvalue functions, separateness checks,
//!   c-coefficients and closed Schur-element formulas.
//! * [`engine`] — PBW normal forms and multiplication in the cyclotomic
//!   quotients, Mackey projections and the Frobenius-type forms.
//! * [`seminormal`] — primitive idempotents, seminormal bases, simple
//!   modules, characters and the verification routines built on them.
//! * [`verify`] — named verification suites producing structured reports.

pub mod engine;
pub mod field;
pub mod seminormal;
pub mod shapes;
pub mod spectra;
pub mod verify;

pub use field::{ComplexApprox, GaussianRational, RatFunc, Scalar, Tolerance};
pub use shapes::{Box_, Family, Multipartition, StdTableau, TriIndex, Z2Vector};
pub use spectra::{Params, Variant};
pub use engine::{AlgElem, PBWMono, Presentation};
pub use verify::{CaseStatus, SuiteReport};
