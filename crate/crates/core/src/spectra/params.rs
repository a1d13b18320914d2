use thiserror::Error;

use crate::field::{ComplexApprox, FieldError, GaussianRational, Scalar, Tolerance};
use crate::shapes::Family;

/// Non-degenerate (Hecke-Clifford) or degenerate (Sergeev) flavour.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Variant {
    NonDeg,
    Deg,
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Variant::NonDeg => write!(f, "nondeg"),
            Variant::Deg => write!(f, "deg"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectraError {
    #[error("parameters violate the separate condition: {0}")]
    SeparateViolated(String),
    #[error("value is not invertible where required")]
    NonInvertible,
    #[error("degenerate eigenvalue pair")]
    DegeneratePair,
    #[error("family not supported by this operation")]
    UnsupportedFamily,
    #[error("shape mismatch")]
    ShapeMismatch,
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Parameter pack for one algebra: variant, family, parameter scalars and
/// tolerances. All scalars live on a single backend; symbolic exact
/// parameters use variables (q, Q1, ..., Qm) in that order.
#[derive(Clone, Debug)]
pub struct Params {
    pub variant: Variant,
    pub family: Family,
    pub m: usize,
    pub q: Scalar,
    pub qs: Vec<Scalar>,
    pub tol: Tolerance,
}

impl Params {
    /// Number of exact-backend variables: q and Q1..Qm.
    pub fn nvars(&self) -> usize {
        self.m + 1
    }

    pub fn is_exact(&self) -> bool {
        self.q.is_exact()
    }

    /// Fully symbolic parameters over Q(i)(q, Q1..Qm).
    pub fn symbolic(variant: Variant, family: Family, m: usize) -> Self {
        let nv = m + 1;
        Params {
            variant,
            family,
            m,
            q: Scalar::exact_var(nv, 0),
            qs: (1..=m).map(|i| Scalar::exact_var(nv, i)).collect(),
            tol: Tolerance::default(),
        }
    }

    /// Exact parameters with explicit Gaussian-rational values.
    pub fn exact_values(
        variant: Variant,
        family: Family,
        q: GaussianRational,
        qs: Vec<GaussianRational>,
    ) -> Self {
        let m = qs.len();
        let nv = m + 1;
        Params {
            variant,
            family,
            m,
            q: Scalar::exact_const(nv, q),
            qs: qs.into_iter().map(|v| Scalar::exact_const(nv, v)).collect(),
            tol: Tolerance::default(),
        }
    }

    /// Numeric parameters.
    pub fn numeric(
        variant: Variant,
        family: Family,
        q: ComplexApprox,
        qs: Vec<ComplexApprox>,
        tol: Tolerance,
    ) -> Self {
        Params {
            variant,
            family,
            m: qs.len(),
            q: Scalar::Approx(q),
            qs: qs.into_iter().map(Scalar::Approx).collect(),
            tol,
        }
    }

    /// Default desk-scale parameters: q = 2 with odd-prime Q's in the
    /// non-degenerate case, unit-fraction Q's in the degenerate one.
    pub fn desk(variant: Variant, family: Family, m: usize, exact: bool) -> Self {
        let primes = [3i64, 7, 13, 19, 29, 37];
        match (variant, exact) {
            (Variant::NonDeg, true) => Params::exact_values(
                variant,
                family,
                GaussianRational::from_i64(2),
                (0..m).map(|i| GaussianRational::from_i64(primes[i])).collect(),
            ),
            (Variant::NonDeg, false) => Params::numeric(
                variant,
                family,
                ComplexApprox::from_f64(2.0),
                (0..m).map(|i| ComplexApprox::from_f64(primes[i] as f64)).collect(),
                Tolerance::default(),
            ),
            (Variant::Deg, true) => Params::exact_values(
                variant,
                family,
                GaussianRational::from_i64(1),
                (0..m).map(|i| GaussianRational::from_ratio(1, 2 * i as i64 + 3)).collect(),
            ),
            (Variant::Deg, false) => Params::numeric(
                variant,
                family,
                ComplexApprox::from_f64(1.0),
                (0..m).map(|i| ComplexApprox::from_f64(1.0 / (2 * i as f64 + 3.0))).collect(),
                Tolerance::default(),
            ),
        }
    }

    pub fn one(&self) -> Scalar {
        self.q.one_like()
    }

    pub fn zero(&self) -> Scalar {
        self.q.zero_like()
    }

    pub fn int(&self, v: i64) -> Scalar {
        self.q.int_like(v)
    }

    /// epsilon = q - q^{-1} (non-degenerate only).
    pub fn epsilon(&self) -> Scalar {
        debug_assert_eq!(self.variant, Variant::NonDeg);
        self.q.sub(&self.q.inv())
    }

    /// The q-value map: iota -> 2(q iota + (q iota)^{-1})/(q + q^{-1}) in the
    /// non-degenerate case, iota(iota + 1) in the degenerate one.
    pub fn q_val(&self, iota: &Scalar) -> Result<Scalar, SpectraError> {
        match self.variant {
            Variant::NonDeg => {
                if iota.is_zero() {
                    return Err(SpectraError::NonInvertible);
                }
                let qi = self.q.mul(iota);
                let den = self.q.add(&self.q.inv());
                let num = qi.add(&qi.inv()).scale_int(2);
                Ok(num.checked_div(&den)?)
            }
            Variant::Deg => Ok(iota.mul(&iota.add(&self.one()))),
        }
    }

    /// Residues of the neighbouring diagonals of a box of residue `iota`:
    /// `(q^2 iota, q^{-2} iota)` resp. `(iota + 1, iota - 1)`.
    pub fn neighbour_residues(&self, iota: &Scalar) -> (Scalar, Scalar) {
        match self.variant {
            Variant::NonDeg => (self.q.pow(2).mul(iota), self.q.pow(-2).mul(iota)),
            Variant::Deg => (iota.add(&self.one()), iota.sub(&self.one())),
        }
    }

    /// Restriction of the families valid for seminormal machinery.
    pub fn check_seminormal_family(&self) -> Result<(), SpectraError> {
        match self.family {
            Family::Zero | Family::S => Ok(()),
            Family::SS => Err(SpectraError::UnsupportedFamily),
        }
    }
}
