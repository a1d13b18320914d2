use std::fmt;

use num_rational::BigRational;
use thiserror::Error;

use super::complex::ComplexApprox;
use super::gaussian::{rational_to_f64, GaussianRational};
use super::ratfunc::RatFunc;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("mixed scalar backends in one operation")]
    BackendMismatch,
    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,
    #[error("operation requires the numeric backend")]
    NumericOnly,
    #[error("operation requires the exact backend")]
    ExactOnly,
}

/// A computable-field element: either an exact rational function over Q(i)
/// in the parameters, or a complex double-precision approximation.
/// Arithmetic never mixes the two backends.
#[derive(Clone, PartialEq, Debug)]
pub enum Scalar {
    Exact(RatFunc),
    Approx(ComplexApprox),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Scalar {
    pub fn exact_int(nvars: usize, v: i64) -> Self {
        Scalar::Exact(RatFunc::constant(nvars, GaussianRational::from_i64(v)))
    }

    pub fn exact_ratio(nvars: usize, num: i64, den: i64) -> Self {
        Scalar::Exact(RatFunc::constant(nvars, GaussianRational::from_ratio(num, den)))
    }

    pub fn exact_const(nvars: usize, c: GaussianRational) -> Self {
        Scalar::Exact(RatFunc::constant(nvars, c))
    }

    pub fn exact_var(nvars: usize, idx: usize) -> Self {
        Scalar::Exact(RatFunc::var(nvars, idx))
    }

    pub fn approx(re: f64, im: f64) -> Self {
        Scalar::Approx(ComplexApprox::new(re, im))
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn same_backend(&self, other: &Scalar) -> bool {
        self.is_exact() == other.is_exact()
    }

    /// One on the same backend and variable context as `self`.
    pub fn one_like(&self) -> Scalar {
        match self {
            Scalar::Exact(f) => Scalar::Exact(RatFunc::one(f.nvars())),
            Scalar::Approx(_) => Scalar::Approx(ComplexApprox::one()),
        }
    }

    pub fn zero_like(&self) -> Scalar {
        match self {
            Scalar::Exact(f) => Scalar::Exact(RatFunc::zero(f.nvars())),
            Scalar::Approx(_) => Scalar::Approx(ComplexApprox::zero()),
        }
    }

    pub fn int_like(&self, v: i64) -> Scalar {
        match self {
            Scalar::Exact(f) => Scalar::exact_int(f.nvars(), v),
            Scalar::Approx(_) => Scalar::approx(v as f64, 0.0),
        }
    }

    pub fn i_like(&self) -> Scalar {
        match self {
            Scalar::Exact(f) => Scalar::exact_const(f.nvars(), GaussianRational::i()),
            Scalar::Approx(_) => Scalar::Approx(ComplexApprox::i()),
        }
    }

    /// Zero test: exact on the exact backend, magnitude below the arithmetic
    /// tolerance on the numeric backend.
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(f) => f.is_zero(),
            Scalar::Approx(z) => z.is_zero_within(super::complex::Tolerance::default().arith),
        }
    }

    pub fn is_zero_within(&self, tol: f64) -> bool {
        match self {
            Scalar::Exact(f) => f.is_zero(),
            Scalar::Approx(z) => z.is_zero_within(tol),
        }
    }

    /// |self - other| as f64 on the numeric backend; 0.0/1.0 indicator of
    /// equality on the exact backend.
    pub fn distance(&self, other: &Scalar) -> f64 {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => {
                if a == b {
                    0.0
                } else {
                    1.0
                }
            }
            (Scalar::Approx(a), Scalar::Approx(b)) => a.sub(b).abs(),
            _ => f64::INFINITY,
        }
    }

    pub fn arith(op: ArithOp, a: &Scalar, b: &Scalar) -> Result<Scalar, FieldError> {
        match (a, b) {
            (Scalar::Exact(x), Scalar::Exact(y)) => {
                if x.nvars() != y.nvars() {
                    return Err(FieldError::BackendMismatch);
                }
                Ok(Scalar::Exact(match op {
                    ArithOp::Add => x.add(y),
                    ArithOp::Sub => x.sub(y),
                    ArithOp::Mul => x.mul(y),
                    ArithOp::Div => {
                        if y.is_zero() {
                            return Err(FieldError::DivisionByZero);
                        }
                        x.div(y)
                    }
                }))
            }
            (Scalar::Approx(x), Scalar::Approx(y)) => Ok(Scalar::Approx(match op {
                ArithOp::Add => x.add(y),
                ArithOp::Sub => x.sub(y),
                ArithOp::Mul => x.mul(y),
                ArithOp::Div => {
                    if y.is_zero_within(super::complex::Tolerance::default().arith) {
                        return Err(FieldError::DivisionByZero);
                    }
                    x.div(y)
                }
            })),
            _ => Err(FieldError::BackendMismatch),
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        Scalar::arith(ArithOp::Add, self, rhs).expect("scalar add")
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        Scalar::arith(ArithOp::Sub, self, rhs).expect("scalar sub")
    }

    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        Scalar::arith(ArithOp::Mul, self, rhs).expect("scalar mul")
    }

    pub fn div(&self, rhs: &Scalar) -> Scalar {
        Scalar::arith(ArithOp::Div, self, rhs).expect("scalar div")
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, FieldError> {
        Scalar::arith(ArithOp::Div, self, rhs)
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Exact(f) => Scalar::Exact(f.neg()),
            Scalar::Approx(z) => Scalar::Approx(z.neg()),
        }
    }

    pub fn inv(&self) -> Scalar {
        self.one_like().div(self)
    }

    pub fn pow(&self, e: i64) -> Scalar {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut acc = self.one_like();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    pub fn scale_int(&self, v: i64) -> Scalar {
        self.mul(&self.int_like(v))
    }

    pub fn as_exact(&self) -> Result<&RatFunc, FieldError> {
        match self {
            Scalar::Exact(f) => Ok(f),
            _ => Err(FieldError::ExactOnly),
        }
    }

    pub fn as_approx(&self) -> Result<ComplexApprox, FieldError> {
        match self {
            Scalar::Approx(z) => Ok(*z),
            _ => Err(FieldError::NumericOnly),
        }
    }

    /// Collapses a constant exact scalar to floating point. Errors on
    /// non-constant rational functions.
    pub fn to_approx_value(&self) -> Result<ComplexApprox, FieldError> {
        match self {
            Scalar::Approx(z) => Ok(*z),
            Scalar::Exact(f) => {
                if !f.is_constant() {
                    return Err(FieldError::ExactOnly);
                }
                let num = f
                    .numer()
                    .constant_value()
                    .cloned()
                    .unwrap_or_else(GaussianRational::zero);
                let den = f.denom().constant_value().cloned().unwrap_or_else(GaussianRational::one);
                let v = &num / &den;
                let (re, im) = v.to_f64_pair();
                Ok(ComplexApprox::new(re, im))
            }
        }
    }

    /// Evaluates an exact scalar at a rational point of the parameter space.
    pub fn eval_exact(&self, point: &[GaussianRational]) -> Result<GaussianRational, FieldError> {
        match self {
            Scalar::Exact(f) => f.eval(point),
            Scalar::Approx(_) => Err(FieldError::ExactOnly),
        }
    }
}

pub(crate) fn rational_to_float(r: &BigRational) -> f64 {
    rational_to_f64(r)
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(x) => write!(f, "{}", x),
            Scalar::Approx(z) => write!(f, "{:.17e}{:+.17e}i", z.re(), z.im()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn backend_mismatch_is_reported() {
        let a = Scalar::exact_int(1, 1);
        let b = Scalar::approx(1.0, 0.0);
        assert_eq!(Scalar::arith(ArithOp::Add, &a, &b), Err(FieldError::BackendMismatch));
    }

    #[test]
    fn division_by_zero_is_reported() {
        let a = Scalar::exact_int(1, 1);
        let z = Scalar::exact_int(1, 0);
        assert_eq!(a.checked_div(&z), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn epsilon_at_q_two() {
        // q - 1/q at q = 2 is 3/2.
        let q = Scalar::exact_var(1, 0);
        let eps = q.sub(&q.inv());
        let v = eps.eval_exact(&[GaussianRational::from_i64(2)]).unwrap();
        assert_eq!(v, GaussianRational::from_ratio(3, 2));
    }
}
