use num_complex::Complex64;

/// Absolute tolerances separating arithmetic zero-tests from assertion
/// comparisons. Arithmetic decisions (division guards, dedup of eigenvalue
/// sets) use `arith`; verification suites compare against `assert`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    pub arith: f64,
    pub assert: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { arith: 1e-12, assert: 1e-9 }
    }
}

impl Tolerance {
    pub fn with_assert(assert: f64) -> Self {
        Tolerance { arith: 1e-12, assert }
    }
}

/// Complex double-precision value. Zero-ness is always relative to a
/// tolerance context supplied at the comparison site.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexApprox(pub Complex64);

impl ComplexApprox {
    pub fn new(re: f64, im: f64) -> Self {
        ComplexApprox(Complex64::new(re, im))
    }

    pub fn from_f64(re: f64) -> Self {
        Self::new(re, 0.0)
    }

    pub fn zero() -> Self {
        Self::new(0.0, 0.0)
    }

    pub fn one() -> Self {
        Self::new(1.0, 0.0)
    }

    pub fn i() -> Self {
        Self::new(0.0, 1.0)
    }

    pub fn re(&self) -> f64 {
        self.0.re
    }

    pub fn im(&self) -> f64 {
        self.0.im
    }

    pub fn abs(&self) -> f64 {
        self.0.norm()
    }

    pub fn is_zero_within(&self, tol: f64) -> bool {
        self.abs() <= tol
    }

    pub fn approx_eq(&self, other: &ComplexApprox, tol: f64) -> bool {
        (self.0 - other.0).norm() <= tol
    }

    pub fn add(&self, rhs: &Self) -> Self {
        ComplexApprox(self.0 + rhs.0)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        ComplexApprox(self.0 - rhs.0)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        ComplexApprox(self.0 * rhs.0)
    }

    pub fn div(&self, rhs: &Self) -> Self {
        ComplexApprox(self.0 / rhs.0)
    }

    pub fn neg(&self) -> Self {
        ComplexApprox(-self.0)
    }

    pub fn inv(&self) -> Self {
        ComplexApprox(self.0.inv())
    }
}

/// Fixed square-root branch used everywhere in the workbench: the principal
/// branch, with nonnegative real part, and nonnegative imaginary part when
/// the real part vanishes.
pub fn principal_sqrt(z: ComplexApprox) -> ComplexApprox {
    let mut w = z.0.sqrt();
    if w.re < 0.0 || (w.re == 0.0 && w.im < 0.0) {
        w = -w;
    }
    ComplexApprox(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_branch() {
        assert!(principal_sqrt(ComplexApprox::from_f64(4.0)).approx_eq(&ComplexApprox::from_f64(2.0), 1e-14));
        assert!(principal_sqrt(ComplexApprox::from_f64(-1.0)).approx_eq(&ComplexApprox::i(), 1e-14));
        // (1+i)^2 = 2i
        assert!(principal_sqrt(ComplexApprox::new(0.0, 2.0)).approx_eq(&ComplexApprox::new(1.0, 1.0), 1e-14));
    }

    #[test]
    fn sqrt_squares_back() {
        let samples = [(0.3, -0.7), (-2.5, 0.1), (0.0, -3.0), (1.0, 0.0)];
        for (re, im) in samples {
            let z = ComplexApprox::new(re, im);
            let w = principal_sqrt(z);
            assert!(w.mul(&w).approx_eq(&z, 1e-12));
        }
    }
}
