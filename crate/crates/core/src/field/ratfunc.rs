use std::fmt;

use super::gaussian::GaussianRational;
use super::poly::MultiPoly;

/// Rational function num/den over Q(i) in the parameter variables.
///
/// Canonical form: gcd(num, den) = 1 and den monic in graded-lex, so equality
/// of functions is equality of representations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut rf = RatFunc { num, den };
        rf.reduce();
        rf
    }

    pub fn from_poly(num: MultiPoly) -> Self {
        let nv = num.nvars;
        RatFunc { num, den: MultiPoly::one(nv) }
    }

    pub fn constant(nvars: usize, c: GaussianRational) -> Self {
        Self::from_poly(MultiPoly::constant(nvars, c))
    }

    pub fn zero(nvars: usize) -> Self {
        Self::from_poly(MultiPoly::zero(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_poly(MultiPoly::one(nvars))
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        Self::from_poly(MultiPoly::var(nvars, idx))
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars
    }

    pub fn numer(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denom(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = MultiPoly::one(self.den.nvars);
            return;
        }
        let g = self.num.gcd(&self.den);
        if !g.is_constant() {
            self.num = self.num.div_exact(&g);
            self.den = self.den.div_exact(&g);
        }
        let (den, lc) = self.den.monic();
        self.den = den;
        self.num = self.num.scale(&lc.inv());
    }

    pub fn add(&self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    pub fn sub(&self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(
            self.num.mul(&rhs.den).sub(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    pub fn mul(&self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn div(&self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RatFunc::new(self.num.mul(&rhs.den), self.den.mul(&rhs.num))
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn inv(&self) -> RatFunc {
        assert!(!self.is_zero(), "inverse of zero rational function");
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i64) -> RatFunc {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut acc = RatFunc::one(self.nvars());
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Exact evaluation; fails when the denominator vanishes at the point.
    pub fn eval(&self, point: &[GaussianRational]) -> Result<GaussianRational, super::scalar::FieldError> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(super::scalar::FieldError::PoleAtPoint);
        }
        Ok(&self.num.eval(point) / &d)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qv() -> RatFunc {
        RatFunc::var(2, 0)
    }

    #[test]
    fn cancellation_is_canonical() {
        // (Q1 - q)/(Q1 - q) reduces to 1.
        let d = RatFunc::var(2, 1).sub(&qv());
        assert!(d.div(&d).is_one());
    }

    #[test]
    fn common_denominator_identity() {
        // q + 1/q = (q^2+1)/q
        let s = qv().add(&qv().inv());
        let expect = RatFunc::new(
            MultiPoly::var(2, 0).pow(2).add(&MultiPoly::one(2)),
            MultiPoly::var(2, 0),
        );
        assert_eq!(s, expect);
    }

    #[test]
    fn eval_pole_detected() {
        let f = RatFunc::one(2).div(&RatFunc::var(2, 0).sub(&RatFunc::var(2, 1)));
        let p = vec![GaussianRational::from_i64(1), GaussianRational::from_i64(1)];
        assert!(f.eval(&p).is_err());
    }
}
