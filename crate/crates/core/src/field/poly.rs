use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use smallvec::SmallVec;

use super::gaussian::GaussianRational;

/// Exponent vector with graded-lexicographic ordering.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Expo(pub SmallVec<[u16; 4]>);

impl Expo {
    fn total(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }
}

impl PartialOrd for Expo {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Expo {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total().cmp(&other.total()).then_with(|| self.0.cmp(&other.0))
    }
}

/// Sparse multivariate polynomial over Q(i) in a fixed number of variables.
///
/// Terms are kept in a map ordered graded-lexicographically; zero
/// coefficients are never stored, so equality of representations is equality
/// of polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiPoly {
    pub nvars: usize,
    pub terms: BTreeMap<Expo, GaussianRational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: GaussianRational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Expo(smallvec::smallvec![0; nvars]), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, GaussianRational::one())
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        assert!(idx < nvars);
        let mut e = smallvec::smallvec![0u16; nvars];
        e[idx] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(Expo(e), GaussianRational::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|e| e.total() == 0)
    }

    pub fn constant_value(&self) -> Option<&GaussianRational> {
        if self.is_zero() {
            return None;
        }
        self.terms.iter().next().and_then(|(e, c)| if e.total() == 0 { Some(c) } else { None })
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.keys().map(|e| e.0[var]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.total()).max().unwrap_or(0)
    }

    fn insert_term(&mut self, e: Expo, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = &*o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(e.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c);
        }
        out
    }

    pub fn mul(&self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = ea.0.clone();
                for (k, x) in eb.0.iter().enumerate() {
                    e[k] += x;
                }
                out.insert_term(Expo(e), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &GaussianRational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let mut out = Self::zero(self.nvars);
        for (e, a) in &self.terms {
            out.terms.insert(e.clone(), a * c);
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut acc = Self::one(self.nvars);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn leading(&self) -> Option<(&Expo, &GaussianRational)> {
        self.terms.iter().next_back()
    }

    /// Makes the graded-lex leading coefficient 1 and returns the removed factor.
    pub fn monic(&self) -> (MultiPoly, GaussianRational) {
        match self.leading() {
            None => (self.clone(), GaussianRational::one()),
            Some((_, lc)) => {
                let lc = lc.clone();
                (self.scale(&lc.inv()), lc)
            }
        }
    }

    pub fn eval(&self, point: &[GaussianRational]) -> GaussianRational {
        assert_eq!(point.len(), self.nvars);
        let mut acc = GaussianRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (k, &exp) in e.0.iter().enumerate() {
                for _ in 0..exp {
                    t = &t * &point[k];
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// View as a univariate polynomial in `var` with `MultiPoly` coefficients
    /// (in the same variable count, with `var` not occurring).
    fn coeffs_in(&self, var: usize) -> Vec<MultiPoly> {
        let d = self.degree_in(var) as usize;
        let mut out = vec![Self::zero(self.nvars); d + 1];
        for (e, c) in &self.terms {
            let k = e.0[var] as usize;
            let mut e2 = e.0.clone();
            e2[var] = 0;
            out[k].insert_term(Expo(e2), c.clone());
        }
        out
    }

    fn from_coeffs_in(nvars: usize, var: usize, coeffs: &[MultiPoly]) -> MultiPoly {
        let mut out = Self::zero(nvars);
        for (k, c) in coeffs.iter().enumerate() {
            for (e, a) in &c.terms {
                let mut e2 = e.0.clone();
                e2[var] += k as u16;
                out.insert_term(Expo(e2), a.clone());
            }
        }
        out
    }

    /// Exact division; panics if `rhs` does not divide `self`.
    pub fn div_exact(&self, rhs: &MultiPoly) -> MultiPoly {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Self::zero(self.nvars);
        }
        if let Some(c) = rhs.constant_value() {
            return self.scale(&c.inv());
        }
        // Multivariate long division by a single divisor; exactness is
        // guaranteed by the callers (gcd cofactors).
        let mut rem = self.clone();
        let mut quo = Self::zero(self.nvars);
        let (le, lc) = {
            let (e, c) = rhs.leading().unwrap();
            (e.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (re, rc) = {
                let (e, c) = rem.leading().unwrap();
                (e.clone(), c.clone())
            };
            let mut q = re.0.clone();
            let mut ok = true;
            for (k, &d) in le.0.iter().enumerate() {
                if q[k] < d {
                    ok = false;
                    break;
                }
                q[k] -= d;
            }
            assert!(ok, "inexact polynomial division");
            let qc = &rc / &lc;
            let mut qt = Self::zero(self.nvars);
            qt.terms.insert(Expo(q), qc);
            rem = rem.sub(&qt.mul(rhs));
            quo = quo.add(&qt);
        }
        quo
    }

    /// Greatest common divisor, monic in graded-lex.
    pub fn gcd(&self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let g = gcd_rec(self, rhs);
        g.monic().0
    }
}

fn gcd_rec(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one(a.nvars);
    }
    // Pick the variable of lowest combined degree that occurs in both; if none
    // occurs in both, the gcd divides both contents, handled below anyway.
    let nv = a.nvars;
    let mut var = None;
    for v in 0..nv {
        let (da, db) = (a.degree_in(v), b.degree_in(v));
        if da > 0 && db > 0 {
            var = Some(v);
            break;
        }
    }
    let var = match var {
        Some(v) => v,
        None => {
            // No shared variable: gcd is the gcd of all coefficients, i.e. of
            // the contents viewed in any variable occurring in `a`.
            let v = (0..nv).find(|&v| a.degree_in(v) > 0).unwrap();
            let ca = content(a, v);
            return gcd_rec(&ca, b);
        }
    };

    let ca = content(a, var);
    let cb = content(b, var);
    let cg = gcd_rec(&ca, &cb);
    let pa = a.div_exact(&ca);
    let pb = b.div_exact(&cb);
    let pg = primitive_gcd(&pa, &pb, var);
    cg.mul(&pg)
}

/// Content of `p` viewed as univariate in `var`: gcd of its coefficients.
fn content(p: &MultiPoly, var: usize) -> MultiPoly {
    let coeffs = p.coeffs_in(var);
    let mut g = MultiPoly::zero(p.nvars);
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        g = gcd_rec(&g, c);
        if g.is_constant() && !g.is_zero() {
            break;
        }
    }
    g.monic().0
}

/// Primitive PRS on polynomials primitive w.r.t. `var`.
fn primitive_gcd(a: &MultiPoly, b: &MultiPoly, var: usize) -> MultiPoly {
    let mut f = a.clone();
    let mut g = b.clone();
    if f.degree_in(var) < g.degree_in(var) {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        if g.is_zero() {
            let c = content(&f, var);
            return f.div_exact(&c);
        }
        let r = pseudo_rem(&f, &g, var);
        f = g;
        g = if r.is_zero() {
            r
        } else {
            let c = content(&r, var);
            r.div_exact(&c)
        };
    }
}

/// Pseudo-remainder of `a` by `b` in `var`: lc(b)^k * a = q*b + r.
fn pseudo_rem(a: &MultiPoly, b: &MultiPoly, var: usize) -> MultiPoly {
    let db = b.degree_in(var) as i64;
    let bc = b.coeffs_in(var);
    let lb = bc[db as usize].clone();
    let mut rc = a.coeffs_in(var);
    loop {
        let da = rc.len() as i64 - 1;
        let da = rc.iter().rposition(|c| !c.is_zero()).map(|p| p as i64).unwrap_or(-1).min(da);
        if da < db {
            break;
        }
        let la = rc[da as usize].clone();
        // r := lb * r - la * x^(da-db) * b
        for c in rc.iter_mut() {
            *c = c.mul(&lb);
        }
        for (k, bk) in bc.iter().enumerate() {
            let idx = k + (da - db) as usize;
            rc[idx] = rc[idx].sub(&la.mul(bk));
        }
    }
    MultiPoly::from_coeffs_in(a.nvars, var, &rc)
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names: Vec<String> = (0..self.nvars)
            .map(|k| if k == 0 { "q".to_string() } else { format!("Q{}", k) })
            .collect();
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            for (k, &exp) in e.0.iter().enumerate() {
                if exp == 1 {
                    write!(f, "*{}", names[k])?;
                } else if exp > 1 {
                    write!(f, "*{}^{}", names[k], exp)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(nv: usize) -> MultiPoly {
        MultiPoly::var(nv, 0)
    }

    #[test]
    fn gcd_cancels_common_factor() {
        // (x+1)^2 (x-y) and (x+1)(x-y)^2 have gcd (x+1)(x-y).
        let nv = 2;
        let x = MultiPoly::var(nv, 0);
        let y = MultiPoly::var(nv, 1);
        let one = MultiPoly::one(nv);
        let a = x.add(&one).pow(2).mul(&x.sub(&y));
        let b = x.add(&one).mul(&x.sub(&y).pow(2));
        let g = a.gcd(&b);
        let expect = x.add(&one).mul(&x.sub(&y)).monic().0;
        assert_eq!(g, expect);
    }

    #[test]
    fn div_exact_inverts_mul() {
        let nv = 3;
        let a = q(nv).add(&MultiPoly::var(nv, 2)).pow(3);
        let b = q(nv).sub(&MultiPoly::one(nv));
        assert_eq!(a.mul(&b).div_exact(&b), a);
    }
}
