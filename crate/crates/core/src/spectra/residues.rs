use crate::field::{principal_sqrt, ComplexApprox, Scalar};
use crate::shapes::{Box_, CompLabel, StdTableau};

use super::params::{Params, SpectraError, Variant};

impl Params {
    /// Residue value of the component label: Q_0 = 1 (nondeg) / 0 (deg),
    /// Q_{0-} = -1, Q_{0+} = 1, Q_l otherwise.
    pub fn label_value(&self, label: CompLabel) -> Scalar {
        match label {
            CompLabel::Zero => match self.variant {
                Variant::NonDeg => self.int(1),
                Variant::Deg => self.int(0),
            },
            CompLabel::ZeroMinus => self.int(-1),
            CompLabel::ZeroPlus => self.int(1),
            CompLabel::Q(l) => self.qs[l - 1].clone(),
        }
    }

    /// Residue of a box: `Q_l q^{2(col-row)}` resp. `Q_l + col - row`.
    pub fn residue(&self, shape_label: CompLabel, b: &Box_) -> Scalar {
        let ql = self.label_value(shape_label);
        let shift = b.col as i64 - b.row as i64;
        match self.variant {
            Variant::NonDeg => ql.mul(&self.q.pow(2 * shift)),
            Variant::Deg => ql.add(&self.int(shift)),
        }
    }

    pub fn residue_of(&self, t: &StdTableau, b: &Box_) -> Scalar {
        self.residue(t.shape.component_label(b.comp), b)
    }
}

/// Residues and q-values of all entries of one tableau.
#[derive(Clone, Debug)]
pub struct ResidueTable {
    pub res: Vec<Scalar>,
    pub qres: Vec<Scalar>,
}

impl ResidueTable {
    pub fn new(params: &Params, t: &StdTableau) -> Result<Self, SpectraError> {
        let n = t.n();
        let mut res = Vec::with_capacity(n);
        let mut qres = Vec::with_capacity(n);
        for k in 1..=n {
            let b = t.box_of(k);
            let r = params.residue_of(t, &b);
            qres.push(params.q_val(&r)?);
            res.push(r);
        }
        Ok(ResidueTable { res, qres })
    }

    /// 1-based accessors.
    pub fn res(&self, k: usize) -> &Scalar {
        &self.res[k - 1]
    }

    pub fn qres(&self, k: usize) -> &Scalar {
        &self.qres[k - 1]
    }
}

/// Eigenvalue pair b_{+-}(iota) = q(iota)/2 +- sqrt(q(iota)^2/4 - 1); the
/// branch is the workbench-wide principal square root. Numeric backend only.
pub fn b_pm(params: &Params, iota: &Scalar) -> Result<(ComplexApprox, ComplexApprox), SpectraError> {
    debug_assert_eq!(params.variant, Variant::NonDeg);
    let qv = params.q_val(iota)?;
    let qv = qv.as_approx()?;
    let half = qv.div(&ComplexApprox::from_f64(2.0));
    let disc = half.mul(&half).sub(&ComplexApprox::one());
    let root = principal_sqrt(disc);
    Ok((half.add(&root), half.sub(&root)))
}

/// Degenerate eigenvalue pair u_{+-}(iota) = +- sqrt(iota(iota+1)).
pub fn u_pm(params: &Params, iota: &Scalar) -> Result<(ComplexApprox, ComplexApprox), SpectraError> {
    debug_assert_eq!(params.variant, Variant::Deg);
    let qv = params.q_val(iota)?.as_approx()?;
    let root = principal_sqrt(ComplexApprox(qv.0));
    Ok((root, root.neg()))
}

impl Params {
    /// `b_{t,k} := b_-(res_t(k))` resp. `u_{t,k} := u_+(res_t(k))`; the
    /// scalar whose powers are the X-eigenvalues on module vectors.
    pub fn eigen_base(&self, t: &StdTableau, k: usize) -> Result<ComplexApprox, SpectraError> {
        let b = t.box_of(k);
        let iota = self.residue_of(t, &b);
        match self.variant {
            Variant::NonDeg => Ok(b_pm(self, &iota)?.1),
            Variant::Deg => Ok(u_pm(self, &iota)?.0),
        }
    }

    /// `b_+(res_t(k))` resp. `u_+(res_t(k))`: the defining eigenvalue of the
    /// idempotent product at slot k.
    pub fn eigen_plus(&self, t: &StdTableau, k: usize) -> Result<ComplexApprox, SpectraError> {
        let b = t.box_of(k);
        let iota = self.residue_of(t, &b);
        match self.variant {
            Variant::NonDeg => Ok(b_pm(self, &iota)?.0),
            Variant::Deg => Ok(u_pm(self, &iota)?.0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::GaussianRational;
    use crate::shapes::{Family, Multipartition};

    #[test]
    fn q_val_examples() {
        // q(Q1) at q = 2, Q1 = 3 equals 74/15.
        let p = Params::desk(Variant::NonDeg, Family::Zero, 1, true);
        let v = p.q_val(&p.qs[0]).unwrap();
        let pt = vec![GaussianRational::from_i64(2), GaussianRational::from_i64(3)];
        assert_eq!(v.eval_exact(&pt).unwrap(), GaussianRational::from_ratio(74, 15));

        // Symbolically, q(q^{-1}) = 4/(q + q^{-1}).
        let sym = Params::symbolic(Variant::NonDeg, Family::Zero, 0);
        let lhs = sym.q_val(&sym.q.inv()).unwrap();
        let rhs = sym.int(4).div(&sym.q.add(&sym.q.inv()));
        assert_eq!(lhs, rhs);

        // Degenerate: q(0) = 0.
        let d = Params::symbolic(Variant::Deg, Family::Zero, 1);
        assert!(d.q_val(&d.zero()).unwrap().is_zero());
    }

    #[test]
    fn q_val_rejects_zero_nondeg() {
        let p = Params::symbolic(Variant::NonDeg, Family::Zero, 0);
        assert!(p.q_val(&p.zero()).is_err());
    }

    #[test]
    fn b_product_is_one() {
        let p = Params::desk(Variant::NonDeg, Family::Zero, 1, false);
        let (bp, bm) = b_pm(&p, &p.qs[0]).unwrap();
        assert!(bp.mul(&bm).approx_eq(&ComplexApprox::one(), 1e-12));
    }

    #[test]
    fn u_pair_is_opposite() {
        let p = Params::desk(Variant::Deg, Family::S, 1, false);
        let one = p.int(1);
        let (up, um) = u_pm(&p, &one).unwrap();
        assert!(up.approx_eq(&ComplexApprox::from_f64(2f64.sqrt()), 1e-12));
        assert!(up.add(&um).is_zero_within(1e-14));
    }

    #[test]
    fn diagonal_residues_are_trivial() {
        // Family s diagonal boxes carry residue 1 (nondeg) resp. 0 (deg).
        let shape = Multipartition::new(Family::S, 0, vec![vec![2, 1]]);
        let t = StdTableau::row_initial(&shape);
        let p = Params::desk(Variant::NonDeg, Family::S, 0, true);
        let b = Box_::new(2, 2, 0);
        assert_eq!(p.residue_of(&t, &b), p.int(1));
        let pd = Params::desk(Variant::Deg, Family::S, 0, true);
        assert!(pd.residue_of(&t, &b).is_zero());
    }
}
