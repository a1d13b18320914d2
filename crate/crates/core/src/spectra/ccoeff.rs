use crate::field::Scalar;
use crate::shapes::{Box_, StdTableau};

use super::params::{Params, SpectraError, Variant};
use super::residues::ResidueTable;

/// The coefficient c_t(i), computed through q-values only:
///
/// nondeg: 1 - eps^2 (q_i q_{i+1} - 4) / (q_i - q_{i+1})^2,
/// deg:    1 - 2 (q_i + q_{i+1}) / (q_i - q_{i+1})^2,
///
/// which agree with the eigenvalue expressions (see
/// [`c_coeff_from_eigenvalues`]) wherever both are defined.
pub fn c_coeff(params: &Params, t: &StdTableau, i: usize) -> Result<Scalar, SpectraError> {
    let table = ResidueTable::new(params, t)?;
    c_coeff_from_qvals(params, table.qres(i), table.qres(i + 1))
}

pub(crate) fn c_coeff_from_qvals(
    params: &Params,
    qi: &Scalar,
    qj: &Scalar,
) -> Result<Scalar, SpectraError> {
    let diff = qi.sub(qj);
    if diff.is_zero_within(params.tol.arith) {
        return Err(SpectraError::SeparateViolated("equal adjacent q-values".into()));
    }
    let d2 = diff.mul(&diff);
    match params.variant {
        Variant::NonDeg => {
            let eps = params.epsilon();
            let num = qi.mul(qj).sub(&params.int(4));
            Ok(params.one().sub(&eps.mul(&eps).mul(&num).div(&d2)))
        }
        Variant::Deg => {
            let num = qi.add(qj).scale_int(2);
            Ok(params.one().sub(&num.div(&d2)))
        }
    }
}

/// The rewrite form of c_t(i):
/// `(q_i - q(next(res_{i+1})))(q_i - q(prev(res_{i+1}))) / (q_i - q_{i+1})^2`
/// where next/prev are the neighbouring-diagonal residues.
pub fn c_coeff_rewrite(params: &Params, t: &StdTableau, i: usize) -> Result<Scalar, SpectraError> {
    let table = ResidueTable::new(params, t)?;
    let qi = table.qres(i);
    let qj = table.qres(i + 1);
    let (up, down) = params.neighbour_residues(table.res(i + 1));
    let diff = qi.sub(qj);
    if diff.is_zero_within(params.tol.arith) {
        return Err(SpectraError::SeparateViolated("equal adjacent q-values".into()));
    }
    let num = qi.sub(&params.q_val(&up)?).mul(&qi.sub(&params.q_val(&down)?));
    Ok(num.div(&diff.mul(&diff)))
}

/// Numeric evaluation from eigenvalue pairs: nondeg with x = b_{t,i},
/// y = b_{t,i+1}, deg with x = u_{t,i}, y = u_{t,i+1}.
pub fn c_coeff_from_eigenvalues(
    params: &Params,
    x: &Scalar,
    y: &Scalar,
) -> Result<Scalar, SpectraError> {
    match params.variant {
        Variant::NonDeg => {
            let eps = params.epsilon();
            let a = x.inv().mul(y);
            let b = x.mul(y);
            for v in [&a, &b] {
                if v.sub(&params.one()).is_zero_within(params.tol.arith) {
                    return Err(SpectraError::DegeneratePair);
                }
            }
            let term = |v: &Scalar| {
                let d = v.sub(&params.one());
                v.div(&d.mul(&d))
            };
            Ok(params.one().sub(&eps.mul(&eps).mul(&term(&a).add(&term(&b)))))
        }
        Variant::Deg => {
            let d = x.sub(y);
            let s = x.add(y);
            for v in [&d, &s] {
                if v.is_zero_within(params.tol.arith) {
                    return Err(SpectraError::DegeneratePair);
                }
            }
            let one = params.one();
            Ok(one.sub(&one.div(&d.mul(&d))).sub(&one.div(&s.mul(&s))))
        }
    }
}

/// Whether the idempotency condition holds for the eigenvalue pair (x, y):
/// nondeg `x^{-1}y/(x^{-1}y-1)^2 + xy/(xy-1)^2 = 1/eps^2`, deg
/// `1/(x-y)^2 + 1/(x+y)^2 = 1`. Equivalently, c vanishes on the pair.
pub fn idempotency_pair(params: &Params, x: &Scalar, y: &Scalar) -> Result<bool, SpectraError> {
    let c = c_coeff_from_eigenvalues(params, x, y)?;
    Ok(c.is_zero_within(params.tol.assert))
}

/// The squared coefficient (c_{s,t})^2 = prod of c over the canonical
/// reduced word of d(s, t). Square-root free, hence exact-backend capable.
pub fn c_between_sq(params: &Params, s: &StdTableau, t: &StdTableau) -> Result<Scalar, SpectraError> {
    if s.shape != t.shape {
        return Err(SpectraError::ShapeMismatch);
    }
    let d = s.perm_from(t);
    let word = d.canonical_word();
    let mut cur = t.clone();
    let mut acc = params.one();
    for &i in word.iter().rev() {
        acc = acc.mul(&c_coeff(params, &cur, i)?);
        cur = cur.apply_s(i);
    }
    debug_assert_eq!(&cur, s);
    Ok(acc)
}

fn dq(params: &Params, t: &StdTableau, k: usize, other: &Box_) -> Result<Scalar, SpectraError> {
    let table = ResidueTable::new(params, t)?;
    let shape = t.restrict(k - 1).shape;
    let r = params.residue(shape.component_label(other.comp), other);
    Ok(table.qres(k).sub(&params.q_val(&r)?))
}

fn is_diag(shape_strict_count: usize, b: &Box_) -> bool {
    b.comp < shape_strict_count && b.row == b.col
}

/// Row closed form: the product formula for c_t^{row-initial} over
/// restriction-compatible addable/removable boxes after (in box order) the
/// entry's box.
pub fn c_closed_row(params: &Params, t: &StdTableau) -> Result<Scalar, SpectraError> {
    c_closed(params, t, true)
}

/// Column closed form: the analogous product for c_t^{column-initial}.
pub fn c_closed_col(params: &Params, t: &StdTableau) -> Result<Scalar, SpectraError> {
    c_closed(params, t, false)
}

fn c_closed(params: &Params, t: &StdTableau, row_form: bool) -> Result<Scalar, SpectraError> {
    let n = t.n();
    let strict = t.shape.family.strict_components();
    let reference = if row_form {
        StdTableau::row_initial(&t.shape)
    } else {
        StdTableau::col_initial(&t.shape)
    };
    // side(alpha, box_of_k): keep boxes after (row form) resp. before
    // (column form) the k-th box in the component/column order.
    let keep = |a: &Box_, b: &Box_| if row_form { b.before(a) } else { a.before(b) };

    let mut acc = params.one();
    for base in [&reference, t] {
        let invert_reference = std::ptr::eq(base, &reference as *const _ as &StdTableau);
        let is_ref = invert_reference;
        for k in 1..=n {
            let down = base.restrict(k - 1);
            let target = base.box_of(k);
            for a in down.shape.addable() {
                if keep(&a, &target) {
                    let f = dq(params, base, k, &a)?;
                    acc = if is_ref { acc.div(&f) } else { acc.mul(&f) };
                }
            }
            if !is_ref {
                for r in down.shape.removable() {
                    if keep(&r, &target) && !is_diag(strict, &r) {
                        acc = acc.div(&dq(params, base, k, &r)?);
                    }
                }
            }
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::ComplexApprox;
    use crate::shapes::{enumerate_multipartitions, enumerate_std_tableaux, Family, Multipartition};

    #[test]
    fn c_is_symmetric_under_the_swap() {
        let p = Params::symbolic(Variant::NonDeg, Family::S, 1);
        let shape = Multipartition::new(Family::S, 1, vec![vec![2], vec![1]]);
        for t in enumerate_std_tableaux(&shape) {
            for i in 1..t.n() {
                if t.admissible(i) {
                    let a = c_coeff(&p, &t, i).unwrap();
                    let b = c_coeff(&p, &t.apply_s(i), i).unwrap();
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn rewrite_form_agrees_symbolically() {
        for variant in [Variant::NonDeg, Variant::Deg] {
            let p = Params::symbolic(variant, Family::S, 1);
            for n in 2..=4 {
                for shape in enumerate_multipartitions(n, 1, Family::S) {
                    for t in enumerate_std_tableaux(&shape) {
                        for i in 1..n {
                            let a = c_coeff(&p, &t, i).unwrap();
                            let b = c_coeff_rewrite(&p, &t, i).unwrap();
                            assert_eq!(a, b, "tableau {} at {}", t, i);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn q_shift_sum_identity() {
        // q(q^2 iota) + q(q^{-2} iota) = (eps^2 + 2) q(iota), symbolically.
        let p = Params::symbolic(Variant::NonDeg, Family::Zero, 1);
        let iota = p.qs[0].clone();
        let (up, down) = p.neighbour_residues(&iota);
        let lhs = p.q_val(&up).unwrap().add(&p.q_val(&down).unwrap());
        let eps = p.epsilon();
        let rhs = eps.mul(&eps).add(&p.int(2)).mul(&p.q_val(&iota).unwrap());
        assert_eq!(lhs, rhs);
        // and q(q^2 iota) q(q^{-2} iota) = q(iota)^2 + 4 eps^2.
        let lhs2 = p.q_val(&up).unwrap().mul(&p.q_val(&down).unwrap());
        let qi = p.q_val(&iota).unwrap();
        let rhs2 = qi.mul(&qi).add(&eps.mul(&eps).scale_int(4));
        assert_eq!(lhs2, rhs2);
    }

    #[test]
    fn eigenvalue_form_matches_numeric() {
        let p = Params::desk(Variant::NonDeg, Family::Zero, 1, false);
        let shape = Multipartition::new(Family::Zero, 1, vec![vec![2, 1]]);
        for t in enumerate_std_tableaux(&shape) {
            for i in 1..3 {
                let via_q = c_coeff(&p, &t, i).unwrap().as_approx().unwrap();
                let x = Scalar::Approx(p.eigen_base(&t, i).unwrap());
                let y = Scalar::Approx(p.eigen_base(&t, i + 1).unwrap());
                let via_b = c_coeff_from_eigenvalues(&p, &x, &y).unwrap().as_approx().unwrap();
                assert!(via_q.approx_eq(&via_b, 1e-9), "{} vs {:?} {:?}", t, via_q, via_b);
            }
        }
    }

    #[test]
    fn idempotency_pair_examples() {
        let p = Params::desk(Variant::NonDeg, Family::Zero, 1, false);
        // (b_+(u), b_+(q^2 u)) satisfies the condition.
        let u = Scalar::approx(0.83, 0.21);
        let (up, _) = p.neighbour_residues(&u);
        let bu = Scalar::Approx(super::super::residues::b_pm(&p, &u).unwrap().0);
        let bv = Scalar::Approx(super::super::residues::b_pm(&p, &up).unwrap().0);
        assert!(idempotency_pair(&p, &bu, &bv).unwrap());
        // A generic non-adjacent pair does not.
        let bw = Scalar::Approx(super::super::residues::b_pm(&p, &Scalar::approx(0.11, 0.0)).unwrap().0);
        assert!(!idempotency_pair(&p, &bu, &bw).unwrap());
        // Degenerate pairs are rejected.
        assert!(matches!(
            idempotency_pair(&p, &bu, &bu.inv()),
            Err(SpectraError::DegeneratePair)
        ));
        let _ = ComplexApprox::one();
    }
}
