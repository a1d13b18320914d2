use std::fmt;

use super::multipartition::Multipartition;
use super::tableau::{enumerate_std_tableaux, StdTableau};
use super::z2::Z2Vector;

/// A triple (t, alpha_t, beta_t): a standard tableau together with a
/// Z2-vector supported on its odd diagonal entries and one supported off the
/// diagonal entries. These index primitive idempotents and seminormal basis
/// elements.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TriIndex {
    pub t: StdTableau,
    pub alpha: Z2Vector,
    pub beta: Z2Vector,
}

impl TriIndex {
    pub fn new(t: StdTableau, alpha: Z2Vector, beta: Z2Vector) -> Self {
        let n = t.n();
        assert_eq!(alpha.len, n);
        assert_eq!(beta.len, n);
        let d = t.diagonal_data();
        for k in alpha.support() {
            assert!(d.in_od(k), "alpha supported off the odd diagonal entries");
        }
        for k in beta.support() {
            assert!(!d.in_d(k), "beta supported on a diagonal entry");
        }
        TriIndex { t, alpha, beta }
    }

    pub fn plain(t: StdTableau) -> Self {
        let n = t.n();
        TriIndex { alpha: Z2Vector::zero(n), beta: Z2Vector::zero(n), t }
    }

    pub fn n(&self) -> usize {
        self.t.n()
    }

    /// Parity class: nonzero only when #D of the shape is odd and the entry
    /// at the deepest diagonal box lies in the support of alpha.
    pub fn class(&self) -> u8 {
        let d = self.t.diagonal_data();
        if d.d_lambda == 0 {
            return 0;
        }
        let top = d.top_entry.unwrap();
        self.alpha.get(top) as u8
    }

    /// The class-`a` companion of a class-0 triple (requires the shape to
    /// have odd #D when `a = 1`).
    pub fn to_class(&self, a: u8) -> TriIndex {
        assert_eq!(self.class(), 0);
        if a == 0 {
            return self.clone();
        }
        let d = self.t.diagonal_data();
        assert_eq!(d.d_lambda, 1, "class-1 triples need odd #D");
        let top = d.top_entry.unwrap();
        TriIndex { t: self.t.clone(), alpha: self.alpha.flip(top), beta: self.beta }
    }

    /// Acts with an adjacent transposition on all three parts.
    pub fn apply_s(&self, i: usize) -> TriIndex {
        TriIndex {
            t: self.t.apply_s(i),
            alpha: self.alpha.swap_adjacent(i),
            beta: self.beta.swap_adjacent(i),
        }
    }
}

impl fmt::Display for TriIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(t={}, a={}, b={})", self.t, self.alpha, self.beta)
    }
}

/// Complete enumeration of Tri_a(shape) (`class = Some(a)`) or of the whole
/// Tri(shape) (`class = None`), deterministic order.
pub fn enumerate_tri(shape: &Multipartition, class: Option<u8>) -> Vec<TriIndex> {
    let n = shape.n();
    let mut out = Vec::new();
    for t in enumerate_std_tableaux(shape) {
        let d = t.diagonal_data();
        let off_d: Vec<usize> = (1..=n).filter(|&k| !d.in_d(k)).collect();
        for alpha in Z2Vector::all_supported(n, &d.od_entries) {
            for beta in Z2Vector::all_supported(n, &off_d) {
                let tri = TriIndex { t: t.clone(), alpha, beta };
                if class.map(|a| tri.class() == a).unwrap_or(true) {
                    out.push(tri);
                }
            }
        }
    }
    out.sort();
    out
}

/// Restriction of a triple to `1..=n-1`: the tableau and both vectors are
/// truncated, and the alpha part is renormalised into the class-0 component
/// of the restricted shape. Returns the normalised triple and the class it
/// landed in before normalisation.
pub fn restrict_tri(tri: &TriIndex) -> (TriIndex, u8) {
    let n = tri.n();
    let t = tri.t.restrict(n - 1);
    let alpha_raw = tri.alpha.restrict(n - 1);
    let beta = tri.beta.restrict(n - 1);
    let d = t.diagonal_data();
    let mut alpha = alpha_raw;
    let mut class = 0u8;
    if d.d_lambda == 1 {
        let top = d.top_entry.unwrap();
        if alpha.get(top) {
            alpha = alpha.flip(top);
            class = 1;
        }
    }
    (TriIndex::new(t, alpha, beta), class)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::multipartition::{enumerate_multipartitions, Family};

    #[test]
    fn family_zero_tri_is_full_cube() {
        for shape in enumerate_multipartitions(3, 1, Family::Zero) {
            let ts = enumerate_std_tableaux(&shape);
            let tri = enumerate_tri(&shape, None);
            assert_eq!(tri.len(), ts.len() << 3);
            assert!(enumerate_tri(&shape, Some(1)).is_empty());
        }
    }

    #[test]
    fn tri_class_zero_count() {
        for n in 1..=5 {
            for shape in enumerate_multipartitions(n, 0, Family::S) {
                let ts = enumerate_std_tableaux(&shape);
                let d = StdTableau::row_initial(&shape).diagonal_data();
                let expect = ts.len() << (n - d.count.div_ceil(2));
                assert_eq!(enumerate_tri(&shape, Some(0)).len(), expect, "shape {}", shape);
            }
        }
    }

    #[test]
    fn single_box_strict_tri() {
        let shape = Multipartition::new(Family::S, 0, vec![vec![1]]);
        assert_eq!(enumerate_tri(&shape, Some(0)).len(), 1);
        assert_eq!(enumerate_tri(&shape, Some(1)).len(), 1);
    }

    #[test]
    fn restriction_matches_worked_example() {
        // Shape ((2,1),(1,1)) in family s; tableau with entries
        // [[1,2],[5]] | [[3],[4]], alpha = e1, beta = e2.
        let shape = Multipartition::new(Family::S, 1, vec![vec![2, 1], vec![1, 1]]);
        let t = enumerate_std_tableaux(&shape)
            .into_iter()
            .find(|t| t.rows == vec![vec![vec![1, 2], vec![5]], vec![vec![3], vec![4]]])
            .unwrap();
        let tri = TriIndex::new(t, Z2Vector::from_support(5, &[1]), Z2Vector::from_support(5, &[2]));
        let (down, class) = restrict_tri(&tri);
        assert_eq!(class, 1);
        assert_eq!(down.alpha, Z2Vector::zero(4));
        assert_eq!(down.beta, Z2Vector::from_support(4, &[2]));
        assert_eq!(down.t.rows, vec![vec![vec![1, 2]], vec![vec![3], vec![4]]]);
        assert_eq!(down.class(), 0);
    }

    #[test]
    fn restriction_lands_in_class_zero() {
        for shape in enumerate_multipartitions(4, 1, Family::S) {
            for tri in enumerate_tri(&shape, None) {
                let (down, _) = restrict_tri(&tri);
                assert_eq!(down.class(), 0);
            }
        }
    }

    #[test]
    fn restrict_identity_at_full_level() {
        let shape = Multipartition::new(Family::S, 0, vec![vec![3, 2, 1]]);
        for t in enumerate_std_tableaux(&shape) {
            assert_eq!(t.restrict(t.n()), t);
        }
    }
}
