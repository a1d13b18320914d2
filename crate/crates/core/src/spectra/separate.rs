use crate::shapes::{enumerate_multipartitions, enumerate_std_tableaux};

use super::params::Params;
use super::residues::ResidueTable;

/// Whether consecutive q-values differ in every standard tableau of every
/// shape of size `n`. Undefined q-values (poles of the parameter choice)
/// count as failures.
pub fn is_separate(n: usize, params: &Params) -> bool {
    separate_violation(n, params).is_none()
}

/// The first violation, as a diagnostic string.
pub fn separate_violation(n: usize, params: &Params) -> Option<String> {
    for shape in enumerate_multipartitions(n, params.m, params.family) {
        for t in enumerate_std_tableaux(&shape) {
            let table = match ResidueTable::new(params, &t) {
                Ok(tab) => tab,
                Err(e) => return Some(format!("q-value undefined on {}: {}", t, e)),
            };
            for k in 1..n {
                let d = table.qres(k).sub(table.qres(k + 1));
                if d.is_zero_within(params.tol.arith) {
                    return Some(format!(
                        "q-values collide at ({}, {}) in tableau {} of shape {}",
                        k,
                        k + 1,
                        t,
                        shape
                    ));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{ComplexApprox, Tolerance};
    use crate::shapes::Family;
    use crate::spectra::Variant;

    #[test]
    fn desk_parameters_are_separate() {
        let p = Params::desk(Variant::NonDeg, Family::Zero, 1, true);
        assert!(is_separate(2, &p));
        let p = Params::desk(Variant::NonDeg, Family::S, 1, false);
        assert!(is_separate(3, &p));
        let p = Params::desk(Variant::Deg, Family::S, 0, false);
        assert!(is_separate(3, &p));
    }

    #[test]
    fn fourth_root_of_unity_fails() {
        // q = i makes every q-value undefined (q + q^{-1} = 0).
        let p = Params::numeric(
            Variant::NonDeg,
            Family::S,
            ComplexApprox::i(),
            vec![],
            Tolerance::default(),
        );
        assert!(!is_separate(2, &p));
    }

    #[test]
    fn n_equal_one_needs_distinct_component_values() {
        let p = Params::desk(Variant::NonDeg, Family::Zero, 2, true);
        assert!(is_separate(1, &p));
    }

    #[test]
    fn colliding_q_parameters_fail() {
        // Q2 = Q1 collides already at n = 1? No adjacent pair exists inside
        // a single tableau at n = 1, so separateness holds there...
        let p = Params::exact_values(
            Variant::NonDeg,
            Family::Zero,
            crate::field::GaussianRational::from_i64(2),
            vec![
                crate::field::GaussianRational::from_i64(3),
                crate::field::GaussianRational::from_i64(3),
            ],
        );
        assert!(is_separate(1, &p));
        // ... but at n = 2 the tableau with 1 in component 1 and 2 in
        // component 2 has equal consecutive q-values.
        assert!(!is_separate(2, &p));
    }
}
