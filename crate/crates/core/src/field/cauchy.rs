//! Two Cauchy-type determinant identities in 2l+k quantities, together with
//! builders for the defining matrices so the closed forms can be checked
//! against the elimination oracle.

use super::linalg::Matrix;
use super::scalar::{FieldError, Scalar};

fn check_inputs(xs: &[Scalar], zs: &[Scalar], k: usize) -> Result<(), FieldError> {
    let l = zs.len();
    if xs.len() != l + k {
        return Err(FieldError::BackendMismatch);
    }
    for (i, x) in xs.iter().enumerate() {
        for y in &xs[i + 1..] {
            if x.sub(y).is_zero() {
                return Err(FieldError::DivisionByZero);
            }
        }
        for z in zs {
            if x.sub(z).is_zero() {
                return Err(FieldError::DivisionByZero);
            }
        }
    }
    for (i, z) in zs.iter().enumerate() {
        for w in &zs[i + 1..] {
            if z.sub(w).is_zero() {
                return Err(FieldError::DivisionByZero);
            }
        }
    }
    Ok(())
}

/// Matrix with entries `x_r / (x_r - z_s)` in the first l columns and
/// `x_r^j`, j = 0..k-1, in the last k columns.
pub fn cauchy_matrix_full(xs: &[Scalar], zs: &[Scalar], k: usize) -> Matrix {
    let l = zs.len();
    Matrix::from_fn(l + k, l + k, |r, c| {
        if c < l {
            xs[r].div(&xs[r].sub(&zs[c]))
        } else {
            xs[r].pow((c - l) as i64)
        }
    })
}

/// Same with entries `1 / (x_r - z_s)` in the first l columns.
pub fn cauchy_matrix_plain(xs: &[Scalar], zs: &[Scalar], k: usize) -> Matrix {
    let l = zs.len();
    Matrix::from_fn(l + k, l + k, |r, c| {
        if c < l {
            xs[r].one_like().div(&xs[r].sub(&zs[c]))
        } else {
            xs[r].pow((c - l) as i64)
        }
    })
}

fn vandermonde_and_cauchy_denominator(xs: &[Scalar], zs: &[Scalar]) -> (Scalar, Scalar) {
    let one = xs[0].one_like();
    let mut numer = one.clone();
    for p in 0..zs.len() {
        for q in (p + 1)..zs.len() {
            numer = numer.mul(&zs[p].sub(&zs[q]));
        }
    }
    for u in 0..xs.len() {
        for v in (u + 1)..xs.len() {
            numer = numer.mul(&xs[v].sub(&xs[u]));
        }
    }
    let mut denom = one;
    for x in xs {
        for z in zs {
            denom = denom.mul(&x.sub(z));
        }
    }
    (numer, denom)
}

/// Closed form of the determinant of [`cauchy_matrix_full`]:
/// `prod z_t * prod_{p<q}(z_p - z_q) * prod_{u<v}(x_v - x_u) / prod (x_r - z_s)`.
pub fn cauchy_closed_form_full(xs: &[Scalar], zs: &[Scalar], k: usize) -> Result<Scalar, FieldError> {
    check_inputs(xs, zs, k)?;
    let (mut numer, denom) = vandermonde_and_cauchy_denominator(xs, zs);
    for z in zs {
        numer = numer.mul(z);
    }
    Ok(numer.div(&denom))
}

/// Closed form of the determinant of [`cauchy_matrix_plain`]; the
/// `prod z_t` factor is absent.
pub fn cauchy_closed_form_plain(xs: &[Scalar], zs: &[Scalar], k: usize) -> Result<Scalar, FieldError> {
    check_inputs(xs, zs, k)?;
    let (numer, denom) = vandermonde_and_cauchy_denominator(xs, zs);
    Ok(numer.div(&denom))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(v: i64) -> Scalar {
        Scalar::exact_int(1, v)
    }

    #[test]
    fn vandermonde_when_l_is_zero() {
        let xs = vec![e(2), e(3), e(7)];
        let expect = e(3 - 2).mul(&e(7 - 2)).mul(&e(7 - 3));
        assert_eq!(cauchy_closed_form_full(&xs, &[], 3).unwrap(), expect);
        assert_eq!(cauchy_closed_form_plain(&xs, &[], 3).unwrap(), expect);
    }

    #[test]
    fn two_by_two_instances() {
        let xs = vec![e(2), e(3)];
        let zs = vec![e(5)];
        assert_eq!(cauchy_closed_form_full(&xs, &zs, 1).unwrap(), Scalar::exact_ratio(1, 5, 6));
        assert_eq!(cauchy_closed_form_plain(&xs, &zs, 1).unwrap(), Scalar::exact_ratio(1, 1, 6));
    }

    #[test]
    fn degenerate_inputs_rejected() {
        let xs = vec![e(2), e(5)];
        let zs = vec![e(5)];
        assert!(cauchy_closed_form_full(&xs, &zs, 1).is_err());
    }

    #[test]
    fn closed_forms_match_det_oracle() {
        let xs = vec![
            Scalar::exact_ratio(1, 1, 2),
            Scalar::exact_ratio(1, 5, 3),
            Scalar::exact_ratio(1, -7, 4),
            Scalar::exact_int(1, 4),
            Scalar::exact_ratio(1, 9, 7),
        ];
        let zs = vec![Scalar::exact_ratio(1, 11, 5), Scalar::exact_ratio(1, -2, 9), Scalar::exact_int(1, 6)];
        let k = xs.len() - zs.len();
        assert_eq!(
            cauchy_closed_form_full(&xs, &zs, k).unwrap(),
            cauchy_matrix_full(&xs, &zs, k).det()
        );
        assert_eq!(
            cauchy_closed_form_plain(&xs, &zs, k).unwrap(),
            cauchy_matrix_plain(&xs, &zs, k).det()
        );
    }
}
