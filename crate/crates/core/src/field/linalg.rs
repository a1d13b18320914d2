//! Dense matrices of scalars with fraction-free determinants, rank and
//! linear solving. Used as the independent oracle for the closed determinant
//! identities and for Gram-matrix rank tests.

use super::scalar::{FieldError, Scalar};

#[derive(Clone, Debug)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(rows * cols, data.len());
        Matrix { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    /// Determinant by Bareiss fraction-free elimination. Exact on the exact
    /// backend; on the numeric backend the divisions are well conditioned for
    /// the desk-scale matrices this crate builds.
    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Scalar::exact_int(1, 1);
        }
        let mut a = self.data.clone();
        let one = a[0].one_like();
        let mut sign = 1i64;
        let mut prev = one.clone();
        for k in 0..n {
            // Pivot selection: first structurally nonzero entry.
            let mut piv = None;
            for i in k..n {
                if !a[i * n + k].is_zero() {
                    piv = Some(i);
                    break;
                }
            }
            let piv = match piv {
                Some(p) => p,
                None => return one.zero_like(),
            };
            if piv != k {
                for j in 0..n {
                    a.swap(k * n + j, piv * n + j);
                }
                sign = -sign;
            }
            for i in (k + 1)..n {
                for j in (k + 1)..n {
                    let num = a[k * n + k]
                        .mul(&a[i * n + j])
                        .sub(&a[i * n + k].mul(&a[k * n + j]));
                    a[i * n + j] = num.div(&prev);
                }
                a[i * n + k] = one.zero_like();
            }
            prev = a[k * n + k].clone();
        }
        let d = a[n * n - 1].clone();
        if sign < 0 {
            d.neg()
        } else {
            d
        }
    }

    /// Rank via Gaussian elimination; pivots are compared against `tol` on
    /// the numeric backend (exact zero otherwise). Partial pivoting by
    /// magnitude keeps the numeric route stable.
    pub fn rank(&self, tol: f64) -> usize {
        let mut a = self.data.clone();
        let (m, n) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..n {
            if rank == m {
                break;
            }
            let mut piv = None;
            let mut best = tol;
            for i in rank..m {
                let mag = magnitude(&a[i * n + col]);
                if mag > best {
                    best = mag;
                    piv = Some(i);
                }
            }
            let piv = match piv {
                Some(p) => p,
                None => continue,
            };
            if piv != rank {
                for j in 0..n {
                    a.swap(rank * n + j, piv * n + j);
                }
            }
            let inv = a[rank * n + col].inv();
            for i in (rank + 1)..m {
                if a[i * n + col].is_zero_within(tol) {
                    continue;
                }
                let factor = a[i * n + col].mul(&inv);
                for j in col..n {
                    let v = a[i * n + j].sub(&factor.mul(&a[rank * n + j]));
                    a[i * n + j] = v;
                }
            }
            rank += 1;
        }
        rank
    }

    /// Solves the (possibly overdetermined, consistent) system `self * x = b`
    /// by elimination; returns `SingularSystem`-flavoured errors through
    /// `FieldError::DivisionByZero` when no unique solution exists.
    pub fn solve(&self, b: &[Scalar], tol: f64) -> Result<Vec<Scalar>, FieldError> {
        assert_eq!(b.len(), self.rows);
        let (m, n) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut rhs = b.to_vec();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..n {
            if row == m {
                break;
            }
            let mut piv = None;
            let mut best = tol;
            for i in row..m {
                let mag = magnitude(&a[i * n + col]);
                if mag > best {
                    best = mag;
                    piv = Some(i);
                }
            }
            let piv = match piv {
                Some(p) => p,
                None => continue,
            };
            if piv != row {
                for j in 0..n {
                    a.swap(row * n + j, piv * n + j);
                }
                rhs.swap(row, piv);
            }
            let inv = a[row * n + col].inv();
            for i in 0..m {
                if i == row || a[i * n + col].is_zero_within(tol) {
                    continue;
                }
                let factor = a[i * n + col].mul(&inv);
                for j in col..n {
                    let v = a[i * n + j].sub(&factor.mul(&a[row * n + j]));
                    a[i * n + j] = v;
                }
                rhs[i] = rhs[i].sub(&factor.mul(&rhs[row]));
            }
            pivots.push((row, col));
            row += 1;
        }
        if pivots.len() < n {
            return Err(FieldError::DivisionByZero);
        }
        let zero = b
            .first()
            .map(|s| s.zero_like())
            .unwrap_or_else(|| Scalar::exact_int(1, 0));
        let mut x = vec![zero; n];
        for (r, c) in pivots {
            x[c] = rhs[r].div(&a[r * n + c]);
        }
        Ok(x)
    }
}

fn magnitude(s: &Scalar) -> f64 {
    match s {
        Scalar::Exact(f) => {
            if f.is_zero() {
                0.0
            } else {
                1.0
            }
        }
        Scalar::Approx(z) => z.abs(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact(nv: usize, num: i64, den: i64) -> Scalar {
        Scalar::exact_ratio(nv, num, den)
    }

    #[test]
    fn identity_det() {
        let m = Matrix::from_fn(3, 3, |i, j| exact(1, (i == j) as i64, 1));
        assert_eq!(m.det(), exact(1, 1, 1));
    }

    #[test]
    fn swap_det() {
        let m = Matrix::from_fn(2, 2, |i, j| exact(1, (i != j) as i64, 1));
        assert_eq!(m.det(), exact(1, -1, 1));
    }

    #[test]
    fn hilbert_det() {
        let m = Matrix::from_fn(3, 3, |i, j| exact(1, 1, (i + j + 1) as i64));
        assert_eq!(m.det(), exact(1, 1, 2160));
    }

    #[test]
    fn rank_of_rank_deficient() {
        // rows (1,2), (2,4) have rank 1.
        let m = Matrix::new(
            2,
            2,
            vec![exact(1, 1, 1), exact(1, 2, 1), exact(1, 2, 1), exact(1, 4, 1)],
        );
        assert_eq!(m.rank(0.0), 1);
    }
}
