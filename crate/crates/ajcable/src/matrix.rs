//! Dense matrices over [`Poly`] with two independent exact determinant
//! algorithms: fraction-free Bareiss elimination for production use and
//! first-column cofactor expansion as a small-dimension oracle.

use crate::ring::Poly;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("cofactor oracle limited to dimension {limit}, got {dim}")]
    TooLarge { dim: usize, limit: usize },
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error("internal error: {0}")]
    Internal(String),
}

/// Row-major dense matrix of polynomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Poly>,
}

const COFACTOR_LIMIT: usize = 8;

impl PolyMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1);
        PolyMatrix {
            rows,
            cols,
            data: vec![Poly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = PolyMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Poly::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Result<Self, MatrixError> {
        let r = rows.len();
        if r == 0 {
            return Err(MatrixError::DimensionMismatch);
        }
        let c = rows[0].len();
        if c == 0 || rows.iter().any(|row| row.len() != c) {
            return Err(MatrixError::DimensionMismatch);
        }
        Ok(PolyMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Poly) -> Self {
        let mut m = PolyMatrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Poly {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Poly) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Fresh matrix with column `j` replaced by `col`; the original is
    /// unchanged.
    pub fn replace_column(&self, j: usize, col: &[Poly]) -> Result<PolyMatrix, MatrixError> {
        if j >= self.cols || col.len() != self.rows {
            return Err(MatrixError::DimensionMismatch);
        }
        let mut m = self.clone();
        for (i, v) in col.iter().enumerate() {
            m.set(i, j, v.clone());
        }
        Ok(m)
    }

    /// Submatrix keeping the given rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<PolyMatrix, MatrixError> {
        if rows.iter().any(|&r| r >= self.rows) || cols.iter().any(|&c| c >= self.cols) {
            return Err(MatrixError::DimensionMismatch);
        }
        Ok(PolyMatrix::from_fn(rows.len(), cols.len(), |i, j| {
            self.at(rows[i], cols[j]).clone()
        }))
    }

    pub fn apply(&self, vec: &[Poly]) -> Result<Vec<Poly>, MatrixError> {
        if vec.len() != self.cols {
            return Err(MatrixError::DimensionMismatch);
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Poly::zero();
                for j in 0..self.cols {
                    let e = self.at(i, j);
                    if !e.is_zero() && !vec[j].is_zero() {
                        acc = &acc + &(e * &vec[j]);
                    }
                }
                acc
            })
            .collect())
    }

    /// Exact determinant via fraction-free Bareiss elimination. Every
    /// intermediate division is exact; zero-detection is structural.
    pub fn det_bareiss(&self) -> Result<Poly, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut sign_flip = false;
        let mut prev = Poly::one();
        for k in 0..n {
            if a.at(k, k).is_zero() {
                let pivot_row = ((k + 1)..n).find(|&i| !a.at(i, k).is_zero());
                match pivot_row {
                    None => return Ok(Poly::zero()),
                    Some(r) => {
                        for j in 0..n {
                            let tmp = a.at(k, j).clone();
                            let other = a.at(r, j).clone();
                            a.set(k, j, other);
                            a.set(r, j, tmp);
                        }
                        sign_flip = !sign_flip;
                    }
                }
            }
            if k == n - 1 {
                break;
            }
            let pivot = a.at(k, k).clone();
            for i in (k + 1)..n {
                for j in (k + 1)..n {
                    let num = &(a.at(i, j) * &pivot) - &(a.at(i, k) * a.at(k, j));
                    let q = num.exact_div(&prev).map_err(|_| {
                        MatrixError::Internal("bareiss division was not exact".into())
                    })?;
                    a.set(i, j, q);
                }
                a.set(i, k, Poly::zero());
            }
            prev = pivot;
        }
        let det = a.at(n - 1, n - 1).clone();
        Ok(if sign_flip { -&det } else { det })
    }

    /// Exact determinant by cofactor expansion along the first column,
    /// kept as an independent oracle for dimensions up to 8.
    pub fn det_cofactor(&self) -> Result<Poly, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols });
        }
        if self.rows > COFACTOR_LIMIT {
            return Err(MatrixError::TooLarge { dim: self.rows, limit: COFACTOR_LIMIT });
        }
        Ok(self.det_cofactor_inner())
    }

    fn det_cofactor_inner(&self) -> Poly {
        let n = self.rows;
        if n == 1 {
            return self.at(0, 0).clone();
        }
        let mut acc = Poly::zero();
        for i in 0..n {
            if self.at(i, 0).is_zero() {
                continue;
            }
            let rows: Vec<usize> = (0..n).filter(|&r| r != i).collect();
            let cols: Vec<usize> = (1..n).collect();
            let minor = self.submatrix(&rows, &cols).unwrap().det_cofactor_inner();
            let term = self.at(i, 0) * &minor;
            acc = if i % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Exp;
    use num_bigint::BigInt;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn int_matrix(vals: &[&[i64]]) -> PolyMatrix {
        PolyMatrix::from_rows(
            vals.iter()
                .map(|r| r.iter().map(|&v| Poly::from_int(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn random_poly(rng: &mut ChaCha8Rng, max_terms: usize) -> Poly {
        let n = rng.gen_range(0..=max_terms);
        let mut p = Poly::zero();
        for _ in 0..n {
            let c: i64 = rng.gen_range(-3..=3);
            let t: i64 = rng.gen_range(-2..=2);
            let m: i64 = rng.gen_range(-2..=2);
            let l: u32 = rng.gen_range(0..=2);
            p = &p + &Poly::from_terms([(Exp::new(t, m, l), BigInt::from(c))]);
        }
        p
    }

    #[test]
    fn identity_and_small() {
        assert_eq!(PolyMatrix::identity(4).det_bareiss().unwrap(), Poly::one());
        let m = int_matrix(&[&[1, 2], &[3, 4]]);
        assert_eq!(m.det_bareiss().unwrap(), Poly::from_int(-2));
        assert_eq!(m.det_cofactor().unwrap(), Poly::from_int(-2));
    }

    #[test]
    fn cofactor_one_by_one_and_transposition() {
        let p = Poly::mono(3, 1, -1, 2);
        let m = PolyMatrix::from_rows(vec![vec![p.clone()]]).unwrap();
        assert_eq!(m.det_cofactor().unwrap(), p);
        let perm = int_matrix(&[&[0, 1], &[1, 0]]);
        assert_eq!(perm.det_cofactor().unwrap(), Poly::from_int(-1));
        assert_eq!(perm.det_bareiss().unwrap(), Poly::from_int(-1));
    }

    #[test]
    fn cofactor_size_guard() {
        let m = PolyMatrix::identity(9);
        assert!(matches!(m.det_cofactor(), Err(MatrixError::TooLarge { .. })));
    }

    #[test]
    fn not_square_rejected() {
        let m = PolyMatrix::zero(2, 3);
        assert!(matches!(m.det_bareiss(), Err(MatrixError::NotSquare { .. })));
    }

    #[test]
    fn replace_column_involution() {
        let m = PolyMatrix::identity(2);
        let col = vec![Poly::zero(), Poly::one()];
        let r = m.replace_column(0, &col).unwrap();
        assert_eq!(r.at(0, 0), &Poly::zero());
        assert_eq!(r.at(1, 0), &Poly::one());
        assert_eq!(r.at(0, 1), &Poly::zero());
        let back = r
            .replace_column(0, &[Poly::one(), Poly::zero()])
            .unwrap();
        assert_eq!(back, m);
        assert!(m.replace_column(5, &col).is_err());
        assert!(m.replace_column(0, &[Poly::one()]).is_err());
    }

    #[test]
    fn singular_matrix_is_zero() {
        let m = int_matrix(&[&[1, 2, 3], &[2, 4, 6], &[1, 1, 1]]);
        assert_eq!(m.det_bareiss().unwrap(), Poly::zero());
    }

    #[test]
    fn bareiss_equals_cofactor_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for trial in 0..200 {
            let n = 1 + (trial % 6);
            let m = PolyMatrix::from_fn(n, n, |_, _| random_poly(&mut rng, 3));
            let b = m.det_bareiss().unwrap();
            let c = m.det_cofactor().unwrap();
            assert_eq!(b, c, "mismatch at trial {trial} (n={n})");
        }
    }

    #[test]
    fn row_scaling_and_swap() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let n = 3;
            let m = PolyMatrix::from_fn(n, n, |_, _| random_poly(&mut rng, 2));
            let s = random_poly(&mut rng, 2);
            let det = m.det_bareiss().unwrap();
            // scale row 1 by s
            let scaled = PolyMatrix::from_fn(n, n, |i, j| {
                if i == 1 {
                    m.at(i, j) * &s
                } else {
                    m.at(i, j).clone()
                }
            });
            assert_eq!(scaled.det_bareiss().unwrap(), &s * &det);
            // swap rows 0,2
            let swapped = PolyMatrix::from_fn(n, n, |i, j| {
                let r = match i {
                    0 => 2,
                    2 => 0,
                    other => other,
                };
                m.at(r, j).clone()
            });
            assert_eq!(swapped.det_bareiss().unwrap(), -&det);
        }
    }
}
