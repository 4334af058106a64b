use std::fmt;

use rand::Rng;

use super::QuasidetError;
use crate::scalars::{Quaternion, Rational, Scalar};

/// Dense rectangular matrix over a (possibly noncommutative) scalar.
///
/// Entry access is 1-based, `(row, col)`.
#[derive(Clone, PartialEq)]
pub struct DivMatrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> DivMatrix<S> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<S>) -> Result<Self, QuasidetError> {
        if data.len() != rows * cols {
            return Err(QuasidetError::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(DivMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self, QuasidetError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(QuasidetError::ShapeMismatch("ragged rows".into()));
        }
        Self::from_vec(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                data.push(f(i, j));
            }
        }
        DivMatrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| S::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry `(i, j)`, 1-based. Panics when out of range.
    pub fn get(&self, i: usize, j: usize) -> &S {
        assert!((1..=self.rows).contains(&i) && (1..=self.cols).contains(&j), "({i},{j}) out of range");
        &self.data[(i - 1) * self.cols + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: S) {
        assert!((1..=self.rows).contains(&i) && (1..=self.cols).contains(&j), "({i},{j}) out of range");
        self.data[(i - 1) * self.cols + (j - 1)] = value;
    }

    pub fn row(&self, i: usize) -> Vec<S> {
        (1..=self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (1..=self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    fn check_indices(&self, rows: &[usize], cols: &[usize]) -> Result<(), QuasidetError> {
        if let Some(&i) = rows.iter().find(|&&i| i == 0 || i > self.rows) {
            return Err(QuasidetError::IndexOutOfRange { index: i, bound: self.rows });
        }
        if let Some(&j) = cols.iter().find(|&&j| j == 0 || j > self.cols) {
            return Err(QuasidetError::IndexOutOfRange { index: j, bound: self.cols });
        }
        Ok(())
    }

    /// `A^{I,J}`: rows `I` and columns `J` removed.
    pub fn submatrix_delete(&self, rows: &[usize], cols: &[usize]) -> Result<Self, QuasidetError> {
        self.check_indices(rows, cols)?;
        let keep_r: Vec<usize> = (1..=self.rows).filter(|i| !rows.contains(i)).collect();
        let keep_c: Vec<usize> = (1..=self.cols).filter(|j| !cols.contains(j)).collect();
        self.submatrix_keep(&keep_r, &keep_c)
    }

    /// `A_{I,J}`: the listed rows and columns, in the listed order.
    pub fn submatrix_keep(&self, rows: &[usize], cols: &[usize]) -> Result<Self, QuasidetError> {
        self.check_indices(rows, cols)?;
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                data.push(self.get(i, j).clone());
            }
        }
        Ok(DivMatrix { rows: rows.len(), cols: cols.len(), data })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, QuasidetError> {
        if self.cols != other.rows {
            return Err(QuasidetError::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            (1..=self.cols).fold(S::zero(), |acc, k| acc.add(&self.get(i, k).mul(other.get(k, j))))
        }))
    }

    /// Inverse by Gauss–Jordan elimination using only left row operations.
    ///
    /// The pivot is the first nonzero entry scanning down the column.
    pub fn dr_inverse(&self) -> Result<Self, QuasidetError> {
        if !self.is_square() {
            return Err(QuasidetError::ShapeMismatch(format!("{}x{} is not square", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut a: Vec<Vec<S>> = (1..=n).map(|i| self.row(i)).collect();
        let mut inv: Vec<Vec<S>> = (1..=n).map(|i| Self::identity(n).row(i)).collect();
        for c in 0..n {
            let pivot_row = (c..n).find(|&r| !a[r][c].is_zero()).ok_or(QuasidetError::Singular { column: c + 1 })?;
            a.swap(c, pivot_row);
            inv.swap(c, pivot_row);
            let p_inv = a[c][c].try_inverse().map_err(|_| QuasidetError::Singular { column: c + 1 })?;
            for x in a[c].iter_mut().chain(inv[c].iter_mut()) {
                *x = p_inv.mul(x);
            }
            for r in 0..n {
                if r == c || a[r][c].is_zero() {
                    continue;
                }
                let factor = a[r][c].clone();
                for k in 0..n {
                    let t = factor.mul(&a[c][k]);
                    a[r][k] = a[r][k].sub(&t);
                    let t = factor.mul(&inv[c][k]);
                    inv[r][k] = inv[r][k].sub(&t);
                }
            }
        }
        Self::from_rows(inv)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> DivMatrix<T> {
        DivMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }
}

impl DivMatrix<Quaternion> {
    /// Matrix of quaternions with integer components in `−9..=9`.
    pub fn random_quaternion<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> Self {
        Self::from_fn(rows, cols, |_, _| Quaternion::random_small(rng))
    }
}

impl DivMatrix<Rational> {
    pub fn random_rational<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> Self {
        Self::from_fn(rows, cols, |_, _| Rational::from_integer(rng.random_range(-9..=9)))
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x)).collect()).collect())
            .expect("rectangular")
    }
}

impl<S: Scalar> fmt::Debug for DivMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 1..=self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
