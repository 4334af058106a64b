//! Quasideterminants over a division ring.
//!
//! `|A|_{ij}` is computed either by the recursive formula
//! `a_ij − Σ_{r≠i, s≠j} a_is (|A^{ij}|_{rs})⁻¹ a_rj` or by the border formula
//! `a_ij − ξ (A^{ij})⁻¹ ζ`, where `ξ` is row `i` without column `j` and `ζ`
//! is column `j` without row `i`. Over a general division ring some
//! quasideterminants do not exist; that is reported as
//! [`QuasidetError::Undefined`] rather than a panic.

pub mod classical;
mod matrix;
pub mod verify;

use std::cell::RefCell;
use std::collections::HashMap;

use thiserror::Error;

pub use matrix::DivMatrix;

use crate::scalars::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuasidetError {
    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("singular matrix: no nonzero pivot in column {column}")]
    Singular { column: usize },
    #[error("quasideterminant undefined at ({}, {}): {reason}", .position.0, .position.1)]
    Undefined { position: (usize, usize), reason: String },
    #[error("minor A^({i},{j}) has zero determinant")]
    SingularMinor { i: usize, j: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Recursive,
    Border,
}

/// `|A|_{ij}` by the requested method. `A` must be square.
pub fn quasidet<S: Scalar>(a: &DivMatrix<S>, i: usize, j: usize, method: Method) -> Result<S, QuasidetError> {
    if !a.is_square() {
        return Err(QuasidetError::ShapeMismatch(format!("{}x{} is not square", a.rows(), a.cols())));
    }
    let n = a.rows();
    for idx in [i, j] {
        if idx == 0 || idx > n {
            return Err(QuasidetError::IndexOutOfRange { index: idx, bound: n });
        }
    }
    match method {
        Method::Border => border(a, i, j),
        Method::Recursive => QuasidetTable::new(a).full(i, j),
    }
}

fn border<S: Scalar>(a: &DivMatrix<S>, i: usize, j: usize) -> Result<S, QuasidetError> {
    let n = a.rows();
    if n == 1 {
        return Ok(a.get(1, 1).clone());
    }
    let inner = a.submatrix_delete(&[i], &[j])?;
    let inv = inner.dr_inverse().map_err(|e| QuasidetError::Undefined {
        position: (i, j),
        reason: format!("A^({i},{j}) is not invertible: {e}"),
    })?;
    let xi: Vec<S> = (1..=n).filter(|&c| c != j).map(|c| a.get(i, c).clone()).collect();
    let zeta: Vec<S> = (1..=n).filter(|&r| r != i).map(|r| a.get(r, j).clone()).collect();
    let mut correction = S::zero();
    for (p, x) in xi.iter().enumerate() {
        for (q, z) in zeta.iter().enumerate() {
            correction = correction.add(&x.mul(inv.get(p + 1, q + 1)).mul(z));
        }
    }
    Ok(a.get(i, j).sub(&correction))
}

fn mask(indices: impl IntoIterator<Item = usize>) -> u32 {
    indices.into_iter().fold(0, |m, i| m | (1 << (i - 1)))
}

fn members(m: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |b| m & (1 << b) != 0).map(|b| b + 1)
}

type Key = (u32, u32, usize, usize);

/// Memoized recursive quasideterminants of every square submatrix of one
/// matrix, addressed by original row and column labels.
///
/// Not `Sync`; build one table per thread.
pub struct QuasidetTable<'a, S> {
    a: &'a DivMatrix<S>,
    memo: RefCell<HashMap<Key, Result<S, QuasidetError>>>,
    inverses: RefCell<HashMap<Key, Option<S>>>,
}

impl<'a, S: Scalar> QuasidetTable<'a, S> {
    pub fn new(a: &'a DivMatrix<S>) -> Self {
        assert!(a.rows() <= 32 && a.cols() <= 32, "matrix too large for the bitmask table");
        QuasidetTable { a, memo: RefCell::new(HashMap::new()), inverses: RefCell::new(HashMap::new()) }
    }

    pub fn matrix(&self) -> &DivMatrix<S> {
        self.a
    }

    /// `|A|_{ij}` of the whole (square) matrix.
    pub fn full(&self, i: usize, j: usize) -> Result<S, QuasidetError> {
        self.keep(&(1..=self.a.rows()).collect::<Vec<_>>(), &(1..=self.a.cols()).collect::<Vec<_>>(), i, j)
    }

    /// `|A^{R,C}|_{ij}` with rows `R` and columns `C` deleted.
    pub fn deleted(&self, rows: &[usize], cols: &[usize], i: usize, j: usize) -> Result<S, QuasidetError> {
        let keep_r: Vec<usize> = (1..=self.a.rows()).filter(|r| !rows.contains(r)).collect();
        let keep_c: Vec<usize> = (1..=self.a.cols()).filter(|c| !cols.contains(c)).collect();
        self.keep(&keep_r, &keep_c, i, j)
    }

    /// `|A_{R,C}|_{ij}` for the kept rows `R` and columns `C` (order is
    /// irrelevant to the value).
    pub fn keep(&self, rows: &[usize], cols: &[usize], i: usize, j: usize) -> Result<S, QuasidetError> {
        if rows.len() != cols.len() {
            return Err(QuasidetError::ShapeMismatch(format!("{}x{} submatrix is not square", rows.len(), cols.len())));
        }
        for &r in rows {
            if r == 0 || r > self.a.rows() {
                return Err(QuasidetError::IndexOutOfRange { index: r, bound: self.a.rows() });
            }
        }
        for &c in cols {
            if c == 0 || c > self.a.cols() {
                return Err(QuasidetError::IndexOutOfRange { index: c, bound: self.a.cols() });
            }
        }
        if !rows.contains(&i) || !cols.contains(&j) {
            return Err(QuasidetError::ShapeMismatch(format!("position ({i},{j}) not in the submatrix")));
        }
        self.value(mask(rows.iter().copied()), mask(cols.iter().copied()), i, j)
    }

    fn value(&self, rows: u32, cols: u32, i: usize, j: usize) -> Result<S, QuasidetError> {
        let key = (rows, cols, i, j);
        if let Some(v) = self.memo.borrow().get(&key) {
            return v.clone();
        }
        let v = self.compute(rows, cols, i, j);
        self.memo.borrow_mut().insert(key, v.clone());
        v
    }

    fn inverse(&self, rows: u32, cols: u32, r: usize, s: usize) -> Result<Option<S>, QuasidetError> {
        let key = (rows, cols, r, s);
        if let Some(v) = self.inverses.borrow().get(&key) {
            return Ok(v.clone());
        }
        let v = self.value(rows, cols, r, s)?.try_inverse().ok();
        self.inverses.borrow_mut().insert(key, v.clone());
        Ok(v)
    }

    fn compute(&self, rows: u32, cols: u32, i: usize, j: usize) -> Result<S, QuasidetError> {
        let a = self.a;
        let inner_rows = rows & !(1 << (i - 1));
        let inner_cols = cols & !(1 << (j - 1));
        let mut acc = a.get(i, j).clone();
        for r in members(inner_rows) {
            for s in members(inner_cols) {
                let inv = self.inverse(inner_rows, inner_cols, r, s)?.ok_or_else(|| QuasidetError::Undefined {
                    position: (r, s),
                    reason: format!("inner quasideterminant at ({r},{s}) of the minor for ({i},{j}) is zero"),
                })?;
                acc = acc.sub(&a.get(i, s).mul(&inv).mul(a.get(r, j)));
            }
        }
        Ok(acc)
    }
}
