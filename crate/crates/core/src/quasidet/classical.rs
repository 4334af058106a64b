//! Classical determinants, used as independent oracles on commutative
//! scalars.

use super::{DivMatrix, QuasidetError};
use crate::combinatorics::{subsets, tuple_length};
use crate::scalars::CommutativeScalar;

/// Cofactor expansion along the first row. Exponential, meant for the small
/// sizes the oracles run at.
pub fn det_cofactor<S: CommutativeScalar>(a: &DivMatrix<S>) -> Result<S, QuasidetError> {
    if !a.is_square() {
        return Err(QuasidetError::ShapeMismatch(format!("{}x{} is not square", a.rows(), a.cols())));
    }
    let cols: Vec<usize> = (1..=a.cols()).collect();
    Ok(expand(a, 1, &cols))
}

fn expand<S: CommutativeScalar>(a: &DivMatrix<S>, row: usize, cols: &[usize]) -> S {
    if cols.is_empty() {
        return S::one();
    }
    let mut acc = S::zero();
    for (pos, &c) in cols.iter().enumerate() {
        let entry = a.get(row, c);
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry.mul(&expand(a, row + 1, &rest));
        acc = if pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Determinant of `A_{rows, cols}` with both index lists taken in the given
/// order.
pub fn minor<S: CommutativeScalar>(a: &DivMatrix<S>, rows: &[usize], cols: &[usize]) -> Result<S, QuasidetError> {
    det_cofactor(&a.submatrix_keep(rows, cols)?)
}

/// Right-hand side of the generalized Laplace expansion down the columns
/// `J[..p]`:
/// `(−1)^{ℓ(J)} Σ (−1)^{ℓ(I|I')} |A_{I, J[..p]}| · |A_{I', J[p..]}|` over
/// all splittings of the rows into increasing `I` (size `p`) and `I'`.
pub fn laplace_expansion<S: CommutativeScalar>(a: &DivMatrix<S>, col_order: &[usize], p: usize) -> Result<S, QuasidetError> {
    let m = a.rows();
    if !a.is_square() || col_order.len() != m || p > m {
        return Err(QuasidetError::ShapeMismatch("bad Laplace expansion arguments".into()));
    }
    let all: Vec<usize> = (1..=m).collect();
    let mut acc = S::zero();
    for top in subsets(&all, p).expect("p <= m") {
        let rest: Vec<usize> = all.iter().copied().filter(|x| !top.contains(x)).collect();
        let sign = tuple_length(&[top.clone(), rest.clone()].concat());
        let term = minor(a, &top, &col_order[..p])?.mul(&minor(a, &rest, &col_order[p..])?);
        acc = if sign % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    Ok(if tuple_length(col_order) % 2 == 0 { acc } else { acc.neg() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Rational, Scalar};

    #[test]
    fn small_determinants() {
        let a = DivMatrix::<Rational>::from_ints(&[&[1, 2], &[3, 4]]);
        assert_eq!(det_cofactor(&a).unwrap(), Rational::from_integer(-2));
        let b = DivMatrix::<Rational>::from_ints(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]]);
        // 2(3-2) - 0 + 1(1-3) = 0
        assert_eq!(det_cofactor(&b).unwrap(), Rational::zero());
        assert_eq!(det_cofactor(&DivMatrix::<Rational>::identity(4)).unwrap(), Rational::one());
    }

    #[test]
    fn laplace_matches_cofactor() {
        let a = DivMatrix::<Rational>::from_ints(&[&[2, -1, 3, 0], &[1, 4, -2, 5], &[0, 2, 1, -3], &[3, 1, 1, 2]]);
        let det = det_cofactor(&a).unwrap();
        for p in 0..=4 {
            assert_eq!(laplace_expansion(&a, &[1, 2, 3, 4], p).unwrap(), det, "p={p}");
        }
        assert_eq!(laplace_expansion(&a, &[3, 1, 4, 2], 2).unwrap(), det);
    }
}
