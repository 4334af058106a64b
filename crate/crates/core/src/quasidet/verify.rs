//! Identity checks for quasideterminants. Instances whose quasideterminants
//! do not exist come back as [`Status::Undefined`](crate::check::Status)
//! rather than failures.

use super::classical::det_cofactor;
use super::{quasidet, DivMatrix, Method, QuasidetError, QuasidetTable};
use crate::check::{Outcome, Tally};
use crate::scalars::{CommutativeScalar, Scalar};

fn undefined(e: &QuasidetError) -> Outcome {
    Outcome::undefined(e.to_string())
}

macro_rules! defined {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e @ QuasidetError::Undefined { .. }) | Err(e @ QuasidetError::Singular { .. }) => {
                return Ok(undefined(&e))
            }
            Err(e) => return Err(e),
        }
    };
}

fn inverse_or_undefined<S: Scalar>(x: &S, what: &str) -> Result<S, Outcome> {
    x.try_inverse().map_err(|_| Outcome::undefined(format!("{what} is zero")))
}

/// Recursive and border definitions give the same value at `(i, j)`.
pub fn verify_method_agreement<S: Scalar>(table: &QuasidetTable<S>, i: usize, j: usize) -> Result<Outcome, QuasidetError> {
    let rec = defined!(table.full(i, j));
    let bor = defined!(quasidet(table.matrix(), i, j, Method::Border));
    Ok(Outcome::from_bool(rec == bor, || format!("({i},{j}): recursive {rec} != border {bor}")))
}

/// `(|A|_{ij})⁻¹ = (A⁻¹)_{ji}`.
pub fn verify_inversion_law<S: Scalar>(
    table: &QuasidetTable<S>,
    inverse: &DivMatrix<S>,
    i: usize,
    j: usize,
) -> Result<Outcome, QuasidetError> {
    let q = defined!(table.full(i, j));
    let lhs = match inverse_or_undefined(&q, &format!("|A|_({i},{j})")) {
        Ok(v) => v,
        Err(o) => return Ok(o),
    };
    let rhs = inverse.get(j, i);
    Ok(Outcome::from_bool(&lhs == rhs, || format!("({i},{j}): |A|^-1 = {lhs} but (A^-1)_ji = {rhs}")))
}

/// On commutative scalars, `|A|_{ij} = (−1)^{i+j} det A / det A^{ij}` with
/// both determinants from cofactor expansion.
pub fn commutative_ratio_check<S: CommutativeScalar>(a: &DivMatrix<S>, i: usize, j: usize) -> Result<Outcome, QuasidetError> {
    let minor = det_cofactor(&a.submatrix_delete(&[i], &[j])?)?;
    if minor.is_zero() {
        return Err(QuasidetError::SingularMinor { i, j });
    }
    let det = det_cofactor(a)?;
    let mut rhs = det.mul(&minor.try_inverse().expect("nonzero"));
    if (i + j) % 2 == 1 {
        rhs = rhs.neg();
    }
    let lhs = quasidet(a, i, j, Method::Border)?;
    Ok(Outcome::from_bool(lhs == rhs, || format!("({i},{j}): quasidet {lhs} vs determinant ratio {rhs}")))
}

/// Elementary column operations.
#[derive(Debug, Clone, PartialEq)]
pub enum ElemTransform<S> {
    /// Column `j` moves to column `tau[j-1]`.
    Permute(Vec<usize>),
    /// Column `col` is multiplied on the right by `rho`.
    Rescale { col: usize, rho: S },
    /// Column `from`, times `rho` on the right, is added to column `to`.
    Add { from: usize, to: usize, rho: S },
}

impl<S: Scalar> ElemTransform<S> {
    pub fn apply(&self, a: &DivMatrix<S>) -> DivMatrix<S> {
        match self {
            ElemTransform::Permute(tau) => {
                let mut b = a.clone();
                for (j, &tj) in tau.iter().enumerate() {
                    for r in 1..=a.rows() {
                        b.set(r, tj, a.get(r, j + 1).clone());
                    }
                }
                b
            }
            ElemTransform::Rescale { col, rho } => {
                let mut b = a.clone();
                for r in 1..=a.rows() {
                    b.set(r, *col, a.get(r, *col).mul(rho));
                }
                b
            }
            ElemTransform::Add { from, to, rho } => {
                let mut b = a.clone();
                for r in 1..=a.rows() {
                    b.set(r, *to, a.get(r, *to).add(&a.get(r, *from).mul(rho)));
                }
                b
            }
        }
    }
}

/// Behaviour of `|A|_{ij}` under one elementary column transformation:
/// permutations relabel the column, rescaling column `j` multiplies on the
/// right, and adding to a column leaves `|A|_{ij}` unchanged for `j ≠ from`.
pub fn verify_elem_transform<S: Scalar>(
    a: &DivMatrix<S>,
    kind: &ElemTransform<S>,
    i: usize,
    j: usize,
) -> Result<Outcome, QuasidetError> {
    let b = kind.apply(a);
    let before = defined!(quasidet(a, i, j, Method::Border));
    let (after, expected) = match kind {
        ElemTransform::Permute(tau) => (defined!(quasidet(&b, i, tau[j - 1], Method::Border)), before),
        ElemTransform::Rescale { col, rho } => {
            let after = defined!(quasidet(&b, i, j, Method::Border));
            if *col == j {
                (after, before.mul(rho))
            } else {
                if rho.try_inverse().is_err() {
                    return Ok(Outcome::undefined("rescaling another column by a non-invertible factor"));
                }
                (after, before)
            }
        }
        ElemTransform::Add { from, .. } => {
            if *from == j {
                return Ok(Outcome::degenerate(format!("j = {j} equals the added column; no claim")));
            }
            (defined!(quasidet(&b, i, j, Method::Border)), before)
        }
    };
    Ok(Outcome::from_bool(after == expected, || format!("{kind:?} at ({i},{j}): got {after}, expected {expected}")))
}

/// Replaces column `s` with `Σ_{c≠s} col_c · λ_c`; `coeffs` lists the `λ_c`
/// for the other columns in increasing order.
pub fn with_dependent_column<S: Scalar>(a: &DivMatrix<S>, s: usize, coeffs: &[S]) -> DivMatrix<S> {
    let others: Vec<usize> = (1..=a.cols()).filter(|&c| c != s).collect();
    assert_eq!(others.len(), coeffs.len(), "one coefficient per other column");
    let mut b = a.clone();
    for r in 1..=a.rows() {
        let v = others.iter().zip(coeffs).fold(S::zero(), |acc, (&c, l)| acc.add(&a.get(r, c).mul(l)));
        b.set(r, s, v);
    }
    b
}

/// Replaces row `r` with `Σ_{t≠r} λ_t · row_t`.
pub fn with_dependent_row<S: Scalar>(a: &DivMatrix<S>, r: usize, coeffs: &[S]) -> DivMatrix<S> {
    let others: Vec<usize> = (1..=a.rows()).filter(|&t| t != r).collect();
    assert_eq!(others.len(), coeffs.len(), "one coefficient per other row");
    let mut b = a.clone();
    for c in 1..=a.cols() {
        let v = others.iter().zip(coeffs).fold(S::zero(), |acc, (&t, l)| acc.add(&l.mul(a.get(t, c))));
        b.set(r, c, v);
    }
    b
}

/// Column `s` a right-linear combination of the others forces
/// `|A|_{rs} = 0` at every row where it is defined.
pub fn verify_dependent_column<S: Scalar>(a: &DivMatrix<S>, s: usize, coeffs: &[S]) -> Result<Outcome, QuasidetError> {
    let b = with_dependent_column(a, s, coeffs);
    let mut tally = Tally::default();
    for r in 1..=b.rows() {
        let outcome = match quasidet(&b, r, s, Method::Border) {
            Ok(v) => Outcome::from_bool(v.is_zero(), || format!("|A|_({r},{s}) = {v}, expected 0")),
            Err(e @ QuasidetError::Undefined { .. }) => undefined(&e),
            Err(e) => return Err(e),
        };
        tally.record(&outcome);
    }
    Ok(tally_outcome(&tally))
}

/// Row version: row `r` a left-linear combination of the others forces
/// `|A|_{rs} = 0` for every column `s` where defined.
pub fn verify_dependent_row<S: Scalar>(a: &DivMatrix<S>, r: usize, coeffs: &[S]) -> Result<Outcome, QuasidetError> {
    let b = with_dependent_row(a, r, coeffs);
    let mut tally = Tally::default();
    for s in 1..=b.cols() {
        let outcome = match quasidet(&b, r, s, Method::Border) {
            Ok(v) => Outcome::from_bool(v.is_zero(), || format!("|A|_({r},{s}) = {v}, expected 0")),
            Err(e @ QuasidetError::Undefined { .. }) => undefined(&e),
            Err(e) => return Err(e),
        };
        tally.record(&outcome);
    }
    Ok(tally_outcome(&tally))
}

pub(crate) fn tally_outcome(t: &Tally) -> Outcome {
    match t.status() {
        crate::check::Status::Fail => Outcome::fail(t.first_failure.clone().unwrap_or_default()),
        crate::check::Status::Undefined => Outcome::undefined(t.first_undefined.clone().unwrap_or_default()),
        crate::check::Status::Degenerate => Outcome::degenerate("all instances degenerate"),
        crate::check::Status::Pass => Outcome::pass(),
    }
}

/// `−|A^{kj}|_{il}⁻¹ |A|_{ij} = |A^{ij}|_{kl}⁻¹ |A|_{kj}` for `l ≠ j`,
/// `i ≠ k`.
pub fn verify_homological<S: Scalar>(
    table: &QuasidetTable<S>,
    i: usize,
    j: usize,
    k: usize,
    l: usize,
) -> Result<Outcome, QuasidetError> {
    if l == j || i == k {
        return Err(QuasidetError::ShapeMismatch(format!("homological relation needs l != j and i != k, got ({i},{j},{k},{l})")));
    }
    let a_ij = defined!(table.full(i, j));
    let a_kj = defined!(table.full(k, j));
    let left_inner = defined!(table.deleted(&[k], &[j], i, l));
    let right_inner = defined!(table.deleted(&[i], &[j], k, l));
    let (li, ri) = match (
        inverse_or_undefined(&left_inner, "|A^{kj}|_{il}"),
        inverse_or_undefined(&right_inner, "|A^{ij}|_{kl}"),
    ) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(o), _) | (_, Err(o)) => return Ok(o),
    };
    let lhs = li.mul(&a_ij).neg();
    let rhs = ri.mul(&a_kj);
    Ok(Outcome::from_bool(lhs == rhs, || format!("(i,j,k,l)=({i},{j},{k},{l}): {lhs} != {rhs}")))
}

/// One-column expansion
/// `|A|_{rs} = a_rs − Σ_{i≠r} |A^{is}|_{rl} |A^{rs}|_{il}⁻¹ a_is` for `l ≠ s`.
pub fn verify_col_expansion<S: Scalar>(
    table: &QuasidetTable<S>,
    r: usize,
    s: usize,
    l: usize,
) -> Result<Outcome, QuasidetError> {
    if l == s {
        return Err(QuasidetError::ShapeMismatch(format!("expansion column l={l} must differ from s={s}")));
    }
    let a = table.matrix();
    let lhs = defined!(table.full(r, s));
    let mut rhs = a.get(r, s).clone();
    for i in (1..=a.rows()).filter(|&i| i != r) {
        let top = defined!(table.deleted(&[i], &[s], r, l));
        let inner = defined!(table.deleted(&[r], &[s], i, l));
        let inv = match inverse_or_undefined(&inner, "|A^{rs}|_{il}") {
            Ok(v) => v,
            Err(o) => return Ok(o),
        };
        rhs = rhs.sub(&top.mul(&inv).mul(a.get(i, s)));
    }
    Ok(Outcome::from_bool(lhs == rhs, || format!("(r,s,l)=({r},{s},{l}): {lhs} != {rhs}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::Status;
    use crate::scalars::{Quaternion, Rational};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    #[test]
    fn ratio_check_examples() {
        let a = DivMatrix::<Rational>::from_ints(&[&[1, 2], &[3, 4]]);
        assert!(commutative_ratio_check(&a, 1, 1).unwrap().is_pass());
        let id = DivMatrix::<Rational>::identity(3);
        assert!(commutative_ratio_check(&id, 2, 2).unwrap().is_pass());
        assert_eq!(quasidet(&id, 2, 2, Method::Border).unwrap(), Rational::one());
        // det A = 0, det A^{11} != 0: the quasideterminant vanishes.
        let sing = DivMatrix::<Rational>::from_ints(&[&[1, 2, 3], &[4, 5, 6], &[5, 7, 9]]);
        assert!(commutative_ratio_check(&sing, 1, 1).unwrap().is_pass());
        assert_eq!(quasidet(&sing, 1, 1, Method::Border).unwrap(), Rational::zero());
        let z = DivMatrix::<Rational>::from_ints(&[&[1, 2], &[3, 0]]);
        assert_eq!(commutative_ratio_check(&z, 1, 1).unwrap_err(), QuasidetError::SingularMinor { i: 1, j: 1 });
    }

    #[test]
    fn elementary_transforms() {
        let mut rng = rng(11);
        let a = DivMatrix::random_quaternion(3, 3, &mut rng);
        let id = ElemTransform::Permute(vec![1, 2, 3]);
        assert!(verify_elem_transform(&a, &id, 2, 3).unwrap().is_pass());
        let perm = ElemTransform::Permute(vec![3, 1, 2]);
        let rho = Quaternion::random_small(&mut rng);
        let rescale = ElemTransform::Rescale { col: 2, rho: rho.clone() };
        let add = ElemTransform::Add { from: 1, to: 3, rho };
        for i in 1..=3 {
            for j in 1..=3 {
                assert!(verify_elem_transform(&a, &perm, i, j).unwrap().is_pass());
                assert!(verify_elem_transform(&a, &rescale, i, j).unwrap().is_pass());
                let o = verify_elem_transform(&a, &add, i, j).unwrap();
                if j == 1 {
                    assert_eq!(o.status, Status::Degenerate);
                } else {
                    assert!(o.is_pass(), "{o:?}");
                }
            }
        }
    }

    #[test]
    fn dependent_columns_vanish() {
        let mut rng = rng(12);
        let a = DivMatrix::random_quaternion(3, 3, &mut rng);
        let one = Quaternion::one();
        let zero = Quaternion::zero();
        // duplicate column 1 into column 3
        assert!(verify_dependent_column(&a, 3, &[one.clone(), zero.clone()]).unwrap().is_pass());
        // all-zero combination
        let zeroed = with_dependent_column(&a, 2, &[zero.clone(), zero.clone()]);
        assert_eq!(quasidet(&zeroed, 1, 2, Method::Border).unwrap(), zero);
        let b = DivMatrix::random_quaternion(4, 4, &mut rng);
        let coeffs = vec![Quaternion::random_small(&mut rng), Quaternion::zero(), Quaternion::random_small(&mut rng)];
        assert!(verify_dependent_column(&b, 2, &coeffs).unwrap().is_pass());
        assert!(verify_dependent_row(&b, 3, &coeffs).unwrap().is_pass());
    }

    #[test]
    fn homological_relations() {
        let mut rng = rng(13);
        let a = DivMatrix::random_quaternion(3, 3, &mut rng);
        let t = QuasidetTable::new(&a);
        assert!(verify_homological(&t, 1, 1, 2, 2).unwrap().is_pass());

        let r = DivMatrix::<Rational>::from_ints(&[&[2, 7, 1], &[3, 5, 11], &[13, 4, 6]]);
        let tr = QuasidetTable::new(&r);
        let o = verify_homological(&tr, 1, 2, 3, 1).unwrap();
        assert!(o.is_pass(), "{o:?}");

        let b = DivMatrix::random_quaternion(4, 4, &mut rng);
        let tb = QuasidetTable::new(&b);
        for i in 1..=4 {
            for j in 1..=4 {
                for k in (1..=4).filter(|&k| k != i) {
                    for l in (1..=4).filter(|&l| l != j) {
                        assert!(verify_homological(&tb, i, j, k, l).unwrap().is_pass());
                    }
                }
            }
        }
    }

    #[test]
    fn column_expansion() {
        let mut rng = rng(14);
        let a = DivMatrix::random_quaternion(2, 2, &mut rng);
        let t = QuasidetTable::new(&a);
        assert!(verify_col_expansion(&t, 1, 1, 2).unwrap().is_pass());
        let b = DivMatrix::random_quaternion(3, 3, &mut rng);
        let tb = QuasidetTable::new(&b);
        for r in 1..=3 {
            for s in 1..=3 {
                for l in (1..=3).filter(|&l| l != s) {
                    assert!(verify_col_expansion(&tb, r, s, l).unwrap().is_pass());
                }
            }
        }
        let c = DivMatrix::<Rational>::from_ints(&[&[2, 7, 1, 8], &[3, 5, 11, 2], &[13, 4, 6, 9], &[1, 12, 5, 3]]);
        assert!(verify_col_expansion(&QuasidetTable::new(&c), 1, 1, 2).unwrap().is_pass());
    }

    #[test]
    fn inversion_law() {
        let mut rng = rng(15);
        let a = DivMatrix::random_quaternion(4, 4, &mut rng);
        let inv = a.dr_inverse().unwrap();
        let t = QuasidetTable::new(&a);
        for i in 1..=4 {
            for j in 1..=4 {
                assert!(verify_inversion_law(&t, &inv, i, j).unwrap().is_pass());
                assert!(verify_method_agreement(&t, i, j).unwrap().is_pass());
            }
        }
    }
}
