use super::chain::*;
use super::clearing::*;
use super::*;
use crate::check::Status;
use crate::scalars::Rational;

fn lp(terms: &[(i32, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, Rational::from_integer(c))))
}

fn g(i: usize, j: usize) -> Generator {
    Generator::new(i, j)
}

#[test]
fn qdet_small() {
    let ctx = AlgebraContext::new(3, 3);
    assert_eq!(qdet(&ctx, &[2], &[3]).unwrap(), NCPoly::x(&ctx, 2, 3).unwrap());
    let two = qdet(&ctx, &[1, 2], &[1, 2]).unwrap();
    let expect = NCPoly::word(&ctx, &[g(1, 1), g(2, 2)])
        .unwrap()
        .sub(&NCPoly::word(&ctx, &[g(1, 2), g(2, 1)]).unwrap().scale(&lp(&[(-1, 1)])))
        .unwrap();
    assert_eq!(two, expect);
    let three = qdet(&ctx, &[1, 2, 3], &[1, 2, 3]).unwrap();
    // six permutation words, coefficients (−q)^{−ℓ} before reduction; the
    // q = 1 image is the classical determinant
    let x = DivMatrix::from_fn(3, 3, CommPoly::x);
    assert_eq!(specialize_q1(&three), det_cofactor(&x).unwrap());
    assert_eq!(qdet(&ctx, &[], &[]).unwrap(), NCPoly::one(&ctx));
    assert!(qdet(&ctx, &[1, 2], &[1]).is_err());
}

#[test]
fn minor_symbols() {
    let s = MinorSymbol::new(vec![3, 1, 2]);
    assert_eq!(s.to_string(), "[3 1 2]");
    let (e, c) = s.canonical().unwrap();
    assert_eq!((e, c.rows()), (-2, &[1, 2, 3][..]));
    assert!(MinorSymbol::new(vec![1, 1]).canonical().is_none());
    assert_eq!(MinorSymbol::with_cols(vec![2, 3], vec![2, 3]).unwrap().to_string(), "[2 3|2 3]");
    assert!(MinorSymbol::with_cols(vec![2, 3], vec![3, 2]).is_err());
}

#[test]
fn alternating() {
    for n in 1..=3 {
        let ctx = AlgebraContext::new(n, n);
        for rows in (0..n).map(|_| 1..=n).multi_cartesian_product() {
            assert!(verify_q_alternating(&ctx, &rows).unwrap().is_pass(), "{rows:?}");
        }
    }
    let ctx = AlgebraContext::new(2, 2);
    let swapped = qdet(&ctx, &[2, 1], &[1, 2]).unwrap();
    assert_eq!(swapped, qdet(&ctx, &[1, 2], &[1, 2]).unwrap().scale(&LaurentPoly::neg_q_pow(-1)));
}

#[test]
fn centrality_antipode_inverse() {
    for n in 1..=3 {
        let ctx = AlgebraContext::new(n, n);
        assert!(verify_centrality(&ctx).unwrap().is_pass(), "n={n}");
        assert!(verify_antipode(&ctx).unwrap().is_pass(), "n={n}");
        assert!(verify_inverse_genericity(&ctx).unwrap().is_pass(), "n={n}");
    }
    let ctx = AlgebraContext::new(2, 2);
    let s = antipode(&ctx).unwrap();
    assert_eq!(s[0][0], NCPoly::x(&ctx, 2, 2).unwrap());
    assert_eq!(s[0][1], NCPoly::x(&ctx, 1, 2).unwrap().scale(&lp(&[(1, -1)])));
    assert_eq!(s[1][0], NCPoly::x(&ctx, 2, 1).unwrap().scale(&lp(&[(-1, -1)])));
    let one = AlgebraContext::new(1, 1);
    assert_eq!(antipode(&one).unwrap()[0][0], NCPoly::one(&one));
}

#[test]
fn faulty_rules_are_caught() {
    let ctx = AlgebraContext::with_fault(2, 2);
    assert!(verify_centrality(&ctx).unwrap().is_fail());
}

#[test]
fn multiplicativity() {
    for n in 1..=2 {
        assert!(verify_multiplicativity(n).unwrap().is_pass(), "n={n}");
    }
}

#[test]
fn weak_qcommute_and_exponents() {
    let ctx = AlgebraContext::new(4, 2);
    let minors = Minors::new(&ctx);
    assert!(verify_weak_qcommute(&minors, 1, 2, &[3]).unwrap().is_pass());
    assert!(verify_weak_qcommute(&minors, 2, 3, &[4]).unwrap().is_pass());
    let one_col = AlgebraContext::new(2, 1);
    assert!(verify_weak_qcommute(&Minors::new(&one_col), 1, 2, &[]).unwrap().is_pass());
    let a = MinorSymbol::new(vec![1, 2]);
    assert_eq!(minors.q_commute_exponent(&a, &a).unwrap(), Some(0));
    let nested = MinorSymbol::new(vec![1]);
    assert_eq!(minors.q_commute_exponent(&a, &nested).unwrap(), Some(0));
    assert!(minors.q_commute_exponent(&a, &MinorSymbol::new(vec![3, 4])).unwrap().is_some());
    assert_eq!(minors.q_commute_exponent(&MinorSymbol::new(vec![1, 3]), &MinorSymbol::new(vec![2, 4])).unwrap(), None);
}

#[test]
fn last_minor() {
    let ctx = AlgebraContext::new(4, 2);
    let minors = Minors::new(&ctx);
    for i in [[3, 4], [1, 2], [1, 3], [2, 4]] {
        assert!(verify_last_minor_commutation(&minors, &i).unwrap().is_pass(), "{i:?}");
    }
}

#[test]
fn young_small_cases() {
    let ctx = AlgebraContext::new(2, 1);
    assert!(verify_young_symmetry(&Minors::new(&ctx), 1, 1, &[1, 2], &[]).unwrap().is_pass());
    let ctx = AlgebraContext::new(4, 2);
    let minors = Minors::new(&ctx);
    assert!(verify_young_symmetry(&minors, 2, 1, &[1, 2, 3], &[4]).unwrap().is_pass());
    assert!(verify_young_symmetry(&minors, 2, 2, &[1, 2, 3, 4], &[]).unwrap().is_pass());
    let (got, expected, zero) = intro_young_at_q1().unwrap();
    assert_eq!(got, expected);
    assert!(zero);
}

#[test]
fn reduction() {
    let ctx = AlgebraContext::new(4, 2);
    let minors = Minors::new(&ctx);
    assert!(verify_reduction(&minors, 2, 2, &[1, 2, 3, 4], &[]).unwrap().is_pass());
    assert!(verify_reduction(&minors, 2, 1, &[1, 2, 4], &[3]).unwrap().is_pass());
    assert!(verify_reduction_scalar(&[1, 2, 3, 4], 2).is_pass());
    assert_eq!(q_even_sum(2), lp(&[(0, 1), (2, 1)]));
    assert_eq!(q_even_sum(1), LaurentPoly::one());
}

#[test]
fn classical_laplace() {
    assert!(verify_classical_laplace(2, &[1, 2], 1).unwrap().is_pass());
    assert!(verify_classical_laplace(4, &[1, 2, 3, 4], 2).unwrap().is_pass());
    assert!(verify_classical_laplace(3, &[2, 3, 1], 1).unwrap().is_pass());
}

#[test]
fn clearing_engine_basics() {
    let ctx = AlgebraContext::new(4, 2);
    let minors = Minors::new(&ctx);
    let clearing = Clearing::new(&minors);
    let a = MinorSymbol::new(vec![1, 2]);
    let b = MinorSymbol::new(vec![1, 3]);
    // [12][13]^-1 [13] - [12] = 0
    let sum = FracSum::equation(vec![MinorRatioWord::one().times(a.clone()).over(b.clone()).times(b.clone())], vec![MinorRatioWord::one().times(a.clone())]);
    assert!(clearing.verify_zero(&sum).unwrap().is_pass());
    // [13]^-1 [12] = q^c [12][13]^-1 with the weak exponent
    let c = clearing.certificate(&b, &a).unwrap();
    let sum = FracSum::equation(
        vec![MinorRatioWord::one().over(b.clone()).times(a.clone())],
        vec![MinorRatioWord::scalar(LaurentPoly::q_pow(-c)).times(a.clone()).over(b.clone())],
    );
    assert!(clearing.verify_zero(&sum).unwrap().is_pass());
    let wrong = FracSum::equation(vec![MinorRatioWord::one().over(b.clone()).times(a.clone())], vec![MinorRatioWord::one().times(a.clone()).over(b.clone())]);
    assert!(clearing.verify_zero(&wrong).unwrap().is_fail());
    // [13] and [24] do not q-commute
    let d = MinorSymbol::new(vec![2, 4]);
    let stuck = FracSum::new(vec![MinorRatioWord::one().times(b.clone()).over(d.clone()).times(b.clone())]);
    assert!(matches!(clearing.clear_with(&stuck, ClearStrategy::AllRight), Err(GrassmannError::NoCommutationCertificate { .. })));
    let vanish = FracSum::new(vec![MinorRatioWord::one().over(MinorSymbol::new(vec![2, 2]))]);
    assert!(matches!(clearing.clear(&vanish), Err(GrassmannError::ZeroDenominator(_))));
}

#[test]
fn boxed_identities() {
    let ctx1 = AlgebraContext::new(3, 1);
    let m1 = Minors::new(&ctx1);
    assert!(verify_boxed_identities(&Clearing::new(&m1), &[2], 2, 3, &[]).unwrap().is_pass());
    let ctx = AlgebraContext::new(4, 2);
    let minors = Minors::new(&ctx);
    let clearing = Clearing::new(&minors);
    assert!(verify_boxed_identities(&clearing, &[1, 2], 1, 2, &[3]).unwrap().is_pass());
    assert!(verify_boxed_identities(&clearing, &[3, 1], 3, 4, &[2]).unwrap().is_pass());
    let ctx3 = AlgebraContext::new(4, 3);
    let m3 = Minors::new(&ctx3);
    let o = verify_boxed_identities(&Clearing::new(&m3), &[1, 2, 3], 1, 4, &[2, 3]).unwrap();
    assert!(o.is_pass(), "{o:?}");
}

#[test]
fn quant_via_quasi() {
    let one = AlgebraContext::new(1, 1);
    let m1 = Minors::new(&one);
    assert!(verify_quant_via_quasi(&Clearing::new(&m1), &[1], &[1]).unwrap().is_pass());
    let ctx = AlgebraContext::new(2, 2);
    let minors = Minors::new(&ctx);
    let clearing = Clearing::new(&minors);
    assert!(verify_quant_via_quasi(&clearing, &[1, 2], &[1, 2]).unwrap().is_pass());
    assert!(verify_quant_via_quasi(&clearing, &[2, 1], &[1, 2]).unwrap().is_pass());
    let ctx3 = AlgebraContext::new(3, 3);
    let m3 = Minors::new(&ctx3);
    let c3 = Clearing::new(&m3);
    for rows in (1..=3).permutations(3) {
        let o = verify_quant_via_quasi(&c3, &rows, &[1, 2, 3]);
        assert!(matches!(&o, Ok(x) if x.is_pass()), "{rows:?}: {o:?}");
    }
}

#[test]
fn specialization_first_instance() {
    let ctx = AlgebraContext::new(4, 2);
    let minors = Minors::new(&ctx);
    let clearing = Clearing::new(&minors);
    for i in [1, 2, 3] {
        let rep = verify_specialization(&clearing, 2, &[1, 2, 3], &[4], i).unwrap();
        for l in &rep.lines {
            assert!(l.outcome.is_pass(), "i={i} {}: {:?}", l.name, l.outcome);
        }
        assert_eq!(rep.lines.len(), 10);
    }
    let deg = verify_specialization(&clearing, 2, &[1, 1, 1], &[1], 1).unwrap();
    assert!(deg.degenerate);
    assert_eq!(deg.outcome().status, Status::Pass);
    assert!(verify_specialization(&clearing, 2, &[1, 2, 3], &[3], 3).is_err());
}

#[test]
fn chain_line_with_wrong_exponent_is_rejected() {
    // [L][iM] = Σ q^{c} (−q)^{ℓ(λ|L_λ)} [iL_λ][λM] with I = {1,2,3}, J = {4},
    // i = 1, L = {2,3}; flipping c must break it.
    let ctx = AlgebraContext::new(4, 2);
    let minors = Minors::new(&ctx);
    let clearing = Clearing::new(&minors);
    let ms = |v: Vec<usize>| MinorSymbol::new(v);
    let line = |sign: i32| {
        let lhs = MinorRatioWord::one().times(ms(vec![2, 3])).times(ms(vec![1, 4]));
        let rhs = vec![
            MinorRatioWord::scalar(LaurentPoly::q_pow(sign)).times(ms(vec![1, 3])).times(ms(vec![2, 4])),
            MinorRatioWord::scalar(LaurentPoly::q_pow(sign).mul(&LaurentPoly::neg_q_pow(1))).times(ms(vec![1, 2])).times(ms(vec![3, 4])),
        ];
        FracSum::equation(vec![lhs], rhs)
    };
    assert!(clearing.verify_zero(&line(1)).unwrap().is_pass());
    assert!(clearing.verify_zero(&line(-1)).unwrap().is_fail());
}
