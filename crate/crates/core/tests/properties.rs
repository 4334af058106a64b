use std::sync::Arc;

use proptest::prelude::*;

use ncgrass::check::trial_rng;
use ncgrass::grassmann::{young_instances, young_terms, Minors};
use ncgrass::harness::{render, run, Format, Suite, SuiteConfig};
use ncgrass::quantum::{check_subcontext, specialize_q1, AlgebraContext, CommPoly, Generator, NCPoly};
use ncgrass::quasi_plucker::qp_trial;
use ncgrass::quasidet::classical::minor;
use ncgrass::quasidet::verify::{commutative_ratio_check, verify_dependent_row, verify_inversion_law, verify_method_agreement};
use ncgrass::quasidet::{DivMatrix, QuasidetTable};
use ncgrass::scalars::{LaurentPoly, Quaternion, Rational, Scalar};

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d))
}

fn quaternion() -> impl Strategy<Value = Quaternion> {
    (rational(), rational(), rational(), rational()).prop_map(|(a, b, c, d)| Quaternion::new(a, b, c, d))
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    proptest::collection::vec((-4i32..=4, -9i64..=9), 0..5)
        .prop_map(|t| LaurentPoly::from_terms(t.into_iter().map(|(e, c)| (e, Rational::from_integer(c)))))
}

fn ring_axioms<S: Scalar>(x: &S, y: &S, z: &S) -> bool {
    x.mul(y).mul(z) == x.mul(&y.mul(z))
        && x.mul(&y.add(z)) == x.mul(y).add(&x.mul(z))
        && y.add(z).mul(x) == y.mul(x).add(&z.mul(x))
        && x.add(y).add(z) == x.add(&y.add(z))
        && x.sub(x).is_zero()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn rational_ring(x in rational(), y in rational(), z in rational()) {
        prop_assert!(ring_axioms(&x, &y, &z));
        if !x.is_zero() {
            prop_assert_eq!(x.try_inverse().unwrap().try_inverse().unwrap(), x.clone());
        }
    }

    #[test]
    fn quaternion_ring_and_norm(x in quaternion(), y in quaternion(), z in quaternion()) {
        prop_assert!(ring_axioms(&x, &y, &z));
        prop_assert_eq!(x.mul(&y).norm(), &x.norm() * &y.norm());
        if !x.is_zero() {
            let inv = x.try_inverse().unwrap();
            prop_assert!(x.mul(&inv).is_one() && inv.mul(&x).is_one());
            prop_assert_eq!(inv.try_inverse().unwrap(), x.clone());
        }
        let [a, b, c, d] = x.components();
        prop_assert_eq!(Quaternion::new(a, b, c, d), x);
    }

    #[test]
    fn laurent_ring_and_evaluation(x in laurent(), y in laurent(), z in laurent(), v in (1i64..=7, 1i64..=5)) {
        prop_assert!(ring_axioms(&x, &y, &z));
        let v = Rational::new(v.0, v.1);
        let ev = |p: &LaurentPoly| p.eval_q(&v).unwrap();
        prop_assert_eq!(ev(&x.mul(&y)), &ev(&x) * &ev(&y));
        prop_assert_eq!(ev(&x.add(&y)), &ev(&x) + &ev(&y));
    }

    #[test]
    fn definitions_agree(seed in any::<u64>(), n in 2usize..=4) {
        let a = DivMatrix::random_quaternion(n, n, &mut trial_rng(seed, "prop", &[n as u64], 0));
        let table = QuasidetTable::new(&a);
        for i in 1..=n {
            for j in 1..=n {
                prop_assert!(!verify_method_agreement(&table, i, j).unwrap().is_fail());
            }
        }
    }

    #[test]
    fn inversion_law_4x4(seed in any::<u64>()) {
        let a = DivMatrix::random_quaternion(4, 4, &mut trial_rng(seed, "prop-inv", &[], 0));
        if let Ok(inv) = a.dr_inverse() {
            let table = QuasidetTable::new(&a);
            for i in 1..=4 {
                for j in 1..=4 {
                    prop_assert!(!verify_inversion_law(&table, &inv, i, j).unwrap().is_fail());
                }
            }
        }
    }

    #[test]
    fn commutative_collapse(seed in any::<u64>(), n in 1usize..=5) {
        let a = DivMatrix::<Rational>::random_rational(n, n, &mut trial_rng(seed, "prop-comm", &[n as u64], 0));
        for i in 1..=n {
            for j in 1..=n {
                if let Ok(o) = commutative_ratio_check(&a, i, j) {
                    prop_assert!(o.is_pass(), "{:?}", o);
                }
            }
        }
    }

    #[test]
    fn dependent_row_vanishes(seed in any::<u64>(), n in 2usize..=4) {
        let mut rng = trial_rng(seed, "prop-dep", &[n as u64], 0);
        let a = DivMatrix::random_quaternion(n, n, &mut rng);
        let coeffs: Vec<Quaternion> = (1..n).map(|_| Quaternion::random_small(&mut rng)).collect();
        let r = 1 + (seed as usize % n);
        prop_assert!(!verify_dependent_row(&a, r, &coeffs).unwrap().is_fail());
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 8, ..ProptestConfig::default() })]

    #[test]
    fn quasi_plucker_trials(seed in any::<u64>(), dims in prop::sample::select(vec![(3usize, 2usize), (4, 2), (4, 3)])) {
        let ledger = qp_trial(dims.0, dims.1, seed, 0).unwrap();
        prop_assert!(ledger.all_pass(), "{:?}", ledger);
        prop_assert!(ledger.get("qp_cocycle_closure").is_some_and(|t| t.pass > 0));
    }

    #[test]
    fn normal_form_idempotent_and_q1_stable(word in proptest::collection::vec((1usize..=3, 1usize..=2), 0..6)) {
        let ctx = AlgebraContext::new(3, 2);
        let w: Vec<Generator> = word.iter().map(|&(i, j)| Generator::new(i, j)).collect();
        let p = NCPoly::word(&ctx, &w).unwrap();
        let raw: Vec<(Vec<Generator>, LaurentPoly)> = p.terms().iter().map(|(k, c)| (k.0.clone(), c.clone())).collect();
        prop_assert_eq!(NCPoly::normal_form(&ctx, &raw).unwrap(), p.clone());
        let commutative = w.iter().fold(CommPoly::one(), |acc, g| acc.mul(&CommPoly::var(*g)));
        prop_assert_eq!(specialize_q1(&p), commutative);
    }

    #[test]
    fn submatrices_stay_generic(seed in any::<u64>(), rows in prop::sample::subsequence(vec![1usize, 2, 3], 1..=3), cols in prop::sample::subsequence(vec![1usize, 2, 3], 1..=3)) {
        let big = AlgebraContext::new(3, 3);
        prop_assert!(check_subcontext(&big, &rows, &cols, seed, 5).unwrap());
    }

    /// At q = 1 each quantum Young sum becomes the classical relation among
    /// ordinary minors, term by term.
    #[test]
    fn young_sums_specialize_classically(pick in any::<prop::sample::Index>(), r in 1usize..=2) {
        let (d, n) = (2, 5);
        let ctx: Arc<AlgebraContext> = AlgebraContext::new(n, d);
        let minors = Minors::new(&ctx);
        let x = DivMatrix::from_fn(n, d, CommPoly::x);
        let instances = young_instances(d, n, r);
        let (i, j) = pick.get(&instances);
        let mut classical = CommPoly::zero();
        for (e, a, b, _) in young_terms(i, j, r) {
            let q1a = specialize_q1(&minors.eval(&a).unwrap());
            let q1b = specialize_q1(&minors.eval(&b).unwrap());
            let ca = minor(&x, a.rows(), &(1..=d).collect::<Vec<_>>()).unwrap();
            let cb = minor(&x, b.rows(), &(1..=d).collect::<Vec<_>>()).unwrap();
            prop_assert_eq!(&q1a, &ca);
            prop_assert_eq!(&q1b, &cb);
            let term = ca.mul(&cb);
            classical = if e.rem_euclid(2) == 0 { classical.add(&term) } else { classical.sub(&term) };
        }
        prop_assert!(classical.is_zero());
    }

    #[test]
    fn reports_are_deterministic(seed in any::<u64>()) {
        let c = SuiteConfig { suite: Suite::Quasidet, seed, trials: 1, max_n: 3, ..SuiteConfig::default() };
        let a = run(&c);
        prop_assert_eq!(render(&a, Format::Json), render(&run(&c), Format::Json));
        prop_assert_eq!(a.success(), a.summary.fail == 0);
    }
}
