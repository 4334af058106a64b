//! Job lists for each suite.

use std::sync::Arc;

use itertools::Itertools;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;
use serde_json::{json, Value};

use super::{CheckRecord, Job, Suite, SuiteConfig};
use crate::check::{trial_rng, Ledger, Outcome, Status, Tally};
use crate::combinatorics::{binomial, subsets};
use crate::grassmann::chain::{verify_boxed_identities, verify_quant_via_quasi, verify_specialization};
use crate::grassmann::clearing::Clearing;
use crate::grassmann::{
    intro_young_at_q1, verify_antipode, verify_centrality, verify_classical_laplace, verify_inverse_genericity,
    verify_last_minor_commutation, verify_multiplicativity, verify_q_alternating, verify_reduction, verify_reduction_scalar,
    verify_weak_qcommute, verify_young_symmetry, young_instances, GrassmannError, MinorSymbol, Minors,
};
use crate::quantum::{confluence_smoke, pbw_normal_word_count, AlgebraContext};
use crate::quasi_plucker::{intro_trial, qp_trial};
use crate::quasidet::verify::{
    commutative_ratio_check, verify_col_expansion, verify_dependent_column, verify_dependent_row, verify_elem_transform,
    verify_homological, verify_inversion_law, verify_method_agreement, ElemTransform,
};
use crate::quasidet::{DivMatrix, QuasidetError, QuasidetTable};
use crate::scalars::{Quaternion, Rational};

/// Trials per job for the seeded suites.
const CHUNK: usize = 25;

/// Fixed seed for the sampled quantum instances, which are seed-independent.
const QUANTUM_SEED: u64 = 0x5eed;

pub(super) fn record(suite: Suite, identity: &'static str, anchor: &'static str, params: Value, tally: Tally) -> CheckRecord {
    let status = tally.status();
    let detail = match status {
        Status::Fail => tally.first_failure.clone(),
        Status::Undefined => tally.first_undefined.clone(),
        _ => None,
    };
    CheckRecord { suite: suite.name(), identity, anchor, params, status, elapsed_ms: None, detail, counts: tally }
}

fn single(suite: Suite, identity: &'static str, anchor: &'static str, params: Value, outcome: &Outcome) -> CheckRecord {
    let mut t = Tally::default();
    t.record(outcome);
    let mut r = record(suite, identity, anchor, params, t);
    if outcome.status == Status::Degenerate {
        r.detail = outcome.detail.clone();
    }
    r
}

fn qd(r: Result<Outcome, QuasidetError>) -> Outcome {
    match r {
        Ok(o) => o,
        Err(e @ (QuasidetError::Undefined { .. } | QuasidetError::Singular { .. } | QuasidetError::SingularMinor { .. })) => {
            Outcome::undefined(e.to_string())
        }
        Err(e) => Outcome::fail(e.to_string()),
    }
}

fn gr(r: Result<Outcome, GrassmannError>) -> Outcome {
    match r {
        Ok(o) => o,
        Err(e @ GrassmannError::NoCommutationCertificate { .. }) => Outcome::undefined(e.to_string()),
        Err(e) => Outcome::fail(e.to_string()),
    }
}

fn ledger_records(suite: Suite, params: &Value, ledger: Ledger, anchor: fn(&str) -> &'static str) -> Vec<CheckRecord> {
    ledger.into_entries().into_iter().map(|e| record(suite, e.identity, anchor(e.identity), params.clone(), e.tally)).collect()
}

fn chunks(trials: usize) -> impl Iterator<Item = std::ops::Range<u64>> {
    (0..trials).step_by(CHUNK).map(move |s| s as u64..(s + CHUNK).min(trials) as u64)
}

pub(super) fn jobs<'a>(suite: Suite, config: &'a SuiteConfig, out: &mut Vec<Job<'a>>) {
    match suite {
        Suite::Quasidet => quasidet_jobs(config, out),
        Suite::Classical => classical_jobs(config, out),
        Suite::Quasiplucker => quasiplucker_jobs(config, out),
        Suite::Quantum => quantum_jobs(config, out),
        Suite::Specialization => specialization_jobs(config, out),
        Suite::All => unreachable!("expanded by the caller"),
    }
}

// ---- quasideterminants over the quaternions -------------------------------

mod qd_names {
    pub const AGREEMENT: &str = "definitions_agree";
    pub const INVERSION: &str = "inversion_law";
    pub const HOMOLOGICAL: &str = "homological_relations";
    pub const EXPANSION: &str = "column_expansion";
    pub const DEP_COLUMN: &str = "dependent_column";
    pub const DEP_ROW: &str = "dependent_row";
    pub const PERMUTE: &str = "column_permutation";
    pub const RESCALE: &str = "column_rescaling";
    pub const ADD: &str = "column_addition";
}

fn quasidet_anchor(id: &str) -> &'static str {
    use qd_names::*;
    match id {
        AGREEMENT => "quasideterminant: recursive and border definitions",
        INVERSION => "quasideterminant: entries of the inverse matrix",
        HOMOLOGICAL => "quasideterminant: homological relations",
        EXPANSION => "quasideterminant: expansion along a column",
        DEP_COLUMN | DEP_ROW => "quasideterminant: linear dependence forces zero",
        _ => "quasideterminant: elementary column transformations",
    }
}

fn random_quaternions<R: Rng>(k: usize, rng: &mut R) -> Vec<Quaternion> {
    (0..k).map(|_| Quaternion::random_small(rng)).collect()
}

fn quasidet_trial(n: usize, seed: u64, trial: u64) -> Ledger {
    use qd_names::*;
    let mut rng = trial_rng(seed, "quasidet", &[n as u64], trial);
    let a = DivMatrix::random_quaternion(n, n, &mut rng);
    let table = QuasidetTable::new(&a);
    let inverse = a.dr_inverse();
    let mut l = Ledger::default();
    for (i, j) in (1..=n).cartesian_product(1..=n) {
        l.record(AGREEMENT, &qd(verify_method_agreement(&table, i, j)));
        let o = match &inverse {
            Ok(inv) => qd(verify_inversion_law(&table, inv, i, j)),
            Err(e) => Outcome::undefined(e.to_string()),
        };
        l.record(INVERSION, &o);
    }
    for (i, j, k, m) in (1..=n).cartesian_product(1..=n).cartesian_product(1..=n).cartesian_product(1..=n).map(|(((a, b), c), d)| (a, b, c, d)) {
        if i != k && m != j {
            l.record(HOMOLOGICAL, &qd(verify_homological(&table, i, j, k, m)));
        }
    }
    for (r, s, m) in (1..=n).cartesian_product(1..=n).cartesian_product(1..=n).map(|((a, b), c)| (a, b, c)) {
        if m != s {
            l.record(EXPANSION, &qd(verify_col_expansion(&table, r, s, m)));
        }
    }
    let s = rng.random_range(1..=n);
    l.record(DEP_COLUMN, &qd(verify_dependent_column(&a, s, &random_quaternions(n - 1, &mut rng))));
    let r = rng.random_range(1..=n);
    l.record(DEP_ROW, &qd(verify_dependent_row(&a, r, &random_quaternions(n - 1, &mut rng))));

    let mut tau: Vec<usize> = (1..=n).collect();
    tau.shuffle(&mut rng);
    let (i, j) = (rng.random_range(1..=n), rng.random_range(1..=n));
    l.record(PERMUTE, &qd(verify_elem_transform(&a, &ElemTransform::Permute(tau), i, j)));
    let rescale = ElemTransform::Rescale { col: rng.random_range(1..=n), rho: Quaternion::random_small(&mut rng) };
    l.record(RESCALE, &qd(verify_elem_transform(&a, &rescale, i, j)));
    let from = rng.random_range(1..=n);
    let to = (from % n) + 1;
    let j_add = if j == from { to } else { j };
    let add = ElemTransform::Add { from, to, rho: Quaternion::random_small(&mut rng) };
    l.record(ADD, &qd(verify_elem_transform(&a, &add, i, j_add)));
    l
}

fn quasidet_jobs<'a>(config: &'a SuiteConfig, out: &mut Vec<Job<'a>>) {
    for n in 2..=config.max_n {
        for range in chunks(config.trials) {
            out.push(Box::new(move || {
                let mut ledger = Ledger::default();
                for t in range {
                    ledger.merge(&quasidet_trial(n, config.seed, t));
                }
                ledger_records(Suite::Quasidet, &json!({ "n": n }), ledger, quasidet_anchor)
            }));
        }
    }
}

// ---- commutative collapse -------------------------------------------------

fn classical_jobs<'a>(config: &'a SuiteConfig, out: &mut Vec<Job<'a>>) {
    for n in 1..=config.max_n {
        for range in chunks(config.trials) {
            out.push(Box::new(move || {
                let mut tally = Tally::default();
                for t in range {
                    let mut rng = trial_rng(config.seed, "classical", &[n as u64], t);
                    let a = DivMatrix::<Rational>::random_rational(n, n, &mut rng);
                    for (i, j) in (1..=n).cartesian_product(1..=n) {
                        tally.record(&qd(commutative_ratio_check(&a, i, j)));
                    }
                }
                vec![record(Suite::Classical, "determinant_ratio", "quasideterminant: commutative specialization", json!({ "n": n }), tally)]
            }));
        }
    }
    for m in 1..=config.max_n.min(4) {
        out.push(Box::new(move || {
            let mut tally = Tally::default();
            for order in (1..=m).permutations(m) {
                for p in 0..=m {
                    tally.record(&gr(verify_classical_laplace(m, &order, p)));
                }
            }
            vec![record(Suite::Classical, "laplace_expansion", "classical Laplace expansion", json!({ "m": m }), tally)]
        }));
    }
}

// ---- quasi-Plücker coordinates --------------------------------------------

fn qp_anchor(id: &str) -> &'static str {
    use crate::quasi_plucker::names::*;
    match id {
        S_INDEPENDENCE => "quasi-Plücker: independence of the column s",
        GL_INVARIANCE => "quasi-Plücker: invariance under right GL_d action",
        M_ORDER | SPECIAL_VALUES | COCYCLE | CLOSURE | TRIPLE => "quasi-Plücker: basic properties",
        RELATION => "quasi-Plücker relations",
        NORMALIZATION => "quasi-Plücker: column normalization",
        INTRO => "quasi-Plücker: commutative three-term relation",
        _ => "quasi-Plücker: sampling",
    }
}

fn quasiplucker_jobs<'a>(config: &'a SuiteConfig, out: &mut Vec<Job<'a>>) {
    for &(n, d) in &config.dims {
        for range in chunks(config.trials) {
            out.push(Box::new(move || {
                let mut ledger = Ledger::default();
                for t in range {
                    match qp_trial(n, d, config.seed, t) {
                        Ok(l) => ledger.merge(&l),
                        Err(e) => ledger.record("qp_trial_error", &Outcome::fail(e.to_string())),
                    }
                }
                ledger_records(Suite::Quasiplucker, &json!({ "n": n, "d": d }), ledger, qp_anchor)
            }));
        }
    }
    for range in chunks(config.trials) {
        out.push(Box::new(move || {
            let mut ledger = Ledger::default();
            for t in range {
                match intro_trial(config.seed, t) {
                    Ok(l) => ledger.merge(&l),
                    Err(e) => ledger.record("qp_trial_error", &Outcome::fail(e.to_string())),
                }
            }
            ledger_records(Suite::Quasiplucker, &json!({ "n": 4, "d": 2 }), ledger, qp_anchor)
        }));
    }
}

// ---- quantum kernel and Grassmannian identities ---------------------------

fn context(config: &SuiteConfig, rows: usize, cols: usize) -> Arc<AlgebraContext> {
    if config.inject_fault {
        AlgebraContext::with_fault(rows, cols)
    } else {
        AlgebraContext::new(rows, cols)
    }
}

const YOUNG_DIMS: [(usize, usize); 3] = [(1, 3), (2, 4), (2, 5)];
const YOUNG_SAMPLE: (usize, usize, usize) = (3, 6, 20);

fn quantum_jobs<'a>(config: &'a SuiteConfig, out: &mut Vec<Job<'a>>) {
    const Q: Suite = Suite::Quantum;
    type Check = fn(&Arc<AlgebraContext>) -> Result<Outcome, GrassmannError>;
    let kernel: [(&'static str, &'static str, Check); 3] = [
        ("centrality", "quantum determinant is central", verify_centrality),
        ("antipode", "antipode identity S(X)X = XS(X) = det_q", verify_antipode),
        ("inverse_genericity", "S(X) is generic for q^-1", verify_inverse_genericity),
    ];
    for n in 1..=config.max_n.min(3) {
        for (id, anchor, f) in kernel {
            out.push(Box::new(move || vec![single(Q, id, anchor, json!({ "n": n }), &gr(f(&context(config, n, n))))]));
        }
        out.push(Box::new(move || {
            let ctx = context(config, n, n);
            let mut tally = Tally::default();
            for rows in (0..n).map(|_| 1..=n).multi_cartesian_product() {
                tally.record(&gr(verify_q_alternating(&ctx, &rows)));
            }
            vec![record(Q, "q_alternating", "quantum determinant under row permutation", json!({ "n": n }), tally)]
        }));
    }
    for n in 1..=config.max_n.min(2) {
        out.push(Box::new(move || {
            vec![single(Q, "multiplicativity", "product of commuting generic matrices", json!({ "n": n }), &gr(verify_multiplicativity(n)))]
        }));
    }
    for n in 2..=4 {
        for d in 1..=(n - 1).min(3) {
            out.push(Box::new(move || {
                let minors = Minors::new(&context(config, n, d));
                let mut tally = Tally::default();
                for m in subsets(&(1..=n).collect::<Vec<_>>(), d - 1).expect("d <= n") {
                    for (i, j) in (1..=n).filter(|x| !m.contains(x)).tuple_combinations() {
                        tally.record(&gr(verify_weak_qcommute(&minors, i, j, &m)));
                    }
                }
                vec![record(Q, "weak_q_commutation", "weak q-commutation of minors", json!({ "n": n, "d": d }), tally)]
            }));
        }
    }
    out.push(Box::new(move || {
        let minors = Minors::new(&context(config, 4, 3));
        let mut tally = Tally::default();
        let all: Vec<usize> = (1..=4).collect();
        for k in 1..=3 {
            for i in subsets(&all, k).expect("k <= 4") {
                for kk in 1..=k {
                    for j in subsets(&i, kk).expect("kk <= k") {
                        let (a, b) = (MinorSymbol::new(i.clone()), MinorSymbol::new(j));
                        let o = match minors.q_commute_exponent(&a, &b) {
                            Ok(Some(0)) => Outcome::pass(),
                            Ok(e) => Outcome::fail(format!("{a} and {b}: exponent {e:?}")),
                            Err(e) => Outcome::fail(e.to_string()),
                        };
                        tally.record(&o);
                    }
                }
            }
        }
        vec![record(Q, "nested_minors_commute", "nested minors commute", json!({ "n": 4, "d": 3 }), tally)]
    }));
    for (d, n) in YOUNG_DIMS {
        out.push(Box::new(move || {
            let minors = Minors::new(&context(config, n, d));
            let mut tally = Tally::default();
            for i in subsets(&(1..=n).collect::<Vec<_>>(), d).expect("d < n") {
                tally.record(&gr(verify_last_minor_commutation(&minors, &i)));
            }
            vec![record(Q, "last_minor_commutation", "commutation with the last minor", json!({ "n": n, "d": d }), tally)]
        }));
        for r in 1..=d {
            out.push(Box::new(move || {
                let minors = Minors::new(&context(config, n, d));
                let mut tally = Tally::default();
                for (i, j) in young_instances(d, n, r) {
                    tally.record(&gr(verify_young_symmetry(&minors, d, r, &i, &j)));
                }
                vec![record(Q, "young_symmetry", "quantum Young symmetry relations", json!({ "n": n, "d": d, "r": r }), tally)]
            }));
        }
    }
    out.push(Box::new(move || {
        let (d, n, count) = YOUNG_SAMPLE;
        let minors = Minors::new(&context(config, n, d));
        let mut rng = trial_rng(QUANTUM_SEED, "young-sample", &[d as u64, n as u64], 0);
        let pool: Vec<(usize, Vec<usize>, Vec<usize>)> =
            (1..=d).flat_map(|r| young_instances(d, n, r).into_iter().map(move |(i, j)| (r, i, j))).collect();
        let mut tally = Tally::default();
        for (r, i, j) in pool.choose_multiple(&mut rng, count) {
            tally.record(&gr(verify_young_symmetry(&minors, d, *r, i, j)));
        }
        vec![record(Q, "young_symmetry_sample", "quantum Young symmetry relations", json!({ "n": n, "d": d, "instances": count }), tally)]
    }));
    out.push(Box::new(move || {
        let o = match intro_young_at_q1() {
            Ok((got, expected, zero)) => Outcome::from_bool(got == expected && zero, || format!("q = 1 terms {got:?} vs {expected:?}")),
            Err(e) => Outcome::fail(e.to_string()),
        };
        vec![single(Q, "young_classical_instance", "three-term Plücker relation at q = 1", json!({ "n": 4, "d": 2 }), &o)]
    }));
    for (d, n, r) in [(2, 4, 2), (2, 5, 2)] {
        out.push(Box::new(move || {
            let minors = Minors::new(&context(config, n, d));
            let mut tally = Tally::default();
            for (i, j) in young_instances(d, n, r) {
                tally.record(&gr(verify_reduction(&minors, d, r, &i, &j)));
            }
            vec![record(Q, "reduction", "higher Young relations reduce to r = 1", json!({ "n": n, "d": d, "r": r }), tally)]
        }));
    }
    out.push(Box::new(move || {
        let mut tally = Tally::default();
        for size in 1..=6 {
            for r in 1..=size.min(3) {
                tally.record(&verify_reduction_scalar(&(1..=size).collect::<Vec<_>>(), r));
            }
        }
        vec![record(Q, "reduction_coefficients", "higher Young relations reduce to r = 1", json!({ "max_r": 3, "max_size": 6 }), tally)]
    }));
    for (n, d) in [(3, 1), (4, 2), (4, 3)] {
        out.push(Box::new(move || {
            let minors = Minors::new(&context(config, n, d));
            let clearing = Clearing::new(&minors);
            let all: Vec<usize> = (1..=n).collect();
            let mut tally = Tally::default();
            for m in subsets(&all, d - 1).expect("d <= n") {
                for (i, j) in all.iter().copied().filter(|x| !m.contains(x)).tuple_combinations() {
                    let rows: Vec<usize> = std::iter::once(i).chain(m.iter().copied()).collect();
                    tally.record(&gr(verify_boxed_identities(&clearing, &rows, i, j, &m)));
                }
            }
            vec![record(Q, "boxed_minor_ratios", "quasideterminants of generic matrices as minor ratios", json!({ "n": n, "d": d }), tally)]
        }));
    }
    for n in 1..=config.max_n.min(3) {
        out.push(Box::new(move || {
            let minors = Minors::new(&context(config, n, n));
            let clearing = Clearing::new(&minors);
            let mut tally = Tally::default();
            for rows in (1..=n).permutations(n) {
                for cols in (1..=n).permutations(n) {
                    tally.record(&gr(verify_quant_via_quasi(&clearing, &rows, &cols)));
                }
            }
            vec![record(Q, "det_as_quasidet_product", "quantum determinant as a product of quasideterminants", json!({ "n": n }), tally)]
        }));
    }
    for (rows, cols) in [(2, 2), (3, 2)] {
        out.push(Box::new(move || {
            let rep = confluence_smoke(&context(config, rows, cols), QUANTUM_SEED, 100);
            let o = Outcome::from_bool(rep.passed() && rep.words == 100, || rep.counterexample.clone().unwrap_or_default());
            vec![single(Q, "confluence", "rewriting system is confluent", json!({ "rows": rows, "cols": cols, "words": 100 }), &o)]
        }));
    }
    out.push(Box::new(move || {
        let ctx = context(config, 2, 2);
        let mut tally = Tally::default();
        for k in 0..=5 {
            let expected = binomial(k + 3, 3);
            let got = pbw_normal_word_count(&ctx, k);
            tally.record(&Outcome::from_bool(got == Some(expected), || format!("degree {k}: {got:?} normal words, expected {expected}")));
        }
        vec![record(Q, "pbw_dimension", "ordered monomials form a basis", json!({ "rows": 2, "cols": 2, "max_degree": 5 }), tally)]
    }));
}

// ---- specialization replay -------------------------------------------------

const CHAIN_ANCHOR: &str = "quasi-Plücker relations specialize to quantum Young relations";

fn specialization_jobs<'a>(config: &'a SuiteConfig, out: &mut Vec<Job<'a>>) {
    const S: Suite = Suite::Specialization;
    for &(n, d) in &config.dims {
        let minors = Arc::new(Minors::new(&context(config, n, d)));
        let all: Vec<usize> = (1..=n).collect();
        let dims = json!({ "n": n, "d": d });
        for i_set in subsets(&all, d + 1).expect("d < n") {
            let minors = minors.clone();
            let dims = dims.clone();
            let all = all.clone();
            out.push(Box::new(move || {
                let clearing = Clearing::new(&minors);
                let mut records = Vec::new();
                for j_set in subsets(&all, d - 1).expect("d < n") {
                    for i in i_set.iter().copied().filter(|x| !j_set.contains(x)) {
                        let params = json!({ "n": n, "d": d, "I": i_set, "J": j_set, "i": i });
                        match verify_specialization(&clearing, d, &i_set, &j_set, i) {
                            Ok(rep) => {
                                for line in &rep.lines {
                                    records.push(single(S, line.name, CHAIN_ANCHOR, dims.clone(), &line.outcome));
                                }
                                records.push(single(S, "chain", CHAIN_ANCHOR, params, &rep.outcome()));
                            }
                            Err(e) => records.push(single(S, "chain", CHAIN_ANCHOR, params, &gr(Err(e)))),
                        }
                    }
                }
                records
            }));
        }
        // I∖J = ∅: I is a multiset drawn from J.
        let minors = minors.clone();
        out.push(Box::new(move || {
            let clearing = Clearing::new(&minors);
            let mut records = Vec::new();
            let js = if d == 1 { vec![vec![]] } else { subsets(&all, d - 1).expect("d < n") };
            for j_set in js {
                if j_set.is_empty() {
                    continue;
                }
                for i_set in j_set.iter().copied().combinations_with_replacement(d + 1) {
                    let params = json!({ "n": n, "d": d, "I": i_set, "J": j_set });
                    let o = match verify_specialization(&clearing, d, &i_set, &j_set, i_set[0]) {
                        Ok(rep) if rep.degenerate && rep.outcome().is_pass() => Outcome::degenerate("I∖J is empty; every term vanishes"),
                        Ok(rep) => rep.outcome(),
                        Err(e) => gr(Err(e)),
                    };
                    records.push(single(S, "chain_degenerate", CHAIN_ANCHOR, params, &o));
                }
            }
            records
        }));
    }
}
