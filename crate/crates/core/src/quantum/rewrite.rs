//! Directed `q`-generic rules, the memoized normal-form engine and a plain
//! one-step rewriter used to cross-check it.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::Rng;

use super::{AlgebraContext, Generator, NCPoly, NCWord};
use crate::check::trial_rng;
use crate::scalars::{LaurentPoly, Scalar};

/// Rewrites of the adjacent pair `a b` with `a > b`, or `None` when the pair
/// is irreducible (different blocks without cross-commutation).
pub(super) fn swap_rule(ctx: &AlgebraContext, a: Generator, b: Generator) -> Option<Vec<(LaurentPoly, Generator, Generator)>> {
    debug_assert!(a > b);
    if a.block != b.block {
        return ctx.cross_commute.then(|| vec![(LaurentPoly::one(), b, a)]);
    }
    let (r1, c1, r2, c2) = (a.row, a.col, b.row, b.col);
    if r1 == r2 || c1 == c2 {
        return Some(vec![(LaurentPoly::q_pow(1), b, a)]);
    }
    if c1 < c2 {
        return Some(vec![(LaurentPoly::one(), b, a)]);
    }
    let mut extra = LaurentPoly::q_minus_q_inv();
    if ctx.fault {
        extra = extra.neg();
    }
    let x = |r, c| Generator { block: a.block, row: r, col: c };
    Some(vec![(LaurentPoly::one(), b, a), (extra, x(r2, c1), x(r1, c2))])
}

fn is_reducible(ctx: &AlgebraContext, a: Generator, b: Generator) -> bool {
    a > b && (a.block == b.block || ctx.cross_commute)
}

pub(super) fn is_normal(ctx: &AlgebraContext, w: &[Generator]) -> bool {
    w.windows(2).all(|p| !is_reducible(ctx, p[0], p[1]))
}

/// Normal form of `u · g` for a normal word `u`.
pub(super) fn mul_normal_gen(ctx: &AlgebraContext, u: &NCWord, g: Generator) -> Arc<Vec<(NCWord, LaurentPoly)>> {
    let last = match u.0.last() {
        Some(&a) if is_reducible(ctx, a, g) => a,
        _ => {
            let mut w = u.clone();
            w.0.push(g);
            return Arc::new(vec![(w, LaurentPoly::one())]);
        }
    };
    let key = (u.clone(), g);
    if let Some(v) = ctx.memo.lock().expect("memo poisoned").get(&key) {
        return v.clone();
    }
    let prefix = NCWord(u.0[..u.len() - 1].to_vec());
    let mut acc: BTreeMap<NCWord, LaurentPoly> = BTreeMap::new();
    for (c, b1, b2) in swap_rule(ctx, last, g).expect("reducible pair has a rule") {
        for (w1, c1) in mul_normal_gen(ctx, &prefix, b1).iter() {
            let c01 = c.mul(c1);
            for (w2, c2) in mul_normal_gen(ctx, w1, b2).iter() {
                acc.entry(w2.clone()).or_default().add_assign_ref(&c01.mul(c2));
            }
        }
    }
    let v: Arc<Vec<_>> = Arc::new(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect());
    ctx.memo.lock().expect("memo poisoned").insert(key, v.clone());
    v
}

/// Normal form of an arbitrary word.
pub(super) fn normal_form_word(ctx: &AlgebraContext, word: &[Generator]) -> BTreeMap<NCWord, LaurentPoly> {
    let mut cur: BTreeMap<NCWord, LaurentPoly> = BTreeMap::from([(NCWord::empty(), LaurentPoly::one())]);
    for &g in word {
        let mut next: BTreeMap<NCWord, LaurentPoly> = BTreeMap::new();
        for (u, c) in &cur {
            for (w, cw) in mul_normal_gen(ctx, u, g).iter() {
                next.entry(w.clone()).or_default().add_assign_ref(&c.mul(cw));
            }
        }
        next.retain(|_, c| !c.is_zero());
        cur = next;
    }
    cur
}

/// Which reducible pair the one-step rewriter picks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    LeftmostFirst,
    RightmostFirst,
}

/// Reduces a word by applying one rule at a time, without memoization.
pub fn reduce_stepwise(ctx: &Arc<AlgebraContext>, word: &[Generator], strategy: Strategy) -> NCPoly {
    let mut pending: BTreeMap<Vec<Generator>, LaurentPoly> = BTreeMap::from([(word.to_vec(), LaurentPoly::one())]);
    let mut done: BTreeMap<NCWord, LaurentPoly> = BTreeMap::new();
    while let Some((w, c)) = pending.pop_first() {
        let positions = (0..w.len().saturating_sub(1)).filter(|&k| is_reducible(ctx, w[k], w[k + 1]));
        let pos = match strategy {
            Strategy::LeftmostFirst => positions.min(),
            Strategy::RightmostFirst => positions.max(),
        };
        let Some(k) = pos else {
            done.entry(NCWord(w)).or_default().add_assign_ref(&c);
            continue;
        };
        for (rc, b1, b2) in swap_rule(ctx, w[k], w[k + 1]).expect("reducible") {
            let mut nw = w.clone();
            nw[k] = b1;
            nw[k + 1] = b2;
            let e = pending.entry(nw).or_default();
            e.add_assign_ref(&c.mul(&rc));
        }
        pending.retain(|_, c| !c.is_zero());
    }
    NCPoly::from_normal_terms(ctx, done)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConfluenceReport {
    pub words: usize,
    pub associativity_triples: usize,
    pub counterexample: Option<String>,
}

impl ConfluenceReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

fn random_word<R: Rng>(ctx: &AlgebraContext, len: usize, rng: &mut R) -> Vec<Generator> {
    let gens = ctx.generators();
    (0..len).map(|_| gens[rng.random_range(0..gens.len())]).collect()
}

/// Reduces `trials` seeded random words (length 1..=6) leftmost-first,
/// rightmost-first and through the memoized engine, and checks
/// associativity on random triples of short words.
pub fn confluence_smoke(ctx: &Arc<AlgebraContext>, seed: u64, trials: usize) -> ConfluenceReport {
    let mut rng = trial_rng(seed, "confluence", &[ctx.rows as u64, ctx.cols as u64], 0);
    let mut report = ConfluenceReport::default();
    for _ in 0..trials {
        let len = rng.random_range(1..=6);
        let w = random_word(ctx, len, &mut rng);
        let left = reduce_stepwise(ctx, &w, Strategy::LeftmostFirst);
        let right = reduce_stepwise(ctx, &w, Strategy::RightmostFirst);
        let engine = NCPoly::word(ctx, &w).expect("generators from the context");
        report.words += 1;
        if left != right || left != engine {
            report.counterexample = Some(format!("{}: leftmost {left}, rightmost {right}, engine {engine}", NCWord(w)));
            return report;
        }
        let parts: Vec<NCPoly> = (0..3)
            .map(|_| {
                let l = rng.random_range(1..=2);
                let a = NCPoly::word(ctx, &random_word(ctx, l, &mut rng)).expect("in context");
                let b = NCPoly::word(ctx, &random_word(ctx, 1, &mut rng)).expect("in context");
                a.add(&b).expect("same context")
            })
            .collect();
        let lhs = parts[0].mul(&parts[1]).and_then(|p| p.mul(&parts[2])).expect("same context");
        let rhs = parts[1].mul(&parts[2]).and_then(|p| parts[0].mul(&p)).expect("same context");
        report.associativity_triples += 1;
        if lhs != rhs {
            report.counterexample = Some(format!("associativity fails for ({}), ({}), ({})", parts[0], parts[1], parts[2]));
            return report;
        }
    }
    report
}

/// Number of distinct words in the supports of the normal forms of all
/// `|gens|^degree` words of length `degree`. Each such word is checked to
/// be normal; `None` signals one that is not.
pub fn pbw_normal_word_count(ctx: &Arc<AlgebraContext>, degree: usize) -> Option<usize> {
    let gens = ctx.generators();
    let mut support = std::collections::BTreeSet::new();
    let mut idx = vec![0usize; degree];
    loop {
        let w: Vec<Generator> = idx.iter().map(|&i| gens[i]).collect();
        for word in normal_form_word(ctx, &w).into_keys() {
            if !is_normal(ctx, word.letters()) {
                return None;
            }
            support.insert(word);
        }
        let mut k = degree;
        loop {
            if k == 0 {
                return Some(support.len());
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < gens.len() {
                break;
            }
            idx[k] = 0;
        }
    }
}
