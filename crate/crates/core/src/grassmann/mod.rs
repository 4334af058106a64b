//! Quantum minors of a `q`-generic matrix and the identities among them.
//!
//! Minors are NCPolys. Ratios of minors are never divided out; identities
//! with inverses go through [`clearing`], which multiplies denominators away
//! using discovered `q`-commutation exponents.

pub mod chain;
pub mod clearing;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use itertools::Itertools;
use thiserror::Error;

use crate::check::Outcome;
use crate::combinatorics::{permutations, subsets, tuple_length};
use crate::quantum::{specialize_q1, AlgebraContext, AlgebraError, CommPoly, Generator, NCPoly};
use crate::quasidet::classical::{det_cofactor, laplace_expansion};
use crate::quasidet::DivMatrix;
use crate::scalars::{LaurentPoly, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrassmannError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("no q-commutation certificate for {a} and {b} within the exponent window")]
    NoCommutationCertificate { a: String, b: String },
    #[error("inverse of a vanishing minor {0}")]
    ZeroDenominator(String),
    #[error("degenerate case: {0}")]
    DegenerateCase(String),
}

/// `[I]`: the quantum minor on rows `I` (order significant) and an ascending
/// column set, by default `1..=|I|`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MinorSymbol {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl MinorSymbol {
    pub fn new(rows: impl Into<Vec<usize>>) -> Self {
        let rows = rows.into();
        let cols = (1..=rows.len()).collect();
        MinorSymbol { rows, cols }
    }

    pub fn with_cols(rows: impl Into<Vec<usize>>, cols: impl Into<Vec<usize>>) -> Result<Self, GrassmannError> {
        let (rows, cols) = (rows.into(), cols.into());
        if rows.len() != cols.len() {
            return Err(GrassmannError::ShapeMismatch(format!("{} rows but {} columns", rows.len(), cols.len())));
        }
        if !cols.windows(2).all(|w| w[0] < w[1]) {
            return Err(GrassmannError::ShapeMismatch(format!("columns {cols:?} must be ascending")));
        }
        Ok(MinorSymbol { rows, cols })
    }

    pub fn empty() -> Self {
        MinorSymbol { rows: Vec::new(), cols: Vec::new() }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn has_repeats(&self) -> bool {
        self.rows.iter().duplicates().next().is_some()
    }

    /// `self = (−q)^e · canonical` with the rows sorted, or `None` when a
    /// row repeats (the minor vanishes).
    pub fn canonical(&self) -> Option<(i32, MinorSymbol)> {
        if self.has_repeats() {
            return None;
        }
        let e = -(tuple_length(&self.rows) as i32);
        let mut rows = self.rows.clone();
        rows.sort_unstable();
        Some((e, MinorSymbol { rows, cols: self.cols.clone() }))
    }

    pub fn is_canonical(&self) -> bool {
        self.rows.windows(2).all(|w| w[0] < w[1])
    }
}

impl fmt::Display for MinorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.rows.iter().join(" ");
        if self.cols.iter().copied().eq(1..=self.rows.len()) {
            write!(f, "[{rows}]")
        } else {
            write!(f, "[{rows}|{}]", self.cols.iter().join(" "))
        }
    }
}

impl fmt::Debug for MinorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `det_q` of the submatrix on `rows` × `cols`:
/// `Σ_σ (−q)^{−ℓ(σ)} x_{r1,c_σ1} ⋯ x_{rk,c_σk}`. The empty minor is 1.
pub fn qdet(ctx: &Arc<AlgebraContext>, rows: &[usize], cols: &[usize]) -> Result<NCPoly, GrassmannError> {
    if rows.len() != cols.len() {
        return Err(GrassmannError::ShapeMismatch(format!("{} rows but {} columns", rows.len(), cols.len())));
    }
    let mut acc = NCPoly::zero(ctx);
    for p in permutations(rows.len()) {
        let w: Vec<Generator> = rows.iter().zip(&p.image).map(|(&r, &s)| Generator::new(r, cols[s - 1])).collect();
        acc = acc.add(&NCPoly::word(ctx, &w)?.scale(&LaurentPoly::neg_q_pow(-(p.length as i32))))?;
    }
    Ok(acc)
}

/// Evaluated minors of one context, cached.
pub struct Minors {
    ctx: Arc<AlgebraContext>,
    cache: Mutex<HashMap<MinorSymbol, NCPoly>>,
}

impl Minors {
    pub fn new(ctx: &Arc<AlgebraContext>) -> Self {
        Minors { ctx: ctx.clone(), cache: Mutex::new(HashMap::new()) }
    }

    pub fn context(&self) -> &Arc<AlgebraContext> {
        &self.ctx
    }

    pub fn eval(&self, m: &MinorSymbol) -> Result<NCPoly, GrassmannError> {
        if let Some(p) = self.cache.lock().expect("cache poisoned").get(m) {
            return Ok(p.clone());
        }
        let p = qdet(&self.ctx, &m.rows, &m.cols)?;
        self.cache.lock().expect("cache poisoned").insert(m.clone(), p.clone());
        Ok(p)
    }

    /// `[J][I] = q^b [I][J]`: the `b` in `[−w, w]` with `w = 2·rows·cols`
    /// of the context, searched exhaustively.
    pub fn q_commute_exponent(&self, i: &MinorSymbol, j: &MinorSymbol) -> Result<Option<i32>, GrassmannError> {
        let ij = self.eval(i)?.mul(&self.eval(j)?)?;
        let ji = self.eval(j)?.mul(&self.eval(i)?)?;
        let w = (2 * self.ctx.rows() * self.ctx.cols()) as i32;
        Ok((-w..=w).find(|&b| ij.scale(&LaurentPoly::q_pow(b)) == ji))
    }
}

/// Standalone form of [`Minors::q_commute_exponent`].
pub fn q_commute_exponent(ctx: &Arc<AlgebraContext>, i: &MinorSymbol, j: &MinorSymbol) -> Result<Option<i32>, GrassmannError> {
    Minors::new(ctx).q_commute_exponent(i, j)
}

fn full(n: usize) -> Vec<usize> {
    (1..=n).collect()
}

fn square(ctx: &AlgebraContext) -> Result<usize, GrassmannError> {
    if ctx.rows() != ctx.cols() {
        return Err(GrassmannError::ShapeMismatch(format!("{}x{} context is not square", ctx.rows(), ctx.cols())));
    }
    Ok(ctx.rows())
}

/// `det_q` over the given rows equals `(−q)^{−ℓ(rows)} det_q X`, or 0 on a
/// repeated row.
pub fn verify_q_alternating(ctx: &Arc<AlgebraContext>, rows: &[usize]) -> Result<Outcome, GrassmannError> {
    let n = square(ctx)?;
    if rows.len() != n {
        return Err(GrassmannError::ShapeMismatch(format!("need {n} rows, got {rows:?}")));
    }
    let lhs = qdet(ctx, rows, &full(n))?;
    let rhs = match MinorSymbol::new(rows.to_vec()).canonical() {
        None => NCPoly::zero(ctx),
        Some((e, _)) => qdet(ctx, &full(n), &full(n))?.scale(&LaurentPoly::neg_q_pow(e)),
    };
    Ok(Outcome::from_bool(lhs == rhs, || format!("rows {rows:?}: {lhs} != {rhs}")))
}

/// `det_q X` commutes with every generator.
pub fn verify_centrality(ctx: &Arc<AlgebraContext>) -> Result<Outcome, GrassmannError> {
    let n = square(ctx)?;
    let det = qdet(ctx, &full(n), &full(n))?;
    for g in ctx.generators() {
        let x = NCPoly::gen(ctx, g)?;
        if det.mul(&x)? != x.mul(&det)? {
            return Ok(Outcome::fail(format!("det_q does not commute with {g}")));
        }
    }
    Ok(Outcome::pass())
}

/// `S(X)_{ij} = (−q)^{j−i} det_q X^{ji}`.
pub fn antipode(ctx: &Arc<AlgebraContext>) -> Result<Vec<Vec<NCPoly>>, GrassmannError> {
    let n = square(ctx)?;
    let without = |k: usize| -> Vec<usize> { (1..=n).filter(|&x| x != k).collect() };
    (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| Ok(qdet(ctx, &without(j), &without(i))?.scale(&LaurentPoly::neg_q_pow(j as i32 - i as i32))))
                .collect()
        })
        .collect()
}

fn generator_matrix(ctx: &Arc<AlgebraContext>, block: u8) -> Result<Vec<Vec<NCPoly>>, GrassmannError> {
    (1..=ctx.rows())
        .map(|i| (1..=ctx.cols()).map(|j| Ok(NCPoly::gen(ctx, Generator::in_block(block, i, j))?)).collect())
        .collect()
}

fn mat_mul(ctx: &Arc<AlgebraContext>, a: &[Vec<NCPoly>], b: &[Vec<NCPoly>]) -> Result<Vec<Vec<NCPoly>>, GrassmannError> {
    let inner = b.len();
    (0..a.len())
        .map(|i| {
            (0..b[0].len())
                .map(|k| (0..inner).try_fold(NCPoly::zero(ctx), |acc, j| Ok(acc.add(&a[i][j].mul(&b[j][k])?)?)))
                .collect()
        })
        .collect()
}

/// `S(X)·X = X·S(X) = det_q X · 1`.
pub fn verify_antipode(ctx: &Arc<AlgebraContext>) -> Result<Outcome, GrassmannError> {
    let n = square(ctx)?;
    let s = antipode(ctx)?;
    let x = generator_matrix(ctx, 0)?;
    let det = qdet(ctx, &full(n), &full(n))?;
    for (name, prod) in [("S(X)X", mat_mul(ctx, &s, &x)?), ("XS(X)", mat_mul(ctx, &x, &s)?)] {
        for i in 0..n {
            for j in 0..n {
                let expect = if i == j { det.clone() } else { NCPoly::zero(ctx) };
                if prod[i][j] != expect {
                    return Ok(Outcome::fail(format!("{name} entry ({},{}) = {}", i + 1, j + 1, prod[i][j])));
                }
            }
        }
    }
    Ok(Outcome::pass())
}

/// Checks the four `q`-generic relations on a matrix of NCPolys, with `q`
/// replaced by `q^{exp}`. Returns the first violated instance.
fn first_generic_violation(m: &[Vec<NCPoly>], exp: i32) -> Result<Option<String>, GrassmannError> {
    let (rows, cols) = (m.len(), m[0].len());
    let q = LaurentPoly::q_pow(exp);
    let diff = LaurentPoly::q_pow(exp).sub(&LaurentPoly::q_pow(-exp));
    let e = |i: usize, j: usize| &m[i - 1][j - 1];
    let prod = |a: &NCPoly, b: &NCPoly| -> Result<NCPoly, GrassmannError> { Ok(a.mul(b)?) };
    for k in 1..=rows {
        for i in 1..=cols {
            for j in i + 1..=cols {
                if prod(e(k, j), e(k, i))? != prod(e(k, i), e(k, j))?.scale(&q) {
                    return Ok(Some(format!("row relation on row {k}, columns {i}<{j}")));
                }
            }
        }
    }
    for k in 1..=cols {
        for i in 1..=rows {
            for j in i + 1..=rows {
                if prod(e(j, k), e(i, k))? != prod(e(i, k), e(j, k))?.scale(&q) {
                    return Ok(Some(format!("column relation on column {k}, rows {i}<{j}")));
                }
            }
        }
    }
    for i in 1..=rows {
        for j in i + 1..=rows {
            for k in 1..=cols {
                for l in k + 1..=cols {
                    if prod(e(j, k), e(i, l))? != prod(e(i, l), e(j, k))? {
                        return Ok(Some(format!("commuting relation for ({i},{l}),({j},{k})")));
                    }
                    let lhs = prod(e(j, l), e(i, k))?;
                    let rhs = prod(e(i, k), e(j, l))?.add(&prod(e(i, l), e(j, k))?.scale(&diff))?;
                    if lhs != rhs {
                        return Ok(Some(format!("cross relation for ({i},{k}),({j},{l})")));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// The entries of `S(X)` satisfy the `q`-generic relations with `q⁻¹`.
pub fn verify_inverse_genericity(ctx: &Arc<AlgebraContext>) -> Result<Outcome, GrassmannError> {
    let s = antipode(ctx)?;
    Ok(match first_generic_violation(&s, -1)? {
        None => Outcome::pass(),
        Some(v) => Outcome::fail(format!("S(X) violates the q^-1 {v}")),
    })
}

/// `det_q` of a square matrix of NCPolys by the permutation sum.
fn qdet_of_entries(ctx: &Arc<AlgebraContext>, m: &[Vec<NCPoly>]) -> Result<NCPoly, GrassmannError> {
    let n = m.len();
    let mut acc = NCPoly::zero(ctx);
    for p in permutations(n) {
        let term = NCPoly::product(ctx, (0..n).map(|r| &m[r][p.image[r] - 1]))?;
        acc = acc.add(&term.scale(&LaurentPoly::neg_q_pow(-(p.length as i32))))?;
    }
    Ok(acc)
}

/// With `x` and `y` blocks commuting, `Z = XY` is `q`-generic and
/// `det_q Z = det_q X · det_q Y`.
pub fn verify_multiplicativity(n: usize) -> Result<Outcome, GrassmannError> {
    let ctx = AlgebraContext::two_blocks(n, n, true);
    let x = generator_matrix(&ctx, 0)?;
    let y = generator_matrix(&ctx, 1)?;
    let z = mat_mul(&ctx, &x, &y)?;
    if let Some(v) = first_generic_violation(&z, 1)? {
        return Ok(Outcome::fail(format!("XY violates the {v}")));
    }
    let lhs = qdet_of_entries(&ctx, &z)?;
    let rhs = qdet_of_entries(&ctx, &x)?.mul(&qdet_of_entries(&ctx, &y)?)?;
    Ok(Outcome::from_bool(lhs == rhs, || format!("det_q(XY) != det_q X det_q Y for n={n}")))
}

fn sorted_union(a: usize, m: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = m.to_vec();
    v.push(a);
    v.sort_unstable();
    v
}

/// `[j∪M][i∪M] = q [i∪M][j∪M]` for `i < j` outside `M`.
pub fn verify_weak_qcommute(minors: &Minors, i: usize, j: usize, m: &[usize]) -> Result<Outcome, GrassmannError> {
    if i >= j || m.contains(&i) || m.contains(&j) {
        return Err(GrassmannError::ShapeMismatch(format!("need i < j outside M, got i={i}, j={j}, M={m:?}")));
    }
    let a = minors.eval(&MinorSymbol::new(sorted_union(i, m)))?;
    let b = minors.eval(&MinorSymbol::new(sorted_union(j, m)))?;
    let lhs = b.mul(&a)?;
    let rhs = a.mul(&b)?.scale(&LaurentPoly::q_pow(1));
    Ok(Outcome::from_bool(lhs == rhs, || format!("i={i}, j={j}, M={m:?}")))
}

/// `f_{[−d]} f_I = q^{|[−d]∖I|} f_I f_{[−d]}` in an `n × d` context.
pub fn verify_last_minor_commutation(minors: &Minors, i: &[usize]) -> Result<Outcome, GrassmannError> {
    let (n, d) = (minors.ctx.rows(), minors.ctx.cols());
    if i.len() != d {
        return Err(GrassmannError::ShapeMismatch(format!("|I| = {} but d = {d}", i.len())));
    }
    let last: Vec<usize> = (n - d + 1..=n).collect();
    let b = last.iter().filter(|x| !i.contains(x)).count() as i32;
    let f_last = minors.eval(&MinorSymbol::new(last))?;
    let f_i = minors.eval(&MinorSymbol::new(i.to_vec()))?;
    let lhs = f_last.mul(&f_i)?;
    let rhs = f_i.mul(&f_last)?.scale(&LaurentPoly::q_pow(b));
    Ok(Outcome::from_bool(lhs == rhs, || format!("I={i:?}: exponent {b} does not hold")))
}

/// A product of minors with a `(−q)`-power prefactor, expanded as written.
fn signed_product(minors: &Minors, e: i32, factors: &[MinorSymbol]) -> Result<NCPoly, GrassmannError> {
    let ctx = minors.context();
    let mut acc = NCPoly::constant(ctx, LaurentPoly::neg_q_pow(e));
    for f in factors {
        acc = acc.mul(&minors.eval(f)?)?;
    }
    Ok(acc)
}

/// Terms `(−q)^{−ℓ(I∖Λ|Λ)} f_{I∖Λ} f_{Λ|J}` of the Young symmetry relation,
/// one per `Λ`, as written (no canonicalization needed for evaluation).
pub fn young_terms(i: &[usize], j: &[usize], r: usize) -> Vec<(i32, MinorSymbol, MinorSymbol, Vec<usize>)> {
    (0..i.len())
        .combinations(r)
        .map(|pos| {
            let lambda: Vec<usize> = pos.iter().map(|&p| i[p]).collect();
            let rest: Vec<usize> = (0..i.len()).filter(|p| !pos.contains(p)).map(|p| i[p]).collect();
            let split: Vec<usize> = rest.iter().chain(&lambda).copied().collect();
            let e = -(tuple_length(&split) as i32);
            let lam_j: Vec<usize> = lambda.iter().chain(j).copied().collect();
            (e, MinorSymbol::new(rest), MinorSymbol::new(lam_j), lambda)
        })
        .collect()
}

/// `Σ_Λ (−q)^{−ℓ(I∖Λ|Λ)} f_{I∖Λ} f_{Λ|J}` normal-forms to zero.
pub fn verify_young_symmetry(minors: &Minors, d: usize, r: usize, i: &[usize], j: &[usize]) -> Result<Outcome, GrassmannError> {
    if i.len() != d + r || j.len() + r != d || r == 0 {
        return Err(GrassmannError::ShapeMismatch(format!("need |I| = d+r, |J| = d-r, r >= 1; got d={d}, r={r}, I={i:?}, J={j:?}")));
    }
    let ctx = minors.context();
    let mut sum = NCPoly::zero(ctx);
    for (e, a, b, _) in young_terms(i, j, r) {
        sum = sum.add(&signed_product(minors, e, &[a, b])?)?;
    }
    Ok(Outcome::from_bool(sum.is_zero(), || format!("I={i:?}, J={j:?}, r={r}: sum is {sum}")))
}

/// The `q = 1` images of the `(d, n) = (2, 4)`, `I = {1,2,3}`, `J = {4}`
/// terms, as classical `2 × 2` minors from cofactor expansion, in the order
/// `p12 p34`, `−p13 p24`, `p23 p14`, together with whether they sum to 0.
pub fn intro_young_at_q1() -> Result<(Vec<CommPoly>, Vec<CommPoly>, bool), GrassmannError> {
    let ctx = AlgebraContext::new(4, 2);
    let minors = Minors::new(&ctx);
    let mut got = Vec::new();
    for (e, a, b, _) in young_terms(&[1, 2, 3], &[4], 1).into_iter().rev() {
        got.push(specialize_q1(&signed_product(&minors, e, &[a, b])?));
    }
    let x = DivMatrix::from_fn(4, 2, CommPoly::x);
    let p = |a: usize, b: usize| det_cofactor(&x.submatrix_keep(&[a, b], &[1, 2]).expect("in range")).expect("square");
    let expected = vec![p(1, 2).mul(&p(3, 4)), p(1, 3).mul(&p(2, 4)).neg(), p(2, 3).mul(&p(1, 4))];
    let total = got.iter().fold(CommPoly::zero(), |acc, t| acc.add(t));
    Ok((got, expected, total.is_zero()))
}

/// Left side of the reduction: `Σ_s (−q)^{2(r−1)−ℓ(I_(s)|i_s)} Y_{(r−1)}(I_(s), i_s|J)`
/// as a list of `(exponent, first, second)` products.
fn reduction_lhs(i: &[usize], j: &[usize], r: usize) -> Vec<(i32, MinorSymbol, MinorSymbol)> {
    let mut out = Vec::new();
    for s in 0..i.len() {
        let i_s = i[s];
        let i_rest: Vec<usize> = i.iter().enumerate().filter(|&(p, _)| p != s).map(|(_, &x)| x).collect();
        let outer = 2 * (r as i32 - 1) - tuple_length(&[i_rest.clone(), vec![i_s]].concat()) as i32;
        for pos in (0..i_rest.len()).combinations(r - 1) {
            let lam: Vec<usize> = pos.iter().map(|&p| i_rest[p]).collect();
            let rest: Vec<usize> = (0..i_rest.len()).filter(|p| !pos.contains(p)).map(|p| i_rest[p]).collect();
            let inner = -(tuple_length(&[rest.clone(), lam.clone()].concat()) as i32);
            let second: Vec<usize> = lam.iter().chain([&i_s]).chain(j).copied().collect();
            out.push((outer + inner, MinorSymbol::new(rest), MinorSymbol::new(second)));
        }
    }
    out
}

/// `Σ_{t<r} (−q)^{2t}`.
pub fn q_even_sum(r: usize) -> LaurentPoly {
    (0..r as i32).fold(LaurentPoly::zero(), |acc, t| acc.add(&LaurentPoly::neg_q_pow(2 * t)))
}

/// Canonical `(first, second) ↦ coefficient` expansion of a sum of signed
/// minor products; products with a vanishing minor drop out.
fn formal_expansion(terms: &[(LaurentPoly, MinorSymbol, MinorSymbol)]) -> std::collections::BTreeMap<(MinorSymbol, MinorSymbol), LaurentPoly> {
    let mut out: std::collections::BTreeMap<(MinorSymbol, MinorSymbol), LaurentPoly> = Default::default();
    for (c, a, b) in terms {
        let (Some((ea, ca)), Some((eb, cb))) = (a.canonical(), b.canonical()) else { continue };
        out.entry((ca, cb)).or_default().add_assign_ref(&c.mul(&LaurentPoly::neg_q_pow(ea + eb)));
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// The reduction identity: the double sum over `s` equals
/// `(Σ_{t<r} (−q)^{2t})` times the degree-`r` Young sum. Checked formally on
/// canonical minor pairs and as an NCPoly identity.
pub fn verify_reduction(minors: &Minors, d: usize, r: usize, i: &[usize], j: &[usize]) -> Result<Outcome, GrassmannError> {
    if i.len() != d + r || j.len() + r != d || r == 0 {
        return Err(GrassmannError::ShapeMismatch(format!("need |I| = d+r, |J| = d-r, r >= 1; got d={d}, r={r}")));
    }
    let lhs: Vec<(LaurentPoly, MinorSymbol, MinorSymbol)> =
        reduction_lhs(i, j, r).into_iter().map(|(e, a, b)| (LaurentPoly::neg_q_pow(e), a, b)).collect();
    let factor = q_even_sum(r);
    let rhs: Vec<(LaurentPoly, MinorSymbol, MinorSymbol)> =
        young_terms(i, j, r).into_iter().map(|(e, a, b, _)| (factor.mul(&LaurentPoly::neg_q_pow(e)), a, b)).collect();
    if formal_expansion(&lhs) != formal_expansion(&rhs) {
        return Ok(Outcome::fail(format!("I={i:?}, J={j:?}, r={r}: canonical coefficients differ")));
    }
    let ctx = minors.context();
    let eval = |terms: &[(LaurentPoly, MinorSymbol, MinorSymbol)]| -> Result<NCPoly, GrassmannError> {
        terms.iter().try_fold(NCPoly::zero(ctx), |acc, (c, a, b)| Ok(acc.add(&minors.eval(a)?.mul(&minors.eval(b)?)?.scale(c))?))
    };
    let (l, rr) = (eval(&lhs)?, eval(&rhs)?);
    Ok(Outcome::from_bool(l == rr, || format!("I={i:?}, J={j:?}, r={r}: {l} != {rr}")))
}

/// For every `Λ ⊆ I` with `|Λ| = r`:
/// `Σ_{i_s∈Λ} (−q)^{2(r−1)−2ℓ(Λ_(s)|i_s)} = Σ_{t<r} (−q)^{2t}`, together with
/// the length decomposition
/// `ℓ(I∖Λ|Λ) = ℓ(I∖Λ|Λ_(s)) + ℓ(I_(s)|i_s) − ℓ(Λ_(s)|i_s)` behind it.
/// `I` is ascending.
pub fn verify_reduction_scalar(i: &[usize], r: usize) -> Outcome {
    let target = q_even_sum(r);
    for lam in i.iter().copied().combinations(r) {
        let rest: Vec<usize> = i.iter().copied().filter(|x| !lam.contains(x)).collect();
        let mut sum = LaurentPoly::zero();
        for &x in &lam {
            let lam_s: Vec<usize> = lam.iter().copied().filter(|&y| y != x).collect();
            let i_s: Vec<usize> = i.iter().copied().filter(|&y| y != x).collect();
            let l = |parts: &[&[usize]]| tuple_length(&parts.concat()) as i32;
            let lhs = l(&[&rest, &lam]);
            let rhs = l(&[&rest, &lam_s]) + l(&[&i_s, &[x]]) - l(&[&lam_s, &[x]]);
            if lhs != rhs {
                return Outcome::fail(format!("I={i:?}, Λ={lam:?}, i_s={x}: length split {lhs} != {rhs}"));
            }
            sum = sum.add(&LaurentPoly::neg_q_pow(2 * (r as i32 - 1) - 2 * l(&[&lam_s, &[x]])));
        }
        if sum != target {
            return Outcome::fail(format!("I={i:?}, Λ={lam:?}: {sum} != {target}"));
        }
    }
    Outcome::pass()
}

/// Laplace expansion along the first `p` entries of the column order,
/// against cofactor expansion, on the `q = 1` image of an `m × m` context.
pub fn verify_classical_laplace(m: usize, col_order: &[usize], p: usize) -> Result<Outcome, GrassmannError> {
    let ctx = AlgebraContext::new(m, m);
    let x = DivMatrix::from_fn(m, m, |i, j| specialize_q1(&NCPoly::x(&ctx, i, j).expect("in context")));
    let det = det_cofactor(&x).map_err(|e| GrassmannError::ShapeMismatch(e.to_string()))?;
    let lap = laplace_expansion(&x, col_order, p).map_err(|e| GrassmannError::ShapeMismatch(e.to_string()))?;
    let q1 = specialize_q1(&qdet(&ctx, &full(m), &full(m))?);
    Ok(Outcome::from_bool(det == lap && q1 == det, || format!("m={m}, order {col_order:?}, p={p}: {lap} vs {det}")))
}

/// All `(I, J)` pairs of ascending subsets with `|I| = d+r`, `|J| = d−r`.
pub fn young_instances(d: usize, n: usize, r: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let all = full(n);
    let is = subsets(&all, d + r).unwrap_or_default();
    let js = subsets(&all, d - r).unwrap_or_default();
    is.iter().cartesian_product(js.iter()).map(|(a, b)| (a.clone(), b.clone())).collect()
}

#[cfg(test)]
mod tests;
