//! Quasideterminants of a `q`-generic matrix as ratios of quantum minors,
//! and the replay of the quasi-Plücker → quantum Young specialization.

use itertools::Itertools;

use super::clearing::{Clearing, FracSum, MinorRatioWord};
use super::{young_terms, GrassmannError, MinorSymbol};
use crate::check::Outcome;
use crate::combinatorics::tuple_length;
use crate::quantum::NCPoly;
use crate::quasi_plucker::{qp_coord, verify_qp_relation};
use crate::quasidet::DivMatrix;
use crate::scalars::{LaurentPoly, Quaternion, Scalar};

fn without(v: &[usize], x: usize) -> Vec<usize> {
    v.iter().copied().filter(|&y| y != x).collect()
}

fn position(v: &[usize], x: usize) -> i32 {
    v.iter().position(|&y| y == x).expect("member") as i32 + 1
}

fn sym(rows: Vec<usize>, cols: Vec<usize>) -> MinorSymbol {
    MinorSymbol::with_cols(rows, cols).expect("matching sizes")
}

fn q(e: i32) -> LaurentPoly {
    LaurentPoly::q_pow(e)
}

fn nq(e: i32) -> LaurentPoly {
    LaurentPoly::neg_q_pow(e)
}

/// `|X_{R,C}|_{rc} = (−q)^{pos_C(c) − pos_R(r)} [R|C] · [R∖r | C∖c]⁻¹`,
/// checked against the border formula
/// `x_rc − Σ ξ_a D⁻¹ S(B)_{ab} ζ_b`, where `B = X_{R∖r, C∖c}`, `D = det_q B`
/// and `S` is the antipode (so `B⁻¹ = D⁻¹ S(B)`). `R`, `C` ascending.
pub fn quasidet_ratio_equation(r_set: &[usize], c_set: &[usize], r: usize, c: usize) -> FracSum {
    let rows_b = without(r_set, r);
    let cols_b = without(c_set, c);
    let d = sym(rows_b.clone(), cols_b.clone());
    let mut lhs = vec![MinorRatioWord::one().times(sym(vec![r], vec![c]))];
    for (a, &col_a) in cols_b.iter().enumerate() {
        for (b, &row_b) in rows_b.iter().enumerate() {
            let s_ab = sym(without(&rows_b, row_b), without(&cols_b, col_a));
            let w = MinorRatioWord::scalar(nq(b as i32 - a as i32).neg())
                .times(sym(vec![r], vec![col_a]))
                .over(d.clone())
                .times(s_ab)
                .times(sym(vec![row_b], vec![c]));
            lhs.push(w);
        }
    }
    let rhs = vec![MinorRatioWord::scalar(nq(position(c_set, c) - position(r_set, r)))
        .times(sym(r_set.to_vec(), c_set.to_vec()))
        .over(d)];
    FracSum::equation(lhs, rhs)
}

pub fn verify_quasidet_ratio(clearing: &Clearing<'_>, r_set: &[usize], c_set: &[usize], r: usize, c: usize) -> Result<Outcome, GrassmannError> {
    clearing.verify_zero(&quasidet_ratio_equation(r_set, c_set, r, c))
}

/// `|▢i₁ ⋯ i_d|` as the word `[i₁ ⋯ i_d] · det_q(A_{{i₂..i_d},{2..d}})⁻¹`.
pub fn boxed_word(rows: &[usize]) -> MinorRatioWord {
    let d = rows.len();
    MinorRatioWord::one().times(MinorSymbol::new(rows.to_vec())).over(sym(rows[1..].iter().copied().sorted().collect(), (2..=d).collect()))
}

/// Both boxed identities: `|▢ rows|` equals its minor-ratio word (checked
/// through the border formula), and
/// `|▢i M||▢j M|⁻¹ = [iM][jM]⁻¹` after substituting those words.
pub fn verify_boxed_identities(clearing: &Clearing<'_>, rows: &[usize], i: usize, j: usize, m: &[usize]) -> Result<Outcome, GrassmannError> {
    let d = rows.len();
    let sorted: Vec<usize> = rows.iter().copied().sorted().collect();
    let first = clearing.verify_zero(&quasidet_ratio_equation(&sorted, &(1..=d).collect::<Vec<_>>(), rows[0], 1))?;
    if !first.is_pass() {
        return Ok(first);
    }
    // the word form must agree with the ratio just certified
    let mut as_ratio = MinorRatioWord::scalar(nq(1 - position(&sorted, rows[0])))
        .times(MinorSymbol::new(sorted.clone()))
        .over(sym(sorted.iter().copied().filter(|&x| x != rows[0]).collect(), (2..=d).collect()));
    as_ratio.prefactor = as_ratio.prefactor.neg();
    let agree = clearing.verify_zero(&FracSum::new(vec![boxed_word(rows), as_ratio]))?;
    if !agree.is_pass() {
        return Ok(agree);
    }
    let im: Vec<usize> = std::iter::once(i).chain(m.iter().copied()).collect();
    let jm: Vec<usize> = std::iter::once(j).chain(m.iter().copied()).collect();
    for r in [&im, &jm] {
        let sorted: Vec<usize> = r.iter().copied().sorted().collect();
        let o = clearing.verify_zero(&quasidet_ratio_equation(&sorted, &(1..=r.len()).collect::<Vec<_>>(), r[0], 1))?;
        if !o.is_pass() {
            return Ok(o);
        }
    }
    let lhs = boxed_word(&im).then(&boxed_word(&jm).inverse()?);
    let rhs = MinorRatioWord::one().times(MinorSymbol::new(im.clone())).over(MinorSymbol::new(jm.clone()));
    clearing.verify_zero(&FracSum::equation(vec![lhs], vec![rhs]))
}

/// `det_q X = (−q)^{ℓ(rows) − ℓ(cols)} Π_k |X_{R_k,C_k}|_{r_k c_k}` with
/// `R_k = {rows[k..]}`, `C_k = {cols[k..]}`. Each factor is certified as a
/// minor ratio, consecutive nested minors are checked to commute, and the
/// product is cleared against `det_q X`.
pub fn verify_quant_via_quasi(clearing: &Clearing<'_>, rows: &[usize], cols: &[usize]) -> Result<Outcome, GrassmannError> {
    let n = rows.len();
    if cols.len() != n {
        return Err(GrassmannError::ShapeMismatch(format!("{n} rows but {} columns", cols.len())));
    }
    let mut product = MinorRatioWord::scalar(nq(tuple_length(rows) as i32 - tuple_length(cols) as i32));
    let mut nested = Vec::new();
    for k in 0..n {
        let r_set: Vec<usize> = rows[k..].iter().copied().sorted().collect();
        let c_set: Vec<usize> = cols[k..].iter().copied().sorted().collect();
        let o = verify_quasidet_ratio(clearing, &r_set, &c_set, rows[k], cols[k])?;
        if !o.is_pass() {
            return Ok(o);
        }
        let whole = sym(r_set.clone(), c_set.clone());
        let inner = sym(without(&r_set, rows[k]), without(&c_set, cols[k]));
        product = product
            .scaled(&nq(position(&c_set, cols[k]) - position(&r_set, rows[k])))
            .times(whole.clone())
            .over(inner);
        nested.push(whole);
    }
    for pair in nested.windows(2) {
        let b = clearing.minors().q_commute_exponent(&pair[0], &pair[1])?;
        if b != Some(0) {
            return Ok(Outcome::fail(format!("nested minors {} and {} give exponent {b:?}", pair[0], pair[1])));
        }
    }
    let all: Vec<usize> = (1..=n).collect();
    let det = MinorRatioWord::one().times(sym(all.clone(), all));
    clearing.verify_zero(&FracSum::equation(vec![det], vec![product]))
}

/// One asserted line of the specialization replay.
#[derive(Debug, Clone)]
pub struct ChainLine {
    pub name: &'static str,
    pub outcome: Outcome,
}

#[derive(Debug, Clone)]
pub struct SpecializationReport {
    pub lines: Vec<ChainLine>,
    pub degenerate: bool,
}

impl SpecializationReport {
    pub fn outcome(&self) -> Outcome {
        for l in &self.lines {
            if !l.outcome.is_pass() {
                let mut o = l.outcome.clone();
                o.detail = Some(format!("{}: {}", l.name, o.detail.unwrap_or_default()));
                return o;
            }
        }
        Outcome::pass()
    }
}

fn concat(a: usize, rest: &[usize]) -> Vec<usize> {
    std::iter::once(a).chain(rest.iter().copied()).collect()
}

/// Fixed quaternion samples for the division-ring starting line.
fn samples(n: usize, d: usize) -> Vec<DivMatrix<Quaternion>> {
    (0..3).map(|t| DivMatrix::random_quaternion(n, d, &mut crate::check::trial_rng(0, "specialization", &[n as u64, d as u64], t))).collect()
}

/// Replays the derivation of `(𝒴_{I,J})` for `r = 1` from the
/// quasi-Plücker relation `(𝒫_{i, I∖i, J})`, asserting every line.
///
/// `I` has `d + 1` entries, `J` has `d − 1`, and `i_choice ∈ I∖J`. Tuples
/// with repeated entries are accepted; when `I∖J` is empty every term of the
/// target vanishes by the alternating law and only that is checked.
pub fn verify_specialization(
    clearing: &Clearing<'_>,
    d: usize,
    i_set: &[usize],
    j_set: &[usize],
    i_choice: usize,
) -> Result<SpecializationReport, GrassmannError> {
    let minors = clearing.minors();
    let ctx = minors.context();
    if i_set.len() != d + 1 || j_set.len() + 1 != d || ctx.cols() != d {
        return Err(GrassmannError::ShapeMismatch(format!("need |I| = d+1, |J| = d-1 in an n x d context; got I={i_set:?}, J={j_set:?}, d={d}")));
    }
    let outside: Vec<usize> = i_set.iter().copied().filter(|x| !j_set.contains(x)).collect();
    if outside.is_empty() {
        let mut sum = NCPoly::zero(ctx);
        let mut all_vanish = true;
        for (e, a, b, _) in young_terms(i_set, j_set, 1) {
            all_vanish &= a.canonical().is_none() || b.canonical().is_none();
            sum = sum.add(&minors.eval(&a)?.mul(&minors.eval(&b)?)?.scale(&nq(e)))?;
        }
        let outcome = Outcome::from_bool(all_vanish && sum.is_zero(), || format!("I={i_set:?}, J={j_set:?}: some term survives"));
        return Ok(SpecializationReport { lines: vec![ChainLine { name: "alternating_zero", outcome }], degenerate: true });
    }
    if !outside.contains(&i_choice) {
        return Err(GrassmannError::ShapeMismatch(format!("i = {i_choice} is not in I∖J = {outside:?}")));
    }
    if i_set.iter().duplicates().next().is_some() {
        return Err(GrassmannError::ShapeMismatch(format!("I = {i_set:?} repeats an entry but I∖J is nonempty")));
    }
    let i = i_choice;
    let l_set = without(i_set, i);
    let m_set = j_set.to_vec();
    let mut lines = Vec::new();
    let mut push = |name: &'static str, outcome: Outcome| lines.push(ChainLine { name, outcome });

    // Line 0: the relation itself, on division-ring samples.
    let mut line0 = Outcome::pass();
    for a in samples(ctx.rows(), d) {
        match verify_qp_relation(&a, i, &l_set, &m_set) {
            Ok(v) if v.is_one() => {}
            Ok(v) => {
                line0 = Outcome::fail(format!("quasi-Plücker sum {v}"));
                break;
            }
            Err(e) => {
                line0 = Outcome::undefined(e.to_string());
                break;
            }
        }
        // r_{ij}^{L∖j} r_{ji}^M with the boxed ratios evaluated directly
        for &lam in &l_set {
            if m_set.contains(&lam) {
                continue;
            }
            let direct = qp_coord(&a, i, lam, &without(&l_set, lam), 1);
            if direct.is_err() {
                line0 = Outcome::undefined(format!("coordinate r_{i}{lam} undefined on a sample"));
            }
        }
    }
    push("quasi_plucker_relation", line0);

    // Boxed ratios become minor ratios.
    let mut boxed = Outcome::pass();
    for &lam in &l_set {
        let l_lam = without(&l_set, lam);
        let o = verify_boxed_identities(clearing, &concat(i, &l_lam), i, lam, &l_lam)?;
        if !o.is_pass() {
            boxed = o;
            break;
        }
        if !m_set.contains(&lam) {
            let o = verify_boxed_identities(clearing, &concat(lam, &m_set), lam, i, &m_set)?;
            if !o.is_pass() {
                boxed = o;
                break;
            }
        }
    }
    push("boxed_to_minors", boxed);

    let ms = |rows: Vec<usize>| MinorSymbol::new(rows);
    let im = ms(concat(i, &m_set));
    let l_sym = ms(l_set.clone());
    let c = |lam: usize| if i < lam { 1 } else { -1 };
    let ell = |v: Vec<usize>| tuple_length(&v) as i32;

    // A: 1 = Σ [iL_λ][λL_λ]⁻¹[λM][iM]⁻¹
    let rhs_a = l_set
        .iter()
        .map(|&lam| {
            let l_lam = without(&l_set, lam);
            MinorRatioWord::one().times(ms(concat(i, &l_lam))).over(ms(concat(lam, &l_lam))).times(ms(concat(lam, &m_set))).over(im.clone())
        })
        .collect();
    push("ratio_relation", clearing.verify_zero(&FracSum::equation(vec![MinorRatioWord::one()], rhs_a))?);

    // B: [iM] = Σ [iL_λ][λL_λ]⁻¹[λM]
    let rhs_b = l_set
        .iter()
        .map(|&lam| {
            let l_lam = without(&l_set, lam);
            MinorRatioWord::one().times(ms(concat(i, &l_lam))).over(ms(concat(lam, &l_lam))).times(ms(concat(lam, &m_set)))
        })
        .collect();
    push("right_cleared", clearing.verify_zero(&FracSum::equation(vec![MinorRatioWord::one().times(im.clone())], rhs_b))?);

    // C: [iM] = Σ q^{c_λ} [λL_λ]⁻¹[iL_λ][λM]
    let rhs_c = l_set
        .iter()
        .map(|&lam| {
            let l_lam = without(&l_set, lam);
            MinorRatioWord::scalar(q(c(lam))).over(ms(concat(lam, &l_lam))).times(ms(concat(i, &l_lam))).times(ms(concat(lam, &m_set)))
        })
        .collect();
    push("weak_commuted", clearing.verify_zero(&FracSum::equation(vec![MinorRatioWord::one().times(im.clone())], rhs_c))?);

    // D: [iM] = Σ q^{c_λ} (−q)^{ℓ(λ|L_λ)} [L]⁻¹[iL_λ][λM]
    let rhs_d = l_set
        .iter()
        .map(|&lam| {
            let l_lam = without(&l_set, lam);
            MinorRatioWord::scalar(q(c(lam)).mul(&nq(ell(concat(lam, &l_lam)))))
                .over(l_sym.clone())
                .times(ms(concat(i, &l_lam)))
                .times(ms(concat(lam, &m_set)))
        })
        .collect();
    push("alternated_denominator", clearing.verify_zero(&FracSum::equation(vec![MinorRatioWord::one().times(im.clone())], rhs_d))?);

    // E: [L][iM] = Σ q^{c_λ} (−q)^{ℓ(λ|L_λ)} [iL_λ][λM]
    let rhs_e: Vec<MinorRatioWord> = l_set
        .iter()
        .map(|&lam| {
            let l_lam = without(&l_set, lam);
            MinorRatioWord::scalar(q(c(lam)).mul(&nq(ell(concat(lam, &l_lam))))).times(ms(concat(i, &l_lam))).times(ms(concat(lam, &m_set)))
        })
        .collect();
    let lhs_e = MinorRatioWord::one().times(l_sym.clone()).times(im.clone());
    push("left_cleared", clearing.verify_zero(&FracSum::equation(vec![lhs_e.clone()], rhs_e))?);

    // F: [L][iM] = Σ q^{c_λ} (−q)^{ℓ(λ|L_λ) − ℓ(i|L_λ)} [I∖λ][λM]
    let rhs_f: Vec<MinorRatioWord> = l_set
        .iter()
        .map(|&lam| {
            let l_lam = without(&l_set, lam);
            let e = ell(concat(lam, &l_lam)) - ell(concat(i, &l_lam));
            MinorRatioWord::scalar(q(c(lam)).mul(&nq(e))).times(ms(without(i_set, lam))).times(ms(concat(lam, &m_set)))
        })
        .collect();
    push("sorted_minors", clearing.verify_zero(&FracSum::equation(vec![lhs_e.clone()], rhs_f.clone()))?);

    // G: (−q)^{−ℓ(L|i)} × (F moved to one side) is, term by term, the
    // Young sum Σ_{x∈I} (−q)^{−ℓ(I∖x|x)} [I∖x][xJ].
    let scale = nq(-ell([l_set.clone(), vec![i]].concat()));
    let mut from_f: Vec<(LaurentPoly, MinorSymbol, MinorSymbol)> = vec![(scale.clone(), l_sym.clone(), im.clone())];
    for w in &rhs_f {
        from_f.push((w.prefactor.mul(&scale).neg(), w.factors[0].symbol.clone(), w.factors[1].symbol.clone()));
    }
    let target: Vec<(LaurentPoly, MinorSymbol, MinorSymbol)> =
        young_terms(i_set, j_set, 1).into_iter().map(|(e, a, b, _)| (nq(e), a, b)).collect();
    let same = super::formal_expansion(&from_f) == super::formal_expansion(&target);
    push("young_coefficients", Outcome::from_bool(same, || format!("I={i_set:?}, J={j_set:?}, i={i}: rescaled line differs from the Young sum")));
    let terminal = super::verify_young_symmetry(minors, d, 1, i_set, j_set)?;
    push("young_relation", terminal);

    Ok(SpecializationReport { lines, degenerate: false })
}
