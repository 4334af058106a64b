//! Words in minors and inverse minors, and the denominator-clearing engine
//! that turns a sum of such words into an NCPoly.
//!
//! Reordering only ever uses certified exponents: if `XY = q^b YX` then, for
//! factors `A`, `B` with symbols `X`, `Y` and signs `s_A, s_B ∈ {±1}`
//! (positive or inverse), `A B = q^{s_A s_B b} B A`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use super::{GrassmannError, MinorSymbol, Minors};
use crate::check::Outcome;
use crate::quantum::NCPoly;
use crate::scalars::{LaurentPoly, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub symbol: MinorSymbol,
    pub inverse: bool,
}

/// `prefactor · X₁^{±1} X₂^{±1} ⋯`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorRatioWord {
    pub prefactor: LaurentPoly,
    pub factors: Vec<Factor>,
}

impl MinorRatioWord {
    pub fn scalar(c: LaurentPoly) -> Self {
        MinorRatioWord { prefactor: c, factors: Vec::new() }
    }

    pub fn one() -> Self {
        Self::scalar(LaurentPoly::one())
    }

    pub fn times(mut self, m: MinorSymbol) -> Self {
        self.factors.push(Factor { symbol: m, inverse: false });
        self
    }

    pub fn over(mut self, m: MinorSymbol) -> Self {
        self.factors.push(Factor { symbol: m, inverse: true });
        self
    }

    pub fn scaled(mut self, c: &LaurentPoly) -> Self {
        self.prefactor = self.prefactor.mul(c);
        self
    }

    /// Product of two words.
    pub fn then(mut self, other: &MinorRatioWord) -> Self {
        self.prefactor = self.prefactor.mul(&other.prefactor);
        self.factors.extend(other.factors.iter().cloned());
        self
    }

    /// Inverse of the word: factors reversed with flipped exponents.
    pub fn inverse(&self) -> Result<Self, GrassmannError> {
        let prefactor = self.prefactor.try_inverse().map_err(|_| GrassmannError::ZeroDenominator(self.to_string()))?;
        let factors = self.factors.iter().rev().map(|f| Factor { symbol: f.symbol.clone(), inverse: !f.inverse }).collect();
        Ok(MinorRatioWord { prefactor, factors })
    }

    pub fn has_inverse(&self) -> bool {
        self.factors.iter().any(|f| f.inverse)
    }
}

impl fmt::Display for MinorRatioWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.prefactor)?;
        for x in &self.factors {
            write!(f, "*{}", x.symbol)?;
            if x.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

/// Formal sum of words; an equation `lhs = rhs` is held as `lhs − rhs`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FracSum {
    pub words: Vec<MinorRatioWord>,
}

impl FracSum {
    pub fn new(words: Vec<MinorRatioWord>) -> Self {
        FracSum { words }
    }

    /// `lhs − rhs`.
    pub fn equation(lhs: Vec<MinorRatioWord>, rhs: Vec<MinorRatioWord>) -> Self {
        let minus = LaurentPoly::from_int(-1);
        let words = lhs.into_iter().chain(rhs.into_iter().map(|w| w.scaled(&minus))).collect();
        FracSum { words }
    }
}

impl fmt::Display for FracSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.words.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.words.iter().map(|w| w.to_string()).collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClearStrategy {
    /// Every inverse is moved to the right end of its word.
    AllRight,
    AllLeft,
    /// Each inverse goes to whichever end is closer (ties go right).
    Nearest,
}

pub const STRATEGIES: [ClearStrategy; 3] = [ClearStrategy::AllRight, ClearStrategy::AllLeft, ClearStrategy::Nearest];

/// Result of clearing: the equation was multiplied by `left` (outermost
/// first) on the left and `right` on the right, leaving `poly = 0` to check.
#[derive(Debug, Clone)]
pub struct Cleared {
    pub strategy: ClearStrategy,
    pub left: Vec<MinorSymbol>,
    pub right: Vec<MinorSymbol>,
    pub poly: NCPoly,
}

pub struct Clearing<'a> {
    minors: &'a Minors,
    certs: Mutex<HashMap<(MinorSymbol, MinorSymbol), Option<i32>>>,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Slot {
    Left,
    Middle,
    Right,
}

impl<'a> Clearing<'a> {
    pub fn new(minors: &'a Minors) -> Self {
        Clearing { minors, certs: Mutex::new(HashMap::new()) }
    }

    pub fn minors(&self) -> &Minors {
        self.minors
    }

    /// `b` with `XY = q^b YX`.
    pub fn certificate(&self, x: &MinorSymbol, y: &MinorSymbol) -> Result<i32, GrassmannError> {
        if x == y {
            return Ok(0);
        }
        let key = (x.clone(), y.clone());
        let cached = self.certs.lock().expect("cert cache poisoned").get(&key).copied();
        let b = match cached {
            Some(b) => b,
            None => {
                // q_commute_exponent(I, J) gives [J][I] = q^b [I][J]
                let b = self.minors.q_commute_exponent(y, x)?;
                let mut certs = self.certs.lock().expect("cert cache poisoned");
                certs.insert(key, b);
                certs.insert((y.clone(), x.clone()), b.map(|v| -v));
                b
            }
        };
        b.ok_or_else(|| GrassmannError::NoCommutationCertificate { a: x.to_string(), b: y.to_string() })
    }

    /// Coefficient `c` with `A B = c · B A`.
    fn swap_coefficient(&self, a: &Factor, b: &Factor) -> Result<LaurentPoly, GrassmannError> {
        let sign = if a.inverse == b.inverse { 1 } else { -1 };
        Ok(LaurentPoly::q_pow(sign * self.certificate(&a.symbol, &b.symbol)?))
    }

    /// Sorts symbols, folds the alternating signs into the prefactor,
    /// drops vanishing words and cancels adjacent `X X⁻¹`.
    fn canonicalize(&self, w: &MinorRatioWord) -> Result<Option<MinorRatioWord>, GrassmannError> {
        let mut prefactor = w.prefactor.clone();
        let mut out: Vec<Factor> = Vec::new();
        for f in &w.factors {
            if f.symbol.is_empty() {
                continue;
            }
            let Some((e, sym)) = f.symbol.canonical() else {
                if f.inverse {
                    return Err(GrassmannError::ZeroDenominator(f.symbol.to_string()));
                }
                return Ok(None);
            };
            prefactor = prefactor.mul(&LaurentPoly::neg_q_pow(if f.inverse { -e } else { e }));
            let g = Factor { symbol: sym, inverse: f.inverse };
            match out.last() {
                Some(top) if top.symbol == g.symbol && top.inverse != g.inverse => {
                    out.pop();
                }
                _ => out.push(g),
            }
        }
        if prefactor.is_zero() {
            return Ok(None);
        }
        Ok(Some(MinorRatioWord { prefactor, factors: out }))
    }

    /// Bubbles factors into `[left inverses][positives][right inverses]`,
    /// cancelling a symbol against its inverse whenever they meet.
    fn arrange(&self, w: MinorRatioWord, strategy: ClearStrategy) -> Result<(MinorRatioWord, Vec<Slot>), GrassmannError> {
        let len = w.factors.len();
        let mut slots: Vec<Slot> = w
            .factors
            .iter()
            .enumerate()
            .map(|(k, f)| match (f.inverse, strategy) {
                (false, _) => Slot::Middle,
                (true, ClearStrategy::AllRight) => Slot::Right,
                (true, ClearStrategy::AllLeft) => Slot::Left,
                (true, ClearStrategy::Nearest) => {
                    if k < len - 1 - k {
                        Slot::Left
                    } else {
                        Slot::Right
                    }
                }
            })
            .collect();
        let MinorRatioWord { mut prefactor, mut factors } = w;
        let mut k = 0;
        while k + 1 < factors.len() {
            let (a, b) = (&factors[k], &factors[k + 1]);
            if a.symbol == b.symbol && a.inverse != b.inverse {
                factors.drain(k..k + 2);
                slots.drain(k..k + 2);
                k = k.saturating_sub(1);
                continue;
            }
            if slots[k] > slots[k + 1] {
                prefactor = prefactor.mul(&self.swap_coefficient(a, b)?);
                factors.swap(k, k + 1);
                slots.swap(k, k + 1);
                k = k.saturating_sub(1);
                continue;
            }
            k += 1;
        }
        Ok((MinorRatioWord { prefactor, factors }, slots))
    }

    /// Multiplies on the right by `x`, moving it left through the trailing
    /// inverses until it cancels or meets a positive factor.
    fn push_right(&self, w: &mut MinorRatioWord, slots: &mut Vec<Slot>, x: &MinorSymbol) -> Result<(), GrassmannError> {
        let pos = Factor { symbol: x.clone(), inverse: false };
        let mut k = w.factors.len();
        while k > 0 && w.factors[k - 1].inverse && slots[k - 1] == Slot::Right {
            let prev = &w.factors[k - 1];
            if prev.symbol == *x {
                w.factors.remove(k - 1);
                slots.remove(k - 1);
                return Ok(());
            }
            // Y⁻¹ X = c · X Y⁻¹
            w.prefactor = w.prefactor.mul(&self.swap_coefficient(prev, &pos)?);
            k -= 1;
        }
        w.factors.insert(k, pos);
        slots.insert(k, Slot::Middle);
        Ok(())
    }

    fn push_left(&self, w: &mut MinorRatioWord, slots: &mut Vec<Slot>, x: &MinorSymbol) -> Result<(), GrassmannError> {
        let pos = Factor { symbol: x.clone(), inverse: false };
        let mut k = 0;
        while k < w.factors.len() && w.factors[k].inverse && slots[k] == Slot::Left {
            let next = &w.factors[k];
            if next.symbol == *x {
                w.factors.remove(k);
                slots.remove(k);
                return Ok(());
            }
            // X Y⁻¹ = c · Y⁻¹ X
            w.prefactor = w.prefactor.mul(&self.swap_coefficient(&pos, next)?);
            k += 1;
        }
        w.factors.insert(k, pos);
        slots.insert(k, Slot::Middle);
        Ok(())
    }

    pub fn clear_with(&self, sum: &FracSum, strategy: ClearStrategy) -> Result<Cleared, GrassmannError> {
        let mut words: Vec<(MinorRatioWord, Vec<Slot>)> = Vec::new();
        for w in &sum.words {
            if let Some(c) = self.canonicalize(w)? {
                words.push(self.arrange(c, strategy)?);
            }
        }
        let (mut left, mut right) = (Vec::new(), Vec::new());
        loop {
            let r = words.iter().find_map(|(w, s)| (s.last() == Some(&Slot::Right)).then(|| w.factors.last().expect("nonempty").symbol.clone()));
            if let Some(x) = r {
                for (w, s) in words.iter_mut() {
                    self.push_right(w, s, &x)?;
                }
                right.push(x);
                continue;
            }
            let l = words.iter().find_map(|(w, s)| (s.first() == Some(&Slot::Left)).then(|| w.factors[0].symbol.clone()));
            if let Some(x) = l {
                for (w, s) in words.iter_mut() {
                    self.push_left(w, s, &x)?;
                }
                left.push(x);
                continue;
            }
            break;
        }
        let ctx = self.minors.context();
        let mut poly = NCPoly::zero(ctx);
        for (w, _) in &words {
            let mut term = NCPoly::constant(ctx, w.prefactor.clone());
            for f in &w.factors {
                debug_assert!(!f.inverse);
                term = term.mul(&self.minors.eval(&f.symbol)?)?;
            }
            poly = poly.add(&term)?;
        }
        Ok(Cleared { strategy, left, right, poly })
    }

    /// Tries each strategy in turn; the last missing certificate is
    /// reported if none succeeds.
    pub fn clear(&self, sum: &FracSum) -> Result<Cleared, GrassmannError> {
        let mut last = None;
        for s in STRATEGIES {
            match self.clear_with(sum, s) {
                Ok(c) => return Ok(c),
                Err(e @ GrassmannError::NoCommutationCertificate { .. }) => last = Some(e),
                Err(e) => return Err(e),
            }
        }
        Err(last.expect("at least one strategy"))
    }

    /// Clears the equation `sum = 0` and checks the polynomial.
    pub fn verify_zero(&self, sum: &FracSum) -> Result<Outcome, GrassmannError> {
        let c = self.clear(sum)?;
        Ok(Outcome::from_bool(c.poly.is_zero(), || format!("{sum} clears ({:?}) to {}", c.strategy, c.poly)))
    }
}
