use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::rewrite::{mul_normal_gen, normal_form_word};
use super::{AlgebraContext, AlgebraError, Generator, NCWord};
use crate::scalars::{LaurentPoly, Scalar};

/// Element of a `q`-generic algebra, always stored in normal form.
///
/// Text form: terms in increasing word order joined by ` + `, each
/// `(<laurent>)*<word>` with words written `x[i,j]*x[k,l]` (`y[..]` for the
/// second block); the empty word prints as `(<laurent>)`; zero prints `0`.
#[derive(Clone)]
pub struct NCPoly {
    ctx: Arc<AlgebraContext>,
    terms: BTreeMap<NCWord, LaurentPoly>,
}

impl PartialEq for NCPoly {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.id == other.ctx.id && self.terms == other.terms
    }
}

impl Eq for NCPoly {}

fn check_word(ctx: &AlgebraContext, w: &[Generator]) -> Result<(), AlgebraError> {
    match w.iter().find(|g| !ctx.contains(**g)) {
        Some(&g) => Err(AlgebraError::OutOfContext(g)),
        None => Ok(()),
    }
}

impl NCPoly {
    pub(crate) fn from_normal_terms(ctx: &Arc<AlgebraContext>, mut terms: BTreeMap<NCWord, LaurentPoly>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        NCPoly { ctx: ctx.clone(), terms }
    }

    pub fn zero(ctx: &Arc<AlgebraContext>) -> Self {
        Self::from_normal_terms(ctx, BTreeMap::new())
    }

    pub fn one(ctx: &Arc<AlgebraContext>) -> Self {
        Self::constant(ctx, LaurentPoly::one())
    }

    pub fn constant(ctx: &Arc<AlgebraContext>, c: LaurentPoly) -> Self {
        Self::from_normal_terms(ctx, BTreeMap::from([(NCWord::empty(), c)]))
    }

    pub fn gen(ctx: &Arc<AlgebraContext>, g: Generator) -> Result<Self, AlgebraError> {
        Self::word(ctx, &[g])
    }

    /// `x_ij` of the first block.
    pub fn x(ctx: &Arc<AlgebraContext>, i: usize, j: usize) -> Result<Self, AlgebraError> {
        Self::gen(ctx, Generator::new(i, j))
    }

    /// Normal form of a single word.
    pub fn word(ctx: &Arc<AlgebraContext>, w: &[Generator]) -> Result<Self, AlgebraError> {
        check_word(ctx, w)?;
        Ok(Self::from_normal_terms(ctx, normal_form_word(ctx, w)))
    }

    pub fn context(&self) -> &Arc<AlgebraContext> {
        &self.ctx
    }

    pub fn terms(&self) -> &BTreeMap<NCWord, LaurentPoly> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &[Generator]) -> LaurentPoly {
        self.terms.get(&NCWord(w.to_vec())).cloned().unwrap_or_default()
    }

    fn same(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.ctx.id == other.ctx.id {
            Ok(())
        } else {
            Err(AlgebraError::ContextMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same(other)?;
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            terms.entry(w.clone()).or_default().add_assign_ref(c);
        }
        Ok(Self::from_normal_terms(&self.ctx, terms))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&LaurentPoly::from_int(-1))
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let terms = self.terms.iter().map(|(w, x)| (w.clone(), x.mul(c))).collect();
        Self::from_normal_terms(&self.ctx, terms)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same(other)?;
        let mut acc: BTreeMap<NCWord, LaurentPoly> = BTreeMap::new();
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                let c = cu.mul(cv);
                let mut cur: BTreeMap<NCWord, LaurentPoly> = BTreeMap::from([(u.clone(), c)]);
                for &g in v.letters() {
                    let mut next: BTreeMap<NCWord, LaurentPoly> = BTreeMap::new();
                    for (w, cw) in &cur {
                        for (w2, c2) in mul_normal_gen(&self.ctx, w, g).iter() {
                            next.entry(w2.clone()).or_default().add_assign_ref(&cw.mul(c2));
                        }
                    }
                    cur = next;
                }
                for (w, cw) in cur {
                    acc.entry(w).or_default().add_assign_ref(&cw);
                }
            }
        }
        Ok(Self::from_normal_terms(&self.ctx, acc))
    }

    /// Product of a sequence; the empty product is 1.
    pub fn product<'a>(ctx: &Arc<AlgebraContext>, factors: impl IntoIterator<Item = &'a NCPoly>) -> Result<Self, AlgebraError> {
        factors.into_iter().try_fold(Self::one(ctx), |acc, f| acc.mul(f))
    }

    /// Sum of `coefficient × raw word` terms, each reduced to normal form.
    pub fn normal_form(ctx: &Arc<AlgebraContext>, raw: &[(Vec<Generator>, LaurentPoly)]) -> Result<Self, AlgebraError> {
        let mut acc = Self::zero(ctx);
        for (w, c) in raw {
            acc = acc.add(&Self::word(ctx, w)?.scale(c))?;
        }
        Ok(acc)
    }
}

pub fn nc_add(a: &NCPoly, b: &NCPoly) -> Result<NCPoly, AlgebraError> {
    a.add(b)
}

pub fn nc_sub(a: &NCPoly, b: &NCPoly) -> Result<NCPoly, AlgebraError> {
    a.sub(b)
}

pub fn nc_mul(a: &NCPoly, b: &NCPoly) -> Result<NCPoly, AlgebraError> {
    a.mul(b)
}

/// Structural equality of normal forms within one context.
pub fn nc_eq(a: &NCPoly, b: &NCPoly) -> Result<bool, AlgebraError> {
    a.same(b)?;
    Ok(a.terms == b.terms)
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| if w.is_empty() { format!("({c})") } else { format!("({c})*{w}") })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
