//! The `q = 1` image: commutative polynomials over the rationals.

use std::collections::BTreeMap;
use std::fmt;

use super::{Generator, NCPoly};
use crate::scalars::{CommutativeScalar, Rational, Scalar, ScalarError};

/// Commutative polynomial; monomials are sorted generator lists.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct CommPoly {
    terms: BTreeMap<Vec<Generator>, Rational>,
}

impl CommPoly {
    pub fn var(g: Generator) -> Self {
        CommPoly { terms: BTreeMap::from([(vec![g], Rational::one())]) }
    }

    pub fn x(i: usize, j: usize) -> Self {
        Self::var(Generator::new(i, j))
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Generator>, Rational> {
        &self.terms
    }

    fn add_term(&mut self, mut mono: Vec<Generator>, c: &Rational) {
        mono.sort_unstable();
        let e = self.terms.entry(mono).or_insert_with(Rational::zero);
        *e = e.add(c);
        self.terms.retain(|_, v| !v.is_zero());
    }
}

/// Evaluates coefficients at `q = 1` and lets the generators commute.
pub fn specialize_q1(p: &NCPoly) -> CommPoly {
    let one = Rational::one();
    let mut out = CommPoly::default();
    for (w, c) in p.terms() {
        let v = c.eval_q(&one).expect("q = 1 is nonzero");
        out.add_term(w.letters().to_vec(), &v);
    }
    out
}

impl Scalar for CommPoly {
    fn zero() -> Self {
        CommPoly::default()
    }

    fn one() -> Self {
        Self::from_rational(&Rational::one())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = CommPoly::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mono: Vec<Generator> = m1.iter().chain(m2).copied().collect();
                out.add_term(mono, &c1.mul(c2));
            }
        }
        out
    }

    fn neg(&self) -> Self {
        CommPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }

    fn try_inverse(&self) -> Result<Self, ScalarError> {
        match self.terms.iter().next() {
            None => Err(ScalarError::ZeroInverse),
            Some((m, c)) if m.is_empty() && self.terms.len() == 1 => Ok(Self::from_rational(&c.try_inverse()?)),
            _ => Err(ScalarError::NonUnit(self.to_string())),
        }
    }

    fn from_rational(r: &Rational) -> Self {
        let mut out = CommPoly::default();
        out.add_term(Vec::new(), r);
        out
    }
}

impl CommutativeScalar for CommPoly {}

impl fmt::Display for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if m.is_empty() {
                    c.to_string()
                } else {
                    let w: Vec<String> = m.iter().map(|g| g.to_string()).collect();
                    format!("{c}*{}", w.join("*"))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
