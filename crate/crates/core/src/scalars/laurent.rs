use std::collections::BTreeMap;
use std::fmt;

use super::{forward_ops, CommutativeScalar, Rational, Scalar, ScalarError};

/// Finitely supported Laurent polynomial `Σ c_m q^m` over the rationals.
///
/// Zero coefficients are never stored, so derived equality is equality of
/// polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, Rational>,
}

impl LaurentPoly {
    pub fn monomial(coeff: Rational, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c))
    }

    /// `q^m`.
    pub fn q_pow(m: i32) -> Self {
        Self::monomial(Rational::one(), m)
    }

    /// `(−q)^m`.
    pub fn neg_q_pow(m: i32) -> Self {
        let sign = if m.rem_euclid(2) == 0 { 1 } else { -1 };
        Self::monomial(Rational::from_integer(sign), m)
    }

    /// `q − q⁻¹`.
    pub fn q_minus_q_inv() -> Self {
        LaurentPoly::from_terms([(1, Rational::one()), (-1, Rational::from_integer(-1))])
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, Rational)>>(terms: I) -> Self {
        let mut p = LaurentPoly::default();
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coefficient(&self, exp: i32) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// `Some((c, m))` when the polynomial is the single term `c·q^m`.
    pub fn as_monomial(&self) -> Option<(&Rational, i32)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, *e))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, exp: i32, coeff: &Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Rational::zero);
        *entry = &*entry + coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn add_assign_ref(&mut self, other: &LaurentPoly) {
        for (e, c) in &other.terms {
            self.add_term(*e, c);
        }
    }

    /// Multiplies by `q^shift`.
    pub fn shift(&self, shift: i32) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + shift, c.clone())).collect() }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return LaurentPoly::default();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect() }
    }

    /// Substitutes `q := value`.
    pub fn eval_q(&self, value: &Rational) -> Result<Rational, ScalarError> {
        if value.is_zero() {
            return Err(ScalarError::ZeroSubstitution);
        }
        Ok(self.terms.iter().fold(Rational::zero(), |acc, (e, c)| &acc + &(c * &value.pow(*e))))
    }

    /// Replaces `q` by `q⁻¹`.
    pub fn invert_variable(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }
}

impl Scalar for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::default()
    }
    fn one() -> Self {
        LaurentPoly::from_int(1)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_ref(other);
        out
    }
    fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, &-c);
        }
        out
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentPoly::default();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
    fn try_inverse(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::ZeroInverse);
        }
        match self.as_monomial() {
            Some((c, e)) => Ok(LaurentPoly::monomial(c.try_inverse()?, -e)),
            None => Err(ScalarError::NonUnit(self.to_string())),
        }
    }
    fn from_rational(r: &Rational) -> Self {
        LaurentPoly::constant(r.clone())
    }
}

impl CommutativeScalar for LaurentPoly {}

forward_ops!(LaurentPoly);

impl fmt::Display for LaurentPoly {
    /// Ascending exponents, e.g. `-q^-1 + 2 + 3/2*q^2`; the zero polynomial
    /// prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = if negative { -c } else { c.clone() };
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = abs.is_one();
            match (*e, unit) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{abs}*q")?,
                (m, true) => write!(f, "q^{m}")?,
                (m, false) => write!(f, "{abs}*q^{m}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_times_q_inverse_is_one() {
        assert_eq!(LaurentPoly::q_pow(1) * LaurentPoly::q_pow(-1), LaurentPoly::one());
    }

    #[test]
    fn monomial_inversion() {
        let minus_q = LaurentPoly::neg_q_pow(1);
        let inv = minus_q.try_inverse().unwrap();
        assert_eq!(inv, LaurentPoly::monomial(Rational::from_integer(-1), -1));
        let err = LaurentPoly::q_minus_q_inv().try_inverse().unwrap_err();
        assert!(matches!(err, ScalarError::NonUnit(_)));
        assert_eq!(LaurentPoly::zero().try_inverse(), Err(ScalarError::ZeroInverse));
    }

    #[test]
    fn evaluation() {
        let one = Rational::one();
        assert_eq!(LaurentPoly::q_minus_q_inv().eval_q(&one).unwrap(), Rational::zero());
        assert_eq!(LaurentPoly::neg_q_pow(-2).eval_q(&one).unwrap(), Rational::one());
        let p = LaurentPoly::one() - LaurentPoly::q_pow(2);
        assert_eq!(p.eval_q(&Rational::from_integer(2)).unwrap(), Rational::from_integer(-3));
        assert_eq!(p.eval_q(&Rational::zero()), Err(ScalarError::ZeroSubstitution));
    }

    #[test]
    fn display_is_ascending() {
        let p = LaurentPoly::from_terms([
            (2, Rational::new(3, 2)),
            (0, Rational::from_integer(2)),
            (-1, Rational::from_integer(-1)),
        ]);
        assert_eq!(p.to_string(), "-q^-1 + 2 + 3/2*q^2");
        assert_eq!(LaurentPoly::q_minus_q_inv().to_string(), "-q^-1 + q");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }
}
