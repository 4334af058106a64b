use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::{forward_ops, Rational, Scalar, ScalarError};

/// Rational quaternion `a + b·i + c·j + d·k`.
///
/// Multiplication follows `i² = j² = k² = ijk = −1`, so `i·j = k = −j·i`.
/// Every nonzero element is invertible through `x⁻¹ = x̄ / N(x)`.
///
/// Stored as four integer numerators over one positive denominator, with
/// the five integers coprime, so each operation normalizes once.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quaternion {
    num: [BigInt; 4],
    den: BigInt,
}

impl Default for Quaternion {
    fn default() -> Self {
        Quaternion { num: Default::default(), den: BigInt::one() }
    }
}

impl Quaternion {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        let parts = [a, b, c, d];
        let den = parts.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let num = parts.map(|x| x.numer() * (&den / x.denom()));
        Self::reduced(num, den)
    }

    fn reduced(mut num: [BigInt; 4], mut den: BigInt) -> Self {
        if num.iter().all(Zero::is_zero) {
            return Self::default();
        }
        let g = num.iter().fold(den.clone(), |g, x| g.gcd(x));
        if den.is_negative() {
            den = -den;
            for x in &mut num {
                *x = -&*x;
            }
        }
        if !g.is_one() {
            den /= &g;
            for x in &mut num {
                *x /= &g;
            }
        }
        Quaternion { num, den }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Quaternion { num: [a, b, c, d].map(BigInt::from), den: BigInt::one() }
    }

    pub fn i() -> Self {
        Quaternion::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Quaternion::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Quaternion::from_ints(0, 0, 0, 1)
    }

    /// Components `[a, b, c, d]`.
    pub fn components(&self) -> [Rational; 4] {
        self.num.clone().map(|x| Rational::from_big(x, self.den.clone()))
    }

    pub fn conjugate(&self) -> Self {
        let [a, b, c, d] = &self.num;
        Quaternion { num: [a.clone(), -b, -c, -d], den: self.den.clone() }
    }

    /// `a² + b² + c² + d²`.
    pub fn norm(&self) -> Rational {
        Rational::from_big(int_norm(&self.num), &self.den * &self.den)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::reduced(self.num.clone().map(|x| x * s.numer()), &self.den * s.denom())
    }

    /// Integer components drawn uniformly from `−9..=9`.
    pub fn random_small<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let mut draw = || rng.random_range(-9..=9);
        Quaternion::from_ints(draw(), draw(), draw(), draw())
    }

    fn combine(&self, o: &Self, sign: i32) -> Self {
        if self.den == o.den {
            let num = std::array::from_fn(|t| if sign > 0 { &self.num[t] + &o.num[t] } else { &self.num[t] - &o.num[t] });
            return Self::reduced(num, self.den.clone());
        }
        let g = self.den.gcd(&o.den);
        let (fs, fo) = (&o.den / &g, &self.den / &g);
        let num = std::array::from_fn(|t| {
            let (x, y) = (&self.num[t] * &fs, &o.num[t] * &fo);
            if sign > 0 { x + y } else { x - y }
        });
        Self::reduced(num, &self.den * &fs)
    }
}

fn int_norm(n: &[BigInt; 4]) -> BigInt {
    n.iter().map(|x| x * x).sum()
}

impl Scalar for Quaternion {
    fn zero() -> Self {
        Quaternion::default()
    }
    fn one() -> Self {
        Quaternion::from_ints(1, 0, 0, 0)
    }
    fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }
    fn add(&self, o: &Self) -> Self {
        self.combine(o, 1)
    }
    fn sub(&self, o: &Self) -> Self {
        self.combine(o, -1)
    }
    fn mul(&self, o: &Self) -> Self {
        let [a1, b1, c1, d1] = &self.num;
        let [a2, b2, c2, d2] = &o.num;
        let num = [
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 + d1 * a2 - c1 * b2,
        ];
        Self::reduced(num, &self.den * &o.den)
    }
    fn neg(&self) -> Self {
        Quaternion { num: self.num.clone().map(|x| -x), den: self.den.clone() }
    }
    fn try_inverse(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::ZeroInverse);
        }
        let c = self.conjugate();
        Ok(Self::reduced(c.num.map(|x| x * &self.den), int_norm(&self.num)))
    }
    fn from_rational(r: &Rational) -> Self {
        Quaternion::new(r.clone(), Rational::zero(), Rational::zero(), Rational::zero())
    }
}

forward_ops!(Quaternion);

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.components();
        write!(f, "({a} + {b}i + {c}j + {d}k)")
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
