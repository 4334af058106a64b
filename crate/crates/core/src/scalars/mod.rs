//! Exact scalar towers: rationals, rational quaternions and Laurent
//! polynomials in `q`.
//!
//! Every other module is generic over [`Scalar`]. Nothing here touches
//! floating point.

mod laurent;
mod quaternion;
mod rational;

pub use laurent::LaurentPoly;
pub use quaternion::Quaternion;
pub use rational::Rational;

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("attempted to invert zero")]
    ZeroInverse,
    #[error("{0} is not a unit (only monomials c*q^m are invertible)")]
    NonUnit(String),
    #[error("cannot substitute q = 0 into a Laurent polynomial")]
    ZeroSubstitution,
}

/// Exact ring element with a partial inverse.
///
/// For [`Rational`] and [`Quaternion`] every nonzero element is invertible; for
/// [`LaurentPoly`] only monomials are.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn try_inverse(&self) -> Result<Self, ScalarError>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Embeds a rational constant.
    fn from_rational(r: &Rational) -> Self;
}

/// Scalars whose multiplication commutes. Enables the classical
/// determinant oracles.
pub trait CommutativeScalar: Scalar {}

macro_rules! forward_ops {
    ($t:ty) => {
        impl std::ops::Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                $crate::scalars::Scalar::add(&self, &rhs)
            }
        }
        impl<'a> std::ops::Add<&'a $t> for &'a $t {
            type Output = $t;
            fn add(self, rhs: &'a $t) -> $t {
                $crate::scalars::Scalar::add(self, rhs)
            }
        }
        impl std::ops::Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                $crate::scalars::Scalar::sub(&self, &rhs)
            }
        }
        impl<'a> std::ops::Sub<&'a $t> for &'a $t {
            type Output = $t;
            fn sub(self, rhs: &'a $t) -> $t {
                $crate::scalars::Scalar::sub(self, rhs)
            }
        }
        impl std::ops::Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                $crate::scalars::Scalar::mul(&self, &rhs)
            }
        }
        impl<'a> std::ops::Mul<&'a $t> for &'a $t {
            type Output = $t;
            fn mul(self, rhs: &'a $t) -> $t {
                $crate::scalars::Scalar::mul(self, rhs)
            }
        }
        impl std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                $crate::scalars::Scalar::neg(&self)
            }
        }
        impl<'a> std::ops::Neg for &'a $t {
            type Output = $t;
            fn neg(self) -> $t {
                $crate::scalars::Scalar::neg(self)
            }
        }
    };
}
pub(crate) use forward_ops;
