//! Exact coefficient fields.
//!
//! Everything above this module is generic over [`Field`], so the same
//! Gröbner code runs over the rationals and over rational functions in a
//! set of parameters.

mod mpoly;
mod ratfun;
mod rational;

use std::fmt;

pub use mpoly::ParamPoly;
pub use ratfun::RationalFunction;
pub use rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoeffError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at the evaluation point")]
    Pole,
    #[error("evaluation point has {got} coordinates, expected at least {needed}")]
    ArityMismatch { needed: usize, got: usize },
    #[error("cannot parse coefficient `{0}`")]
    Parse(String),
}

/// A commutative field with exact, canonical arithmetic.
///
/// Equality is representation equality; implementations keep values in
/// normal form after every operation.
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self, CoeffError>;
    fn div(&self, other: &Self) -> Result<Self, CoeffError> {
        Ok(self.mul(&other.inv()?))
    }
    fn from_int(n: i64) -> Self;
    fn from_rational(q: &Rational) -> Self;
    /// Whether the value is a nonzero constant of the prime field scaled
    /// by something other than one; used only for printing signs.
    fn is_negative_constant(&self) -> bool {
        false
    }
    /// `(u, v)` with `u` nonzero and `u·a = v·b`, used to cancel a term
    /// `a` against a leading coefficient `b` as `u·f − v·g`. Domains with
    /// cheap integral arithmetic avoid division here.
    fn cross_multipliers(a: &Self, b: &Self) -> (Self, Self) {
        (Self::one(), a.div(b).expect("nonzero leading coefficient"))
    }
    /// Nonzero scalar taking `coeffs` (leading one first) to a normal
    /// form; monic by default.
    fn normalizer(coeffs: &[&Self]) -> Self {
        coeffs.first().map_or_else(Self::one, |c| c.inv().expect("nonzero leading coefficient"))
    }
}
