use std::fmt;

use super::{CoeffError, Field, ParamPoly, Rational};

/// Element of Q(λ₁..λ_p), kept as a reduced fraction with a monic
/// denominator (lex order, λ₁ > λ₂ > …).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: ParamPoly,
    den: ParamPoly,
}

impl RationalFunction {
    pub fn new(num: ParamPoly, den: ParamPoly) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    pub fn from_poly(p: ParamPoly) -> Self {
        RationalFunction { num: p, den: ParamPoly::one() }
    }

    /// The parameter λ_{index+1}.
    pub fn param(index: usize) -> Self {
        Self::from_poly(ParamPoly::var(index))
    }

    fn normalize(num: ParamPoly, den: ParamPoly) -> Self {
        if num.is_zero() {
            return RationalFunction { num, den: ParamPoly::one() };
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        let lc = d.leading().expect("nonzero denominator").1.clone();
        if !lc.is_one() {
            let s = lc.inv().expect("nonzero");
            n = n.scale(&s);
            d = d.scale(&s);
        }
        RationalFunction { num: n, den: d }
    }

    pub fn numerator(&self) -> &ParamPoly {
        &self.num
    }

    pub fn denominator(&self) -> &ParamPoly {
        &self.den
    }

    /// Value at `point`; a vanishing denominator is reported as
    /// [`CoeffError::Pole`], distinct from a vanishing value.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational, CoeffError> {
        let d = self.den.evaluate(point)?;
        if d.is_zero() {
            return Err(CoeffError::Pole);
        }
        let n = self.num.evaluate(point)?;
        n.div(&d)
    }
}

impl Field for RationalFunction {
    fn zero() -> Self {
        Self::from_poly(ParamPoly::zero())
    }
    fn one() -> Self {
        Self::from_poly(ParamPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::normalize(self.num.add(&o.num), self.den.clone());
        }
        Self::normalize(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        Self::normalize(self.num.mul(&o.num), self.den.mul(&o.den))
    }
    fn neg(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }
    fn inv(&self) -> Result<Self, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }
    fn from_int(n: i64) -> Self {
        Self::from_poly(ParamPoly::constant(Rational::from_integer(n)))
    }
    fn from_rational(q: &Rational) -> Self {
        Self::from_poly(ParamPoly::constant(q.clone()))
    }
    fn is_negative_constant(&self) -> bool {
        self.den.is_constant() && self.num.constant_value().is_some_and(|c| c.signum() < 0)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == ParamPoly::one() {
            if self.num.terms().count() > 1 {
                write!(f, "({})", self.num)
            } else {
                write!(f, "{}", self.num)
            }
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(i: usize) -> RationalFunction {
        RationalFunction::param(i)
    }
    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn cancels_common_factor() {
        // (λ−1)/(λ²−1) → 1/(λ+1)
        let l = lam(0);
        let one = RationalFunction::one();
        let num = l.sub(&one);
        let den = l.mul(&l).sub(&one);
        let f = num.div(&den).unwrap();
        let expect = l.add(&one).inv().unwrap();
        assert_eq!(f, expect);
        assert_eq!(f.numerator(), &ParamPoly::one());
    }

    #[test]
    fn evaluation() {
        let f = lam(0).div(&lam(1)).unwrap();
        assert_eq!(f.evaluate(&[q(2, 1), q(4, 1)]).unwrap(), q(1, 2));
        let g = lam(0).sub(&RationalFunction::one()).inv().unwrap();
        assert_eq!(g.evaluate(&[q(1, 1)]), Err(CoeffError::Pole));
        let h = lam(0).mul(&lam(0)).sub(&lam(1));
        assert_eq!(h.evaluate(&[q(3, 1), q(9, 1)]).unwrap(), q(0, 1));
        assert!(matches!(h.evaluate(&[q(3, 1)]), Err(CoeffError::ArityMismatch { .. })));
    }

    #[test]
    fn inverse_of_zero() {
        assert_eq!(RationalFunction::zero().inv(), Err(CoeffError::DivisionByZero));
    }
}
