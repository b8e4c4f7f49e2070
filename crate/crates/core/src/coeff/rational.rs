use std::borrow::Cow;
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{CoeffError, Field};

/// Arbitrary-precision rational number in lowest terms.
///
/// Values whose numerator and denominator fit in an `i64` are kept inline;
/// the big representation is used only when they do not, so equality is a
/// plain structural comparison.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// numerator, denominator > 0, gcd = 1
    Small(i64, i64),
    Big(BigRational),
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    if let (Ok(x), Ok(y)) = (u64::try_from(a), u64::try_from(b)) {
        return gcd_u64(x, y) as i128;
    }
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Binary gcd; 128-bit division is slow enough to matter here.
fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(Repr::Small(n, 1))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_big(BigRational::from_integer(n))
    }

    pub fn from_big(q: BigRational) -> Self {
        match (q.numer().to_i64(), q.denom().to_i64()) {
            (Some(n), Some(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(q)),
        }
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        if let (Ok(n), Ok(d)) = (i64::try_from(num), i64::try_from(den)) {
            if n != i64::MIN && d != i64::MIN {
                let g = gcd_u64(n.unsigned_abs(), d.unsigned_abs()) as i64;
                let (n, d) = (n / g, d / g);
                return if d < 0 { Rational(Repr::Small(-n, -d)) } else { Rational(Repr::Small(n, d)) };
            }
        }
        let g = gcd_i128(num, den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(BigRational::new_raw(BigInt::from(n), BigInt::from(d)))),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(q) => q.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(q) => q.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(q) => q.denom().clone(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(q) => q.is_integer(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match &self.0 {
            Repr::Small(n, 1) => Some(*n),
            _ => None,
        }
    }

    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small(n, _) => n.signum() as i32,
            Repr::Big(q) => {
                if q.is_negative() {
                    -1
                } else if q.is_zero() {
                    0
                } else {
                    1
                }
            }
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Largest of |numerator| and denominator.
    pub fn height(&self) -> BigInt {
        let n = self.numer().abs();
        let d = self.denom();
        if n > d {
            n
        } else {
            d
        }
    }

    pub fn floor(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, d) => BigInt::from(n.div_floor(d)),
            Repr::Big(q) => q.floor().to_integer(),
        }
    }

    fn big_op(&self, other: &Self, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Self {
        Self::from_big(f(&self.to_big(), &other.to_big()))
    }

    fn as_int(&self) -> Option<Cow<'_, BigInt>> {
        match &self.0 {
            Repr::Small(n, 1) => Some(Cow::Owned(BigInt::from(*n))),
            Repr::Big(q) if q.is_integer() => Some(Cow::Borrowed(q.numer())),
            _ => None,
        }
    }

    /// Integer operands skip the gcd normalization of the rational type.
    fn int_or_big_op(&self, other: &Self, fi: impl Fn(&BigInt, &BigInt) -> BigInt, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Self {
        match (self.as_int(), other.as_int()) {
            (Some(a), Some(b)) => Self::from_bigint(fi(&a, &b)),
            _ => self.big_op(other, f),
        }
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }
    fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }
    fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }
    fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }
    fn add(&self, other: &Self) -> Self {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(n) = a.checked_add(*c) {
                        return Rational(Repr::Small(n, 1));
                    }
                    return Self::from_i128(*a as i128 + *c as i128, 1);
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Self::from_i128(a * d + c * b, b * d)
            }
            _ => self.int_or_big_op(other, |x, y| x + y, |x, y| x + y),
        }
    }
    fn sub(&self, other: &Self) -> Self {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(n) = a.checked_sub(*c) {
                        return Rational(Repr::Small(n, 1));
                    }
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Self::from_i128(a * d - c * b, b * d)
            }
            _ => self.int_or_big_op(other, |x, y| x - y, |x, y| x - y),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(n) = a.checked_mul(*c) {
                        return Rational(Repr::Small(n, 1));
                    }
                }
                // cross-cancel so the product is already in lowest terms
                let g1 = gcd_u64(a.unsigned_abs(), *d as u64) as i64;
                let g2 = gcd_u64(c.unsigned_abs(), *b as u64) as i64;
                if g1 > 0 && g2 > 0 {
                    if let (Some(n), Some(m)) = ((a / g1).checked_mul(c / g2), (b / g2).checked_mul(d / g1)) {
                        return Rational(Repr::Small(n, m));
                    }
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Self::from_i128(a * c, b * d)
            }
            _ => self.int_or_big_op(other, |x, y| x * y, |x, y| x * y),
        }
    }
    fn neg(&self) -> Self {
        match &self.0 {
            Repr::Small(n, d) => match n.checked_neg() {
                Some(m) => Rational(Repr::Small(m, *d)),
                None => Self::from_i128(-(*n as i128), *d as i128),
            },
            Repr::Big(q) => Self::from_big(-q),
        }
    }
    fn inv(&self) -> Result<Self, CoeffError> {
        match &self.0 {
            Repr::Small(0, _) => Err(CoeffError::DivisionByZero),
            Repr::Small(n, d) => Ok(Self::from_i128(*d as i128, *n as i128)),
            Repr::Big(q) => Ok(Self::from_big(q.recip())),
        }
    }
    fn div(&self, other: &Self) -> Result<Self, CoeffError> {
        match (&self.0, &other.0) {
            (_, Repr::Small(0, _)) => Err(CoeffError::DivisionByZero),
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Ok(Self::from_i128(a * d, b * c))
            }
            _ => Ok(self.big_op(other, |x, y| x / y)),
        }
    }
    fn from_int(n: i64) -> Self {
        Rational(Repr::Small(n, 1))
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn is_negative_constant(&self) -> bool {
        self.signum() < 0
    }
    fn cross_multipliers(a: &Self, b: &Self) -> (Self, Self) {
        if !(a.is_integer() && b.is_integer()) {
            return (Self::one(), a.div(b).expect("nonzero leading coefficient"));
        }
        if let (Repr::Small(x, 1), Repr::Small(y, 1)) = (&a.0, &b.0) {
            let g = gcd_u64(x.unsigned_abs(), y.unsigned_abs()) as i128;
            let (x, y) = (*x as i128 / g, *y as i128 / g);
            let (u, v) = if y < 0 { (-y, -x) } else { (y, x) };
            return (Self::from_i128(u, 1), Self::from_i128(v, 1));
        }
        let (x, y) = (a.numer(), b.numer());
        let g = x.gcd(&y);
        let (x, y) = (x / &g, y / &g);
        let (u, v) = if y.is_negative() { (-y, -x) } else { (y, x) };
        (Self::from_bigint(u), Self::from_bigint(v))
    }
    /// Clears denominators and content, leaving a positive leading
    /// coefficient, so later arithmetic stays integral.
    fn normalizer(coeffs: &[&Self]) -> Self {
        let Some(lead) = coeffs.first() else { return Self::one() };
        let sign = if lead.signum() < 0 { -1 } else { 1 };
        let small: Option<Vec<(i64, i64)>> = coeffs
            .iter()
            .map(|c| match c.0 {
                Repr::Small(n, d) => Some((n, d)),
                Repr::Big(_) => None,
            })
            .collect();
        if let Some(v) = small {
            let mut num_gcd = 0u64;
            let mut den_lcm = 1u64;
            let mut fits = true;
            for &(n, d) in &v {
                num_gcd = gcd_u64(num_gcd, n.unsigned_abs());
                let g = gcd_u64(den_lcm, d as u64);
                match (den_lcm / g).checked_mul(d as u64) {
                    Some(l) if l <= i64::MAX as u64 => den_lcm = l,
                    _ => {
                        fits = false;
                        break;
                    }
                }
            }
            if fits && num_gcd <= i64::MAX as u64 {
                return Self::from_i128(sign as i128 * den_lcm as i128, num_gcd as i128);
            }
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::from(1);
        for c in coeffs {
            num_gcd = num_gcd.gcd(&c.numer());
            den_lcm = den_lcm.lcm(&c.denom());
        }
        Self::from_big(BigRational::new(den_lcm * sign, num_gcd))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_bigint(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Repr::Big(q) => write!(f, "{}/{}", q.numer(), q.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = CoeffError;

    /// Accepts `n` or `n/d` with optional sign; no decimals.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || CoeffError::Parse(s.to_string());
        let parse_int = |x: &str| -> Result<BigInt, CoeffError> {
            let x = x.trim();
            if x.is_empty() || !x.trim_start_matches(['+', '-']).bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            x.parse::<BigInt>().map_err(|_| bad())
        };
        match t.split_once('/') {
            None => Ok(Rational::from_bigint(parse_int(t)?)),
            Some((n, d)) => {
                let n = parse_int(n)?;
                let d = parse_int(d)?;
                if d.is_zero() {
                    return Err(CoeffError::DivisionByZero);
                }
                Ok(Rational::from_big(BigRational::new(n, d)))
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(n) => Ok(Rational::from_integer(n)),
            Raw::Text(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_arithmetic() {
        let a = Rational::new(1, 2);
        let b = Rational::new(1, 3);
        assert_eq!(Field::add(&a, &b), Rational::new(5, 6));
        assert_eq!(Field::sub(&a, &b), Rational::new(1, 6));
        assert_eq!(Field::mul(&a, &b), Rational::new(1, 6));
        assert_eq!(Field::div(&a, &b).unwrap(), Rational::new(3, 2));
        assert_eq!(Rational::new(2, -4), Rational::new(-1, 2));
        assert_eq!(Rational::new(0, 5), <Rational as Field>::zero());
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(<Rational as Field>::zero().inv(), Err(CoeffError::DivisionByZero));
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Rational::from_integer(i64::MAX);
        let sq = Field::mul(&big, &big);
        assert!(matches!(sq.0, Repr::Big(_)));
        let back = Field::div(&sq, &big).unwrap();
        assert_eq!(back, big);
        assert!(matches!(back.0, Repr::Small(..)));
        assert_eq!(Rational::from_integer(i64::MIN).neg().numer(), -BigInt::from(i64::MIN));
    }

    #[test]
    fn parse_and_print() {
        let q: Rational = "-6/4".parse().unwrap();
        assert_eq!(q.to_string(), "-3/2");
        assert_eq!("17".parse::<Rational>().unwrap(), Rational::from_integer(17));
        assert!("1.5".parse::<Rational>().is_err());
        assert!("1/0".parse::<Rational>().is_err());
    }
}
