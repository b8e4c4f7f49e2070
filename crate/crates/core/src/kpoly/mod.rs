//! K-polynomials and multidegrees of multigraded modules.
//!
//! A K-polynomial is a Laurent polynomial in `T₁..T_d` with integer
//! coefficients; the multidegree is the homogeneous part of `K(1−T)` of
//! total degree equal to the codimension.

mod hilbert;
mod monomial;

pub use hilbert::hilbert_check;
pub use monomial::{codim_monomial, k_monomial, module_dimension};

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::coeff::Field;
use crate::grading::Multigrading;
use crate::groebner::{GradedFreeResolution, GroebnerBasis};

/// Laurent polynomial in `T₁..T_d` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KPolynomial {
    dim: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl KPolynomial {
    pub fn zero(dim: usize) -> Self {
        KPolynomial { dim, terms: BTreeMap::new() }
    }

    pub fn one(dim: usize) -> Self {
        Self::monomial(vec![0; dim])
    }

    pub fn monomial(exp: Vec<i64>) -> Self {
        let dim = exp.len();
        let mut terms = BTreeMap::new();
        terms.insert(exp, BigInt::one());
        KPolynomial { dim, terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<i64>, BigInt)>>(dim: usize, it: I) -> Self {
        let mut k = Self::zero(dim);
        for (e, c) in it {
            assert_eq!(e.len(), dim, "exponent of wrong length");
            k.add_term(e, c);
        }
        k
    }

    /// Convenience constructor with machine-integer coefficients.
    pub fn from_ints(dim: usize, terms: &[(&[i64], i64)]) -> Self {
        Self::from_terms(dim, terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c))))
    }

    pub fn add_term(&mut self, e: Vec<i64>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[i64]) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        KPolynomial { dim: self.dim, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.dim);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                out.add_term(a.iter().zip(b).map(|(p, q)| p + q).collect(), x * y);
            }
        }
        out
    }

    /// Multiply by `T^shift`.
    pub fn shift(&self, s: &[i64]) -> Self {
        KPolynomial { dim: self.dim, terms: self.terms.iter().map(|(e, c)| (e.iter().zip(s).map(|(a, b)| a + b).collect(), c.clone())).collect() }
    }

    /// Substitute `T_var = 0`; requires no negative powers of `T_var`.
    pub fn at_zero(&self, var: usize) -> Self {
        let mut out = Self::zero(self.dim);
        for (e, c) in &self.terms {
            assert!(e[var] >= 0, "negative power at a zero substitution");
            if e[var] == 0 {
                out.add_term(e.clone(), c.clone());
            }
        }
        out
    }

    /// Sum of the coefficients (value at `T = 1`).
    pub fn value_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Terms in display order: total degree descending, then reverse
    /// lexicographic on the exponents.
    pub fn sorted_terms(&self) -> Vec<(&Vec<i64>, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| {
            let (da, db): (i64, i64) = (a.iter().sum(), b.iter().sum());
            db.cmp(&da).then_with(|| {
                for (x, y) in a.iter().zip(b.iter()).rev() {
                    if x != y {
                        return x.cmp(y);
                    }
                }
                std::cmp::Ordering::Equal
            })
        });
        v
    }

    fn var_name(&self, i: usize) -> String {
        if self.dim == 1 {
            "T".to_string()
        } else {
            format!("T{}", i + 1)
        }
    }
}

impl fmt::Display for KPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            let mut factors: Vec<String> = Vec::new();
            for (i, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => factors.push(self.var_name(i)),
                    _ => factors.push(format!("{}^{}", self.var_name(i), p)),
                }
            }
            if factors.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{a}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for KPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Serialized as `[[exponent, "coefficient"], ...]` in display order.
impl Serialize for KPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms = self.sorted_terms();
        let mut seq = s.serialize_seq(Some(terms.len()))?;
        for (e, c) in terms {
            seq.serialize_element(&(e, c.to_string()))?;
        }
        seq.end()
    }
}

/// Homogeneous integer form of a fixed total degree. May be zero.
#[derive(Clone, PartialEq, Eq)]
pub struct Multidegree {
    pub degree: usize,
    pub form: KPolynomial,
}

impl Multidegree {
    pub fn dim(&self) -> usize {
        self.form.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.form.is_zero()
    }

    pub fn from_ints(dim: usize, degree: usize, terms: &[(&[i64], i64)]) -> Self {
        let form = KPolynomial::from_ints(dim, terms);
        debug_assert!(form.terms().all(|(e, _)| e.iter().sum::<i64>() == degree as i64));
        Multidegree { degree, form }
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.form)
    }
}

impl fmt::Debug for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (degree {})", self.form, self.degree)
    }
}

/// Serialized as its display string; the K-polynomial carries the terms.
impl Serialize for Multidegree {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Coefficients of `(1−T)^a` up to degree `max`; for `a < 0` this is the
/// truncated series of `1/(1−T)^{|a|}`.
fn one_minus_power(a: i64, max: usize) -> Vec<BigInt> {
    (0..=max as i64)
        .map(|j| {
            if a >= 0 {
                let b = binomial(a, j);
                if j % 2 == 1 {
                    -b
                } else {
                    b
                }
            } else {
                binomial(-a + j - 1, j)
            }
        })
        .collect()
}

/// The degree-`target` part of `K(1−T₁, …, 1−T_d)`.
pub fn expand_and_extract(k: &KPolynomial, target: usize) -> Multidegree {
    let d = k.dim();
    let mut out = KPolynomial::zero(d);
    for (e, c) in k.terms() {
        // product of univariate series, keeping total degree ≤ target
        let series: Vec<Vec<BigInt>> = e.iter().map(|&a| one_minus_power(a, target)).collect();
        let mut partial: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        partial.insert(Vec::new(), c.clone());
        for s in &series {
            let mut next = BTreeMap::new();
            for (pe, pc) in &partial {
                let used: i64 = pe.iter().sum();
                for (j, sc) in s.iter().enumerate() {
                    if used + j as i64 > target as i64 {
                        break;
                    }
                    if sc.is_zero() {
                        continue;
                    }
                    let mut ne = pe.clone();
                    ne.push(j as i64);
                    *next.entry(ne).or_insert_with(BigInt::zero) += pc * sc;
                }
            }
            partial = next;
        }
        for (pe, pc) in partial {
            if pe.iter().sum::<i64>() == target as i64 {
                out.add_term(pe, pc);
            }
        }
    }
    Multidegree { degree: target, form: out }
}

/// Alternating sum of the generator degrees of a graded free resolution.
pub fn k_from_resolution<K: Field>(r: &GradedFreeResolution<K>) -> KPolynomial {
    let mut k = KPolynomial::zero(r.grading.dim());
    for (i, level) in r.shifts.iter().enumerate() {
        let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        for s in level {
            k.add_term(s.clone(), sign.clone());
        }
    }
    k
}

/// K-polynomial of `S^r/N` from a Gröbner basis of a multihomogeneous
/// `N`, via its initial module.
pub fn k_from_initial<K: Field>(gb: &GroebnerBasis<K>, g: &Multigrading, shifts: &[Vec<i64>]) -> KPolynomial {
    k_monomial(&gb.initial_module(), gb.rank(), g, shifts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        let k = KPolynomial::from_ints(1, &[(&[0], 1), (&[1], -2), (&[2], 1)]);
        assert_eq!(k.to_string(), "T^2 - 2*T + 1");
        let m = Multidegree::from_ints(2, 3, &[(&[3, 0], 2), (&[2, 1], 2)]);
        assert_eq!(m.to_string(), "2*T1^3 + 2*T1^2*T2");
        assert_eq!(KPolynomial::zero(2).to_string(), "0");
        let l = KPolynomial::from_ints(2, &[(&[0, -1], -1)]);
        assert_eq!(l.to_string(), "-T2^-1");
    }

    #[test]
    fn extraction() {
        // 1 − T² → 2T
        let k = KPolynomial::from_ints(1, &[(&[0], 1), (&[2], -1)]);
        assert_eq!(expand_and_extract(&k, 1).form, KPolynomial::from_ints(1, &[(&[1], 2)]));
        // below the lowest degree the form vanishes
        assert!(expand_and_extract(&k, 0).is_zero());
        // 1 − T₁²T₂ → 2T₁ + T₂
        let k = KPolynomial::from_ints(2, &[(&[0, 0], 1), (&[2, 1], -1)]);
        assert_eq!(expand_and_extract(&k, 1).form, KPolynomial::from_ints(2, &[(&[1, 0], 2), (&[0, 1], 1)]));
        // T₂^{-1} at degree 0 → 1
        let k = KPolynomial::from_ints(2, &[(&[0, -1], 1)]);
        assert_eq!(expand_and_extract(&k, 0).form, KPolynomial::one(2));
    }

    #[test]
    fn serialization() {
        let k = KPolynomial::from_ints(2, &[(&[0, 0], 1), (&[1, 1], -1)]);
        assert_eq!(serde_json::to_string(&k).unwrap(), r#"[[[1,1],"-1"],[[0,0],"1"]]"#);
    }
}
