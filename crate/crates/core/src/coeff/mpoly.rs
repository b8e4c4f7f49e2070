//! Polynomials in the parameters λ₁..λ_p over Q, with exact division and gcd.
//!
//! Exponent vectors carry no trailing zeros, so a polynomial does not need
//! to know how many parameters exist; lexicographic comparison of trimmed
//! vectors agrees with comparison of zero-padded ones.

use std::collections::BTreeMap;
use std::fmt;

use super::{CoeffError, Field, Rational};

type Mono = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamPoly {
    terms: BTreeMap<Mono, Rational>,
}

fn trim(mut m: Mono) -> Mono {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

fn mono_mul(a: &[u32], b: &[u32]) -> Mono {
    let n = a.len().max(b.len());
    let v = (0..n)
        .map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0))
        .collect();
    trim(v)
}

fn mono_div(a: &[u32], b: &[u32]) -> Option<Mono> {
    if b.len() > a.len() && b[a.len()..].iter().any(|&e| e > 0) {
        return None;
    }
    let mut out = a.to_vec();
    for (i, &e) in b.iter().enumerate() {
        if out[i] < e {
            return None;
        }
        out[i] -= e;
    }
    Some(trim(out))
}

impl ParamPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        ParamPoly { terms }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The parameter λ_{index+1}.
    pub fn var(index: usize) -> Self {
        let mut m = vec![0; index + 1];
        m[index] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(m, Rational::one());
        ParamPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, Rational)>>(it: I) -> Self {
        let mut p = ParamPoly::zero();
        for (m, c) in it {
            p.add_term(trim(m), c);
        }
        p
    }

    fn add_term(&mut self, m: Mono, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = v.add(&c);
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_empty())
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            self.terms.get(&Vec::new()).cloned()
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    /// Number of parameters actually occurring.
    pub fn arity(&self) -> usize {
        self.terms.keys().map(|m| m.len()).max().unwrap_or(0)
    }

    /// Leading term under lex with λ₁ > λ₂ > …
    pub fn leading(&self) -> Option<(&Mono, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        ParamPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ParamPoly { terms: self.terms.iter().map(|(m, v)| (m.clone(), v.mul(c))).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = ParamPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                r.add_term(mono_mul(ma, mb), ca.mul(cb));
            }
        }
        r
    }

    fn mul_term(&self, m: &[u32], c: &Rational) -> Self {
        let mut r = ParamPoly::zero();
        for (ma, ca) in &self.terms {
            r.add_term(mono_mul(ma, m), ca.mul(c));
        }
        r
    }

    /// Scale so that the lex-leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Multivariate division under lex; `Some(q)` iff `self = q * d` exactly.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (dm, dc) = d.leading()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut q = ParamPoly::zero();
        while let Some((m, c)) = rem.leading() {
            let qm = mono_div(m, &dm)?;
            let qc = c.div(&dc).ok()?;
            rem = rem.sub(&d.mul_term(&qm, &qc));
            q.add_term(qm, qc);
        }
        Some(q)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational, CoeffError> {
        let need = self.arity();
        if point.len() < need {
            return Err(CoeffError::ArityMismatch { needed: need, got: point.len() });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    t = t.mul(&point[i]);
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Highest-indexed parameter occurring.
    fn main_var(&self) -> Option<usize> {
        self.terms.keys().filter(|m| !m.is_empty()).map(|m| m.len() - 1).max()
    }

    fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|m| m.get(v).copied().unwrap_or(0)).max().unwrap_or(0)
    }

    /// Coefficients with respect to the parameter `v`.
    fn coeffs_in(&self, v: usize) -> BTreeMap<u32, ParamPoly> {
        let mut out: BTreeMap<u32, ParamPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.get(v).copied().unwrap_or(0);
            let mut rest = m.clone();
            if v < rest.len() {
                rest[v] = 0;
            }
            out.entry(e).or_default().add_term(trim(rest), c.clone());
        }
        out
    }

    fn content_in(&self, v: usize) -> ParamPoly {
        let mut g = ParamPoly::zero();
        for c in self.coeffs_in(v).values() {
            g = g.gcd(c);
            if g.is_constant() && !g.is_zero() {
                return ParamPoly::one();
            }
        }
        g
    }

    fn prem(a: &Self, b: &Self, v: usize) -> Self {
        let db = b.degree_in(v);
        let bc = b.coeffs_in(v);
        let lb = bc.get(&db).cloned().unwrap_or_default();
        let mut r = a.clone();
        loop {
            if r.is_zero() {
                return r;
            }
            let dr = r.degree_in(v);
            if dr < db {
                return r;
            }
            let lr = r.coeffs_in(v).remove(&dr).unwrap_or_default();
            let mut shift = vec![0; v + 1];
            shift[v] = dr - db;
            let t = b.mul(&lr).mul_term(&trim(shift), &Rational::one());
            r = r.mul(&lb).sub(&t);
        }
    }

    /// Greatest common divisor, normalized monic under lex.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let v = match (self.main_var(), other.main_var()) {
            (None, _) | (_, None) => return ParamPoly::one(),
            (Some(a), Some(b)) => a.max(b),
        };
        let (da, db) = (self.degree_in(v), other.degree_in(v));
        if da == 0 {
            return self.gcd(&other.content_in(v));
        }
        if db == 0 {
            return other.gcd(&self.content_in(v));
        }
        let ca = self.content_in(v);
        let cb = other.content_in(v);
        let c = ca.gcd(&cb);
        let mut r0 = self.div_exact(&ca).expect("content divides");
        let mut r1 = other.div_exact(&cb).expect("content divides");
        if r0.degree_in(v) < r1.degree_in(v) {
            std::mem::swap(&mut r0, &mut r1);
        }
        loop {
            let r = Self::prem(&r0, &r1, v);
            if r.is_zero() {
                break;
            }
            if r.degree_in(v) == 0 {
                return c.monic();
            }
            let cr = r.content_in(v);
            r0 = r1;
            r1 = r.div_exact(&cr).expect("content divides").monic();
        }
        let cr1 = r1.content_in(v);
        let prim = r1.div_exact(&cr1).expect("content divides");
        c.mul(&prim).monic()
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.signum() < 0;
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mut parts = Vec::new();
            if !a.is_one() || m.is_empty() {
                parts.push(a.to_string());
            }
            for (i, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(format!("l{}", i + 1)),
                    _ => parts.push(format!("l{}^{}", i + 1, e)),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(i: usize) -> ParamPoly {
        ParamPoly::var(i)
    }
    fn k(n: i64) -> ParamPoly {
        ParamPoly::constant(Rational::from_integer(n))
    }

    #[test]
    fn gcd_univariate() {
        // (l-1)(l+1) and (l-1)(l+2)
        let a = l(0).sub(&k(1)).mul(&l(0).add(&k(1)));
        let b = l(0).sub(&k(1)).mul(&l(0).add(&k(2)));
        assert_eq!(a.gcd(&b), l(0).sub(&k(1)));
    }

    #[test]
    fn gcd_multivariate() {
        // g = l1*l2 + 1; a = g*(l1 - l2), b = g*(l1^2 + l2)
        let g = l(0).mul(&l(1)).add(&k(1));
        let a = g.mul(&l(0).sub(&l(1)));
        let b = g.mul(&l(0).mul(&l(0)).add(&l(1)));
        assert_eq!(a.gcd(&b), g.monic());
        assert_eq!(a.gcd(&k(3)), k(1));
    }

    #[test]
    fn exact_division() {
        let a = l(0).mul(&l(0)).sub(&l(1).mul(&l(1)));
        let b = l(0).sub(&l(1));
        assert_eq!(a.div_exact(&b), Some(l(0).add(&l(1))));
        assert_eq!(l(0).add(&k(1)).div_exact(&l(0)), None);
    }
}
