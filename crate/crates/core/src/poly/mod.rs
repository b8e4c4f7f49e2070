//! Sparse commutative polynomials, free-module elements and term orders.

mod divide;
mod order;
pub mod text;

use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

pub use divide::{divide, Division};
pub use order::{tie_cmp, ModuleRule, MonomialOrder, SchreyerFrame, TieBreak};

use crate::coeff::{Field, Rational};
use crate::{Error, Result};

/// Exponent vector, one slot per ring variable.
pub type Exp = SmallVec<[u32; 16]>;

pub fn zero_exp(n: usize) -> Exp {
    SmallVec::from_elem(0, n)
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn exp_add(a: &[u32], b: &[u32]) -> Exp {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn exp_sub(a: &[u32], b: &[u32]) -> Exp {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn exp_lcm(a: &[u32], b: &[u32]) -> Exp {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub fn exp_degree(a: &[u32]) -> u32 {
    a.iter().sum()
}

/// A single term `coeff · x^exp · e_comp`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Term<K> {
    pub exp: Exp,
    pub comp: usize,
    pub coeff: K,
}

/// Polynomial in `nvars` commuting variables.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial<K: Field> {
    nvars: usize,
    terms: BTreeMap<Exp, K>,
}

impl<K: Field> Polynomial<K> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: K) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(zero_exp(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, K::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(nvars, unit_exp(nvars, i), K::one())
    }

    pub fn monomial(nvars: usize, exp: Exp, c: K) -> Self {
        assert_eq!(exp.len(), nvars);
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Exp, K)>>(nvars: usize, it: I) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: Exp, c: K) {
        assert_eq!(e.len(), self.nvars, "exponent length");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                let s = v.add(&c);
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &K)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Exp, K)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, e: &[u32]) -> K {
        self.terms.get(e).cloned().unwrap_or_else(K::zero)
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.nvars != o.nvars {
            return Err(Error::RingMismatch(format!("{} vs {} variables", self.nvars, o.nvars)));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect() }
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(e, x)| (e.clone(), x.mul(c))).collect() }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut r = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                r.add_term(exp_add(e1, e2), c1.mul(c2));
            }
        }
        Ok(r)
    }

    pub fn mul_term(&self, e: &[u32], c: &K) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(x, y)| (exp_add(x, e), y.mul(c))).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut r = Self::one(self.nvars);
        for _ in 0..k {
            r = r.mul(self).expect("same ring");
        }
        r
    }

    /// Leading `(exponent, coefficient)` under `ord`.
    pub fn lead(&self, ord: &MonomialOrder) -> Result<(&Exp, &K)> {
        self.terms.iter().max_by(|a, b| ord.cmp_exp(a.0, b.0)).ok_or(Error::ZeroElement)
    }

    /// Terms sorted descending under `ord`.
    pub fn sorted_terms(&self, ord: &MonomialOrder) -> Vec<(&Exp, &K)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| ord.cmp_exp(b.0, a.0));
        v
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| exp_degree(e)).max()
    }

    pub fn evaluate(&self, point: &[K]) -> K {
        let mut s = K::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    t = t.mul(&point[i]);
                }
            }
            s = s.add(&t);
        }
        s
    }

    /// Rename variables: variable `i` goes to slot `map[i]` of a ring with
    /// `nvars` variables.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> Self {
        let mut r = Self::zero(nvars);
        for (e, c) in &self.terms {
            let mut f = zero_exp(nvars);
            for (i, &k) in e.iter().enumerate() {
                f[map[i]] += k;
            }
            r.add_term(f, c.clone());
        }
        r
    }

    pub fn map_coeffs<L: Field>(&self, f: impl Fn(&K) -> L) -> Polynomial<L> {
        Polynomial::from_terms(self.nvars, self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    pub fn monic(&self, ord: &MonomialOrder) -> Self {
        match self.lead(ord) {
            Ok((_, c)) => self.scale(&c.inv().expect("nonzero")),
            Err(_) => self.clone(),
        }
    }
}

impl Polynomial<Rational> {
    pub fn from_int_terms(nvars: usize, terms: &[(&[u32], i64)]) -> Self {
        Self::from_terms(nvars, terms.iter().map(|(e, c)| (e.iter().copied().collect(), Rational::from_integer(*c))))
    }
}

pub fn unit_exp(n: usize, i: usize) -> Exp {
    let mut e = zero_exp(n);
    e[i] = 1;
    e
}

impl<K: Field> fmt::Debug for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("v{i}")).collect();
        write!(f, "{}", text::format_polynomial(self, &names))
    }
}

/// Element of a free module `S^r`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleElement<K: Field> {
    comps: Vec<Polynomial<K>>,
}

impl<K: Field> ModuleElement<K> {
    pub fn new(comps: Vec<Polynomial<K>>) -> Result<Self> {
        if let Some(first) = comps.first() {
            if comps.iter().any(|p| p.nvars() != first.nvars()) {
                return Err(Error::RingMismatch("components over different rings".into()));
            }
        }
        Ok(ModuleElement { comps })
    }

    pub fn zero(nvars: usize, rank: usize) -> Self {
        ModuleElement { comps: vec![Polynomial::zero(nvars); rank] }
    }

    /// `p · e_i` in a module of rank `rank`.
    pub fn basis(p: Polynomial<K>, i: usize, rank: usize) -> Self {
        let mut comps = vec![Polynomial::zero(p.nvars()); rank];
        comps[i] = p;
        ModuleElement { comps }
    }

    pub fn from_poly(p: Polynomial<K>) -> Self {
        ModuleElement { comps: vec![p] }
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn nvars(&self) -> usize {
        self.comps.first().map_or(0, |p| p.nvars())
    }

    pub fn comps(&self) -> &[Polynomial<K>] {
        &self.comps
    }

    pub fn comp(&self, i: usize) -> &Polynomial<K> {
        &self.comps[i]
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|p| p.is_zero())
    }

    pub fn to_terms(&self) -> Vec<Term<K>> {
        let mut v = Vec::new();
        for (i, p) in self.comps.iter().enumerate() {
            for (e, c) in p.terms() {
                v.push(Term { exp: e.clone(), comp: i, coeff: c.clone() });
            }
        }
        v
    }

    pub fn from_terms(nvars: usize, rank: usize, terms: impl IntoIterator<Item = Term<K>>) -> Self {
        let mut m = Self::zero(nvars, rank);
        for t in terms {
            m.comps[t.comp].add_term(t.exp, t.coeff);
        }
        m
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.rank() != o.rank() || self.nvars() != o.nvars() {
            return Err(Error::RingMismatch("free modules differ".into()));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let comps = self.comps.iter().zip(&o.comps).map(|(a, b)| a.add(b)).collect::<Result<_>>()?;
        Ok(ModuleElement { comps })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let comps = self.comps.iter().zip(&o.comps).map(|(a, b)| a.sub(b)).collect::<Result<_>>()?;
        Ok(ModuleElement { comps })
    }

    pub fn scale_poly(&self, q: &Polynomial<K>) -> Result<Self> {
        let comps = self.comps.iter().map(|a| q.mul(a)).collect::<Result<_>>()?;
        Ok(ModuleElement { comps })
    }

    /// Leading `(exponent, component, coefficient)` under `ord`.
    pub fn lead(&self, ord: &MonomialOrder) -> Result<(Exp, usize, K)> {
        let mut best: Option<(&Exp, usize, &K)> = None;
        for (i, p) in self.comps.iter().enumerate() {
            for (e, c) in p.terms() {
                let better = match &best {
                    None => true,
                    Some((be, bi, _)) => ord.cmp(e, i, be, *bi).is_gt(),
                };
                if better {
                    best = Some((e, i, c));
                }
            }
        }
        best.map(|(e, i, c)| (e.clone(), i, c.clone())).ok_or(Error::ZeroElement)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use smallvec::smallvec;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn arithmetic() {
        let x = Polynomial::<Rational>::var(2, 0);
        let y = Polynomial::<Rational>::var(2, 1);
        let p = x.add(&y).unwrap().mul(&x.sub(&y).unwrap()).unwrap();
        let expect = x.mul(&x).unwrap().sub(&y.mul(&y).unwrap()).unwrap();
        assert_eq!(p, expect);
        assert_eq!(p.add(&Polynomial::zero(2)).unwrap(), p);
        let sq = x.add(&Polynomial::one(2)).unwrap().pow(2);
        assert_eq!(sq.coeff(&[1, 0]), q(2));
        assert_eq!(sq.len(), 3);
        assert!(x.add(&Polynomial::var(3, 0)).is_err());
    }

    #[test]
    fn leading_terms() {
        let p = Polynomial::from_int_terms(2, &[(&[2, 1], 1), (&[1, 2], 1)]);
        let e: Exp = smallvec![2, 1];
        assert_eq!(p.lead(&MonomialOrder::degrevlex(2)).unwrap().0, &e);
        let x = Polynomial::<Rational>::var(1, 0);
        let m = ModuleElement::new(vec![x.clone(), x]).unwrap();
        let pot = MonomialOrder::degrevlex(1).with_rule(ModuleRule::PositionOverTerm);
        assert_eq!(m.lead(&pot).unwrap().1, 0);
        let w = MonomialOrder::weighted(vec![0, 1], TieBreak::Lex).unwrap();
        let p = Polynomial::from_int_terms(2, &[(&[3, 0], 1), (&[0, 1], 1)]);
        let y: Exp = smallvec![0, 1];
        assert_eq!(p.lead(&w).unwrap().0, &y);
        assert_eq!(Polynomial::<Rational>::zero(2).lead(&w), Err(Error::ZeroElement));
    }
}
