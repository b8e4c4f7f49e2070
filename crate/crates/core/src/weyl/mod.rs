//! Weyl algebras `D`, their homogenization `D^(h)` and the Rees algebra
//! `R_V(D) ≅ D[θ]`.
//!
//! Variables are laid out as `x₁..xₙ, t₁..t_p, ∂x₁..∂xₙ, ∂t₁..∂t_p`,
//! followed by `h` or `θ` when present. Elements are stored in normal
//! order (positions to the left of derivations), which is exactly a
//! commutative exponent vector.

mod gb;

pub use gb::{buchberger_weyl, gr_presentation, lazard_basis, minimal_gb_and_h_divisibility};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coeff::{Field, Rational};
use crate::groebner::{engine, from_sparse, to_sparse, Algebra};
use crate::poly::text::{format_polynomial, parse_terms};
use crate::poly::{exp_degree, zero_exp, ModuleElement, MonomialOrder, Polynomial};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Homogenization {
    None,
    /// Central `h` with `[∂, x] = h`.
    H,
    /// Central `θ`; relations stay `[∂, x] = 1`.
    Theta,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylRing {
    pub n: usize,
    pub p: usize,
    pub hom: Homogenization,
}

impl WeylRing {
    pub fn plain(n: usize, p: usize) -> Self {
        WeylRing { n, p, hom: Homogenization::None }
    }

    pub fn homogenized(n: usize, p: usize) -> Self {
        WeylRing { n, p, hom: Homogenization::H }
    }

    pub fn rees(n: usize, p: usize) -> Self {
        WeylRing { n, p, hom: Homogenization::Theta }
    }

    pub fn with(&self, hom: Homogenization) -> Self {
        WeylRing { n: self.n, p: self.p, hom }
    }

    /// Number of position variables.
    pub fn npos(&self) -> usize {
        self.n + self.p
    }

    pub fn nvars(&self) -> usize {
        2 * self.npos() + usize::from(self.hom != Homogenization::None)
    }

    pub fn x(&self, i: usize) -> usize {
        i
    }

    pub fn t(&self, j: usize) -> usize {
        self.n + j
    }

    pub fn dx(&self, i: usize) -> usize {
        self.npos() + i
    }

    pub fn dt(&self, j: usize) -> usize {
        self.npos() + self.n + j
    }

    /// Index of `h` or `θ`.
    pub fn extra(&self) -> Option<usize> {
        (self.hom != Homogenization::None).then(|| 2 * self.npos())
    }

    pub fn is_derivation(&self, v: usize) -> bool {
        v >= self.npos() && v < 2 * self.npos()
    }

    pub fn is_t_block(&self, v: usize) -> bool {
        (self.n..self.npos()).contains(&v) || v >= self.npos() + self.n && v < 2 * self.npos()
    }

    pub fn names(&self) -> Vec<String> {
        let mut v = Vec::with_capacity(self.nvars());
        v.extend((1..=self.n).map(|i| format!("x{i}")));
        v.extend((1..=self.p).map(|i| format!("t{i}")));
        v.extend((1..=self.n).map(|i| format!("dx{i}")));
        v.extend((1..=self.p).map(|i| format!("dt{i}")));
        match self.hom {
            Homogenization::None => {}
            Homogenization::H => v.push("h".into()),
            Homogenization::Theta => v.push("theta".into()),
        }
        v
    }

    pub fn algebra(&self) -> Algebra {
        let pairs = (0..self.npos()).map(|i| (i, self.npos() + i)).collect();
        let commutator = match self.hom {
            Homogenization::H => vec![(2 * self.npos(), 1)],
            _ => vec![],
        };
        Algebra::weyl(self.nvars(), pairs, commutator)
    }

    /// Parse an operator; factors are multiplied in the written order and
    /// the result is normally ordered.
    pub fn parse(&self, src: &str) -> Result<WeylElement> {
        let names = self.names();
        let lookup = |s: &str| names.iter().position(|n| n == s);
        let terms = parse_terms(src, &lookup)?;
        let nv = self.nvars();
        let mut acc = Polynomial::zero(nv);
        for t in terms {
            let mut prod = Polynomial::constant(nv, t.coeff);
            for (v, k) in t.factors {
                let mut e = zero_exp(nv);
                e[v] = k;
                prod = self.mul_poly(&prod, &Polynomial::monomial(nv, e, <Rational as Field>::one()));
            }
            acc = acc.add(&prod)?;
        }
        Ok(WeylElement { ring: self.clone(), poly: acc })
    }

    /// Normally ordered product of two operators.
    pub fn mul_poly(&self, a: &Polynomial<Rational>, b: &Polynomial<Rational>) -> Polynomial<Rational> {
        let ord = MonomialOrder::degrevlex(self.nvars());
        let sa = to_sparse(&ModuleElement::from_poly(a.clone()), &ord);
        let sb = to_sparse(&ModuleElement::from_poly(b.clone()), &ord);
        let prod = engine::mul(&self.algebra(), &ord, &sa, &sb);
        from_sparse(&prod, self.nvars(), 1).comp(0).clone()
    }

    /// `q · m` for an operator `q` and a module element `m`.
    pub fn mul_module(&self, q: &Polynomial<Rational>, m: &ModuleElement<Rational>) -> ModuleElement<Rational> {
        ModuleElement::new(m.comps().iter().map(|c| self.mul_poly(q, c)).collect()).expect("same ring")
    }

    /// Weight row of the F-filtration: 1 on derivations (and on `h`).
    pub fn f_row(&self) -> Vec<i64> {
        let mut r = vec![0; self.nvars()];
        r[self.npos()..2 * self.npos()].fill(1);
        if self.hom == Homogenization::H {
            r[2 * self.npos()] = 1;
        }
        r
    }

    /// Weight row of the V-filtration: −1 on `t`, +1 on `∂t`.
    pub fn v_row(&self) -> Vec<i64> {
        let mut r = vec![0; self.nvars()];
        for j in 0..self.p {
            r[self.t(j)] = -1;
            r[self.dt(j)] = 1;
        }
        r
    }

    pub fn format(&self, p: &Polynomial<Rational>) -> String {
        format_polynomial(p, &self.names())
    }
}

/// A normally ordered operator together with its ring.
#[derive(Clone, PartialEq, Eq)]
pub struct WeylElement {
    ring: WeylRing,
    poly: Polynomial<Rational>,
}

impl WeylElement {
    pub fn new(ring: WeylRing, poly: Polynomial<Rational>) -> Result<Self> {
        if poly.nvars() != ring.nvars() {
            return Err(Error::RingMismatch(format!("{} variables for a ring with {}", poly.nvars(), ring.nvars())));
        }
        Ok(WeylElement { ring, poly })
    }

    pub fn ring(&self) -> &WeylRing {
        &self.ring
    }

    pub fn poly(&self) -> &Polynomial<Rational> {
        &self.poly
    }

    pub fn into_poly(self) -> Polynomial<Rational> {
        self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    fn same(&self, o: &Self) -> Result<()> {
        if self.ring != o.ring {
            return Err(Error::RingMismatch("operators from different rings".into()));
        }
        Ok(())
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.same(o)?;
        Ok(WeylElement { ring: self.ring.clone(), poly: self.ring.mul_poly(&self.poly, &o.poly) })
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.same(o)?;
        Ok(WeylElement { ring: self.ring.clone(), poly: self.poly.add(&o.poly)? })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.same(o)?;
        Ok(WeylElement { ring: self.ring.clone(), poly: self.poly.sub(&o.poly)? })
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ring.format(&self.poly))
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Weight `(u, v)` on positions and derivations, plus `l` on `h`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibleWeight {
    pub u: Vec<i64>,
    pub v: Vec<i64>,
    pub l: i64,
}

impl AdmissibleWeight {
    pub fn new(ring: &WeylRing, u: Vec<i64>, v: Vec<i64>, l: i64) -> Result<Self> {
        if u.len() != ring.npos() || v.len() != ring.npos() {
            return Err(Error::Invalid(format!("weight needs {} entries per block", ring.npos())));
        }
        let floor = if ring.hom == Homogenization::H { l } else { 0 };
        if let Some(i) = (0..u.len()).find(|&i| u[i] + v[i] < floor) {
            return Err(Error::BadOrder(format!("u{i} + v{i} = {} is below {floor}", u[i] + v[i])));
        }
        Ok(AdmissibleWeight { u, v, l })
    }

    pub fn f(ring: &WeylRing) -> Self {
        let l = i64::from(ring.hom == Homogenization::H);
        AdmissibleWeight { u: vec![0; ring.npos()], v: vec![1; ring.npos()], l }
    }

    pub fn v(ring: &WeylRing) -> Self {
        let mut u = vec![0; ring.npos()];
        let mut v = vec![0; ring.npos()];
        for j in 0..ring.p {
            u[ring.n + j] = -1;
            v[ring.n + j] = 1;
        }
        AdmissibleWeight { u, v, l: 0 }
    }

    pub fn row(&self, ring: &WeylRing) -> Vec<i64> {
        let mut r = self.u.clone();
        r.extend(&self.v);
        if ring.extra().is_some() {
            r.push(if ring.hom == Homogenization::H { self.l } else { 0 });
        }
        r
    }
}

fn dot(row: &[i64], e: &[u32]) -> i64 {
    row.iter().zip(e).map(|(w, &x)| w * x as i64).sum()
}

/// `ord^w(P)`, the largest weight of a term.
pub fn ord_weight(p: &WeylElement, w: &AdmissibleWeight) -> Result<i64> {
    let row = w.row(&p.ring);
    p.poly.terms().map(|(e, _)| dot(&row, e)).max().ok_or(Error::ZeroElement)
}

/// Largest shifted weight of a module element.
pub fn module_weight(m: &ModuleElement<Rational>, row: &[i64], shifts: &[i64]) -> Option<i64> {
    m.comps()
        .iter()
        .enumerate()
        .flat_map(|(c, p)| p.terms().map(move |(e, _)| dot(row, e) + shifts.get(c).copied().unwrap_or(0)))
        .max()
}

/// The top-weight part `σ^w(m)` of a module element, read in the same
/// variables.
pub fn symbol_module(m: &ModuleElement<Rational>, row: &[i64], shifts: &[i64]) -> ModuleElement<Rational> {
    let Some(top) = module_weight(m, row, shifts) else { return m.clone() };
    let comps = m
        .comps()
        .iter()
        .enumerate()
        .map(|(c, p)| {
            let s = shifts.get(c).copied().unwrap_or(0);
            Polynomial::from_terms(p.nvars(), p.terms().filter(|(e, _)| dot(row, e) + s == top).map(|(e, k)| (e.clone(), k.clone())))
        })
        .collect();
    ModuleElement::new(comps).expect("same shape")
}

/// `σ^w(P)` as a commutative polynomial.
pub fn symbol(p: &WeylElement, w: &AdmissibleWeight) -> Result<Polynomial<Rational>> {
    if p.is_zero() {
        return Err(Error::ZeroElement);
    }
    let row = w.row(&p.ring);
    Ok(symbol_module(&ModuleElement::from_poly(p.poly.clone()), &row, &[]).comp(0).clone())
}

/// Append a new last variable and pad every term of `m` with the power
/// that lifts its `degree` to the maximum over all terms.
pub(crate) fn pad(m: &ModuleElement<Rational>, nvars: usize, degree: impl Fn(&[u32], usize) -> i64) -> ModuleElement<Rational> {
    let top = m.comps().iter().enumerate().flat_map(|(c, p)| p.terms().map(move |(e, _)| (e.clone(), c))).map(|(e, c)| degree(&e, c)).max();
    let Some(top) = top else {
        return ModuleElement::zero(nvars, m.rank());
    };
    let comps = m
        .comps()
        .iter()
        .enumerate()
        .map(|(c, p)| {
            Polynomial::from_terms(
                nvars,
                p.terms().map(|(e, k)| {
                    let mut f: crate::poly::Exp = e.iter().copied().collect();
                    f.push((top - degree(e, c)) as u32);
                    (f, k.clone())
                }),
            )
        })
        .collect();
    ModuleElement::new(comps).expect("same shape")
}

fn derivation_degree(ring: &WeylRing, e: &[u32]) -> i64 {
    (ring.npos()..2 * ring.npos()).map(|v| e[v] as i64).sum()
}

fn v_degree(ring: &WeylRing, e: &[u32]) -> i64 {
    (0..ring.p).map(|j| e[ring.dt(j)] as i64 - e[ring.t(j)] as i64).sum()
}

/// `H^F`: pad with powers of `h` up to the largest shifted F-order.
pub fn f_homogenize_module(ring: &WeylRing, m: &ModuleElement<Rational>, nshifts: &[i64]) -> ModuleElement<Rational> {
    assert_eq!(ring.hom, Homogenization::None);
    pad(m, ring.nvars() + 1, |e, c| derivation_degree(ring, e) + nshifts.get(c).copied().unwrap_or(0))
}

/// `H^V`: pad with powers of `θ` up to the largest shifted V-order.
pub fn v_homogenize_module(ring: &WeylRing, m: &ModuleElement<Rational>, mshifts: &[i64]) -> ModuleElement<Rational> {
    assert_eq!(ring.hom, Homogenization::None);
    pad(m, ring.nvars() + 1, |e, c| v_degree(ring, e) + mshifts.get(c).copied().unwrap_or(0))
}

pub fn f_homogenize(p: &WeylElement) -> Result<WeylElement> {
    if p.ring.hom != Homogenization::None {
        return Err(Error::RingMismatch("already homogenized".into()));
    }
    let m = f_homogenize_module(&p.ring, &ModuleElement::from_poly(p.poly.clone()), &[]);
    WeylElement::new(p.ring.with(Homogenization::H), m.comp(0).clone())
}

pub fn v_homogenize(p: &WeylElement) -> Result<WeylElement> {
    if p.ring.hom != Homogenization::None {
        return Err(Error::RingMismatch("already homogenized".into()));
    }
    let m = v_homogenize_module(&p.ring, &ModuleElement::from_poly(p.poly.clone()), &[]);
    WeylElement::new(p.ring.with(Homogenization::Theta), m.comp(0).clone())
}

/// Set the last variable to 1.
pub fn dehomogenize_module(m: &ModuleElement<Rational>) -> ModuleElement<Rational> {
    let nv = m.nvars() - 1;
    let comps = m
        .comps()
        .iter()
        .map(|p| Polynomial::from_terms(nv, p.terms().map(|(e, k)| (e[..nv].iter().copied().collect(), k.clone()))))
        .collect();
    ModuleElement::new(comps).expect("same shape")
}

pub fn dehomogenize(p: &WeylElement) -> Result<WeylElement> {
    if p.ring.hom == Homogenization::None {
        return Err(Error::RingMismatch("nothing to dehomogenize".into()));
    }
    let m = dehomogenize_module(&ModuleElement::from_poly(p.poly.clone()));
    WeylElement::new(p.ring.with(Homogenization::None), m.comp(0).clone())
}

/// Staircase of the points `(|ν|−|μ|, |β|+|μ|)` of an operator, where
/// `ν, μ` are the `t`/`∂t` exponents and `β` the `∂x` exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolygon {
    /// Maximal points, sorted by first coordinate.
    pub corners: Vec<(i64, i64)>,
}

impl NewtonPolygon {
    pub fn is_trivial(&self) -> bool {
        self.corners.len() == 1
    }
}

pub fn newton_polygon(p: &WeylElement) -> Result<NewtonPolygon> {
    if p.is_zero() {
        return Err(Error::ZeroElement);
    }
    let r = &p.ring;
    let mut pts: Vec<(i64, i64)> = p
        .poly
        .terms()
        .map(|(e, _)| {
            let nu: i64 = (0..r.p).map(|j| e[r.t(j)] as i64).sum();
            let mu: i64 = (0..r.p).map(|j| e[r.dt(j)] as i64).sum();
            let beta: i64 = (0..r.n).map(|i| e[r.dx(i)] as i64).sum();
            (nu - mu, beta + mu)
        })
        .collect();
    pts.sort();
    pts.dedup();
    let corners: Vec<(i64, i64)> = pts.iter().copied().filter(|&(a, b)| !pts.iter().any(|&(c, d)| (c, d) != (a, b) && c >= a && d >= b)).collect();
    Ok(NewtonPolygon { corners })
}

/// Total degree on all variables, used by tests of homogeneity.
pub fn total_degree(p: &Polynomial<Rational>) -> Option<u32> {
    p.terms().map(|(e, _)| exp_degree(e)).max()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products() {
        let dh = WeylRing::homogenized(1, 0);
        let a = dh.parse("dx1").unwrap().mul(&dh.parse("x1").unwrap()).unwrap();
        assert_eq!(a.to_string(), "x1*dx1 + h");
        let d = WeylRing::plain(1, 0);
        let b = d.parse("dx1*x1^2").unwrap();
        assert_eq!(b.to_string(), "x1^2*dx1 + 2*x1");
        let rv = WeylRing::rees(0, 1);
        let c = rv.parse("theta*dt1 - dt1*theta").unwrap();
        assert!(c.is_zero());
        assert_eq!(d.parse("dx1*x1").unwrap().to_string(), "x1*dx1 + 1");
    }

    #[test]
    fn weights() {
        let d = WeylRing::plain(1, 0);
        let f = AdmissibleWeight::f(&d);
        assert_eq!(ord_weight(&d.parse("x1^3*dx1^2").unwrap(), &f).unwrap(), 2);
        let dv = WeylRing::plain(0, 1);
        let v = AdmissibleWeight::v(&dv);
        assert_eq!(ord_weight(&dv.parse("t1*dt1").unwrap(), &v).unwrap(), 0);
        assert_eq!(ord_weight(&dv.parse("dt1^2*t1").unwrap(), &v).unwrap(), 1);
        assert!(AdmissibleWeight::new(&d, vec![-2], vec![1], 0).is_err());
    }

    #[test]
    fn homogenizations() {
        let d = WeylRing::plain(1, 0);
        let p = d.parse("x1*dx1^2 + dx1").unwrap();
        let h = f_homogenize(&p).unwrap();
        assert_eq!(h.to_string(), "x1*dx1^2 + dx1*h");
        assert_eq!(dehomogenize(&h).unwrap(), p);
        let dv = WeylRing::plain(0, 1);
        let q = dv.parse("dt1^2 + t1").unwrap();
        let th = v_homogenize(&q).unwrap();
        assert_eq!(th, WeylRing::rees(0, 1).parse("dt1^2 + t1*theta^3").unwrap());
        assert_eq!(dehomogenize(&th).unwrap(), q);
        // toric generator with everything in the t-block
        let d3 = WeylRing::plain(0, 3);
        let g = d3.parse("dt1^7*dt3^4 - dt2^12").unwrap();
        assert_eq!(v_homogenize(&g).unwrap(), WeylRing::rees(0, 3).parse("dt1^7*dt3^4*theta - dt2^12").unwrap());
    }

    #[test]
    fn symbols() {
        let d = WeylRing::plain(1, 0);
        let p = d.parse("x1*dx1^2 + dx1").unwrap();
        let s = symbol(&p, &AdmissibleWeight::f(&d)).unwrap();
        assert_eq!(d.format(&s), "x1*dx1^2");
        let dv = WeylRing::plain(0, 1);
        let q = dv.parse("t1*dt1 + 1").unwrap();
        assert_eq!(dv.format(&symbol(&q, &AdmissibleWeight::v(&dv)).unwrap()), "t1*dt1 + 1");
    }

    #[test]
    fn newton() {
        let dv = WeylRing::plain(0, 1);
        let np = newton_polygon(&dv.parse("dt1").unwrap()).unwrap();
        assert_eq!(np.corners, vec![(-1, 1)]);
        assert!(np.is_trivial());
        let np = newton_polygon(&dv.parse("t1 + dt1").unwrap()).unwrap();
        assert_eq!(np.corners, vec![(-1, 1), (1, 0)]);
        assert!(!np.is_trivial());
        let d3 = WeylRing::plain(0, 3);
        assert!(newton_polygon(&d3.parse("dt1*dt3 - dt2^2").unwrap()).unwrap().is_trivial());
    }
}
