use super::{buchberger, GroebnerBasis};
use crate::coeff::Field;
use crate::poly::{divide, ModuleElement, MonomialOrder, Polynomial, TieBreak};
use crate::{Error, Result};

fn lift<K: Field>(m: &ModuleElement<K>, nvars: usize) -> ModuleElement<K> {
    let map: Vec<usize> = (0..m.nvars()).collect();
    ModuleElement::new(m.comps().iter().map(|p| p.remap(nvars, &map)).collect()).expect("same ring")
}

fn drop_last<K: Field>(m: &ModuleElement<K>, nvars: usize) -> ModuleElement<K> {
    let comps = m
        .comps()
        .iter()
        .map(|p| Polynomial::from_terms(nvars, p.terms().map(|(e, c)| (e[..nvars].iter().copied().collect(), c.clone()))))
        .collect();
    ModuleElement::new(comps).expect("same ring")
}

/// Eliminate an auxiliary last variable `s` from the module generated by
/// `gens` (which live in `nvars + 1` variables), returning a Gröbner basis
/// of the intersection with the original free module.
fn eliminate_last<K: Field>(gens: &[ModuleElement<K>], nvars: usize, rank: usize) -> Result<GroebnerBasis<K>> {
    let mut row = vec![0; nvars + 1];
    row[nvars] = 1;
    let ord = MonomialOrder::new(nvars + 1, vec![row], TieBreak::DegRevLex)?;
    let gb = buchberger(gens, &ord)?;
    let kept: Vec<ModuleElement<K>> = gb
        .elements
        .iter()
        .filter(|e| e.comps().iter().all(|p| p.terms().all(|(x, _)| x[nvars] == 0)))
        .map(|e| drop_last(e, nvars))
        .collect();
    let base = MonomialOrder::degrevlex(nvars);
    if kept.is_empty() {
        return buchberger(&[ModuleElement::zero(nvars, rank)], &base);
    }
    buchberger(&kept, &base)
}

fn check<K: Field>(gens: &[ModuleElement<K>], f: &Polynomial<K>) -> Result<(usize, usize)> {
    if f.is_zero() {
        return Err(Error::ZeroElement);
    }
    let nvars = f.nvars();
    let rank = gens.first().map_or(1, |g| g.rank());
    if gens.iter().any(|g| g.nvars() != nvars || g.rank() != rank) {
        return Err(Error::RingMismatch("generators and polynomial disagree".into()));
    }
    Ok((nvars, rank))
}

/// `(N : f^∞)`, as a reduced degrevlex Gröbner basis.
pub fn saturate<K: Field>(gens: &[ModuleElement<K>], f: &Polynomial<K>) -> Result<GroebnerBasis<K>> {
    let (nvars, rank) = check(gens, f)?;
    let map: Vec<usize> = (0..nvars).collect();
    let s = Polynomial::var(nvars + 1, nvars);
    let one_minus_sf = Polynomial::one(nvars + 1).sub(&s.mul(&f.remap(nvars + 1, &map))?)?;
    let mut all: Vec<ModuleElement<K>> = gens.iter().map(|g| lift(g, nvars + 1)).collect();
    for c in 0..rank {
        all.push(ModuleElement::basis(one_minus_sf.clone(), c, rank));
    }
    eliminate_last(&all, nvars, rank)
}

/// `N ∩ f·S^r`.
pub fn intersect_with_principal<K: Field>(gens: &[ModuleElement<K>], f: &Polynomial<K>) -> Result<GroebnerBasis<K>> {
    let (nvars, rank) = check(gens, f)?;
    let map: Vec<usize> = (0..nvars).collect();
    let s = Polynomial::var(nvars + 1, nvars);
    let one_minus_s = Polynomial::one(nvars + 1).sub(&s)?;
    let fl = f.remap(nvars + 1, &map);
    let mut all: Vec<ModuleElement<K>> = gens.iter().map(|g| lift(g, nvars + 1).scale_poly(&s)).collect::<Result<_>>()?;
    for c in 0..rank {
        all.push(ModuleElement::basis(one_minus_s.mul(&fl)?, c, rank));
    }
    eliminate_last(&all, nvars, rank)
}

/// `(N : f) = {g : f·g ∈ N}`.
pub fn quotient<K: Field>(gens: &[ModuleElement<K>], f: &Polynomial<K>) -> Result<GroebnerBasis<K>> {
    let (nvars, rank) = check(gens, f)?;
    let meet = intersect_with_principal(gens, f)?;
    let ord = MonomialOrder::degrevlex(nvars);
    let fe = ModuleElement::from_poly(f.clone());
    let mut out = Vec::with_capacity(meet.len());
    for g in &meet.elements {
        let mut comps = Vec::with_capacity(rank);
        for p in g.comps() {
            let d = divide(&ModuleElement::from_poly(p.clone()), std::slice::from_ref(&fe), &ord)?;
            debug_assert!(d.remainder.is_zero());
            comps.push(d.quotients[0].clone());
        }
        out.push(ModuleElement::new(comps)?);
    }
    if out.is_empty() {
        out.push(ModuleElement::zero(nvars, rank));
    }
    buchberger(&out, &ord)
}
