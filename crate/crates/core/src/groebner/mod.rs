//! Gröbner bases of submodules of free modules, syzygies, resolutions,
//! saturation and parameter specialization.

pub mod algebra;
pub mod engine;
mod resolution;
mod saturate;
mod specialize;
mod syzygy;

pub use algebra::Algebra;
pub use engine::{GbStats, Sparse};
pub use resolution::{free_resolution, minimize_resolution, GradedFreeResolution};
pub use saturate::{intersect_with_principal, quotient, saturate};
pub use specialize::{block_basis, leading_param_coeffs, specialize_block, specialize_parametric, BlockSpecialization};
pub use syzygy::{divide_tracked, syzygies, Syzygies};

use crate::coeff::Field;
use crate::poly::{Exp, ModuleElement, MonomialOrder, Term};
use crate::{Error, Result};

/// A Gröbner basis together with the order it was computed for. The
/// public elements are monic; reductions use a copy kept in the field's
/// cheaper normal form.
#[derive(Debug, Clone)]
pub struct GroebnerBasis<K: Field> {
    pub elements: Vec<ModuleElement<K>>,
    pub order: MonomialOrder,
    pub reduced: bool,
    pub minimal: bool,
    pub stats: GbStats,
    pub algebra: Algebra,
    nvars: usize,
    rank: usize,
    cache: Vec<Sparse<K>>,
}

pub fn to_sparse<K: Field>(m: &ModuleElement<K>, ord: &MonomialOrder) -> Sparse<K> {
    engine::normalize(m.to_terms(), ord)
}

pub fn from_sparse<K: Field>(s: &[Term<K>], nvars: usize, rank: usize) -> ModuleElement<K> {
    ModuleElement::from_terms(nvars, rank, s.iter().cloned())
}

impl<K: Field> GroebnerBasis<K> {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn sparse(&self) -> Vec<Sparse<K>> {
        self.sparse_ref().to_vec()
    }

    fn sparse_ref(&self) -> &[Sparse<K>] {
        &self.cache
    }

    /// Leading monomials `(exponent, component)`.
    pub fn initial_module(&self) -> Vec<(Exp, usize)> {
        self.sparse_ref().iter().map(|s| (s[0].exp.clone(), s[0].comp)).collect()
    }

    /// Normal form of `f` under left reduction in the basis' algebra.
    pub fn normal_form(&self, f: &ModuleElement<K>) -> ModuleElement<K> {
        let refs: Vec<&Sparse<K>> = self.sparse_ref().iter().collect();
        let (r, u) = engine::reduce_scaled(&self.algebra, &self.order, to_sparse(f, &self.order), &refs, true);
        let r = if u.is_one() { r } else { engine::scale(&r, &u.inv().expect("nonzero multiplier")) };
        from_sparse(&r, self.nvars, self.rank)
    }

    pub fn contains(&self, f: &ModuleElement<K>) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn is_groebner(&self) -> bool {
        engine::is_groebner(&self.algebra, &self.order, self.sparse_ref())
    }
}

/// Reduced Gröbner basis of the submodule generated by `gens`.
pub fn buchberger<K: Field>(gens: &[ModuleElement<K>], ord: &MonomialOrder) -> Result<GroebnerBasis<K>> {
    let (nvars, _) = shape(gens, ord)?;
    buchberger_in(&Algebra::commutative(nvars), gens, ord)
}

/// Reduced left Gröbner basis in `alg`, which must be compatible with
/// `ord`.
pub fn buchberger_in<K: Field>(alg: &Algebra, gens: &[ModuleElement<K>], ord: &MonomialOrder) -> Result<GroebnerBasis<K>> {
    let (nvars, rank) = shape(gens, ord)?;
    engine::check_admissible(alg, ord)?;
    let sparse: Vec<Sparse<K>> = gens.iter().map(|g| to_sparse(g, ord)).collect();
    let (gb, stats) = engine::groebner(alg, ord, sparse);
    Ok(GroebnerBasis {
        elements: gb.iter().map(|s| from_sparse(&engine::make_monic(s.clone()), nvars, rank)).collect(),
        order: ord.clone(),
        reduced: true,
        minimal: true,
        stats,
        algebra: alg.clone(),
        nvars,
        rank,
        cache: gb,
    })
}

fn shape<K: Field>(gens: &[ModuleElement<K>], ord: &MonomialOrder) -> Result<(usize, usize)> {
    let nvars = ord.nvars();
    let rank = gens.first().map_or(1, |g| g.rank());
    for g in gens {
        if g.nvars() != nvars || g.rank() != rank {
            return Err(Error::RingMismatch("generators live in different free modules".into()));
        }
    }
    Ok((nvars, rank))
}

/// Degrevlex restricted to `vars`, written as weight rows: total degree on
/// `vars` followed by reversed unit rows.
pub fn degrevlex_rows(nvars: usize, vars: &[usize]) -> Vec<Vec<i64>> {
    let mut rows = Vec::new();
    let mut first = vec![0; nvars];
    for &v in vars {
        first[v] = 1;
    }
    rows.push(first);
    for &v in vars.iter().rev().take(vars.len().saturating_sub(1)) {
        let mut r = vec![0; nvars];
        r[v] = -1;
        rows.push(r);
    }
    rows
}

/// Block order: monomials in `first` are compared first (degrevlex among
/// themselves), remaining variables break ties.
pub fn block_order(nvars: usize, first: &[usize], weights: Vec<Vec<i64>>) -> Result<MonomialOrder> {
    let mut rows = weights;
    rows.extend(degrevlex_rows(nvars, first));
    MonomialOrder::new(nvars, rows, crate::poly::TieBreak::DegRevLex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Rational;
    use crate::poly::Polynomial;

    fn p(terms: &[(&[u32], i64)]) -> ModuleElement<Rational> {
        ModuleElement::from_poly(Polynomial::from_int_terms(terms[0].0.len(), terms))
    }

    #[test]
    fn single_generator() {
        let ord = MonomialOrder::degrevlex(1);
        let gb = buchberger(&[p(&[(&[1], 1)])], &ord).unwrap();
        assert_eq!(gb.elements, vec![p(&[(&[1], 1)])]);
    }

    #[test]
    fn initial_modules() {
        let ord = MonomialOrder::degrevlex(2);
        let gb = buchberger(&[p(&[(&[2, 0], 1), (&[0, 1], -1)])], &ord).unwrap();
        let e: Exp = [2, 0].into_iter().collect();
        assert_eq!(gb.initial_module(), vec![(e, 0)]);
        let lex = MonomialOrder::lex(3);
        let gb = buchberger(&[p(&[(&[1, 1, 0], 1), (&[0, 0, 2], -1)]), p(&[(&[2, 0, 0], 1)])], &lex).unwrap();
        let mut leads: Vec<Vec<u32>> = gb.initial_module().into_iter().map(|(e, _)| e.to_vec()).collect();
        leads.sort();
        assert!(leads.contains(&vec![1, 1, 0]) && leads.contains(&vec![2, 0, 0]));
    }

    #[test]
    fn permuted_generators_same_basis() {
        let ord = MonomialOrder::degrevlex(3);
        let g = [p(&[(&[1, 0, 1], 1), (&[0, 2, 0], -1)]), p(&[(&[1, 1, 0], 1), (&[0, 0, 2], -3)]), p(&[(&[0, 1, 1], 2), (&[1, 0, 0], 1)])];
        let a = buchberger(&g, &ord).unwrap();
        let b = buchberger(&[g[2].clone(), g[0].clone(), g[1].clone()], &ord).unwrap();
        assert_eq!(a.elements, b.elements);
        assert!(a.is_groebner());
    }

    #[test]
    fn block_rows_order() {
        // x comes last: y*x^5 < y^2
        let ord = block_order(2, &[1], vec![]).unwrap();
        assert!(ord.cmp_exp(&[5, 1], &[0, 2]).is_lt());
        assert!(ord.cmp_exp(&[1, 1], &[0, 1]).is_gt());
    }
}
