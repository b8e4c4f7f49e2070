use std::sync::Arc;

use super::engine::{self, Sparse};
use super::{from_sparse, Algebra, GroebnerBasis};
use crate::coeff::Field;
use crate::poly::{divides, exp_add, exp_lcm, exp_sub, ModuleElement, ModuleRule, MonomialOrder, SchreyerFrame, Term};

/// Division with quotients: `f = Σ qᵢ·basis[i] + r`. Commutative only.
pub fn divide_tracked<K: Field>(ord: &MonomialOrder, f: Sparse<K>, basis: &[Sparse<K>]) -> (Vec<Vec<Term<K>>>, Sparse<K>) {
    let nvars = ord.nvars();
    let alg = Algebra::commutative(nvars);
    let mut quot: Vec<Vec<Term<K>>> = vec![Vec::new(); basis.len()];
    let mut f = f;
    let mut pos = 0;
    while pos < f.len() {
        let (exp, comp) = (&f[pos].exp, f[pos].comp);
        match basis.iter().position(|g| g[0].comp == comp && divides(&g[0].exp, exp)) {
            Some(k) => {
                let g = &basis[k];
                let m = exp_sub(exp, &g[0].exp);
                let c = f[pos].coeff.div(&g[0].coeff).expect("nonzero lead");
                let h = engine::left_mul(&alg, ord, &m, g);
                quot[k].push(Term { exp: m, comp: 0, coeff: c.clone() });
                let tail = engine::sub_mul(&f[pos..], &c, &h, ord);
                f.truncate(pos);
                f.extend(tail);
            }
            None => pos += 1,
        }
    }
    (quot, f)
}

/// Syzygies of a Gröbner basis, with the Schreyer order they form a
/// Gröbner basis for.
#[derive(Debug, Clone)]
pub struct Syzygies<K: Field> {
    pub elements: Vec<Sparse<K>>,
    pub order: MonomialOrder,
}

/// Schreyer syzygies of `basis` (a Gröbner basis under `ord`).
///
/// For each element `j`, only the minimal generators of the monomial
/// quotient `(lead gᵢ : i < j) : lead gⱼ` are lifted.
pub fn schreyer<K: Field>(ord: &MonomialOrder, basis: &[Sparse<K>]) -> Syzygies<K> {
    let nvars = ord.nvars();
    let frame = SchreyerFrame { leads: basis.iter().map(|g| (g[0].exp.clone(), g[0].comp)).collect(), base: ord.clone() };
    let sord = MonomialOrder::degrevlex(nvars).with_rule(ModuleRule::Schreyer(Arc::new(frame)));
    let alg = Algebra::commutative(nvars);
    let mut out = Vec::new();
    for j in 0..basis.len() {
        let lj = &basis[j][0];
        let mut cands: Vec<(usize, crate::poly::Exp)> = Vec::new();
        for (i, gi) in basis.iter().enumerate().take(j) {
            if gi[0].comp != lj.comp {
                continue;
            }
            let l = exp_lcm(&gi[0].exp, &lj.exp);
            cands.push((i, exp_sub(&l, &lj.exp)));
        }
        let mut keep = vec![true; cands.len()];
        for a in 0..cands.len() {
            for b in 0..cands.len() {
                if a != b && keep[b] && divides(&cands[b].1, &cands[a].1) && (cands[b].1 != cands[a].1 || b < a) {
                    keep[a] = false;
                    break;
                }
            }
        }
        for ((i, mj), k) in cands.into_iter().zip(keep) {
            if !k {
                continue;
            }
            let gi = &basis[i];
            let l = exp_add(&mj, &lj.exp);
            let mi = exp_sub(&l, &gi[0].exp);
            let a = engine::left_mul(&alg, ord, &mj, &basis[j]);
            let b = engine::left_mul(&alg, ord, &mi, gi);
            let ci = a[0].coeff.div(&b[0].coeff).expect("nonzero");
            let s = engine::sub_mul(&a, &ci, &b, ord);
            let (quot, rem) = divide_tracked(ord, s, basis);
            debug_assert!(rem.is_empty(), "input is not a Gröbner basis");
            let mut syz = vec![Term { exp: mj, comp: j, coeff: K::one() }, Term { exp: mi, comp: i, coeff: ci.neg() }];
            for (k, q) in quot.into_iter().enumerate() {
                for t in q {
                    syz.push(Term { exp: t.exp, comp: k, coeff: t.coeff.neg() });
                }
            }
            let syz = engine::normalize(syz, &sord);
            if !syz.is_empty() {
                out.push(syz);
            }
        }
    }
    Syzygies { elements: out, order: sord }
}

/// Generators of the syzygy module of a Gröbner basis.
pub fn syzygies<K: Field>(gb: &GroebnerBasis<K>) -> Vec<ModuleElement<K>> {
    let s = schreyer(&gb.order, &gb.sparse());
    s.elements.iter().map(|e| from_sparse(e, gb.nvars(), gb.len())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Rational;
    use crate::groebner::buchberger;
    use crate::poly::Polynomial;

    fn var(n: usize, i: usize) -> ModuleElement<Rational> {
        ModuleElement::from_poly(Polynomial::var(n, i))
    }

    #[test]
    fn koszul_pair() {
        let ord = MonomialOrder::degrevlex(2);
        let gb = buchberger(&[var(2, 0), var(2, 1)], &ord).unwrap();
        let syz = syzygies(&gb);
        assert_eq!(syz.len(), 1);
        // y·e_x − x·e_y up to sign and basis order
        let s = &syz[0];
        assert_eq!(s.comp(0).len(), 1);
        assert_eq!(s.comp(1).len(), 1);
        let combo = s.comp(0).mul(&Polynomial::var(2, gb.elements[0].lead(&ord).unwrap().0.iter().position(|&e| e == 1).unwrap())).unwrap();
        let combo2 = s.comp(1).mul(&Polynomial::var(2, gb.elements[1].lead(&ord).unwrap().0.iter().position(|&e| e == 1).unwrap())).unwrap();
        assert!(combo.add(&combo2).unwrap().is_zero());
    }

    #[test]
    fn single_element_has_none() {
        let ord = MonomialOrder::degrevlex(2);
        let gb = buchberger(&[var(2, 0)], &ord).unwrap();
        assert!(syzygies(&gb).is_empty());
    }

    #[test]
    fn koszul_three() {
        let ord = MonomialOrder::degrevlex(3);
        let gb = buchberger(&[var(3, 0), var(3, 1), var(3, 2)], &ord).unwrap();
        let s1 = schreyer(&gb.order, &gb.sparse());
        assert_eq!(s1.elements.len(), 3);
        let s2 = schreyer(&s1.order, &s1.elements);
        assert_eq!(s2.elements.len(), 1);
        let s3 = schreyer(&s2.order, &s2.elements);
        assert!(s3.elements.is_empty());
    }
}
