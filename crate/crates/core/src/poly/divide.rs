use super::{divides, exp_sub, ModuleElement, MonomialOrder, Polynomial, Term};
use crate::coeff::Field;
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct Division<K: Field> {
    pub quotients: Vec<Polynomial<K>>,
    pub remainder: ModuleElement<K>,
}

/// Multivariate division of `p` by `divisors` in a free module.
///
/// The result satisfies `p = Σ qᵢ·dᵢ + r` with no term of `r` divisible by
/// a divisor's leading term (in the same component).
pub fn divide<K: Field>(p: &ModuleElement<K>, divisors: &[ModuleElement<K>], ord: &MonomialOrder) -> Result<Division<K>> {
    let nvars = p.nvars();
    let rank = p.rank();
    let mut leads = Vec::with_capacity(divisors.len());
    for d in divisors {
        if d.rank() != rank || d.nvars() != nvars {
            return Err(Error::RingMismatch("divisor lives in another module".into()));
        }
        leads.push(d.lead(ord)?);
    }
    let mut quotients = vec![Polynomial::zero(nvars); divisors.len()];
    let mut rem: Vec<Term<K>> = Vec::new();
    let mut cur = p.clone();
    while !cur.is_zero() {
        let (e, c, k) = cur.lead(ord)?;
        let hit = leads.iter().position(|(le, lc, _)| *lc == c && divides(le, &e));
        match hit {
            Some(i) => {
                let (le, _, lk) = &leads[i];
                let m = exp_sub(&e, le);
                let f = k.div(lk)?;
                quotients[i].add_term(m.clone(), f.clone());
                let sub = ModuleElement::new(divisors[i].comps().iter().map(|q| q.mul_term(&m, &f)).collect())?;
                cur = cur.sub(&sub)?;
            }
            None => {
                let single = ModuleElement::basis(Polynomial::monomial(nvars, e.clone(), k.clone()), c, rank);
                cur = cur.sub(&single)?;
                rem.push(Term { exp: e, comp: c, coeff: k });
            }
        }
    }
    Ok(Division { quotients, remainder: ModuleElement::from_terms(nvars, rank, rem) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Rational;

    fn poly(terms: &[(&[u32], i64)]) -> ModuleElement<Rational> {
        let n = terms[0].0.len();
        ModuleElement::from_poly(Polynomial::from_int_terms(n, terms))
    }

    #[test]
    fn simple_divisions() {
        let ord = MonomialOrder::degrevlex(2);
        let x = poly(&[(&[1, 0], 1)]);
        let d = divide(&poly(&[(&[2, 0], 1)]), std::slice::from_ref(&x), &ord).unwrap();
        assert!(d.remainder.is_zero());
        assert_eq!(d.quotients[0], Polynomial::from_int_terms(2, &[(&[1, 0], 1)]));
        let d = divide(&poly(&[(&[2, 0], 1), (&[0, 1], 1)]), &[x], &ord).unwrap();
        assert_eq!(d.remainder, poly(&[(&[0, 1], 1)]));
    }

    #[test]
    fn no_leading_term_divides() {
        let ord = MonomialOrder::degrevlex(2);
        let p = poly(&[(&[1, 1], 1), (&[0, 0], -1)]);
        let ds = [poly(&[(&[2, 0], 1), (&[0, 0], -1)]), poly(&[(&[0, 2], 1), (&[0, 0], -1)])];
        let d = divide(&p, &ds, &ord).unwrap();
        assert_eq!(d.remainder, p);
    }
}
