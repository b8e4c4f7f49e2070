use super::{buchberger, GroebnerBasis};
use crate::coeff::{Field, ParamPoly, Rational, RationalFunction};
use crate::poly::{Exp, ModuleElement, MonomialOrder, Polynomial};
use crate::Result;

fn poly_lcm(a: &ParamPoly, b: &ParamPoly) -> ParamPoly {
    let g = a.gcd(b);
    a.mul(b).div_exact(&g).expect("gcd divides the product")
}

/// Leading coefficients `qᵢ ∈ Q[λ]` of the basis elements after clearing
/// denominators.
pub fn leading_param_coeffs(gb: &GroebnerBasis<RationalFunction>) -> Vec<ParamPoly> {
    gb.elements
        .iter()
        .map(|e| {
            let den = e.comps().iter().flat_map(|p| p.terms().map(|(_, c)| c.denominator().clone())).fold(ParamPoly::one(), |a, b| poly_lcm(&a, &b));
            let (_, _, lc) = e.lead(&gb.order).expect("basis elements are nonzero");
            lc.numerator().mul(&den).div_exact(lc.denominator()).expect("denominator divides the lcm")
        })
        .collect()
}

/// Substitute `λ = c` into a basis over `Q(λ)`. The flag is false when
/// some `qᵢ(c)` vanishes or a coefficient has a pole at `c`; the caller
/// then draws another point.
pub fn specialize_parametric(gb: &GroebnerBasis<RationalFunction>, c: &[Rational]) -> Result<(GroebnerBasis<Rational>, bool)> {
    let nvars = gb.nvars();
    let ok_leads = leading_param_coeffs(gb).iter().all(|q| q.evaluate(c).map(|v| !v.is_zero()).unwrap_or(false));
    let mut out = Vec::with_capacity(gb.len());
    let mut ok = ok_leads;
    for e in &gb.elements {
        let mut comps = Vec::with_capacity(e.rank());
        for p in e.comps() {
            let mut q = Polynomial::zero(nvars);
            for (x, k) in p.terms() {
                match k.evaluate(c) {
                    Ok(v) => q.add_term(x.clone(), v),
                    Err(_) => ok = false,
                }
            }
            comps.push(q);
        }
        out.push(ModuleElement::new(comps)?);
    }
    if !ok {
        return Ok((buchberger(&[ModuleElement::zero(nvars, gb.rank())], &gb.order)?, false));
    }
    Ok((buchberger(&out, &gb.order)?, true))
}

/// A basis in `k[y, x]` specialized at `x = c`, where `x` are the
/// parameter variables of a block order with `x` last.
#[derive(Debug, Clone)]
pub struct BlockSpecialization {
    pub elements: Vec<ModuleElement<Rational>>,
    /// Leading `y`-exponents with their components.
    pub leads: Vec<(Exp, usize)>,
    pub ok: bool,
}

/// Specialize the parameter variables `params` of `gb` to `c`. The
/// leading `x`-coefficient `qᵢ` of each element collects the terms sharing
/// the leading `y`-monomial; the result is valid when every `qᵢ(c) ≠ 0`.
pub fn specialize_block(gb: &GroebnerBasis<Rational>, params: &[usize], c: &[Rational]) -> Result<BlockSpecialization> {
    let nvars = gb.nvars();
    let keep: Vec<usize> = (0..nvars).filter(|v| !params.contains(v)).collect();
    let project = |x: &[u32]| -> Exp { keep.iter().map(|&v| x[v]).collect() };
    let value = |x: &[u32]| -> Rational {
        let mut acc = <Rational as Field>::one();
        for (k, &v) in params.iter().enumerate() {
            for _ in 0..x[v] {
                acc = acc.mul(&c[k]);
            }
        }
        acc
    };
    let mut ok = true;
    let mut leads = Vec::with_capacity(gb.len());
    let mut elements = Vec::with_capacity(gb.len());
    for e in &gb.elements {
        let (lx, lc, _) = e.lead(&gb.order)?;
        let ly = project(&lx);
        let mut q = <Rational as Field>::zero();
        for (x, k) in e.comp(lc).terms() {
            if project(x) == ly {
                q = q.add(&k.mul(&value(x)));
            }
        }
        if q.is_zero() {
            ok = false;
        }
        leads.push((ly, lc));
        let comps = e
            .comps()
            .iter()
            .map(|p| {
                let mut out = Polynomial::zero(keep.len());
                for (x, k) in p.terms() {
                    out.add_term(project(x), k.mul(&value(x)));
                }
                out
            })
            .collect();
        elements.push(ModuleElement::new(comps)?);
    }
    Ok(BlockSpecialization { elements, leads, ok })
}

/// Reduced basis of a block specialization under `ord` on the `y`
/// variables.
pub fn block_basis(s: &BlockSpecialization, ord: &MonomialOrder) -> Result<GroebnerBasis<Rational>> {
    buchberger(&s.elements, ord)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::block_order;

    fn rf(p: ParamPoly) -> RationalFunction {
        RationalFunction::from_poly(p)
    }

    #[test]
    fn parametric_line() {
        // ⟨λx − y⟩
        let lam = ParamPoly::var(0);
        let mut f = Polynomial::<RationalFunction>::zero(2);
        f.add_term([1u32, 0].into_iter().collect(), rf(lam));
        f.add_term([0u32, 1].into_iter().collect(), rf(ParamPoly::constant(Rational::from_integer(-1))));
        let ord = MonomialOrder::lex(2);
        let gb = buchberger(&[ModuleElement::from_poly(f)], &ord).unwrap();
        assert_eq!(leading_param_coeffs(&gb), vec![ParamPoly::var(0)]);
        let (s, ok) = specialize_parametric(&gb, &[Rational::from_integer(1)]).unwrap();
        assert!(ok);
        let expect = Polynomial::<Rational>::from_int_terms(2, &[(&[1, 0], 1), (&[0, 1], -1)]);
        assert_eq!(s.elements, vec![ModuleElement::from_poly(expect)]);
        let (_, ok) = specialize_parametric(&gb, &[Rational::from_integer(0)]).unwrap();
        assert!(!ok);
    }

    #[test]
    fn block_specialization() {
        // variables (y, x); ⟨x·y − 1⟩ with x last
        let f = Polynomial::<Rational>::from_int_terms(2, &[(&[1, 1], 1), (&[0, 0], -1)]);
        let ord = block_order(2, &[0], vec![]).unwrap();
        let gb = buchberger(&[ModuleElement::from_poly(f)], &ord).unwrap();
        let s = specialize_block(&gb, &[1], &[Rational::from_integer(2)]).unwrap();
        assert!(s.ok);
        assert_eq!(s.leads[0].0.to_vec(), vec![1]);
        let s = specialize_block(&gb, &[1], &[Rational::from_integer(0)]).unwrap();
        assert!(!s.ok);
    }
}
