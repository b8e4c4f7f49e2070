//! Gröbner bases adapted to weight vectors in Weyl-type algebras.

use super::{dehomogenize_module, pad, symbol_module, Homogenization, WeylRing};
use crate::coeff::Rational;
use crate::groebner::{buchberger_in, degrevlex_rows, Algebra, GbStats, GroebnerBasis};
use crate::poly::{ModuleElement, MonomialOrder, TieBreak};
use crate::{Error, Result};

pub fn buchberger_weyl(ring: &WeylRing, gens: &[ModuleElement<Rational>], ord: &MonomialOrder) -> Result<GroebnerBasis<Rational>> {
    buchberger_in(&ring.algebra(), gens, ord)
}

fn weighted_order(nvars: usize, rows: Vec<Vec<i64>>, shifts: &[Vec<i64>]) -> Result<MonomialOrder> {
    Ok(MonomialOrder::new(nvars, rows, TieBreak::DegRevLex)?.with_shifts(shifts.to_vec()))
}

/// Generators of `N` whose `(weight, shifts)`-initial forms generate the
/// initial module, for weights that may be negative.
///
/// The generators are homogenized in a new variable `u` with respect to
/// the positive grading `degrees`, a basis is computed for total degree,
/// then weight, then degrevlex, and `u` is set back to 1.
pub fn lazard_basis(alg: &Algebra, gens: &[ModuleElement<Rational>], degrees: &[i64], weight: &[i64], shifts: &[i64]) -> Result<(Vec<ModuleElement<Rational>>, GbStats)> {
    let nv = alg.nvars();
    if degrees.len() != nv || weight.len() != nv || degrees.iter().any(|&d| d <= 0) {
        return Err(Error::Invalid("homogenizing grading must be positive on every variable".into()));
    }
    let deg_of = |e: &[u32]| -> i64 { e.iter().zip(degrees).map(|(&a, d)| a as i64 * d).sum() };
    let wt = |e: &[u32]| -> i64 { e.iter().zip(weight).map(|(&a, w)| a as i64 * w).sum() };
    // A weight that grades the algebra leaves homogeneous generators
    // adapted as they stand.
    let grades_algebra = alg.pairs().iter().all(|&(x, d)| weight[x] + weight[d] == wt(&alg.commutator_exp()));
    let homogeneous = gens.iter().all(|g| {
        let mut seen = None;
        g.comps().iter().enumerate().all(|(c, p)| p.terms().all(|(e, _)| *seen.get_or_insert(wt(e) + shifts.get(c).copied().unwrap_or(0)) == wt(e) + shifts.get(c).copied().unwrap_or(0)))
    });
    if grades_algebra && homogeneous {
        return Ok((gens.iter().filter(|g| !g.is_zero()).cloned().collect(), GbStats::default()));
    }
    let cdeg = deg_of(&alg.commutator_exp());
    let mut commutator: Vec<(usize, u32)> = alg.commutator().to_vec();
    if let Some(&(x, d)) = alg.pairs().first() {
        let gap = degrees[x] + degrees[d] - cdeg;
        if gap < 0 || alg.pairs().iter().any(|&(x, d)| degrees[x] + degrees[d] - cdeg != gap) {
            return Err(Error::Invalid("grading does not make the relations homogeneous".into()));
        }
        if gap > 0 {
            commutator.push((nv, gap as u32));
        }
    }
    let halg = if alg.is_commutative() { Algebra::commutative(nv + 1) } else { Algebra::weyl(nv + 1, alg.pairs().to_vec(), commutator) };

    let mut r1 = degrees.to_vec();
    r1.push(1);
    let mut r2 = weight.to_vec();
    r2.push(0);
    let rank = gens.first().map_or(1, |g| g.rank());
    let sh: Vec<Vec<i64>> = (0..rank).map(|c| vec![0, shifts.get(c).copied().unwrap_or(0)]).collect();
    let ord = weighted_order(nv + 1, vec![r1, r2], &sh)?;

    let hom: Vec<ModuleElement<Rational>> = gens.iter().map(|g| pad(g, nv + 1, |e, _| deg_of(e))).collect();
    let gb = buchberger_in(&halg, &hom, &ord)?;
    let mut out: Vec<ModuleElement<Rational>> = Vec::new();
    for g in &gb.elements {
        let d = dehomogenize_module(g);
        if !d.is_zero() && !out.contains(&d) {
            out.push(d);
        }
    }
    Ok((out, gb.stats))
}

/// Generators of `gr^w(N)` for the weight row `row` (over all variables)
/// and component shifts. Symbols are read in the same variables.
pub fn gr_presentation(ring: &WeylRing, gens: &[ModuleElement<Rational>], row: &[i64], shifts: &[i64]) -> Result<Vec<ModuleElement<Rational>>> {
    let nv = ring.nvars();
    let basis = if row.iter().any(|&w| w < 0) {
        let mut degrees = vec![1; nv];
        if ring.hom == Homogenization::H {
            degrees[nv - 1] = 2;
        }
        lazard_basis(&ring.algebra(), gens, &degrees, row, shifts)?.0
    } else {
        let rank = gens.first().map_or(1, |g| g.rank());
        let sh: Vec<Vec<i64>> = (0..rank).map(|c| vec![shifts.get(c).copied().unwrap_or(0)]).collect();
        let ord = weighted_order(nv, vec![row.to_vec()], &sh)?;
        buchberger_weyl(ring, gens, &ord)?.elements
    };
    Ok(basis.iter().map(|g| symbol_module(g, row, shifts)).collect())
}

/// Reduced Gröbner basis of an F-homogeneous submodule of `D^(h)`-modules
/// under shifted order, then `|∂|`, then degrevlex; the flag is true when
/// no leading monomial involves `h`.
pub fn minimal_gb_and_h_divisibility(ring: &WeylRing, gens: &[ModuleElement<Rational>], nshifts: &[i64], tie: TieBreak) -> Result<(GroebnerBasis<Rational>, bool)> {
    if ring.hom != Homogenization::H {
        return Err(Error::RingMismatch("needs the homogenized Weyl algebra".into()));
    }
    let nv = ring.nvars();
    let h = nv - 1;
    let f = ring.f_row();
    let mut d = f.clone();
    d[h] = 0;
    for (i, g) in gens.iter().enumerate() {
        let mut seen = None;
        for (c, p) in g.comps().iter().enumerate() {
            for (e, _) in p.terms() {
                let deg: i64 = e.iter().zip(&f).map(|(&a, w)| a as i64 * w).sum::<i64>() + nshifts.get(c).copied().unwrap_or(0);
                if *seen.get_or_insert(deg) != deg {
                    return Err(Error::NotHomogeneous { index: i });
                }
            }
        }
    }
    let rank = gens.first().map_or(1, |g| g.rank());
    let sh: Vec<Vec<i64>> = (0..rank).map(|c| vec![nshifts.get(c).copied().unwrap_or(0); 2]).collect();
    let mut rows = vec![f, d];
    if tie == TieBreak::Lex {
        // lex among the remaining variables, spelled as unit rows
        rows.extend((0..nv).map(|v| {
            let mut r = vec![0; nv];
            r[v] = 1;
            r
        }));
    } else {
        rows.extend(degrevlex_rows(nv, &(0..nv).collect::<Vec<_>>()));
    }
    let ord = weighted_order(nv, rows, &sh)?;
    let gb = buchberger_weyl(ring, gens, &ord)?;
    let saturated = gb.initial_module().iter().all(|(e, _)| e[h] == 0);
    Ok((gb, saturated))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h_divisibility() {
        let r = WeylRing::homogenized(1, 0);
        let h = ModuleElement::from_poly(r.parse("h").unwrap().into_poly());
        assert!(!minimal_gb_and_h_divisibility(&r, &[h], &[], TieBreak::DegRevLex).unwrap().1);
        let d = ModuleElement::from_poly(r.parse("dx1").unwrap().into_poly());
        assert!(minimal_gb_and_h_divisibility(&r, &[d], &[], TieBreak::Lex).unwrap().1);
        let bad = ModuleElement::from_poly(r.parse("dx1 + x1").unwrap().into_poly());
        assert_eq!(minimal_gb_and_h_divisibility(&r, &[bad], &[], TieBreak::DegRevLex).unwrap_err(), Error::NotHomogeneous { index: 0 });
    }

    #[test]
    fn f_graded_of_euler() {
        let r = WeylRing::plain(1, 0);
        let g = ModuleElement::from_poly(r.parse("x1*dx1 + 1").unwrap().into_poly());
        let gr = gr_presentation(&r, &[g], &r.f_row(), &[]).unwrap();
        assert_eq!(gr.len(), 1);
        assert_eq!(r.format(gr[0].comp(0)), "x1*dx1");
    }

    #[test]
    fn v_graded_needs_all_generators() {
        // in_V((t+1)∂t) = ∂t
        let r = WeylRing::plain(0, 1);
        let g = ModuleElement::from_poly(r.parse("t1*dt1 + dt1").unwrap().into_poly());
        let gr = gr_presentation(&r, &[g], &r.v_row(), &[]).unwrap();
        assert_eq!(gr.len(), 1);
        assert_eq!(r.format(gr[0].comp(0)), "dt1");
        // two generators whose V-initial ideal is larger than the initials
        let a = ModuleElement::from_poly(r.parse("dt1 + t1^2").unwrap().into_poly());
        let b = ModuleElement::from_poly(r.parse("t1*dt1").unwrap().into_poly());
        let gr = gr_presentation(&r, &[a, b], &r.v_row(), &[]).unwrap();
        let ord = MonomialOrder::degrevlex(2);
        let gb = crate::groebner::buchberger(&gr, &ord).unwrap();
        // ∂t is itself an initial form
        assert!(gb.contains(&ModuleElement::from_poly(r.parse("dt1").unwrap().into_poly())));
    }
}
