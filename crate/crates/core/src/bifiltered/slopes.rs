//! Intermediate filtrations `L = pF + qV` and a finite slope diagnostic.

use num_integer::Integer;
use serde::Serialize;

use super::BifilteredPresentation;
use crate::coeff::Rational;
use crate::groebner::buchberger;
use crate::parallel;
use crate::poly::{ModuleElement, MonomialOrder};
use crate::weyl::gr_presentation;
use crate::{Error, Result};

/// Reduced degrevlex Gröbner basis of `gr^L(N)`, `L = pF + qV`, read in
/// the variables of the Weyl algebra (derivations stand for their
/// symbols).
pub fn gr_l(m: &BifilteredPresentation, p: i64, q: i64) -> Result<Vec<ModuleElement<Rational>>> {
    if p <= 0 || q <= 0 {
        return Err(Error::Invalid(format!("slope {p}/{q} needs positive p and q")));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::Invalid(format!("slope {p}/{q} is not in lowest terms")));
    }
    let ring = &m.ring;
    let row: Vec<i64> = ring.f_row().iter().zip(ring.v_row()).map(|(f, v)| p * f + q * v).collect();
    let shifts: Vec<i64> = m.shifts.n.iter().zip(&m.shifts.m).map(|(a, b)| p * a + q * b).collect();
    let gens: Vec<ModuleElement<Rational>> = m.generators.iter().filter(|g| !g.is_zero()).cloned().collect();
    if gens.is_empty() {
        return Ok(Vec::new());
    }
    let symbols = gr_presentation(ring, &gens, &row, &shifts)?;
    Ok(buchberger(&symbols, &MonomialOrder::degrevlex(ring.nvars()))?.elements)
}

/// Slopes whose `gr^L(N)` coincide.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SlopeGroup {
    pub slopes: Vec<(i64, i64)>,
    pub basis: Vec<String>,
}

/// Group `slopes` by equality of `gr^L(N)`; a single group is what a
/// module without slopes along `t = 0` produces.
pub fn slope_scan(m: &BifilteredPresentation, slopes: &[(i64, i64)]) -> Result<Vec<SlopeGroup>> {
    let bases = parallel::map(slopes, |&(p, q)| gr_l(m, p, q));
    let mut groups: Vec<(Vec<ModuleElement<Rational>>, SlopeGroup)> = Vec::new();
    for (&s, b) in slopes.iter().zip(bases) {
        let b = b?;
        match groups.iter_mut().find(|(g, _)| *g == b) {
            Some((_, grp)) => grp.slopes.push(s),
            None => {
                let basis = b.iter().map(|e| e.comps().iter().map(|c| m.ring.format(c)).collect::<Vec<_>>().join(" | ")).collect();
                groups.push((b, SlopeGroup { slopes: vec![s], basis }));
            }
        }
    }
    Ok(groups.into_iter().map(|(_, g)| g).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::WeylRing;

    fn cyclic(p: usize, ops: &[&str]) -> BifilteredPresentation {
        let r = WeylRing::plain(0, p);
        BifilteredPresentation::cyclic(r.clone(), ops.iter().map(|s| r.parse(s).unwrap().into_poly()).collect()).unwrap()
    }

    #[test]
    fn dt_has_no_slopes() {
        let m = cyclic(1, &["dt1"]);
        for (p, q) in [(1, 1), (2, 1), (1, 3)] {
            let g = gr_l(&m, p, q).unwrap();
            assert_eq!(g.len(), 1);
            assert_eq!(m.ring.format(g[0].comp(0)), "dt1");
        }
        assert_eq!(slope_scan(&m, &[(1, 1), (1, 2), (2, 1)]).unwrap().len(), 1);
    }

    #[test]
    fn irregular_operator_has_a_slope() {
        let m = cyclic(1, &["t1^2*dt1 + 1"]);
        let groups = slope_scan(&m, &[(1, 1), (1, 2), (2, 1), (1, 3), (3, 1)]).unwrap();
        assert!(groups.len() >= 2, "{groups:?}");
    }

    #[test]
    fn bad_slopes() {
        let m = cyclic(1, &["dt1"]);
        assert!(gr_l(&m, 0, 1).is_err());
        assert!(gr_l(&m, 2, 4).is_err());
    }
}
