//! Two independent tests of niceness: `h`-divisibility of a Gröbner basis
//! of `gr^V(R_F(N))`, and `θ`-saturation of `gr^F(R_V(N))`.

use serde::{Deserialize, Serialize};

use super::{rees_symbols, BifilteredPresentation};
use crate::coeff::Rational;
use crate::groebner::{buchberger, quotient};
use crate::weyl::lazard_basis as lazard_basis_in;
use crate::poly::{ModuleElement, MonomialOrder, Polynomial, TieBreak};
use crate::weyl::{buchberger_weyl, f_homogenize_module, minimal_gb_and_h_divisibility, symbol_module, Homogenization};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NicenessRoute {
    HDivisibility,
    ThetaQuotient,
}

/// `(L : θ) = L` for `L` in a ring whose last variable is `θ`.
pub(crate) fn theta_saturated(symbols: &[ModuleElement<Rational>], nvars: usize) -> Result<bool> {
    // θ is a nonzerodivisor modulo anything generated without it
    if symbols.iter().all(|g| g.comps().iter().all(|p| p.terms().all(|(e, _)| e[nvars - 1] == 0))) {
        return Ok(true);
    }
    let theta = Polynomial::var(nvars, nvars - 1);
    let colon = quotient(symbols, &theta)?;
    let l = buchberger(symbols, &MonomialOrder::degrevlex(nvars))?;
    Ok(colon.elements.iter().all(|e| l.contains(e)))
}

pub fn nice_route_b(m: &BifilteredPresentation) -> Result<bool> {
    let (symbols, _) = rees_symbols(m)?;
    theta_saturated(&symbols, m.ring.nvars() + 1)
}

/// F-adapted basis, `h`-homogenized, then `gr^V` in `D^(h)` and the
/// `h`-divisibility test on its Gröbner basis.
pub fn nice_route_a(m: &BifilteredPresentation, tie: TieBreak) -> Result<bool> {
    let ring = &m.ring;
    let gens: Vec<ModuleElement<Rational>> = m.generators.iter().filter(|g| !g.is_zero()).cloned().collect();
    if gens.is_empty() {
        return Ok(true);
    }
    let frow = ring.f_row();
    let ord = super::f_adapted_order(ring.nvars(), &frow, &m.shifts.n)?;
    let fbasis = buchberger_weyl(ring, &gens, &ord)?;
    let hring = ring.with(Homogenization::H);
    let lifted: Vec<ModuleElement<Rational>> = fbasis.elements.iter().map(|g| f_homogenize_module(ring, g, &m.shifts.n)).collect();
    let mut degrees = vec![1; hring.nvars()];
    degrees[hring.nvars() - 1] = 2;
    let vrow = hring.v_row();
    let (vbasis, _) = lazard_basis_in(&hring.algebra(), &lifted, &degrees, &vrow, &m.shifts.m)?;
    let initial: Vec<ModuleElement<Rational>> = vbasis.iter().map(|g| symbol_module(g, &vrow, &m.shifts.m)).collect();
    Ok(minimal_gb_and_h_divisibility(&hring, &initial, &m.shifts.n, tie)?.1)
}

/// Niceness of the bifiltration, by the `θ`-quotient route.
pub fn is_nicely_bifiltered(m: &BifilteredPresentation) -> Result<bool> {
    nice_route_b(m)
}
