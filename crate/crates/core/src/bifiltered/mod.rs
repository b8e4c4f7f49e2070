//! Bifiltered presentations `D^r[n][m]/N` and the pipeline from them to
//! `K_{F,V}`, codimensions and multidegrees, plus niceness, `bigr` and
//! the intermediate filtrations `L = pF + qV`.

mod nice;
mod slopes;

pub use nice::{is_nicely_bifiltered, nice_route_a, nice_route_b, NicenessRoute};
pub use slopes::{gr_l, slope_scan, SlopeGroup};

use rand::Rng;
use serde::Serialize;

use crate::coeff::Rational;
use crate::grading::{builtin_bigrading, Flavor, Multigrading, ShiftPair};
use crate::groebner::{block_order, buchberger, free_resolution, specialize_block, GbStats};
use crate::kpoly::{codim_monomial, expand_and_extract, k_from_resolution, k_monomial, KPolynomial, Multidegree};
use crate::poly::{Exp, ModuleElement, MonomialOrder, Polynomial, TieBreak};
use crate::rng::stage_rng;
use crate::weyl::{buchberger_weyl, lazard_basis, symbol_module, v_homogenize_module, Homogenization, WeylRing};
use crate::{Error, Result};

/// Draws before giving up on a generic specialization.
const MAX_DRAWS: usize = 32;
const DRAW_BOUND: i64 = 1_000_000;

/// `D^r[n][m]/N` with `N` given by generators. The V-filtration is along
/// `t = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BifilteredPresentation {
    pub ring: WeylRing,
    pub generators: Vec<ModuleElement<Rational>>,
    pub shifts: ShiftPair,
}

impl BifilteredPresentation {
    pub fn new(ring: WeylRing, generators: Vec<ModuleElement<Rational>>, shifts: ShiftPair) -> Result<Self> {
        if ring.hom != Homogenization::None {
            return Err(Error::RingMismatch("presentations live over the plain Weyl algebra".into()));
        }
        if shifts.rank() == 0 {
            return Err(Error::Invalid("rank must be positive".into()));
        }
        for g in &generators {
            if g.nvars() != ring.nvars() || g.rank() != shifts.rank() {
                return Err(Error::RingMismatch("generator outside D^r".into()));
            }
        }
        Ok(BifilteredPresentation { ring, generators, shifts })
    }

    /// `D/N` for a left ideal given by operators, with zero shifts.
    pub fn cyclic(ring: WeylRing, ops: Vec<Polynomial<Rational>>) -> Result<Self> {
        let gens = ops.into_iter().map(ModuleElement::from_poly).collect();
        Self::new(ring, gens, ShiftPair::zero(1))
    }

    pub fn rank(&self) -> usize {
        self.shifts.rank()
    }

    /// Read the text form:
    ///
    /// ```text
    /// ring 0 1        # n p
    /// rank 1
    /// fshift 0
    /// vshift 0
    /// gen dt1
    /// ```
    ///
    /// Components of a generator are separated by `|`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut ring = None;
        let mut rank = 1usize;
        let mut fshift = None;
        let mut vshift = None;
        let mut raw_gens: Vec<(usize, usize, &str)> = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let body = line.split('#').next().unwrap_or("");
            let trimmed = body.trim_start();
            if trimmed.is_empty() {
                continue;
            }
            let lead = body.len() - trimmed.len();
            let (key, rest) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed, ""));
            let syntax = |msg: &str| Error::Syntax { line: i + 1, col: lead + 1, msg: msg.into() };
            let ints = |s: &str| -> Result<Vec<i64>> { s.split_whitespace().map(|w| w.parse::<i64>().map_err(|_| syntax("expected an integer"))).collect() };
            match key {
                "ring" => match ints(rest)?.as_slice() {
                    &[n, p] if n >= 0 && p >= 0 => ring = Some(WeylRing::plain(n as usize, p as usize)),
                    _ => return Err(syntax("ring takes two sizes n p")),
                },
                "rank" => match ints(rest)?.as_slice() {
                    &[r] if r > 0 => rank = r as usize,
                    _ => return Err(syntax("rank takes one positive integer")),
                },
                "fshift" => fshift = Some(ints(rest)?),
                "vshift" => vshift = Some(ints(rest)?),
                "gen" => raw_gens.push((i + 1, lead + key.len() + 1, rest)),
                _ => return Err(syntax("unknown keyword")),
            }
        }
        let ring = ring.ok_or_else(|| Error::Syntax { line: 1, col: 1, msg: "missing ring header".into() })?;
        let shifts = ShiftPair::new(fshift.unwrap_or_else(|| vec![0; rank]), vshift.unwrap_or_else(|| vec![0; rank]))?;
        if shifts.rank() != rank {
            return Err(Error::Invalid(format!("shift vectors have length {} for rank {rank}", shifts.rank())));
        }
        let mut gens = Vec::with_capacity(raw_gens.len());
        for (line, col0, src) in raw_gens {
            let parts: Vec<&str> = src.split('|').collect();
            if parts.len() != rank {
                return Err(Error::Syntax { line, col: col0 + 1, msg: format!("expected {rank} components") });
            }
            let mut comps = Vec::with_capacity(rank);
            let mut offset = col0;
            for part in parts {
                let p = ring.parse(part).map_err(|e| match e {
                    Error::Syntax { col, msg, .. } => Error::Syntax { line, col: offset + col, msg },
                    other => other,
                })?;
                comps.push(p.into_poly());
                offset += part.len() + 1;
            }
            gens.push(ModuleElement::new(comps)?);
        }
        Self::new(ring, gens, shifts)
    }

    /// Inverse of [`BifilteredPresentation::parse`].
    pub fn to_text(&self) -> String {
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
        let mut out = format!("ring {} {}\nrank {}\nfshift {}\nvshift {}\n", self.ring.n, self.ring.p, self.rank(), join(&self.shifts.n), join(&self.shifts.m));
        for g in &self.generators {
            let comps: Vec<String> = g.comps().iter().map(|c| self.ring.format(c)).collect();
            out.push_str(&format!("gen {}\n", comps.join(" | ")));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StageStats {
    pub stage: String,
    #[serde(flatten)]
    pub gb: GbStats,
}

impl StageStats {
    fn new(stage: &str, gb: GbStats) -> Self {
        StageStats { stage: stage.into(), gb }
    }
}

/// A commutative multigraded presentation `S^r/L`, after any generic
/// specialization of zero-degree variables.
#[derive(Debug, Clone)]
pub struct GradedPresentation {
    pub generators: Vec<ModuleElement<Rational>>,
    pub grading: Multigrading,
    pub shifts: Vec<Vec<i64>>,
    pub rank: usize,
    /// Leading monomials of a Gröbner basis of `L`.
    pub leads: Vec<(Exp, usize)>,
    /// The point substituted for the specialized variables.
    pub point: Vec<Rational>,
    pub stats: Vec<StageStats>,
}

impl GradedPresentation {
    pub fn ambient_dim(&self) -> usize {
        self.grading.nvars()
    }

    pub fn k_polynomial(&self) -> KPolynomial {
        k_monomial(&self.leads, self.rank, &self.grading, &self.shifts)
    }

    pub fn codim(&self) -> usize {
        codim_monomial(&self.leads, self.rank, self.ambient_dim())
    }

    /// The same K-polynomial read off a graded free resolution.
    pub fn k_by_resolution(&self) -> Result<KPolynomial> {
        let gens: Vec<ModuleElement<Rational>> = self.generators.iter().filter(|g| !g.is_zero()).cloned().collect();
        let r = free_resolution(&gens, self.rank, self.shifts.clone(), &self.grading, self.ambient_dim() + 1)?;
        Ok(k_from_resolution(&r))
    }
}

/// Weight row with component shifts, ties broken by lex. Degrevlex ties
/// blow up on GKZ systems: the basis of one example grows from 71 to
/// 1354 elements.
pub(crate) fn f_adapted_order(nvars: usize, row: &[i64], nshifts: &[i64]) -> Result<MonomialOrder> {
    let sh: Vec<Vec<i64>> = nshifts.iter().map(|&s| vec![s]).collect();
    Ok(MonomialOrder::new(nvars, vec![row.to_vec()], TieBreak::Lex)?.with_shifts(sh))
}

/// Commutative Gröbner data for `symbols`, generic in the variables
/// `params` (which must have degree zero).
///
/// `symbols` are the symbols of a Gröbner basis for `order`, which refines
/// the grading weight, so with nothing to specialize they already form a
/// basis of the graded module for that order.
#[allow(clippy::too_many_arguments)]
fn specialize_generic(symbols: Vec<ModuleElement<Rational>>, order: &MonomialOrder, rank: usize, grading: &Multigrading, shifts: Vec<Vec<i64>>, params: &[usize], seed: u64, mut stats: Vec<StageStats>) -> Result<GradedPresentation> {
    let nv = grading.nvars();
    if params.is_empty() {
        let generators: Vec<ModuleElement<Rational>> = symbols.into_iter().filter(|g| !g.is_zero()).collect();
        let leads = generators.iter().map(|g| g.lead(order).map(|(e, c, _)| (e, c))).collect::<Result<Vec<_>>>()?;
        stats.push(StageStats::new("graded", GbStats { basis_size: generators.len(), ..GbStats::default() }));
        return Ok(GradedPresentation { leads, generators, grading: grading.clone(), shifts, rank, point: Vec::new(), stats });
    }
    let symbols: Vec<ModuleElement<Rational>> = if symbols.is_empty() { vec![ModuleElement::zero(nv, rank)] } else { symbols };
    let keep: Vec<usize> = (0..nv).filter(|v| !params.contains(v)).collect();
    let ord = block_order(nv, &keep, vec![])?;
    let gb = buchberger(&symbols, &ord)?;
    stats.push(StageStats::new("graded", gb.stats.clone()));
    let restricted = Multigrading::new(keep.iter().map(|&v| grading.degrees()[v].clone()).collect(), grading.dim())?;
    let mut rng = stage_rng(seed, "specialize");
    let mut failed = Vec::new();
    for _ in 0..MAX_DRAWS {
        let draw: u64 = rng.gen();
        let mut local = crate::rng::rng_from(draw);
        let point: Vec<Rational> = params.iter().map(|_| Rational::from_integer(local.gen_range(-DRAW_BOUND..=DRAW_BOUND))).collect();
        let s = specialize_block(&gb, params, &point)?;
        if s.ok {
            return Ok(GradedPresentation { generators: s.elements, grading: restricted, shifts, rank, leads: s.leads, point, stats });
        }
        failed.push(draw);
    }
    Err(Error::SpecializationExhausted { seeds: failed })
}

/// The order the symbols from [`rees_symbols`] form a Gröbner basis for.
fn rees_order(m: &BifilteredPresentation) -> Result<MonomialOrder> {
    let rees = m.ring.with(Homogenization::Theta);
    f_adapted_order(rees.nvars(), &rees.f_row(), &m.shifts.n)
}

/// Generators of `gr^F(R_V(N))` in `k[x, t, ξx, ξt, θ]`, before any
/// specialization.
pub fn rees_symbols(m: &BifilteredPresentation) -> Result<(Vec<ModuleElement<Rational>>, Vec<StageStats>)> {
    let ring = &m.ring;
    let nv = ring.nvars();
    let gens: Vec<ModuleElement<Rational>> = m.generators.iter().filter(|g| !g.is_zero()).cloned().collect();
    if gens.is_empty() {
        return Ok((Vec::new(), Vec::new()));
    }
    let (vbasis, vstats) = lazard_basis(&ring.algebra(), &gens, &vec![1; nv], &ring.v_row(), &m.shifts.m)?;
    let rees = ring.with(Homogenization::Theta);
    let lifted: Vec<ModuleElement<Rational>> = vbasis.iter().map(|g| v_homogenize_module(ring, g, &m.shifts.m)).collect();
    let row = rees.f_row();
    let gb = buchberger_weyl(&rees, &lifted, &rees_order(m)?)?;
    let symbols = gb.elements.iter().map(|g| symbol_module(g, &row, &m.shifts.n)).collect();
    Ok((symbols, vec![StageStats::new("v-adapted", vstats), StageStats::new("f-adapted", gb.stats)]))
}

/// The bigraded presentation of `gr^F(R_V(M))` with the x-block
/// specialized generically.
pub fn rees_presentation(m: &BifilteredPresentation, seed: u64) -> Result<GradedPresentation> {
    let (symbols, stats) = rees_symbols(m)?;
    let grading = builtin_bigrading(Flavor::GrFOfRees, m.ring.n, m.ring.p);
    let params: Vec<usize> = (0..m.ring.n).collect();
    specialize_generic(symbols, &rees_order(m)?, m.rank(), &grading, m.shifts.bidegrees(), &params, seed, stats)
}

pub fn k_fv(m: &BifilteredPresentation, seed: u64) -> Result<KPolynomial> {
    Ok(rees_presentation(m, seed)?.k_polynomial())
}

pub fn codim_grf_rv(m: &BifilteredPresentation, seed: u64) -> Result<usize> {
    Ok(rees_presentation(m, seed)?.codim())
}

#[derive(Debug, Clone, Serialize)]
pub struct MultidegreeReport {
    pub k_polynomial: KPolynomial,
    pub codim: usize,
    pub codim_bigr: Option<usize>,
    pub multidegree: Multidegree,
    /// Set when `bigr` has larger codimension, which forces the
    /// multidegree to vanish.
    pub vanishes_by_codim: bool,
    pub nice: bool,
    pub seed: u64,
    pub point: Vec<String>,
    pub stats: Vec<StageStats>,
}

fn report(m: &BifilteredPresentation, seed: u64, with_bigr: bool) -> Result<MultidegreeReport> {
    let (symbols, stats) = rees_symbols(m)?;
    let nice = nice::theta_saturated(&symbols, m.ring.nvars() + 1)?;
    let grading = builtin_bigrading(Flavor::GrFOfRees, m.ring.n, m.ring.p);
    let params: Vec<usize> = (0..m.ring.n).collect();
    let g = specialize_generic(symbols, &rees_order(m)?, m.rank(), &grading, m.shifts.bidegrees(), &params, seed, stats)?;
    let k = g.k_polynomial();
    let codim = g.codim();
    let codim_bigr = if with_bigr && nice { Some(bigr_presentation(m, seed)?.codim()) } else { None };
    Ok(MultidegreeReport {
        multidegree: expand_and_extract(&k, codim),
        k_polynomial: k,
        codim,
        vanishes_by_codim: codim_bigr.is_some_and(|d| codim < d),
        codim_bigr,
        nice,
        seed,
        point: g.point.iter().map(Rational::to_string).collect(),
        stats: g.stats,
    })
}

/// `C_{F,V}(M)` with its K-polynomial, codimension and niceness.
pub fn multidegree_fv(m: &BifilteredPresentation, seed: u64) -> Result<MultidegreeReport> {
    report(m, seed, false)
}

/// As [`multidegree_fv`], also computing `bigr(M)` when the bifiltration
/// is nice.
pub fn multidegree_fv_with_bigr(m: &BifilteredPresentation, seed: u64) -> Result<MultidegreeReport> {
    report(m, seed, true)
}

/// Presentation of `gr^F(M)` in `k[ξ]` with every position variable
/// specialized generically; one grading variable.
pub fn f_presentation(m: &BifilteredPresentation, seed: u64) -> Result<GradedPresentation> {
    let ring = &m.ring;
    let nv = ring.nvars();
    let gens: Vec<ModuleElement<Rational>> = m.generators.iter().filter(|g| !g.is_zero()).cloned().collect();
    let row = ring.f_row();
    let ord = f_adapted_order(nv, &row, &m.shifts.n)?;
    let (symbols, stats) = if gens.is_empty() {
        (Vec::new(), Vec::new())
    } else {
        let gb = buchberger_weyl(ring, &gens, &ord)?;
        let symbols = gb.elements.iter().map(|g| symbol_module(g, &row, &m.shifts.n)).collect();
        (symbols, vec![StageStats::new("f-adapted", gb.stats)])
    };
    let grading = Multigrading::new(row.iter().map(|&w| vec![w]).collect(), 1)?;
    let params: Vec<usize> = (0..ring.npos()).collect();
    let shifts = m.shifts.n.iter().map(|&s| vec![s]).collect();
    specialize_generic(symbols, &ord, m.rank(), &grading, shifts, &params, seed, stats)
}

pub fn k_f(m: &BifilteredPresentation, seed: u64) -> Result<KPolynomial> {
    Ok(f_presentation(m, seed)?.k_polynomial())
}

/// `C_F(M) = m·T^d`.
pub fn multidegree_f(m: &BifilteredPresentation, seed: u64) -> Result<Multidegree> {
    let g = f_presentation(m, seed)?;
    Ok(expand_and_extract(&g.k_polynomial(), g.codim()))
}

/// Generic rank, from a holonomic `C_F(M) = m·T^n`.
pub fn generic_rank(m: &BifilteredPresentation, seed: u64) -> Result<u64> {
    let g = f_presentation(m, seed)?;
    let d = g.codim();
    let expected = m.ring.npos();
    if d != expected {
        return Err(Error::NotHolonomic { dim: expected - d.min(expected), expected: 0 });
    }
    let md = expand_and_extract(&g.k_polynomial(), d);
    let c = md.form.coeff(&[d as i64]);
    u64::try_from(c).map_err(|_| Error::Degenerate("rank does not fit in 64 bits".into()))
}

/// Presentation of `bigr(M) = gr^F(gr^V(M))` in `k[x, t, ξx, ξt]`.
pub fn bigr_presentation(m: &BifilteredPresentation, seed: u64) -> Result<GradedPresentation> {
    if !is_nicely_bifiltered(m)? {
        return Err(Error::NotNice);
    }
    let ring = &m.ring;
    let nv = ring.nvars();
    let gens: Vec<ModuleElement<Rational>> = m.generators.iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut stats = Vec::new();
    let frow = ring.f_row();
    let ord = f_adapted_order(nv, &frow, &m.shifts.n)?;
    let symbols = if gens.is_empty() {
        Vec::new()
    } else {
        let vrow = ring.v_row();
        let (vbasis, vstats) = lazard_basis(&ring.algebra(), &gens, &vec![1; nv], &vrow, &m.shifts.m)?;
        stats.push(StageStats::new("v-adapted", vstats));
        let initial: Vec<ModuleElement<Rational>> = vbasis.iter().map(|g| symbol_module(g, &vrow, &m.shifts.m)).collect();
        let gb = buchberger_weyl(ring, &initial, &ord)?;
        stats.push(StageStats::new("f-adapted", gb.stats.clone()));
        gb.elements.iter().map(|g| symbol_module(g, &frow, &m.shifts.n)).collect()
    };
    let full = builtin_bigrading(Flavor::GrFOfRees, ring.n, ring.p);
    let grading = Multigrading::new(full.degrees()[..nv].to_vec(), 2)?;
    let params: Vec<usize> = (0..ring.n).collect();
    specialize_generic(symbols, &ord, m.rank(), &grading, m.shifts.bidegrees(), &params, seed, stats)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize, p: usize, ops: &[&str]) -> BifilteredPresentation {
        let r = WeylRing::plain(n, p);
        BifilteredPresentation::cyclic(r.clone(), ops.iter().map(|s| r.parse(s).unwrap().into_poly()).collect()).unwrap()
    }

    #[test]
    fn dt_module() {
        let m = cyclic(0, 1, &["dt1"]);
        assert_eq!(k_fv(&m, 1).unwrap(), KPolynomial::from_ints(2, &[(&[0, 0], 1), (&[1, 1], -1)]));
        assert_eq!(codim_grf_rv(&m, 1).unwrap(), 1);
        let r = multidegree_fv(&m, 1).unwrap();
        assert_eq!(r.multidegree.to_string(), "T1 + T2");
        assert!(r.nice);
    }

    #[test]
    fn free_and_zero() {
        let m = BifilteredPresentation::new(WeylRing::plain(0, 1), vec![], ShiftPair::zero(1)).unwrap();
        assert_eq!(k_fv(&m, 1).unwrap(), KPolynomial::one(2));
        let z = cyclic(0, 1, &["1"]);
        let r = multidegree_fv(&z, 1).unwrap();
        assert_eq!(r.codim, 3);
        assert!(r.multidegree.is_zero());
    }

    #[test]
    fn f_multidegrees() {
        let m = cyclic(1, 0, &["dx1"]);
        assert_eq!(multidegree_f(&m, 3).unwrap().to_string(), "T");
        assert_eq!(generic_rank(&m, 3).unwrap(), 1);
        let free = BifilteredPresentation::new(WeylRing::plain(1, 0), vec![], ShiftPair::zero(1)).unwrap();
        assert_eq!(multidegree_f(&free, 3).unwrap().to_string(), "1");
        assert!(matches!(generic_rank(&free, 3), Err(Error::NotHolonomic { .. })));
    }

    #[test]
    fn x_block_is_specialized() {
        // D/D(x∂x − 1) with x in the x-block: gr^F R_V is k[x, ξ, θ]/⟨xξ⟩
        let m = cyclic(1, 0, &["x1*dx1 - 1"]);
        let g = rees_presentation(&m, 5).unwrap();
        assert_eq!(g.point.len(), 1);
        assert_eq!(g.k_polynomial(), KPolynomial::from_ints(2, &[(&[0, 0], 1), (&[1, 0], -1)]));
    }

    #[test]
    fn text_round_trip() {
        let src = "ring 1 1\nrank 2\nfshift 0 1\nvshift 0 -1\ngen dt1 | x1*dx1\ngen t1 | 0\n";
        let m = BifilteredPresentation::parse(src).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(BifilteredPresentation::parse(&m.to_text()).unwrap(), m);
        let bad = BifilteredPresentation::parse("ring 0 1\ngen dt1 @@");
        assert!(matches!(bad, Err(Error::Syntax { line: 2, col: 9, .. })), "{bad:?}");
    }

    #[test]
    fn resolution_route_agrees() {
        let m = cyclic(0, 2, &["dt1*dt2", "t1*dt1 + t2*dt2 - 3"]);
        let g = rees_presentation(&m, 1).unwrap();
        assert_eq!(g.k_by_resolution().unwrap(), g.k_polynomial());
    }
}
