//! A-hypergeometric systems `M_A(β) = D/H_A(β)`: toric ideals, the
//! homogeneity, pointedness and Cohen–Macaulay checks, normalized volume,
//! and the bifiltered presentation with every variable in the t-block.

mod volume;

pub use volume::{normalized_volume, triangulate};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::bifiltered::{multidegree_fv, BifilteredPresentation, MultidegreeReport};
use crate::coeff::{Field, Rational};
use crate::grading::Multigrading;
use crate::groebner::{buchberger, free_resolution, minimize_resolution, saturate};
use crate::kpoly::{expand_and_extract, k_monomial, KPolynomial, Multidegree};
use crate::linalg::{denominator_lcm, feasible_point, in_row_span, integer_kernel, rank, smith_invariants, to_rational};
use crate::poly::{exp_degree, zero_exp, Exp, ModuleElement, MonomialOrder, Polynomial};
use crate::rng::stage_rng;
use crate::weyl::WeylRing;
use crate::{parallel, Error, Result};

/// Height bound for generic parameter draws.
const HEIGHT: i64 = 1_000_000;
const MAX_REDRAWS: usize = 8;

/// `β`, either explicit or to be drawn at random.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Beta {
    Values(Vec<Rational>),
    #[serde(with = "generic_word")]
    Generic,
}

mod generic_word {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str("generic")
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<(), D::Error> {
        let w = String::deserialize(d)?;
        if w == "generic" {
            Ok(())
        } else {
            Err(D::Error::custom(format!("expected \"generic\" or a list, found {w:?}")))
        }
    }
}

/// Matrix input `{"A": [[…]], "beta": ["1", "2"] | "generic"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GkzSystem {
    #[serde(rename = "A")]
    pub a: Vec<Vec<i64>>,
    #[serde(default = "generic")]
    pub beta: Beta,
}

fn generic() -> Beta {
    Beta::Generic
}

impl GkzSystem {
    pub fn new(a: Vec<Vec<i64>>, beta: Beta) -> Result<Self> {
        let (d, _) = check_matrix(&a)?;
        if let Beta::Values(b) = &beta {
            if b.len() != d {
                return Err(Error::BadMatrix(format!("β has {} entries for {d} rows", b.len())));
            }
        }
        Ok(GkzSystem { a, beta })
    }

    pub fn d(&self) -> usize {
        self.a.len()
    }

    pub fn n(&self) -> usize {
        self.a[0].len()
    }
}

/// Shape `(d, n)` of a full-rank integer matrix whose columns span `Z^d`.
pub fn check_matrix(a: &[Vec<i64>]) -> Result<(usize, usize)> {
    let d = a.len();
    let n = a.first().map_or(0, |r| r.len());
    if d == 0 || n == 0 || a.iter().any(|r| r.len() != n) {
        return Err(Error::BadMatrix("expected a nonempty rectangular matrix".into()));
    }
    if rank(&to_rational(a)) != d {
        return Err(Error::BadMatrix("rows are linearly dependent".into()));
    }
    let inv = smith_invariants(a);
    if inv.len() != d || inv.iter().any(|x| !x.is_one()) {
        return Err(Error::BadMatrix("columns do not generate Z^d".into()));
    }
    Ok((d, n))
}

fn binomial_of(u: &[BigInt]) -> Result<Polynomial<Rational>> {
    let n = u.len();
    let to_exp = |pos: bool| -> Result<Exp> {
        u.iter()
            .map(|x| {
                let v = if pos == x.is_positive() { x.abs() } else { BigInt::zero() };
                v.to_u32().ok_or_else(|| Error::BadMatrix("kernel entry too large".into()))
            })
            .collect()
    };
    let mut p = Polynomial::zero(n);
    p.add_term(to_exp(true)?, <Rational as Field>::one());
    p.add_term(to_exp(false)?, <Rational as Field>::one().neg());
    Ok(p)
}

/// Reduced degrevlex Gröbner basis of `I_A ⊂ k[∂₁, …, ∂ₙ]`: lattice
/// basis binomials saturated by `∂₁⋯∂ₙ`.
pub fn toric_ideal(a: &[Vec<i64>]) -> Result<Vec<Polynomial<Rational>>> {
    let (_, n) = check_matrix(a)?;
    let kernel = integer_kernel(a);
    if kernel.is_empty() {
        return Ok(Vec::new());
    }
    let gens: Vec<ModuleElement<Rational>> = kernel.iter().map(|u| binomial_of(u).map(ModuleElement::from_poly)).collect::<Result<_>>()?;
    let prod = Polynomial::monomial(n, (0..n).map(|_| 1).collect(), <Rational as Field>::one());
    let gb = saturate(&gens, &prod)?;
    Ok(gb.elements.into_iter().map(|e| e.comp(0).clone()).collect())
}

/// Generators of `H_A(β)` in `D` with every variable in the t-block:
/// `I_A` in the derivations and the Euler operators `Σ aᵢⱼ tⱼ∂ⱼ − βᵢ`.
pub fn hypergeometric_ideal(a: &[Vec<i64>], beta: &[Rational]) -> Result<(WeylRing, Vec<Polynomial<Rational>>)> {
    let (d, n) = check_matrix(a)?;
    if beta.len() != d {
        return Err(Error::BadMatrix(format!("β has {} entries for {d} rows", beta.len())));
    }
    let ring = WeylRing::plain(0, n);
    let nv = ring.nvars();
    let map: Vec<usize> = (0..n).map(|j| ring.dt(j)).collect();
    let mut ops: Vec<Polynomial<Rational>> = toric_ideal(a)?.iter().map(|p| p.remap(nv, &map)).collect();
    for (row, b) in a.iter().zip(beta) {
        let mut e = Polynomial::zero(nv);
        for (j, &c) in row.iter().enumerate() {
            if c != 0 {
                let mut x = zero_exp(nv);
                x[ring.t(j)] = 1;
                x[ring.dt(j)] = 1;
                e.add_term(x, Rational::from_integer(c));
            }
        }
        e.add_term(zero_exp(nv), b.neg());
        ops.push(e);
    }
    Ok((ring, ops))
}

/// `M_A(β)` with zero shifts.
pub fn build_presentation(a: &[Vec<i64>], beta: &[Rational]) -> Result<BifilteredPresentation> {
    let (ring, ops) = hypergeometric_ideal(a, beta)?;
    BifilteredPresentation::cyclic(ring, ops)
}

/// Whether `(1, …, 1)` lies in the rational row span.
pub fn is_homogeneous(a: &[Vec<i64>]) -> bool {
    let n = a.first().map_or(0, |r| r.len());
    in_row_span(&to_rational(a), &vec![<Rational as Field>::one(); n])
}

/// A positive integer vector in the row span, when one exists.
pub fn is_pointed(a: &[Vec<i64>]) -> (bool, Option<Vec<i64>>) {
    let d = a.len();
    let n = a.first().map_or(0, |r| r.len());
    let at: Vec<Vec<Rational>> = (0..n).map(|j| (0..d).map(|i| Rational::from_integer(a[i][j])).collect()).collect();
    let Some(y) = feasible_point(&at, &vec![<Rational as Field>::one(); n]) else { return (false, None) };
    let w: Vec<Rational> = at.iter().map(|row| row.iter().zip(&y).fold(<Rational as Field>::zero(), |s, (x, c)| s.add(&x.mul(c)))).collect();
    let l = Rational::from_bigint(denominator_lcm(&w));
    let scaled: Option<Vec<i64>> = w.iter().map(|x| x.mul(&l).to_i64()).collect();
    match scaled {
        Some(v) => (true, Some(v)),
        None => (true, None),
    }
}

/// `H(I_A) ⊂ k[∂, h]`: the degrevlex basis homogenized by total degree,
/// with `h` last.
pub fn homogenized_toric(a: &[Vec<i64>]) -> Result<Vec<Polynomial<Rational>>> {
    let n = a.first().map_or(0, |r| r.len());
    let gens = toric_ideal(a)?;
    Ok(gens
        .iter()
        .map(|p| {
            let top = p.terms().map(|(e, _)| exp_degree(e)).max().unwrap_or(0);
            Polynomial::from_terms(
                n + 1,
                p.terms().map(|(e, c)| {
                    let mut f: Exp = e.clone();
                    f.push(top - exp_degree(e));
                    (f, c.clone())
                }),
            )
        })
        .collect())
}

/// K-polynomial of `k[∂, h]/H(I_A)` in the standard grading.
pub fn homogenized_k(a: &[Vec<i64>]) -> Result<KPolynomial> {
    let n = a.first().map_or(0, |r| r.len());
    let gens: Vec<ModuleElement<Rational>> = homogenized_toric(a)?.into_iter().map(ModuleElement::from_poly).collect();
    let g = Multigrading::standard(n + 1);
    if gens.is_empty() {
        return Ok(KPolynomial::one(1));
    }
    let gb = buchberger(&gens, &MonomialOrder::degrevlex(n + 1))?;
    Ok(k_monomial(&gb.initial_module(), 1, &g, &[]))
}

/// The volume read as the degree of `k[∂, h]/H(I_A)`.
pub fn volume_by_degree(a: &[Vec<i64>]) -> Result<u64> {
    let (d, n) = check_matrix(a)?;
    let k = homogenized_k(a)?;
    let md = expand_and_extract(&k, n - d);
    md.form.coeff(&[(n - d) as i64]).to_u64().filter(|&v| v > 0).ok_or_else(|| Error::Degenerate("degree is not positive".into()))
}

pub fn volume(a: &[Vec<i64>]) -> Result<u64> {
    check_matrix(a)?;
    normalized_volume(a)
}

/// Whether `k[∂, h]/H(I_A)` is Cohen–Macaulay: its minimal resolution has
/// length `n − d`.
pub fn cohen_macaulay(a: &[Vec<i64>]) -> Result<bool> {
    let (d, n) = check_matrix(a)?;
    let gens: Vec<ModuleElement<Rational>> = homogenized_toric(a)?.into_iter().map(ModuleElement::from_poly).collect();
    if gens.is_empty() {
        return Ok(n == d);
    }
    let g = Multigrading::standard(n + 1);
    let r = free_resolution(&gens, 1, vec![vec![0]], &g, n + 2)?;
    let min = minimize_resolution(&r)?;
    Ok(min.length() == n - d)
}

/// `vol · Σ_{j=d}^{n} C(n−d, j−d) T₁^j T₂^{n−j}`.
pub fn closed_form(vol: u64, d: usize, n: usize) -> Multidegree {
    let mut k = KPolynomial::zero(2);
    let mut c = BigInt::one();
    for j in d..=n {
        let i = j - d;
        if i > 0 {
            c = c * BigInt::from(n - d - i + 1) / BigInt::from(i);
        }
        k.add_term(vec![j as i64, (n - j) as i64], &c * BigInt::from(vol));
    }
    Multidegree { degree: n, form: k }
}

pub fn closed_form_multidegree(a: &[Vec<i64>]) -> Result<Multidegree> {
    let (d, n) = check_matrix(a)?;
    Ok(closed_form(volume(a)?, d, n))
}

/// A rational with numerator in `[−10⁶, 10⁶]` and denominator in
/// `[1, 10⁶]`.
pub fn draw_rational(rng: &mut impl Rng) -> Rational {
    let num = rng.gen_range(-HEIGHT..=HEIGHT);
    let den = rng.gen_range(1..=HEIGHT);
    Rational::new(num, den)
}

pub fn draw_beta(d: usize, seed: u64) -> Vec<Rational> {
    let mut rng = crate::rng::rng_from(seed);
    (0..d).map(|_| draw_rational(&mut rng)).collect()
}

/// Everything known about `M_A(β)`.
#[derive(Debug, Clone, Serialize)]
pub struct HypergeometricReport {
    #[serde(rename = "A")]
    pub a: Vec<Vec<i64>>,
    pub beta: Vec<Rational>,
    pub generic: bool,
    /// Seeds of the β draws that were compared.
    pub beta_seeds: Vec<u64>,
    pub homogeneous: bool,
    pub pointed: bool,
    pub pointed_witness: Option<Vec<i64>>,
    pub cohen_macaulay: bool,
    pub volume: u64,
    pub volume_by_degree: u64,
    pub closed_form: Multidegree,
    pub formula_match: bool,
    #[serde(flatten)]
    pub multidegree: MultidegreeReport,
}

/// Multidegree at a fixed β.
pub fn multidegree_at(a: &[Vec<i64>], beta: &[Rational], seed: u64) -> Result<MultidegreeReport> {
    multidegree_fv(&build_presentation(a, beta)?, seed)
}

/// Draw β twice from independent seeds until both draws give the same
/// multidegree.
pub fn generic_multidegree(a: &[Vec<i64>], seed: u64) -> Result<(Vec<Rational>, Vec<u64>, MultidegreeReport)> {
    let (d, _) = check_matrix(a)?;
    let mut rng = stage_rng(seed, "beta");
    for _ in 0..MAX_REDRAWS {
        let seeds: Vec<u64> = vec![rng.gen(), rng.gen()];
        let runs = parallel::map(&seeds, |&s| {
            let beta = draw_beta(d, s);
            multidegree_at(a, &beta, seed).map(|r| (beta, r))
        });
        let mut runs = runs.into_iter().collect::<Result<Vec<_>>>()?;
        if runs[0].1.multidegree == runs[1].1.multidegree {
            let (beta, r) = runs.swap_remove(0);
            return Ok((beta, seeds, r));
        }
    }
    Err(Error::Degenerate("generic draws of β kept disagreeing".into()))
}

pub fn analyze(a: &[Vec<i64>], beta: &Beta, seed: u64) -> Result<HypergeometricReport> {
    let (d, n) = check_matrix(a)?;
    let (pointed, pointed_witness) = is_pointed(a);
    let vol = volume(a)?;
    let (beta, beta_seeds, md) = match beta {
        Beta::Values(b) => (b.clone(), Vec::new(), multidegree_at(a, b, seed)?),
        Beta::Generic => generic_multidegree(a, seed)?,
    };
    let closed = closed_form(vol, d, n);
    Ok(HypergeometricReport {
        a: a.to_vec(),
        generic: matches!(beta_seeds.len(), 2),
        beta,
        beta_seeds,
        homogeneous: is_homogeneous(a),
        pointed,
        pointed_witness,
        cohen_macaulay: cohen_macaulay(a)?,
        volume: vol,
        volume_by_degree: volume_by_degree(a)?,
        formula_match: closed == md.multidegree,
        closed_form: closed,
        multidegree: md,
    })
}

/// One row of a β scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanEntry {
    pub beta: Vec<Rational>,
    pub multidegree: String,
    pub nice: bool,
}

fn scan_one(a: &[Vec<i64>], beta: &[Rational], seed: u64) -> Result<ScanEntry> {
    let r = multidegree_at(a, beta, seed)?;
    Ok(ScanEntry { beta: beta.to_vec(), multidegree: r.multidegree.to_string(), nice: r.nice })
}

/// Multidegrees for many β, fanned out over the thread pool.
pub fn scan_beta(a: &[Vec<i64>], betas: &[Vec<Rational>], seed: u64) -> Result<Vec<ScanEntry>> {
    parallel::map(betas, |b| scan_one(a, b, seed)).into_iter().collect()
}

pub fn scan_beta_sequential(a: &[Vec<i64>], betas: &[Vec<Rational>], seed: u64) -> Result<Vec<ScanEntry>> {
    parallel::map_sequential(betas, |b| scan_one(a, b, seed)).into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_integer(x)).collect()
    }

    #[test]
    fn toric_generators() {
        let g = toric_ideal(&[vec![1, 1, 1], vec![0, 1, 2]]).unwrap();
        assert_eq!(g.len(), 1);
        let names: Vec<String> = ["d1", "d2", "d3"].iter().map(|s| s.to_string()).collect();
        let s = crate::poly::text::format_polynomial(&g[0], &names);
        assert!(s == "-d2^2 + d1*d3" || s == "d2^2 - d1*d3", "{s}");
        assert_eq!(toric_ideal(&[vec![1, 1, 1, 1], vec![0, 1, 2, 3]]).unwrap().len(), 3);
        let five = toric_ideal(&[vec![0, 1, 3], vec![4, 3, 2]]).unwrap();
        assert_eq!(five.len(), 1);
        assert_eq!(five[0].total_degree(), Some(12));
        assert!(toric_ideal(&[vec![1]]).unwrap().is_empty());
        assert!(matches!(check_matrix(&[vec![2, 4]]), Err(Error::BadMatrix(_))));
    }

    #[test]
    fn euler_operators() {
        let (ring, ops) = hypergeometric_ideal(&[vec![1]], &ints(&[0])).unwrap();
        assert_eq!(ops.len(), 1);
        assert_eq!(ring.format(&ops[0]), "t1*dt1");
        let (ring, ops) = hypergeometric_ideal(&[vec![1, 1, 1], vec![0, 1, 2]], &ints(&[0, 0])).unwrap();
        assert_eq!(ops.len(), 3);
        assert_eq!(ring.format(&ops[2]), "t2*dt2 + 2*t3*dt3");
    }

    #[test]
    fn checks() {
        assert!(is_homogeneous(&[vec![1, 1, 1], vec![0, 1, 2]]));
        assert!(!is_homogeneous(&[vec![0, 1, 3], vec![4, 3, 2]]));
        let (p, w) = is_pointed(&[vec![-2, -1, 0, 1], vec![1, 1, 2, 2]]);
        assert!(p);
        assert!(w.unwrap().iter().all(|&x| x > 0));
        assert!(!is_pointed(&[vec![1, -1]]).0);
    }

    #[test]
    fn closed_forms() {
        assert_eq!(closed_form(2, 2, 3).to_string(), "2*T1^3 + 2*T1^2*T2");
        assert_eq!(closed_form(3, 2, 4).to_string(), "3*T1^4 + 6*T1^3*T2 + 3*T1^2*T2^2");
    }

    #[test]
    fn beta_json() {
        let s: GkzSystem = serde_json::from_str(r#"{"A": [[1, 1]], "beta": ["1/2"]}"#).unwrap();
        assert_eq!(s.beta, Beta::Values(vec![Rational::new(1, 2)]));
        let g: GkzSystem = serde_json::from_str(r#"{"A": [[1, 1]], "beta": "generic"}"#).unwrap();
        assert_eq!(g.beta, Beta::Generic);
        assert!(serde_json::from_str::<GkzSystem>(r#"{"A": [[1]], "beta": "often"}"#).is_err());
    }

    #[test]
    fn trivial_matrix() {
        let r = analyze(&[vec![1]], &Beta::Values(ints(&[3])), 0).unwrap();
        assert_eq!(r.volume, 1);
        assert_eq!(r.multidegree.multidegree.to_string(), "T1");
        assert!(r.formula_match);
    }
}
