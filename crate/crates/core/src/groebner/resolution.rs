use super::engine::{self, Sparse};
use super::syzygy::schreyer;
use super::{from_sparse, to_sparse, Algebra};
use crate::coeff::Field;
use crate::grading::{is_multihomogeneous, Multigrading};
use crate::poly::{ModuleElement, MonomialOrder, Polynomial};
use crate::{Error, Result};

/// `0 ← F₀ ← F₁ ← … ← F_ℓ` resolving `F₀/N`. `maps[i]` lists the images
/// of the basis of `F_{i+1}` in `F_i`; `shifts[i][j]` is the degree of the
/// `j`-th basis element of `F_i`.
#[derive(Debug, Clone)]
pub struct GradedFreeResolution<K: Field> {
    pub grading: Multigrading,
    pub shifts: Vec<Vec<Vec<i64>>>,
    pub maps: Vec<Vec<ModuleElement<K>>>,
    nvars: usize,
}

impl<K: Field> GradedFreeResolution<K> {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Index of the last nonzero free module.
    pub fn length(&self) -> usize {
        self.shifts.iter().rposition(|s| !s.is_empty()).unwrap_or(0)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.shifts.iter().map(Vec::len).collect()
    }

    /// Whether consecutive maps compose to zero.
    pub fn is_complex(&self) -> bool {
        for i in 1..self.maps.len() {
            for col in &self.maps[i] {
                let img = compose(&self.maps[i - 1], col, self.nvars, self.shifts[i - 1].len());
                if !img.is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Image of `col` (an element of `F_i`) under the map whose columns are
/// `prev`.
fn compose<K: Field>(prev: &[ModuleElement<K>], col: &ModuleElement<K>, nvars: usize, rank: usize) -> ModuleElement<K> {
    let mut acc = ModuleElement::zero(nvars, rank);
    for (k, c) in col.comps().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = prev[k].scale_poly(c).expect("same ring");
        acc = acc.add(&term).expect("same module");
    }
    acc
}

/// Graded free resolution of `S^rank/⟨gens⟩` via iterated Schreyer
/// syzygies. Stops after `max_length` steps, and never runs past
/// `nvars + 1`.
pub fn free_resolution<K: Field>(
    gens: &[ModuleElement<K>],
    rank: usize,
    shifts0: Vec<Vec<i64>>,
    grading: &Multigrading,
    max_length: usize,
) -> Result<GradedFreeResolution<K>> {
    let nvars = grading.nvars();
    if shifts0.len() != rank {
        return Err(Error::Invalid(format!("{} shifts for a module of rank {rank}", shifts0.len())));
    }
    for (index, g) in gens.iter().enumerate() {
        if g.nvars() != nvars || g.rank() != rank {
            return Err(Error::RingMismatch(format!("generator {index} lives in a different free module")));
        }
        if !is_multihomogeneous(&g.to_terms(), grading, &shifts0).homogeneous {
            return Err(Error::NotHomogeneous { index });
        }
    }
    let cap = max_length.min(nvars + 1);
    let ord = MonomialOrder::degrevlex(nvars);
    let alg = Algebra::commutative(nvars);
    let sparse: Vec<Sparse<K>> = gens.iter().map(|g| to_sparse(g, &ord)).collect();
    let (mut basis, _) = engine::groebner(&alg, &ord, sparse);
    let mut ord = ord;
    let mut shifts = vec![shifts0];
    let mut maps = Vec::new();
    let mut prev_rank = rank;
    while !basis.is_empty() && maps.len() < cap {
        let prev = shifts.last().expect("nonempty");
        let level: Vec<Vec<i64>> = basis.iter().map(|b| grading.shifted_degree(&b[0].exp, b[0].comp, prev)).collect();
        maps.push(basis.iter().map(|b| from_sparse(b, nvars, prev_rank)).collect());
        prev_rank = basis.len();
        shifts.push(level);
        let syz = schreyer(&ord, &basis);
        basis = syz.elements;
        ord = syz.order;
    }
    Ok(GradedFreeResolution { grading: grading.clone(), shifts, maps, nvars })
}

type Matrix<K> = Vec<Vec<Polynomial<K>>>;

fn to_matrix<K: Field>(cols: &[ModuleElement<K>], rows: usize, nvars: usize) -> Matrix<K> {
    (0..rows).map(|r| cols.iter().map(|c| if r < c.rank() { c.comp(r).clone() } else { Polynomial::zero(nvars) }).collect()).collect()
}

fn from_matrix<K: Field>(m: &Matrix<K>, ncols: usize, nvars: usize) -> Vec<ModuleElement<K>> {
    (0..ncols)
        .map(|c| {
            if m.is_empty() {
                ModuleElement::zero(nvars, 0)
            } else {
                ModuleElement::new(m.iter().map(|row| row[c].clone()).collect()).expect("rows share a ring")
            }
        })
        .collect()
}

fn unit<K: Field>(p: &Polynomial<K>) -> Option<K> {
    if p.len() == 1 {
        let (e, c) = p.terms().next().expect("one term");
        if e.iter().all(|&x| x == 0) {
            return Some(c.clone());
        }
    }
    None
}

/// Remove every constant entry by splitting off trivial summands `S → S`.
pub fn minimize_resolution<K: Field>(r: &GradedFreeResolution<K>) -> Result<GradedFreeResolution<K>> {
    if !r.grading.is_positive() {
        return Err(Error::NonPositiveGrading);
    }
    let nvars = r.nvars;
    let mut shifts = r.shifts.clone();
    let mut mats: Vec<Matrix<K>> = r.maps.iter().enumerate().map(|(i, cols)| to_matrix(cols, shifts[i].len(), nvars)).collect();
    loop {
        let mut hit = None;
        'search: for (i, m) in mats.iter().enumerate() {
            for (a, row) in m.iter().enumerate() {
                for (b, e) in row.iter().enumerate() {
                    if let Some(u) = unit(e) {
                        hit = Some((i, a, b, u));
                        break 'search;
                    }
                }
            }
        }
        let Some((i, a, b, u)) = hit else { break };
        let inv = u.inv()?;
        let m = &mats[i];
        let col_b: Vec<Polynomial<K>> = m.iter().map(|row| row[b].clone()).collect();
        let row_a: Vec<Polynomial<K>> = m[a].clone();
        let mut next: Matrix<K> = Vec::with_capacity(m.len() - 1);
        for (r_idx, row) in m.iter().enumerate() {
            if r_idx == a {
                continue;
            }
            let mut new_row = Vec::with_capacity(row.len() - 1);
            for (c_idx, e) in row.iter().enumerate() {
                if c_idx == b {
                    continue;
                }
                let corr = col_b[r_idx].mul(&row_a[c_idx])?.scale(&inv);
                new_row.push(e.sub(&corr)?);
            }
            next.push(new_row);
        }
        mats[i] = next;
        if i > 0 {
            for row in mats[i - 1].iter_mut() {
                row.remove(a);
            }
        }
        if i + 1 < mats.len() {
            mats[i + 1].remove(b);
        }
        shifts[i].remove(a);
        shifts[i + 1].remove(b);
    }
    let maps = mats.iter().enumerate().map(|(i, m)| from_matrix(m, shifts[i + 1].len(), nvars)).collect::<Vec<_>>();
    let mut out = GradedFreeResolution { grading: r.grading.clone(), shifts, maps, nvars };
    // trailing zero modules carry no information
    while out.shifts.len() > 1 && out.shifts.last().is_some_and(|s| s.is_empty()) {
        out.shifts.pop();
        out.maps.pop();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Rational;

    fn el(comps: Vec<Polynomial<Rational>>) -> ModuleElement<Rational> {
        ModuleElement::new(comps).unwrap()
    }

    #[test]
    fn koszul_two() {
        let g = Multigrading::standard(2);
        let gens: [ModuleElement<Rational>; 2] = [ModuleElement::from_poly(Polynomial::var(2, 0)), ModuleElement::from_poly(Polynomial::var(2, 1))];
        let r = free_resolution(&gens, 1, vec![vec![0]], &g, 10).unwrap();
        assert_eq!(r.shifts, vec![vec![vec![0]], vec![vec![1], vec![1]], vec![vec![2]]]);
        assert!(r.is_complex());
        let m = minimize_resolution(&r).unwrap();
        assert_eq!(m.shifts, r.shifts);
    }

    #[test]
    fn hypersurface() {
        let g = Multigrading::standard(3);
        let f = Polynomial::<Rational>::from_int_terms(3, &[(&[1, 0, 1], 1), (&[0, 2, 0], -1)]);
        let r = free_resolution(&[ModuleElement::from_poly(f)], 1, vec![vec![0]], &g, 10).unwrap();
        assert_eq!(r.shifts, vec![vec![vec![0]], vec![vec![2]]]);
        assert_eq!(r.length(), 1);
    }

    #[test]
    fn free_module() {
        let g = Multigrading::standard(2);
        let r = free_resolution::<Rational>(&[], 2, vec![vec![0], vec![3]], &g, 10).unwrap();
        assert_eq!(r.length(), 0);
        assert!(r.maps.is_empty());
    }

    #[test]
    fn trivial_summand_removed() {
        let g = Multigrading::standard(1);
        let x = Polynomial::<Rational>::var(1, 0);
        let gens = [el(vec![x, Polynomial::zero(1)]), el(vec![Polynomial::zero(1), Polynomial::one(1)])];
        let r = free_resolution(&gens, 2, vec![vec![0], vec![0]], &g, 10).unwrap();
        assert_eq!(r.ranks(), vec![2, 2]);
        let m = minimize_resolution(&r).unwrap();
        assert_eq!(m.shifts, vec![vec![vec![0]], vec![vec![1]]]);
    }

    #[test]
    fn inhomogeneous_rejected() {
        let g = Multigrading::standard(1);
        let f = Polynomial::<Rational>::from_int_terms(1, &[(&[2], 1), (&[1], 1)]);
        let err = free_resolution(&[ModuleElement::from_poly(Polynomial::var(1, 0)), ModuleElement::from_poly(f)], 1, vec![vec![0]], &g, 5);
        assert_eq!(err.unwrap_err(), Error::NotHomogeneous { index: 1 });
    }

    #[test]
    fn nonpositive_rejected() {
        let g = Multigrading::new(vec![vec![1], vec![-1]], 1).unwrap();
        let r = free_resolution::<Rational>(&[], 1, vec![vec![0]], &g, 5).unwrap();
        assert_eq!(minimize_resolution(&r).unwrap_err(), Error::NonPositiveGrading);
    }
}
