use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use super::KPolynomial;
use crate::grading::Multigrading;
use crate::poly::{divides, Exp};

fn minimal(mut gens: Vec<Exp>) -> Vec<Exp> {
    gens.sort();
    gens.dedup();
    let mut keep = Vec::with_capacity(gens.len());
    for (i, g) in gens.iter().enumerate() {
        if !gens.iter().enumerate().any(|(j, h)| j != i && divides(h, g) && h != g) {
            keep.push(g.clone());
        }
    }
    keep
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

struct Recursion<'a> {
    grading: &'a Multigrading,
    memo: HashMap<Vec<Exp>, KPolynomial>,
}

impl Recursion<'_> {
    fn one_minus(&self, e: &[u32]) -> KPolynomial {
        let d = self.grading.dim();
        let mut k = KPolynomial::one(d);
        k.add_term(self.grading.degree(e), -BigInt::one());
        k
    }

    /// `K(S/I)` for the monomial ideal generated by `gens`.
    fn run(&mut self, gens: Vec<Exp>) -> KPolynomial {
        let d = self.grading.dim();
        let gens = minimal(gens);
        if gens.is_empty() {
            return KPolynomial::one(d);
        }
        if gens.iter().any(|g| g.iter().all(|&x| x == 0)) {
            return KPolynomial::zero(d);
        }
        if let Some(k) = self.memo.get(&gens) {
            return k.clone();
        }
        let all_coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| coprime(a, b)));
        let k = if all_coprime {
            gens.iter().fold(KPolynomial::one(d), |acc, g| acc.mul(&self.one_minus(g)))
        } else {
            // pivot on the variable in the most generators, at its smallest
            // positive exponent
            let nvars = gens[0].len();
            let v = (0..nvars).max_by_key(|&v| (gens.iter().filter(|g| g[v] > 0).count(), std::cmp::Reverse(v))).expect("variables");
            let e = gens.iter().filter(|g| g[v] > 0).map(|g| g[v]).min().expect("pivot occurs");
            let mut p: Exp = smallvec::SmallVec::from_elem(0, nvars);
            p[v] = e;
            let mut plus: Vec<Exp> = gens.iter().filter(|g| g[v] == 0).cloned().collect();
            plus.push(p.clone());
            let colon: Vec<Exp> = gens
                .iter()
                .map(|g| {
                    let mut h = g.clone();
                    h[v] = h[v].saturating_sub(e);
                    h
                })
                .collect();
            let a = self.run(plus);
            let b = self.run(colon);
            a.add(&b.shift(&self.grading.degree(&p)))
        };
        self.memo.insert(gens, k.clone());
        k
    }
}

/// K-polynomial of `S^r/M` for a monomial submodule `M` given by its
/// generators `(exponent, component)`; component `c` sits in degree
/// `shifts[c]` (zero when absent).
pub fn k_monomial(initial: &[(Exp, usize)], rank: usize, g: &Multigrading, shifts: &[Vec<i64>]) -> KPolynomial {
    let mut rec = Recursion { grading: g, memo: HashMap::new() };
    let mut total = KPolynomial::zero(g.dim());
    for c in 0..rank {
        let gens: Vec<Exp> = initial.iter().filter(|(_, k)| *k == c).map(|(e, _)| e.clone()).collect();
        let k = rec.run(gens);
        let zero = vec![0; g.dim()];
        total = total.add(&k.shift(shifts.get(c).unwrap_or(&zero)));
    }
    total
}

fn support(e: &[u32]) -> u128 {
    e.iter().enumerate().filter(|(_, &x)| x > 0).fold(0u128, |m, (i, _)| m | (1 << i))
}

/// Smallest set of variables meeting every support in `sets`.
fn min_cover(sets: &[u128]) -> usize {
    let Some(&s) = sets.iter().min_by_key(|s| s.count_ones()) else { return 0 };
    let mut best = usize::MAX;
    let mut bits = s;
    while bits != 0 {
        let v = bits.trailing_zeros();
        bits &= bits - 1;
        let rest: Vec<u128> = sets.iter().copied().filter(|t| t & (1 << v) == 0).collect();
        best = best.min(1 + min_cover(&rest));
    }
    best
}

/// Krull dimension of `S^r/M` for a monomial submodule, or `None` for the
/// zero module.
pub fn module_dimension(initial: &[(Exp, usize)], rank: usize, nvars: usize) -> Option<usize> {
    assert!(nvars <= 128, "too many variables for the support masks");
    let mut best: Option<usize> = None;
    for c in 0..rank {
        let gens: Vec<u128> = initial.iter().filter(|(_, k)| *k == c).map(|(e, _)| support(e)).collect();
        if gens.contains(&0) {
            continue;
        }
        let mut sets = gens;
        sets.sort();
        sets.dedup();
        let sets: Vec<u128> = sets.iter().copied().filter(|&s| !sets.iter().any(|&t| t != s && t & s == t)).collect();
        let cover = min_cover(&sets);
        let dim = nvars - cover;
        if best.is_none_or(|b| dim > b) {
            best = Some(dim);
        }
    }
    best
}

/// Codimension of `S^r/M`; the zero module has codimension `nvars`.
pub fn codim_monomial(initial: &[(Exp, usize)], rank: usize, nvars: usize) -> usize {
    module_dimension(initial, rank, nvars).map_or(nvars, |d| nvars - d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(v: &[u32]) -> Exp {
        v.iter().copied().collect()
    }

    #[test]
    fn small_ideals() {
        let g = Multigrading::standard(2);
        let k = k_monomial(&[(e(&[2, 0]), 0)], 1, &g, &[]);
        assert_eq!(k, KPolynomial::from_ints(1, &[(&[0], 1), (&[2], -1)]));
        // ⟨xy, x²⟩ → 1 − 2T² + T³
        let k = k_monomial(&[(e(&[1, 1]), 0), (e(&[2, 0]), 0)], 1, &g, &[]);
        assert_eq!(k, KPolynomial::from_ints(1, &[(&[0], 1), (&[2], -2), (&[3], 1)]));
        // ⟨x, y⟩ → (1−T)²
        let k = k_monomial(&[(e(&[1, 0]), 0), (e(&[0, 1]), 0)], 1, &g, &[]);
        assert_eq!(k, KPolynomial::from_ints(1, &[(&[0], 1), (&[1], -2), (&[2], 1)]));
    }

    #[test]
    fn modules_add_componentwise() {
        let g = Multigrading::standard(1);
        let k = k_monomial(&[(e(&[1]), 1)], 2, &g, &[vec![0], vec![3]]);
        assert_eq!(k, KPolynomial::from_ints(1, &[(&[0], 1), (&[3], 1), (&[4], -1)]));
    }

    #[test]
    fn codims() {
        assert_eq!(codim_monomial(&[(e(&[2, 0]), 0)], 1, 2), 1);
        assert_eq!(codim_monomial(&[(e(&[1, 0]), 0), (e(&[0, 1]), 0)], 1, 2), 2);
        assert_eq!(codim_monomial(&[], 1, 2), 0);
        assert_eq!(codim_monomial(&[(e(&[0, 0]), 0)], 1, 2), 2);
        // ⟨xy, yz, zx⟩ needs two of three variables
        assert_eq!(codim_monomial(&[(e(&[1, 1, 0]), 0), (e(&[0, 1, 1]), 0), (e(&[1, 0, 1]), 0)], 1, 3), 2);
        // best component wins
        assert_eq!(codim_monomial(&[(e(&[1, 0]), 0), (e(&[0, 1]), 0), (e(&[1, 0]), 1)], 2, 2), 1);
    }
}
