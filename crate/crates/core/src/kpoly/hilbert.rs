use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::KPolynomial;
use crate::grading::Multigrading;
use crate::poly::{divides, Exp};
use crate::{Error, Result};

fn dot(w: &[i64], v: &[i64]) -> i64 {
    w.iter().zip(v).map(|(a, b)| a * b).sum()
}

/// Every exponent vector whose weighted degree is at most `budget`;
/// `weights` are all positive.
fn monomials_up_to(weights: &[i64], budget: i64) -> Vec<Vec<u32>> {
    fn go(weights: &[i64], budget: i64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == weights.len() {
            out.push(cur.clone());
            return;
        }
        let w = weights[cur.len()];
        let mut k = 0;
        while k as i64 * w <= budget {
            cur.push(k);
            go(weights, budget - k as i64 * w, cur, out);
            cur.pop();
            k += 1;
        }
    }
    let mut out = Vec::new();
    if budget >= 0 {
        go(weights, budget, &mut Vec::new(), &mut out);
    }
    out
}

/// Compare graded piece dimensions of `S^r/M` (by counting standard
/// monomials of the monomial module `initial`) with the coefficients of
/// `K/Π(1 − T^{deg xᵢ})`, for every degree of weight at most `bound`
/// under a positive functional.
pub fn hilbert_check(initial: &[(Exp, usize)], rank: usize, g: &Multigrading, shifts: &[Vec<i64>], k: &KPolynomial, bound: i64) -> Result<bool> {
    let w = g.positive_functional().ok_or(Error::NonPositiveGrading)?;
    let weights: Vec<i64> = g.degrees().iter().map(|d| dot(&w, d)).collect();
    let zero = vec![0; g.dim()];
    let shift = |c: usize| shifts.get(c).cloned().unwrap_or_else(|| zero.clone());

    let mut counted: HashMap<Vec<i64>, BigInt> = HashMap::new();
    for c in 0..rank {
        let s = shift(c);
        let gens: Vec<&Exp> = initial.iter().filter(|(_, k)| *k == c).map(|(e, _)| e).collect();
        for m in monomials_up_to(&weights, bound - dot(&w, &s)) {
            if gens.iter().any(|g| divides(g, &m)) {
                continue;
            }
            let deg = g.shifted_degree(&m, c, shifts);
            *counted.entry(deg).or_insert_with(BigInt::zero) += 1;
        }
    }
    let mut series: HashMap<Vec<i64>, BigInt> = HashMap::new();
    for (e, c) in k.terms() {
        for m in monomials_up_to(&weights, bound - dot(&w, e)) {
            let deg: Vec<i64> = g.degree(&m).iter().zip(e).map(|(a, b)| a + b).collect();
            *series.entry(deg).or_insert_with(BigInt::zero) += c;
        }
    }
    counted.retain(|_, v| !v.is_zero());
    series.retain(|_, v| !v.is_zero());
    Ok(counted == series)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kpoly::k_monomial;

    fn e(v: &[u32]) -> Exp {
        v.iter().copied().collect()
    }

    #[test]
    fn free_and_hypersurface() {
        let g = Multigrading::standard(1);
        assert!(hilbert_check(&[], 1, &g, &[], &KPolynomial::one(1), 8).unwrap());
        let g = Multigrading::standard(2);
        let init = [(e(&[1, 1]), 0)];
        let k = k_monomial(&init, 1, &g, &[]);
        assert_eq!(k, KPolynomial::from_ints(1, &[(&[0], 1), (&[2], -1)]));
        assert!(hilbert_check(&init, 1, &g, &[], &k, 8).unwrap());
        // a wrong K-polynomial is caught
        assert!(!hilbert_check(&init, 1, &g, &[], &KPolynomial::one(1), 8).unwrap());
    }

    #[test]
    fn rejects_nonpositive() {
        let g = Multigrading::new(vec![vec![1], vec![-1]], 1).unwrap();
        assert_eq!(hilbert_check(&[], 1, &g, &[], &KPolynomial::one(1), 3).unwrap_err(), Error::NonPositiveGrading);
    }
}
