//! Multigradings on polynomial rings and shifted free modules.

use serde::{Deserialize, Serialize};

use crate::coeff::Rational;
use crate::linalg;
use crate::poly::Term;
use crate::{Error, Result};

/// A homomorphism from monomials to `Z^d`, given by one degree vector per
/// variable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multigrading {
    degrees: Vec<Vec<i64>>,
    dim: usize,
}

impl Multigrading {
    pub fn new(degrees: Vec<Vec<i64>>, dim: usize) -> Result<Self> {
        if let Some(bad) = degrees.iter().position(|d| d.len() != dim) {
            return Err(Error::Invalid(format!("degree of variable {bad} has length {}, expected {dim}", degrees[bad].len())));
        }
        Ok(Multigrading { degrees, dim })
    }

    /// Every variable in degree 1.
    pub fn standard(nvars: usize) -> Self {
        Multigrading { degrees: vec![vec![1]; nvars], dim: 1 }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nvars(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[Vec<i64>] {
        &self.degrees
    }

    pub fn degree(&self, exp: &[u32]) -> Vec<i64> {
        let mut out = vec![0; self.dim];
        for (e, d) in exp.iter().zip(&self.degrees) {
            if *e > 0 {
                for (o, x) in out.iter_mut().zip(d) {
                    *o += *e as i64 * x;
                }
            }
        }
        out
    }

    /// Degree of `x^exp · e_comp` in a free module with generator degrees
    /// `shifts`.
    pub fn shifted_degree(&self, exp: &[u32], comp: usize, shifts: &[Vec<i64>]) -> Vec<i64> {
        let mut d = self.degree(exp);
        if let Some(s) = shifts.get(comp) {
            for (a, b) in d.iter_mut().zip(s) {
                *a += b;
            }
        }
        d
    }

    /// An integer functional strictly positive on every variable degree,
    /// if one exists.
    pub fn positive_functional(&self) -> Option<Vec<i64>> {
        if self.degrees.is_empty() {
            return Some(vec![1; self.dim]);
        }
        let m: Vec<Vec<Rational>> = self.degrees.iter().map(|d| d.iter().map(|&x| Rational::from_integer(x)).collect()).collect();
        let b = vec![Rational::from_integer(1); m.len()];
        let y = linalg::feasible_point(&m, &b)?;
        let l = linalg::denominator_lcm(&y);
        let l = Rational::from_bigint(l);
        y.iter()
            .map(|q| {
                let v = crate::Field::mul(q, &l);
                v.to_i64()
            })
            .collect()
    }

    /// Whether every graded piece is finite dimensional: no nontrivial
    /// nonnegative combination of variable degrees vanishes.
    pub fn is_positive(&self) -> bool {
        self.positive_functional().is_some()
    }
}

/// Which graded ring a built-in bigrading is for. Variables are laid out
/// as `x₁..xₙ, t₁..t_p, ∂x₁..∂xₙ, ∂t₁..∂t_p` followed by the extra
/// homogenizing variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Flavor {
    /// `gr^V(D^(h))`, extra variable `h` of degree (1,0).
    GrVOfRees,
    /// `gr^F(R_V(D))`, extra variable `θ` of degree (0,1).
    GrFOfRees,
}

pub fn builtin_bigrading(flavor: Flavor, n: usize, p: usize) -> Multigrading {
    let mut deg = Vec::with_capacity(2 * (n + p) + 1);
    deg.extend(std::iter::repeat_n(vec![0, 0], n));
    deg.extend(std::iter::repeat_n(vec![0, -1], p));
    deg.extend(std::iter::repeat_n(vec![1, 0], n));
    deg.extend(std::iter::repeat_n(vec![1, 1], p));
    deg.push(match flavor {
        Flavor::GrVOfRees => vec![1, 0],
        Flavor::GrFOfRees => vec![0, 1],
    });
    Multigrading { degrees: deg, dim: 2 }
}

/// Generator shifts of `D^r[n][m]`: F-shifts `n` and V-shifts `m`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ShiftPair {
    pub n: Vec<i64>,
    pub m: Vec<i64>,
}

impl ShiftPair {
    pub fn new(n: Vec<i64>, m: Vec<i64>) -> Result<Self> {
        if n.len() != m.len() {
            return Err(Error::Invalid(format!("{} F-shifts but {} V-shifts", n.len(), m.len())));
        }
        Ok(ShiftPair { n, m })
    }

    pub fn zero(rank: usize) -> Self {
        ShiftPair { n: vec![0; rank], m: vec![0; rank] }
    }

    pub fn rank(&self) -> usize {
        self.n.len()
    }

    /// Generator bidegrees `(nᵢ, mᵢ)`.
    pub fn bidegrees(&self) -> Vec<Vec<i64>> {
        self.n.iter().zip(&self.m).map(|(&a, &b)| vec![a, b]).collect()
    }
}

/// Outcome of a homogeneity check: the common degree, if there is one.
/// The zero element is homogeneous with no constrained degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homogeneity {
    pub homogeneous: bool,
    pub degree: Option<Vec<i64>>,
}

pub fn is_multihomogeneous<K>(terms: &[Term<K>], g: &Multigrading, shifts: &[Vec<i64>]) -> Homogeneity {
    let mut degree: Option<Vec<i64>> = None;
    for t in terms {
        let d = g.shifted_degree(&t.exp, t.comp, shifts);
        match &degree {
            None => degree = Some(d),
            Some(e) if *e == d => {}
            Some(_) => return Homogeneity { homogeneous: false, degree: None },
        }
    }
    Homogeneity { homogeneous: true, degree }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Rational;

    fn term(e: &[u32], c: i64) -> Term<Rational> {
        Term { exp: e.iter().copied().collect(), comp: 0, coeff: Rational::from_integer(c) }
    }

    #[test]
    fn table_degrees() {
        // n = 0, p = 1: variables t, ∂t, θ
        let g = builtin_bigrading(Flavor::GrFOfRees, 0, 1);
        assert_eq!(g.degree(&[1, 1, 0]), vec![1, 0]);
        assert_eq!(g.degree(&[1, 0, 1]), vec![0, 0]);
        assert_eq!(g.degree(&[0, 0, 0]), vec![0, 0]);
        let h = builtin_bigrading(Flavor::GrVOfRees, 1, 1);
        assert_eq!(h.degree(&[0, 0, 1, 0, 1]), vec![2, 0]);
    }

    #[test]
    fn homogeneity() {
        // ξ₁ξ₃ − ξ₂² with every variable of degree (1,1)
        let g = Multigrading::new(vec![vec![1, 1]; 3], 2).unwrap();
        let h = is_multihomogeneous(&[term(&[1, 0, 1], 1), term(&[0, 2, 0], -1)], &g, &[]);
        assert_eq!(h, Homogeneity { homogeneous: true, degree: Some(vec![2, 2]) });
        // x + ∂x
        let g = Multigrading::new(vec![vec![0, 0], vec![1, 0]], 2).unwrap();
        assert!(!is_multihomogeneous(&[term(&[0, 1], 1), term(&[1, 0], 1)], &g, &[]).homogeneous);
        let z: Vec<Term<Rational>> = vec![];
        assert_eq!(is_multihomogeneous(&z, &g, &[]), Homogeneity { homogeneous: true, degree: None });
    }

    #[test]
    fn positivity() {
        assert!(Multigrading::standard(3).is_positive());
        assert!(Multigrading::standard(0).is_positive());
        assert!(!builtin_bigrading(Flavor::GrFOfRees, 0, 1).is_positive());
        let g = Multigrading::new(vec![vec![1, 0], vec![1, 1], vec![0, 1]], 2).unwrap();
        let w = g.positive_functional().unwrap();
        assert!(g.degrees().iter().all(|d| d[0] * w[0] + d[1] * w[1] > 0));
        let bad = Multigrading::new(vec![vec![1], vec![-1]], 1).unwrap();
        assert!(!bad.is_positive());
    }
}
