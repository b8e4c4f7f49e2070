use num_bigint::BigInt;
use smallvec::SmallVec;

use crate::coeff::{Field, Rational};
use crate::poly::{exp_add, Exp};

/// Multiplication rule for the engine: commuting variables, except for
/// conjugate pairs `(x, ∂)` with `∂·x = x·∂ + c` where `c` is a monomial in
/// central variables (`c = 1` for the Weyl algebra, `h` for its
/// homogenization).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    nvars: usize,
    pairs: Vec<(usize, usize)>,
    commutator: Vec<(usize, u32)>,
}

impl Algebra {
    pub fn commutative(nvars: usize) -> Self {
        Algebra { nvars, pairs: Vec::new(), commutator: Vec::new() }
    }

    pub fn weyl(nvars: usize, pairs: Vec<(usize, usize)>, commutator: Vec<(usize, u32)>) -> Self {
        for &(x, d) in &pairs {
            assert!(x < nvars && d < nvars && x != d);
            assert!(commutator.iter().all(|&(v, _)| v != x && v != d), "commutator must be central");
        }
        Algebra { nvars, pairs, commutator }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn commutator(&self) -> &[(usize, u32)] {
        &self.commutator
    }

    pub fn is_commutative(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Exponent of the commutator monomial.
    pub fn commutator_exp(&self) -> Exp {
        let mut e: Exp = SmallVec::from_elem(0, self.nvars);
        for &(v, k) in &self.commutator {
            e[v] += k;
        }
        e
    }

    /// Whether the left factor `m` has to be pushed past positions of `e`.
    pub fn needs_rewrite(&self, m: &[u32], e: &[u32]) -> bool {
        self.pairs.iter().any(|&(x, d)| m[d] > 0 && e[x] > 0)
    }

    /// Normally ordered expansion of `x^a ∂^b · x^c ∂^d` where the left
    /// monomial is `m` and the right one is `e`; integer coefficients.
    pub fn mul_monomials(&self, m: &[u32], e: &[u32]) -> Vec<(Exp, Rational)> {
        let base = exp_add(m, e);
        let active: Vec<(usize, usize, u32, u32)> = self
            .pairs
            .iter()
            .filter(|&&(x, d)| m[d] > 0 && e[x] > 0)
            .map(|&(x, d)| (x, d, m[d], e[x]))
            .collect();
        let mut out = vec![(base, <Rational as Field>::one())];
        for (x, d, b, c) in active {
            let top = b.min(c);
            let mut next = Vec::with_capacity(out.len() * (top as usize + 1));
            for (exp, coef) in &out {
                for k in 0..=top {
                    let mut f = exp.clone();
                    f[x] -= k;
                    f[d] -= k;
                    for &(v, p) in &self.commutator {
                        f[v] += p * k;
                    }
                    next.push((f, Field::mul(coef, &leibniz(b, c, k))));
                }
            }
            out = next;
        }
        out
    }
}

/// `C(b,k)·C(c,k)·k!`, the coefficient of `x^{c-k}∂^{b-k}` in `∂^b x^c`.
pub fn leibniz(b: u32, c: u32, k: u32) -> Rational {
    let mut acc: u128 = 1;
    let mut ok = true;
    // b!/(b-k)!
    for i in 0..k {
        match acc.checked_mul((b - i) as u128) {
            Some(v) => acc = v,
            None => {
                ok = false;
                break;
            }
        }
    }
    if ok {
        // times C(c,k), built incrementally so each step stays integral
        let mut binom: u128 = 1;
        for i in 0..k {
            match binom.checked_mul((c - i) as u128) {
                Some(v) => binom = v / (i as u128 + 1),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            if let Some(v) = acc.checked_mul(binom) {
                if let Ok(v) = i64::try_from(v) {
                    return Rational::from_integer(v);
                }
                return Rational::from_bigint(BigInt::from(v));
            }
        }
    }
    let mut big = BigInt::from(1);
    for i in 0..k {
        big *= b - i;
    }
    let mut binom = BigInt::from(1);
    for i in 0..k {
        binom = binom * (c - i) / (i + 1);
    }
    Rational::from_bigint(big * binom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use smallvec::smallvec;

    #[test]
    fn leibniz_values() {
        // ∂² x² = x²∂² + 4x∂ + 2
        assert_eq!(leibniz(2, 2, 0), Rational::from_integer(1));
        assert_eq!(leibniz(2, 2, 1), Rational::from_integer(4));
        assert_eq!(leibniz(2, 2, 2), Rational::from_integer(2));
        assert_eq!(leibniz(40, 40, 40).to_string(), "815915283247897734345611269596115894272000000000");
    }

    #[test]
    fn weyl_rule() {
        // variables (x, ∂, h) with ∂x = x∂ + h
        let a = Algebra::weyl(3, vec![(0, 1)], vec![(2, 1)]);
        let prod = a.mul_monomials(&[0, 1, 0], &[1, 0, 0]);
        let expect: Vec<(Exp, Rational)> =
            vec![(smallvec![1, 1, 0], Rational::from_integer(1)), (smallvec![0, 0, 1], Rational::from_integer(1))];
        assert_eq!(prod, expect);
    }
}
