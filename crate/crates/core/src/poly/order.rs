use std::cmp::Ordering;
use std::sync::Arc;

use super::Exp;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieBreak {
    DegRevLex,
    Lex,
}

/// How module components enter the comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleRule {
    /// Term first, then component (e₁ > e₂ > …).
    TermOverPosition,
    /// Component first (e₁ > e₂ > …), then term.
    PositionOverTerm,
    /// Induced order m·eᵢ ↦ m·lead(gᵢ); ties go to the larger index.
    Schreyer(Arc<SchreyerFrame>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchreyerFrame {
    pub leads: Vec<(Exp, usize)>,
    pub base: MonomialOrder,
}

/// Weight-refined term order on `N^n × {components}`.
///
/// Terms are compared by the weight rows in turn (each row's value is
/// shifted by the component's entry in `shifts`), then by the tie-break,
/// then by the module rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    nvars: usize,
    weights: Vec<Vec<i64>>,
    tie: TieBreak,
    rule: ModuleRule,
    shifts: Vec<Vec<i64>>,
}

impl MonomialOrder {
    pub fn new(nvars: usize, weights: Vec<Vec<i64>>, tie: TieBreak) -> Result<Self> {
        let ord = MonomialOrder { nvars, weights, tie, rule: ModuleRule::TermOverPosition, shifts: Vec::new() };
        ord.validate()?;
        Ok(ord)
    }

    pub fn degrevlex(nvars: usize) -> Self {
        MonomialOrder { nvars, weights: Vec::new(), tie: TieBreak::DegRevLex, rule: ModuleRule::TermOverPosition, shifts: Vec::new() }
    }

    pub fn lex(nvars: usize) -> Self {
        MonomialOrder { nvars, weights: Vec::new(), tie: TieBreak::Lex, rule: ModuleRule::TermOverPosition, shifts: Vec::new() }
    }

    /// Single weight row refined by `tie`.
    pub fn weighted(weight: Vec<i64>, tie: TieBreak) -> Result<Self> {
        let n = weight.len();
        Self::new(n, vec![weight], tie)
    }

    /// Elimination order: the first `k` variables are larger than any
    /// monomial in the rest.
    pub fn elimination(nvars: usize, k: usize) -> Self {
        let row = (0..nvars).map(|i| if i < k { 1 } else { 0 }).collect();
        MonomialOrder { nvars, weights: vec![row], tie: TieBreak::DegRevLex, rule: ModuleRule::TermOverPosition, shifts: Vec::new() }
    }

    pub fn with_rule(mut self, rule: ModuleRule) -> Self {
        self.rule = rule;
        self
    }

    /// `shifts[comp][row]`; components past the end get zero shifts.
    pub fn with_shifts(mut self, shifts: Vec<Vec<i64>>) -> Self {
        self.shifts = shifts;
        self
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    pub fn tie(&self) -> TieBreak {
        self.tie
    }

    pub fn rule(&self) -> &ModuleRule {
        &self.rule
    }

    pub fn shifts(&self) -> &[Vec<i64>] {
        &self.shifts
    }

    /// Every variable must see a positive entry before any negative one
    /// down the refinement chain, so the order is a well-order.
    pub fn validate(&self) -> Result<()> {
        for row in &self.weights {
            if row.len() != self.nvars {
                return Err(Error::BadOrder(format!("weight row of length {} for {} variables", row.len(), self.nvars)));
            }
        }
        for v in 0..self.nvars {
            if let Some(w) = self.weights.iter().map(|r| r[v]).find(|&w| w != 0) {
                if w < 0 {
                    return Err(Error::BadOrder(format!("variable {v} has negative leading weight")));
                }
            }
        }
        Ok(())
    }

    fn shift(&self, comp: usize, row: usize) -> i64 {
        self.shifts.get(comp).and_then(|s| s.get(row)).copied().unwrap_or(0)
    }

    pub fn weight_value(&self, row: usize, exp: &[u32], comp: usize) -> i64 {
        let w = &self.weights[row];
        let mut s = self.shift(comp, row);
        for (e, wi) in exp.iter().zip(w) {
            s += *e as i64 * wi;
        }
        s
    }

    fn cmp_monomials(&self, a: &[u32], ac: usize, b: &[u32], bc: usize) -> Ordering {
        for (r, w) in self.weights.iter().enumerate() {
            let mut s = if ac == bc { 0 } else { self.shift(ac, r) - self.shift(bc, r) };
            for ((x, y), wi) in a.iter().zip(b).zip(w) {
                s += (*x as i64 - *y as i64) * wi;
            }
            if s != 0 {
                return s.cmp(&0);
            }
        }
        tie_cmp(self.tie, a, b)
    }

    /// Compare `(a, ac)` with `(b, bc)`.
    pub fn cmp(&self, a: &[u32], ac: usize, b: &[u32], bc: usize) -> Ordering {
        match &self.rule {
            ModuleRule::TermOverPosition => self.cmp_monomials(a, ac, b, bc).then_with(|| bc.cmp(&ac)),
            ModuleRule::PositionOverTerm => bc.cmp(&ac).then_with(|| self.cmp_monomials(a, ac, b, bc)),
            ModuleRule::Schreyer(frame) => {
                let (la, lac) = &frame.leads[ac];
                let (lb, lbc) = &frame.leads[bc];
                let ea: Exp = a.iter().zip(la.iter()).map(|(x, y)| x + y).collect();
                let eb: Exp = b.iter().zip(lb.iter()).map(|(x, y)| x + y).collect();
                frame.base.cmp(&ea, *lac, &eb, *lbc).then_with(|| ac.cmp(&bc))
            }
        }
    }

    pub fn cmp_exp(&self, a: &[u32], b: &[u32]) -> Ordering {
        self.cmp(a, 0, b, 0)
    }
}

pub fn tie_cmp(tie: TieBreak, a: &[u32], b: &[u32]) -> Ordering {
    match tie {
        TieBreak::Lex => a.cmp(b),
        TieBreak::DegRevLex => {
            // one pass: degree difference and the last differing position
            let mut diff: i64 = 0;
            let mut last = Ordering::Equal;
            for (x, y) in a.iter().zip(b) {
                if x != y {
                    diff += *x as i64 - *y as i64;
                    last = y.cmp(x);
                }
            }
            diff.cmp(&0).then(last)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use smallvec::smallvec;

    #[test]
    fn degrevlex_basic() {
        let o = MonomialOrder::degrevlex(3);
        let xy: Exp = smallvec![1, 1, 0];
        let xz: Exp = smallvec![1, 0, 1];
        let y2: Exp = smallvec![0, 2, 0];
        assert_eq!(o.cmp_exp(&xy, &xz), Ordering::Greater);
        assert_eq!(o.cmp_exp(&y2, &xz), Ordering::Greater);
    }

    #[test]
    fn weight_then_lex() {
        let o = MonomialOrder::weighted(vec![0, 1], TieBreak::Lex).unwrap();
        let x3: Exp = smallvec![3, 0];
        let y: Exp = smallvec![0, 1];
        assert_eq!(o.cmp_exp(&y, &x3), Ordering::Greater);
    }

    #[test]
    fn negative_weight_rejected() {
        assert!(MonomialOrder::weighted(vec![-1, 1], TieBreak::DegRevLex).is_err());
        assert!(MonomialOrder::new(2, vec![vec![0, 1], vec![-1, 0]], TieBreak::Lex).is_err());
        assert!(MonomialOrder::new(2, vec![vec![1, 1], vec![-1, 1]], TieBreak::Lex).is_ok());
    }

    #[test]
    fn positions() {
        let x: Exp = smallvec![1, 0];
        let pot = MonomialOrder::degrevlex(2).with_rule(ModuleRule::PositionOverTerm);
        assert_eq!(pot.cmp(&x, 0, &x, 1), Ordering::Greater);
        let top = MonomialOrder::degrevlex(2);
        let x2: Exp = smallvec![2, 0];
        assert_eq!(top.cmp(&x, 0, &x2, 1), Ordering::Less);
        let shifted = MonomialOrder::weighted(vec![1, 1], TieBreak::DegRevLex).unwrap().with_shifts(vec![vec![5], vec![0]]);
        assert_eq!(shifted.cmp(&x, 0, &x2, 1), Ordering::Greater);
    }
}
