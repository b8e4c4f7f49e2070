//! Buchberger's algorithm on sorted term vectors.
//!
//! Elements are `Vec<Term<K>>` sorted descending under the active order.
//! The same code runs over commutative rings and over Weyl-type algebras:
//! only left multiplication by a monomial differs, and for admissible
//! orders the leading exponent of `m·g` is `m + lead(g)`.

use std::cmp::Ordering;

use super::algebra::Algebra;
use crate::coeff::Field;
use crate::poly::{divides, exp_add, exp_degree, exp_lcm, exp_sub, Exp, MonomialOrder, Term};
use crate::{Error, Result};

pub type Sparse<K> = Vec<Term<K>>;

/// Sort descending, merge equal monomials, drop zeros.
pub fn normalize<K: Field>(mut v: Vec<Term<K>>, ord: &MonomialOrder) -> Sparse<K> {
    v.sort_by(|a, b| ord.cmp(&b.exp, b.comp, &a.exp, a.comp));
    let mut out: Vec<Term<K>> = Vec::with_capacity(v.len());
    for t in v {
        if let Some(last) = out.last_mut() {
            if last.exp == t.exp && last.comp == t.comp {
                last.coeff = last.coeff.add(&t.coeff);
                if last.coeff.is_zero() {
                    out.pop();
                }
                continue;
            }
        }
        if !t.coeff.is_zero() {
            out.push(t);
        }
    }
    out
}

/// `f - c·g` for sorted inputs.
pub fn sub_mul<K: Field>(f: &[Term<K>], c: &K, g: &[Term<K>], ord: &MonomialOrder) -> Sparse<K> {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0, 0);
    while i < f.len() && j < g.len() {
        match ord.cmp(&f[i].exp, f[i].comp, &g[j].exp, g[j].comp) {
            Ordering::Greater => {
                out.push(f[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(Term { exp: g[j].exp.clone(), comp: g[j].comp, coeff: g[j].coeff.mul(c).neg() });
                j += 1;
            }
            Ordering::Equal => {
                let s = f[i].coeff.sub(&g[j].coeff.mul(c));
                if !s.is_zero() {
                    out.push(Term { exp: f[i].exp.clone(), comp: f[i].comp, coeff: s });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(f[i..].iter().cloned());
    for t in &g[j..] {
        out.push(Term { exp: t.exp.clone(), comp: t.comp, coeff: t.coeff.mul(c).neg() });
    }
    out
}

/// Sum of two sorted vectors.
fn merge_descending<K: Field>(a: Vec<Term<K>>, b: Vec<Term<K>>, ord: &MonomialOrder) -> Sparse<K> {
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut a = a.into_iter().peekable();
    let mut b = b.into_iter().peekable();
    loop {
        let o = match (a.peek(), b.peek()) {
            (Some(x), Some(y)) => ord.cmp(&x.exp, x.comp, &y.exp, y.comp),
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (None, None) => break,
        };
        match o {
            Ordering::Greater => out.push(a.next().unwrap()),
            Ordering::Less => out.push(b.next().unwrap()),
            Ordering::Equal => {
                let mut x = a.next().unwrap();
                let y = b.next().unwrap();
                x.coeff = x.coeff.add(&y.coeff);
                if !x.coeff.is_zero() {
                    out.push(x);
                }
            }
        }
    }
    out
}

/// `x^m · g` in the algebra, sorted.
///
/// Every order in use compares exponents through their difference, so
/// adding a fixed vector to all exponents keeps a sorted vector sorted.
/// A derivation `∂` is applied as the shift by `∂` plus the shifted
/// derivative in its conjugate, two sorted pieces that merge linearly.
pub fn left_mul<K: Field>(alg: &Algebra, ord: &MonomialOrder, m: &[u32], g: &[Term<K>]) -> Sparse<K> {
    if alg.is_commutative() || g.iter().all(|t| !alg.needs_rewrite(m, &t.exp)) {
        return g.iter().map(|t| Term { exp: exp_add(m, &t.exp), comp: t.comp, coeff: t.coeff.clone() }).collect();
    }
    let comm = alg.commutator_exp();
    let mut rest: Exp = m.iter().copied().collect();
    let mut cur: Sparse<K> = g.to_vec();
    for &(x, d) in alg.pairs() {
        while rest[d] > 0 && cur.iter().any(|t| t.exp[x] > 0) {
            rest[d] -= 1;
            let mut shifted = cur.clone();
            for t in &mut shifted {
                t.exp[d] += 1;
            }
            let derived: Sparse<K> = cur
                .into_iter()
                .filter(|t| t.exp[x] > 0)
                .map(|mut t| {
                    t.coeff = t.coeff.mul(&K::from_int(t.exp[x] as i64));
                    t.exp[x] -= 1;
                    for (e, c) in t.exp.iter_mut().zip(comm.iter()) {
                        *e += c;
                    }
                    t
                })
                .collect();
            cur = merge_descending(shifted, derived, ord);
        }
    }
    if rest.iter().any(|&e| e > 0) {
        for t in &mut cur {
            for (e, r) in t.exp.iter_mut().zip(rest.iter()) {
                *e += r;
            }
        }
    }
    cur
}

/// `a · b` for general elements; `a` must have a single component 0
/// (a ring element) unless `b` does.
pub fn mul<K: Field>(alg: &Algebra, ord: &MonomialOrder, a: &[Term<K>], b: &[Term<K>]) -> Sparse<K> {
    let mut v = Vec::new();
    for t in a {
        for mut u in left_mul(alg, ord, &t.exp, b) {
            u.coeff = u.coeff.mul(&t.coeff);
            v.push(u);
        }
    }
    normalize(v, ord)
}

pub fn scale<K: Field>(f: &[Term<K>], c: &K) -> Sparse<K> {
    f.iter().map(|t| Term { exp: t.exp.clone(), comp: t.comp, coeff: t.coeff.mul(c) }).collect()
}

pub fn make_monic<K: Field>(f: Sparse<K>) -> Sparse<K> {
    match f.first() {
        Some(t) if !t.coeff.is_one() => {
            let inv = t.coeff.inv().expect("nonzero lead");
            scale(&f, &inv)
        }
        _ => f,
    }
}

/// Rescale by the field's preferred normalizer (primitive and integral
/// over the rationals).
pub fn normalize_content<K: Field>(f: Sparse<K>) -> Sparse<K> {
    let coeffs: Vec<&K> = f.iter().map(|t| &t.coeff).collect();
    let c = K::normalizer(&coeffs);
    if c.is_one() {
        f
    } else {
        scale(&f, &c)
    }
}

pub fn check_admissible(alg: &Algebra, ord: &MonomialOrder) -> Result<()> {
    ord.validate()?;
    if alg.nvars() != ord.nvars() {
        return Err(Error::BadOrder(format!("order on {} variables, algebra has {}", ord.nvars(), alg.nvars())));
    }
    let c = alg.commutator_exp();
    for &(x, d) in alg.pairs() {
        let mut xd: Exp = smallvec::SmallVec::from_elem(0, alg.nvars());
        xd[x] = 1;
        xd[d] = 1;
        for comp in 0..ord.shifts().len().max(1) {
            if ord.cmp(&c, comp, &xd, comp) != Ordering::Less {
                return Err(Error::BadOrder(format!("commutator is not below x{x}·d{d}")));
            }
        }
    }
    Ok(())
}

/// Sum of sorted term vectors kept in buckets of geometrically growing
/// size, so adding a short element does not copy a long one. Buckets are
/// stored in ascending order and the leading term sits at the end.
struct GeoBucket<'a, K> {
    ord: &'a MonomialOrder,
    buckets: Vec<Vec<Term<K>>>,
}

const BUCKET_BASE: usize = 4;

fn merge_ascending<K: Field>(a: Vec<Term<K>>, b: Vec<Term<K>>, ord: &MonomialOrder) -> Vec<Term<K>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut a = a.into_iter().peekable();
    let mut b = b.into_iter().peekable();
    loop {
        let o = match (a.peek(), b.peek()) {
            (Some(x), Some(y)) => ord.cmp(&x.exp, x.comp, &y.exp, y.comp),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => break,
        };
        match o {
            Ordering::Less => out.push(a.next().unwrap()),
            Ordering::Greater => out.push(b.next().unwrap()),
            Ordering::Equal => {
                let mut x = a.next().unwrap();
                let y = b.next().unwrap();
                x.coeff = x.coeff.add(&y.coeff);
                if !x.coeff.is_zero() {
                    out.push(x);
                }
            }
        }
    }
    out
}

impl<'a, K: Field> GeoBucket<'a, K> {
    fn new(ord: &'a MonomialOrder) -> Self {
        GeoBucket { ord, buckets: Vec::new() }
    }

    fn slot(len: usize) -> usize {
        let mut i = 0;
        let mut cap = BUCKET_BASE;
        while cap < len {
            cap *= BUCKET_BASE;
            i += 1;
        }
        i
    }

    /// Add `c·g` for `g` sorted descending.
    fn add(&mut self, c: &K, g: &[Term<K>]) {
        if g.is_empty() {
            return;
        }
        let mut cur: Vec<Term<K>> = if c.is_one() {
            g.iter().rev().cloned().collect()
        } else {
            g.iter().rev().map(|t| Term { exp: t.exp.clone(), comp: t.comp, coeff: t.coeff.mul(c) }).collect()
        };
        let mut i = Self::slot(cur.len());
        loop {
            if self.buckets.len() <= i {
                self.buckets.resize_with(i + 1, Vec::new);
            }
            let old = std::mem::take(&mut self.buckets[i]);
            if !old.is_empty() {
                cur = merge_ascending(old, cur, self.ord);
            }
            let j = Self::slot(cur.len());
            if j <= i {
                self.buckets[i] = cur;
                return;
            }
            i = j;
        }
    }

    fn scale(&mut self, c: &K) {
        for b in &mut self.buckets {
            for t in b.iter_mut() {
                t.coeff = t.coeff.mul(c);
            }
        }
    }

    fn pop_lead(&mut self) -> Option<Term<K>> {
        loop {
            let mut best: Option<usize> = None;
            for (i, b) in self.buckets.iter().enumerate() {
                if let Some(t) = b.last() {
                    best = match best {
                        Some(j) => {
                            let u = self.buckets[j].last().unwrap();
                            if self.ord.cmp(&t.exp, t.comp, &u.exp, u.comp) == Ordering::Greater { Some(i) } else { Some(j) }
                        }
                        None => Some(i),
                    };
                }
            }
            let j = best?;
            let mut lead = self.buckets[j].pop().unwrap();
            for i in 0..self.buckets.len() {
                if i == j {
                    continue;
                }
                if let Some(t) = self.buckets[i].pop_if(|t| t.exp == lead.exp && t.comp == lead.comp) {
                    lead.coeff = lead.coeff.add(&t.coeff);
                }
            }
            if !lead.coeff.is_zero() {
                return Some(lead);
            }
        }
    }

    /// Remaining terms, sorted descending.
    fn into_sorted(self) -> Sparse<K> {
        let ord = self.ord;
        let mut all = self.buckets.into_iter().fold(Vec::new(), |acc, b| merge_ascending(acc, b, ord));
        all.reverse();
        all
    }
}

fn support_mask(e: &[u32]) -> u64 {
    e.iter().enumerate().fold(0, |m, (i, &a)| if a > 0 { m | 1 << (i % 64) } else { m })
}

/// Reduce `f` by `basis`; with `full`, every term is reduced, otherwise
/// only the leading one. The result is a nonzero scalar multiple of a
/// remainder of `f`.
pub fn reduce<K: Field>(alg: &Algebra, ord: &MonomialOrder, f: Sparse<K>, basis: &[&Sparse<K>], full: bool) -> Sparse<K> {
    reduce_scaled(alg, ord, f, basis, full).0
}

/// As [`reduce`], also returning `u` with `result = u·f − Σ qᵢ·gᵢ`.
pub fn reduce_scaled<K: Field>(alg: &Algebra, ord: &MonomialOrder, f: Sparse<K>, basis: &[&Sparse<K>], full: bool) -> (Sparse<K>, K) {
    let mut mult = K::one();
    if f.is_empty() {
        return (f, mult);
    }
    let masks: Vec<u64> = basis.iter().map(|g| support_mask(&g[0].exp)).collect();
    let mut rem: Sparse<K> = Vec::new();
    let mut acc = GeoBucket::new(ord);
    acc.add(&K::one(), &f);
    while let Some(t) = acc.pop_lead() {
        let mask = support_mask(&t.exp);
        let hit = basis.iter().zip(&masks).find(|(g, &gm)| gm & !mask == 0 && g[0].comp == t.comp && divides(&g[0].exp, &t.exp));
        match hit {
            Some((g, _)) => {
                let m = exp_sub(&t.exp, &g[0].exp);
                let (u, v) = K::cross_multipliers(&t.coeff, &g[0].coeff);
                if !u.is_one() {
                    acc.scale(&u);
                    for r in &mut rem {
                        r.coeff = r.coeff.mul(&u);
                    }
                    mult = mult.mul(&u);
                }
                let h = left_mul(alg, ord, &m, g);
                debug_assert!(h[0].exp == t.exp && h[0].coeff == g[0].coeff);
                acc.add(&v.neg(), &h[1..]);
            }
            None => {
                rem.push(t);
                if !full {
                    rem.extend(acc.into_sorted());
                    break;
                }
            }
        }
    }
    (rem, mult)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, serde::Serialize)]
pub struct GbStats {
    pub pairs: usize,
    pub zero_reductions: usize,
    pub basis_size: usize,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Exp,
    comp: usize,
    sugar: u32,
}

fn sugar_of<K>(f: &[Term<K>]) -> u32 {
    f.iter().map(|t| exp_degree(&t.exp)).max().unwrap_or(0)
}

/// S-element of two elements with the same leading component.
pub fn spoly<K: Field>(alg: &Algebra, ord: &MonomialOrder, f: &[Term<K>], g: &[Term<K>]) -> Sparse<K> {
    let l = exp_lcm(&f[0].exp, &g[0].exp);
    let a = left_mul(alg, ord, &exp_sub(&l, &f[0].exp), f);
    let b = left_mul(alg, ord, &exp_sub(&l, &g[0].exp), g);
    let (u, v) = K::cross_multipliers(&a[0].coeff, &b[0].coeff);
    let a = if u.is_one() { a } else { scale(&a, &u) };
    sub_mul(&a, &v, &b, ord)
}

/// Reduced Gröbner basis of the left module generated by `gens`, each
/// element in the field's normal form.
pub fn groebner<K: Field>(alg: &Algebra, ord: &MonomialOrder, gens: Vec<Sparse<K>>) -> (Vec<Sparse<K>>, GbStats) {
    let mut stats = GbStats::default();
    let single_comp = gens.iter().flatten().all(|t| t.comp == 0);
    let product_ok = alg.is_commutative() && single_comp;

    let mut basis: Vec<Sparse<K>> = Vec::new();
    let mut sugar: Vec<u32> = Vec::new();
    let mut live: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut pending: Vec<Sparse<K>> = gens.into_iter().map(|g| normalize(g, ord)).filter(|g| !g.is_empty()).collect();
    // smaller leads first keeps early reductions cheap
    pending.sort_by(|a, b| ord.cmp(&a[0].exp, a[0].comp, &b[0].exp, b[0].comp));

    let insert = |h: Sparse<K>,
                      s: u32,
                      basis: &mut Vec<Sparse<K>>,
                      sugar: &mut Vec<u32>,
                      live: &mut Vec<bool>,
                      pairs: &mut Vec<Pair>| {
        let k = basis.len();
        let (hl, hc) = (h[0].exp.clone(), h[0].comp);
        // candidate pairs with the new element
        let mut cands: Vec<(usize, Exp, bool)> = Vec::new();
        for i in 0..k {
            if !live[i] || basis[i][0].comp != hc {
                continue;
            }
            let gl = &basis[i][0].exp;
            let l = exp_lcm(gl, &hl);
            let coprime = product_ok && gl.iter().zip(hl.iter()).all(|(a, b)| *a == 0 || *b == 0);
            cands.push((i, l, coprime));
        }
        // Gebauer–Möller: drop candidates whose lcm is a proper multiple of
        // another's, keep one per equal lcm
        let mut kept: Vec<(usize, Exp, bool)> = Vec::new();
        for idx in 0..cands.len() {
            let (_, ref l, coprime) = cands[idx];
            let dominated = cands[idx + 1..].iter().any(|(_, l2, _)| divides(l2, l))
                || kept.iter().any(|(_, l2, _)| divides(l2, l));
            if coprime || !dominated {
                kept.push(cands[idx].clone());
            }
        }
        // old pairs made redundant by the new lead
        pairs.retain(|p| {
            if p.comp != hc || !divides(&hl, &p.lcm) {
                return true;
            }
            let li = exp_lcm(&basis[p.i][0].exp, &hl);
            let lj = exp_lcm(&basis[p.j][0].exp, &hl);
            li == p.lcm || lj == p.lcm
        });
        for (i, l, coprime) in kept {
            if coprime {
                continue;
            }
            let si = sugar[i] + exp_degree(&l) - exp_degree(&basis[i][0].exp);
            let sh = s + exp_degree(&l) - exp_degree(&hl);
            pairs.push(Pair { i, j: k, lcm: l, comp: hc, sugar: si.max(sh) });
        }
        for i in 0..k {
            if live[i] && basis[i][0].comp == hc && divides(&hl, &basis[i][0].exp) {
                live[i] = false;
            }
        }
        basis.push(h);
        sugar.push(s);
        live.push(true);
    };

    for g in pending {
        let refs: Vec<&Sparse<K>> = basis.iter().collect();
        let s = sugar_of(&g);
        let r = reduce(alg, ord, g, &refs, true);
        if r.is_empty() {
            continue;
        }
        let r = normalize_content(r);
        insert(r, s, &mut basis, &mut sugar, &mut live, &mut pairs);
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (p, q) = (&pairs[a], &pairs[b]);
                p.sugar
                    .cmp(&q.sugar)
                    .then_with(|| ord.cmp(&p.lcm, p.comp, &q.lcm, q.comp))
                    .then_with(|| (p.j, p.i).cmp(&(q.j, q.i)))
            })
            .expect("nonempty");
        let p = pairs.swap_remove(best);
        stats.pairs += 1;
        let s = spoly(alg, ord, &basis[p.i], &basis[p.j]);
        let refs: Vec<&Sparse<K>> = basis.iter().enumerate().filter(|(i, _)| live[*i]).map(|(_, g)| g).collect();
        let r = reduce(alg, ord, s, &refs, true);
        if r.is_empty() {
            stats.zero_reductions += 1;
            continue;
        }
        let r = normalize_content(r);
        insert(r, p.sugar, &mut basis, &mut sugar, &mut live, &mut pairs);
    }

    let minimal: Vec<Sparse<K>> = basis.into_iter().zip(live).filter(|(_, l)| *l).map(|(g, _)| g).collect();
    let reduced = interreduce(alg, ord, minimal);
    stats.basis_size = reduced.len();
    (reduced, stats)
}

/// Tail-reduce a minimal basis and sort it by leading term. Elements are
/// left in the field's normal form, which need not be monic.
pub fn interreduce<K: Field>(alg: &Algebra, ord: &MonomialOrder, minimal: Vec<Sparse<K>>) -> Vec<Sparse<K>> {
    let mut out = Vec::with_capacity(minimal.len());
    for (i, g) in minimal.iter().enumerate() {
        let others: Vec<&Sparse<K>> = minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, h)| h).collect();
        let mut head = g[0].clone();
        let (tail, u) = reduce_scaled(alg, ord, g[1..].to_vec(), &others, true);
        head.coeff = head.coeff.mul(&u);
        let mut v = vec![head];
        v.extend(tail);
        out.push(normalize_content(v));
    }
    out.sort_by(|a, b| ord.cmp(&a[0].exp, a[0].comp, &b[0].exp, b[0].comp));
    out
}

/// Remove elements whose leading term is divisible by another's.
pub fn minimalize<K: Field>(gens: Vec<Sparse<K>>) -> Vec<Sparse<K>> {
    let mut keep = vec![true; gens.len()];
    for i in 0..gens.len() {
        for j in 0..gens.len() {
            let same = gens[i][0].comp == gens[j][0].comp;
            if i != j && keep[j] && same && divides(&gens[j][0].exp, &gens[i][0].exp) && (gens[i][0].exp != gens[j][0].exp || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    gens.into_iter().zip(keep).filter(|(_, k)| *k).map(|(g, _)| g).collect()
}

/// Every S-element reduces to zero.
pub fn is_groebner<K: Field>(alg: &Algebra, ord: &MonomialOrder, basis: &[Sparse<K>]) -> bool {
    let refs: Vec<&Sparse<K>> = basis.iter().collect();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if basis[i][0].comp != basis[j][0].comp {
                continue;
            }
            let a = make_monic(basis[i].clone());
            let b = make_monic(basis[j].clone());
            let s = spoly(alg, ord, &a, &b);
            if !reduce(alg, ord, s, &refs, true).is_empty() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Rational;
    use smallvec::smallvec;

    fn t(e: &[u32], c: i64) -> Term<Rational> {
        Term { exp: e.iter().copied().collect(), comp: 0, coeff: Rational::from_integer(c) }
    }

    #[test]
    fn textbook_basis() {
        // <x² - y, x³ - z> in Q[x,y,z], degrevlex
        let alg = Algebra::commutative(3);
        let ord = MonomialOrder::degrevlex(3);
        let g1 = vec![t(&[2, 0, 0], 1), t(&[0, 1, 0], -1)];
        let g2 = vec![t(&[3, 0, 0], 1), t(&[0, 0, 1], -1)];
        let (gb, _) = groebner(&alg, &ord, vec![g1, g2]);
        assert!(is_groebner(&alg, &ord, &gb));
        let xy_z = normalize(vec![t(&[1, 1, 0], 1), t(&[0, 0, 1], -1)], &ord);
        let y3_z2 = normalize(vec![t(&[0, 3, 0], 1), t(&[0, 0, 2], -1)], &ord);
        assert!(gb.contains(&xy_z));
        // under degrevlex y² − xz is in the basis, so y³ − z² only reduces to zero
        let refs: Vec<&Sparse<Rational>> = gb.iter().collect();
        assert!(reduce(&alg, &ord, y3_z2.clone(), &refs, true).is_empty());
        let lex = MonomialOrder::lex(3);
        let g1 = vec![t(&[2, 0, 0], 1), t(&[0, 1, 0], -1)];
        let g2 = vec![t(&[3, 0, 0], 1), t(&[0, 0, 1], -1)];
        let (gb, _) = groebner(&alg, &lex, vec![g1, g2]);
        assert!(gb.contains(&normalize(y3_z2, &lex)));
        assert!(gb.contains(&normalize(xy_z, &lex)));
    }

    #[test]
    fn weyl_basis() {
        // <x∂ + 1, ∂²> in the Weyl algebra on (x, ∂)
        let alg = Algebra::weyl(2, vec![(0, 1)], vec![]);
        let ord = MonomialOrder::degrevlex(2);
        check_admissible(&alg, &ord).unwrap();
        let (gb, _) = groebner(&alg, &ord, vec![vec![t(&[1, 1], 1), t(&[0, 0], 1)], vec![t(&[0, 2], 1)]]);
        assert!(is_groebner(&alg, &ord, &gb));
        let leads: Vec<Exp> = gb.iter().map(|g| g[0].exp.clone()).collect();
        let xd: Exp = smallvec![1, 1];
        let d2: Exp = smallvec![0, 2];
        let in_module = |e: &Exp| leads.iter().any(|l| divides(l, e));
        assert!(in_module(&xd) && in_module(&d2));
    }

    #[test]
    fn unit_ideal() {
        let alg = Algebra::commutative(2);
        let ord = MonomialOrder::degrevlex(2);
        let (gb, _) = groebner(&alg, &ord, vec![vec![t(&[1, 0], 1), t(&[0, 0], 1)], vec![t(&[1, 0], 1)]]);
        assert_eq!(gb, vec![vec![t(&[0, 0], 1)]]);
    }
}
