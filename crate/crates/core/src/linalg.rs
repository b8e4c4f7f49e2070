//! Exact linear algebra over Q and Z: elimination, lattice kernels,
//! Smith invariants and a small simplex solver.

// row operations read best with explicit indices
#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::coeff::{Field, Rational};

pub type RatMatrix = Vec<Vec<Rational>>;

pub fn to_rational(a: &[Vec<i64>]) -> RatMatrix {
    a.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x)).collect()).collect()
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(m: &mut RatMatrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x = x.mul(&inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let v = m[r][j].mul(&f);
                    m[i][j] = m[i][j].sub(&v);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &RatMatrix) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

/// Basis of the right kernel `{v : m·v = 0}`.
pub fn nullspace(m: &RatMatrix, cols: usize) -> Vec<Vec<Rational>> {
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut out = Vec::new();
    for &f in &free {
        let mut v = vec![<Rational as Field>::zero(); cols];
        v[f] = <Rational as Field>::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = a[r][f].neg();
        }
        out.push(v);
    }
    out
}

/// Whether `v` lies in the row span of `m`.
pub fn in_row_span(m: &RatMatrix, v: &[Rational]) -> bool {
    let mut a = m.clone();
    let r0 = rank(&a);
    a.push(v.to_vec());
    rank(&a) == r0
}

pub fn determinant(m: &RatMatrix) -> Rational {
    let n = m.len();
    let mut a = m.clone();
    let mut det = <Rational as Field>::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else { return <Rational as Field>::zero() };
        if p != c {
            a.swap(p, c);
            det = det.neg();
        }
        det = det.mul(&a[c][c]);
        let inv = a[c][c].inv().expect("nonzero");
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].mul(&inv);
            for j in c..n {
                let v = a[c][j].mul(&f);
                a[i][j] = a[i][j].sub(&v);
            }
        }
    }
    det
}

fn big(a: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

/// Z-basis of the integer kernel of `a` (d×n), via column Hermite
/// reduction with a tracked unimodular transform.
pub fn integer_kernel(a: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    let d = a.len();
    let n = a.first().map_or(0, |r| r.len());
    let mut m = big(a);
    let mut u: Vec<Vec<BigInt>> = (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect();
    // column operations act on m (d×n) and u (n×n, columns)
    let col_op = |m: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, i: usize, j: usize, a: &BigInt, b: &BigInt, c: &BigInt, dd: &BigInt| {
        // (col_i, col_j) <- (a·col_i + b·col_j, c·col_i + dd·col_j)
        for row in m.iter_mut().chain(u.iter_mut()) {
            let (x, y) = (row[i].clone(), row[j].clone());
            row[i] = a * &x + b * &y;
            row[j] = c * &x + dd * &y;
        }
    };
    let mut pc = 0;
    for r in 0..d {
        if pc == n {
            break;
        }
        for j in pc + 1..n {
            if m[r][j].is_zero() {
                continue;
            }
            if m[r][pc].is_zero() {
                for row in m.iter_mut().chain(u.iter_mut()) {
                    row.swap(pc, j);
                }
                continue;
            }
            let (x, y) = (m[r][pc].clone(), m[r][j].clone());
            let e = x.extended_gcd(&y);
            let g = e.gcd;
            // [x y]·[[s, -y/g],[t, x/g]] = [g, 0]
            let (s, t) = (e.x, e.y);
            let (yg, xg) = (&y / &g, &x / &g);
            col_op(&mut m, &mut u, pc, j, &s, &t, &(-yg), &xg);
        }
        if !m[r][pc].is_zero() {
            pc += 1;
        }
    }
    (pc..n).map(|j| u.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Invariant factors of an integer matrix (Smith normal form diagonal).
pub fn smith_invariants(a: &[Vec<i64>]) -> Vec<BigInt> {
    let mut m = big(a);
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pick the smallest nonzero entry in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !m[i][j].is_zero() && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = m[t][t].clone();
            let mut dirty = false;
            for i in t + 1..rows {
                let q = m[i][t].div_floor(&p);
                if !q.is_zero() {
                    for j in t..cols {
                        let v = &q * &m[t][j];
                        m[i][j] -= v;
                    }
                }
                if !m[i][t].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                let q = m[t][j].div_floor(&p);
                if !q.is_zero() {
                    for i in t..rows {
                        let v = &q * &m[i][t];
                        m[i][j] -= v;
                    }
                }
                if !m[t][j].is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                // divisibility of the rest of the block
                let bad = (t + 1..rows).flat_map(|i| (t + 1..cols).map(move |j| (i, j))).find(|&(i, j)| !(&m[i][j] % &p).is_zero());
                match bad {
                    Some((i, _)) => {
                        for j in t..cols {
                            let v = m[i][j].clone();
                            m[t][j] += v;
                        }
                        continue;
                    }
                    None => break,
                }
            }
            // move the smallest entry of row/column t to the pivot
            let mut best = (t, t);
            for i in t..rows {
                if !m[i][t].is_zero() && m[i][t].abs() < m[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if !m[t][j].is_zero() && m[t][j].abs() < m[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            m.swap(t, best.0);
            for row in m.iter_mut() {
                row.swap(t, best.1);
            }
        }
        out.push(m[t][t].abs());
        t += 1;
    }
    out
}

/// A point `y` with `m·y ≥ b`, or `None` if infeasible. Phase-one simplex
/// with Bland's rule over the rationals.
pub fn feasible_point(m: &RatMatrix, b: &[Rational]) -> Option<Vec<Rational>> {
    let rows = m.len();
    let d = m.first().map_or(0, |r| r.len());
    if rows == 0 {
        return Some(vec![<Rational as Field>::zero(); d]);
    }
    let zero = <Rational as Field>::zero;
    let one = <Rational as Field>::one;
    // columns: y+ (d), y- (d), surplus (rows), artificial (rows), rhs
    let n = 2 * d + 2 * rows;
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(rows);
    for i in 0..rows {
        let mut row = vec![zero(); n + 1];
        for j in 0..d {
            row[j] = m[i][j].clone();
            row[d + j] = m[i][j].neg();
        }
        row[2 * d + i] = one().neg();
        row[n] = b[i].clone();
        if b[i].signum() < 0 {
            for x in row.iter_mut() {
                *x = x.neg();
            }
        }
        row[2 * d + rows + i] = one();
        t.push(row);
    }
    let mut basis: Vec<usize> = (0..rows).map(|i| 2 * d + rows + i).collect();
    let mut obj = vec![zero(); n + 1];
    for j in (0..2 * d + rows).chain(std::iter::once(n)) {
        let mut s = zero();
        for row in &t {
            s = s.sub(&row[j]);
        }
        obj[j] = s;
    }
    while let Some(enter) = (0..n).find(|&j| obj[j].signum() < 0) {
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..rows {
            if t[i][enter].signum() > 0 {
                let ratio = t[i][n].div(&t[i][enter]).expect("positive");
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let (r, _) = leave?;
        let inv = t[r][enter].inv().expect("nonzero");
        for x in t[r].iter_mut() {
            *x = x.mul(&inv);
        }
        for i in 0..rows {
            if i != r && !t[i][enter].is_zero() {
                let f = t[i][enter].clone();
                for j in 0..=n {
                    let v = t[r][j].mul(&f);
                    t[i][j] = t[i][j].sub(&v);
                }
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for j in 0..=n {
                let v = t[r][j].mul(&f);
                obj[j] = obj[j].sub(&v);
            }
        }
        basis[r] = enter;
    }
    if !obj[n].is_zero() {
        return None;
    }
    let mut y = vec![zero(); d];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < d {
            y[bv] = y[bv].add(&t[i][n]);
        } else if bv < 2 * d {
            y[bv - d] = y[bv - d].sub(&t[i][n]);
        }
    }
    Some(y)
}

/// Least common multiple of the denominators.
pub fn denominator_lcm(v: &[Rational]) -> BigInt {
    v.iter().fold(BigInt::one(), |acc, q| acc.lcm(&q.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn kernel_of_twisted_cubic() {
        let a = vec![vec![1, 1, 1], vec![0, 1, 2]];
        let k = integer_kernel(&a);
        assert_eq!(k.len(), 1);
        let v: Vec<i64> = k[0].iter().map(|x| i64::try_from(x).unwrap()).collect();
        assert!(v == vec![1, -2, 1] || v == vec![-1, 2, -1]);
    }

    #[test]
    fn kernel_is_saturated() {
        // kernel of [2 4] is spanned by (-2, 1), not (-4, 2)
        let k = integer_kernel(&[vec![2, 4]]);
        assert_eq!(k.len(), 1);
        let v: Vec<i64> = k[0].iter().map(|x| i64::try_from(x).unwrap()).collect();
        assert!(v == vec![-2, 1] || v == vec![2, -1]);
    }

    #[test]
    fn smith() {
        let inv = smith_invariants(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        assert_eq!(inv, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        let inv = smith_invariants(&[vec![0, 1, 3], vec![4, 3, 2]]);
        assert_eq!(inv, vec![BigInt::from(1), BigInt::from(1)]);
    }

    #[test]
    fn lp() {
        // y1 + y2 >= 1, y1 - y2 >= 1, -y1 >= -5
        let m = vec![vec![q(1), q(1)], vec![q(1), q(-1)], vec![q(-1), q(0)]];
        let y = feasible_point(&m, &[q(1), q(1), q(-5)]).unwrap();
        for (row, b) in m.iter().zip([q(1), q(1), q(-5)]) {
            let s = row.iter().zip(&y).fold(q(0), |acc, (a, x)| acc.add(&a.mul(x)));
            assert!(s >= b);
        }
        // y >= 1 and -y >= 0 is infeasible
        assert!(feasible_point(&vec![vec![q(1)], vec![q(-1)]], &[q(1), q(0)]).is_none());
    }

    #[test]
    fn determinants_and_nullspace() {
        let m = to_rational(&[vec![2, 1], vec![1, 3]]);
        assert_eq!(determinant(&m), q(5));
        let ns = nullspace(&to_rational(&[vec![1, 1, 1], vec![0, 1, 2]]), 3);
        assert_eq!(ns, vec![vec![q(1), q(-2), q(1)]]);
    }
}
