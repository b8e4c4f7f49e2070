//! Normalized volume of `conv{0, a₁, …, aₙ}` by a placing triangulation.

#![allow(clippy::needless_range_loop)]

use std::collections::HashMap;

use crate::coeff::{Field, Rational};
use crate::linalg::{determinant, rank, to_rational};
use crate::{Error, Result};

type Point = Vec<Rational>;

fn diff(a: &Point, b: &Point) -> Point {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

/// Signed volume of the simplex `pts` (d+1 points in R^d), times d!.
fn simplex_det(pts: &[&Point]) -> Rational {
    let rows: Vec<Point> = pts[1..].iter().map(|p| diff(p, pts[0])).collect();
    determinant(&rows)
}

/// Sign of `q` relative to the hyperplane through the facet.
fn side(facet: &[usize], pts: &[Point], q: &Point) -> i32 {
    let mut v: Vec<&Point> = facet.iter().map(|&i| &pts[i]).collect();
    v.push(q);
    simplex_det(&v).signum()
}

/// Simplices (as point indices) of a placing triangulation of the
/// columns of `a` together with the origin, and the normalized volume.
pub fn triangulate(a: &[Vec<i64>]) -> Result<(Vec<Vec<usize>>, u64)> {
    let d = a.len();
    let n = a.first().map_or(0, |r| r.len());
    let mut pts: Vec<Point> = vec![vec![<Rational as Field>::zero(); d]];
    for j in 0..n {
        let p: Point = (0..d).map(|i| Rational::from_integer(a[i][j])).collect();
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    // initial simplex: greedily raise the rank of the edge vectors
    let mut base = vec![0];
    for i in 1..pts.len() {
        if base.len() == d + 1 {
            break;
        }
        let mut rows: Vec<Point> = base[1..].iter().map(|&b| pts[b].clone()).collect();
        rows.push(pts[i].clone());
        if rank(&rows) == rows.len() {
            base.push(i);
        }
    }
    if base.len() != d + 1 {
        return Err(Error::Degenerate("the points span a lower-dimensional polytope".into()));
    }
    let inv = Rational::from_integer(d as i64 + 1).inv()?;
    let interior: Point = (0..d).map(|k| base.iter().fold(<Rational as Field>::zero(), |s, &b| s.add(&pts[b][k])).mul(&inv)).collect();

    let mut simplices = vec![base.clone()];
    let mut boundary: Vec<Vec<usize>> = (0..=d).map(|skip| base.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &v)| v).collect()).collect();
    for i in 0..pts.len() {
        if base.contains(&i) {
            continue;
        }
        let p = &pts[i];
        let visible: Vec<bool> = boundary
            .iter()
            .map(|f| {
                let s = side(f, &pts, p);
                s != 0 && s != side(f, &pts, &interior)
            })
            .collect();
        if !visible.iter().any(|&v| v) {
            continue;
        }
        let mut ridges: HashMap<Vec<usize>, (usize, usize)> = HashMap::new();
        for (f, &vis) in boundary.iter().zip(&visible) {
            for skip in 0..f.len() {
                let mut r: Vec<usize> = f.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &v)| v).collect();
                r.sort_unstable();
                let e = ridges.entry(r).or_default();
                if vis {
                    e.0 += 1;
                } else {
                    e.1 += 1;
                }
            }
        }
        let mut next = Vec::new();
        for (f, &vis) in boundary.iter().zip(&visible) {
            if vis {
                let mut s = f.clone();
                s.push(i);
                simplices.push(s);
            } else {
                next.push(f.clone());
            }
        }
        let mut horizon: Vec<Vec<usize>> = ridges.into_iter().filter(|(_, (v, h))| *v == 1 && *h >= 1).map(|(r, _)| r).collect();
        horizon.sort();
        for mut r in horizon {
            r.push(i);
            next.push(r);
        }
        boundary = next;
    }
    let mut total = <Rational as Field>::zero();
    for s in &simplices {
        let v: Vec<&Point> = s.iter().map(|&k| &pts[k]).collect();
        total = total.add(&simplex_det(&v).abs());
    }
    let vol = total.to_i64().filter(|&v| v > 0).ok_or_else(|| Error::Degenerate("volume is not a positive integer".into()))?;
    Ok((simplices, vol as u64))
}

/// `d!` times the Euclidean volume of `conv{0, a₁, …, aₙ}`.
pub fn normalized_volume(a: &[Vec<i64>]) -> Result<u64> {
    if a.is_empty() || rank(&to_rational(a)) < a.len() {
        return Err(Error::Degenerate("matrix does not have full row rank".into()));
    }
    Ok(triangulate(a)?.1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_polytopes() {
        assert_eq!(normalized_volume(&[vec![1, 1, 1], vec![0, 1, 2]]).unwrap(), 2);
        assert_eq!(normalized_volume(&[vec![0, 1, 3], vec![4, 3, 2]]).unwrap(), 12);
        assert_eq!(normalized_volume(&[vec![3]]).unwrap(), 3);
        // unit square with the origin: 2! · 1
        assert_eq!(normalized_volume(&[vec![1, 0, 1], vec![0, 1, 1]]).unwrap(), 2);
        // unit cube: 3! · 1
        let cube = [vec![1, 0, 0, 1, 1, 0, 1], vec![0, 1, 0, 1, 0, 1, 1], vec![0, 0, 1, 0, 1, 1, 1]];
        assert_eq!(normalized_volume(&cube).unwrap(), 6);
        assert!(normalized_volume(&[vec![1, 2], vec![2, 4]]).is_err());
    }

    #[test]
    fn collinear_points_on_the_boundary() {
        // points along the x-axis, placed in an awkward order
        assert_eq!(normalized_volume(&[vec![1, 3, 2, 0], vec![0, 0, 0, 1]]).unwrap(), 3);
    }
}
