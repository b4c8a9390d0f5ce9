//! Small dense exact linear algebra over `BigRational`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rational = BigRational;

pub fn rat(v: i64) -> Rational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Row-reduces `m` in place and returns the pivot columns.
fn row_reduce(m: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                let (top, rest) = if i < r {
                    let (a, b) = m.split_at_mut(r);
                    (&b[0], &mut a[i])
                } else {
                    let (a, b) = m.split_at_mut(i);
                    (&a[r], &mut b[0])
                };
                for (x, y) in rest.iter_mut().zip(top.iter()) {
                    *x -= &factor * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<Rational>]) -> usize {
    let cols = m.first().map_or(0, |r| r.len());
    let mut work = m.to_vec();
    row_reduce(&mut work, cols).len()
}

/// Solves `sum_c x_c * columns[c] = target`. Returns `None` when the system is inconsistent
/// or the columns are linearly dependent.
pub fn solve_columns(columns: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let k = columns.len();
    let mut m: Vec<Vec<Rational>> = (0..target.len())
        .map(|i| {
            let mut row: Vec<Rational> = columns.iter().map(|c| c[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let pivots = row_reduce(&mut m, k + 1);
    if pivots.contains(&k) || pivots.len() != k {
        return None;
    }
    Some((0..k).map(|i| m[i][k].clone()).collect())
}

pub fn determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        for i in c + 1..n {
            if !a[i][c].is_zero() {
                let f = &a[i][c] / &a[c][c];
                let (top, rest) = a.split_at_mut(i);
                for (x, y) in rest[0][c..].iter_mut().zip(&top[c][c..]) {
                    *x -= &f * y;
                }
            }
        }
    }
    det
}

/// Inverse of a square matrix, if it exists.
pub fn inverse(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug, n);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Vertices of `{y : a_i . y <= b_i}` in `dim` dimensions by basis enumeration: every
/// feasible point where `dim` linearly independent constraints are tight.
pub fn polyhedron_vertices(a: &[Vec<Rational>], b: &[Rational], dim: usize) -> BTreeSet<Vec<Rational>> {
    let rows: BTreeSet<(Vec<Rational>, Rational)> = a.iter().cloned().zip(b.iter().cloned()).collect();
    let (a, b): (Vec<Vec<Rational>>, Vec<Rational>) = rows.into_iter().unzip();
    let mut out = BTreeSet::new();
    let mut chosen = Vec::with_capacity(dim);
    subsets(a.len(), dim, 0, &mut chosen, &mut |rows| {
        let mut m: Vec<Vec<Rational>> = rows
            .iter()
            .map(|&r| {
                let mut row = a[r].clone();
                row.push(b[r].clone());
                row
            })
            .collect();
        let pivots = row_reduce(&mut m, dim + 1);
        if pivots.len() != dim || pivots.contains(&dim) {
            return;
        }
        let y: Vec<Rational> = (0..dim).map(|i| m[i][dim].clone()).collect();
        let feasible = a.iter().zip(&b).all(|(row, bound)| dot(row, &y) <= *bound);
        if feasible {
            out.insert(y);
        }
    });
    out
}

fn subsets(n: usize, k: usize, start: usize, chosen: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if chosen.len() == k {
        f(chosen);
        return;
    }
    for i in start..n {
        if n - i < k - chosen.len() {
            break;
        }
        chosen.push(i);
        subsets(n, k, i + 1, chosen, f);
        chosen.pop();
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}
