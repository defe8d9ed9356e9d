//! Dense exact linear algebra over the rationals and the integers.

use num_integer::Integer;
use num_traits::{One, Zero};

use super::scalar::{int, Scalar};

/// Reduced row echelon form. Returns the reduced rows (zero rows dropped) and pivot columns.
pub fn rref(rows: &[Vec<Scalar>]) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Scalar::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..ncols {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    rref(rows).1.len()
}

pub fn rank_int(rows: &[Vec<i64>]) -> usize {
    rank(&to_rational(rows))
}

pub fn to_rational(rows: &[Vec<i64>]) -> Vec<Vec<Scalar>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| int(x)).collect())
        .collect()
}

/// Whether `v` lies in the row span of `rows`.
pub fn in_span(rows: &[Vec<Scalar>], v: &[Scalar]) -> bool {
    let mut ext = rows.to_vec();
    ext.push(v.to_vec());
    rank(&ext) == rank(rows)
}

/// Exact inverse of a square matrix, or `None` if singular.
pub fn inverse(m: &[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> {
    let n = m.len();
    let aug: Vec<Vec<Scalar>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Scalar::one()
                } else {
                    Scalar::zero()
                }
            }));
            r
        })
        .collect();
    let (red, piv) = rref(&aug);
    if piv.len() < n || piv[n - 1] >= n {
        return None;
    }
    Some(red.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn det_int(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * det_int(&minor)
            })
            .sum(),
    }
}

/// Basis of the integer kernel `{x in Z^n : A x = 0}` via unimodular column operations.
/// The basis spans a saturated lattice.
pub fn integer_kernel(a: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = a.to_vec();
    // Columns of `u` track the unimodular transform applied to the columns of `m`.
    let mut u: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut p = 0;
    for row in 0..m.len() {
        if p == n {
            break;
        }
        loop {
            let nz: Vec<usize> = (p..n).filter(|&c| m[row][c] != 0).collect();
            if nz.len() <= 1 {
                if let Some(&c) = nz.first() {
                    swap_cols(&mut m, &mut u, p, c);
                    p += 1;
                }
                break;
            }
            // Combine the first two nonzero columns with an extended-gcd step.
            let (c1, c2) = (nz[0], nz[1]);
            let (x, y) = (m[row][c1], m[row][c2]);
            let eg = x.extended_gcd(&y);
            let (g, s, t) = (eg.gcd, eg.x, eg.y);
            let (xg, yg) = (x / g, y / g);
            // [c1 c2] <- [s*c1 + t*c2, -yg*c1 + xg*c2]; determinant s*xg + t*yg = 1.
            col_combine(&mut m, &mut u, c1, c2, s, t, -yg, xg);
        }
    }
    (p..n).map(|c| (0..n).map(|r| u[r][c]).collect()).collect()
}

fn swap_cols(m: &mut [Vec<i64>], u: &mut [Vec<i64>], a: usize, b: usize) {
    for r in m.iter_mut().chain(u.iter_mut()) {
        r.swap(a, b);
    }
}

#[allow(clippy::too_many_arguments)]
fn col_combine(
    m: &mut [Vec<i64>],
    u: &mut [Vec<i64>],
    c1: usize,
    c2: usize,
    a: i64,
    b: i64,
    c: i64,
    d: i64,
) {
    for r in m.iter_mut().chain(u.iter_mut()) {
        let (x, y) = (r[c1], r[c2]);
        r[c1] = a * x + b * y;
        r[c2] = c * x + d * y;
    }
}

/// Row-style Hermite normal form: upper echelon, positive pivots, entries above each
/// pivot reduced into `[0, pivot)`. Zero rows are dropped.
pub fn hermite_normal_form(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        loop {
            let nz: Vec<usize> = (r..m.len()).filter(|&i| m[i][c] != 0).collect();
            if nz.is_empty() {
                break;
            }
            let best = *nz.iter().min_by_key(|&&i| m[i][c].abs()).unwrap();
            m.swap(r, best);
            let mut done = true;
            for i in r + 1..m.len() {
                let q = Integer::div_floor(&m[i][c], &m[r][c]);
                if q != 0 {
                    for j in 0..ncols {
                        m[i][j] -= q * m[r][j];
                    }
                }
                if m[i][c] != 0 {
                    done = false;
                }
            }
            if done {
                if m[r][c] < 0 {
                    for x in m[r].iter_mut() {
                        *x = -*x;
                    }
                }
                for i in 0..r {
                    let q = Integer::div_floor(&m[i][c], &m[r][c]);
                    if q != 0 {
                        for j in 0..ncols {
                            m[i][j] -= q * m[r][j];
                        }
                    }
                }
                r += 1;
                break;
            }
        }
    }
    m.retain(|row| row.iter().any(|&x| x != 0));
    m
}

/// Integer basis (in HNF) of `span_Q(rows) ∩ Z^n`.
pub fn saturate(rows: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let perp = integer_kernel(rows, n);
    hermite_normal_form(&integer_kernel(&perp, n))
}
