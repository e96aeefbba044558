//! Small exact linear-algebra kernels shared by the hull, the polar and the
//! worked example.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::LatticeVector;

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Rank of an integer matrix given by rows.
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let ncols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..a.len() {
            if a[i][c].is_zero() {
                continue;
            }
            let (pr, pc) = (a[r][c].clone(), a[i][c].clone());
            for j in c..ncols {
                let v = &a[i][j] * &pr - &a[r][j] * &pc;
                a[i][j] = v;
            }
        }
        r += 1;
        if r == a.len() {
            break;
        }
    }
    r
}

/// Dimension of the affine span of a point set (`-1` is reported as 0 for
/// the empty set, which callers never pass).
pub fn affine_rank(points: &[&LatticeVector]) -> usize {
    let Some((first, rest)) = points.split_first() else {
        return 0;
    };
    let diffs: Vec<Vec<BigInt>> = rest.iter().map(|p| (*p - *first).into_coords()).collect();
    rank(&diffs)
}

/// Normal vector of the hyperplane through `d` points of `Z^d`, as the
/// vector of signed maximal minors of the difference matrix. Zero when the
/// points are affinely dependent.
pub fn hyperplane_normal(points: &[&LatticeVector]) -> Vec<BigInt> {
    let d = points[0].dim();
    debug_assert_eq!(points.len(), d);
    let diffs: Vec<Vec<BigInt>> = points[1..].iter().map(|p| (*p - points[0]).into_coords()).collect();
    (0..d)
        .map(|i| {
            let minor: Vec<Vec<BigInt>> = diffs
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, x)| x.clone()).collect())
                .collect();
            let det = determinant(&minor);
            if i % 2 == 0 {
                det
            } else {
                -det
            }
        })
        .collect()
}

/// Solve `A x = b` over the rationals. Returns `None` unless the system is
/// consistent with a unique solution (full column rank).
pub fn solve_unique(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivot_row = 0;
    for c in 0..cols {
        let p = (pivot_row..rows).find(|&i| !m[i][c].is_zero())?;
        m.swap(pivot_row, p);
        let inv = m[pivot_row][c].recip();
        for x in m[pivot_row].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != pivot_row && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=cols {
                    let v = &m[pivot_row][j] * &f;
                    m[i][j] -= v;
                }
            }
        }
        pivot_row += 1;
    }
    // Remaining rows must read 0 = 0.
    if m[pivot_row..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    Some(m[..cols].iter().map(|row| row[cols].clone()).collect())
}

pub fn to_rational_matrix(m: &[Vec<BigInt>]) -> Vec<Vec<BigRational>> {
    m.iter()
        .map(|row| row.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect()
}
