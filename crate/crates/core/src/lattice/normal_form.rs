//! Smith and Hermite normal forms of integer matrices.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn new(data: Vec<Vec<BigInt>>) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix { rows, cols, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::new(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![vec![BigInt::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = BigInt::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i][j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i]
    }

    pub fn as_rows(&self) -> &[Vec<BigInt>] {
        &self.data
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::new((0..self.cols).map(|j| (0..self.rows).map(|i| self.data[i][j].clone()).collect()).collect())
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.data[i][k].is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i][j] += &self.data[i][k] * &rhs.data[k][j];
                }
            }
        }
        out
    }

    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        super::linalg::determinant(&self.data)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().flatten().all(Zero::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.data.swap(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for row in &mut self.data {
            row.swap(a, b);
        }
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for j in 0..self.cols {
            let v = &self.data[src][j] * k;
            self.data[dst][j] += v;
        }
    }

    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for row in &mut self.data {
            let v = &row[src] * k;
            row[dst] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.data[i] {
            *x = -&*x;
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.data {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// `u * original * v = diag(d)` padded with zeros to the shape of
/// `original`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub d: Vec<BigInt>,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub original: IntMatrix,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.d.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.original.rows(), self.original.cols());
        for (i, x) in self.d.iter().enumerate() {
            m.data[i][i] = x.clone();
        }
        m
    }

    /// Order of the cokernel `Z^cols / rowspace`, if finite.
    pub fn cokernel_order(&self) -> Option<BigInt> {
        if self.rank() < self.original.cols() {
            return None;
        }
        Some(self.d.iter().product())
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let (m, n) = (a.rows(), a.cols());
    let mut s = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    for t in 0..m.min(n) {
        // Smallest nonzero entry in the trailing block.
        let pivot = (t..m)
            .flat_map(|i| (t..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !s.data[i][j].is_zero())
            .min_by(|&(i, j), &(k, l)| s.data[i][j].abs().cmp(&s.data[k][l].abs()).then((i, j).cmp(&(k, l))));
        let Some((pi, pj)) = pivot else { break };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if s.data[i][t].is_zero() {
                    continue;
                }
                let q = s.data[i][t].div_floor(&s.data[t][t]);
                s.add_row(i, t, &-&q);
                u.add_row(i, t, &-&q);
                if !s.data[i][t].is_zero() {
                    s.swap_rows(t, i);
                    u.swap_rows(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..n {
                if s.data[t][j].is_zero() {
                    continue;
                }
                let q = s.data[t][j].div_floor(&s.data[t][t]);
                s.add_col(j, t, &-&q);
                v.add_col(j, t, &-&q);
                if !s.data[t][j].is_zero() {
                    s.swap_cols(t, j);
                    v.swap_cols(t, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Divisibility: fold any offending row into row t and retry.
            let offender = (t + 1..m)
                .find(|&i| (t + 1..n).any(|j| !(&s.data[i][j] % &s.data[t][t]).is_zero()));
            match offender {
                Some(i) => {
                    s.add_row(t, i, &BigInt::one());
                    u.add_row(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if s.data[t][t].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }

    let d = (0..m.min(n)).map(|i| s.data[i][i].clone()).collect();
    SnfResult { d, u, v, original: a.clone() }
}

/// Row-style Hermite normal form: `H = U A` for unimodular `U`, in echelon
/// form with positive pivots, entries above each pivot reduced into
/// `[0, pivot)`, and zero rows last. Canonical for the orbit of `A` under
/// left multiplication by `GL(n, Z)`.
pub fn hermite_normal_form(a: &IntMatrix) -> IntMatrix {
    let (m, n) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        // Euclid down the column until a single nonzero remains at row r.
        loop {
            let pivot = (r..m)
                .filter(|&i| !h.data[i][c].is_zero())
                .min_by(|&i, &k| h.data[i][c].abs().cmp(&h.data[k][c].abs()).then(i.cmp(&k)));
            let Some(p) = pivot else { break };
            h.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..m {
                if h.data[i][c].is_zero() {
                    continue;
                }
                let q = h.data[i][c].div_floor(&h.data[r][c]);
                h.add_row(i, r, &-&q);
                if !h.data[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h.data[r][c].is_zero() {
            continue;
        }
        if h.data[r][c].is_negative() {
            h.negate_row(r);
        }
        for i in 0..r {
            let q = h.data[i][c].div_floor(&h.data[r][c]);
            if !q.is_zero() {
                h.add_row(i, r, &-&q);
            }
        }
        r += 1;
    }
    h
}
