//! Unimodular-invariant keys for reflexive polytopes.
//!
//! The key has two parts. The first is the vertex–facet pairing matrix
//! `W[i][j] = <n_j, v_i> + c_j`, brought to a lexicographically maximal form
//! by permuting rows and columns. The second is the Hermite normal form of
//! the transposed vertex matrix, taken in a row order that attains that
//! maximum, minimized over all such orders. Equal keys imply equal column
//! spaces of the vertex matrices in matching orders, which is exactly
//! `GL(n, Z)`-equivalence.

use std::cmp::Ordering;

use num_bigint::BigInt;
use serde::Serialize;

use crate::lattice::{hermite_normal_form, IntMatrix, LatticePolytope};
use crate::reflexive::ReflexivePolytope;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    pub pairing: IntMatrix,
    pub basis: IntMatrix,
}

impl CanonicalKey {
    /// Compact text form: rows joined by `;`, the two parts by `|`.
    pub fn to_compact_string(&self) -> String {
        fn render(m: &IntMatrix) -> String {
            m.as_rows()
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
                .collect::<Vec<_>>()
                .join(";")
        }
        format!("{}|{}", render(&self.pairing), render(&self.basis))
    }
}

impl Serialize for CanonicalKey {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_compact_string())
    }
}

/// One branch of the row-order search: the rows chosen so far and the
/// current column order, split into blocks of columns that are still tied.
#[derive(Clone)]
struct State {
    rows: Vec<usize>,
    cols: Vec<usize>,
    blocks: Vec<usize>,
}

impl State {
    /// The next matrix row if `r` is appended, and the refined state.
    fn extend(&self, w: &[Vec<BigInt>], r: usize) -> (Vec<BigInt>, State) {
        let mut cols = Vec::with_capacity(self.cols.len());
        let mut blocks = Vec::with_capacity(self.cols.len());
        let mut start = 0;
        for &end in &self.blocks {
            let mut block = self.cols[start..end].to_vec();
            block.sort_by(|&a, &b| w[r][b].cmp(&w[r][a]).then(a.cmp(&b)));
            for (k, &c) in block.iter().enumerate() {
                if k > 0 && w[r][c] != w[r][block[k - 1]] {
                    blocks.push(cols.len());
                }
                cols.push(c);
            }
            blocks.push(cols.len());
            start = end;
        }
        let row = cols.iter().map(|&c| w[r][c].clone()).collect();
        let mut rows = self.rows.clone();
        rows.push(r);
        (row, State { rows, cols, blocks })
    }
}

fn pairing_matrix(p: &LatticePolytope) -> Vec<Vec<BigInt>> {
    p.vertices().iter().map(|v| p.facets().iter().map(|f| f.slack(v)).collect()).collect()
}

/// Lexicographically maximal pairing matrix together with every vertex order
/// attaining it.
fn maximal_orders(w: &[Vec<BigInt>]) -> (Vec<Vec<BigInt>>, Vec<Vec<usize>>) {
    let n = w.len();
    let m = w.first().map_or(0, Vec::len);
    let mut states = vec![State { rows: Vec::new(), cols: (0..m).collect(), blocks: vec![m] }];
    let mut matrix = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best: Option<Vec<BigInt>> = None;
        let mut next = Vec::new();
        for s in &states {
            for r in (0..n).filter(|r| !s.rows.contains(r)) {
                let (row, t) = s.extend(w, r);
                match best.as_ref().map(|b| row.cmp(b)) {
                    None | Some(Ordering::Greater) => {
                        best = Some(row);
                        next = vec![t];
                    }
                    Some(Ordering::Equal) => next.push(t),
                    Some(Ordering::Less) => {}
                }
            }
        }
        matrix.push(best.expect("polytope has vertices"));
        states = next;
    }
    (matrix, states.into_iter().map(|s| s.rows).collect())
}

pub fn canonical_form(p: &ReflexivePolytope) -> CanonicalKey {
    let poly = p.polytope();
    let (pairing, orders) = maximal_orders(&pairing_matrix(poly));
    let basis = orders
        .iter()
        .map(|order| {
            let d = poly.ambient_dim();
            let vt: Vec<Vec<BigInt>> =
                (0..d).map(|k| order.iter().map(|&i| poly.vertices()[i].coords()[k].clone()).collect()).collect();
            hermite_normal_form(&IntMatrix::new(vt))
        })
        .min()
        .expect("at least one maximal order");
    CanonicalKey { pairing: IntMatrix::new(pairing), basis }
}
