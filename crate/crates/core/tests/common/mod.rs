//! Shared fixtures and brute-force oracles for the integration tests.

#![allow(dead_code)]

use std::collections::BTreeMap;

use toric_mirror::lattice::LatticePolytope;
use toric_mirror::reflexive::ReflexivePolytope;

pub fn rp(points: &[&[i64]]) -> ReflexivePolytope {
    ReflexivePolytope::from_i64(points).unwrap()
}

pub fn quintic_fan() -> ReflexivePolytope {
    rp(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[-1, -1, -1, -1]])
}

pub fn octic_fan() -> ReflexivePolytope {
    rp(&[&[-1, -2, -2, -2], &[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]])
}

pub fn sextic_fan() -> ReflexivePolytope {
    rp(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[-1, -1, -1, -2]])
}

pub fn tesseract() -> ReflexivePolytope {
    let pts: Vec<Vec<i64>> =
        (0..16).map(|m: i32| (0..4).map(|b| if m >> b & 1 == 1 { 1 } else { -1 }).collect()).collect();
    let refs: Vec<&[i64]> = pts.iter().map(Vec::as_slice).collect();
    rp(&refs)
}

/// Named 4D reflexive examples: fan-side polytopes and their polars.
pub fn examples_4d() -> Vec<(String, ReflexivePolytope)> {
    let mut out = Vec::new();
    for (name, p) in [("quintic", quintic_fan()), ("octic", octic_fan()), ("sextic", sextic_fan()), ("tesseract", tesseract())] {
        out.push((format!("{name}-polar"), p.polar()));
        out.push((name.to_string(), p));
    }
    out
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let n = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..a.len()).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, p);
        for i in r + 1..a.len() {
            let (f, g) = (a[i][c], a[r][c]);
            for j in 0..n {
                a[i][j] = a[i][j] * g - a[r][j] * f;
            }
            let gcd = a[i].iter().fold(0i128, |x, &y| num_integer::gcd(x, y));
            if gcd > 1 {
                a[i].iter_mut().for_each(|x| *x /= gcd);
            }
        }
        r += 1;
    }
    r
}

/// Lattice points of `{x : <n, x> >= -1 for n in normals}` inside
/// `[-bound, bound]^d`, asserting that none touch the box boundary.
fn points_of(normals: &[Vec<i64>], d: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut x = vec![-bound; d];
    loop {
        if normals.iter().all(|n| dot(n, &x) >= -1) {
            assert!(x.iter().all(|c| c.abs() < bound), "box too small");
            out.push(x.clone());
        }
        let mut k = 0;
        while k < d {
            if x[k] < bound {
                x[k] += 1;
                break;
            }
            x[k] = -bound;
            k += 1;
        }
        if k == d {
            return out;
        }
    }
}

#[derive(Debug, PartialEq, Eq)]
pub struct BruteHodge {
    pub h11: i64,
    pub h21: i64,
    pub l_newton: usize,
    pub l_fan: usize,
    pub facet_sum_newton: usize,
    pub facet_sum_fan: usize,
    pub codim2_newton: usize,
    pub codim2_fan: usize,
}

struct Side {
    points: usize,
    /// Tight-set -> number of lattice points with exactly that tight set.
    by_tight: BTreeMap<Vec<usize>, usize>,
    vertices: Vec<Vec<i64>>,
}

fn side(normals: &[Vec<i64>], d: usize, bound: i64) -> Side {
    let pts = points_of(normals, d, bound);
    let mut by_tight = BTreeMap::new();
    let mut vertices = Vec::new();
    for x in &pts {
        let tight: Vec<usize> = (0..normals.len()).filter(|&i| dot(&normals[i], x) == -1).collect();
        let rows: Vec<Vec<i64>> = tight.iter().map(|&i| normals[i].clone()).collect();
        if rank(&rows) == d {
            vertices.push(x.clone());
        }
        *by_tight.entry(tight).or_insert(0) += 1;
    }
    Side { points: pts.len(), by_tight, vertices }
}

fn affine_dim(pts: &[&Vec<i64>]) -> usize {
    let diffs: Vec<Vec<i64>> = pts[1..].iter().map(|p| p.iter().zip(pts[0]).map(|(a, b)| a - b).collect()).collect();
    rank(&diffs)
}

/// Sums of the Hodge formula computed from H-descriptions alone:
/// `N = {x : <v, x> >= -1, v in fan_vertices}` is the Newton polytope, its
/// vertices are the lattice points where the tight normals have full rank,
/// and the fan polytope's points come from `{y : <m, y> >= -1}` over those
/// vertices. Faces are identified by their sets of tight inequalities.
pub fn brute_hodge(fan_vertices: &[Vec<i64>], bound: i64) -> BruteHodge {
    let d = fan_vertices[0].len();
    let newton = side(fan_vertices, d, bound);
    let fan = side(&newton.vertices, d, bound);
    // Facet j of the fan side is indexed by Newton vertex j and vice versa.
    let terms = |a: &Side, a_normals: &[Vec<i64>], b: &Side, b_normals: &[Vec<i64>]| -> (usize, usize) {
        let mut facet_sum = 0;
        let mut codim2 = 0;
        for (tight, &count) in &a.by_tight {
            if tight.is_empty() {
                continue;
            }
            // Vertices of `a` lying on every tight facet.
            let verts: Vec<&Vec<i64>> =
                a.vertices.iter().filter(|v| tight.iter().all(|&i| dot(&a_normals[i], v) == -1)).collect();
            match affine_dim(&verts) {
                3 => facet_sum += count,
                2 => {
                    // Dual edge: conv of the tight normals, whose interior
                    // points are tight exactly on the face's vertices.
                    let dual: Vec<usize> = (0..b_normals.len()).filter(|&j| verts.contains(&&b_normals[j])).collect();
                    codim2 += count * b.by_tight.get(&dual).copied().unwrap_or(0);
                }
                _ => {}
            }
        }
        (facet_sum, codim2)
    };
    let (facet_sum_newton, codim2_newton) = terms(&newton, fan_vertices, &fan, &newton.vertices);
    let (facet_sum_fan, codim2_fan) = terms(&fan, &newton.vertices, &newton, fan_vertices);
    let h21 = newton.points as i64 - 5 - facet_sum_newton as i64 + codim2_newton as i64;
    let h11 = fan.points as i64 - 5 - facet_sum_fan as i64 + codim2_fan as i64;
    BruteHodge {
        h11,
        h21,
        l_newton: newton.points,
        l_fan: fan.points,
        facet_sum_newton,
        facet_sum_fan,
        codim2_newton,
        codim2_fan,
    }
}

pub fn vertices_i64(p: &LatticePolytope) -> Vec<Vec<i64>> {
    p.vertices().iter().map(|v| v.to_i64().unwrap()).collect()
}
