#![allow(dead_code)]

use std::path::PathBuf;

use flat_holonomy::affine::{all_words_pass, GroupSpec, DEFAULT_WORD_CAP};
use flat_holonomy::linalg::{Matrix, Scalar, Vector};
use flat_holonomy::search::{sample_generators_with, SampleParams, SEARCH_WORD_LENGTH};
use num_traits::Zero;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.json"))
}

/// Every signature with `1 ≤ n ≤ 8` and `s ≤ 4`.
pub fn signatures() -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for n in 1..=8usize {
        for s in 0..=n.min(4) {
            out.push((n - s, s));
        }
    }
    out
}

/// First `count` sampled specs (cycling through [`signatures`]) whose
/// generators and words up to the search depth pass the Wolf conditions.
pub fn valid_samples(count: usize, seed: u64) -> Vec<GroupSpec> {
    let sigs = signatures();
    let params = SampleParams::default();
    let mut out = Vec::with_capacity(count);
    let mut i = 0u64;
    while out.len() < count {
        let sig = sigs[i as usize % sigs.len()];
        let spec =
            sample_generators_with(sig, &params, seed.wrapping_mul(1_000_003).wrapping_add(i))
                .unwrap();
        if all_words_pass(&spec, SEARCH_WORD_LENGTH, DEFAULT_WORD_CAP).unwrap() {
            out.push(spec);
        }
        i += 1;
    }
    out
}

/// Rank by fraction-exact elimination, written without the library.
pub fn oracle_rank(rows: &[Vec<Scalar>]) -> usize {
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x /= &pivot;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let top = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&top) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    r
}

/// Null space of `rows` (as columns of unknowns), by reduced elimination.
pub fn oracle_null_space(rows: &[Vec<Scalar>], unknowns: usize) -> Vec<Vec<Scalar>> {
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..unknowns {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x /= &pivot;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let top = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&top) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..unknowns)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut z = vec![Scalar::zero(); unknowns];
            z[free] = Scalar::from_integer(1.into());
            for (row, &pc) in pivots.iter().enumerate() {
                z[pc] = -m[row][free].clone();
            }
            z
        })
        .collect()
}

/// Centralizer algebra by brute force: apply the three defining conditions
/// to each elementary unknown with matrix arithmetic, read the resulting
/// residual vectors as columns, and take the null space.
pub fn oracle_centralizer(spec: &GroupSpec) -> Vec<(Matrix, Vector)> {
    let n = spec.dim();
    let g = spec.form().gram();
    let unknowns = n * n + n;
    let unpack = |z: &[Scalar]| {
        let mut x = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                x.set(i, j, z[i * n + j].clone());
            }
        }
        (x, z[n * n..].to_vec())
    };
    let residual = |x: &Matrix, w: &[Scalar]| -> Vec<Scalar> {
        let mut out: Vec<Scalar> = (&(&x.transpose() * g) + &(g * x)).entries().to_vec();
        for gen in spec.generators() {
            let a = gen.nilpotent_part();
            out.extend((&(x * &a) - &(&a * x)).entries().iter().cloned());
            let xv = x.mul_vec(gen.translation());
            let aw = a.mul_vec(w);
            out.extend(xv.iter().zip(&aw).map(|(p, q)| p - q));
        }
        out
    };
    let columns: Vec<Vec<Scalar>> = (0..unknowns)
        .map(|t| {
            let mut z = vec![Scalar::zero(); unknowns];
            z[t] = Scalar::from_integer(1.into());
            let (x, w) = unpack(&z);
            residual(&x, &w)
        })
        .collect();
    let eqs = columns[0].len();
    let rows: Vec<Vec<Scalar>> = (0..eqs)
        .map(|e| columns.iter().map(|c| c[e].clone()).collect())
        .collect();
    oracle_null_space(&rows, unknowns)
        .iter()
        .map(|z| unpack(z))
        .collect()
}

pub fn oracle_orbit_dimension(spec: &GroupSpec, p: &[Scalar]) -> usize {
    let tangents: Vec<Vec<Scalar>> = oracle_centralizer(spec)
        .iter()
        .map(|(x, w)| x.mul_vec(p).iter().zip(w).map(|(a, b)| a + b).collect())
        .collect();
    oracle_rank(&tangents)
}
