//! Exact integer-arithmetic oracles shared by the test targets.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use netkappa::Matrix;

/// Rank by fraction-free Gaussian elimination (Bareiss). Every intermediate
/// value is an exact integer.
pub fn bareiss_rank(m: &[Vec<i64>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        for r in (rank + 1)..rows {
            for k in (c + 1)..cols {
                let v = &a[rank][c] * &a[r][k] - &a[r][c] * &a[rank][k];
                a[r][k] = v / &prev;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    rank
}

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 1 {
        return BigInt::from(m[0][0]);
    }
    let mut det = BigInt::zero();
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
            .collect();
        let term = BigInt::from(m[0][j]) * cofactor_det(&minor);
        if j % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

pub fn to_matrix(m: &[Vec<i64>]) -> Matrix {
    Matrix::from_fn(m.len(), m[0].len(), |i, j| m[i][j] as f64)
}

pub fn random_int_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    (0..rows)
        .map(|_| (0..cols).map(|_| rng.random_range(lo..=hi)).collect())
        .collect()
}

/// Integer matrix with rank at most `r`: a product of `rows x r` and
/// `r x cols` factors.
pub fn low_rank_int_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, r: usize) -> Vec<Vec<i64>> {
    let a = random_int_matrix(rng, rows, r, -3, 3);
    let b = random_int_matrix(rng, r, cols, -3, 3);
    (0..rows)
        .map(|i| (0..cols).map(|j| (0..r).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

pub fn random_integer_network(rng: &mut ChaCha8Rng) -> (Vec<Vec<i64>>, bool) {
    let n = rng.random_range(2..=8);
    let directed = rng.random_bool(0.5);
    let density = rng.random_range(0.2..0.8);
    let mut w = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j || (!directed && j < i) {
                continue;
            }
            if rng.random_bool(density) {
                let v = rng.random_range(-2..=2);
                w[i][j] = v;
                if !directed {
                    w[j][i] = v;
                }
            }
        }
    }
    (w, directed)
}

/// Exact `Psi` of the integer network, built with `i64` Krylov products.
pub fn exact_psi(w: &[Vec<i64>], leaders: &[usize]) -> Vec<Vec<i64>> {
    let n = w.len();
    let followers: Vec<usize> = (0..n).filter(|v| !leaders.contains(v)).collect();
    let nf = followers.len();
    let mut block: Vec<Vec<i64>> = followers
        .iter()
        .map(|&f| leaders.iter().map(|&l| w[f][l]).collect())
        .collect();
    let mut psi: Vec<Vec<i64>> = vec![Vec::new(); nf];
    for _ in 0..nf {
        for (row, b) in psi.iter_mut().zip(&block) {
            row.extend_from_slice(b);
        }
        block = (0..nf)
            .map(|i| {
                (0..leaders.len())
                    .map(|k| (0..nf).map(|j| w[followers[i]][followers[j]] * block[j][k]).sum())
                    .collect()
            })
            .collect();
    }
    psi
}
