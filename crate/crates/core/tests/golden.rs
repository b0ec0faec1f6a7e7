//! Worked examples with known answers.

use netkappa::numerics::{cond2, numerical_rank, singular_values};
use netkappa::{analyze, controllability_matrix, generators, kappa_of_matrix, Matrix};

/// The printed 7x7 controllability matrix of the random 8-node example,
/// entries as published (four decimals).
fn example3_psi() -> Matrix {
    #[rustfmt::skip]
    let rows = [
        0.1897, 0.8962, 2.7716, 8.6052, 27.0802, 84.4664, 264.5718,
        0.1934, 1.9397, 5.3306, 17.1429, 53.1950, 166.8824, 521.6511,
        0.6822, 1.0615, 3.9149, 12.0033, 37.6166, 117.6977, 368.1719,
        0.3028, 1.0436, 2.9809, 9.6179, 29.8652, 93.5949, 292.6930,
        0.5417, 1.1522, 3.9331, 11.9725, 37.7541, 117.8886, 368.9820,
        0.1509, 1.5067, 3.9574, 12.9025, 39.9819, 125.3981, 392.0307,
        0.6979, 1.0432, 4.1353, 12.2815, 38.9403, 121.4206, 380.1693,
    ];
    Matrix::from_row_slice(7, 7, &rows)
}

fn within_factor(value: f64, target: f64, factor: f64) -> bool {
    value >= target / factor && value <= target * factor
}

#[test]
fn directed_path_tail_leader() {
    let net = generators::path(5, true).unwrap();
    let p = net.partition(&[4]).unwrap();
    let mut superdiag = Matrix::zeros(4, 4);
    for i in 0..3 {
        superdiag[(i, i + 1)] = 1.0;
    }
    assert_eq!(p.a_ff(), &superdiag);
    assert_eq!(p.a_fl(), &Matrix::from_column_slice(4, 1, &[0.0, 0.0, 0.0, 1.0]));

    // Columns are e4, e3, e2, e1: the identity up to column order.
    let psi = controllability_matrix(&p);
    let mut exchange = Matrix::zeros(4, 4);
    for k in 0..4 {
        exchange[(3 - k, k)] = 1.0;
    }
    assert_eq!(psi, exchange);

    let r = analyze(&p).unwrap();
    assert_eq!(r.kappa, 1.0);
    assert_eq!(r.rank, 4);
    assert!(r.exactly_controllable);
}

#[test]
fn undirected_path_tail_leader() {
    let p = generators::path(5, false).unwrap().partition(&[4]).unwrap();
    #[rustfmt::skip]
    let printed = Matrix::from_row_slice(4, 4, &[
        0.0, 0.0, 0.0, 1.0,
        0.0, 0.0, 1.0, 0.0,
        0.0, 1.0, 0.0, 2.0,
        1.0, 0.0, 1.0, 0.0,
    ]);
    assert_eq!(controllability_matrix(&p), printed);
    let r = analyze(&p).unwrap();
    assert!((r.cond - 5.8284).abs() < 1e-3, "{}", r.cond);
    assert!((r.kappa - 0.1716).abs() < 1e-3, "{}", r.kappa);
    assert!((r.cond - (3.0 + 2.0 * 2f64.sqrt())).abs() < 1e-10);
}

#[test]
fn complete_five_is_uncontrollable() {
    let net = generators::complete(5).unwrap();
    let p = net.partition(&[4]).unwrap();
    assert_eq!(p.a_fl(), &Matrix::from_element(4, 1, 1.0));
    assert_eq!(p.a_ff(), &Matrix::from_fn(4, 4, |i, j| if i == j { 0.0 } else { 1.0 }));

    let psi = controllability_matrix(&p);
    for i in 0..4 {
        assert_eq!(psi.row(i).iter().copied().collect::<Vec<_>>(), vec![1.0, 3.0, 9.0, 27.0]);
    }
    assert_eq!(numerical_rank(&psi, None).unwrap(), 1);
    assert_eq!(cond2(&psi).unwrap(), f64::INFINITY);

    let r = analyze(&p).unwrap();
    assert_eq!(r.rank, 1);
    assert_eq!(r.kappa, 0.0);
    assert!(!r.exactly_controllable);
}

#[test]
fn printed_random_example_matrix() {
    let psi = example3_psi();
    let kappa = kappa_of_matrix(&psi).unwrap();
    let cond = cond2(&psi).unwrap();
    assert!(within_factor(kappa, 6.6335e-7, 2.0), "kappa {kappa:e}");
    assert!(within_factor(cond, 1.5075e6, 2.0), "cond {cond:e}");
    assert_eq!(numerical_rank(&psi, None).unwrap(), 7);
    let sv = singular_values(&psi).unwrap();
    assert!((sv.max() / sv.min() - cond).abs() <= 1e-9 * cond);
}

#[test]
fn small_matrix_examples() {
    let sv = singular_values(&Matrix::from_diagonal(&nalgebra::DVector::from_vec(vec![3.0, -4.0]))).unwrap();
    assert_eq!(sv.values(), &[4.0, 3.0]);
    assert_eq!(cond2(&Matrix::identity(5, 5)).unwrap(), 1.0);
    assert_eq!(kappa_of_matrix(&Matrix::identity(3, 3)).unwrap(), 1.0);
    let repeated = Matrix::from_row_slice(2, 3, &[1.0, 1.0, 0.0, 2.0, 2.0, 0.0]);
    assert_eq!(kappa_of_matrix(&repeated).unwrap(), 0.0);
}
