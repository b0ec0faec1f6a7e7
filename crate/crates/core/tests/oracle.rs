//! Floating-point kernels checked against exact integer arithmetic.

mod common;

use common::{bareiss_rank, cofactor_det, exact_psi, low_rank_int_matrix, random_int_matrix, random_integer_network, to_matrix};
use nalgebra::DMatrix;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use netkappa::numerics::{numerical_rank, spectrum};
use netkappa::{analyze, controllability_matrix, Complex, Matrix, WeightedNetwork};

#[test]
fn bareiss_oracle_sanity() {
    assert_eq!(bareiss_rank(&[vec![1, 2], vec![2, 4]]), 1);
    assert_eq!(bareiss_rank(&[vec![0, 0], vec![0, 0]]), 0);
    assert_eq!(bareiss_rank(&[vec![0, 1], vec![1, 0]]), 2);
    assert_eq!(bareiss_rank(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]), 2);
    assert_eq!(cofactor_det(&[vec![1, 2], vec![3, 4]]), BigInt::from(-2));
}

#[test]
fn numerical_rank_matches_exact_rank() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut deficient = 0;
    for seed in 0..1500 {
        let m = if seed % 2 == 0 {
            random_int_matrix(&mut rng, 6, 6, -3, 3)
        } else {
            let r = rng.random_range(0..=6);
            low_rank_int_matrix(&mut rng, 6, 6, r)
        };
        let exact = bareiss_rank(&m);
        if exact < 6 {
            deficient += 1;
        }
        let numeric = numerical_rank(&to_matrix(&m), None).unwrap();
        assert_eq!(numeric, exact, "sample {seed}: {m:?}");
    }
    assert!(deficient > 300, "too few rank-deficient samples: {deficient}");
}

#[test]
fn numerical_rank_matches_exact_rank_rectangular() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for seed in 0..500 {
        let rows = rng.random_range(1..=8);
        let cols = rng.random_range(1..=8);
        let r = rng.random_range(0..=rows.min(cols));
        let m = low_rank_int_matrix(&mut rng, rows, cols, r);
        let exact = bareiss_rank(&m);
        assert_eq!(numerical_rank(&to_matrix(&m), None).unwrap(), exact, "sample {seed}: {m:?}");
    }
}

#[test]
fn exact_controllability_matches_exact_rank() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut controllable = 0;
    for sample in 0..1200 {
        let (w, directed) = random_integer_network(&mut rng);
        let n = w.len();
        let nl = rng.random_range(1..n.min(3));
        let leaders = rand::seq::index::sample(&mut rng, n, nl).into_vec();
        let net = WeightedNetwork::new(to_matrix(&w), directed).unwrap();
        let p = net.partition(&leaders).unwrap();

        let psi_exact = exact_psi(&w, &leaders);
        assert_eq!(controllability_matrix(&p), to_matrix(&psi_exact), "sample {sample}");
        let exact_rank = bareiss_rank(&psi_exact);
        let r = analyze(&p).unwrap_or_else(|e| panic!("{e}: {}", p.a_ff()));
        assert_eq!(r.rank, exact_rank, "sample {sample}: {w:?} leaders {leaders:?}");
        assert_eq!(r.exactly_controllable, exact_rank == p.n_followers());
        assert_eq!(r.kappa > 0.0, r.exactly_controllable);
        if r.exactly_controllable {
            controllable += 1;
        }
    }
    assert!(controllable > 200 && controllable < 1000, "{controllable}");
}

#[test]
fn eigenvalue_trace_and_determinant() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for sample in 0..300 {
        let n = rng.random_range(1..=6);
        let m = random_int_matrix(&mut rng, n, n, -4, 4);
        let a = to_matrix(&m);
        let s = spectrum(&a).unwrap();
        assert_eq!(s.len(), n);
        let scale = a.norm().max(1.0);
        let sum: Complex<f64> = s.values().iter().sum();
        assert!((sum.re - a.trace()).abs() <= 1e-8 * scale, "sample {sample}");
        assert!(sum.im.abs() <= 1e-8 * scale);

        let det: f64 = cofactor_det(&m).to_string().parse().unwrap();
        let prod: Complex<f64> = s.values().iter().product();
        let tol = 1e-8 * scale.powi(n as i32);
        assert!((prod.re - det).abs() <= tol, "sample {sample}: {} vs {det}", prod.re);
        assert!(prod.im.abs() <= tol);
    }
}

#[test]
fn eigenpairs_have_small_residuals() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for sample in 0..200 {
        let n = rng.random_range(2..=8);
        let a = Matrix::from_fn(n, n, |_, _| rng.random_range(-1.0..1.0));
        let s = spectrum(&a).unwrap();
        let ac: DMatrix<Complex<f64>> = a.map(|x| Complex::new(x, 0.0));
        for &lambda in s.values() {
            let shifted = &ac - DMatrix::<Complex<f64>>::identity(n, n) * lambda;
            let sv = shifted.singular_values();
            let sigma_min = sv.iter().copied().fold(f64::INFINITY, f64::min);
            assert!(sigma_min <= 1e-8 * a.norm(), "sample {sample}: {lambda}");
        }
        // Real input: the spectrum is closed under conjugation.
        for z in s.values() {
            assert!(s.values().iter().any(|w| (w - z.conj()).norm() < 1e-9));
        }
    }
}

#[test]
fn undirected_path_spectrum_matches_characteristic_roots() {
    let a = netkappa::generators::path(5, false).unwrap();
    let s = spectrum(a.weights()).unwrap();
    let mut got: Vec<f64> = s.values().iter().map(|z| z.re).collect();
    got.sort_by(f64::total_cmp);
    let r3 = 3f64.sqrt();
    let expected = [-r3, -1.0, 0.0, 1.0, r3];
    // Each expected value is a root of x^5 - 4x^3 + 3x.
    for x in expected {
        assert!((x.powi(5) - 4.0 * x.powi(3) + 3.0 * x).abs() < 1e-12);
    }
    for (g, e) in got.iter().zip(expected) {
        assert!((g - e).abs() < 1e-10, "{got:?}");
    }
    assert!(s.values().iter().all(|z| z.im.abs() < 1e-12));
}
