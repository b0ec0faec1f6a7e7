//! Dense linear-algebra kernels: singular values, condition numbers,
//! numerical rank, eigenvalue spectra and Krylov block sequences.
//!
//! Decompositions are delegated to `nalgebra` (Golub-Kahan SVD and a real
//! Schur decomposition); this module adds the sorting, tolerance and
//! extended-real conventions on top.

use nalgebra::{Complex, Schur};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::Matrix;

const MAX_SWEEPS_PER_DIM: usize = 1000;

/// Singular values in non-increasing order.
#[derive(Debug, Clone, PartialEq)]
pub struct SingularSpectrum {
    values: Vec<f64>,
}

impl SingularSpectrum {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn max(&self) -> f64 {
        self.values.first().copied().unwrap_or(0.0)
    }

    pub fn min(&self) -> f64 {
        self.values.last().copied().unwrap_or(0.0)
    }

    /// Count of values strictly above `rel_tol * max`.
    pub fn rank(&self, rel_tol: f64) -> usize {
        let max = self.max();
        if max == 0.0 {
            return 0;
        }
        let threshold = rel_tol * max;
        self.values.iter().filter(|&&s| s > threshold).count()
    }
}

/// Eigenvalues sorted by descending modulus. Conjugate pairs are adjacent,
/// positive imaginary part first.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenSpectrum {
    values: Vec<Complex<f64>>,
}

impl EigenSpectrum {
    pub fn values(&self) -> &[Complex<f64>] {
        &self.values
    }

    pub fn spectral_radius(&self) -> f64 {
        self.values.first().map_or(0.0, |z| z.norm())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

fn check_finite(m: &Matrix) -> Result<()> {
    if m.is_empty() {
        return Err(Error::EmptyMatrix);
    }
    for j in 0..m.ncols() {
        for i in 0..m.nrows() {
            if !m[(i, j)].is_finite() {
                return Err(Error::NonFinite { row: i, col: j });
            }
        }
    }
    Ok(())
}

fn check_square(m: &Matrix) -> Result<()> {
    if m.nrows() != m.ncols() {
        return Err(Error::NotSquare {
            rows: m.nrows(),
            cols: m.ncols(),
        });
    }
    Ok(())
}

/// Default relative rank tolerance: `max(rows, cols) * eps`.
pub fn default_rank_tolerance(m: &Matrix) -> f64 {
    m.nrows().max(m.ncols()) as f64 * f64::EPSILON
}

/// Column norms, sorted, when the columns are exactly pairwise orthogonal.
/// Those are then the singular values with no rounding at all.
fn orthogonal_column_norms(m: &Matrix) -> Option<Vec<f64>> {
    let cols = m.ncols();
    for j in 0..cols {
        for k in (j + 1)..cols {
            if m.column(j).dot(&m.column(k)) != 0.0 {
                return None;
            }
        }
    }
    let mut values: Vec<f64> = m.column_iter().map(|c| c.norm()).collect();
    values.sort_by(|a, b| b.total_cmp(a));
    values.truncate(m.nrows().min(cols));
    Some(values)
}

pub fn singular_values(m: &Matrix) -> Result<SingularSpectrum> {
    check_finite(m)?;
    if let Some(values) = orthogonal_column_norms(m) {
        return Ok(SingularSpectrum { values });
    }
    let max_iter = MAX_SWEEPS_PER_DIM * m.nrows().max(m.ncols());
    let svd = m
        .clone()
        .try_svd(false, false, f64::EPSILON, max_iter)
        .ok_or(Error::NoConvergence("singular value decomposition"))?;
    let mut values: Vec<f64> = svd.singular_values.iter().map(|s| s.abs()).collect();
    values.sort_by(|a, b| b.total_cmp(a));
    Ok(SingularSpectrum { values })
}

/// Number of singular values above `rel_tol * sigma_max`; `None` selects
/// [`default_rank_tolerance`].
pub fn numerical_rank(m: &Matrix, rel_tol: Option<f64>) -> Result<usize> {
    let tol = match rel_tol {
        Some(t) if !(t > 0.0) || !t.is_finite() => {
            return Err(Error::param(
                "rel_tol",
                format!("must be finite and positive, got {t}"),
            ))
        }
        Some(t) => t,
        None => default_rank_tolerance(m),
    };
    Ok(singular_values(m)?.rank(tol))
}

/// Spectral condition number `sigma_max / sigma_min` over the first
/// `min(rows, cols)` singular values. Returns `f64::INFINITY` when the
/// matrix is numerically rank deficient at the default tolerance.
pub fn cond2(m: &Matrix) -> Result<f64> {
    let sv = singular_values(m)?;
    Ok(cond_from_spectrum(&sv, m.nrows().min(m.ncols()), default_rank_tolerance(m)))
}

pub(crate) fn cond_from_spectrum(sv: &SingularSpectrum, full_rank: usize, rel_tol: f64) -> f64 {
    if sv.rank(rel_tol) < full_rank {
        f64::INFINITY
    } else {
        sv.max() / sv.min()
    }
}

fn inf_norm(m: &Matrix) -> f64 {
    m.row_iter()
        .map(|r| r.iter().map(|x| x.abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Infinity-norm condition number `||M||_inf * ||M^-1||_inf`, infinite
/// for numerically singular input.
pub fn cond_inf(m: &Matrix) -> Result<f64> {
    check_square(m)?;
    check_finite(m)?;
    if numerical_rank(m, None)? < m.nrows() {
        return Ok(f64::INFINITY);
    }
    match m.clone().try_inverse() {
        Some(inv) => Ok(inf_norm(m) * inf_norm(&inv)),
        None => Ok(f64::INFINITY),
    }
}

const SIMILARITY_RETRIES: u64 = 4;

fn schur_eigenvalues(m: Matrix) -> Option<Vec<Complex<f64>>> {
    let max_iter = MAX_SWEEPS_PER_DIM * m.nrows();
    let schur = Schur::try_new(m, f64::EPSILON, max_iter)?;
    Some(schur.complex_eigenvalues().iter().copied().collect())
}

fn random_orthogonal(n: usize, seed: u64) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = Matrix::from_fn(n, n, |_, _| rng.random_range(-1.0..1.0));
    g.qr().q()
}

/// All eigenvalues of a real square matrix, with multiplicity.
pub fn spectrum(m: &Matrix) -> Result<EigenSpectrum> {
    check_square(m)?;
    check_finite(m)?;
    let mut values = schur_eigenvalues(m.clone())
        .or_else(|| {
            // The QR iteration has no exceptional shifts and can cycle on
            // some sparse integer matrices. A fixed orthogonal similarity
            // breaks the cycle without changing the eigenvalues.
            (0..SIMILARITY_RETRIES).find_map(|k| {
                let q = random_orthogonal(m.nrows(), k);
                schur_eigenvalues(q.transpose() * m * &q)
            })
        })
        .ok_or(Error::NoConvergence("Schur decomposition"))?;
    values.sort_by(|a, b| {
        b.norm()
            .total_cmp(&a.norm())
            .then(b.re.total_cmp(&a.re))
            .then(b.im.total_cmp(&a.im))
    });
    Ok(EigenSpectrum { values })
}

/// `[B, AB, A^2 B, ...]` with `count` blocks, built by repeated
/// multiplication.
pub fn krylov_blocks(a: &Matrix, b: &Matrix, count: usize) -> Result<Vec<Matrix>> {
    check_square(a)?;
    if a.nrows() != b.nrows() {
        return Err(Error::DimensionMismatch(format!(
            "A is {}x{} but B has {} rows",
            a.nrows(),
            a.ncols(),
            b.nrows()
        )));
    }
    if count == 0 {
        return Err(Error::param("count", "must be at least 1"));
    }
    let mut blocks = Vec::with_capacity(count);
    blocks.push(b.clone());
    for k in 1..count {
        let next = a * &blocks[k - 1];
        blocks.push(next);
    }
    Ok(blocks)
}
