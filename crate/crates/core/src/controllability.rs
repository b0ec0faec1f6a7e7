//! Controllability matrix, the condition-number index `kappa = 1 / cond(Psi)`
//! and the row-sum-ratio diagnostic for the infinity-norm condition number.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::network::LeaderPartition;
use crate::numerics::{self, EigenSpectrum};
use crate::Matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct AnalyzeOptions {
    /// Keep `Psi` in the report. Sweeps turn this off.
    pub retain_psi: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ControllabilityReport {
    pub n_followers: usize,
    pub n_leaders: usize,
    pub psi: Option<Matrix>,
    pub rank: usize,
    /// `f64::INFINITY` when `Psi` is rank deficient.
    pub cond: f64,
    pub kappa: f64,
    pub spectrum_ff: EigenSpectrum,
    pub spectral_radius: f64,
    pub exactly_controllable: bool,
}

/// `Psi = [A_fl, A_ff A_fl, ..., A_ff^(N_f - 1) A_fl]`, of shape
/// `N_f x (N_f * N_l)`.
pub fn controllability_matrix(p: &LeaderPartition) -> Matrix {
    let nf = p.n_followers();
    let nl = p.n_leaders();
    let blocks = numerics::krylov_blocks(p.a_ff(), p.a_fl(), nf)
        .expect("partition blocks have compatible shapes");
    let mut psi = Matrix::zeros(nf, nf * nl);
    for (k, block) in blocks.iter().enumerate() {
        psi.columns_mut(k * nl, nl).copy_from(block);
    }
    psi
}

pub fn analyze(p: &LeaderPartition) -> Result<ControllabilityReport> {
    analyze_with(
        p,
        AnalyzeOptions {
            retain_psi: true,
        },
    )
}

pub fn analyze_with(p: &LeaderPartition, opts: AnalyzeOptions) -> Result<ControllabilityReport> {
    let psi = controllability_matrix(p);
    let nf = p.n_followers();
    let sv = numerics::singular_values(&psi)?;
    let rank = sv.rank(numerics::default_rank_tolerance(&psi));
    let cond = numerics::cond_from_spectrum(&sv, nf, numerics::default_rank_tolerance(&psi));
    let spectrum_ff = numerics::spectrum(p.a_ff())?;
    Ok(ControllabilityReport {
        n_followers: nf,
        n_leaders: p.n_leaders(),
        psi: opts.retain_psi.then_some(psi),
        rank,
        cond,
        kappa: kappa_from_cond(cond),
        spectral_radius: spectrum_ff.spectral_radius(),
        spectrum_ff,
        exactly_controllable: rank == nf,
    })
}

fn kappa_from_cond(cond: f64) -> f64 {
    if cond.is_infinite() {
        0.0
    } else {
        1.0 / cond
    }
}

/// `1 / cond2(psi)`, zero when `psi` is rank deficient. Requires
/// `rows <= cols`, the shape every controllability matrix has.
pub fn kappa_of_matrix(psi: &Matrix) -> Result<f64> {
    if psi.nrows() > psi.ncols() {
        return Err(Error::DimensionMismatch(format!(
            "controllability matrix must not have more rows than columns, got {}x{}",
            psi.nrows(),
            psi.ncols()
        )));
    }
    Ok(kappa_from_cond(numerics::cond2(psi)?))
}

/// Compares `cond_inf(M)` with `gamma * N`, where `gamma` is the ratio of
/// the largest to the smallest absolute row sum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Lemma2Diagnostic {
    pub gamma: f64,
    pub bound: f64,
    pub cond_inf: f64,
    pub satisfied: bool,
}

pub fn lemma2_diagnostic(m: &Matrix) -> Result<Lemma2Diagnostic> {
    if m.nrows() != m.ncols() {
        return Err(Error::NotSquare {
            rows: m.nrows(),
            cols: m.ncols(),
        });
    }
    let sums: Vec<f64> = m
        .row_iter()
        .map(|r| r.iter().map(|x| x.abs()).sum())
        .collect();
    if let Some(row) = sums.iter().position(|&s| s == 0.0) {
        return Err(Error::ZeroRow { row });
    }
    let max = sums.iter().copied().fold(f64::MIN, f64::max);
    let min = sums.iter().copied().fold(f64::MAX, f64::min);
    let gamma = max / min;
    let bound = gamma * m.nrows() as f64;
    let cond_inf = numerics::cond_inf(m)?;
    Ok(Lemma2Diagnostic {
        gamma,
        bound,
        cond_inf,
        satisfied: cond_inf >= bound,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Lemma2Survey {
    pub order: usize,
    pub samples: usize,
    pub satisfied: usize,
    pub satisfied_rate: f64,
    pub seed: u64,
}

/// Runs [`lemma2_diagnostic`] on `samples` dense matrices with i.i.d.
/// `Uniform(0, 1)` entries. Sample `i` is drawn from a ChaCha8 stream seeded
/// with `seed + i`.
pub fn lemma2_survey(order: usize, samples: usize, seed: u64) -> Result<Lemma2Survey> {
    if order == 0 {
        return Err(Error::param("order", "must be at least 1"));
    }
    if samples == 0 {
        return Err(Error::param("samples", "must be at least 1"));
    }
    let mut satisfied = 0;
    for i in 0..samples {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64));
        let m = Matrix::from_fn(order, order, |_, _| rng.random::<f64>());
        if lemma2_diagnostic(&m)?.satisfied {
            satisfied += 1;
        }
    }
    Ok(Lemma2Survey {
        order,
        samples,
        satisfied,
        satisfied_rate: satisfied as f64 / samples as f64,
        seed,
    })
}

/// JSON rendering: `cond` is a number or the string `"inf"`; `kappa` is
/// always a number (exactly `0` when uncontrollable).
impl Serialize for ControllabilityReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Eig {
            re: f64,
            im: f64,
        }
        #[derive(Serialize)]
        #[serde(untagged)]
        enum Extended {
            Finite(f64),
            Text(&'static str),
        }
        let cond = if self.cond.is_finite() {
            Extended::Finite(self.cond)
        } else {
            Extended::Text("inf")
        };
        let eigenvalues: Vec<Eig> = self
            .spectrum_ff
            .values()
            .iter()
            .map(|z| Eig { re: z.re, im: z.im })
            .collect();
        let mut s = serializer.serialize_struct("ControllabilityReport", 8)?;
        s.serialize_field("n_followers", &self.n_followers)?;
        s.serialize_field("n_leaders", &self.n_leaders)?;
        s.serialize_field("rank", &self.rank)?;
        s.serialize_field("cond", &cond)?;
        s.serialize_field("kappa", &self.kappa)?;
        s.serialize_field("spectral_radius", &self.spectral_radius)?;
        s.serialize_field("eigenvalues", &eigenvalues)?;
        s.serialize_field("controllable", &self.exactly_controllable)?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::WeightedNetwork;

    #[test]
    fn lemma2_identity_is_a_counterexample() {
        for n in 2..6 {
            let d = lemma2_diagnostic(&Matrix::identity(n, n)).unwrap();
            assert_eq!(d.gamma, 1.0);
            assert_eq!(d.bound, n as f64);
            assert_eq!(d.cond_inf, 1.0);
            assert!(!d.satisfied);
        }
    }

    #[test]
    fn lemma2_diag_counterexample() {
        let m = Matrix::from_diagonal(&nalgebra::DVector::from_vec(vec![1.0, 10.0]));
        let d = lemma2_diagnostic(&m).unwrap();
        assert_eq!(d.gamma, 10.0);
        assert_eq!(d.bound, 20.0);
        assert!((d.cond_inf - 10.0).abs() < 1e-12);
        assert!(!d.satisfied);
    }

    #[test]
    fn lemma2_rejects_zero_row() {
        let m = Matrix::from_row_slice(2, 2, &[1.0, 2.0, 0.0, 0.0]);
        assert_eq!(lemma2_diagnostic(&m), Err(Error::ZeroRow { row: 1 }));
        assert!(lemma2_diagnostic(&Matrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn kappa_of_matrix_edge_cases() {
        assert_eq!(kappa_of_matrix(&Matrix::identity(3, 3)).unwrap(), 1.0);
        let repeated = Matrix::from_row_slice(3, 3, &[1.0, 1.0, 2.0, 3.0, 3.0, 5.0, 4.0, 4.0, 7.0]);
        assert_eq!(kappa_of_matrix(&repeated).unwrap(), 0.0);
        assert!(kappa_of_matrix(&Matrix::zeros(3, 2)).is_err());
    }

    #[test]
    fn report_json_shape() {
        let c5 = WeightedNetwork::new(
            Matrix::from_fn(5, 5, |i, j| if i == j { 0.0 } else { 1.0 }),
            false,
        )
        .unwrap();
        let r = analyze(&c5.partition(&[4]).unwrap()).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["cond"], "inf");
        assert_eq!(v["kappa"], 0.0);
        assert_eq!(v["rank"], 1);
        assert_eq!(v["controllable"], false);
        assert_eq!(v["n_followers"], 4);
        assert_eq!(v["eigenvalues"].as_array().unwrap().len(), 4);
        assert!(v["eigenvalues"][0]["re"].as_f64().unwrap() > 2.9);
    }

    #[test]
    fn psi_retention_is_optional() {
        let net = WeightedNetwork::new(Matrix::from_row_slice(2, 2, &[0.0, 1.0, 1.0, 0.0]), false)
            .unwrap();
        let p = net.partition(&[1]).unwrap();
        assert!(analyze(&p).unwrap().psi.is_some());
        assert!(analyze_with(&p, AnalyzeOptions::default()).unwrap().psi.is_none());
    }
}
