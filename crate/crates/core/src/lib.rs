//! Condition-number controllability of weighted leader-follower networks.
//!
//! A network `A` split into followers and leaders evolves as
//! `x' = A_ff x + A_fl u`. Its controllability matrix
//! `Psi = [A_fl, A_ff A_fl, ..., A_ff^(N_f - 1) A_fl]` has full row rank
//! exactly when the followers can be steered; `kappa = 1 / cond2(Psi)`
//! grades how far from losing that rank the network is, from 0
//! (uncontrollable) to 1.
//!
//! ```
//! use netkappa::{controllability, generators};
//!
//! let net = generators::path(5, false).unwrap();
//! let report = controllability::analyze(&net.partition(&[4]).unwrap()).unwrap();
//! assert!((report.kappa - 0.1716).abs() < 1e-3);
//! ```

pub mod controllability;
pub mod edgelist;
pub mod error;
pub mod experiments;
pub mod generators;
pub mod network;
pub mod numerics;

pub use nalgebra::Complex;

/// Dense real matrix used throughout the crate.
pub type Matrix = nalgebra::DMatrix<f64>;

pub use controllability::{
    analyze, analyze_with, controllability_matrix, kappa_of_matrix, lemma2_diagnostic,
    lemma2_survey, AnalyzeOptions, ControllabilityReport, Lemma2Diagnostic, Lemma2Survey,
};
pub use error::{Error, Result};
pub use generators::GeneratorSpec;
pub use network::{LeaderPartition, WeightedNetwork};
pub use numerics::{EigenSpectrum, SingularSpectrum};
