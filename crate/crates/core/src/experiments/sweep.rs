use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rand::seq::index::sample;
use rayon::prelude::*;
use serde::Serialize;

use super::scenario::{LeaderRule, Scenario, TrialSetup};
use super::seed;
use crate::controllability::{analyze_with, AnalyzeOptions, ControllabilityReport};
use crate::error::{Error, Result};
use crate::generators::degree_sorted_vertices;

/// Aggregate over all trials at one grid value. The log statistics cover
/// controllable trials only and are `None` when there are none.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialAggregate {
    pub parameter_value: f64,
    pub mean_kappa: f64,
    pub mean_log10_kappa: Option<f64>,
    pub std_log10_kappa: Option<f64>,
    pub n_uncontrollable: usize,
    pub n_trials: usize,
    /// Smallest and largest single-trial kappa. Not written to CSV.
    pub min_kappa: f64,
    pub max_kappa: f64,
}

impl TrialAggregate {
    /// Aggregates in slice order so results do not depend on scheduling.
    pub fn from_kappas(parameter_value: f64, kappas: &[f64]) -> Self {
        let n_trials = kappas.len();
        let mean_kappa = kappas.iter().sum::<f64>() / n_trials as f64;
        let logs: Vec<f64> = kappas
            .iter()
            .filter(|&&k| k > 0.0)
            .map(|k| k.log10())
            .collect();
        let n_uncontrollable = n_trials - logs.len();
        let (mean_log10_kappa, std_log10_kappa) = match logs.len() {
            0 => (None, None),
            1 => (Some(logs[0]), Some(0.0)),
            n => {
                let mean = logs.iter().sum::<f64>() / n as f64;
                let var = logs.iter().map(|l| (l - mean).powi(2)).sum::<f64>() / (n - 1) as f64;
                (Some(mean), Some(var.sqrt()))
            }
        };
        Self {
            parameter_value,
            min_kappa: kappas.iter().copied().fold(f64::INFINITY, f64::min),
            max_kappa: kappas.iter().copied().fold(f64::NEG_INFINITY, f64::max),
            mean_kappa,
            mean_log10_kappa,
            std_log10_kappa,
            n_uncontrollable,
            n_trials,
        }
    }

    pub fn n_controllable(&self) -> usize {
        self.n_trials - self.n_uncontrollable
    }

    /// Standard error of `mean_log10_kappa`.
    pub fn std_error_log10(&self) -> Option<f64> {
        self.std_log10_kappa
            .map(|s| s / (self.n_controllable() as f64).sqrt())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    /// Worker threads; `1` runs serially, `0` uses every core.
    pub parallelism: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self { parallelism: 1 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub scenario: Scenario,
    pub points: Vec<TrialAggregate>,
    pub elapsed: Duration,
}

pub const CSV_HEADER: &str =
    "param,mean_kappa,mean_log10_kappa,std_log10_kappa,n_uncontrollable,n_trials";

/// Written in place of a log statistic at grid points where every trial
/// was uncontrollable.
pub const ABSENT: &str = "NA";

impl SweepResult {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        let opt = |v: Option<f64>| v.map_or_else(|| ABSENT.to_string(), |x| format!("{x:.15e}"));
        for p in &self.points {
            writeln!(
                out,
                "{},{:.15e},{},{},{},{}",
                p.parameter_value,
                p.mean_kappa,
                opt(p.mean_log10_kappa),
                opt(p.std_log10_kappa),
                p.n_uncontrollable,
                p.n_trials
            )
            .unwrap();
        }
        out
    }
}

fn choose_leaders<R: rand::Rng + ?Sized>(
    setup: &TrialSetup,
    net: &crate::network::WeightedNetwork,
    rng: &mut R,
) -> Vec<usize> {
    let n = net.order();
    match setup.leader_rule {
        LeaderRule::RandomUniform => sample(rng, n, setup.n_leaders).into_vec(),
        LeaderRule::LastIndex => ((n - setup.n_leaders)..n).collect(),
        LeaderRule::ByDegreeRank(r) => vec![degree_sorted_vertices(net)[r - 1]],
    }
}

/// One trial: generate the topology, pick leaders, perturb the weights,
/// optionally zoom, then analyze. Deterministic in
/// `(scenario.base_seed, parameter_value, trial_index)`.
pub fn run_trial(
    scenario: &Scenario,
    parameter_value: f64,
    trial_index: usize,
) -> Result<ControllabilityReport> {
    let setup = scenario.setup(parameter_value)?;
    run_setup(scenario, &setup, parameter_value, trial_index)
}

fn run_setup(
    scenario: &Scenario,
    setup: &TrialSetup,
    parameter_value: f64,
    trial_index: usize,
) -> Result<ControllabilityReport> {
    let value = (!scenario.swept.is_paired()).then_some(parameter_value);
    let mut rng = seed::trial_rng(scenario.base_seed, value, trial_index as u64);
    let topology = setup.generator.generate(&mut rng)?;
    let leaders = choose_leaders(setup, &topology, &mut rng);
    let mut net = topology.apply_noise(scenario.noise_amplitude, &mut rng)?;
    if let Some(mu) = setup.zoom {
        net = net.zoom(mu)?;
    }
    let partition = net.partition(&leaders)?;
    analyze_with(&partition, AnalyzeOptions::default())
}

/// Runs every trial of every grid point and aggregates per point. Output is
/// identical for every `parallelism` setting.
pub fn run_sweep(scenario: &Scenario, opts: &SweepOptions) -> Result<SweepResult> {
    scenario.validate()?;
    let start = Instant::now();
    let setups: Vec<TrialSetup> = scenario
        .grid
        .iter()
        .map(|&v| scenario.setup(v))
        .collect::<Result<_>>()?;
    let trials = scenario.trials_per_point;
    let total = setups.len() * trials;
    let job = |task: usize| -> Result<f64> {
        let (point, trial) = (task / trials, task % trials);
        run_setup(scenario, &setups[point], scenario.grid[point], trial).map(|r| r.kappa)
    };
    let kappas: Vec<f64> = match opts.parallelism {
        1 => (0..total).map(job).collect::<Result<_>>()?,
        0 => (0..total).into_par_iter().map(job).collect::<Result<_>>()?,
        n => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Config(format!("cannot start thread pool: {e}")))?
            .install(|| (0..total).into_par_iter().map(job).collect::<Result<_>>())?,
    };
    let points = scenario
        .grid
        .iter()
        .zip(kappas.chunks(trials))
        .map(|(&v, ks)| TrialAggregate::from_kappas(v, ks))
        .collect();
    Ok(SweepResult {
        scenario: scenario.clone(),
        points,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aggregate_statistics() {
        let a = TrialAggregate::from_kappas(0.5, &[0.1, 0.0, 0.001]);
        assert_eq!(a.n_trials, 3);
        assert_eq!(a.n_uncontrollable, 1);
        assert!((a.mean_kappa - 0.101 / 3.0).abs() < 1e-15);
        assert!((a.mean_log10_kappa.unwrap() + 2.0).abs() < 1e-12);
        assert!((a.std_log10_kappa.unwrap() - 2f64.sqrt()).abs() < 1e-12);

        let none = TrialAggregate::from_kappas(0.0, &[0.0, 0.0]);
        assert_eq!(none.mean_log10_kappa, None);
        assert_eq!(none.std_log10_kappa, None);
        assert_eq!(none.mean_kappa, 0.0);

        let one = TrialAggregate::from_kappas(1.0, &[0.01]);
        assert_eq!(one.mean_log10_kappa, Some(-2.0));
        assert_eq!(one.std_log10_kappa, Some(0.0));
    }
}
