//! Scenario-driven Monte-Carlo sweeps: generate a topology, assign leaders,
//! perturb the weights, analyze, and aggregate over trials per grid value.

pub mod catalog;
pub mod config;
pub mod scenario;
pub mod seed;
pub mod sweep;
pub mod trend;

pub use catalog::{builtin_scenarios, find_scenario};
pub use config::SweepConfig;
pub use scenario::{linear_grid, LeaderRule, Scenario, SweptParameter, TrialSetup};
pub use sweep::{run_sweep, run_trial, SweepOptions, SweepResult, TrialAggregate, CSV_HEADER};
pub use trend::{spearman, trend_statistics, TrendStatistics};
