//! Flat TOML sweep configuration.
//!
//! ```toml
//! name = "er-p-coarse"          # optional
//! family = "erdos_renyi"        # path | complete | dense_random | erdos_renyi
//!                               # | watts_strogatz | barabasi_albert
//! n_followers = 15              # every family except barabasi_albert
//! n_leaders = 1                 # default 1
//! p = 0.15                      # erdos_renyi edge / watts_strogatz rewiring probability
//! k = 2                         # watts_strogatz neighbours per side
//! m0 = 7                        # barabasi_albert seed clique
//! m = 3                         # barabasi_albert edges per new vertex
//! t = 8                         # barabasi_albert added vertices
//! directed = false              # path only
//! swept = "er_p"                # er_p | n_leaders | n_followers | ws_rewire_p
//!                               # | ws_k | ba_m | ba_leader_by_degree_rank | zoom_mu
//! grid = [0.05, 0.10, 0.15]     # explicit list, or:
//! grid_start = 0.05
//! grid_stop = 0.9
//! grid_step = 0.05
//! trials = 2000                 # default 2000
//! seed = 1                      # default 1
//! noise = 0.025                 # default 0.025
//! leader_rule = "random_uniform"  # | last_index | by_degree_rank
//! leader_rank = 1               # by_degree_rank only
//! ```
//!
//! The swept parameter's own key (e.g. `p` for `er_p`) may be omitted.

use serde::{Deserialize, Serialize};

use super::catalog::{DEFAULT_NOISE, DEFAULT_SEED, DEFAULT_TRIALS};
use super::scenario::{linear_grid, LeaderRule, Scenario, SweptParameter};
use crate::error::{Error, Result};
use crate::generators::GeneratorSpec;

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub family: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_followers: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_leaders: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m0: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub directed: Option<bool>,
    pub swept: SweptParameter,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid_start: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid_stop: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid_step: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub noise: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub leader_rule: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub leader_rank: Option<usize>,
}

impl SweepConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("flat config always serializes")
    }

    pub fn from_scenario(s: &Scenario) -> Self {
        let mut c = SweepConfig {
            name: Some(s.name.clone()),
            family: s.generator.family_name().to_string(),
            n_leaders: Some(s.n_leaders),
            swept: s.swept,
            grid: Some(s.grid.clone()),
            trials: Some(s.trials_per_point),
            seed: Some(s.base_seed),
            noise: Some(s.noise_amplitude),
            ..Default::default()
        };
        match s.generator {
            GeneratorSpec::Path { directed, .. } => c.directed = Some(directed),
            GeneratorSpec::ErdosRenyi { p, .. } => c.p = Some(p),
            GeneratorSpec::WattsStrogatz { k, p, .. } => {
                c.k = Some(k);
                c.p = Some(p);
            }
            GeneratorSpec::BarabasiAlbert { m0, m, t } => {
                c.m0 = Some(m0);
                c.m = Some(m);
                c.t = Some(t);
            }
            GeneratorSpec::Complete { .. } | GeneratorSpec::DenseRandom { .. } => {}
        }
        if !matches!(s.generator, GeneratorSpec::BarabasiAlbert { .. }) {
            c.n_followers = Some(s.n_followers());
        }
        match s.leader_rule {
            LeaderRule::RandomUniform => c.leader_rule = Some("random_uniform".into()),
            LeaderRule::LastIndex => c.leader_rule = Some("last_index".into()),
            LeaderRule::ByDegreeRank(r) => {
                c.leader_rule = Some("by_degree_rank".into());
                c.leader_rank = Some(r);
            }
        }
        c
    }

    pub fn into_scenario(self) -> Result<Scenario> {
        let missing = |key: &str| Error::Config(format!("missing `{key}` for family `{}`", self.family));
        let n_leaders = self.n_leaders.unwrap_or(1);
        let grid = match (&self.grid, self.grid_start, self.grid_stop, self.grid_step) {
            (Some(g), None, None, None) => g.clone(),
            (None, Some(a), Some(b), Some(s)) => linear_grid(a, b, s)?,
            _ => {
                return Err(Error::Config(
                    "give either `grid` or all of `grid_start`, `grid_stop`, `grid_step`".into(),
                ))
            }
        };
        // The swept key itself may be left out; fill it from the grid.
        let first = grid.first().copied().unwrap_or(0.0);
        let order = || -> Result<usize> {
            let nf = match (self.n_followers, self.swept) {
                (Some(n), _) => n,
                (None, SweptParameter::NFollowers) => first as usize,
                (None, _) => return Err(missing("n_followers")),
            };
            Ok(nf + n_leaders)
        };
        let p_or = |swept: SweptParameter| match (self.p, self.swept == swept) {
            (Some(p), _) => Ok(p),
            (None, true) => Ok(first),
            (None, false) => Err(missing("p")),
        };
        let generator = match self.family.as_str() {
            "path" => GeneratorSpec::Path {
                order: order()?,
                directed: self.directed.unwrap_or(false),
            },
            "complete" => GeneratorSpec::Complete { order: order()? },
            "dense_random" => GeneratorSpec::DenseRandom { order: order()? },
            "erdos_renyi" => GeneratorSpec::ErdosRenyi {
                order: order()?,
                p: p_or(SweptParameter::ErP)?,
            },
            "watts_strogatz" => GeneratorSpec::WattsStrogatz {
                order: order()?,
                k: match (self.k, self.swept) {
                    (Some(k), _) => k,
                    (None, SweptParameter::WsK) => first as usize,
                    (None, _) => return Err(missing("k")),
                },
                p: p_or(SweptParameter::WsRewireP)?,
            },
            "barabasi_albert" => GeneratorSpec::BarabasiAlbert {
                m0: self.m0.ok_or_else(|| missing("m0"))?,
                m: match (self.m, self.swept) {
                    (Some(m), _) => m,
                    (None, SweptParameter::BaM) => first as usize,
                    (None, _) => return Err(missing("m")),
                },
                t: self.t.ok_or_else(|| missing("t"))?,
            },
            other => return Err(Error::Config(format!("unknown family `{other}`"))),
        };
        let leader_rule = match self.leader_rule.as_deref().unwrap_or("random_uniform") {
            "random_uniform" => LeaderRule::RandomUniform,
            "last_index" => LeaderRule::LastIndex,
            "by_degree_rank" => LeaderRule::ByDegreeRank(self.leader_rank.unwrap_or(1)),
            other => return Err(Error::Config(format!("unknown leader rule `{other}`"))),
        };
        let scenario = Scenario {
            name: self.name.clone().unwrap_or_else(|| "custom".into()),
            description: format!("custom {} sweep of {}", self.family, self.swept.as_str()),
            generator,
            n_leaders,
            swept: self.swept,
            grid,
            trials_per_point: self.trials.unwrap_or(DEFAULT_TRIALS),
            leader_rule,
            noise_amplitude: self.noise.unwrap_or(DEFAULT_NOISE),
            base_seed: self.seed.unwrap_or(DEFAULT_SEED),
        };
        scenario.validate()?;
        Ok(scenario)
    }
}
