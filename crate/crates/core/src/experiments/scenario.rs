use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::GeneratorSpec;

/// The quantity a scenario varies along its grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweptParameter {
    #[default]
    ErP,
    NLeaders,
    NFollowers,
    WsRewireP,
    #[serde(rename = "ws_k")]
    WsK,
    BaM,
    BaLeaderByDegreeRank,
    ZoomMu,
}

impl SweptParameter {
    pub fn as_str(&self) -> &'static str {
        match self {
            SweptParameter::ErP => "er_p",
            SweptParameter::NLeaders => "n_leaders",
            SweptParameter::NFollowers => "n_followers",
            SweptParameter::WsRewireP => "ws_rewire_p",
            SweptParameter::WsK => "ws_k",
            SweptParameter::BaM => "ba_m",
            SweptParameter::BaLeaderByDegreeRank => "ba_leader_by_degree_rank",
            SweptParameter::ZoomMu => "zoom_mu",
        }
    }

    /// Parameters that leave the topology untouched. Trials along these
    /// reuse one network per trial index, so each trial traces a full curve.
    pub fn is_paired(&self) -> bool {
        matches!(
            self,
            SweptParameter::ZoomMu | SweptParameter::BaLeaderByDegreeRank
        )
    }

    fn is_integral(&self) -> bool {
        matches!(
            self,
            SweptParameter::NLeaders
                | SweptParameter::NFollowers
                | SweptParameter::WsK
                | SweptParameter::BaM
                | SweptParameter::BaLeaderByDegreeRank
        )
    }
}

/// How leaders are picked in each trial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LeaderRule {
    /// A uniformly random subset of the required size.
    RandomUniform,
    /// The highest-numbered vertices.
    LastIndex,
    /// The single vertex at this 1-based position of the degree ranking.
    ByDegreeRank(usize),
}

/// One Monte-Carlo experiment: a network family, a parameter grid and the
/// trial protocol applied at every grid value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    pub name: String,
    pub description: String,
    /// Template network. Its order is `N_f + N_l` at the base point.
    pub generator: GeneratorSpec,
    pub n_leaders: usize,
    pub swept: SweptParameter,
    pub grid: Vec<f64>,
    pub trials_per_point: usize,
    pub leader_rule: LeaderRule,
    pub noise_amplitude: f64,
    pub base_seed: u64,
}

/// Everything needed to run one trial at one grid value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialSetup {
    pub generator: GeneratorSpec,
    pub n_leaders: usize,
    pub leader_rule: LeaderRule,
    pub zoom: Option<f64>,
}

fn as_count(name: &'static str, value: f64) -> Result<usize> {
    if value.fract() != 0.0 || value < 0.0 || !value.is_finite() {
        return Err(Error::param(name, format!("expected a non-negative integer, got {value}")));
    }
    Ok(value as usize)
}

impl Scenario {
    pub fn n_followers(&self) -> usize {
        self.generator.order().saturating_sub(self.n_leaders)
    }

    pub fn validate(&self) -> Result<()> {
        if self.grid.is_empty() {
            return Err(Error::Config("grid is empty".into()));
        }
        let increasing = self.grid.windows(2).all(|w| w[0] < w[1]);
        let decreasing = self.grid.windows(2).all(|w| w[0] > w[1]);
        if !(increasing || decreasing) {
            return Err(Error::Config("grid must be strictly monotone".into()));
        }
        if self.trials_per_point == 0 {
            return Err(Error::Config("trials must be at least 1".into()));
        }
        if !(self.noise_amplitude >= 0.0) || !self.noise_amplitude.is_finite() {
            return Err(Error::Config(format!(
                "noise amplitude must be finite and non-negative, got {}",
                self.noise_amplitude
            )));
        }
        for &v in &self.grid {
            self.setup(v).map_err(|e| {
                Error::Config(format!("grid value {v} of `{}`: {e}", self.swept.as_str()))
            })?;
        }
        Ok(())
    }

    /// Substitutes `value` for the swept parameter and checks every
    /// precondition of the resulting trial.
    pub fn setup(&self, value: f64) -> Result<TrialSetup> {
        if !value.is_finite() {
            return Err(Error::param("grid", "values must be finite"));
        }
        if self.swept.is_integral() {
            as_count(self.swept.as_str(), value)?;
        }
        let mut generator = self.generator;
        let mut n_leaders = self.n_leaders;
        let mut leader_rule = self.leader_rule;
        let mut zoom = None;
        let wrong_family = || {
            Error::Config(format!(
                "`{}` cannot be swept for family `{}`",
                self.swept.as_str(),
                self.generator.family_name()
            ))
        };
        match self.swept {
            SweptParameter::ErP => match &mut generator {
                GeneratorSpec::ErdosRenyi { p, .. } => *p = value,
                _ => return Err(wrong_family()),
            },
            SweptParameter::WsRewireP => match &mut generator {
                GeneratorSpec::WattsStrogatz { p, .. } => *p = value,
                _ => return Err(wrong_family()),
            },
            SweptParameter::WsK => match &mut generator {
                GeneratorSpec::WattsStrogatz { k, .. } => *k = value as usize,
                _ => return Err(wrong_family()),
            },
            SweptParameter::BaM => match &mut generator {
                GeneratorSpec::BarabasiAlbert { m, .. } => *m = value as usize,
                _ => return Err(wrong_family()),
            },
            SweptParameter::NLeaders => {
                if matches!(generator, GeneratorSpec::BarabasiAlbert { .. }) {
                    return Err(wrong_family());
                }
                let nf = self.n_followers();
                n_leaders = value as usize;
                generator = generator.with_order(nf + n_leaders)?;
            }
            SweptParameter::NFollowers => {
                if matches!(generator, GeneratorSpec::BarabasiAlbert { .. }) {
                    return Err(wrong_family());
                }
                generator = generator.with_order(value as usize + n_leaders)?;
            }
            SweptParameter::BaLeaderByDegreeRank => {
                leader_rule = LeaderRule::ByDegreeRank(value as usize);
            }
            SweptParameter::ZoomMu => {
                if !(value > 0.0) {
                    return Err(Error::param("mu", format!("must be positive, got {value}")));
                }
                zoom = Some(value);
            }
        }
        generator.validate()?;
        let order = generator.order();
        if n_leaders == 0 {
            return Err(Error::EmptyLeaderSet);
        }
        if n_leaders >= order {
            return Err(Error::NoFollowers);
        }
        if let LeaderRule::ByDegreeRank(r) = leader_rule {
            if n_leaders != 1 {
                return Err(Error::param("n_leaders", "degree-rank leader rule needs exactly one leader"));
            }
            if r < 1 || r > order {
                return Err(Error::param(
                    "leader_rank",
                    format!("must lie in 1..={order}, got {r}"),
                ));
            }
        }
        Ok(TrialSetup {
            generator,
            n_leaders,
            leader_rule,
            zoom,
        })
    }
}

/// `start, start + step, ...` up to and including `stop` (within half a
/// step). Values are rounded to 10 decimals so that e.g. `0.15` prints as
/// such.
pub fn linear_grid(start: f64, stop: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0) || !start.is_finite() || !stop.is_finite() || !step.is_finite() {
        return Err(Error::Config(format!(
            "grid range needs finite bounds and a positive step, got {start}..{stop} step {step}"
        )));
    }
    if stop < start {
        return Err(Error::Config(format!("grid stop {stop} is below start {start}")));
    }
    let count = ((stop - start) / step + 0.5).floor() as usize + 1;
    Ok((0..count)
        .map(|i| {
            let v = start + i as f64 * step;
            format!("{v:.10}").parse().expect("formatted float parses")
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn er() -> Scenario {
        Scenario {
            name: "t".into(),
            description: String::new(),
            generator: GeneratorSpec::ErdosRenyi { order: 16, p: 0.15 },
            n_leaders: 1,
            swept: SweptParameter::ErP,
            grid: vec![0.1, 0.2],
            trials_per_point: 3,
            leader_rule: LeaderRule::RandomUniform,
            noise_amplitude: 0.025,
            base_seed: 1,
        }
    }

    #[test]
    fn grid_helper() {
        assert_eq!(linear_grid(0.0, 0.9, 0.05).unwrap().len(), 19);
        assert_eq!(linear_grid(0.0, 0.9, 0.05).unwrap()[3], 0.15);
        assert_eq!(linear_grid(5.0, 105.0, 1.0).unwrap().len(), 101);
        assert_eq!(linear_grid(1.0, 4.0, 0.1).unwrap().last(), Some(&4.0));
        assert!(linear_grid(1.0, 0.0, 0.1).is_err());
        assert!(linear_grid(0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn leader_sweep_keeps_followers() {
        let mut s = er();
        s.swept = SweptParameter::NLeaders;
        let setup = s.setup(4.0).unwrap();
        assert_eq!(setup.n_leaders, 4);
        assert_eq!(setup.generator.order(), 19);
        s.swept = SweptParameter::NFollowers;
        assert_eq!(s.setup(30.0).unwrap().generator.order(), 31);
    }

    #[test]
    fn validation_errors() {
        let mut s = er();
        s.grid = vec![0.2, 0.1, 0.3];
        assert!(s.validate().is_err());
        s.grid = vec![0.5, 1.5];
        assert!(s.validate().is_err());
        s.grid = vec![0.5];
        s.trials_per_point = 0;
        assert!(s.validate().is_err());
        let mut s = er();
        s.swept = SweptParameter::WsK;
        assert!(matches!(s.setup(2.0), Err(Error::Config(_))));
        s.swept = SweptParameter::NLeaders;
        assert!(s.setup(2.5).is_err());
        assert!(s.setup(0.0).is_err());
        let mut s = er();
        s.grid = vec![];
        assert!(s.validate().is_err());
    }
}
