//! Built-in scenarios: one per experiment of the original study.

use super::scenario::{linear_grid, LeaderRule, Scenario, SweptParameter};
use crate::error::{Error, Result};
use crate::generators::GeneratorSpec;

pub const DEFAULT_TRIALS: usize = 2000;
pub const DEFAULT_NOISE: f64 = 0.025;
pub const DEFAULT_SEED: u64 = 1;

fn grid(start: f64, stop: f64, step: f64) -> Vec<f64> {
    linear_grid(start, stop, step).expect("built-in grids are valid")
}

#[allow(clippy::too_many_arguments)]
fn scenario(
    name: &str,
    description: &str,
    generator: GeneratorSpec,
    n_leaders: usize,
    swept: SweptParameter,
    grid: Vec<f64>,
    leader_rule: LeaderRule,
) -> Scenario {
    Scenario {
        name: name.into(),
        description: description.into(),
        generator,
        n_leaders,
        swept,
        grid,
        trials_per_point: DEFAULT_TRIALS,
        leader_rule,
        noise_amplitude: DEFAULT_NOISE,
        base_seed: DEFAULT_SEED,
    }
}

pub fn builtin_scenarios() -> Vec<Scenario> {
    use SweptParameter::*;
    let er = |order| GeneratorSpec::ErdosRenyi { order, p: 0.15 };
    let ws = |order, k| GeneratorSpec::WattsStrogatz { order, k, p: 0.5 };
    let ba = |m| GeneratorSpec::BarabasiAlbert { m0: 7, m, t: 8 };
    let random = LeaderRule::RandomUniform;

    let mut zoom = scenario(
        "zoom",
        "dense random 8-node network, last vertex leads, zoom factor 1..4",
        GeneratorSpec::DenseRandom { order: 8 },
        1,
        ZoomMu,
        grid(1.0, 4.0, 0.1),
        LeaderRule::LastIndex,
    );
    zoom.trials_per_point = 100;
    zoom.noise_amplitude = 0.0;

    vec![
        scenario(
            "er-p",
            "E-R, 15 followers, 1 leader, edge probability 0..0.9",
            er(16),
            1,
            ErP,
            grid(0.0, 0.9, 0.05),
            random,
        ),
        scenario(
            "er-leaders",
            "E-R, p = 0.15, 15 followers, 1..15 leaders",
            er(16),
            1,
            NLeaders,
            grid(1.0, 15.0, 1.0),
            random,
        ),
        scenario(
            "er-followers",
            "E-R, p = 0.15, 1 leader, 5..105 followers",
            er(16),
            1,
            NFollowers,
            grid(5.0, 105.0, 1.0),
            random,
        ),
        scenario(
            "ws-p",
            "WS, K = 2, 16 followers, 1 leader, rewiring probability 0..0.9",
            ws(17, 2),
            1,
            WsRewireP,
            grid(0.0, 0.9, 0.05),
            random,
        ),
        scenario(
            "ws-leaders",
            "WS, K = 2, p = 0.5, 16 followers, 1..15 leaders",
            ws(17, 2),
            1,
            NLeaders,
            grid(1.0, 15.0, 1.0),
            random,
        ),
        scenario(
            "ws-followers",
            "WS, K = 2, p = 0.5, 1 leader, 5..85 followers",
            ws(17, 2),
            1,
            NFollowers,
            grid(5.0, 85.0, 1.0),
            random,
        ),
        scenario(
            "ws-k",
            "WS, p = 0.5, 30 followers, 1 leader, K = 2..15",
            ws(31, 2),
            1,
            WsK,
            grid(2.0, 15.0, 1.0),
            random,
        ),
        scenario(
            "ba-leader-degree",
            "BA, m0 = 7, m = 3, t = 8, single leader at degree rank 1..15",
            ba(3),
            1,
            BaLeaderByDegreeRank,
            grid(1.0, 15.0, 1.0),
            LeaderRule::ByDegreeRank(1),
        ),
        scenario(
            "ba-m",
            "BA, m0 = 7, t = 8, 1 leader, m = 1..6",
            ba(3),
            1,
            BaM,
            grid(1.0, 6.0, 1.0),
            random,
        ),
        zoom,
    ]
}

pub fn find_scenario(name: &str) -> Result<Scenario> {
    builtin_scenarios()
        .into_iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownScenario(name.to_string()))
}
