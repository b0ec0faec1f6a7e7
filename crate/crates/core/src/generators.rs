//! Seeded network constructors: path, complete, dense random, Erdős–Rényi,
//! Watts–Strogatz and Barabási–Albert. Edge weights are 1 except for
//! [`dense_random`]; noise is added separately with
//! [`WeightedNetwork::apply_noise`].

use rand::distr::Open01;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::network::WeightedNetwork;
use crate::Matrix;

/// A network family with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GeneratorSpec {
    Path { order: usize, directed: bool },
    Complete { order: usize },
    DenseRandom { order: usize },
    ErdosRenyi { order: usize, p: f64 },
    WattsStrogatz { order: usize, k: usize, p: f64 },
    BarabasiAlbert { m0: usize, m: usize, t: usize },
}

impl GeneratorSpec {
    pub fn family_name(&self) -> &'static str {
        match self {
            GeneratorSpec::Path { .. } => "path",
            GeneratorSpec::Complete { .. } => "complete",
            GeneratorSpec::DenseRandom { .. } => "dense_random",
            GeneratorSpec::ErdosRenyi { .. } => "erdos_renyi",
            GeneratorSpec::WattsStrogatz { .. } => "watts_strogatz",
            GeneratorSpec::BarabasiAlbert { .. } => "barabasi_albert",
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            GeneratorSpec::Path { order, .. }
            | GeneratorSpec::Complete { order }
            | GeneratorSpec::DenseRandom { order }
            | GeneratorSpec::ErdosRenyi { order, .. }
            | GeneratorSpec::WattsStrogatz { order, .. } => order,
            GeneratorSpec::BarabasiAlbert { m0, t, .. } => m0 + t,
        }
    }

    /// Same family with a different vertex count. Barabási–Albert networks
    /// get their order from `m0 + t`, so this fails for them.
    pub fn with_order(&self, new_order: usize) -> Result<Self> {
        let mut spec = *self;
        match &mut spec {
            GeneratorSpec::Path { order, .. }
            | GeneratorSpec::Complete { order }
            | GeneratorSpec::DenseRandom { order }
            | GeneratorSpec::ErdosRenyi { order, .. }
            | GeneratorSpec::WattsStrogatz { order, .. } => *order = new_order,
            GeneratorSpec::BarabasiAlbert { .. } => {
                return Err(Error::param(
                    "order",
                    "barabasi_albert order is fixed by m0 + t",
                ))
            }
        }
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let check_order = |order: usize| {
            if order < 2 {
                Err(Error::param("order", format!("must be at least 2, got {order}")))
            } else {
                Ok(())
            }
        };
        let check_p = |p: f64| {
            if (0.0..=1.0).contains(&p) {
                Ok(())
            } else {
                Err(Error::param("p", format!("must lie in [0, 1], got {p}")))
            }
        };
        match *self {
            GeneratorSpec::Path { order, .. }
            | GeneratorSpec::Complete { order }
            | GeneratorSpec::DenseRandom { order } => check_order(order),
            GeneratorSpec::ErdosRenyi { order, p } => {
                check_order(order)?;
                check_p(p)
            }
            GeneratorSpec::WattsStrogatz { order, k, p } => {
                check_order(order)?;
                check_p(p)?;
                if k < 1 || 2 * k >= order {
                    return Err(Error::param(
                        "k",
                        format!("need 1 <= k and 2k < order, got k = {k}, order = {order}"),
                    ));
                }
                Ok(())
            }
            GeneratorSpec::BarabasiAlbert { m0, m, .. } => {
                if m0 < 2 {
                    return Err(Error::param("m0", format!("must be at least 2, got {m0}")));
                }
                if m < 1 || m > m0 {
                    return Err(Error::param(
                        "m",
                        format!("need 1 <= m <= m0, got m = {m}, m0 = {m0}"),
                    ));
                }
                Ok(())
            }
        }
    }

    pub fn generate<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<WeightedNetwork> {
        self.validate()?;
        match *self {
            GeneratorSpec::Path { order, directed } => path(order, directed),
            GeneratorSpec::Complete { order } => complete(order),
            GeneratorSpec::DenseRandom { order } => dense_random(order, rng),
            GeneratorSpec::ErdosRenyi { order, p } => erdos_renyi(order, p, rng),
            GeneratorSpec::WattsStrogatz { order, k, p } => watts_strogatz(order, k, p, rng),
            GeneratorSpec::BarabasiAlbert { m0, m, t } => barabasi_albert(m0, m, t, rng),
        }
    }
}

fn from_edges(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<WeightedNetwork> {
    let mut w = Matrix::zeros(order, order);
    for (u, v) in edges {
        w[(u, v)] = 1.0;
        w[(v, u)] = 1.0;
    }
    WeightedNetwork::new(w, false)
}

fn require_order(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::param("order", format!("must be at least 2, got {n}")));
    }
    Ok(())
}

/// Path on `n` vertices. The directed variant has `weights[(i, i + 1)] = 1`,
/// so vertex `i + 1` drives vertex `i` and a leader at the tail reaches
/// every follower.
pub fn path(n: usize, directed: bool) -> Result<WeightedNetwork> {
    require_order(n)?;
    if directed {
        let mut w = Matrix::zeros(n, n);
        for i in 0..n - 1 {
            w[(i, i + 1)] = 1.0;
        }
        WeightedNetwork::new(w, true)
    } else {
        from_edges(n, (0..n - 1).map(|i| (i, i + 1)))
    }
}

pub fn complete(n: usize) -> Result<WeightedNetwork> {
    require_order(n)?;
    WeightedNetwork::new(
        Matrix::from_fn(n, n, |i, j| if i == j { 0.0 } else { 1.0 }),
        false,
    )
}

/// Directed network with every off-diagonal weight drawn i.i.d. from the
/// open interval (0, 1).
pub fn dense_random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<WeightedNetwork> {
    require_order(n)?;
    let mut w = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                w[(i, j)] = rng.sample(Open01);
            }
        }
    }
    WeightedNetwork::new(w, true)
}

pub fn erdos_renyi<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<WeightedNetwork> {
    GeneratorSpec::ErdosRenyi { order: n, p }.validate()?;
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    from_edges(n, edges)
}

pub fn watts_strogatz<R: Rng + ?Sized>(
    n: usize,
    k: usize,
    p: f64,
    rng: &mut R,
) -> Result<WeightedNetwork> {
    GeneratorSpec::WattsStrogatz { order: n, k, p }.validate()?;
    let (adj, _) = watts_strogatz_adjacency(n, k, p, rng);
    let mut w = Matrix::zeros(n, n);
    for (i, row) in adj.iter().enumerate() {
        for (j, &linked) in row.iter().enumerate() {
            if linked {
                w[(i, j)] = 1.0;
            }
        }
    }
    WeightedNetwork::new(w, false)
}

/// Ring lattice with `k` neighbours per side, then each lattice edge
/// `(i, i + j)` is visited for `j = 1..=k`, `i = 0..n` and with probability
/// `p` its far end is moved to a uniformly chosen vertex that is neither
/// `i` nor already adjacent to `i`. Returns the adjacency and the number of
/// edges actually rewired.
fn watts_strogatz_adjacency<R: Rng + ?Sized>(
    n: usize,
    k: usize,
    p: f64,
    rng: &mut R,
) -> (Vec<Vec<bool>>, usize) {
    let mut adj = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 1..=k {
            let v = (i + j) % n;
            adj[i][v] = true;
            adj[v][i] = true;
        }
    }
    let mut rewired = 0;
    let mut candidates = Vec::with_capacity(n);
    for j in 1..=k {
        for i in 0..n {
            let v = (i + j) % n;
            if !rng.random_bool(p) {
                continue;
            }
            // The lattice edge may already have been moved away from i.
            if !adj[i][v] {
                continue;
            }
            candidates.clear();
            candidates.extend((0..n).filter(|&w| w != i && !adj[i][w]));
            if candidates.is_empty() {
                continue;
            }
            let w = candidates[rng.random_range(0..candidates.len())];
            adj[i][v] = false;
            adj[v][i] = false;
            adj[i][w] = true;
            adj[w][i] = true;
            rewired += 1;
        }
    }
    (adj, rewired)
}

/// Preferential attachment grown from a complete graph on `m0` vertices.
/// Each of the `t` new vertices picks `m` distinct targets, sampled one at a
/// time with probability proportional to degree among those not yet picked.
pub fn barabasi_albert<R: Rng + ?Sized>(
    m0: usize,
    m: usize,
    t: usize,
    rng: &mut R,
) -> Result<WeightedNetwork> {
    GeneratorSpec::BarabasiAlbert { m0, m, t }.validate()?;
    let n = m0 + t;
    let mut degree = vec![0u64; n];
    let mut edges = Vec::with_capacity(m0 * (m0 - 1) / 2 + m * t);
    for i in 0..m0 {
        for j in (i + 1)..m0 {
            edges.push((i, j));
        }
        degree[i] = (m0 - 1) as u64;
    }
    let mut weight = Vec::with_capacity(n);
    for v in m0..n {
        weight.clear();
        weight.extend_from_slice(&degree[..v]);
        let mut targets = Vec::with_capacity(m);
        for _ in 0..m {
            let total: u64 = weight.iter().sum();
            let mut r = rng.random_range(0..total);
            let chosen = weight
                .iter()
                .position(|&w| {
                    if r < w {
                        true
                    } else {
                        r -= w;
                        false
                    }
                })
                .expect("r < total");
            weight[chosen] = 0;
            targets.push(chosen);
        }
        for u in targets {
            edges.push((u, v));
            degree[u] += 1;
            degree[v] += 1;
        }
    }
    from_edges(n, edges)
}

/// Vertices in non-increasing degree order, ties broken by ascending index.
pub fn degree_sorted_vertices(net: &WeightedNetwork) -> Vec<usize> {
    let deg = net.degrees();
    let mut order: Vec<usize> = (0..net.order()).collect();
    order.sort_by(|&a, &b| deg[b].cmp(&deg[a]).then(a.cmp(&b)));
    order
}
