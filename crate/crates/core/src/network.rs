//! Weighted networks and their leader/follower block decomposition.
//!
//! Orientation: `weights[(i, j)]` multiplies the state of vertex `j` in the
//! update of vertex `i` (row = target). With this convention the follower
//! dynamics read `x' = A_ff x + A_fl u` directly from the blocks.

use rand::Rng;

use crate::error::{Error, Result};
use crate::Matrix;

/// Dense weighted network: an `order x order` weight matrix plus a
/// directedness flag. Undirected networks are exactly symmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedNetwork {
    weights: Matrix,
    directed: bool,
}

impl WeightedNetwork {
    pub fn new(weights: Matrix, directed: bool) -> Result<Self> {
        let (rows, cols) = weights.shape();
        if rows == 0 {
            return Err(Error::EmptyMatrix);
        }
        if rows != cols {
            return Err(Error::NotSquare { rows, cols });
        }
        for i in 0..rows {
            for j in 0..cols {
                if !weights[(i, j)].is_finite() {
                    return Err(Error::NonFinite { row: i, col: j });
                }
            }
        }
        if !directed {
            for i in 0..rows {
                for j in (i + 1)..cols {
                    if weights[(i, j)] != weights[(j, i)] {
                        return Err(Error::Asymmetric { row: i, col: j });
                    }
                }
            }
        }
        Ok(Self { weights, directed })
    }

    /// Network with no edges.
    pub fn empty(order: usize, directed: bool) -> Result<Self> {
        Self::new(Matrix::zeros(order, order), directed)
    }

    pub fn order(&self) -> usize {
        self.weights.nrows()
    }

    pub fn weights(&self) -> &Matrix {
        &self.weights
    }

    pub fn weight(&self, target: usize, source: usize) -> f64 {
        self.weights[(target, source)]
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn into_weights(self) -> Matrix {
        self.weights
    }

    /// Number of edges: nonzero entries for directed networks, nonzero
    /// entries on or above the diagonal for undirected ones.
    pub fn edge_count(&self) -> usize {
        let n = self.order();
        let mut count = 0;
        for i in 0..n {
            let start = if self.directed { 0 } else { i };
            for j in start..n {
                if self.weights[(i, j)] != 0.0 {
                    count += 1;
                }
            }
        }
        count
    }

    /// Number of distinct neighbours of each vertex, ignoring direction and
    /// self-loops.
    pub fn degrees(&self) -> Vec<usize> {
        let n = self.order();
        (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| {
                        j != i && (self.weights[(i, j)] != 0.0 || self.weights[(j, i)] != 0.0)
                    })
                    .count()
            })
            .collect()
    }

    /// Perturbs every existing edge weight by an independent draw from
    /// `Uniform[-amplitude, amplitude]`. Non-edges stay zero. Undirected
    /// networks use one draw per edge so symmetry is exact.
    pub fn apply_noise<R: Rng + ?Sized>(&self, amplitude: f64, rng: &mut R) -> Result<Self> {
        if !(amplitude >= 0.0) || !amplitude.is_finite() {
            return Err(Error::param(
                "amplitude",
                format!("must be a finite non-negative number, got {amplitude}"),
            ));
        }
        if amplitude == 0.0 {
            return Ok(self.clone());
        }
        let n = self.order();
        let mut weights = self.weights.clone();
        // Row-major draw order is part of the reproducibility contract.
        for i in 0..n {
            let start = if self.directed { 0 } else { i };
            for j in start..n {
                let w = weights[(i, j)];
                if w == 0.0 {
                    continue;
                }
                let perturbed = w + rng.random_range(-amplitude..=amplitude);
                weights[(i, j)] = perturbed;
                if !self.directed {
                    weights[(j, i)] = perturbed;
                }
            }
        }
        Ok(Self {
            weights,
            directed: self.directed,
        })
    }

    /// Divides every weight by the zoom factor `mu`.
    pub fn zoom(&self, mu: f64) -> Result<Self> {
        if !(mu > 0.0) || !mu.is_finite() {
            return Err(Error::param(
                "mu",
                format!("zoom factor must be finite and positive, got {mu}"),
            ));
        }
        Ok(Self {
            weights: self.weights.map(|w| w / mu),
            directed: self.directed,
        })
    }

    /// Splits the network into follower and leader blocks. See
    /// [`LeaderPartition`].
    pub fn partition(&self, leaders: &[usize]) -> Result<LeaderPartition> {
        LeaderPartition::new(self, leaders)
    }
}

/// Leader/follower split of a network and the induced blocks
/// `A_ff` (followers x followers) and `A_fl` (followers x leaders).
///
/// Followers are in ascending index order; leaders keep the caller's order.
#[derive(Debug, Clone, PartialEq)]
pub struct LeaderPartition {
    followers: Vec<usize>,
    leaders: Vec<usize>,
    a_ff: Matrix,
    a_fl: Matrix,
}

impl LeaderPartition {
    pub fn new(net: &WeightedNetwork, leaders: &[usize]) -> Result<Self> {
        let n = net.order();
        if leaders.is_empty() {
            return Err(Error::EmptyLeaderSet);
        }
        let mut is_leader = vec![false; n];
        for &l in leaders {
            if l >= n {
                return Err(Error::LeaderOutOfRange { index: l, order: n });
            }
            if is_leader[l] {
                return Err(Error::DuplicateLeader { index: l });
            }
            is_leader[l] = true;
        }
        if leaders.len() == n {
            return Err(Error::NoFollowers);
        }
        let followers: Vec<usize> = (0..n).filter(|&i| !is_leader[i]).collect();
        let w = net.weights();
        let a_ff = Matrix::from_fn(followers.len(), followers.len(), |i, j| {
            w[(followers[i], followers[j])]
        });
        let a_fl = Matrix::from_fn(followers.len(), leaders.len(), |i, k| {
            w[(followers[i], leaders[k])]
        });
        Ok(Self {
            followers,
            leaders: leaders.to_vec(),
            a_ff,
            a_fl,
        })
    }

    pub fn followers(&self) -> &[usize] {
        &self.followers
    }

    pub fn leaders(&self) -> &[usize] {
        &self.leaders
    }

    pub fn n_followers(&self) -> usize {
        self.followers.len()
    }

    pub fn n_leaders(&self) -> usize {
        self.leaders.len()
    }

    pub fn a_ff(&self) -> &Matrix {
        &self.a_ff
    }

    pub fn a_fl(&self) -> &Matrix {
        &self.a_fl
    }
}
