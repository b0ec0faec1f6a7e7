//! Fixtures shared by the benchmarks.

use netkappa::{generators, LeaderPartition};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Noisy E-R network (p = 0.15) with `n_followers` followers and the last
/// vertex as the single leader.
pub fn er_partition(n_followers: usize, seed: u64) -> LeaderPartition {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = n_followers + 1;
    generators::erdos_renyi(n, 0.15, &mut rng)
        .and_then(|net| net.apply_noise(0.025, &mut rng))
        .and_then(|net| net.partition(&[n - 1]))
        .expect("valid fixture")
}
