//! Per-trial seed derivation.
//!
//! A trial's stream is `ChaCha8Rng::seed_from_u64(trial_seed(..))` with
//!
//! ```text
//! h = mix(base_seed)
//! h = mix(h ^ value.to_bits())    // skipped for paired sweeps
//! h = mix(h ^ trial_index)
//! ```
//!
//! where `mix` is the SplitMix64 finalizer. The seed depends only on these
//! inputs, never on scheduling, so sweeps are reproducible at any thread
//! count.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn trial_seed(base_seed: u64, value: Option<f64>, trial_index: u64) -> u64 {
    let mut h = mix(base_seed);
    if let Some(v) = value {
        // +0.0 and -0.0 name the same grid point.
        let v = if v == 0.0 { 0.0 } else { v };
        h = mix(h ^ v.to_bits());
    }
    mix(h ^ trial_index)
}

pub fn trial_rng(base_seed: u64, value: Option<f64>, trial_index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(trial_seed(base_seed, value, trial_index))
}
