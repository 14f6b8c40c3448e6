//! Deterministic stream derivation.
//!
//! Every parallel workload in this crate derives one independent RNG per unit
//! of work (path, draw, record) from a base seed and the unit index, so
//! results are bit-identical regardless of how work is sharded across
//! threads.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

// Re-exported so call sites name a single RNG type.
pub use rand_chacha::ChaCha8Rng as Stream;

/// SplitMix64 finalizer; good avalanche for seed mixing.
fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Mixes a base seed and an index into an independent 64-bit sub-seed.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    splitmix64(splitmix64(seed ^ 0xa076_1d64_78bd_642f) ^ splitmix64(index))
}

/// RNG for the `index`-th unit of work under `seed`.
pub fn stream(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(seed, index))
}
