//! Named RNG substreams derived from a single run seed.
//!
//! Every stochastic step in the pipeline (split shuffles, weight init,
//! minibatch shuffling, dropout masks) pulls from its own substream so that
//! one `--seed` value reproduces an entire run and the streams never alias.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Derive a substream seed from a base seed and a label.
///
/// FNV-1a over the label, mixed with the base seed through a splitmix64
/// finalizer. Stable across platforms.
pub fn substream_seed(seed: u64, label: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in label.as_bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    splitmix64(seed ^ h)
}

/// A seeded RNG for the given substream label.
pub fn substream_rng(seed: u64, label: &str) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(substream_seed(seed, label))
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}
