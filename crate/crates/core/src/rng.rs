//! Seeded randomness. One master seed is fanned out into independent
//! per-stage streams so that adding a stage never perturbs another.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed for the stream named `stage` under `master`.
pub fn stage_seed(master: u64, stage: &str) -> u64 {
    stage.bytes().fold(splitmix(master), |acc, b| splitmix(acc ^ b as u64))
}

pub fn stage_rng(master: u64, stage: &str) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(stage_seed(master, stage))
}

pub fn rng_from(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stages_differ_and_repeat() {
        assert_eq!(stage_seed(7, "beta"), stage_seed(7, "beta"));
        assert_ne!(stage_seed(7, "beta"), stage_seed(7, "specialize"));
        assert_ne!(stage_seed(7, "beta"), stage_seed(8, "beta"));
    }
}
