//! Shared random-instance generation for the integration suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Up to `max_words` words over the first `alpha` lowercase letters, with
/// combined length at most `max_total`. Empty words are allowed.
pub fn random_words(
    rng: &mut ChaCha8Rng,
    alpha: usize,
    max_words: usize,
    max_total: usize,
) -> Vec<Vec<u8>> {
    let count = rng.gen_range(0..=max_words);
    let mut budget = max_total;
    (0..count)
        .map(|_| {
            let len = rng.gen_range(0..=budget.min(max_total / max_words.max(1) * 2));
            budget -= len;
            random_word(rng, alpha, len)
        })
        .collect()
}

pub fn random_word(rng: &mut ChaCha8Rng, alpha: usize, len: usize) -> Vec<u8> {
    (0..len).map(|_| b'a' + rng.gen_range(0..alpha) as u8).collect()
}

pub fn as_slices(words: &[Vec<u8>]) -> Vec<&[u8]> {
    words.iter().map(|w| w.as_slice()).collect()
}
