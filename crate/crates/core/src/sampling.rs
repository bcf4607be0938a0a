//! Seeded random braid words.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::BraidWord;

/// Uniform letters from `{σ_i^{±1}}` drawn from a seeded ChaCha stream, so
/// samples depend only on the seed.
pub struct Sampler {
    seed: u64,
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { seed, rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn letter(&mut self, n: usize) -> i8 {
        let i = self.rng.gen_range(1..n) as i8;
        if self.rng.gen_bool(0.5) {
            i
        } else {
            -i
        }
    }

    /// A word of exactly `len` letters (not freely reduced).
    pub fn word(&mut self, n: usize, len: usize) -> BraidWord {
        let letters = (0..len).map(|_| self.letter(n)).collect();
        BraidWord::new(n, letters).expect("letters in range")
    }

    /// A word whose length is uniform in `1..=max_len`.
    pub fn word_up_to(&mut self, n: usize, max_len: usize) -> BraidWord {
        let len = self.rng.gen_range(1..=max_len.max(1));
        self.word(n, len)
    }

    pub fn words_up_to(&mut self, n: usize, max_len: usize, count: usize) -> Vec<BraidWord> {
        (0..count).map(|_| self.word_up_to(n, max_len)).collect()
    }

    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed() {
        let a = Sampler::new(7).words_up_to(4, 8, 10);
        let b = Sampler::new(7).words_up_to(4, 8, 10);
        assert_eq!(a, b);
        assert_ne!(a, Sampler::new(8).words_up_to(4, 8, 10));
        assert!(a.iter().all(|w| (1..=8).contains(&w.len()) && w.strands() == 4));
    }
}
