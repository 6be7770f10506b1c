//! Deterministic sample generation.
//!
//! Law checkers on categories with infinite hom-sets fall back to sampled
//! morphisms: identities, structural maps, and random rational matrices with
//! small integer entries. Reports must be byte-identical across runs and
//! toolchains for a fixed seed, so the generator is a self-contained
//! splitmix64 rather than an external RNG whose stream could shift under a
//! dependency bump.

use crate::matrix::Mat;
use crate::prelude::*;
use crate::rational::rat;

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform draw from `0..n`. Panics on `n = 0`.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "range must be nonempty");
        // Bias is irrelevant for test-vector generation; determinism is not.
        self.next_u64() % n
    }

    /// Small integer entry in `-2..=2`.
    pub fn small_entry(&mut self) -> i64 {
        self.below(5) as i64 - 2
    }

    /// Random matrix with entries in `-2..=2`.
    pub fn matrix(&mut self, rows: usize, cols: usize) -> Mat {
        let data: Vec<_> = (0..rows * cols).map(|_| rat(self.small_entry())).collect();
        Mat::from_data(rows, cols, data)
    }

    /// Random invertible square matrix, found by retrying.
    pub fn invertible_matrix(&mut self, n: usize) -> Mat {
        loop {
            let m = self.matrix(n, n);
            if m.rank() == n {
                return m;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_seed_is_reproducible() {
        let mut a = SplitMix64::new(7);
        let mut b = SplitMix64::new(7);
        for _ in 0..32 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn entries_stay_in_window() {
        let mut g = SplitMix64::new(0);
        for _ in 0..200 {
            let e = g.small_entry();
            assert!((-2..=2).contains(&e));
        }
    }
}
