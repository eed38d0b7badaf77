//! Reproducible pattern generation.
//!
//! The generator is SplitMix64, so any implementation can regenerate the
//! exact same byte streams:
//!
//! ```text
//! state  <- state + 0x9E3779B97F4A7C15            (wrapping)
//! z      <- state
//! z      <- (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9  (wrapping)
//! z      <- (z ^ (z >> 27)) * 0x94D049BB133111EB  (wrapping)
//! output <- z ^ (z >> 31)
//! ```
//!
//! A symbol over an alphabet of size `sigma` is the high word of the 128-bit
//! product `output * sigma`.

use crate::error::{Error, Result};
use crate::types::Pattern;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform value in `[0, bound)`, `bound >= 1`.
    #[inline]
    pub fn below(&mut self, bound: u64) -> u64 {
        ((self.next_u64() as u128 * bound as u128) >> 64) as u64
    }
}

pub fn check_sigma(sigma: usize) -> Result<()> {
    if (2..=256).contains(&sigma) {
        Ok(())
    } else {
        Err(Error::SigmaOutOfRange(sigma))
    }
}

/// `len` bytes drawn independently and uniformly from `0..sigma`.
pub fn gen_random_string(len: usize, sigma: usize, rng: &mut SplitMix64) -> Result<Pattern> {
    check_sigma(sigma)?;
    let bytes: Vec<u8> = (0..len).map(|_| rng.below(sigma as u64) as u8).collect();
    Pattern::new(bytes)
}

/// Seed for the patterns of one benchmark or verification cell, so a cell's
/// patterns do not depend on which other cells run.
pub fn cell_seed(seed: u64, sigma: usize, m: usize) -> u64 {
    let mut mix = SplitMix64::new(seed ^ ((sigma as u64) << 32) ^ m as u64);
    mix.next_u64()
}
