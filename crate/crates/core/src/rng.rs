//! Minimal deterministic generator for reproducible parameter draws.
//!
//! SplitMix64: the stream is a pure function of the seed, independent of
//! platform and of any external crate's stream layout.

use crate::scalar::Real;

#[derive(Debug, Clone)]
pub(crate) struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub(crate) fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub(crate) fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw in [0, 1).
    pub(crate) fn uniform<T: Real>(&mut self) -> T {
        let mantissa = self.next_u64() >> 11;
        T::lit(mantissa as f64 / 9_007_199_254_740_992.0)
    }

    /// Uniform draw in [lo, hi).
    pub(crate) fn uniform_in<T: Real>(&mut self, lo: T, hi: T) -> T {
        lo + self.uniform::<T>() * (hi - lo)
    }
}
