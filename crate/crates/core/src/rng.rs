//! Deterministic pseudo-randomness.
//!
//! Everything random in this crate flows through [`SplitMix64`], a fixed
//! 64-bit mixing generator seeded explicitly by the caller. There is no
//! ambient entropy source, so every "random" result is a pure function of
//! its seed.

use crate::field::{FieldDescriptor, Scalar};

/// SplitMix64: `state += GOLDEN; mix(state)`.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish value in `0..n` (modulo bias is irrelevant at our sizes).
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        self.next_u64() % n
    }

    /// Signed integer in `-bound..=bound`.
    pub fn small_int(&mut self, bound: u64) -> i64 {
        self.below(2 * bound + 1) as i64 - bound as i64
    }

    /// A field element: a small integer over the rationals, a uniform
    /// residue over GF(p).
    pub fn scalar(&mut self, field: &FieldDescriptor) -> Scalar {
        match field {
            FieldDescriptor::Rationals => field.from_i64(self.small_int(9)),
            FieldDescriptor::Prime(p) => Scalar::Fp(self.below(*p)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_stream() {
        let mut a = SplitMix64::new(42);
        let mut b = SplitMix64::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
        let mut c = SplitMix64::new(43);
        assert_ne!(SplitMix64::new(42).next_u64(), c.next_u64());
    }
}
