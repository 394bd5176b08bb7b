//! SplitMix64 (Steele, Lea & Flood 2014): a 64-bit state advanced by the
//! golden-ratio increment `0x9E3779B97F4A7C15`, output through the
//! finalizer of MurmurHash3 variant 13. Fixed here so seeded runs replay
//! identically on every platform.

use crate::scalar::{Fp, Prime};

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, n)` by rejection; `n > 0`.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        let zone = u64::MAX - u64::MAX % n;
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % n;
            }
        }
    }

    pub fn fp(&mut self, p: Prime) -> Fp {
        Fp::from_residue(p, self.below(p.get() as u64) as u32)
    }

    pub fn nonzero_fp(&mut self, p: Prime) -> Fp {
        Fp::from_residue(p, 1 + self.below(p.get() as u64 - 1) as u32)
    }
}
