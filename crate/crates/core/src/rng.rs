//! Counter-based random streams.
//!
//! A stream is keyed by `(seed, label)`. Draw number `c` is
//! `mix(key + (c + 1)·φ)` where `φ = 0x9E3779B97F4A7C15` and `mix` is the
//! SplitMix64 finalizer; the key itself is `mix(seed ^ mix(fnv1a(label)))`.
//! Normals come from the basic Box–Muller transform applied to consecutive
//! uniform pairs `(u1, u2)`: the cosine branch is returned first, the sine
//! branch second.

use crate::error::{usage, Result};

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

#[inline]
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn fnv1a(label: &str) -> u64 {
    let mut h: u64 = 0xCBF2_9CE4_8422_2325;
    for b in label.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01B3);
    }
    h
}

/// Deterministic stream of pseudo-random draws.
#[derive(Debug, Clone, PartialEq)]
pub struct RandomStream {
    seed: u64,
    label: String,
    key: u64,
    counter: u64,
    spare_normal: Option<f64>,
}

impl RandomStream {
    pub fn new(seed: u64, label: &str) -> Self {
        Self {
            seed,
            label: label.to_owned(),
            key: mix64(seed ^ mix64(fnv1a(label))),
            counter: 0,
            spare_normal: None,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Number of raw 64-bit words consumed so far.
    pub fn position(&self) -> u64 {
        self.counter
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.counter = self.counter.wrapping_add(1);
        mix64(self.key.wrapping_add(self.counter.wrapping_mul(GOLDEN)))
    }

    /// Uniform on `[0, 1)` with 53 bits of resolution.
    #[inline]
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform on `[lo, hi)`.
    pub fn next_uniform(&mut self, lo: f64, hi: f64) -> Result<f64> {
        if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
            return usage(format!("uniform range [{lo}, {hi}) is empty or non-finite"));
        }
        let x = lo + (hi - lo) * self.next_f64();
        Ok(if x < hi { x } else { hi.next_down() })
    }

    /// Uniform integer in `0..bound` by multiply-shift.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        ((u128::from(self.next_u64()) * u128::from(bound)) >> 64) as u64
    }

    pub fn next_standard_normal(&mut self) -> f64 {
        if let Some(z) = self.spare_normal.take() {
            return z;
        }
        let u1 = 1.0 - self.next_f64(); // (0, 1]
        let u2 = self.next_f64();
        let radius = (-2.0 * u1.ln()).sqrt();
        let angle = std::f64::consts::TAU * u2;
        self.spare_normal = Some(radius * angle.sin());
        radius * angle.cos()
    }

    /// Fills a buffer with standard normals in order.
    pub fn fill_standard_normal(&mut self, out: &mut [f64]) {
        for x in out {
            *x = self.next_standard_normal();
        }
    }
}
