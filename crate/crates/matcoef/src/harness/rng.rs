//! Pinned deterministic generator for reproducible random vectors.
//!
//! splitmix64 with the reference constants; amplitudes are drawn uniformly
//! on the complex unit disk by rejection and the finished vector is
//! normalized. Identical seeds must produce byte-identical sweep output, so
//! no external RNG crate is involved.

use crate::ktype::KTypeVector;
use crate::metaplectic::{HermiteMultiIndex, HermiteVector};
use num_complex::Complex64;

#[derive(Debug, Clone)]
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

    /// Uniform in [0, 1) with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / 9007199254740992.0)
    }

    /// Uniform in {0, 1, ..., n-1} (n > 0) by modulo reduction; the bias is
    /// irrelevant at these range sizes and keeps the generator trivially
    /// portable.
    pub fn next_below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// Uniform on the complex unit disk by rejection sampling.
    pub fn next_in_unit_disk(&mut self) -> Complex64 {
        loop {
            let x = 2.0 * self.next_f64() - 1.0;
            let y = 2.0 * self.next_f64() - 1.0;
            if x * x + y * y <= 1.0 {
                return Complex64::new(x, y);
            }
        }
    }
}

/// A unit-norm K-type vector with `terms` distinct indices drawn from
/// `allowed`, amplitudes uniform on the unit disk before normalization.
pub fn random_ktype_vector(
    rng: &mut SplitMix64,
    allowed: &[i64],
    terms: usize,
) -> KTypeVector {
    assert!(terms >= 1 && terms <= allowed.len());
    let mut pool: Vec<i64> = allowed.to_vec();
    let mut entries = Vec::with_capacity(terms);
    for _ in 0..terms {
        let pick = rng.next_below(pool.len() as u64) as usize;
        let idx = pool.swap_remove(pick);
        entries.push((idx, rng.next_in_unit_disk()));
    }
    entries.sort_by_key(|e| e.0);
    KTypeVector::new(entries)
        .expect("indices are distinct by construction")
        .normalized()
}

/// A unit-norm Hermite expansion in dimension `dim` with `terms` distinct
/// multi-indices, entries below `max_index`.
pub fn random_hermite_vector(
    rng: &mut SplitMix64,
    dim: usize,
    terms: usize,
    max_index: u32,
) -> HermiteVector {
    let mut seen = std::collections::HashSet::new();
    let mut entries = Vec::with_capacity(terms);
    while entries.len() < terms {
        let beta: Vec<u32> = (0..dim)
            .map(|_| rng.next_below(u64::from(max_index) + 1) as u32)
            .collect();
        if seen.insert(beta.clone()) {
            entries.push((
                HermiteMultiIndex::new(beta).expect("entries within cap"),
                rng.next_in_unit_disk(),
            ));
        }
    }
    entries.sort_by(|a, b| a.0 .0.cmp(&b.0 .0));
    HermiteVector::new(entries)
        .expect("multi-indices are distinct by construction")
        .normalized()
}
