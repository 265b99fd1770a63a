//! Small shared helper: tables of cis(k·angle) over an integer index window,
//! built by repeated multiplication so sweep batches avoid per-member sin/cos.

use num_complex::Complex64;

/// cis(k·angle) for k = lo..=hi, indexable by k.
pub(crate) struct PhaseLadder {
    lo: i64,
    table: Vec<Complex64>,
}

impl PhaseLadder {
    pub fn new(angle: f64, lo: i64, hi: i64) -> Self {
        debug_assert!(lo <= hi);
        let step = Complex64::from_polar(1.0, angle);
        let mut table = Vec::with_capacity((hi - lo + 1) as usize);
        let mut cur = Complex64::from_polar(1.0, lo as f64 * angle);
        for _ in lo..=hi {
            table.push(cur);
            cur *= step;
        }
        PhaseLadder { lo, table }
    }

    #[inline]
    pub fn get(&self, k: i64) -> Complex64 {
        self.table[(k - self.lo) as usize]
    }
}
