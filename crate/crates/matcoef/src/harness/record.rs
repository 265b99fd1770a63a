//! Sweep output rows and their CSV/JSON encodings.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// One harness row: parameter tuple, measured coefficient magnitude, the
/// theorem bound evaluated at the tuple, their ratio and the quadrature
/// error estimate.
///
/// Column meaning per family:
/// * `principal`: p1 = s, p2 = ε, mu/nu = K-types, r_or_t = r
/// * `complementary`: p1 = λ, p2 = 0, mu/nu = K-types, r_or_t = r
/// * `discrete_plus`/`discrete_minus`: p1 = ℓ, p2 = ±1, mu/nu = offsets, r_or_t = r
/// * `metaplectic`: p1 = λ, p2 = 0, mu/nu = Laguerre pair, r_or_t = λ
/// * `dispersive`: p1 = dimension, p2 = seed, mu = nu = 0, r_or_t = t
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundRecord {
    pub family: String,
    pub p1: f64,
    pub p2: f64,
    pub mu: i64,
    pub nu: i64,
    pub r_or_t: f64,
    pub abs_coeff: f64,
    pub bound: f64,
    pub ratio: f64,
    pub quad_err: f64,
}

impl BoundRecord {
    pub fn is_finite(&self) -> bool {
        [
            self.p1,
            self.p2,
            self.r_or_t,
            self.abs_coeff,
            self.bound,
            self.ratio,
            self.quad_err,
        ]
        .iter()
        .all(|v| v.is_finite())
    }
}

pub const CSV_HEADER: &str = "family,p1,p2,mu,nu,r_or_t,abs_coeff,bound,ratio,quad_err";

/// 17 significant digits: enough to reproduce every f64 bit-exactly.
fn fmt(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn to_csv(records: &[BoundRecord]) -> String {
    let mut out = String::with_capacity(records.len() * 96 + 64);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            r.family,
            fmt(r.p1),
            fmt(r.p2),
            r.mu,
            r.nu,
            fmt(r.r_or_t),
            fmt(r.abs_coeff),
            fmt(r.bound),
            fmt(r.ratio),
            fmt(r.quad_err),
        ));
    }
    out
}

pub fn from_csv(text: &str) -> Result<Vec<BoundRecord>> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h == CSV_HEADER => {}
        other => {
            return Err(Error::Io(format!(
                "unexpected CSV header: {other:?}"
            )))
        }
    }
    let mut out = Vec::new();
    for (ln, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let cells: Vec<&str> = line.split(',').collect();
        if cells.len() != 10 {
            return Err(Error::Io(format!("line {}: expected 10 cells", ln + 2)));
        }
        let f = |i: usize| -> Result<f64> {
            cells[i]
                .parse::<f64>()
                .map_err(|e| Error::Io(format!("line {}: {e}", ln + 2)))
        };
        let g = |i: usize| -> Result<i64> {
            cells[i]
                .parse::<i64>()
                .map_err(|e| Error::Io(format!("line {}: {e}", ln + 2)))
        };
        out.push(BoundRecord {
            family: cells[0].to_string(),
            p1: f(1)?,
            p2: f(2)?,
            mu: g(3)?,
            nu: g(4)?,
            r_or_t: f(5)?,
            abs_coeff: f(6)?,
            bound: f(7)?,
            ratio: f(8)?,
            quad_err: f(9)?,
        });
    }
    Ok(out)
}

pub fn to_json(records: &[BoundRecord]) -> Result<String> {
    serde_json::to_string_pretty(records).map_err(|e| Error::Io(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Vec<BoundRecord> {
        vec![
            BoundRecord {
                family: "principal".into(),
                p1: 0.1,
                p2: 0.0,
                mu: -4,
                nu: 2,
                r_or_t: 1.5,
                abs_coeff: 0.123456789012345678,
                bound: 2.4440892098500626e-1,
                ratio: 0.5051418931,
                quad_err: 3.3306690738754696e-16,
            },
            BoundRecord {
                family: "discrete_plus".into(),
                p1: 4.0,
                p2: 1.0,
                mu: 0,
                nu: 3,
                r_or_t: 0.05,
                abs_coeff: 1.0 / 3.0,
                bound: 0.9987516654,
                ratio: std::f64::consts::PI * 0.1,
                quad_err: 0.0,
            },
        ]
    }

    #[test]
    fn csv_round_trips_bit_exactly() {
        let recs = sample();
        let text = to_csv(&recs);
        let back = from_csv(&text).unwrap();
        assert_eq!(recs.len(), back.len());
        for (a, b) in recs.iter().zip(&back) {
            assert_eq!(a.family, b.family);
            assert_eq!(a.p1.to_bits(), b.p1.to_bits());
            assert_eq!(a.abs_coeff.to_bits(), b.abs_coeff.to_bits());
            assert_eq!(a.ratio.to_bits(), b.ratio.to_bits());
            assert_eq!(a.quad_err.to_bits(), b.quad_err.to_bits());
            assert_eq!(a.mu, b.mu);
        }
    }

    #[test]
    fn csv_uses_unix_newlines_and_dot_decimal() {
        let text = to_csv(&sample());
        assert!(!text.contains('\r'));
        assert!(text.contains("e0") || text.contains("e-"));
    }

    #[test]
    fn bad_header_is_rejected() {
        assert!(from_csv("nope\n1,2\n").is_err());
    }
}
