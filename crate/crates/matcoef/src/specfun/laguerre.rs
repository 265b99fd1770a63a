//! L²(R⁺)-normalized Laguerre functions.

use super::gamma::log_gamma_unchecked;
use crate::error::{Error, Result};

/// Normalized Laguerre function
/// 𝓛_n^{(k)}(x) = (n!/Γ(n+k+1))^{1/2} x^{k/2} e^{-x/2} L_n^{(k)}(x),
/// orthonormal on L²(R⁺) for fixed k.
///
/// The recurrence runs on the weighted functions directly, with the start
/// value carried as a log offset and periodic rescaling, so nothing
/// overflows for n ≤ 500, x ≤ 1e4.
pub fn laguerre_fn(n: u32, k: u32, x: f64) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(Error::Domain(format!(
            "laguerre_fn requires x >= 0, got {x}"
        )));
    }
    let all = laguerre_all_unchecked(n, k, x);
    Ok(all[n as usize])
}

/// All of 𝓛_0^{(k)}(x) ... 𝓛_n^{(k)}(x) from one recurrence pass.
///
/// The weighted three-term recurrence is
/// 𝓛_{j+1} = (2j+k+1−x)/√((j+1)(j+k+1)) 𝓛_j − √(j(j+k)/((j+1)(j+k+1))) 𝓛_{j−1},
/// started from 𝓛_0 = exp((k/2) ln x − x/2 − ½ ln Γ(k+1)).
pub(crate) fn laguerre_all_unchecked(n: u32, k: u32, x: f64) -> Vec<f64> {
    let kf = f64::from(k);
    let log_base = if x == 0.0 {
        if k == 0 {
            0.0
        } else {
            f64::NEG_INFINITY
        }
    } else {
        0.5 * kf * x.ln() - 0.5 * x - 0.5 * log_gamma_unchecked(kf + 1.0)
    };

    let mut out = Vec::with_capacity(n as usize + 1);
    if log_base == f64::NEG_INFINITY {
        // x = 0 with k > 0: every 𝓛_j^{(k)}(0) = 0
        out.resize(n as usize + 1, 0.0);
        return out;
    }

    // run the recurrence on q_j with q_0 = 1, rescaling when |q| grows;
    // 𝓛_j = q_j * exp(log_base + offset)
    let mut offset = 0.0f64;
    let mut qm1 = 0.0f64;
    let mut q = 1.0f64;
    out.push(finish(q, log_base + offset));
    for j in 0..n {
        let jf = f64::from(j);
        let a = (2.0 * jf + kf + 1.0 - x) / ((jf + 1.0) * (jf + kf + 1.0)).sqrt();
        let b = (jf * (jf + kf) / ((jf + 1.0) * (jf + kf + 1.0))).sqrt();
        let next = a * q - b * qm1;
        qm1 = q;
        q = next;
        let mag = q.abs().max(qm1.abs());
        if mag > 1e250 {
            let s = 1e-250;
            q *= s;
            qm1 *= s;
            offset += 250.0 * std::f64::consts::LN_10;
        } else if mag < 1e-250 && mag > 0.0 {
            let s = 1e250;
            q *= s;
            qm1 *= s;
            offset -= 250.0 * std::f64::consts::LN_10;
        }
        out.push(finish(q, log_base + offset));
    }
    out
}

fn finish(q: f64, log_scale: f64) -> f64 {
    if q == 0.0 {
        return 0.0;
    }
    let l = log_scale + q.abs().ln();
    if l < -745.0 {
        0.0
    } else {
        q.signum() * l.exp()
    }
}
