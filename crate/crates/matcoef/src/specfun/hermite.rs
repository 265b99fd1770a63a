//! L²(R)-normalized Hermite functions.

/// Normalized Hermite function h_n(x) = (2^n n! √π)^{-1/2} H_n(x) e^{-x²/2},
/// orthonormal on L²(R), evaluated by the weighted recurrence
/// h_{j+1} = x √(2/(j+1)) h_j − √(j/(j+1)) h_{j−1} with the Gaussian start
/// carried as a log offset (documented range n ≤ 500).
pub fn hermite_fn(n: u32, x: f64) -> f64 {
    hermite_all(n, x)[n as usize]
}

/// All of h_0(x) ... h_n(x) from one recurrence pass.
pub(crate) fn hermite_all(n: u32, x: f64) -> Vec<f64> {
    let log_base = -0.25 * std::f64::consts::PI.ln() - 0.5 * x * x;
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut offset = 0.0f64;
    let mut qm1 = 0.0f64;
    let mut q = 1.0f64;
    out.push(finish(q, log_base + offset));
    for j in 0..n {
        let jf = f64::from(j);
        let next = x * (2.0 / (jf + 1.0)).sqrt() * q - (jf / (jf + 1.0)).sqrt() * qm1;
        qm1 = q;
        q = next;
        let mag = q.abs().max(qm1.abs());
        if mag > 1e250 {
            q *= 1e-250;
            qm1 *= 1e-250;
            offset += 250.0 * std::f64::consts::LN_10;
        } else if mag < 1e-250 && mag > 0.0 {
            q *= 1e250;
            qm1 *= 1e250;
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ground_state() {
        // h_0(x) = π^{-1/4} e^{-x²/2}
        let expect = std::f64::consts::PI.powf(-0.25) * (-0.045f64).exp();
        assert!((hermite_fn(0, 0.3) - expect).abs() < 1e-15);
        assert!((hermite_fn(0, 0.3) - 0.71807412904900112767).abs() < 1e-14);
    }

    #[test]
    fn odd_function_vanishes_at_zero() {
        assert_eq!(hermite_fn(1, 0.0), 0.0);
        assert_eq!(hermite_fn(7, 0.0), 0.0);
    }

    #[test]
    fn frozen_oracle_values() {
        assert!((hermite_fn(5, 0.9) - 0.082912901987366310868).abs() < 1e-14);
        assert!((hermite_fn(200, 10.0) + 0.19128996363059031197).abs() < 1e-12);
    }

    #[test]
    fn stays_finite_over_documented_range() {
        for &(n, x) in &[(500u32, 0.5), (500, 40.0), (500, -33.0), (200, 0.0)] {
            let v = hermite_fn(n, x);
            assert!(v.is_finite() && v.abs() < 10.0, "h_{n}({x}) = {v}");
        }
    }
}
