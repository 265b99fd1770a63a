//! Jacobi polynomials and their SU(2)-normalized form.

use super::gamma::log_gamma_unchecked;
use super::signed_log::SignedLogReal;
use crate::error::{Error, Result};

/// Jacobi polynomial P_n^{(α,β)}(x) by the standard three-term recurrence.
///
/// Requires α > -1, β > -1 and x ∈ [-1, 1].
pub fn jacobi_poly(n: u32, alpha: f64, beta: f64, x: f64) -> Result<f64> {
    if !(alpha > -1.0) || !(beta > -1.0) {
        return Err(Error::Domain(format!(
            "jacobi_poly requires alpha, beta > -1, got ({alpha}, {beta})"
        )));
    }
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!(
            "jacobi_poly requires x in [-1,1], got {x}"
        )));
    }
    Ok(jacobi_poly_unchecked(n, alpha, beta, x))
}

pub(crate) fn jacobi_poly_unchecked(n: u32, alpha: f64, beta: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let p1 = (alpha + 1.0) + (alpha + beta + 2.0) * (x - 1.0) / 2.0;
    if n == 1 {
        return p1;
    }
    let mut pm1 = 1.0;
    let mut p = p1;
    for k in 2..=n {
        let k = f64::from(k);
        let ab = alpha + beta;
        let c1 = 2.0 * k * (k + ab) * (2.0 * k + ab - 2.0);
        let c2 = (2.0 * k + ab - 1.0) * ((2.0 * k + ab) * (2.0 * k + ab - 2.0) * x + alpha * alpha - beta * beta);
        let c3 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * (2.0 * k + ab);
        let next = (c2 * p - c3 * pm1) / c1;
        pm1 = p;
        p = next;
    }
    p
}

/// Normalized Jacobi function g_ν^{(α,β)}(x): the Jacobi polynomial with the
/// Gamma-ratio prefactor and the half-angle weights attached, bounded by 1 in
/// absolute value on (-1, 1).
///
/// `beta` may be a negative integer as long as ν + β ≥ 0, in which case the
/// identity g_ν^{(α,β)} = g_{ν+β}^{(α,−β)} reduces the evaluation to a
/// nonnegative second parameter, keeping all Gamma arguments positive.
pub fn jacobi_normalized(nu: u32, alpha: f64, beta: i64, x: f64) -> Result<f64> {
    if !(alpha >= 0.0) {
        return Err(Error::Domain(format!(
            "jacobi_normalized requires alpha >= 0, got {alpha}"
        )));
    }
    if !(-1.0 < x && x < 1.0) {
        return Err(Error::Domain(format!(
            "jacobi_normalized requires x in (-1,1), got {x}"
        )));
    }
    let (nu, beta) = if beta < 0 {
        let shifted = i64::from(nu) + beta;
        if shifted < 0 {
            return Err(Error::Domain(format!(
                "jacobi_normalized requires nu + beta >= 0, got nu={nu}, beta={beta}"
            )));
        }
        (shifted as u32, (-beta) as u32)
    } else {
        (nu, beta as u32)
    };
    Ok(jacobi_normalized_nonneg(nu, alpha, beta, x))
}

/// g_ν^{(α,β)} for β ≥ 0; prefactor kept in log form until the end.
fn jacobi_normalized_nonneg(nu: u32, alpha: f64, beta: u32, x: f64) -> f64 {
    let nu_f = f64::from(nu);
    let beta_f = f64::from(beta);
    let log_pref = 0.5
        * (log_gamma_unchecked(nu_f + 1.0) + log_gamma_unchecked(nu_f + alpha + beta_f + 1.0)
            - log_gamma_unchecked(nu_f + alpha + 1.0)
            - log_gamma_unchecked(nu_f + beta_f + 1.0));
    let log_weights =
        0.5 * alpha * ((1.0 - x) / 2.0).ln() + 0.5 * beta_f * ((1.0 + x) / 2.0).ln();
    let p = SignedLogReal::from_real(jacobi_poly_unchecked(nu, alpha, beta_f, x));
    p.scale_log(log_pref + log_weights).to_real()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::log_gamma;
    use proptest::prelude::*;

    /// Independent finite-sum oracle (hypergeometric series form):
    /// P_n^{(α,β)}(x) = Σ_k C(n+α, n−k) C(n+β, k) ((x−1)/2)^k ((x+1)/2)^{n−k}.
    fn jacobi_series_oracle(n: u32, alpha: f64, beta: f64, x: f64) -> f64 {
        let binom = |top: f64, k: u32| -> f64 {
            let mut v = 1.0;
            for j in 0..k {
                v *= (top - j as f64) / (k - j) as f64;
            }
            v
        };
        let mut sum = 0.0;
        for k in 0..=n {
            sum += binom(f64::from(n) + alpha, n - k)
                * binom(f64::from(n) + beta, k)
                * ((x - 1.0) / 2.0).powi(k as i32)
                * ((x + 1.0) / 2.0).powi((n - k) as i32);
        }
        sum
    }

    #[test]
    fn degree_zero_is_one() {
        assert_eq!(jacobi_poly(0, 0.7, 2.3, -0.4).unwrap(), 1.0);
    }

    #[test]
    fn degree_one_closed_form() {
        // n=1, α=2, β=3, x=0 → (α+1) + (α+β+2)(x−1)/2 = -1/2
        assert!((jacobi_poly(1, 2.0, 3.0, 0.0).unwrap() + 0.5).abs() < 1e-15);
    }

    #[test]
    fn degree_five_matches_series_oracle() {
        let got = jacobi_poly(5, 2.0, 3.0, 0.3).unwrap();
        let oracle = jacobi_series_oracle(5, 2.0, 3.0, 0.3);
        assert!((got - oracle).abs() < 1e-12 * oracle.abs());
        // frozen value from the oracle (exact rational evaluation)
        assert!((got - 1.0942246875).abs() < 1e-12);
    }

    #[test]
    fn recurrence_residual_sampled() {
        // residual of the three-term recurrence at interior degrees
        for &(n, a, b, x) in &[
            (5u32, 0.5, 1.5, 0.2),
            (12, 3.0, 0.0, -0.7),
            (25, 1.0, 4.0, 0.95),
            (40, 6.5, 2.5, -0.99),
        ] {
            let pm1 = jacobi_poly(n - 1, a, b, x).unwrap();
            let p = jacobi_poly(n, a, b, x).unwrap();
            let pp1 = jacobi_poly(n + 1, a, b, x).unwrap();
            let k = f64::from(n + 1);
            let ab = a + b;
            let c1 = 2.0 * k * (k + ab) * (2.0 * k + ab - 2.0);
            let c2 = (2.0 * k + ab - 1.0)
                * ((2.0 * k + ab) * (2.0 * k + ab - 2.0) * x + a * a - b * b);
            let c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * (2.0 * k + ab);
            let resid = c1 * pp1 - c2 * p + c3 * pm1;
            let scale = [c1 * pp1, c2 * p, c3 * pm1]
                .iter()
                .map(|v| v.abs())
                .fold(1.0, f64::max);
            assert!(resid.abs() <= 1e-10 * scale, "n={n}: resid {resid}");
        }
    }

    #[test]
    fn normalized_base_case() {
        // ν=0, α=1, β=0, x=0 → 2^{-1/2}
        let got = jacobi_normalized(0, 1.0, 0, 0.0).unwrap();
        assert!((got - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-14);
    }

    #[test]
    fn normalized_frozen_value() {
        let got = jacobi_normalized(3, 5.0, 2, 0.4).unwrap();
        assert!((got - 0.24873151105680196868).abs() < 1e-13);
    }

    #[test]
    fn normalized_negative_beta_identity() {
        // g_5^{(2,-3)}(0.3) = g_2^{(2,3)}(0.3), frozen from 30-digit arithmetic
        let neg = jacobi_normalized(5, 2.0, -3, 0.3).unwrap();
        let pos = jacobi_normalized(2, 2.0, 3, 0.3).unwrap();
        assert!((neg - pos).abs() < 1e-14);
        assert!((neg + 0.27108107098592295476).abs() < 1e-13);
    }

    #[test]
    fn normalized_two_route_consistency() {
        // ν=3, α=5, β=2, x=0.4: direct jacobi_poly route with log-Γ prefactor
        let (nu, alpha, beta, x) = (3u32, 5.0f64, 2.0f64, 0.4f64);
        let pref = 0.5
            * (log_gamma(4.0).unwrap() + log_gamma(nu as f64 + alpha + beta + 1.0).unwrap()
                - log_gamma(nu as f64 + alpha + 1.0).unwrap()
                - log_gamma(nu as f64 + beta + 1.0).unwrap());
        let direct = pref.exp()
            * ((1.0 - x) / 2.0).powf(alpha / 2.0)
            * ((1.0 + x) / 2.0).powf(beta / 2.0)
            * jacobi_poly(nu, alpha, beta, x).unwrap();
        let got = jacobi_normalized(nu, alpha, 2, x).unwrap();
        assert!((got - direct).abs() < 1e-10 * direct.abs());
    }

    #[test]
    fn normalized_domain_errors() {
        assert!(jacobi_normalized(2, -0.5, 0, 0.0).is_err());
        assert!(jacobi_normalized(2, 1.0, -5, 0.0).is_err()); // nu + beta < 0
        assert!(jacobi_normalized(2, 1.0, 0, 1.0).is_err()); // endpoint excluded
    }

    proptest! {
        // |g| never exceeds 1 + 1e-12 on valid inputs
        #[test]
        fn normalized_bounded_by_one(
            nu in 0u32..60,
            alpha in 0.0f64..25.0,
            beta_off in 0i64..40,
            x in -0.999f64..0.999,
        ) {
            let beta = beta_off - i64::from(nu).min(20);
            prop_assume!(i64::from(nu) + beta >= 0);
            let v = jacobi_normalized(nu, alpha, beta, x).unwrap();
            prop_assert!(v.abs() <= 1.0 + 1e-12, "g = {v}");
        }
    }
}
