//! Discrete-series coefficients v_{m,n}(ã_r) for the holomorphic and
//! antiholomorphic families, via the normalized-Jacobi closed form (no
//! quadrature), plus the formal-degree radial integral.
//!
//! With h = ℓ/2, y = sinh²r and x = (y−1)/(y+1), the closed form is
//! v_{m,n}(ã_r) = (−1)^{n−h} (y+1)^{−1/2} g_ν^{(α,β)}(x) with α = 2h−1,
//! β = m−n, ν = n−h. Indices are stored as the nonnegative offsets
//! m−h, n−h (for the minus family: −h−m, −h−n). The m < n case reduces to
//! the transposed pair by the index symmetry of the normalized Jacobi
//! function; the sign bookkeeping is v_{m,n} = (−1)^{m−n} v_{n,m}.

use crate::error::{Error, Result};
use crate::quad::{integrate_halfline, QuadConfig, QuadResult};
use crate::specfun::log_gamma;
use num_complex::Complex64;

pub const MAX_OFFSET: u32 = 200;
pub const MAX_WEIGHT: u32 = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesSign {
    Plus,
    Minus,
}

/// One discrete-series coefficient: weight ℓ ≥ 1, family sign, and the
/// K-type offsets m−h, n−h ∈ N (minus family: −h−m, −h−n ∈ N).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiscreteParams {
    pub ell: u32,
    pub sign: SeriesSign,
    pub m_offset: u32,
    pub n_offset: u32,
}

impl DiscreteParams {
    pub fn new(ell: u32, sign: SeriesSign, m_offset: u32, n_offset: u32) -> Result<Self> {
        if ell == 0 || ell > MAX_WEIGHT {
            return Err(Error::Domain(format!(
                "ell must be a positive integer at most {MAX_WEIGHT}, got {ell}"
            )));
        }
        if m_offset > MAX_OFFSET || n_offset > MAX_OFFSET {
            return Err(Error::Domain(format!(
                "index offsets capped at {MAX_OFFSET}, got ({m_offset}, {n_offset})"
            )));
        }
        Ok(DiscreteParams {
            ell,
            sign,
            m_offset,
            n_offset,
        })
    }

    /// Half-weight h = ℓ/2.
    pub fn h(&self) -> f64 {
        f64::from(self.ell) / 2.0
    }

    /// The actual (half-integer) K-type indices m, n.
    pub fn m(&self) -> f64 {
        match self.sign {
            SeriesSign::Plus => self.h() + f64::from(self.m_offset),
            SeriesSign::Minus => -self.h() - f64::from(self.m_offset),
        }
    }

    pub fn n(&self) -> f64 {
        match self.sign {
            SeriesSign::Plus => self.h() + f64::from(self.n_offset),
            SeriesSign::Minus => -self.h() - f64::from(self.n_offset),
        }
    }
}

/// Sign and log-magnitude of the normalized closed form at radial part r > 0,
/// split as (sign, log|g|, log sech r) so callers can attach or cancel the
/// (cosh r)^{-1} factor without overflow.
fn log_form(p: &DiscreteParams, r: f64) -> (f64, f64) {
    let mo = i64::from(p.m_offset);
    let no = i64::from(p.n_offset);
    let alpha = f64::from(p.ell) - 1.0;
    // transpose to beta >= 0; v_{m,n} = (-1)^{m-n} v_{n,m} and the sign
    // (-1)^{n-h} always refers to the original n
    let (nu, beta) = if mo >= no {
        (no as u32, (mo - no) as u32)
    } else {
        (mo as u32, (no - mo) as u32)
    };
    let base_sign = if no % 2 == 0 { 1.0 } else { -1.0 };

    let sech = {
        let c = r.cosh();
        if c.is_finite() {
            1.0 / c
        } else {
            0.0
        }
    };
    let x = 1.0 - 2.0 * sech * sech;
    let nu_f = f64::from(nu);
    let beta_f = f64::from(beta);
    let lg = |v: f64| log_gamma(v).expect("positive Gamma argument");
    let log_pref = 0.5
        * (lg(nu_f + 1.0) + lg(nu_f + alpha + beta_f + 1.0)
            - lg(nu_f + alpha + 1.0)
            - lg(nu_f + beta_f + 1.0));
    // ln((1-x)/2) = -2 ln cosh r,  ln((1+x)/2) = 2 ln tanh r
    let ln_cosh = r + (0.5 * (1.0 + (-2.0 * r).exp())).ln();
    let ln_wm = -2.0 * ln_cosh;
    let ln_wp = 2.0 * r.tanh().ln();
    let poly = crate::specfun::jacobi_poly(nu, alpha, beta_f, x.clamp(-1.0, 1.0))
        .expect("jacobi domain");
    if poly == 0.0 {
        return (0.0, f64::NEG_INFINITY);
    }
    let sign = base_sign * poly.signum();
    let log_g = log_pref + 0.5 * alpha * ln_wm + 0.5 * beta_f * ln_wp + poly.abs().ln();
    // log of |v_{m,n}| = log|g| - ln cosh r; return both pieces
    (sign, log_g - ln_cosh)
}

fn log_g_only(p: &DiscreteParams, r: f64) -> f64 {
    let (_, log_v) = log_form(p, r);
    let ln_cosh = r + (0.5 * (1.0 + (-2.0 * r).exp())).ln();
    log_v + ln_cosh
}

fn series_sign_factor(p: &DiscreteParams) -> f64 {
    match p.sign {
        SeriesSign::Plus => 1.0,
        // v⁻ at offsets (m₀,n₀) is (−1)^{m₀−n₀} times the plus-family value
        SeriesSign::Minus => {
            if (i64::from(p.m_offset) - i64::from(p.n_offset)) % 2 == 0 {
                1.0
            } else {
                -1.0
            }
        }
    }
}

/// v_{m,n}(ã_r): exact closed form, real-valued, no quadrature.
/// At r = 0 returns the Kronecker delta directly.
pub fn coefficient(p: &DiscreteParams, r: f64) -> Result<f64> {
    if !(r >= 0.0) {
        return Err(Error::Domain(format!("coefficient requires r >= 0, got {r}")));
    }
    if r == 0.0 {
        return Ok(if p.m_offset == p.n_offset { 1.0 } else { 0.0 });
    }
    let (sign, log_v) = log_form(p, r);
    if sign == 0.0 || log_v < -745.0 {
        return Ok(0.0);
    }
    Ok(series_sign_factor(p) * sign * log_v.exp())
}

/// cosh(r) · |v_{m,n}(ã_r)| ∈ [0, 1] up to rounding; the discrete-series
/// bound with its exact constant 1.
pub fn bound_ratio(p: &DiscreteParams, r: f64) -> Result<f64> {
    if !(r >= 0.0) {
        return Err(Error::Domain(format!("bound_ratio requires r >= 0, got {r}")));
    }
    if r == 0.0 {
        return Ok(if p.m_offset == p.n_offset { 1.0 } else { 0.0 });
    }
    let (sign, _) = log_form(p, r);
    if sign == 0.0 {
        return Ok(0.0);
    }
    let lg = log_g_only(p, r);
    Ok(if lg < -745.0 { 0.0 } else { lg.exp() })
}

/// ∫_0^∞ |v_{m,n}(ã_r)|² sinh(2r) dr, the square-integrability normalization;
/// equals 1/(ℓ−1) independently of the K-type pair. Diverges for ℓ = 1.
pub fn formal_degree_integral(p: &DiscreteParams, cfg: &QuadConfig) -> Result<QuadResult> {
    if p.ell < 2 {
        return Err(Error::Domain(
            "formal degree integral diverges for ell = 1".into(),
        ));
    }
    let osc = f64::from(p.m_offset + p.n_offset) + 2.0;
    let cfg = cfg.with_oscillation(cfg.oscillation_scale.max(osc));
    integrate_halfline(
        |r| {
            if r == 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            let (sign, log_v) = log_form(p, r);
            if sign == 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            // |v|² sinh(2r), composed in logs to dodge overflow at large r
            let ln_sinh2r = 2.0 * r + (0.5 * (1.0 - (-4.0 * r).exp())).ln();
            let l = 2.0 * log_v + ln_sinh2r;
            Complex64::new(if l < -745.0 { 0.0 } else { l.exp() }, 0.0)
        },
        &cfg,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plus(ell: u32, mo: u32, no: u32) -> DiscreteParams {
        DiscreteParams::new(ell, SeriesSign::Plus, mo, no).unwrap()
    }

    /// Gamma-prefactor route of the same closed form (cross-check oracle for
    /// small indices, where nothing overflows): for m ≥ n,
    /// (−1)^{n−h} (Γ(m+h)Γ(n+1−h)/(Γ(n+h)Γ(m+1−h)))^{1/2} y^{−h}
    /// (y/(y+1))^{h+(m−n)/2} P_{n−h}^{(2h−1, m−n)}((y−1)/(y+1)).
    fn gamma_route(ell: u32, mo: u32, no: u32, r: f64) -> f64 {
        assert!(mo >= no);
        let h = f64::from(ell) / 2.0;
        let m = h + f64::from(mo);
        let n = h + f64::from(no);
        let y = r.sinh().powi(2);
        let x = (y - 1.0) / (y + 1.0);
        let lg = |v: f64| log_gamma(v).unwrap();
        let pref = (0.5 * (lg(m + h) + lg(n + 1.0 - h) - lg(n + h) - lg(m + 1.0 - h))).exp();
        let sign = if no % 2 == 0 { 1.0 } else { -1.0 };
        sign * pref
            * y.powf(-h)
            * (y / (y + 1.0)).powf(h + (m - n) / 2.0)
            * crate::specfun::jacobi_poly(no, 2.0 * h - 1.0, m - n, x).unwrap()
    }

    #[test]
    fn identity_element_is_delta() {
        assert_eq!(coefficient(&plus(3, 2, 2), 0.0).unwrap(), 1.0);
        assert_eq!(coefficient(&plus(3, 2, 5), 0.0).unwrap(), 0.0);
    }

    #[test]
    fn lowest_ktype_is_sech_power() {
        // m = n = h: v = (cosh r)^{-ℓ}
        for ell in 1..=6u32 {
            for &r in &[0.1, 1.0, 2.0, 5.5] {
                let v = coefficient(&plus(ell, 0, 0), r).unwrap();
                let expect = r.cosh().powi(-(ell as i32));
                assert!(
                    (v - expect).abs() <= 1e-12 * expect,
                    "ell={ell} r={r}: {v} vs {expect}"
                );
            }
        }
    }

    #[test]
    fn weight_one_saturates_bound() {
        // ℓ=1, m=n=h: exactly (cosh r)^{-1}, so the ratio is identically 1
        for &r in &[0.0, 0.5, 2.0, 6.0] {
            let ratio = bound_ratio(&plus(1, 0, 0), r).unwrap();
            assert!((ratio - 1.0).abs() < 1e-12, "r={r}: {ratio}");
        }
        let v = coefficient(&plus(1, 0, 0), 2.0).unwrap();
        assert!((v - 1.0 / 2.0f64.cosh()).abs() < 1e-14);
    }

    #[test]
    fn frozen_oracle_values() {
        let v = coefficient(&plus(4, 3, 1), 1.3).unwrap();
        assert!((v + 0.241863828027915052).abs() < 1e-13, "got {v}");
        let v = coefficient(&plus(5, 7, 2), 0.8).unwrap();
        assert!((v + 0.123635345514675439).abs() < 1e-13, "got {v}");
    }

    #[test]
    fn transpose_symmetry_with_sign() {
        for &(ell, mo, no, r) in &[(4u32, 3u32, 1u32, 1.3f64), (5, 7, 2, 0.8), (2, 4, 1, 2.1)] {
            let a = coefficient(&plus(ell, mo, no), r).unwrap();
            let b = coefficient(&plus(ell, no, mo), r).unwrap();
            assert!((a.abs() - b.abs()).abs() <= 1e-13 * a.abs().max(1e-300));
            let parity = if (i64::from(mo) - i64::from(no)) % 2 == 0 {
                1.0
            } else {
                -1.0
            };
            assert!((a - parity * b).abs() <= 1e-13 * a.abs().max(1e-300));
        }
    }

    #[test]
    fn minus_family_relation() {
        for &(ell, mo, no, r) in &[(3u32, 2u32, 5u32, 1.1f64), (4, 0, 3, 2.0)] {
            let pm = DiscreteParams::new(ell, SeriesSign::Minus, mo, no).unwrap();
            let pp = plus(ell, mo, no);
            let vm = coefficient(&pm, r).unwrap();
            let vp = coefficient(&pp, r).unwrap();
            let parity = if (i64::from(mo) - i64::from(no)) % 2 == 0 {
                1.0
            } else {
                -1.0
            };
            assert_eq!(vm, parity * vp);
        }
    }

    #[test]
    fn gamma_prefactor_route_agrees() {
        // two representations of the closed form agree to 1e-10 relative
        for &(ell, mo, no, r) in &[
            (1u32, 3u32, 1u32, 0.7f64),
            (2, 5, 0, 1.4),
            (4, 3, 1, 1.3),
            (6, 8, 8, 2.2),
            (3, 10, 4, 0.5),
        ] {
            let a = coefficient(&plus(ell, mo, no), r).unwrap();
            let b = gamma_route(ell, mo, no, r);
            assert!(
                (a - b).abs() <= 1e-10 * b.abs().max(1e-300),
                "({ell},{mo},{no},{r}): {a} vs {b}"
            );
        }
    }

    #[test]
    fn bound_ratio_in_unit_interval_on_grid() {
        for ell in 1..=6u32 {
            for mo in [0u32, 1, 7, 40] {
                for no in [0u32, 2, 40] {
                    let p = plus(ell, mo, no);
                    let mut r = 0.0;
                    while r <= 6.0 {
                        let ratio = bound_ratio(&p, r).unwrap();
                        assert!(
                            (0.0..=1.0 + 1e-12).contains(&ratio),
                            "ell={ell} mo={mo} no={no} r={r}: {ratio}"
                        );
                        r += 0.31;
                    }
                }
            }
        }
    }

    #[test]
    fn no_overflow_at_extreme_radius() {
        let p = plus(6, 40, 40);
        let v = coefficient(&p, 400.0).unwrap();
        assert!(v == 0.0 || v.abs() < 1e-300);
        let ratio = bound_ratio(&p, 400.0).unwrap();
        assert!(ratio.is_finite() && ratio <= 1.0 + 1e-12);
    }

    #[test]
    fn formal_degree_analytic_anchor() {
        // ℓ=2, m=n=h: ∫ (cosh r)^{-4} sinh 2r dr = 1 = 1/(ℓ−1)
        let q = formal_degree_integral(&plus(2, 0, 0), &QuadConfig::default()).unwrap();
        assert!((q.value.re - 1.0).abs() < 1e-9, "got {}", q.value.re);
        // ℓ=4: 1/3 for any K-type pair
        let q = formal_degree_integral(&plus(4, 0, 0), &QuadConfig::default()).unwrap();
        assert!((q.value.re - 1.0 / 3.0).abs() < 1e-8);
        let q = formal_degree_integral(&plus(4, 3, 1), &QuadConfig::default()).unwrap();
        assert!((q.value.re - 1.0 / 3.0).abs() < 1e-6 / 3.0, "got {}", q.value.re);
    }

    #[test]
    fn formal_degree_rejects_weight_one() {
        assert!(formal_degree_integral(&plus(1, 0, 0), &QuadConfig::default()).is_err());
    }

    #[test]
    fn parameter_validation() {
        assert!(DiscreteParams::new(0, SeriesSign::Plus, 0, 0).is_err());
        assert!(DiscreteParams::new(2, SeriesSign::Plus, 201, 0).is_err());
        assert!(DiscreteParams::new(101, SeriesSign::Plus, 0, 0).is_err());
        assert!(coefficient(&plus(2, 0, 0), -1.0).is_err());
    }
}
