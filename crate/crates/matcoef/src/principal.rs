//! Principal-series matrix coefficients ⟨π_{½is,ε}(a_r) f_μ, f_ν⟩ in the
//! K-eigenbasis, with the decay-bound ratios they satisfy.
//!
//! The coefficient is the line integral
//!
//! ```text
//! (1/π) e^{-r} ∫_R (e^{-2r}+t²)^{(is-1)/2} e^{iμ·atan(e^r t)}
//!                  (1+e^{-2r}t²)^{-(is+1)/2} e^{-iν·atan(e^{-r} t)} dt
//! ```
//!
//! with the branch z^w = exp(w ln z) for z > 0. Before quadrature the
//! integration variable is rescaled, t = e^{-r}·τ, which keeps the phase
//! derivative of the integrand bounded by |s|+|μ|+|ν| uniformly in r; the
//! engine's node budget is sized by exactly that scale.

use crate::error::{Error, Result};
use crate::phases::PhaseLadder;
use crate::quad::{integrate_line_batch, QuadConfig, QuadResult};
use num_complex::Complex64;

pub const MAX_SPECTRAL: f64 = 100.0;
pub const MAX_KTYPE: i64 = 200;

/// Spectral parameter, parity и K-type indices of one coefficient.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrincipalParams {
    pub s: f64,
    pub epsilon: u8,
    pub mu: i64,
    pub nu: i64,
}

impl PrincipalParams {
    /// Validates the parity constraint μ ≡ ν ≡ ε (mod 2) and the documented
    /// evaluation ranges |s| ≤ 100, |μ|, |ν| ≤ 200.
    pub fn new(s: f64, epsilon: u8, mu: i64, nu: i64) -> Result<Self> {
        if epsilon > 1 {
            return Err(Error::Domain(format!("epsilon must be 0 or 1, got {epsilon}")));
        }
        if !s.is_finite() || s.abs() > MAX_SPECTRAL {
            return Err(Error::Domain(format!(
                "spectral parameter out of range |s| <= {MAX_SPECTRAL}: {s}"
            )));
        }
        for (name, idx) in [("mu", mu), ("nu", nu)] {
            if idx.abs() > MAX_KTYPE {
                return Err(Error::Domain(format!(
                    "{name} out of range |{name}| <= {MAX_KTYPE}: {idx}"
                )));
            }
            if idx.rem_euclid(2) != i64::from(epsilon) {
                return Err(Error::Domain(format!(
                    "{name} = {idx} has wrong parity for epsilon = {epsilon}"
                )));
            }
        }
        Ok(PrincipalParams { s, epsilon, mu, nu })
    }
}

/// Shared node data for a batch of K-type pairs at fixed (s, r).
struct Node {
    base: Complex64,
    mu_ladder: PhaseLadder,
    nu_ladder: PhaseLadder,
}

/// Coefficients for many (μ, ν) pairs at fixed s and r from one shared-node
/// quadrature. Pairs must satisfy the parity constraint already.
pub fn coefficient_batch(
    s: f64,
    pairs: &[(i64, i64)],
    r: f64,
    cfg: &QuadConfig,
) -> Result<Vec<Result<QuadResult>>> {
    if !(r >= 0.0) {
        return Err(Error::Domain(format!("coefficient requires r >= 0, got {r}")));
    }
    if pairs.is_empty() {
        return Ok(Vec::new());
    }
    let mu_lo = pairs.iter().map(|p| p.0).min().unwrap();
    let mu_hi = pairs.iter().map(|p| p.0).max().unwrap();
    let nu_lo = pairs.iter().map(|p| p.1).min().unwrap();
    let nu_hi = pairs.iter().map(|p| p.1).max().unwrap();
    let osc =
        s.abs() + (mu_lo.abs().max(mu_hi.abs()) + nu_lo.abs().max(nu_hi.abs())) as f64;
    let cfg = cfg.with_oscillation(cfg.oscillation_scale.max(osc));

    let q2 = (-2.0 * r).exp();
    let q4 = q2 * q2;
    let raw = integrate_line_batch(
        |tau| {
            let l1 = (tau * tau).ln_1p();
            let l2 = (q4 * tau * tau).ln_1p();
            let amp = (-0.5 * (l1 + l2)).exp();
            let phi0 = 0.5 * s * (l1 - l2);
            Ok(Node {
                base: Complex64::from_polar(amp, phi0),
                mu_ladder: PhaseLadder::new(tau.atan(), mu_lo, mu_hi),
                nu_ladder: PhaseLadder::new((q2 * tau).atan(), nu_lo, nu_hi),
            })
        },
        |node: &Node, m| {
            let (mu, nu) = pairs[m];
            node.base * node.mu_ladder.get(mu) * node.nu_ladder.get(nu).conj()
        },
        |_, _| 0.0,
        pairs.len(),
        &cfg,
    )?;

    // (1/π) e^{-r} ∫ I(t) dt = (1/π) e^{-r} e^{-irs} ∫ (rescaled integrand) dτ
    let prefactor = Complex64::from_polar((-r).exp() / std::f64::consts::PI, -r * s);
    Ok(raw
        .into_iter()
        .map(|res| match res {
            Ok(q) => Ok(scale(q, prefactor)),
            Err(Error::ToleranceNotMet { best }) => {
                Err(Error::ToleranceNotMet { best: scale(best, prefactor) })
            }
            Err(e) => Err(e),
        })
        .collect())
}

fn scale(q: QuadResult, k: Complex64) -> QuadResult {
    QuadResult {
        value: q.value * k,
        err_estimate: q.err_estimate * k.norm(),
        nodes_used: q.nodes_used,
    }
}

/// ⟨π_{½is,ε}(a_r) f_μ, f_ν⟩ for r ≥ 0.
pub fn coefficient(p: &PrincipalParams, r: f64, cfg: &QuadConfig) -> Result<QuadResult> {
    let mut v = coefficient_batch(p.s, &[(p.mu, p.nu)], r, cfg)?;
    v.pop().unwrap()
}

/// e^r · |coefficient| · |s|/(|s|+1), the sharp-rate ratio for s ≠ 0, r ≥ 1.
/// Finite by the principal-series decay theorem; the harness records its
/// empirical maximum.
pub fn bound_ratio(p: &PrincipalParams, r: f64, cfg: &QuadConfig) -> Result<f64> {
    if p.s == 0.0 {
        return Err(Error::Domain("bound_ratio requires s != 0".into()));
    }
    if !(r >= 1.0) {
        return Err(Error::Domain(format!("bound_ratio requires r >= 1, got {r}")));
    }
    let q = coefficient(p, r, cfg)?;
    Ok(r.exp() * q.value.norm() * p.s.abs() / (p.s.abs() + 1.0))
}

/// |coefficient| / ((1+r) e^{-r}), the uniform-estimate ratio valid for every
/// s including s = 0.
pub fn howe_tan_ratio(p: &PrincipalParams, r: f64, cfg: &QuadConfig) -> Result<f64> {
    if !(r >= 0.0) {
        return Err(Error::Domain(format!("howe_tan_ratio requires r >= 0, got {r}")));
    }
    let q = coefficient(p, r, cfg)?;
    Ok(q.value.norm() / ((1.0 + r) * (-r).exp()))
}
