//! Complementary-series machinery: intertwining eigenvalues d(λ,μ), the
//! A_{λ,μ,ν}(±r) integrals and the normalized coefficient
//! ⟪π_λ(a_r) g_{λ,μ}, g_{λ,ν}⟫ = √(d(λ,μ)/d(λ,ν)) · A_{λ,μ,ν}(r),
//! plus the decay-bound ratio of the complementary estimate.

use crate::error::{Error, Result};
use crate::phases::PhaseLadder;
use crate::quad::{integrate_line_batch, QuadConfig, QuadResult};
use crate::specfun::log_gamma;

pub const MAX_KTYPE: i64 = 200;

/// Parameters of one complementary-series coefficient: λ ∈ ±(0, ½) and even
/// K-type indices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplementaryParams {
    pub lambda: f64,
    pub mu: i64,
    pub nu: i64,
}

impl ComplementaryParams {
    pub fn new(lambda: f64, mu: i64, nu: i64) -> Result<Self> {
        check_lambda(lambda)?;
        for (name, idx) in [("mu", mu), ("nu", nu)] {
            if idx.rem_euclid(2) != 0 {
                return Err(Error::Domain(format!(
                    "{name} must be even in the complementary series, got {idx}"
                )));
            }
            if idx.abs() > MAX_KTYPE {
                return Err(Error::Domain(format!(
                    "{name} out of range |{name}| <= {MAX_KTYPE}: {idx}"
                )));
            }
        }
        Ok(ComplementaryParams { lambda, mu, nu })
    }
}

fn check_lambda(lambda: f64) -> Result<()> {
    if !(lambda.abs() < 0.5) || lambda == 0.0 || !lambda.is_finite() {
        return Err(Error::Domain(format!(
            "lambda must lie in (-1/2, 0) or (0, 1/2), got {lambda}"
        )));
    }
    Ok(())
}

/// Intertwining eigenvalue d(λ,μ) = 2^{2λ} Γ(½+λ+μ/2)/Γ(½−λ+μ/2) > 0 for
/// even μ.
///
/// Evaluated from the μ = 0 base case by the Gamma-ratio recurrence
/// d(λ,μ+2)/d(λ,μ) = (½+λ+μ/2)/(½−λ+μ/2); negative μ reduces to |μ| via the
/// reflection parity identity for even μ, so every Gamma argument stays
/// positive.
pub fn d_coeff(lambda: f64, mu: i64) -> Result<f64> {
    check_lambda(lambda)?;
    if mu.rem_euclid(2) != 0 {
        return Err(Error::Domain(format!("d_coeff requires even mu, got {mu}")));
    }
    let base = (2.0 * lambda * std::f64::consts::LN_2 + log_gamma(0.5 + lambda)?
        - log_gamma(0.5 - lambda)?)
        .exp();
    let half_steps = (mu.unsigned_abs() / 2) as u32;
    let mut d = base;
    for j in 0..half_steps {
        let jf = f64::from(j);
        d *= (0.5 + lambda + jf) / (0.5 - lambda + jf);
    }
    Ok(d)
}

/// Shared node data for a batch of (μ, ν) pairs at fixed (λ, ρ).
struct Node {
    amp: f64,
    mu_ladder: PhaseLadder,
    nu_ladder: PhaseLadder,
}

/// A_{λ,μ,ν}(ρ) for many (μ,ν) pairs at fixed λ and signed radial part ρ.
///
/// Same branch conventions and caller-side rescaling t = e^{-|ρ|}τ as the
/// principal series; for ρ < 0 the roles of the two arctan phases swap.
pub fn a_integral_batch(
    lambda: f64,
    pairs: &[(i64, i64)],
    signed_r: f64,
    cfg: &QuadConfig,
) -> Result<Vec<Result<QuadResult>>> {
    check_lambda(lambda)?;
    if pairs.is_empty() {
        return Ok(Vec::new());
    }
    let mu_lo = pairs.iter().map(|p| p.0).min().unwrap();
    let mu_hi = pairs.iter().map(|p| p.0).max().unwrap();
    let nu_lo = pairs.iter().map(|p| p.1).min().unwrap();
    let nu_hi = pairs.iter().map(|p| p.1).max().unwrap();
    let osc = (mu_lo.abs().max(mu_hi.abs()) + nu_lo.abs().max(nu_hi.abs())) as f64;
    let cfg = cfg.with_oscillation(cfg.oscillation_scale.max(osc));

    let rho = signed_r;
    let q2 = (-2.0 * rho.abs()).exp();
    let q4 = q2 * q2;
    // exponents of the two algebraic factors
    let e_inner = -(2.0 * lambda + 1.0) / 2.0;
    let e_outer = (2.0 * lambda - 1.0) / 2.0;
    let prefactor = if rho >= 0.0 {
        (-rho * (1.0 - 2.0 * lambda)).exp() / std::f64::consts::PI
    } else {
        (rho * (1.0 + 2.0 * lambda)).exp() / std::f64::consts::PI
    };

    let raw = integrate_line_batch(
        |tau| {
            let t2 = tau * tau;
            let (amp, mu_angle, nu_angle);
            if rho >= 0.0 {
                // (1+τ²)^{-(2λ+1)/2} (1+e^{-4ρ}τ²)^{(2λ-1)/2}
                amp = (e_inner * t2.ln_1p() + e_outer * (q4 * t2).ln_1p()).exp();
                mu_angle = tau.atan();
                nu_angle = (q2 * tau).atan();
            } else {
                // (1+e^{4ρ}τ²)^{-(2λ+1)/2} (1+τ²)^{(2λ-1)/2}
                amp = (e_inner * (q4 * t2).ln_1p() + e_outer * t2.ln_1p()).exp();
                mu_angle = (q2 * tau).atan();
                nu_angle = tau.atan();
            }
            Ok(Node {
                amp,
                mu_ladder: PhaseLadder::new(mu_angle, mu_lo, mu_hi),
                nu_ladder: PhaseLadder::new(nu_angle, nu_lo, nu_hi),
            })
        },
        |node: &Node, m| {
            let (mu, nu) = pairs[m];
            node.amp * node.mu_ladder.get(mu) * node.nu_ladder.get(nu).conj()
        },
        |_, _| 0.0,
        pairs.len(),
        &cfg,
    )?;

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

fn scale(q: QuadResult, k: f64) -> QuadResult {
    QuadResult {
        value: q.value * k,
        err_estimate: q.err_estimate * k.abs(),
        nodes_used: q.nodes_used,
    }
}

/// The dt integral A_{λ,μ,ν}(signed_r); any real signed_r is allowed.
pub fn a_integral(
    lambda: f64,
    mu: i64,
    nu: i64,
    signed_r: f64,
    cfg: &QuadConfig,
) -> Result<QuadResult> {
    if mu.rem_euclid(2) != 0 || nu.rem_euclid(2) != 0 {
        return Err(Error::Domain("a_integral requires even mu, nu".into()));
    }
    let mut v = a_integral_batch(lambda, &[(mu, nu)], signed_r, cfg)?;
    v.pop().unwrap()
}

/// ⟪π_λ(a_r) g_{λ,μ}, g_{λ,ν}⟫ for r ≥ 0, on the d-normalized basis.
pub fn coefficient(p: &ComplementaryParams, r: f64, cfg: &QuadConfig) -> Result<QuadResult> {
    if !(r >= 0.0) {
        return Err(Error::Domain(format!("coefficient requires r >= 0, got {r}")));
    }
    let weight = (d_coeff(p.lambda, p.mu)? / d_coeff(p.lambda, p.nu)?).sqrt();
    let a = a_integral(p.lambda, p.mu, p.nu, r, cfg)?;
    Ok(QuadResult {
        value: a.value * weight,
        err_estimate: a.err_estimate * weight,
        nodes_used: a.nodes_used,
    })
}

/// |coefficient| · |λ| · e^{r(1−2|λ|)} for r ≥ 1; finite by the
/// complementary-series decay theorem.
pub fn bound_ratio(p: &ComplementaryParams, r: f64, cfg: &QuadConfig) -> Result<f64> {
    if !(r >= 1.0) {
        return Err(Error::Domain(format!("bound_ratio requires r >= 1, got {r}")));
    }
    let q = coefficient(p, r, cfg)?;
    Ok(q.value.norm() * p.lambda.abs() * (r * (1.0 - 2.0 * p.lambda.abs())).exp())
}
