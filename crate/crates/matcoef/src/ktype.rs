//! Coefficients for general group elements and general vectors built from
//! K-eigenbasis data, and the double torus average that connects pointwise
//! estimates to integral ones.
//!
//! For f = Σ b_μ e_μ, g = Σ c_ν e_ν and x = k_{θ₁} a_r k_{θ₂},
//!
//! ```text
//! ⟨π(x) f, g⟩ = Σ_{μ,ν} b_μ c̄_ν e^{i(χ(μ)θ₂ + χ(ν)θ₁)} ⟨π(a_r) e_μ, e_ν⟩,
//! ```
//!
//! and the (θ₁,θ₂)-average of |⟨π(x)f,g⟩|² with unit-mass torus measure
//! collapses to Σ |b_μ|²|c_ν|² |⟨π(a_r)e_μ,e_ν⟩|².

use crate::complementary;
use crate::discrete::{self, DiscreteParams, SeriesSign};
use crate::error::{Error, Result};
use crate::principal;
use crate::quad::{QuadConfig, QuadResult};
use num_complex::Complex64;

/// Which irreducible family a vector or coefficient lives in, with its
/// series parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Representation {
    Principal { s: f64, epsilon: u8 },
    Complementary { lambda: f64 },
    DiscretePlus { ell: u32 },
    DiscreteMinus { ell: u32 },
}

impl Representation {
    /// Validates one K-type index for this representation. Principal and
    /// complementary vectors carry the K-character μ itself; discrete vectors
    /// carry the nonnegative offset from the edge K-type.
    pub fn validate_index(&self, idx: i64) -> Result<()> {
        match *self {
            Representation::Principal { epsilon, .. } => {
                if idx.rem_euclid(2) != i64::from(epsilon) {
                    return Err(Error::Domain(format!(
                        "index {idx} has wrong parity for epsilon = {epsilon}"
                    )));
                }
                if idx.abs() > principal::MAX_KTYPE {
                    return Err(Error::Domain(format!("index {idx} out of range")));
                }
            }
            Representation::Complementary { .. } => {
                if idx.rem_euclid(2) != 0 {
                    return Err(Error::Domain(format!(
                        "complementary-series index must be even, got {idx}"
                    )));
                }
                if idx.abs() > complementary::MAX_KTYPE {
                    return Err(Error::Domain(format!("index {idx} out of range")));
                }
            }
            Representation::DiscretePlus { .. } | Representation::DiscreteMinus { .. } => {
                if idx < 0 || idx > i64::from(discrete::MAX_OFFSET) {
                    return Err(Error::Domain(format!(
                        "discrete-series offset must lie in 0..={}, got {idx}",
                        discrete::MAX_OFFSET
                    )));
                }
            }
        }
        Ok(())
    }

    /// Integer K-character of the basis vector with stored index `idx`:
    /// π(k_θ) e = e^{i·character·θ} e. For the discrete families the edge
    /// K-type has character ∓ℓ and successive offsets step by ∓2.
    pub fn character(&self, idx: i64) -> i64 {
        match *self {
            Representation::Principal { .. } | Representation::Complementary { .. } => idx,
            Representation::DiscretePlus { ell } => -(i64::from(ell) + 2 * idx),
            Representation::DiscreteMinus { ell } => i64::from(ell) + 2 * idx,
        }
    }

    /// ⟨π(a_r) e_μ, e_ν⟩ for one pair of stored indices.
    pub fn diagonal_coefficient(
        &self,
        mu: i64,
        nu: i64,
        r: f64,
        cfg: &QuadConfig,
    ) -> Result<QuadResult> {
        let mut m = self.diagonal_matrix(&[mu], &[nu], r, cfg)?;
        Ok(m.pop().unwrap().pop().unwrap())
    }

    /// Matrix of ⟨π(a_r) e_μ, e_ν⟩ over index lists, batched per family.
    pub fn diagonal_matrix(
        &self,
        mus: &[i64],
        nus: &[i64],
        r: f64,
        cfg: &QuadConfig,
    ) -> Result<Vec<Vec<QuadResult>>> {
        for &i in mus.iter().chain(nus) {
            self.validate_index(i)?;
        }
        let pairs: Vec<(i64, i64)> = mus
            .iter()
            .flat_map(|&m| nus.iter().map(move |&n| (m, n)))
            .collect();
        let flat: Vec<QuadResult> = match *self {
            Representation::Principal { s, .. } => {
                principal::coefficient_batch(s, &pairs, r, cfg)?
                    .into_iter()
                    .collect::<Result<_>>()?
            }
            Representation::Complementary { lambda } => {
                let raw = complementary::a_integral_batch(lambda, &pairs, r, cfg)?;
                let mut out = Vec::with_capacity(raw.len());
                for (res, &(mu, nu)) in raw.into_iter().zip(&pairs) {
                    let a = res?;
                    let w = (complementary::d_coeff(lambda, mu)?
                        / complementary::d_coeff(lambda, nu)?)
                    .sqrt();
                    out.push(QuadResult {
                        value: a.value * w,
                        err_estimate: a.err_estimate * w,
                        nodes_used: a.nodes_used,
                    });
                }
                out
            }
            Representation::DiscretePlus { ell } | Representation::DiscreteMinus { ell } => {
                let sign = if matches!(self, Representation::DiscretePlus { .. }) {
                    SeriesSign::Plus
                } else {
                    SeriesSign::Minus
                };
                let mut out = Vec::with_capacity(pairs.len());
                for &(mu, nu) in &pairs {
                    // ⟨π(a_r) e_μ, e_ν⟩ = v_{ν,μ}(ã_r): bra index first
                    let p = DiscreteParams::new(ell, sign, nu as u32, mu as u32)?;
                    let v = discrete::coefficient(&p, r)?;
                    out.push(QuadResult {
                        value: Complex64::new(v, 0.0),
                        err_estimate: 0.0,
                        nodes_used: 1,
                    });
                }
                out
            }
        };
        let mut it = flat.into_iter();
        Ok(mus
            .iter()
            .map(|_| nus.iter().map(|_| it.next().unwrap()).collect())
            .collect())
    }
}

/// Group element in Cartan coordinates k_{θ₁} a_r k_{θ₂}; angles are
/// normalized into [-π, π).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KakElement {
    pub theta1: f64,
    pub r: f64,
    pub theta2: f64,
}

impl KakElement {
    pub fn new(theta1: f64, r: f64, theta2: f64) -> Result<Self> {
        if !(r >= 0.0) {
            return Err(Error::Domain(format!(
                "Cartan radial part must be >= 0, got {r}"
            )));
        }
        let wrap = |th: f64| {
            let two_pi = 2.0 * std::f64::consts::PI;
            (th + std::f64::consts::PI).rem_euclid(two_pi) - std::f64::consts::PI
        };
        Ok(KakElement {
            theta1: wrap(theta1),
            r,
            theta2: wrap(theta2),
        })
    }
}

/// Finite expansion of a Hilbert-space vector in the K-eigenbasis.
#[derive(Debug, Clone, PartialEq)]
pub struct KTypeVector {
    entries: Vec<(i64, Complex64)>,
}

impl KTypeVector {
    /// Entries must have distinct indices valid for the representation they
    /// will be used with (checked there).
    pub fn new(entries: Vec<(i64, Complex64)>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for &(idx, _) in &entries {
            if !seen.insert(idx) {
                return Err(Error::Domain(format!("duplicate K-type index {idx}")));
            }
        }
        Ok(KTypeVector { entries })
    }

    pub fn basis_vector(idx: i64) -> Self {
        KTypeVector {
            entries: vec![(idx, Complex64::new(1.0, 0.0))],
        }
    }

    pub fn entries(&self) -> &[(i64, Complex64)] {
        &self.entries
    }

    pub fn indices(&self) -> Vec<i64> {
        self.entries.iter().map(|e| e.0).collect()
    }

    pub fn norm_sq(&self) -> f64 {
        self.entries.iter().map(|e| e.1.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Rescales to unit norm (no-op on the zero vector).
    pub fn normalized(mut self) -> Self {
        let n = self.norm();
        if n > 0.0 {
            for e in &mut self.entries {
                e.1 /= n;
            }
        }
        self
    }

    pub fn scaled(mut self, a: Complex64) -> Self {
        for e in &mut self.entries {
            e.1 *= a;
        }
        self
    }
}

/// ⟨π(k_{θ₁} a_r k_{θ₂}) f, g⟩ by the phase-weighted sum over the diagonal
/// coefficients; the torus directions are exact.
pub fn general_coefficient(
    rep: &Representation,
    f: &KTypeVector,
    g: &KTypeVector,
    x: &KakElement,
    cfg: &QuadConfig,
) -> Result<QuadResult> {
    let mus = f.indices();
    let nus = g.indices();
    let matrix = rep.diagonal_matrix(&mus, &nus, x.r, cfg)?;
    let mut value = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut nodes = 0u64;
    for (fi, &(mu, b)) in f.entries().iter().enumerate() {
        for (gi, &(nu, c)) in g.entries().iter().enumerate() {
            let q = &matrix[fi][gi];
            let phase = Complex64::from_polar(
                1.0,
                rep.character(mu) as f64 * x.theta2 + rep.character(nu) as f64 * x.theta1,
            );
            value += b * c.conj() * phase * q.value;
            err += (b * c).norm() * q.err_estimate;
            nodes += q.nodes_used;
        }
    }
    Ok(QuadResult {
        value,
        err_estimate: err,
        nodes_used: nodes.max(1),
    })
}

/// Double K-average ∫∫ |⟨π(k₁ a_r k₂) f, g⟩|² dθ₁ dθ₂ / (2π)² computed by
/// the basis sum Σ |b_μ|²|c_ν|² |⟨π(a_r)e_μ,e_ν⟩|². Returns the value and a
/// propagated error estimate.
pub fn averaged_square(
    rep: &Representation,
    f: &KTypeVector,
    g: &KTypeVector,
    r: f64,
    cfg: &QuadConfig,
) -> Result<(f64, f64)> {
    let mus = f.indices();
    let nus = g.indices();
    let matrix = rep.diagonal_matrix(&mus, &nus, r, cfg)?;
    let mut total = 0.0;
    let mut err = 0.0;
    for (fi, &(_, b)) in f.entries().iter().enumerate() {
        for (gi, &(_, c)) in g.entries().iter().enumerate() {
            let q = &matrix[fi][gi];
            let w = b.norm_sqr() * c.norm_sqr();
            total += w * q.value.norm_sqr();
            err += w * 2.0 * q.value.norm() * q.err_estimate;
        }
    }
    Ok((total, err))
}
