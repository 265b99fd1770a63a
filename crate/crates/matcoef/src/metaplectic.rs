//! Wigner distributions of Hermite functions, the Moyal identity, the
//! torus-averaged metaplectic coefficient over diagonal symplectic elements,
//! and the Schrödinger dispersive check.
//!
//! The torus average of |⟨ρ(t₁ g t₂)φ₁, φ₂⟩|² with g = diag(λ, λ⁻¹) reduces
//! to products of the planar integrals
//!
//! ```text
//! I(m, n, λ) = ∬ W(h_m)(λ⁻¹x + iλy) · W(h_n)(x + iy) dx dy,
//! ```
//!
//! with I(m,n,1) = δ_{mn} and λ·I(m,n,λ) uniformly bounded. Internally the
//! integral is evaluated in the symmetrized variables x = λ^{1/2}u,
//! y = λ^{-1/2}v (same value, λ-uniform conditioning).

use crate::error::{Error, Result};
use crate::quad::{integrate_line, integrate_plane, integrate_plane_batch, QuadConfig, QuadResult};
use crate::specfun::{hermite_fn, laguerre_fn};
use num_complex::Complex64;
use std::collections::HashMap;

pub const MAX_HERMITE: u32 = 200;
pub const MAX_PAIR_INDEX: u32 = 100;
pub const MAX_DILATION: f64 = 1000.0;

const SQRT_2_OVER_PI: f64 = 0.7978845608028653558798921; // √(2/π) = 2(2π)^{-1/2}

/// Multi-index β ∈ N^n labelling a tensor-product Hermite function.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HermiteMultiIndex(pub Vec<u32>);

impl HermiteMultiIndex {
    pub fn new(beta: Vec<u32>) -> Result<Self> {
        if beta.is_empty() {
            return Err(Error::Domain("multi-index must have length >= 1".into()));
        }
        if beta.iter().any(|&b| b > MAX_HERMITE) {
            return Err(Error::Domain(format!(
                "multi-index entries capped at {MAX_HERMITE}"
            )));
        }
        Ok(HermiteMultiIndex(beta))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

/// Finite expansion φ = Σ b_β h_β in tensor Hermite functions, all indices of
/// one common dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct HermiteVector {
    entries: Vec<(HermiteMultiIndex, Complex64)>,
    dim: usize,
}

impl HermiteVector {
    pub fn new(entries: Vec<(HermiteMultiIndex, Complex64)>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Domain("empty Hermite expansion".into()));
        }
        let dim = entries[0].0.dim();
        if entries.iter().any(|(b, _)| b.dim() != dim) {
            return Err(Error::Domain("mixed dimensions in Hermite expansion".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for (b, _) in &entries {
            if !seen.insert(b.0.clone()) {
                return Err(Error::Domain(format!("duplicate multi-index {:?}", b.0)));
            }
        }
        Ok(HermiteVector { entries, dim })
    }

    pub fn single(n: u32) -> Self {
        HermiteVector {
            entries: vec![(HermiteMultiIndex(vec![n]), Complex64::new(1.0, 0.0))],
            dim: 1,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[(HermiteMultiIndex, Complex64)] {
        &self.entries
    }

    pub fn norm_sq(&self) -> f64 {
        self.entries.iter().map(|e| e.1.norm_sqr()).sum()
    }

    pub fn normalized(mut self) -> Self {
        let n = self.norm_sq().sqrt();
        if n > 0.0 {
            for e in &mut self.entries {
                e.1 /= n;
            }
        }
        self
    }

    /// Pointwise evaluation (dimension 1 only), used by the direct-quadrature
    /// oracle.
    fn eval_1d(&self, t: f64) -> Complex64 {
        debug_assert_eq!(self.dim, 1);
        self.entries
            .iter()
            .map(|(b, a)| a * hermite_fn(b.0[0], t))
            .sum()
    }
}

/// Diagonal symplectic element diag(λ₁,…,λₙ,λ₁⁻¹,…,λₙ⁻¹) in its positive
/// normal form: entries ≥ 1 sorted nonincreasing.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagonalSymplectic {
    lambdas: Vec<f64>,
}

impl DiagonalSymplectic {
    pub fn new(lambdas: Vec<f64>) -> Result<Self> {
        if lambdas.is_empty() {
            return Err(Error::Domain("dimension must be >= 1".into()));
        }
        if lambdas.iter().any(|&l| !(1.0..=MAX_DILATION).contains(&l)) {
            return Err(Error::Domain(format!(
                "dilation entries must lie in [1, {MAX_DILATION}]"
            )));
        }
        if lambdas.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(
                "dilation entries must be sorted nonincreasing".into(),
            ));
        }
        Ok(DiagonalSymplectic { lambdas })
    }

    pub fn lambdas(&self) -> &[f64] {
        &self.lambdas
    }

    pub fn dim(&self) -> usize {
        self.lambdas.len()
    }

    pub fn product(&self) -> f64 {
        self.lambdas.iter().product()
    }
}

/// Diagonal Wigner transform W(h_n)(z) = 2(−1)ⁿ(2π)^{-1/2} 𝓛_n(2|z|²);
/// depends on z only through |z|.
pub fn wigner_diag(n: u32, z: Complex64) -> Result<f64> {
    if n > MAX_HERMITE {
        return Err(Error::Domain(format!("hermite index capped at {MAX_HERMITE}")));
    }
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    Ok(sign * SQRT_2_OVER_PI * laguerre_fn(n, 0, 2.0 * z.norm_sqr())?)
}

/// Cross Wigner transform W(h_{n+k}, h_n)(z) for k ≥ 1:
/// √(2/π)·(−1)ⁿ·(z̄/|z|)^k·𝓛_n^{(k)}(2|z|²), zero at z = 0.
///
/// The modulus is pinned by the Moyal identity (∫|W|² dσ = 1, which the
/// L²-normalization of 𝓛 delivers for every n, k); the phase convention is
/// the one that matches the defining integral, checked against
/// [`wigner_direct`] in the tests.
pub fn wigner_cross(n: u32, k: u32, z: Complex64) -> Result<Complex64> {
    if k == 0 {
        return Err(Error::Domain("wigner_cross requires k >= 1".into()));
    }
    if n + k > MAX_HERMITE {
        return Err(Error::Domain(format!(
            "hermite index n + k capped at {MAX_HERMITE}"
        )));
    }
    let az = z.norm();
    if az == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    let radial = sign * SQRT_2_OVER_PI * laguerre_fn(n, k, 2.0 * az * az)?;
    let angular = (z.conj() / az).powu(k);
    Ok(angular * radial)
}

/// W(h_m, h_n)(z) for any index pair (dimension 1).
pub fn wigner_pair(m: u32, n: u32, z: Complex64) -> Result<Complex64> {
    use std::cmp::Ordering;
    match m.cmp(&n) {
        Ordering::Equal => Ok(Complex64::new(wigner_diag(n, z)?, 0.0)),
        Ordering::Greater => wigner_cross(n, m - n, z),
        // W(h_n, h_{n+k})(z) = conj(W(h_{n+k}, h_n)(z)) for real Hermite data
        Ordering::Less => Ok(wigner_cross(m, n - m, z)?.conj()),
    }
}

/// Full table of W(h_m, h_n)(z) for m, n ≤ max_index, row-major with side
/// max_index + 1, from one Laguerre recurrence pass per diagonal.
pub fn wigner_pair_table(max_index: u32, z: Complex64) -> Result<Vec<Complex64>> {
    if max_index > MAX_HERMITE {
        return Err(Error::Domain(format!("hermite index capped at {MAX_HERMITE}")));
    }
    let side = max_index as usize + 1;
    let mut table = vec![Complex64::new(0.0, 0.0); side * side];
    let az = z.norm();
    let x = 2.0 * az * az;
    if az == 0.0 {
        for j in 0..side {
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            table[j * side + j] = Complex64::new(sign * SQRT_2_OVER_PI, 0.0);
        }
        return Ok(table);
    }
    let unit = z.conj() / az;
    let mut angular = Complex64::new(1.0, 0.0);
    for k in 0..side {
        let orders = crate::specfun::laguerre_all((side - 1 - k) as u32, k as u32, x);
        for (j, &l) in orders.iter().enumerate() {
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            let w = angular * (sign * SQRT_2_OVER_PI * l);
            table[(j + k) * side + j] = w;
            table[j * side + (j + k)] = w.conj();
        }
        angular *= unit;
    }
    Ok(table)
}

/// Cross-Wigner transform of two 1-dimensional Hermite expansions by direct
/// quadrature of the defining integral
/// (2π)^{-1/2} ∫ e^{-isy} φ₁(x+s/2) conj(φ₂(x−s/2)) ds at z = x + iy.
///
/// Oracle role: independent of the closed forms above.
pub fn wigner_direct(
    f: &HermiteVector,
    g: &HermiteVector,
    z: Complex64,
    cfg: &QuadConfig,
) -> Result<QuadResult> {
    if f.dim() != 1 || g.dim() != 1 {
        return Err(Error::Domain(
            "wigner_direct is the dimension-1 oracle only".into(),
        ));
    }
    let (x, y) = (z.re, z.im);
    let max_idx = f
        .entries()
        .iter()
        .chain(g.entries())
        .map(|(b, _)| b.0[0])
        .max()
        .unwrap_or(0);
    let osc = y.abs() + 2.0 * (2.0 * f64::from(max_idx) + 1.0).sqrt();
    let cfg = cfg.with_oscillation(cfg.oscillation_scale.max(osc));
    let q = integrate_line(
        |s| {
            let phase = Complex64::from_polar(1.0, -s * y);
            phase * f.eval_1d(x + s / 2.0) * g.eval_1d(x - s / 2.0).conj()
        },
        &cfg,
    )?;
    let norm = (2.0 * std::f64::consts::PI).sqrt().recip();
    Ok(QuadResult {
        value: q.value * norm,
        err_estimate: q.err_estimate * norm,
        nodes_used: q.nodes_used,
    })
}

fn check_pair_args(m: u32, n: u32, lambda: f64) -> Result<()> {
    if m > MAX_PAIR_INDEX || n > MAX_PAIR_INDEX {
        return Err(Error::Domain(format!(
            "pair-integral indices capped at {MAX_PAIR_INDEX}"
        )));
    }
    if !(1.0..=MAX_DILATION).contains(&lambda) {
        return Err(Error::Domain(format!(
            "dilation must lie in [1, {MAX_DILATION}], got {lambda}"
        )));
    }
    Ok(())
}

/// I(m, n, λ) = ∬ W(h_m)(λ⁻¹x + iλy) W(h_n)(x + iy) dx dy through the
/// spec'd iterated planar route. I(m,n,1) = δ_{mn}; λ·I is uniformly bounded.
pub fn laguerre_pair_integral(m: u32, n: u32, lambda: f64, cfg: &QuadConfig) -> Result<f64> {
    check_pair_args(m, n, lambda)?;
    let nu_max = 4.0 * f64::from(m.max(n)) + 2.0;
    let box_half = (2.0 * nu_max).sqrt() + 10.0;
    let sign = if (m + n) % 2 == 0 { 1.0 } else { -1.0 };
    let pref = 2.0 / std::f64::consts::PI;
    let osc = 2.0 * (nu_max * (lambda + 1.0 / lambda)).sqrt() + 4.0;
    let cfg2 = cfg.with_oscillation(cfg.oscillation_scale.max(osc));
    // symmetrized variables u = x/√λ, v = y·√λ: the two Laguerre arguments
    // become 2(u²/λ + λv²) and 2(λu² + v²/λ)
    let q = integrate_plane(
        |w| {
            let (u, v) = (w.re, w.im);
            if u.abs() > box_half || v.abs() > box_half {
                return Complex64::new(0.0, 0.0);
            }
            let a1 = 2.0 * (u * u / lambda + lambda * v * v);
            let a2 = 2.0 * (lambda * u * u + v * v / lambda);
            let l1 = laguerre_fn(m, 0, a1).expect("a1 >= 0");
            let l2 = laguerre_fn(n, 0, a2).expect("a2 >= 0");
            Complex64::new(l1 * l2, 0.0)
        },
        &cfg2,
    )?;
    Ok(sign * pref * q.value.re)
}

/// Matrix of I(m, n, λ) for all 0 ≤ m ≤ m_max, 0 ≤ n ≤ n_max from one
/// batched two-dimensional quadrature (shared Laguerre recurrences per node).
/// Returns (values, error estimates) in row-major [m][n] layout.
///
/// The integrand is even in both symmetrized variables, so only the positive
/// quadrant is evaluated, and the exact index symmetry I(m,n,λ) = I(n,m,λ)
/// halves the member set; the lower triangle is mirrored.
pub fn laguerre_pair_matrix(
    m_max: u32,
    n_max: u32,
    lambda: f64,
    cfg: &QuadConfig,
) -> Result<(Vec<Vec<f64>>, Vec<Vec<f64>>)> {
    check_pair_args(m_max, n_max, lambda)?;
    let side = m_max.max(n_max) as usize;
    let nu_max = 4.0 * side as f64 + 2.0;
    // truncation: the stated box, shrunk by the λ-dependence of the joint
    // support (the product of the two Laguerre-Gaussians decays like
    // exp(-(λ+1/λ)(u²+v²)/8) outside the shared oscillatory core)
    let box_half = ((2.0 * nu_max).sqrt() + 10.0)
        .min((1.5 * nu_max / lambda).sqrt() + 60.0 / (lambda + 1.0 / lambda).sqrt());
    let pairs: Vec<(usize, usize)> = (0..=side)
        .flat_map(|m| (m..=side).map(move |n| (m, n)))
        .collect();
    let osc = 2.0 * (nu_max * (lambda + 1.0 / lambda)).sqrt() + 4.0;
    let cfg2 = cfg.with_oscillation(cfg.oscillation_scale.max(osc));

    type Node = Option<(Vec<f64>, Vec<f64>)>;
    let outer = integrate_plane_batch(
        |w| -> crate::error::Result<Node> {
            let (u, v) = (w.re, w.im);
            if u.abs() > box_half || v.abs() > box_half {
                return Ok(None);
            }
            let a1 = 2.0 * (u * u / lambda + lambda * v * v);
            let a2 = 2.0 * (lambda * u * u + v * v / lambda);
            Ok(Some((
                crate::specfun::laguerre_all(side as u32, 0, a1),
                crate::specfun::laguerre_all(side as u32, 0, a2),
            )))
        },
        |node: &Node, idx| match node {
            None => Complex64::new(0.0, 0.0),
            Some((l1, l2)) => {
                let (m, n) = pairs[idx];
                Complex64::new(l1[m] * l2[n], 0.0)
            }
        },
        |_, _| 0.0,
        pairs.len(),
        &cfg2,
        true,
    )?;

    let pref = 2.0 / std::f64::consts::PI;
    let mut values = vec![vec![0.0; side + 1]; side + 1];
    let mut errors = vec![vec![0.0; side + 1]; side + 1];
    for (idx, res) in outer.into_iter().enumerate() {
        let (m, n) = pairs[idx];
        let sign = if (m + n) % 2 == 0 { 1.0 } else { -1.0 };
        let q = match res {
            Ok(q) => q,
            Err(Error::ToleranceNotMet { best }) => best,
            Err(e) => return Err(e),
        };
        values[m][n] = sign * pref * q.value.re;
        errors[m][n] = pref * q.err_estimate;
        values[n][m] = values[m][n];
        errors[n][m] = errors[m][n];
    }
    values.truncate(m_max as usize + 1);
    errors.truncate(m_max as usize + 1);
    for row in &mut values {
        row.truncate(n_max as usize + 1);
    }
    for row in &mut errors {
        row.truncate(n_max as usize + 1);
    }
    Ok((values, errors))
}

/// Σ_{β,γ} |b_β|² |c_γ|² Π_ℓ I(β_ℓ, γ_ℓ, λ_ℓ): the T^n × T^n average of
/// |⟨ρ(t₁ g t₂)φ₁, φ₂⟩|² with unit-mass torus measure. Returns (value,
/// propagated error estimate).
pub fn torus_averaged_square(
    g: &DiagonalSymplectic,
    f1: &HermiteVector,
    f2: &HermiteVector,
    cfg: &QuadConfig,
) -> Result<(f64, f64)> {
    if f1.dim() != g.dim() || f2.dim() != g.dim() {
        return Err(Error::Domain(format!(
            "dimension mismatch: g has {}, vectors have {} and {}",
            g.dim(),
            f1.dim(),
            f2.dim()
        )));
    }
    // one batched matrix per distinct dilation value, sized by the largest
    // index any slot with that value needs
    let mut side_by_lambda: HashMap<u64, u32> = HashMap::new();
    for slot in 0..g.dim() {
        let key = g.lambdas()[slot].to_bits();
        let side = side_by_lambda.entry(key).or_insert(0);
        for (beta, _) in f1.entries() {
            *side = (*side).max(beta.0[slot]);
        }
        for (gamma, _) in f2.entries() {
            *side = (*side).max(gamma.0[slot]);
        }
    }
    let mut tables: HashMap<u64, (Vec<Vec<f64>>, Vec<Vec<f64>>)> = HashMap::new();
    for (&key, &side) in &side_by_lambda {
        tables.insert(key, laguerre_pair_matrix(side, side, f64::from_bits(key), cfg)?);
    }

    let mut total = 0.0;
    let mut err = 0.0;
    for (beta, b) in f1.entries() {
        for (gamma, c) in f2.entries() {
            let w = b.norm_sqr() * c.norm_sqr();
            let mut prod = 1.0f64;
            let mut prod_err = 0.0;
            for (slot, (&bm, &gn)) in beta.0.iter().zip(&gamma.0).enumerate() {
                let (vals, errs) = &tables[&g.lambdas()[slot].to_bits()];
                let v = vals[bm as usize][gn as usize];
                let e = errs[bm as usize][gn as usize];
                prod_err = prod_err * v.abs() + e * prod.abs();
                prod *= v;
            }
            total += w * prod;
            err += w * prod_err;
        }
    }
    Ok((total, err))
}

/// Larger singular value of the time-t free propagator block:
/// λ(t) = (1 + 2t² + 2√(t⁴+t²))^{1/2} ≥ 1; the other one is λ(t)⁻¹.
pub fn schrodinger_singular_value(t: f64) -> f64 {
    (1.0 + 2.0 * t * t + 2.0 * (t.powi(4) + t * t).sqrt()).sqrt()
}

/// (1+|t|)^{n/2} · √(torus average at g = diag(λ(t),…,λ(t))) for unit-norm
/// inputs; finite and uniformly bounded over t by the dispersive estimate.
pub fn dispersive_ratio(
    n: usize,
    t: f64,
    f1: &HermiteVector,
    f2: &HermiteVector,
    cfg: &QuadConfig,
) -> Result<f64> {
    if f1.dim() != n || f2.dim() != n {
        return Err(Error::Domain("dispersive_ratio dimension mismatch".into()));
    }
    let lam = schrodinger_singular_value(t);
    let g = DiagonalSymplectic::new(vec![lam; n])?;
    let (avg, _err) = torus_averaged_square(&g, f1, f2, cfg)?;
    Ok((1.0 + t.abs()).powf(n as f64 / 2.0) * avg.max(0.0).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> QuadConfig {
        QuadConfig::default()
    }

    #[test]
    fn diag_values_at_origin() {
        // W(h_0)(0) = 2(2π)^{-1/2}, W(h_1)(0) = −2(2π)^{-1/2}
        let z0 = Complex64::new(0.0, 0.0);
        assert!((wigner_diag(0, z0).unwrap() - SQRT_2_OVER_PI).abs() < 1e-15);
        assert!((wigner_diag(1, z0).unwrap() + SQRT_2_OVER_PI).abs() < 1e-15);
    }

    #[test]
    fn diag_frozen_value() {
        let v = wigner_diag(3, Complex64::new(0.5, 0.25)).unwrap();
        assert!((v - 0.192491372842032954).abs() < 1e-14, "got {v}");
    }

    #[test]
    fn diag_depends_only_on_modulus() {
        let a = wigner_diag(4, Complex64::new(0.3, 0.4)).unwrap();
        let b = wigner_diag(4, Complex64::new(0.5, 0.0)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn cross_vanishes_at_origin() {
        assert_eq!(
            wigner_cross(3, 2, Complex64::new(0.0, 0.0)).unwrap(),
            Complex64::new(0.0, 0.0)
        );
    }

    #[test]
    fn cross_frozen_values_fix_phase_convention() {
        // 30-digit values of the defining ds-integral
        let v = wigner_cross(0, 1, Complex64::new(0.3, 0.4)).unwrap();
        let expect = Complex64::new(0.263634773680633438, -0.351513031574177918);
        assert!((v - expect).norm() < 1e-14, "got {v}");
        let v = wigner_cross(2, 3, Complex64::new(0.7, -0.2)).unwrap();
        let expect = Complex64::new(0.233704704608954796, 0.258067743313363211);
        assert!((v - expect).norm() < 1e-14, "got {v}");
    }

    #[test]
    fn cross_moyal_norm_is_one() {
        // ∫ |W(h_{n+k}, h_n)|² dσ = 1: radially 2π ∫ (2/π) 𝓛_n^{(k)}(2ρ²)² ρ dρ
        for &(n, k) in &[(0u32, 1u32), (2, 3), (5, 2)] {
            let q = crate::quad::integrate_halfline(
                |rho| {
                    let l = laguerre_fn(n, k, 2.0 * rho * rho).unwrap();
                    Complex64::new(2.0 * std::f64::consts::PI * (2.0 / std::f64::consts::PI) * l * l * rho, 0.0)
                },
                &cfg().with_oscillation(12.0),
            )
            .unwrap();
            assert!((q.value.re - 1.0).abs() < 1e-8, "(n,k)=({n},{k}): {}", q.value.re);
        }
    }

    #[test]
    fn cross_torus_average_vanishes() {
        // ∫ wigner_cross(n,k,e^{iθ}z) dθ = 0 for k ≥ 1
        let z = Complex64::new(0.8, -0.3);
        let q = crate::quad::integrate_periodic(
            |th| {
                let rot = Complex64::from_polar(1.0, th);
                wigner_cross(1, 2, rot * z).unwrap()
            },
            &cfg().with_oscillation(3.0),
        )
        .unwrap();
        assert!(q.value.norm() < 1e-12);
    }

    #[test]
    fn direct_matches_diag_closed_form() {
        let f = HermiteVector::single(0);
        let q = wigner_direct(&f, &f, Complex64::new(0.0, 0.0), &cfg()).unwrap();
        assert!((q.value.re - SQRT_2_OVER_PI).abs() < 1e-9);

        let f3 = HermiteVector::single(3);
        let z = Complex64::new(0.5, 0.25);
        let q = wigner_direct(&f3, &f3, z, &cfg()).unwrap();
        assert!((q.value.re - wigner_diag(3, z).unwrap()).abs() < 1e-9);
    }

    #[test]
    fn direct_matches_cross_at_sample_points() {
        // 20 sample points: closed form vs defining integral to 1e-8
        let f1 = HermiteVector::single(1);
        let f0 = HermiteVector::single(0);
        for i in 0..20 {
            let ang = 0.3 + 0.31 * i as f64;
            let z = Complex64::from_polar(0.2 + 0.09 * i as f64, ang);
            let direct = wigner_direct(&f1, &f0, z, &cfg()).unwrap();
            let closed = wigner_cross(0, 1, z).unwrap();
            assert!(
                (direct.value - closed).norm() < 1e-8,
                "z={z}: direct {} vs closed {closed}",
                direct.value
            );
        }
    }

    #[test]
    fn moyal_identity_for_small_expansions() {
        // ⟨W(f1,f2), W(g1,g2)⟩ = ⟨f1,g1⟩ conj(⟨f2,g2⟩) via the closed forms
        let f1 = HermiteVector::new(vec![
            (HermiteMultiIndex(vec![0]), Complex64::new(0.6, 0.1)),
            (HermiteMultiIndex(vec![2]), Complex64::new(-0.3, 0.4)),
        ])
        .unwrap();
        let f2 = HermiteVector::new(vec![
            (HermiteMultiIndex(vec![1]), Complex64::new(0.8, -0.2)),
            (HermiteMultiIndex(vec![3]), Complex64::new(0.1, 0.5)),
        ])
        .unwrap();
        let g1 = HermiteVector::new(vec![
            (HermiteMultiIndex(vec![0]), Complex64::new(0.2, -0.7)),
            (HermiteMultiIndex(vec![1]), Complex64::new(0.5, 0.0)),
        ])
        .unwrap();
        let g2 = HermiteVector::new(vec![
            (HermiteMultiIndex(vec![1]), Complex64::new(-0.4, 0.3)),
            (HermiteMultiIndex(vec![2]), Complex64::new(0.6, 0.2)),
        ])
        .unwrap();

        let wig = |a: &HermiteVector, b: &HermiteVector, z: Complex64| -> Complex64 {
            let mut acc = Complex64::new(0.0, 0.0);
            for (bi, amp_a) in a.entries() {
                for (gi, amp_b) in b.entries() {
                    acc += amp_a
                        * amp_b.conj()
                        * wigner_pair(bi.0[0], gi.0[0], z).unwrap();
                }
            }
            acc
        };
        let lhs = integrate_plane(
            |z| wig(&f1, &f2, z) * wig(&g1, &g2, z).conj(),
            &cfg().with_oscillation(8.0),
        )
        .unwrap();
        let inner = |a: &HermiteVector, b: &HermiteVector| -> Complex64 {
            let mut acc = Complex64::new(0.0, 0.0);
            for (bi, amp_a) in a.entries() {
                for (gi, amp_b) in b.entries() {
                    if bi == gi {
                        acc += amp_a * amp_b.conj();
                    }
                }
            }
            acc
        };
        let rhs = inner(&f1, &g1) * inner(&f2, &g2).conj();
        assert!(
            (lhs.value - rhs).norm() < 1e-6 * rhs.norm().max(0.1),
            "{} vs {rhs}",
            lhs.value
        );
    }

    #[test]
    fn pair_integral_identity_dilation_is_kronecker() {
        for (m, n) in [(0u32, 0u32), (1, 1), (2, 0), (3, 1)] {
            let v = laguerre_pair_integral(m, n, 1.0, &cfg()).unwrap();
            let expect = if m == n { 1.0 } else { 0.0 };
            assert!((v - expect).abs() < 1e-6, "I({m},{n},1) = {v}");
        }
    }

    #[test]
    fn pair_integral_two_route_consistency() {
        // planar route vs half-line reduction route at (0,0,2); both equal
        // 2/(λ+1/λ) = 0.8 for the ground state
        let planar = laguerre_pair_integral(0, 0, 2.0, &cfg()).unwrap();
        // half-line route: (1/(λπ)) ∬ 𝓛_0(r₁/λ²+r₂) 𝓛_0(r₁+r₂/λ²) (r₁r₂)^{-1/2}
        let lambda = 2.0f64;
        let outer = crate::quad::integrate_halfline(
            |r1| {
                let inner = crate::quad::integrate_halfline(
                    |r2| {
                        let a = laguerre_fn(0, 0, r1 / (lambda * lambda) + r2).unwrap();
                        let b = laguerre_fn(0, 0, r1 + r2 / (lambda * lambda)).unwrap();
                        Complex64::new(a * b * (r1 * r2).powf(-0.5), 0.0)
                    },
                    &cfg(),
                )
                .unwrap();
                inner.value
            },
            &cfg(),
        )
        .unwrap();
        let halfline = outer.value.re / (lambda * std::f64::consts::PI);
        assert!((planar - 0.8).abs() < 1e-6, "planar {planar}");
        assert!((halfline - 0.8).abs() < 1e-6, "halfline {halfline}");
        assert!((planar - halfline).abs() < 1e-6);
    }

    #[test]
    fn pair_integral_frozen_value_and_parity() {
        let v = laguerre_pair_integral(2, 2, 4.0, &cfg()).unwrap();
        assert!((v - 0.01325344735420539).abs() < 1e-7, "got {v}");
        // odd m+n pairs vanish (dilation preserves parity)
        let v = laguerre_pair_integral(1, 0, 2.0, &cfg()).unwrap();
        assert!(v.abs() < 1e-8);
    }

    #[test]
    fn pair_integral_matches_dilation_overlap_oracle() {
        // Moyal + covariance reduce I(m,n,λ) to the squared 1-D dilation
        // overlap (∫ √λ h_m(λx) h_n(x) dx)²
        for &(m, n, lambda) in &[(0u32, 0u32, 2.0f64), (2, 2, 4.0), (3, 1, 2.0), (4, 0, 8.0)] {
            let overlap = integrate_line(
                |x| {
                    Complex64::new(
                        lambda.sqrt() * hermite_fn(m, lambda * x) * hermite_fn(n, x),
                        0.0,
                    )
                },
                &cfg().with_oscillation(2.0 * (4.0 * f64::from(m.max(n)) + 2.0).sqrt()),
            )
            .unwrap();
            let oracle = overlap.value.re * overlap.value.re;
            let planar = laguerre_pair_integral(m, n, lambda, &cfg()).unwrap();
            assert!(
                (planar - oracle).abs() < 1e-6 * oracle.max(1e-3),
                "I({m},{n},{lambda}): planar {planar} vs oracle {oracle}"
            );
        }
    }

    #[test]
    fn pair_matrix_matches_singles() {
        let (vals, errs) = laguerre_pair_matrix(3, 3, 2.0, &cfg()).unwrap();
        for m in 0..=3u32 {
            for n in 0..=3u32 {
                let single = laguerre_pair_integral(m, n, 2.0, &cfg()).unwrap();
                let diff = (vals[m as usize][n as usize] - single).abs();
                assert!(
                    diff <= 1e-6 + errs[m as usize][n as usize],
                    "({m},{n}): {} vs {single}",
                    vals[m as usize][n as usize]
                );
            }
        }
    }

    #[test]
    fn pair_matrix_index_symmetry() {
        let (vals, _) = laguerre_pair_matrix(4, 4, 8.0, &cfg()).unwrap();
        for m in 0..=4usize {
            for n in 0..=4usize {
                assert!(
                    (vals[m][n] - vals[n][m]).abs() < 1e-7,
                    "I[{m}][{n}] vs transposed"
                );
            }
        }
    }

    #[test]
    fn torus_average_identity_case() {
        let g = DiagonalSymplectic::new(vec![1.0, 1.0]).unwrap();
        let f = HermiteVector::new(vec![(
            HermiteMultiIndex(vec![2, 1]),
            Complex64::new(1.0, 0.0),
        )])
        .unwrap();
        let (avg, err) = torus_averaged_square(&g, &f, &f, &cfg()).unwrap();
        assert!((avg - 1.0).abs() < err + 1e-6);
    }

    #[test]
    fn torus_average_single_term_matches_pair_integral() {
        let g = DiagonalSymplectic::new(vec![4.0]).unwrap();
        let f = HermiteVector::single(0);
        let (avg, _) = torus_averaged_square(&g, &f, &f, &cfg()).unwrap();
        let i = laguerre_pair_integral(0, 0, 4.0, &cfg()).unwrap();
        assert!((avg - i).abs() < 1e-8);
        assert!(avg > 0.0);
    }

    #[test]
    fn singular_value_anchors() {
        assert!((schrodinger_singular_value(0.0) - 1.0).abs() < 1e-12);
        let expect = 1.0 + std::f64::consts::SQRT_2;
        assert!((schrodinger_singular_value(1.0) - expect).abs() < 1e-12);
        // evenness and reciprocal pairing
        assert_eq!(
            schrodinger_singular_value(2.5),
            schrodinger_singular_value(-2.5)
        );
        let l = schrodinger_singular_value(3.0);
        assert!((l * (1.0 / l) - 1.0).abs() < 1e-15);
        // λ(t)/(2|t|) → 1
        let l = schrodinger_singular_value(1e3);
        assert!((l / 2e3 - 1.0).abs() < 1e-5);
    }

    #[test]
    fn dispersive_ratio_at_zero_time_is_at_most_one() {
        let f = HermiteVector::new(vec![
            (HermiteMultiIndex(vec![0]), Complex64::new(0.6, 0.0)),
            (HermiteMultiIndex(vec![3]), Complex64::new(0.0, 0.8)),
        ])
        .unwrap()
        .normalized();
        let r = dispersive_ratio(1, 0.0, &f, &f, &cfg()).unwrap();
        assert!(r <= 1.0 + 1e-9, "ratio {r}");
    }

    #[test]
    fn dispersive_ratio_is_even_in_time() {
        let f = HermiteVector::single(0);
        let a = dispersive_ratio(1, 5.0, &f, &f, &cfg()).unwrap();
        let b = dispersive_ratio(1, -5.0, &f, &f, &cfg()).unwrap();
        assert!((a - b).abs() < 1e-12);
    }

    #[test]
    fn validation_errors() {
        assert!(HermiteMultiIndex::new(vec![]).is_err());
        assert!(DiagonalSymplectic::new(vec![0.5]).is_err());
        assert!(DiagonalSymplectic::new(vec![1.0, 2.0]).is_err()); // not sorted
        assert!(wigner_cross(0, 0, Complex64::new(1.0, 0.0)).is_err());
        let f1 = HermiteVector::single(0);
        assert!(dispersive_ratio(2, 1.0, &f1, &f1, &cfg()).is_err());
    }
}
