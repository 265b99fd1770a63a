//! Grid sweeps over representation parameters producing [`BoundRecord`] rows.
//!
//! Rows come out in grid iteration order and are deterministic for a fixed
//! seed. Points whose quadrature missed its tolerance keep the best estimate
//! and are flagged by `quad_err` exceeding the configured tolerance; nothing
//! aborts the sweep.

use super::config::{Family, SweepConfig};
use super::record::BoundRecord;
use super::rng::{random_hermite_vector, SplitMix64};
use crate::complementary;
use crate::discrete::{self, DiscreteParams, SeriesSign};
use crate::error::{Error, Result};
use crate::metaplectic;
use crate::principal;
use crate::quad::{QuadConfig, QuadResult};
use rayon::prelude::*;

/// (ε, μ, ν) triples in deterministic ε → μ → ν order, parity-filtered.
pub(crate) fn principal_pairs(
    mu_range: (i64, i64),
    nu_range: (i64, i64),
) -> Vec<(u8, i64, i64)> {
    let mut out = Vec::new();
    for eps in [0u8, 1] {
        for mu in mu_range.0..=mu_range.1 {
            if mu.rem_euclid(2) != i64::from(eps) {
                continue;
            }
            for nu in nu_range.0..=nu_range.1 {
                if nu.rem_euclid(2) != i64::from(eps) {
                    continue;
                }
                out.push((eps, mu, nu));
            }
        }
    }
    out
}

/// Even (μ, ν) pairs in deterministic order.
pub(crate) fn even_pairs(mu_range: (i64, i64), nu_range: (i64, i64)) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for mu in mu_range.0..=mu_range.1 {
        if mu.rem_euclid(2) != 0 {
            continue;
        }
        for nu in nu_range.0..=nu_range.1 {
            if nu.rem_euclid(2) != 0 {
                continue;
            }
            out.push((mu, nu));
        }
    }
    out
}

/// |coefficient| and quadrature error on the grid s × pairs × r, evaluated
/// cell-parallel with shared-node batches. Tolerance misses keep the best
/// estimate. Layout: `table[s_idx][pair_idx][r_idx]`.
pub(crate) fn principal_abs_table(
    s_grid: &[f64],
    pairs: &[(u8, i64, i64)],
    r_grid: &[f64],
    quad: &QuadConfig,
) -> Result<Vec<Vec<Vec<(f64, f64)>>>> {
    let index_pairs: Vec<(i64, i64)> = pairs.iter().map(|&(_, m, n)| (m, n)).collect();
    let cells: Vec<(usize, usize)> = (0..s_grid.len())
        .flat_map(|si| (0..r_grid.len()).map(move |ri| (si, ri)))
        .collect();
    let computed: Result<Vec<_>> = cells
        .par_iter()
        .map(|&(si, ri)| {
            let res =
                principal::coefficient_batch(s_grid[si], &index_pairs, r_grid[ri], quad)?;
            Ok(res.into_iter().map(flatten_abs).collect::<Vec<_>>())
        })
        .collect();
    let computed = computed?;
    let mut table = vec![vec![vec![(0.0, 0.0); r_grid.len()]; pairs.len()]; s_grid.len()];
    for (&(si, ri), cell) in cells.iter().zip(computed) {
        for (pi, v) in cell.into_iter().enumerate() {
            table[si][pi][ri] = v;
        }
    }
    Ok(table)
}

/// Same layout for the complementary family: `table[λ_idx][pair_idx][r_idx]`,
/// holding |⟪π_λ(a_r) g_μ, g_ν⟫| with the d-normalization applied.
pub(crate) fn complementary_abs_table(
    lambda_grid: &[f64],
    pairs: &[(i64, i64)],
    r_grid: &[f64],
    quad: &QuadConfig,
) -> Result<Vec<Vec<Vec<(f64, f64)>>>> {
    let cells: Vec<(usize, usize)> = (0..lambda_grid.len())
        .flat_map(|li| (0..r_grid.len()).map(move |ri| (li, ri)))
        .collect();
    let computed: Result<Vec<_>> = cells
        .par_iter()
        .map(|&(li, ri)| {
            let lambda = lambda_grid[li];
            let res = complementary::a_integral_batch(lambda, pairs, r_grid[ri], quad)?;
            let mut out = Vec::with_capacity(pairs.len());
            for (r, &(mu, nu)) in res.into_iter().zip(pairs) {
                let w = (complementary::d_coeff(lambda, mu)?
                    / complementary::d_coeff(lambda, nu)?)
                .sqrt();
                let (a, e) = flatten_abs(r);
                out.push((a * w, e * w));
            }
            Ok(out)
        })
        .collect();
    let computed = computed?;
    let mut table =
        vec![vec![vec![(0.0, 0.0); r_grid.len()]; pairs.len()]; lambda_grid.len()];
    for (&(li, ri), cell) in cells.iter().zip(computed) {
        for (pi, v) in cell.into_iter().enumerate() {
            table[li][pi][ri] = v;
        }
    }
    Ok(table)
}

fn flatten_abs(res: Result<QuadResult>) -> (f64, f64) {
    match res {
        Ok(q) => (q.value.norm(), q.err_estimate),
        Err(Error::ToleranceNotMet { best }) => (best.value.norm(), best.err_estimate),
        Err(_) => (f64::NAN, f64::NAN),
    }
}

/// Runs the configured sweep, returning rows in grid iteration order.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<BoundRecord>> {
    cfg.validate()?;
    let quad = cfg.quad.to_quad_config();
    match cfg.family {
        Family::Principal => {
            let pairs = principal_pairs(cfg.mu_range.unwrap(), cfg.nu_range.unwrap());
            let table = principal_abs_table(&cfg.s_grid, &pairs, &cfg.r_grid, &quad)?;
            let mut rows = Vec::new();
            for (si, &s) in cfg.s_grid.iter().enumerate() {
                for (pi, &(eps, mu, nu)) in pairs.iter().enumerate() {
                    for (ri, &r) in cfg.r_grid.iter().enumerate() {
                        let (abs, err) = table[si][pi][ri];
                        // s = 0 rows fall back to the uniform (1+r)e^{-r}
                        // bound and are labelled separately
                        let (family, bound) = if s == 0.0 {
                            ("howe_tan".to_string(), (1.0 + r) * (-r).exp())
                        } else {
                            (
                                "principal".to_string(),
                                (s.abs() + 1.0) / s.abs() * (-r).exp(),
                            )
                        };
                        rows.push(BoundRecord {
                            family,
                            p1: s,
                            p2: f64::from(eps),
                            mu,
                            nu,
                            r_or_t: r,
                            abs_coeff: abs,
                            bound,
                            ratio: abs / bound,
                            quad_err: err,
                        });
                    }
                }
            }
            Ok(rows)
        }
        Family::Complementary => {
            let pairs = even_pairs(cfg.mu_range.unwrap(), cfg.nu_range.unwrap());
            let table =
                complementary_abs_table(&cfg.lambda_grid, &pairs, &cfg.r_grid, &quad)?;
            let mut rows = Vec::new();
            for (li, &lambda) in cfg.lambda_grid.iter().enumerate() {
                for (pi, &(mu, nu)) in pairs.iter().enumerate() {
                    for (ri, &r) in cfg.r_grid.iter().enumerate() {
                        let (abs, err) = table[li][pi][ri];
                        let bound =
                            (-r * (1.0 - 2.0 * lambda.abs())).exp() / lambda.abs();
                        rows.push(BoundRecord {
                            family: "complementary".into(),
                            p1: lambda,
                            p2: 0.0,
                            mu,
                            nu,
                            r_or_t: r,
                            abs_coeff: abs,
                            bound,
                            ratio: abs / bound,
                            quad_err: err,
                        });
                    }
                }
            }
            Ok(rows)
        }
        Family::DiscretePlus | Family::DiscreteMinus => {
            let sign = if cfg.family == Family::DiscretePlus {
                SeriesSign::Plus
            } else {
                SeriesSign::Minus
            };
            let (mu_lo, mu_hi) = cfg.mu_range.unwrap();
            let (nu_lo, nu_hi) = cfg.nu_range.unwrap();
            if mu_lo < 0 || nu_lo < 0 {
                return Err(Error::Config(
                    "discrete families index by nonnegative offsets".into(),
                ));
            }
            let mut rows = Vec::new();
            for &ell in &cfg.ell_set {
                for mo in mu_lo..=mu_hi {
                    for no in nu_lo..=nu_hi {
                        let p = DiscreteParams::new(ell, sign, mo as u32, no as u32)?;
                        for &r in &cfg.r_grid {
                            let v = discrete::coefficient(&p, r)?;
                            let ratio = discrete::bound_ratio(&p, r)?;
                            rows.push(BoundRecord {
                                family: cfg.family.tag().into(),
                                p1: f64::from(ell),
                                p2: if sign == SeriesSign::Plus { 1.0 } else { -1.0 },
                                mu: mo,
                                nu: no,
                                r_or_t: r,
                                abs_coeff: v.abs(),
                                bound: 1.0 / r.cosh(),
                                ratio,
                                quad_err: 0.0,
                            });
                        }
                    }
                }
            }
            Ok(rows)
        }
        Family::Metaplectic => {
            let p_max = cfg.pair_index_max.unwrap();
            let mut rows = Vec::new();
            for &lambda in &cfg.lambda_grid {
                let (vals, errs) = metaplectic::laguerre_pair_matrix(p_max, p_max, lambda, &quad)?;
                for m in 0..=p_max as usize {
                    for n in 0..=p_max as usize {
                        rows.push(BoundRecord {
                            family: "metaplectic".into(),
                            p1: lambda,
                            p2: 0.0,
                            mu: m as i64,
                            nu: n as i64,
                            r_or_t: lambda,
                            abs_coeff: vals[m][n].abs(),
                            bound: 1.0 / lambda,
                            ratio: lambda * vals[m][n].abs(),
                            quad_err: errs[m][n],
                        });
                    }
                }
            }
            Ok(rows)
        }
        Family::Dispersive => {
            let mut rows = Vec::new();
            for &dim in &cfg.dims {
                let mut rng = SplitMix64::new(cfg.seed ^ (dim as u64).wrapping_mul(0x9E37));
                let f1 = random_hermite_vector(&mut rng, dim, 4, 6);
                let f2 = random_hermite_vector(&mut rng, dim, 4, 6);
                for &t in &cfg.t_grid {
                    let ratio = metaplectic::dispersive_ratio(dim, t, &f1, &f2, &quad)?;
                    let bound = (1.0 + t.abs()).powf(-(dim as f64) / 2.0);
                    rows.push(BoundRecord {
                        family: "dispersive".into(),
                        p1: dim as f64,
                        p2: cfg.seed as f64,
                        mu: 0,
                        nu: 0,
                        r_or_t: t,
                        abs_coeff: ratio * bound,
                        bound,
                        ratio,
                        quad_err: 0.0,
                    });
                }
            }
            Ok(rows)
        }
    }
}
