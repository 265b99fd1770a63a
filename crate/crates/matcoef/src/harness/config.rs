//! JSON-backed sweep and verify configurations. Unknown keys are rejected.

use crate::error::{Error, Result};
use crate::quad::QuadConfig;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Principal,
    Complementary,
    DiscretePlus,
    DiscreteMinus,
    Metaplectic,
    Dispersive,
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::Principal => "principal",
            Family::Complementary => "complementary",
            Family::DiscretePlus => "discrete_plus",
            Family::DiscreteMinus => "discrete_minus",
            Family::Metaplectic => "metaplectic",
            Family::Dispersive => "dispersive",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    Csv,
    Json,
}

impl Default for OutputFormat {
    fn default() -> Self {
        OutputFormat::Csv
    }
}

fn default_seed() -> u64 {
    42
}

/// Quadrature settings as they appear in config files; mirrors [`QuadConfig`]
/// minus the per-call oscillation scale (callers set that from the sweep
/// parameters).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuadSettings {
    #[serde(default = "QuadSettings::default_rel")]
    pub rel_tol: f64,
    #[serde(default = "QuadSettings::default_abs")]
    pub abs_tol: f64,
    #[serde(default = "QuadSettings::default_doublings")]
    pub max_doublings: u32,
}

impl QuadSettings {
    fn default_rel() -> f64 {
        1e-9
    }
    fn default_abs() -> f64 {
        1e-12
    }
    fn default_doublings() -> u32 {
        14
    }

    pub fn to_quad_config(self) -> QuadConfig {
        QuadConfig {
            rel_tol: self.rel_tol,
            abs_tol: self.abs_tol,
            max_doublings: self.max_doublings,
            oscillation_scale: 0.0,
        }
    }

    /// The same settings with both tolerances tightened by `factor`.
    pub fn tightened(self, factor: f64) -> Self {
        QuadSettings {
            rel_tol: self.rel_tol / factor,
            abs_tol: self.abs_tol / factor,
            max_doublings: self.max_doublings + 2,
        }
    }
}

impl Default for QuadSettings {
    fn default() -> Self {
        QuadSettings {
            rel_tol: Self::default_rel(),
            abs_tol: Self::default_abs(),
            max_doublings: Self::default_doublings(),
        }
    }
}

/// Everything one sweep needs: family, parameter grids, quadrature settings,
/// seed, and output destination. Which grids must be nonempty depends on the
/// family ([`SweepConfig::validate`]).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub family: Family,
    #[serde(default)]
    pub s_grid: Vec<f64>,
    #[serde(default)]
    pub lambda_grid: Vec<f64>,
    #[serde(default)]
    pub ell_set: Vec<u32>,
    /// Inclusive K-type index range (principal/complementary: the index
    /// itself with parity filtering applied; discrete: the offsets).
    #[serde(default)]
    pub mu_range: Option<(i64, i64)>,
    #[serde(default)]
    pub nu_range: Option<(i64, i64)>,
    #[serde(default)]
    pub r_grid: Vec<f64>,
    #[serde(default)]
    pub t_grid: Vec<f64>,
    /// Laguerre-pair index cap for the metaplectic family.
    #[serde(default)]
    pub pair_index_max: Option<u32>,
    /// Dimensions for the dispersive family.
    #[serde(default)]
    pub dims: Vec<usize>,
    #[serde(default)]
    pub quad: QuadSettings,
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default)]
    pub out_path: Option<std::path::PathBuf>,
    #[serde(default)]
    pub format: OutputFormat,
}

impl SweepConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: SweepConfig =
            serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        self.quad.to_quad_config().validate()?;
        let need = |ok: bool, what: &str| -> Result<()> {
            if ok {
                Ok(())
            } else {
                Err(Error::Config(format!(
                    "family {:?} requires nonempty {what}",
                    self.family
                )))
            }
        };
        match self.family {
            Family::Principal => {
                need(!self.s_grid.is_empty(), "s_grid")?;
                need(self.mu_range.is_some(), "mu_range")?;
                need(self.nu_range.is_some(), "nu_range")?;
                need(!self.r_grid.is_empty(), "r_grid")?;
            }
            Family::Complementary => {
                need(!self.lambda_grid.is_empty(), "lambda_grid")?;
                need(self.mu_range.is_some(), "mu_range")?;
                need(self.nu_range.is_some(), "nu_range")?;
                need(!self.r_grid.is_empty(), "r_grid")?;
                for &l in &self.lambda_grid {
                    if !(l.abs() < 0.5) || l == 0.0 {
                        return Err(Error::Config(format!("lambda {l} out of ±(0, 1/2)")));
                    }
                }
            }
            Family::DiscretePlus | Family::DiscreteMinus => {
                need(!self.ell_set.is_empty(), "ell_set")?;
                need(self.mu_range.is_some(), "mu_range")?;
                need(self.nu_range.is_some(), "nu_range")?;
                need(!self.r_grid.is_empty(), "r_grid")?;
            }
            Family::Metaplectic => {
                need(!self.lambda_grid.is_empty(), "lambda_grid")?;
                need(self.pair_index_max.is_some(), "pair_index_max")?;
            }
            Family::Dispersive => {
                need(!self.t_grid.is_empty(), "t_grid")?;
                need(!self.dims.is_empty(), "dims")?;
            }
        }
        for range in [self.mu_range, self.nu_range].into_iter().flatten() {
            if range.0 > range.1 {
                return Err(Error::Config(format!("empty index range {range:?}")));
            }
        }
        for &r in &self.r_grid {
            if !(r >= 0.0) {
                return Err(Error::Config(format!("negative radial value {r}")));
            }
        }
        Ok(())
    }
}

/// Verify-run configuration: which suites to run (None = all), the quadrature
/// settings, and the seed for the randomized suites.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyConfig {
    #[serde(default)]
    pub suites: Option<Vec<String>>,
    #[serde(default)]
    pub quad: QuadSettings,
    #[serde(default = "default_seed")]
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            suites: None,
            quad: QuadSettings::default(),
            seed: default_seed(),
        }
    }
}

impl VerifyConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: VerifyConfig =
            serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.quad.to_quad_config().validate()?;
        Ok(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_keys_rejected() {
        let text = r#"{"family":"principal","s_grid":[1.0],"mu_range":[0,4],
                       "nu_range":[0,4],"r_grid":[1.0],"bogus":3}"#;
        let err = SweepConfig::from_json(text).unwrap_err();
        assert!(err.to_string().contains("bogus"), "{err}");
    }

    #[test]
    fn missing_grid_rejected() {
        let text = r#"{"family":"principal","s_grid":[],"mu_range":[0,4],
                       "nu_range":[0,4],"r_grid":[1.0]}"#;
        assert!(SweepConfig::from_json(text).is_err());
    }

    #[test]
    fn minimal_valid_config_parses_with_defaults() {
        let text = r#"{"family":"discrete_plus","ell_set":[1,2],"mu_range":[0,3],
                       "nu_range":[0,3],"r_grid":[0.0,1.0]}"#;
        let cfg = SweepConfig::from_json(text).unwrap();
        assert_eq!(cfg.seed, 42);
        assert_eq!(cfg.quad.rel_tol, 1e-9);
        assert_eq!(cfg.format, OutputFormat::Csv);
    }

    #[test]
    fn verify_config_defaults_and_unknown_keys() {
        let cfg = VerifyConfig::from_json("{}").unwrap();
        assert!(cfg.suites.is_none());
        assert!(VerifyConfig::from_json(r#"{"nope":1}"#).is_err());
        let cfg = VerifyConfig::from_json(r#"{"suites":[]}"#).unwrap();
        assert_eq!(cfg.suites, Some(vec![]));
    }
}
