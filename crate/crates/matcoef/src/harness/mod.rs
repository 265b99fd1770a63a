//! Parameter sweeps, bound certification, report emission: the user-facing
//! layer behind the `matcoef` binary.

pub mod config;
pub mod record;
pub mod rng;
pub mod sweep;
pub mod verify;

pub use config::{Family, OutputFormat, QuadSettings, SweepConfig, VerifyConfig};
pub use record::{from_csv, to_csv, to_json, BoundRecord};
pub use rng::SplitMix64;
pub use sweep::run_sweep;
pub use verify::{verify_all, SuiteOutcome, SuiteStatus, VerifySummary};
