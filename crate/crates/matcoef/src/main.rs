//! Thin command-line front end over the library: point evaluation, grid
//! sweeps with CSV/JSON reports, and the verification suites.

use clap::{Parser, Subcommand, ValueEnum};
use matcoef::harness::{
    self, config::OutputFormat, SweepConfig, VerifyConfig,
};
use matcoef::ktype::{general_coefficient, KakElement, KTypeVector, Representation};
use matcoef::metaplectic;
use matcoef::quad::QuadConfig;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "matcoef",
    about = "Matrix coefficients of SL(2,R) and metaplectic representations, with decay-bound verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RepKind {
    Principal,
    Complementary,
    DiscretePlus,
    DiscreteMinus,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one matrix coefficient ⟨π(k_{θ1} a_r k_{θ2}) e_μ, e_ν⟩.
    Coef {
        #[arg(long, value_enum)]
        rep: RepKind,
        /// Spectral parameter (principal series; parity is inferred from μ).
        #[arg(long, default_value_t = 1.0)]
        s: f64,
        /// Complementary-series parameter in ±(0, 1/2).
        #[arg(long, default_value_t = 0.25)]
        lambda: f64,
        /// Discrete-series weight ℓ.
        #[arg(long, default_value_t = 1)]
        ell: u32,
        /// K-type index (discrete series: nonnegative offset from the edge).
        #[arg(long)]
        mu: i64,
        #[arg(long)]
        nu: i64,
        #[arg(long)]
        r: f64,
        #[arg(long, default_value_t = 0.0)]
        theta1: f64,
        #[arg(long, default_value_t = 0.0)]
        theta2: f64,
    },
    /// Run a parameter sweep from a JSON config and write the report.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Overrides the config's output format.
        #[arg(long)]
        format: Option<CliFormat>,
    },
    /// Run the verification suites; exits nonzero on any failure.
    Verify {
        #[arg(long)]
        config: Option<PathBuf>,
        /// Restrict to these suites (repeatable).
        #[arg(long = "suite")]
        suites: Vec<String>,
    },
    /// Print the dilation pair integral I(m, n, λ).
    Wigner {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        lambda: f64,
    },
    /// Print the dispersive ratio for seeded random unit vectors.
    Dispersive {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        t: f64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CliFormat {
    Csv,
    Json,
}

fn run() -> Result<(), matcoef::Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Coef {
            rep,
            s,
            lambda,
            ell,
            mu,
            nu,
            r,
            theta1,
            theta2,
        } => {
            let representation = match rep {
                RepKind::Principal => Representation::Principal {
                    s,
                    epsilon: mu.rem_euclid(2) as u8,
                },
                RepKind::Complementary => Representation::Complementary { lambda },
                RepKind::DiscretePlus => Representation::DiscretePlus { ell },
                RepKind::DiscreteMinus => Representation::DiscreteMinus { ell },
            };
            let x = KakElement::new(theta1, r, theta2)?;
            let q = general_coefficient(
                &representation,
                &KTypeVector::basis_vector(mu),
                &KTypeVector::basis_vector(nu),
                &x,
                &QuadConfig::default(),
            )?;
            println!("value = {:+.16e} {:+.16e}i", q.value.re, q.value.im);
            println!("abs   = {:.16e}", q.value.norm());
            println!("quad_err = {:.3e}", q.err_estimate);
            Ok(())
        }
        Command::Sweep {
            config,
            out,
            format,
        } => {
            let text = std::fs::read_to_string(&config)?;
            let mut cfg = SweepConfig::from_json(&text)?;
            if let Some(f) = format {
                cfg.format = match f {
                    CliFormat::Csv => OutputFormat::Csv,
                    CliFormat::Json => OutputFormat::Json,
                };
            }
            let rows = harness::run_sweep(&cfg)?;
            let body = match cfg.format {
                OutputFormat::Csv => harness::to_csv(&rows),
                OutputFormat::Json => harness::to_json(&rows)?,
            };
            std::fs::write(&out, body)?;
            eprintln!("wrote {} rows to {}", rows.len(), out.display());
            Ok(())
        }
        Command::Verify { config, suites } => {
            let mut cfg = match config {
                Some(path) => VerifyConfig::from_json(&std::fs::read_to_string(path)?)?,
                None => VerifyConfig::default(),
            };
            if !suites.is_empty() {
                cfg.suites = Some(suites);
            }
            let summary = harness::verify_all(&cfg)?;
            for suite in &summary.suites {
                eprintln!("{}", suite.summary_line());
            }
            println!("{}", summary.to_json());
            if summary.passed {
                Ok(())
            } else {
                Err(matcoef::Error::Config("verification failed".into()))
            }
        }
        Command::Wigner { m, n, lambda } => {
            let v = metaplectic::laguerre_pair_integral(m, n, lambda, &QuadConfig::default())?;
            println!("I({m},{n},{lambda}) = {v:.12e}");
            println!("lambda * I = {:.12e}", lambda * v);
            Ok(())
        }
        Command::Dispersive { dim, t, seed } => {
            let mut rng = harness::SplitMix64::new(seed ^ (dim as u64).wrapping_mul(0x9E37));
            let f1 = harness::rng::random_hermite_vector(&mut rng, dim, 4, 6);
            let f2 = harness::rng::random_hermite_vector(&mut rng, dim, 4, 6);
            let ratio =
                metaplectic::dispersive_ratio(dim, t, &f1, &f2, &QuadConfig::default())?;
            println!("dispersive_ratio(dim={dim}, t={t}, seed={seed}) = {ratio:.12e}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
