//! Numerical evaluation of matrix coefficients of the irreducible unitary
//! representations of SL(2,R) — principal, complementary and discrete series —
//! and of the metaplectic representation, together with a harness that
//! certifies the decay bounds these coefficients satisfy.
//!
//! The building blocks are organised bottom-up:
//!
//! * [`specfun`] — stable evaluation of Gamma, Jacobi, Laguerre and Hermite
//!   special functions (log-scaled where prefactors overflow).
//! * [`quad`] — periodic, real-line, half-line and planar quadrature engines
//!   with two-mesh error estimates.
//! * [`principal`], [`complementary`], [`discrete`] — the three coefficient
//!   families of SL(2,R) in the K-eigenbasis, each with its bound ratio.
//! * [`ktype`] — coefficients for general group elements and general finite
//!   K-type expansions, and the double torus average identity.
//! * [`metaplectic`] — Wigner distributions of Hermite functions, the Moyal
//!   identity, torus-averaged metaplectic coefficients and the Schrödinger
//!   dispersive check.
//! * [`harness`] — parameter sweeps, CSV/JSON reports and the verification
//!   suites behind the `matcoef` command line tool.
//!
//! Each runnable capability has a worked example under `examples/`; start with
//! `cargo run --release --example discrete_series`.

pub mod complementary;
pub mod discrete;
pub mod error;
pub mod harness;
pub mod ktype;
pub mod metaplectic;
mod phases;
pub mod principal;
pub mod quad;
pub mod specfun;

pub use error::Error;
pub use quad::{QuadConfig, QuadResult};
