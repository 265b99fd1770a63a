//! Stable evaluation of the special functions behind every coefficient
//! formula: log-Gamma, Jacobi polynomials and their SU(2)-normalized form,
//! L²-normalized Laguerre and Hermite functions, and the Laguerre envelope
//! used as a decay diagnostic.
//!
//! Prefactors that overflow f64 (Gamma ratios, binomials) are carried in
//! [`SignedLogReal`] form until they are multiplied against the sub-unit
//! polynomial factors.

mod envelope;
mod gamma;
mod hermite;
mod jacobi;
mod laguerre;
mod signed_log;

pub use envelope::{LaguerreEnvelope, ENVELOPE_TAU};
pub use gamma::log_gamma;
pub use hermite::hermite_fn;
pub use jacobi::{jacobi_normalized, jacobi_poly};
pub use laguerre::laguerre_fn;
pub use signed_log::SignedLogReal;

pub(crate) use hermite::hermite_all;
pub(crate) use laguerre::laguerre_all_unchecked as laguerre_all;
