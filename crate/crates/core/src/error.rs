use thiserror::Error;

/// Failures raised across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain where the model is defined.
    #[error("{what} out of domain: {value} ({reason})")]
    Domain {
        what: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// Integration or scan settings violate a precondition.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// The integrated state drifted away from unit trace.
    #[error("integration failed at t = {t}: trace error {trace_error:e}")]
    IntegrationFailure { t: f64, trace_error: f64 },

    /// A one-photon coherence that must vanish is present.
    #[error("state is not of X form: one-photon coherence {leakage:e} exceeds {limit:e}")]
    Structural { leakage: f64, limit: f64 },

    /// The spectrum of `rho * rho_tilde` is not real and nonnegative.
    #[error("eigenvalue {re} + {im}i of rho*rho_tilde is not real nonnegative; input is not a valid state")]
    NumericalDegeneracy { re: f64, im: f64 },

    /// A concurrence transition could not be bracketed on the sample grid.
    #[error("cannot refine crossing between t = {lo} and t = {hi}: grid too coarse")]
    Resolution { lo: f64, hi: f64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
