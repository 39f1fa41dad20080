use thiserror::Error;

use crate::pendulum::Stratum;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("complete elliptic integral K(k) diverges at k = 1")]
    Divergent,

    #[error("operation not defined on stratum {0}")]
    Stratum(Stratum),

    #[error("no sign change of {target} found in (0, {window}] for k = {k}")]
    NoRoot {
        target: &'static str,
        k: f64,
        window: f64,
    },

    #[error("bracketing failed: {0}")]
    Bracket(String),

    #[error("non-finite input: {0}")]
    NonFinite(&'static str),

    #[error("target lies on the set zV = 0 (|zV| = {zv:e}); the minimizer is not guaranteed unique")]
    NotInDomain { zv: f64 },

    #[error("shooting did not converge after {starts} starts (best residual {best_residual:e})")]
    NoConvergence { starts: usize, best_residual: f64 },

    #[error("cut time inequality violated: tE = {engel}, tC = {cartan}, zeta = {zeta}")]
    Violation { engel: f64, cartan: f64, zeta: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
