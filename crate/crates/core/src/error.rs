//! Error type shared across the crate.
//!
//! Deviations are reported as `f64` regardless of the working scalar so
//! the error type stays non-generic.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("shape: {context}")]
    Shape { context: &'static str },

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("not_hermitian: max deviation {deviation:e}")]
    NotHermitian { deviation: f64 },

    #[error("no_convergence: Jacobi did not converge in {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("not_psd: eigenvalue {eigenvalue:e} below the admissible floor")]
    NotPsd { eigenvalue: f64 },

    #[error("param_range: {name} = {value} outside {range}")]
    ParamRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("null_state: amplitudes are all zero")]
    NullState,

    #[error("invalid norm: |alpha|^2 + |beta|^2 = {norm}, expected 1")]
    BadNorm { norm: f64 },

    #[error("bad_trace: trace {trace} differs from 1")]
    BadTrace { trace: f64 },

    #[error("not_x_state: entry ({row}, {col}) has magnitude {magnitude:e}")]
    NotXState {
        row: usize,
        col: usize,
        magnitude: f64,
    },

    #[error("not_cptp: completeness deviation {deviation:e}")]
    NotCptp { deviation: f64 },

    #[error("null_postselection: the kept measurement branch has zero probability")]
    NullPostselection,

    #[error("degenerate_state: {0}")]
    DegenerateState(&'static str),

    #[error("numeric_breakdown: {0}")]
    NumericBreakdown(&'static str),

    #[error("bad_spec: {0}")]
    BadSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
