//! Crate-wide error type.

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument fell outside the mathematical domain of an operation.
    #[error("domain error in {op}: {message}")]
    Domain { op: &'static str, message: String },

    /// An integrand produced a non-finite sample.
    #[error("evaluation error in {op}: non-finite sample at t = {at}")]
    Evaluation { op: &'static str, at: f64 },

    /// The quadrature and spectral routes disagreed beyond tolerance.
    #[error(
        "route mismatch in {op} at (r={r}, theta={theta}): quadrature={quadrature}, \
         spectral={spectral}, |diff|={diff:.3e} > tol={tolerance:.3e}"
    )]
    RouteMismatch {
        op: &'static str,
        r: f64,
        theta: f64,
        quadrature: Complex64,
        spectral: Complex64,
        diff: f64,
        tolerance: f64,
    },

    /// Invalid configuration (quadrature spec, corpus file, CLI overrides).
    #[error("configuration error: {0}")]
    Config(String),

    /// A corpus line could not be parsed.
    #[error("corpus parse error on line {line}: {message}")]
    CorpusParse { line: usize, message: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn domain(op: &'static str, message: impl Into<String>) -> Self {
        Error::Domain {
            op,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
