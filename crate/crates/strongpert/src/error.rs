//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug)]
pub enum Error {
    #[error("matrix {context} is not Hermitian: max |M - M†| = {deviation:.3e} exceeds {tol:.1e}")]
    NotHermitian {
        context: String,
        deviation: f64,
        tol: f64,
    },

    #[error("eigendecomposition of {context} failed to converge")]
    EigenConvergence { context: String },

    #[error("degenerate perturbation spectrum at t = {t}: adjacent eigenvalues differ by {gap:.3e} (threshold {threshold:.3e}); spectral tracking requires a non-degenerate V")]
    Degenerate { t: f64, gap: f64, threshold: f64 },

    #[error("ambiguous level matching at t = {t}: competing overlaps within {margin:.1e}; refine the time grid")]
    LevelMatching { t: f64, margin: f64 },

    #[error("level continuity lost at t = {t}: best overlap {overlap:.4} <= 0.9; refine the time grid")]
    LevelContinuity { t: f64, overlap: f64 },

    #[error("series order {requested} unsupported: corrections are implemented through order {max}")]
    UnsupportedOrder { requested: usize, max: usize },

    #[error("growth fit needs at least {min} samples in the window, got {got}")]
    TooFewSamples { got: usize, min: usize },

    #[error("non-finite input: {context}")]
    NonFinite { context: String },

    #[error("{context}: dimension mismatch ({expected} vs {got})")]
    DimensionMismatch {
        context: String,
        expected: usize,
        got: usize,
    },

    #[error("momentum lattice of dimension {dim} exceeds the dense-feasibility cap {cap}; reduce the truncation to at most {suggested} per wave")]
    LatticeTooLarge {
        dim: usize,
        cap: usize,
        suggested: usize,
    },

    #[error("momentum lattice has colliding sites (commensurate wave numbers k1/k2 = {ratio}); the series pipeline requires incommensurate wave numbers")]
    CommensurateLattice { ratio: String },

    #[error("truncation {trunc} too small for drive strength ratio {z:.3}: need at least ceil(z) + 20 = {required}")]
    TruncationTooSmall {
        trunc: usize,
        z: f64,
        required: usize,
    },

    #[error("ponderomotive cross-check failed: lattice sum {lattice_sum:.12e} vs closed form {closed_form:.12e} (relative error {rel:.3e})")]
    PonderomotiveMismatch {
        lattice_sum: f64,
        closed_form: f64,
        rel: f64,
    },

    #[error("config error{}: {msg}", fmt_line(.line))]
    Config { line: Option<usize>, msg: String },

    #[error("numerical failure in {module} at t = {t}: {msg}")]
    Numerical { module: String, t: f64, msg: String },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

fn fmt_line(line: &Option<usize>) -> String {
    match line {
        Some(n) => format!(" (line {n})"),
        None => String::new(),
    }
}

impl Error {
    /// Process exit code for the CLI: 2 for configuration problems, 3 for
    /// numerical or i/o failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config { .. } => 2,
            _ => 3,
        }
    }

    pub fn config(line: Option<usize>, msg: impl Into<String>) -> Self {
        Error::Config {
            line,
            msg: msg.into(),
        }
    }
}
