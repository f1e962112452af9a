use thiserror::Error;

/// Errors surfaced by library operations with preconditions.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("modulus {0} out of supported range")]
    ModulusOutOfRange(u64),
    #[error("{r} does not divide {q}")]
    NotADivisor { r: u64, q: u64 },
    #[error("memory budget exceeded: {0}")]
    MemoryBudget(String),
    #[error("major arcs overlap at q={q1},a={a1} and q={q2},a={a2} (use the mediant policy for large P)")]
    ArcOverlap { q1: u64, a1: u64, q2: u64, a2: u64 },
    #[error("zero table coverage {have:.3} below requested height {want:.3} for {label}")]
    InsufficientZeroCoverage {
        label: String,
        have: f64,
        want: f64,
    },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
