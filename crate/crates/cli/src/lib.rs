//! File striping over expanded array erasure codes: one shard file per
//! column, a plain-text manifest, reconstruction from any survivable subset,
//! and sector-grained local repair driven by per-row checksums.

pub mod manifest;
pub mod pipeline;
pub mod shard;

/// Errors raised by the sharding tool.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] earc_core::Error),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("format error: {0}")]
    Format(String),

    #[error("shard does not match manifest: {0}")]
    Mismatch(String),

    #[error("unknown analysis suite '{0}' (expected distance, mds, lines, xor or paper-golden)")]
    UnknownSuite(String),

    #[error("bad parameters: {0}")]
    BadParameters(String),
}

pub type Result<T> = std::result::Result<T, CliError>;
