//! Error type shared across the crate, with the CLI exit-code mapping.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("{path}:{line}: parse error: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },

    #[error("empty input: {0}")]
    EmptyData(String),

    #[error("feature pipeline error: {0}")]
    Pipeline(String),

    #[error("split error: {0}")]
    Split(String),

    #[error("model format error: {0}")]
    Format(String),

    #[error("config error: {0}")]
    Config(String),

    #[error(
        "divergence: {param} became non-finite on triplet (u={u}, i={i}, j={j}) \
         with rates alpha_d={alpha_d}, alpha_v={alpha_v}"
    )]
    Divergence {
        u: u32,
        i: u32,
        j: u32,
        alpha_d: f64,
        alpha_v: f64,
        param: String,
    },

    #[error("numerical check failed: {0}")]
    Numerical(String),

    #[error("oracle cap exceeded: n_F={n_f} > {cap}")]
    OracleCap { n_f: usize, cap: usize },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn io(path: &std::path::Path, source: std::io::Error) -> Self {
        Error::Io {
            path: path.display().to_string(),
            source,
        }
    }

    /// Process exit code: 1 usage/config, 2 data, 3 numerical failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 1,
            Error::Dimension(_)
            | Error::Parse { .. }
            | Error::EmptyData(_)
            | Error::Pipeline(_)
            | Error::Split(_)
            | Error::Format(_)
            | Error::Io { .. } => 2,
            Error::Divergence { .. } | Error::Numerical(_) | Error::OracleCap { .. } => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
