//! Error type of the std companion crate.

use std::path::PathBuf;

use discotrans_core::bleu::BleuError;
use discotrans_core::concepts::ConceptError;
use discotrans_core::corpus::CorpusError;
use discotrans_core::distrib::DistribError;
use discotrans_core::grammar::GrammarError;
use discotrans_core::metric::MetricError;

/// Errors raised while loading files or running a pipeline.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A file could not be read or written.
    #[error("{path}: {source}")]
    Io {
        /// The file.
        path: PathBuf,
        /// Underlying error.
        source: std::io::Error,
    },
    /// A file did not follow its format.
    #[error("{file}: {message}")]
    Format {
        /// Name of the file or fixture.
        file: String,
        /// What is wrong.
        message: String,
    },
    /// A line-oriented file had a bad line.
    #[error("{file}:{line}: {message}")]
    Line {
        /// Name of the file or fixture.
        file: String,
        /// One-based line number.
        line: usize,
        /// What is wrong.
        message: String,
    },
    /// JSON serialisation failed.
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    /// A grammar error.
    #[error(transparent)]
    Grammar(#[from] GrammarError),
    /// A meaning could not be computed.
    #[error(transparent)]
    Distrib(#[from] DistribError),
    /// Counting failed.
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    /// BLEU could not be computed.
    #[error(transparent)]
    Bleu(#[from] BleuError),
    /// A concept could not be built.
    #[error(transparent)]
    Concept(#[from] ConceptError),
    /// Two concepts could not be compared.
    #[error(transparent)]
    Metric(#[from] MetricError),
    /// A name was not found among the loaded data.
    #[error("unknown {kind} `{name}`")]
    Unknown {
        /// What was looked up.
        kind: &'static str,
        /// The name.
        name: String,
    },
}

impl Error {
    /// A format error for `file`.
    pub fn format(file: &str, message: impl Into<String>) -> Self {
        Error::Format {
            file: file.to_string(),
            message: message.into(),
        }
    }

    /// A line error for `file`.
    pub fn line(file: &str, line: usize, message: impl Into<String>) -> Self {
        Error::Line {
            file: file.to_string(),
            line,
            message: message.into(),
        }
    }

    /// Whether the error is a usage problem (bad file, unknown name) rather
    /// than a domain outcome such as a rejected sentence.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Io { .. } | Error::Format { .. } | Error::Line { .. } | Error::Json(_) | Error::Unknown { .. }
        )
    }
}

/// Result alias for this crate.
pub type Result<T, E = Error> = std::result::Result<T, E>;
