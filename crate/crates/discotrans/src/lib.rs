//! File formats, fixtures, pipelines and the command-line front end for
//! the translation checks in `discotrans-core`.
//!
//! - [`formats`]: readers and writers for lexicons, models, text tables,
//!   trees, adjective tables, descriptors and concept JSON.
//! - [`fixtures`]: the bundled English and Irish data sets.
//! - [`pipeline`]: sentence checking, evaluation and corpus models.
//! - [`reproduce`]: the regression suites.
//! - [`cli`]: the `discotrans` command line.

pub mod cli;
pub mod error;
pub mod fixtures;
pub mod formats;
pub mod pipeline;
pub mod reproduce;

pub use error::{Error, Result};
