//! File formats, caching, reports and the command line for `mackey-core`.

pub mod cache;
pub mod checks;
pub mod cli;
pub mod error;
pub mod formats;
pub mod report;

pub use mackey_core as core;
pub use error::{AppError, Result};
