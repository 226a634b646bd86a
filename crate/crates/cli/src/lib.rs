//! Command-line front end and HTTP service for mutclass-core.

pub mod commands;
pub mod service;
pub mod summary;

pub use commands::{run, Cli, ExitCode};
pub use service::router;
