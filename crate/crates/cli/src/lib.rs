//! IO and command line front end for the Tietze simplification engine.
//!
//! This crate owns everything that touches the outside world: the
//! presentation text formats ([`mod@format`]), the transform log text
//! format ([`logfmt`]), the stats report ([`stats`]), the seeded corpus
//! uglifier ([`mod@uglify`]), a real clock ([`clock`]) and the `tietze`
//! binary ([`run_cli`]). The algorithms live in `tietze-core`.

pub mod cli;
pub mod clock;
pub mod error;
pub mod format;
pub mod logfmt;
pub mod stats;
pub mod uglify;

pub use cli::run_cli;
pub use error::{CliError, ParseError};
