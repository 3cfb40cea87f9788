//! File formats, spec strings, parallel evaluation and the verification
//! suite built on `skeinlab-core`.

pub mod error;
pub mod parallel;
pub mod pd;
pub mod poly_io;
pub mod report_json;
pub mod spec;
pub mod tree_io;
pub mod verify;

pub use error::{CliError, ParseError};
pub use skeinlab_core as core;
