//! Command-line and HTTP front ends for the `nellipse` engine.
//!
//! Both front ends build their outputs through [`output`], so a scene and
//! parameter set produce the same bytes whichever way they are requested.

pub mod cli;
pub mod golden;
pub mod output;
pub mod server;
pub mod source;

pub use output::{equation_json, raster_bytes, RasterMode, RasterOutput, MAX_PIXELS};
pub use source::{auto_window, resolve, SceneSource};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum AppError {
    /// Invalid input, located by a field path.
    #[error("{path}: {message}")]
    BadInput { path: String, message: String },
    #[error("raster of {width}x{height} exceeds the {max}-pixel limit")]
    TooLarge {
        width: usize,
        height: usize,
        max: usize,
    },
    #[error(transparent)]
    Locus(#[from] nellipse::LocusError),
    #[error(transparent)]
    Raster(#[from] nellipse::raster::RasterError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl AppError {
    pub fn bad(path: impl Into<String>, message: impl Into<String>) -> Self {
        AppError::BadInput {
            path: path.into(),
            message: message.into(),
        }
    }
}
