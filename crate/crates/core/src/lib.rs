//! Triangulated tori, their shortest non-separating cycles, and polyhedral
//! realizations of knotted tori in `R^3`.
//!
//! Vertices are 0-based throughout the API; text formats and CLI output use
//! 1-based labels.

pub mod canonical;
pub mod census;
pub mod complex;
pub mod error;
pub mod generators;
pub mod geometry;
pub mod knot;
pub mod report;
pub mod topology;

pub use complex::{parse_complex, validate_surface, Complex, Cycle, SimplicialTorus, SurfaceReport};
pub use error::{Error, Result};
