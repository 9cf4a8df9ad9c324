//! Exact implicit equations for n-ellipses and their signed-sum extended loci,
//! together with raster rendering, sign classification and circle-deviation
//! analysis.

pub mod catalog;
pub mod locus;
pub mod numeric;
pub mod poly;
pub mod presets;
pub mod raster;
pub mod scene_io;

pub use locus::{closure_poly, elimination_oracle, LocusError, LocusResult, Point, Scene, SignVector};
pub use numeric::{NumericError, QuadraticNumber, Rational};
pub use poly::{CanonicalForm, MultiPoly, PolyError, TermOrder};
