//! Homology signatures, shortest cycles, torus types and the vertex bound.

pub mod bound;
pub mod cycles;
pub mod homology;
pub mod layers;

pub use bound::{bound_strict_gap, lower_bound};
pub use cycles::{
    cycle_signature, is_separating, marked_type, shortest_nonseparating, stick_number_and_type,
    CycleAnalyzer, MarkedType, TorusTypeResult,
};
pub use homology::{homology_basis, HomologyBasis, HomologySignature};
pub use layers::{distance_layers, DistanceLayerReport, LayerCheck};
