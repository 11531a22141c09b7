//! Diagrams, determinants and linking numbers of stick knots.

pub mod classify;
pub mod determinant;
pub mod diagram;
pub mod linking;

pub use classify::{classify_cycle_in_tube, core_curve, CycleClass, CycleClassification};
pub use determinant::{knot_determinant, knot_determinant_along};
pub use diagram::{generic_direction, project_diagram, project_generic, Crossing, KnotDiagram};
pub use linking::linking_number;
