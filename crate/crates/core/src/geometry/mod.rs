//! Exact rational geometry: tubes around stick knots, complement tori,
//! cyclic-polytope realizations and embedding checks.

pub mod cyclic;
pub mod hull;
pub mod mesh;
pub mod predicates;
pub mod rational;
pub mod stick;
pub mod tube;

pub use cyclic::{cyclic_polytope_realization, CyclicRealization};
pub use mesh::{export_mesh, export_obj, export_off, import_off, verify_embedding, EmbeddingReport, Mesh, MeshFormat};
pub use rational::{Point3, Q};
pub use stick::{load_stick_knot, save_stick_knot, StickKnot};
pub use tube::{auto_tube, choose_epsilon, complement_construction, epsilon_bound, tube_construction};
