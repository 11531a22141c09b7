//! Meridian classification of cycles on tube meshes.

use serde::Serialize;

use super::linking::linking_number;
use crate::complex::Cycle;
use crate::error::{Error, Result};
use crate::geometry::rational::{centroid, Point3};
use crate::geometry::{Mesh, StickKnot};
use crate::topology::{homology_basis, HomologySignature};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CycleClass {
    Meridian,
    NonMeridian,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleClassification {
    pub class: CycleClass,
    pub signature: HomologySignature,
    /// Class of the first ring, which bounds a disk inside the tube.
    pub meridian_signature: HomologySignature,
    /// Algebraic intersection with the meridian; zero exactly for meridians.
    pub longitude_coefficient: i64,
    /// Linking number of the cycle, as a polygon, with the core curve.
    pub linking_number: i64,
}

fn rings(mesh: &Mesh) -> Result<&[[usize; 3]]> {
    let r = &mesh.provenance().rings;
    if r.is_empty() {
        Err(Error::MissingProvenance)
    } else {
        Ok(r)
    }
}

/// The ring centroids in ring order.
pub fn core_curve(mesh: &Mesh) -> Result<StickKnot> {
    let pts: Vec<Point3> = rings(mesh)?
        .iter()
        .map(|r| centroid(&mesh.face_points(*r)))
        .collect();
    StickKnot::new(pts)
}

pub fn cycle_polygon(mesh: &Mesh, c: &Cycle) -> Vec<Point3> {
    c.vertices().iter().map(|&v| mesh.coords()[v].clone()).collect()
}

pub fn classify_cycle_in_tube(mesh: &Mesh, c: &Cycle) -> Result<CycleClassification> {
    let ring = rings(mesh)?[0];
    let basis = homology_basis(mesh.complex())?;
    let signature = basis.cycle_signature(c);
    if signature.is_zero() {
        return Err(Error::SeparatingCycle);
    }
    let meridian_signature = basis.cycle_signature(&Cycle::new(mesh.complex(), ring.to_vec())?);
    let longitude_coefficient = meridian_signature.cross(signature);
    let class = if signature.same_unoriented(meridian_signature) { CycleClass::Meridian } else { CycleClass::NonMeridian };
    let linking_number = linking_number(&cycle_polygon(mesh, c), core_curve(mesh)?.vertices())?;
    Ok(CycleClassification { class, signature, meridian_signature, longitude_coefficient, linking_number })
}
