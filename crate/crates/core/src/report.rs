//! Versioned JSON reports for complexes and realized meshes.

use serde::Serialize;

use crate::complex::SimplicialTorus;
use crate::error::Result;
use crate::geometry::mesh::{Construction, EmbeddingReport, Mesh, Violation};
use crate::geometry::rational::format_exact;
use crate::geometry::StickKnot;
use crate::knot::classify::{core_curve, cycle_polygon};
use crate::knot::{knot_determinant, project_generic};
use crate::topology::{distance_layers, lower_bound, stick_number_and_type, DistanceLayerReport, HomologySignature};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub vertices: Vec<usize>,
    pub signature: HomologySignature,
}

#[derive(Debug, Clone, Serialize)]
pub struct Witnesses {
    /// A shortest non-separating cycle, of length `m`.
    pub shortest: Witness,
    /// A shortest cycle not homotopic to it, of length `s`.
    pub other: Witness,
}

/// Vertex labels in reports are the labels of the input file.
#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub n: usize,
    pub edges: usize,
    pub faces: usize,
    pub equivelar: bool,
    pub m: usize,
    pub s: usize,
    #[serde(rename = "type")]
    pub torus_type: String,
    pub witnesses: Witnesses,
    pub layer_report: DistanceLayerReport,
    pub bound_value: i64,
    pub bound_satisfied: bool,
}

/// Type, witnesses, distance layers around the first vertex of the shortest
/// witness, and the vertex lower bound. `labels[v]` names internal vertex `v`;
/// `None` means 1-based labels.
pub fn analyze(t: &SimplicialTorus, labels: Option<&[usize]>) -> Result<AnalysisReport> {
    let name = |v: usize| labels.map_or(v + 1, |l| l[v]);
    let ty = stick_number_and_type(t)?;
    let mut layer_report = distance_layers(t, &ty.witness_m, ty.witness_m.vertices()[0])?;
    layer_report.base_vertex = name(layer_report.base_vertex);
    let bound_value = lower_bound(ty.m as i64, ty.s as i64)?;
    let witness = |c: &crate::complex::Cycle, signature| Witness { vertices: c.vertices().iter().map(|&v| name(v)).collect(), signature };
    let report = t.report();
    Ok(AnalysisReport {
        schema: SCHEMA,
        n: t.n(),
        edges: report.edges,
        faces: report.faces,
        equivelar: t.is_equivelar(),
        m: ty.m,
        s: ty.s,
        torus_type: ty.label(),
        witnesses: Witnesses { shortest: witness(&ty.witness_m, ty.signature_m), other: witness(&ty.witness_s, ty.signature_s) },
        layer_report,
        bound_value,
        bound_satisfied: t.n() as i64 >= bound_value,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct KnotSummary {
    pub k: usize,
    pub determinant: u64,
    pub crossings: usize,
    pub gauss_code: Vec<i64>,
    pub direction: Vec<String>,
}

pub fn knot_summary(knot: &StickKnot) -> Result<KnotSummary> {
    let d = project_generic(knot)?;
    Ok(KnotSummary {
        k: knot.k(),
        determinant: knot_determinant(knot)?,
        crossings: d.crossing_count(),
        gauss_code: d.gauss_code.clone(),
        direction: d.projection_direction.iter().map(format_exact).collect(),
    })
}

/// A curve on or inside the mesh whose knot type is recorded.
#[derive(Debug, Clone, Serialize)]
pub struct CoreSummary {
    /// 1-based mesh vertices for a cycle of the surface; empty for the
    /// ring-centroid core of a tube.
    pub cycle: Vec<usize>,
    pub determinant: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct RealizationReport {
    pub schema: u32,
    pub construction: Construction,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler: i64,
    pub orientable: bool,
    pub genus: i64,
    pub embedded: bool,
    pub faces_checked: usize,
    pub violation: Option<Violation>,
    /// Exact tube radius, as `p/q`.
    pub epsilon: Option<String>,
    pub knot: Option<KnotSummary>,
    pub core: Option<CoreSummary>,
}

/// Certificate for a mesh. Tubes and complements record the determinant of
/// the ring-centroid core; cyclic-polytope tori that of a shortest cycle not
/// homotopic to a shortest non-separating one.
pub fn realization_report(mesh: &Mesh, embedding: &EmbeddingReport) -> Result<RealizationReport> {
    let prov = mesh.provenance();
    let knot = prov.source_knot.as_ref().map(knot_summary).transpose()?;
    let core = match prov.construction {
        Construction::Tube | Construction::Complement => {
            Some(CoreSummary { cycle: Vec::new(), determinant: knot_determinant(&core_curve(mesh)?)? })
        }
        Construction::CyclicPolytope => {
            let ty = stick_number_and_type(mesh.complex())?;
            let curve = StickKnot::new(cycle_polygon(mesh, &ty.witness_s))?;
            Some(CoreSummary { cycle: ty.witness_s.labels(), determinant: knot_determinant(&curve)? })
        }
        Construction::Imported => None,
    };
    let r = mesh.complex().report();
    Ok(RealizationReport {
        schema: SCHEMA,
        construction: prov.construction,
        vertices: r.vertices,
        edges: r.edges,
        faces: r.faces,
        euler: r.euler,
        orientable: r.orientable,
        genus: r.genus,
        embedded: embedding.embedded,
        faces_checked: embedding.faces_checked,
        violation: embedding.violation.clone(),
        epsilon: prov.epsilon.as_ref().map(format_exact),
        knot,
        core,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::minimal_torus_3k;

    #[test]
    fn minimal_torus_report() {
        let t = minimal_torus_3k(5).unwrap();
        let r = analyze(&t, None).unwrap();
        assert_eq!((r.n, r.m, r.s), (13, 3, 5));
        assert_eq!(r.torus_type, "3x5");
        assert_eq!(r.bound_value, 12);
        assert!(r.bound_satisfied && r.layer_report.all_hold());
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["schema"], 1);
        assert_eq!(json["type"], "3x5");
        assert_eq!(json["witnesses"]["other"]["vertices"].as_array().unwrap().len(), 5);
    }

    #[test]
    fn labels_follow_the_input() {
        let t = minimal_torus_3k(3).unwrap();
        let labels: Vec<usize> = (0..7).map(|v| 10 * (v + 1)).collect();
        let r = analyze(&t, Some(&labels)).unwrap();
        assert!(r.witnesses.shortest.vertices.iter().all(|v| v % 10 == 0));
        assert_eq!(r.layer_report.base_vertex, r.witnesses.shortest.vertices[0]);
    }
}
