//! Polyhedral tori in `R^3`, embedding verification and OFF/OBJ I/O.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::predicates::{meet_only_along_edge, meet_only_at_vertex, triangles_intersect};
use super::rational::{cross, format_decimal, is_zero_vec, parse_rational, sub, Point3, Q};
use super::stick::StickKnot;
use crate::complex::SimplicialTorus;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construction {
    Tube,
    Complement,
    CyclicPolytope,
    Imported,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub construction: Construction,
    pub epsilon: Option<Q>,
    pub source_knot: Option<StickKnot>,
    /// Vertex triples of the tube rings, one per knot vertex in knot order.
    pub rings: Vec<[usize; 3]>,
    /// The tube triangle `v1 v2 x` under the tent of a complement torus.
    pub attachment: Option<[usize; 3]>,
}

impl Provenance {
    pub fn bare(construction: Construction) -> Self {
        Self { construction, epsilon: None, source_knot: None, rings: Vec::new(), attachment: None }
    }
}

#[derive(Debug, Clone)]
pub struct Mesh {
    coords: Vec<Point3>,
    complex: SimplicialTorus,
    provenance: Provenance,
}

impl Mesh {
    pub fn new(coords: Vec<Point3>, complex: SimplicialTorus, provenance: Provenance) -> Result<Self> {
        assert_eq!(coords.len(), complex.n(), "one coordinate triple per vertex");
        for i in 0..coords.len() {
            for j in i + 1..coords.len() {
                if coords[i] == coords[j] {
                    return Err(Error::DegenerateKnot(format!("mesh vertices {} and {} coincide", i + 1, j + 1)));
                }
            }
        }
        Ok(Self { coords, complex, provenance })
    }

    pub fn coords(&self) -> &[Point3] {
        &self.coords
    }

    pub fn complex(&self) -> &SimplicialTorus {
        &self.complex
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn face_points(&self, f: [usize; 3]) -> [&Point3; 3] {
        f.map(|v| &self.coords[v])
    }
}

/// Two faces whose intersection is not the simplex they share.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub faces: [[usize; 3]; 2],
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingReport {
    pub embedded: bool,
    pub faces_checked: usize,
    pub violation: Option<Violation>,
}

fn pair_violation(mesh: &Mesh, f: [usize; 3], g: [usize; 3]) -> Option<&'static str> {
    let shared: Vec<usize> = f.iter().copied().filter(|v| g.contains(v)).collect();
    let p = |v: usize| &mesh.coords[v];
    let other = |t: [usize; 3]| -> Vec<usize> { t.iter().copied().filter(|v| !shared.contains(v)).collect() };
    match shared.len() {
        0 => triangles_intersect(mesh.face_points(f), mesh.face_points(g)).then_some("disjoint faces intersect"),
        1 => {
            let (a, b) = (other(f), other(g));
            (!meet_only_at_vertex(p(shared[0]), p(a[0]), p(a[1]), p(b[0]), p(b[1])))
                .then_some("faces sharing a vertex meet elsewhere")
        }
        _ => {
            let (a, b) = (other(f), other(g));
            (!meet_only_along_edge(p(shared[0]), p(shared[1]), p(a[0]), p(b[0])))
                .then_some("faces sharing an edge overlap")
        }
    }
}

/// Exact check that distinct faces meet only in their common vertex or edge.
pub fn verify_embedding(mesh: &Mesh) -> EmbeddingReport {
    let faces = mesh.complex.faces();
    let nf = faces.len();
    let degenerate = faces.iter().find(|&&f| {
        let [a, b, c] = mesh.face_points(f);
        is_zero_vec(&cross(&sub(b, a), &sub(c, a)))
    });
    if let Some(&f) = degenerate {
        return EmbeddingReport {
            embedded: false,
            faces_checked: nf,
            violation: Some(Violation { faces: [f, f], reason: "degenerate face".into() }),
        };
    }
    let violation = (0..nf).into_par_iter().find_map_first(|i| {
        (i + 1..nf).find_map(|j| {
            pair_violation(mesh, faces[i], faces[j])
                .map(|reason| Violation { faces: [faces[i], faces[j]], reason: reason.into() })
        })
    });
    EmbeddingReport { embedded: violation.is_none(), faces_checked: nf, violation }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeshFormat {
    Off,
    Obj,
}

impl FromStr for MeshFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "off" => Ok(Self::Off),
            "obj" => Ok(Self::Obj),
            other => Err(Error::ParseError { line: 0, msg: format!("unknown mesh format `{other}`") }),
        }
    }
}

fn oriented(mesh: &Mesh) -> Vec<[usize; 3]> {
    mesh.complex.oriented_faces().expect("tori are orientable").to_vec()
}

fn coord_line(p: &Point3, precision: usize) -> String {
    p.iter().map(|x| format_decimal(x, precision)).collect::<Vec<_>>().join(" ")
}

/// OFF text: 0-based, consistently oriented faces.
pub fn export_off(mesh: &Mesh, precision: usize) -> String {
    let faces = oriented(mesh);
    let mut s = format!("OFF\n{} {} 0\n", mesh.coords.len(), faces.len());
    for p in &mesh.coords {
        writeln!(s, "{}", coord_line(p, precision)).unwrap();
    }
    for f in faces {
        writeln!(s, "3 {} {} {}", f[0], f[1], f[2]).unwrap();
    }
    s
}

/// OBJ text: 1-based, consistently oriented faces.
pub fn export_obj(mesh: &Mesh, precision: usize) -> String {
    let mut s = String::new();
    for p in &mesh.coords {
        writeln!(s, "v {}", coord_line(p, precision)).unwrap();
    }
    for f in oriented(mesh) {
        writeln!(s, "f {} {} {}", f[0] + 1, f[1] + 1, f[2] + 1).unwrap();
    }
    s
}

pub fn export_mesh(mesh: &Mesh, format: MeshFormat, precision: usize, path: impl AsRef<Path>) -> Result<()> {
    let text = match format {
        MeshFormat::Off => export_off(mesh, precision),
        MeshFormat::Obj => export_obj(mesh, precision),
    };
    std::fs::write(path, text)?;
    Ok(())
}

/// Reads an OFF triangle mesh; coordinates are taken exactly as printed.
pub fn import_off(text: &str) -> Result<Mesh> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
        .filter(|(_, l)| !l.is_empty());
    let err = |line: usize, msg: &str| Error::ParseError { line, msg: msg.into() };
    match lines.next() {
        Some((_, "OFF")) => {}
        Some((i, _)) => return Err(err(i, "missing OFF header")),
        None => return Err(err(0, "empty input")),
    }
    let (i, counts) = lines.next().ok_or_else(|| err(0, "missing counts line"))?;
    let counts: Vec<usize> = counts
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| err(i, "bad count")))
        .collect::<Result<_>>()?;
    if counts.len() < 2 {
        return Err(err(i, "expected `V F E`"));
    }
    let (nv, nf) = (counts[0], counts[1]);
    let mut coords = Vec::with_capacity(nv);
    for _ in 0..nv {
        let (i, l) = lines.next().ok_or_else(|| err(0, "missing vertex line"))?;
        let xs: Vec<Q> = l
            .split_whitespace()
            .map(|t| parse_rational(t).ok_or_else(|| err(i, "bad coordinate")))
            .collect::<Result<_>>()?;
        let [x, y, z]: [Q; 3] = xs.try_into().map_err(|_| err(i, "expected 3 coordinates"))?;
        coords.push([x, y, z]);
    }
    let mut faces = Vec::with_capacity(nf);
    for _ in 0..nf {
        let (i, l) = lines.next().ok_or_else(|| err(0, "missing face line"))?;
        let xs: Vec<usize> = l
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| err(i, "bad index")))
            .collect::<Result<_>>()?;
        if xs.len() != 4 || xs[0] != 3 {
            return Err(err(i, "only triangles are supported"));
        }
        faces.push([xs[1], xs[2], xs[3]]);
    }
    let complex = SimplicialTorus::new(nv, &faces)?;
    Mesh::new(coords, complex, Provenance::bare(Construction::Imported))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::canonical_form;
    use crate::generators::moebius_torus;
    use crate::geometry::rational::q;

    /// Möbius' torus with vertices on the twisted cubic; used only for I/O.
    fn moment_mesh() -> Mesh {
        let t = moebius_torus();
        let coords = (0..7).map(|i| [q(i), q(i * i), q(i * i * i)]).collect();
        Mesh::new(coords, t, Provenance::bare(Construction::Imported)).unwrap()
    }

    #[test]
    fn off_round_trip() {
        let m = moment_mesh();
        let off = export_off(&m, 3);
        assert!(off.starts_with("OFF\n7 14 0\n"));
        let back = import_off(&off).unwrap();
        assert_eq!(back.coords(), m.coords());
        assert_eq!(canonical_form(back.complex()).unwrap(), canonical_form(m.complex()).unwrap());
    }

    #[test]
    fn obj_is_one_based() {
        let obj = export_obj(&moment_mesh(), 1);
        assert!(obj.lines().filter(|l| l.starts_with("f ")).all(|l| !l.split(' ').any(|t| t == "0")));
        assert_eq!(obj.lines().filter(|l| l.starts_with("v ")).count(), 7);
    }

    #[test]
    fn format_names() {
        assert_eq!("OFF".parse::<MeshFormat>().unwrap(), MeshFormat::Off);
        assert!("ply".parse::<MeshFormat>().is_err());
    }
}
