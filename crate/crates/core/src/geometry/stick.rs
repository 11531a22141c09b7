//! Closed polygons with exact rational vertices.

use std::fmt::Write as _;
use std::path::Path;

use num_traits::Zero;

use super::predicates::{orient3d, segment_segment_dist2};
use super::rational::{cross, format_exact, is_zero_vec, parse_rational, scale, sub, Point3, Q};
use crate::error::{Error, Result};

/// A polygonal knot: `k ≥ 3` vertices joined cyclically by straight sticks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StickKnot {
    vertices: Vec<Point3>,
}

impl StickKnot {
    /// Rejects repeated vertices, collinear consecutive sticks and
    /// self-intersections.
    pub fn new(vertices: Vec<Point3>) -> Result<Self> {
        let k = vertices.len();
        if k < 3 {
            return Err(Error::DegenerateKnot(format!("{k} vertices")));
        }
        for i in 0..k {
            for j in i + 1..k {
                if vertices[i] == vertices[j] {
                    return Err(Error::DegenerateKnot(format!("vertices {} and {} coincide", i + 1, j + 1)));
                }
            }
        }
        for i in 0..k {
            let a = sub(&vertices[i], &vertices[(i + k - 1) % k]);
            let b = sub(&vertices[(i + 1) % k], &vertices[i]);
            if is_zero_vec(&cross(&a, &b)) {
                return Err(Error::DegenerateKnot(format!("sticks meeting at vertex {} are collinear", i + 1)));
            }
        }
        let knot = Self { vertices };
        for (i, j) in knot.non_adjacent_pairs() {
            let (a, b) = knot.edge(i);
            let (c, d) = knot.edge(j);
            if segment_segment_dist2(a, b, c, d).is_zero() {
                return Err(Error::DegenerateKnot(format!("sticks {} and {} intersect", i + 1, j + 1)));
            }
        }
        Ok(knot)
    }

    pub fn k(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Point3] {
        &self.vertices
    }

    /// Endpoints of stick `i`, from vertex `i` to vertex `i + 1`.
    pub fn edge(&self, i: usize) -> (&Point3, &Point3) {
        (&self.vertices[i], &self.vertices[(i + 1) % self.k()])
    }

    /// Index pairs `i < j` of sticks that share no vertex.
    pub fn non_adjacent_pairs(&self) -> Vec<(usize, usize)> {
        let k = self.k();
        let mut out = Vec::new();
        for i in 0..k {
            for j in i + 2..k {
                if !(i == 0 && j == k - 1) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// No three vertices collinear and no four coplanar.
    pub fn in_general_position(&self) -> bool {
        let v = &self.vertices;
        let k = v.len();
        for a in 0..k {
            for b in a + 1..k {
                for c in b + 1..k {
                    if is_zero_vec(&cross(&sub(&v[b], &v[a]), &sub(&v[c], &v[a]))) {
                        return false;
                    }
                    for d in c + 1..k {
                        if orient3d(&v[a], &v[b], &v[c], &v[d]) == 0 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn scaled(&self, s: &Q) -> Result<Self> {
        Self::new(self.vertices.iter().map(|p| scale(p, s)).collect())
    }

    /// One `x y z` line per vertex; `#` starts a comment. Coordinates may be
    /// integers, `p/q` fractions or decimal literals, all read exactly.
    pub fn parse(text: &str) -> Result<Self> {
        let mut vertices = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(Error::ParseError { line: i + 1, msg: format!("expected 3 coordinates, found {}", fields.len()) });
            }
            let mut p: Vec<Q> = Vec::with_capacity(3);
            for f in fields {
                p.push(parse_rational(f).ok_or_else(|| Error::ParseError { line: i + 1, msg: format!("bad number `{f}`") })?);
            }
            let [x, y, z]: [Q; 3] = p.try_into().unwrap();
            vertices.push([x, y, z]);
        }
        Self::new(vertices)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for p in &self.vertices {
            writeln!(s, "{} {} {}", format_exact(&p[0]), format_exact(&p[1]), format_exact(&p[2])).unwrap();
        }
        s
    }
}

pub fn load_stick_knot(path: impl AsRef<Path>) -> Result<StickKnot> {
    StickKnot::parse(&std::fs::read_to_string(path)?)
}

pub fn save_stick_knot(knot: &StickKnot, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, knot.to_text())?;
    Ok(())
}
