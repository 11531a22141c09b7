//! Closed triangulated surfaces stored as face lists.
//!
//! Vertices are `0..n` internally. The text format and all user-facing output
//! use 1-based labels; [`parse_complex`] compacts sparse labels on ingest.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sorted vertex pair.
pub type Edge = [usize; 2];

#[inline]
pub fn edge(a: usize, b: usize) -> Edge {
    if a < b {
        [a, b]
    } else {
        [b, a]
    }
}

#[inline]
pub(crate) fn sort3(mut f: [usize; 3]) -> [usize; 3] {
    f.sort_unstable();
    f
}

/// Counts and global invariants of a validated closed surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceReport {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler: i64,
    pub orientable: bool,
    /// Orientable genus, or the number of cross-caps for non-orientable surfaces.
    pub genus: i64,
}

/// A validated, connected, closed triangulated surface.
#[derive(Debug, Clone)]
pub struct Complex {
    n: usize,
    faces: Vec<[usize; 3]>,
    edges: Vec<Edge>,
    edge_index: HashMap<Edge, usize>,
    edge_faces: Vec<[usize; 2]>,
    neighbors: Vec<Vec<usize>>,
    /// Cyclic link of each vertex. For orientable surfaces every rotation is
    /// counterclockwise with respect to `oriented`.
    rotation: Vec<Vec<usize>>,
    oriented: Option<Vec<[usize; 3]>>,
    report: SurfaceReport,
}

impl Complex {
    /// Validates `faces` (0-based labels, every vertex in `0..n` used).
    pub fn new(n: usize, faces: &[[usize; 3]]) -> Result<Self> {
        if faces.is_empty() {
            return Err(Error::EmptyComplex);
        }
        let mut sorted: Vec<[usize; 3]> = Vec::with_capacity(faces.len());
        for f in faces {
            if f.iter().any(|&v| v >= n) {
                return Err(Error::VertexOutOfRange(*f.iter().max().unwrap()));
            }
            if f[0] == f[1] || f[1] == f[2] || f[0] == f[2] {
                return Err(Error::DegenerateFace(*f));
            }
            sorted.push(sort3(*f));
        }
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateFace(w[0]));
        }

        let mut edge_index: HashMap<Edge, usize> = HashMap::new();
        let mut edges: Vec<Edge> = Vec::new();
        let mut edge_faces_raw: Vec<Vec<usize>> = Vec::new();
        for (fi, f) in sorted.iter().enumerate() {
            for e in [edge(f[0], f[1]), edge(f[1], f[2]), edge(f[0], f[2])] {
                let idx = *edge_index.entry(e).or_insert_with(|| {
                    edges.push(e);
                    edge_faces_raw.push(Vec::new());
                    edges.len() - 1
                });
                edge_faces_raw[idx].push(fi);
            }
        }
        // Report witnesses in a deterministic order.
        let mut order: Vec<usize> = (0..edges.len()).collect();
        order.sort_unstable_by_key(|&i| edges[i]);
        for &i in &order {
            match edge_faces_raw[i].len() {
                2 => {}
                1 => return Err(Error::OpenEdge(edges[i])),
                _ => return Err(Error::NonManifoldEdge(edges[i])),
            }
        }
        let edge_faces: Vec<[usize; 2]> =
            edge_faces_raw.iter().map(|v| [v[0], v[1]]).collect();

        let mut neighbors = vec![Vec::new(); n];
        for e in &edges {
            neighbors[e[0]].push(e[1]);
            neighbors[e[1]].push(e[0]);
        }
        for (v, nb) in neighbors.iter_mut().enumerate() {
            if nb.is_empty() {
                return Err(Error::UnusedVertex(v));
            }
            nb.sort_unstable();
        }

        let unoriented_rotation = rotations_unoriented(n, &sorted)?;

        // Face connectivity.
        let mut seen = vec![false; sorted.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(f) = queue.pop_front() {
            let t = sorted[f];
            for e in [edge(t[0], t[1]), edge(t[1], t[2]), edge(t[0], t[2])] {
                for &g in &edge_faces[edge_index[&e]] {
                    if !seen[g] {
                        seen[g] = true;
                        reached += 1;
                        queue.push_back(g);
                    }
                }
            }
        }
        if reached != sorted.len() {
            return Err(Error::Disconnected);
        }

        let oriented = orient_faces(&sorted, &edge_index, &edge_faces);
        let rotation = match &oriented {
            Some(of) => rotations_from_orientation(n, of)?,
            None => unoriented_rotation,
        };

        let euler = n as i64 - edges.len() as i64 + sorted.len() as i64;
        let orientable = oriented.is_some();
        let genus = if orientable { (2 - euler) / 2 } else { 2 - euler };
        let report = SurfaceReport {
            vertices: n,
            edges: edges.len(),
            faces: sorted.len(),
            euler,
            orientable,
            genus,
        };
        Ok(Self {
            n,
            faces: sorted,
            edges,
            edge_index,
            edge_faces,
            neighbors,
            rotation,
            oriented,
            report,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Faces as sorted triples, in lexicographic order.
    pub fn faces(&self) -> &[[usize; 3]] {
        &self.faces
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_id(&self, a: usize, b: usize) -> Option<usize> {
        self.edge_index.get(&edge(a, b)).copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edge_index.contains_key(&edge(a, b))
    }

    pub fn has_face(&self, f: [usize; 3]) -> bool {
        self.faces.binary_search(&sort3(f)).is_ok()
    }

    /// The two faces incident to an edge.
    pub fn edge_faces(&self, e: usize) -> [usize; 2] {
        self.edge_faces[e]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn is_equivelar(&self) -> bool {
        self.neighbors.iter().all(|nb| nb.len() == self.neighbors[0].len())
    }

    /// Cyclically ordered link of `v`.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    /// Consistently oriented faces, if the surface is orientable.
    pub fn oriented_faces(&self) -> Option<&[[usize; 3]]> {
        self.oriented.as_deref()
    }

    pub fn report(&self) -> SurfaceReport {
        self.report
    }

    pub fn is_torus(&self) -> bool {
        self.report.euler == 0 && self.report.orientable
    }

    /// Applies a vertex relabeling `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Complex> {
        let faces: Vec<[usize; 3]> = self
            .faces
            .iter()
            .map(|f| [perm[f[0]], perm[f[1]], perm[f[2]]])
            .collect();
        Complex::new(self.n, &faces)
    }
}

impl fmt::Display for Complex {
    /// Text format: vertex count, then one 1-based face per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for t in &self.faces {
            writeln!(f, "{} {} {}", t[0] + 1, t[1] + 1, t[2] + 1)?;
        }
        Ok(())
    }
}

/// Flood-fills a coherent orientation; `None` when the surface is non-orientable.
fn orient_faces(
    faces: &[[usize; 3]],
    edge_index: &HashMap<Edge, usize>,
    edge_faces: &[[usize; 2]],
) -> Option<Vec<[usize; 3]>> {
    let mut oriented: Vec<Option<[usize; 3]>> = vec![None; faces.len()];
    oriented[0] = Some(faces[0]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(fi) = queue.pop_front() {
        let t = oriented[fi].unwrap();
        for j in 0..3 {
            let (a, b) = (t[j], t[(j + 1) % 3]);
            let e = edge_index[&edge(a, b)];
            let g = if edge_faces[e][0] == fi { edge_faces[e][1] } else { edge_faces[e][0] };
            // The neighbour must traverse the shared edge as b -> a.
            let c = faces[g].iter().copied().find(|&x| x != a && x != b).unwrap();
            let want = [b, a, c];
            match oriented[g] {
                None => {
                    oriented[g] = Some(want);
                    queue.push_back(g);
                }
                Some(have) => {
                    if !same_cyclic(have, want) {
                        return None;
                    }
                }
            }
        }
    }
    Some(oriented.into_iter().map(|o| o.unwrap()).collect())
}

fn same_cyclic(a: [usize; 3], b: [usize; 3]) -> bool {
    (0..3).any(|r| a[0] == b[r] && a[1] == b[(r + 1) % 3] && a[2] == b[(r + 2) % 3])
}

fn rotations_from_orientation(n: usize, oriented: &[[usize; 3]]) -> Result<Vec<Vec<usize>>> {
    // succ[v][b] = c for each oriented face (v, b, c).
    let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
    for t in oriented {
        for j in 0..3 {
            succ[t[j]].insert(t[(j + 1) % 3], t[(j + 2) % 3]);
        }
    }
    let mut rot = Vec::with_capacity(n);
    for (v, s) in succ.iter().enumerate() {
        let start = *s.keys().min().ok_or(Error::UnusedVertex(v))?;
        let mut cyc = vec![start];
        let mut cur = s[&start];
        while cur != start {
            if cyc.len() > s.len() {
                return Err(Error::BadVertexLink(v));
            }
            cyc.push(cur);
            cur = *s.get(&cur).ok_or(Error::BadVertexLink(v))?;
        }
        if cyc.len() != s.len() {
            return Err(Error::BadVertexLink(v));
        }
        rot.push(cyc);
    }
    Ok(rot)
}

fn rotations_unoriented(n: usize, faces: &[[usize; 3]]) -> Result<Vec<Vec<usize>>> {
    let mut link: Vec<HashMap<usize, Vec<usize>>> = vec![HashMap::new(); n];
    for t in faces {
        for j in 0..3 {
            let (v, b, c) = (t[j], t[(j + 1) % 3], t[(j + 2) % 3]);
            link[v].entry(b).or_default().push(c);
            link[v].entry(c).or_default().push(b);
        }
    }
    let mut rot = Vec::with_capacity(n);
    for (v, l) in link.iter().enumerate() {
        let start = *l.keys().min().ok_or(Error::UnusedVertex(v))?;
        let mut cyc = vec![start];
        let mut prev = start;
        let mut cur = *l[&start].iter().min().unwrap();
        while cur != start {
            if cyc.len() > l.len() {
                return Err(Error::BadVertexLink(v));
            }
            cyc.push(cur);
            let nb = &l[&cur];
            let next = if nb[0] == prev { nb[1] } else { nb[0] };
            prev = cur;
            cur = next;
        }
        if cyc.len() != l.len() {
            return Err(Error::BadVertexLink(v));
        }
        rot.push(cyc);
    }
    Ok(rot)
}

/// Validates an arbitrary face list (0-based) and reports its invariants.
pub fn validate_surface(faces: &[[usize; 3]]) -> Result<SurfaceReport> {
    let n = faces.iter().flatten().max().map_or(0, |m| m + 1);
    Complex::new(n, faces).map(|c| c.report())
}

/// A validated triangulated torus: closed, connected, orientable, euler 0.
#[derive(Debug, Clone)]
pub struct SimplicialTorus(Complex);

impl SimplicialTorus {
    pub fn new(n: usize, faces: &[[usize; 3]]) -> Result<Self> {
        Self::from_complex(Complex::new(n, faces)?)
    }

    pub fn from_complex(c: Complex) -> Result<Self> {
        if !c.is_torus() {
            let r = c.report();
            return Err(Error::NotATorus { euler: r.euler, orientable: r.orientable });
        }
        Ok(Self(c))
    }

    pub fn complex(&self) -> &Complex {
        &self.0
    }

    pub fn into_complex(self) -> Complex {
        self.0
    }

    pub fn relabel(&self, perm: &[usize]) -> Result<SimplicialTorus> {
        self.0.relabel(perm).map(SimplicialTorus)
    }
}

impl Deref for SimplicialTorus {
    type Target = Complex;
    fn deref(&self) -> &Complex {
        &self.0
    }
}

impl fmt::Display for SimplicialTorus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A simple closed edge cycle, stored as its cyclic vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    /// Checks that `vertices` are distinct and consecutive pairs are edges.
    pub fn new(c: &Complex, vertices: Vec<usize>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::NotACycle(format!("length {} < 3", vertices.len())));
        }
        let mut seen = vec![false; c.n()];
        for &v in &vertices {
            if v >= c.n() {
                return Err(Error::VertexOutOfRange(v));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotACycle(format!("vertex {} repeated", v + 1)));
            }
        }
        let l = vertices.len();
        for i in 0..l {
            let (a, b) = (vertices[i], vertices[(i + 1) % l]);
            if !c.has_edge(a, b) {
                return Err(Error::NotACycle(format!("{}-{} is not an edge", a + 1, b + 1)));
            }
        }
        Ok(Self { vertices })
    }

    pub(crate) fn new_unchecked(vertices: Vec<usize>) -> Self {
        Self { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// 1-based labels, for reports.
    pub fn labels(&self) -> Vec<usize> {
        self.vertices.iter().map(|v| v + 1).collect()
    }
}

/// Link of `v` as a cycle; its length is the degree of `v`.
pub fn vertex_link(c: &Complex, v: usize) -> Result<Cycle> {
    if v >= c.n() {
        return Err(Error::VertexOutOfRange(v));
    }
    Ok(Cycle::new_unchecked(c.rotation(v).to_vec()))
}

/// Result of parsing the text format.
#[derive(Debug, Clone)]
pub struct ParsedComplex {
    pub complex: Complex,
    /// `labels[v]` is the original label of internal vertex `v`.
    pub labels: Vec<usize>,
}

/// Parses `n` followed by one face per line; `#` starts a comment.
/// Labels may be sparse; they are compacted in increasing order.
pub fn parse_complex(text: &str) -> Result<ParsedComplex> {
    let mut declared: Option<usize> = None;
    let mut raw: Vec<[usize; 3]> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let nums: std::result::Result<Vec<usize>, _> =
            line.split_whitespace().map(str::parse::<usize>).collect();
        let nums = nums.map_err(|e| Error::ParseError { line: i + 1, msg: e.to_string() })?;
        match (declared, nums.len()) {
            (None, 1) => declared = Some(nums[0]),
            (Some(_), 3) => {
                if nums.contains(&0) {
                    return Err(Error::ParseError { line: i + 1, msg: "labels are 1-based".into() });
                }
                raw.push([nums[0], nums[1], nums[2]]);
            }
            _ => {
                return Err(Error::ParseError {
                    line: i + 1,
                    msg: format!("expected {} integers", if declared.is_none() { 1 } else { 3 }),
                })
            }
        }
    }
    let declared = declared.ok_or(Error::ParseError { line: 0, msg: "missing vertex count".into() })?;
    let mut labels: Vec<usize> = raw.iter().flatten().copied().collect();
    labels.sort_unstable();
    labels.dedup();
    if labels.len() != declared {
        return Err(Error::ParseError {
            line: 1,
            msg: format!("declared {} vertices but faces use {}", declared, labels.len()),
        });
    }
    let index: HashMap<usize, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let faces: Vec<[usize; 3]> =
        raw.iter().map(|f| [index[&f[0]], index[&f[1]], index[&f[2]]]).collect();
    Ok(ParsedComplex { complex: Complex::new(labels.len(), &faces)?, labels })
}
