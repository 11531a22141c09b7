//! Canonical labelings of orientable triangulated surfaces.
//!
//! A flag (vertex `v`, neighbour `w`, rotation sense) determines a labeling by
//! breadth-first traversal of the rotation system, so the lexicographically
//! least relabeled face list over all flags is a complete isomorphism
//! invariant. Only flags at vertices of maximum degree are tried.

use serde::{Deserialize, Serialize};

use crate::complex::Complex;
use crate::error::{Error, Result};

/// Relabeling-invariant representative of a surface: sorted triples of
/// 0-based labels, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub n: usize,
    pub faces: Vec<[usize; 3]>,
}

/// Canonical form together with the labeling that produced it and the number
/// of flags reaching it (the order of the automorphism group).
#[derive(Debug, Clone)]
pub struct Canonization {
    pub form: CanonicalForm,
    /// `labeling[old] = new`.
    pub labeling: Vec<usize>,
    pub automorphism_order: usize,
}

struct RotationIndex {
    pos: Vec<usize>,
    n: usize,
}

impl RotationIndex {
    fn new(c: &Complex) -> Self {
        let n = c.n();
        let mut pos = vec![usize::MAX; n * n];
        for v in 0..n {
            for (i, &w) in c.rotation(v).iter().enumerate() {
                pos[v * n + w] = i;
            }
        }
        Self { pos, n }
    }

    #[inline]
    fn get(&self, v: usize, w: usize) -> usize {
        self.pos[v * self.n + w]
    }
}

fn flag_labeling(c: &Complex, idx: &RotationIndex, v: usize, w: usize, forward: bool) -> Vec<usize> {
    let n = c.n();
    let mut label = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    label[v] = 0;
    label[w] = 1;
    parent[v] = w;
    parent[w] = v;
    order.push(v);
    order.push(w);
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        let rot = c.rotation(u);
        let d = rot.len();
        let p0 = idx.get(u, parent[u]);
        for t in 1..d {
            let x = if forward { rot[(p0 + t) % d] } else { rot[(p0 + d - t) % d] };
            if label[x] == usize::MAX {
                label[x] = order.len();
                parent[x] = u;
                order.push(x);
            }
        }
        i += 1;
    }
    label
}

fn relabeled_faces(c: &Complex, label: &[usize]) -> Vec<[usize; 3]> {
    let mut faces: Vec<[usize; 3]> = c
        .faces()
        .iter()
        .map(|f| {
            let mut g = [label[f[0]], label[f[1]], label[f[2]]];
            g.sort_unstable();
            g
        })
        .collect();
    faces.sort_unstable();
    faces
}

/// All flags at maximum-degree vertices, in a fixed order.
fn start_flags(c: &Complex) -> impl Iterator<Item = (usize, usize, bool)> + '_ {
    let maxdeg = (0..c.n()).map(|v| c.degree(v)).max().unwrap_or(0);
    (0..c.n())
        .filter(move |&v| c.degree(v) == maxdeg)
        .flat_map(move |v| {
            c.neighbors(v)
                .iter()
                .flat_map(move |&w| [(v, w, true), (v, w, false)])
        })
}

/// Computes the canonical form of an orientable surface.
pub fn canonize(c: &Complex) -> Result<Canonization> {
    if !c.report().orientable {
        return Err(Error::NotATorus { euler: c.report().euler, orientable: false });
    }
    let idx = RotationIndex::new(c);
    let mut best: Option<(Vec<[usize; 3]>, Vec<usize>)> = None;
    let mut count = 0;
    for (v, w, fwd) in start_flags(c) {
        let label = flag_labeling(c, &idx, v, w, fwd);
        let faces = relabeled_faces(c, &label);
        match &best {
            Some((b, _)) if faces > *b => {}
            Some((b, _)) if faces == *b => count += 1,
            _ => {
                best = Some((faces, label));
                count = 1;
            }
        }
    }
    let (faces, labeling) = best.expect("surface has at least one flag");
    Ok(Canonization {
        form: CanonicalForm { n: c.n(), faces },
        labeling,
        automorphism_order: count,
    })
}

pub fn canonical_form(c: &Complex) -> Result<CanonicalForm> {
    canonize(c).map(|k| k.form)
}

/// True when the face list of `c` (as stored, sorted) is already its own
/// canonical form. Stops at the first flag that produces a smaller list.
pub fn is_canonical(c: &Complex) -> bool {
    if !c.report().orientable {
        return false;
    }
    let idx = RotationIndex::new(c);
    let own = c.faces();
    for (v, w, fwd) in start_flags(c) {
        let label = flag_labeling(c, &idx, v, w, fwd);
        if relabeled_faces(c, &label).as_slice() < own {
            return false;
        }
    }
    // The identity must itself be reachable from some flag.
    start_flags(c).any(|(v, w, fwd)| {
        let label = flag_labeling(c, &idx, v, w, fwd);
        label.iter().enumerate().all(|(i, &l)| i == l)
    })
}

/// Returns a bijection `phi` with `phi(face of a)` a face of `b`, if one exists.
pub fn is_isomorphic(a: &Complex, b: &Complex) -> Result<Option<Vec<usize>>> {
    if a.n() != b.n() || a.faces().len() != b.faces().len() {
        return Ok(None);
    }
    let ka = canonize(a)?;
    let kb = canonize(b)?;
    if ka.form != kb.form {
        return Ok(None);
    }
    let mut inv_b = vec![0; b.n()];
    for (old, &new) in kb.labeling.iter().enumerate() {
        inv_b[new] = old;
    }
    Ok(Some(ka.labeling.iter().map(|&l| inv_b[l]).collect()))
}

/// Checks that `perm` maps the face set of `c` onto itself.
pub fn is_automorphism(c: &Complex, perm: &[usize]) -> bool {
    if perm.len() != c.n() {
        return false;
    }
    let mut seen = vec![false; c.n()];
    for &p in perm {
        if p >= c.n() || std::mem::replace(&mut seen[p], true) {
            return false;
        }
    }
    relabeled_faces(c, perm) == c.faces()
}
