//! Knot determinant from the Goeritz matrix of a checkerboard-coloured diagram.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::diagram::{project_diagram, project_generic, KnotDiagram};
use crate::error::Result;
use crate::geometry::rational::{Point2, Point3, Q};
use crate::geometry::StickKnot;

fn upper(v: &Point2) -> bool {
    v[1].is_positive() || (v[1].is_zero() && v[0].is_positive())
}

/// Counter-clockwise order of nonzero directions, starting along `+x`.
fn angle_cmp(a: &Point2, b: &Point2) -> Ordering {
    match (upper(a), upper(b)) {
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        _ => {
            let c = &a[0] * &b[1] - &a[1] * &b[0];
            Q::zero().cmp(&c)
        }
    }
}

/// The diagram as a plane graph: knot vertices and crossings as nodes, the
/// pieces of sticks between them as edges.
struct PlaneGraph {
    /// Half-edge `h` runs `tail[h] → tail[h ^ 1]`.
    tail: Vec<usize>,
    stick: Vec<usize>,
    /// Outgoing half-edges of each node, counter-clockwise.
    out: Vec<Vec<usize>>,
    face: Vec<usize>,
    faces: usize,
}

impl PlaneGraph {
    fn new(d: &KnotDiagram) -> Self {
        let k = d.points.len();
        let mut pos: Vec<Point2> = d.points.clone();
        pos.extend(d.crossings.iter().map(|c| c.point.clone()));
        let mut on_stick: Vec<Vec<(Q, usize)>> = (0..k).map(|i| vec![(Q::zero(), i), (Q::one(), (i + 1) % k)]).collect();
        for (ci, c) in d.crossings.iter().enumerate() {
            on_stick[c.over].push((c.over_param.clone(), k + ci));
            on_stick[c.under].push((c.under_param.clone(), k + ci));
        }
        let mut tail = Vec::new();
        let mut stick = Vec::new();
        for (s, pts) in on_stick.iter_mut().enumerate() {
            pts.sort();
            for w in pts.windows(2) {
                tail.push(w[0].1);
                tail.push(w[1].1);
                stick.push(s);
                stick.push(s);
            }
        }
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); pos.len()];
        for h in 0..tail.len() {
            out[tail[h]].push(h);
        }
        let dir = |h: usize| -> Point2 {
            let (a, b) = (&pos[tail[h]], &pos[tail[h ^ 1]]);
            [&b[0] - &a[0], &b[1] - &a[1]]
        };
        for list in &mut out {
            list.sort_by(|&x, &y| angle_cmp(&dir(x), &dir(y)));
        }
        let mut g = Self { tail, stick, out, face: Vec::new(), faces: 0 };
        g.trace_faces();
        g
    }

    /// Successor of `h` along the face on its left.
    fn next(&self, h: usize) -> usize {
        let twin = h ^ 1;
        let list = &self.out[self.tail[twin]];
        let j = list.iter().position(|&x| x == twin).unwrap();
        list[(j + list.len() - 1) % list.len()]
    }

    fn trace_faces(&mut self) {
        let mut face = vec![usize::MAX; self.tail.len()];
        let mut f = 0;
        for h0 in 0..self.tail.len() {
            if face[h0] != usize::MAX {
                continue;
            }
            let mut h = h0;
            while face[h] == usize::MAX {
                face[h] = f;
                h = self.next(h);
            }
            f += 1;
        }
        self.face = face;
        self.faces = f;
    }

    /// Two-colouring of the faces; adjacent faces get different colours.
    fn checkerboard(&self) -> Vec<u8> {
        let mut color = vec![u8::MAX; self.faces];
        color[0] = 0;
        let mut stack = vec![0];
        while let Some(f) = stack.pop() {
            for h in 0..self.tail.len() {
                if self.face[h] != f {
                    continue;
                }
                let g = self.face[h ^ 1];
                if color[g] == u8::MAX {
                    color[g] = 1 - color[f];
                    stack.push(g);
                }
                debug_assert_ne!(color[g], color[f], "knot diagrams are two-colourable");
            }
        }
        color
    }
}

/// Absolute determinant by fraction-free elimination.
fn bareiss_abs(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut prev = BigInt::one();
    for i in 0..n {
        if m[i][i].is_zero() {
            match (i + 1..n).find(|&r| !m[r][i].is_zero()) {
                Some(r) => {
                    m.swap(i, r);
                }
                None => return BigInt::zero(),
            }
        }
        for r in i + 1..n {
            for c in i + 1..n {
                let v = (&m[r][c] * &m[i][i] - &m[r][i] * &m[i][c]) / &prev;
                m[r][c] = v;
            }
        }
        prev = m[i][i].clone();
    }
    m[n - 1][n - 1].abs()
}

/// The Goeritz matrix on the regions of colour 0, with the last region's row
/// and column removed.
pub fn goeritz_minor(d: &KnotDiagram) -> Vec<Vec<i64>> {
    let g = PlaneGraph::new(d);
    let color = g.checkerboard();
    let white: Vec<usize> = (0..g.faces).filter(|&f| color[f] == 0).collect();
    let index = |f: usize| white.iter().position(|&w| w == f).unwrap();
    let m = white.len();
    let mut gm = vec![vec![0i64; m]; m];
    let k = d.points.len();
    for (ci, c) in d.crossings.iter().enumerate() {
        let out = &g.out[k + ci];
        debug_assert_eq!(out.len(), 4);
        // corner j lies counter-clockwise from out[j] to out[j + 1]
        let j = (0..4).find(|&j| color[g.face[out[j]]] == 0).unwrap();
        let eta = if g.stick[out[j]] == c.over { 1 } else { -1 };
        let (a, b) = (index(g.face[out[j]]), index(g.face[out[(j + 2) % 4]]));
        if a != b {
            gm[a][b] -= eta;
            gm[b][a] -= eta;
            gm[a][a] += eta;
            gm[b][b] += eta;
        }
    }
    gm.pop();
    for row in &mut gm {
        row.pop();
    }
    gm
}

/// `|det|` of the Goeritz minor of a given diagram.
pub fn diagram_determinant(d: &KnotDiagram) -> u64 {
    let m = goeritz_minor(d);
    let big = m.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
    bareiss_abs(big).to_u64().expect("determinant fits in 64 bits")
}

/// Knot determinant `|Δ(−1)|`, from the first regular direction of the fixed
/// sequence.
pub fn knot_determinant(knot: &StickKnot) -> Result<u64> {
    Ok(diagram_determinant(&project_generic(knot)?))
}

pub fn knot_determinant_along(knot: &StickKnot, direction: &Point3) -> Result<u64> {
    Ok(diagram_determinant(&project_diagram(knot, direction)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rational::point;

    #[test]
    fn bareiss_matches_hand_values() {
        let m = |rows: &[&[i64]]| rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        assert_eq!(bareiss_abs(m(&[&[2, -1], &[-1, 2]])), BigInt::from(3));
        assert_eq!(bareiss_abs(m(&[&[0, 1], &[1, 0]])), BigInt::from(1));
        assert_eq!(bareiss_abs(m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]])), BigInt::from(3));
        assert_eq!(bareiss_abs(m(&[&[1, 2], &[2, 4]])), BigInt::zero());
    }

    #[test]
    fn unknots_have_determinant_one() {
        let t = StickKnot::parse("0 0 0\n1 0 0\n0 1 0\n").unwrap();
        assert_eq!(knot_determinant(&t).unwrap(), 1);
        let twisted = StickKnot::parse("0 0 0\n2 2 1\n2 0 0\n0 2 0\n").unwrap();
        assert_eq!(knot_determinant_along(&twisted, &point(0, 0, 1)).unwrap(), 1);
    }
}
