//! Regular projections of closed polygons and their crossings.

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::rational::{cross, dot, format_exact, q, sign, sub, Point2, Point3, Q};
use crate::geometry::StickKnot;

/// Directions tried, in order, when the caller does not choose one.
pub const MAX_DIRECTION_RETRIES: usize = 32;

/// The `j`-th direction of the fixed retry sequence.
pub fn generic_direction(j: usize) -> Point3 {
    let j = j as i64;
    [q(1 + j), q(3 + j * j), q(7 + 2 * j)]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Crossing {
    /// Global stick indices: sticks of later curves follow those of earlier ones.
    pub over: usize,
    pub under: usize,
    /// Positions along the over and under sticks, in `(0, 1)`.
    #[serde(skip)]
    pub over_param: Q,
    #[serde(skip)]
    pub under_param: Q,
    #[serde(skip)]
    pub point: Point2,
    pub sign: i8,
}

/// Exact projection of one or more disjoint closed polygons.
#[derive(Debug, Clone)]
pub(crate) struct Projection {
    pub points: Vec<Vec<Point2>>,
    pub offsets: Vec<usize>,
    pub crossings: Vec<Crossing>,
}

impl Projection {
    pub fn curve_of(&self, stick: usize) -> usize {
        self.offsets.iter().rposition(|&o| o <= stick).unwrap()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct KnotDiagram {
    pub crossings: Vec<Crossing>,
    /// `+i` when the curve passes over crossing `i`, `−i` when under;
    /// crossings are numbered from 1 in order of first passage.
    pub gauss_code: Vec<i64>,
    #[serde(serialize_with = "serialize_point")]
    pub projection_direction: Point3,
    /// Projected knot vertices.
    #[serde(skip)]
    pub points: Vec<Point2>,
}

fn serialize_point<S: serde::Serializer>(p: &Point3, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(p.iter().map(format_exact))
}

impl KnotDiagram {
    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }
}

fn cross2(a: &Point2, b: &Point2) -> Q {
    &a[0] * &b[1] - &a[1] * &b[0]
}

fn sub2(a: &Point2, b: &Point2) -> Point2 {
    [&a[0] - &b[0], &a[1] - &b[1]]
}

/// Orthogonal `u`, `v` with `u × v` a positive multiple of `d`.
fn screen_basis(d: &Point3) -> (Point3, Point3) {
    let axis = (0..3).min_by(|&i, &j| d[i].abs().cmp(&d[j].abs())).unwrap();
    let mut e = [Q::zero(), Q::zero(), Q::zero()];
    e[axis] = q(1);
    let u = cross(d, &e);
    let v = cross(d, &u);
    (u, v)
}

fn non_generic(msg: String) -> Error {
    Error::NonGenericDirection(msg)
}

/// Projects `curves` along `direction`, viewed from its tip, so that the
/// strand with larger height `p · direction` passes over.
pub(crate) fn project_curves(curves: &[&[Point3]], direction: &Point3) -> Result<Projection> {
    if direction.iter().all(Zero::is_zero) {
        return Err(non_generic("zero direction".into()));
    }
    let (u, v) = screen_basis(direction);
    let points: Vec<Vec<Point2>> =
        curves.iter().map(|c| c.iter().map(|p| [dot(p, &u), dot(p, &v)]).collect()).collect();
    let mut offsets = Vec::with_capacity(curves.len());
    let mut sticks: Vec<(usize, usize)> = Vec::new();
    for (ci, c) in curves.iter().enumerate() {
        offsets.push(sticks.len());
        sticks.extend((0..c.len()).map(|i| (ci, i)));
    }
    let end = |(ci, i): (usize, usize)| -> (&Point2, &Point2) {
        let c = &points[ci];
        (&c[i], &c[(i + 1) % c.len()])
    };
    let end3 = |(ci, i): (usize, usize)| -> (&Point3, &Point3) {
        let c = curves[ci];
        (&c[i], &c[(i + 1) % c.len()])
    };
    for (g, &s) in sticks.iter().enumerate() {
        let (a, b) = end(s);
        if a == b {
            return Err(non_generic(format!("parallel to stick {}", g + 1)));
        }
    }

    let pairs: Vec<(usize, usize)> =
        (0..sticks.len()).flat_map(|i| (i + 1..sticks.len()).map(move |j| (i, j))).collect();
    let found: Vec<Option<Crossing>> = pairs
        .par_iter()
        .map(|&(gi, gj)| -> Result<Option<Crossing>> {
            let (si, sj) = (sticks[gi], sticks[gj]);
            let (p0, p1) = end(si);
            let (q0, q1) = end(sj);
            let d1 = sub2(p1, p0);
            let d2 = sub2(q1, q0);
            let len = curves[si.0].len();
            let adjacent = si.0 == sj.0 && (sj.1 == si.1 + 1 || (si.1 == 0 && sj.1 == len - 1));
            if adjacent {
                return if cross2(&d1, &d2).is_zero() {
                    Err(non_generic(format!("sticks {} and {} project collinearly", gi + 1, gj + 1)))
                } else {
                    Ok(None)
                };
            }
            let den = cross2(&d1, &d2);
            let w = sub2(q0, p0);
            if den.is_zero() {
                if !cross2(&d1, &w).is_zero() {
                    return Ok(None);
                }
                // collinear: overlap of parameter ranges along d1
                let dd = &d1[0] * &d1[0] + &d1[1] * &d1[1];
                let t0 = (&w[0] * &d1[0] + &w[1] * &d1[1]) / &dd;
                let w1 = sub2(q1, p0);
                let t1 = (&w1[0] * &d1[0] + &w1[1] * &d1[1]) / &dd;
                let (lo, hi) = if t0 < t1 { (t0, t1) } else { (t1, t0) };
                return if hi < Q::zero() || lo > q(1) {
                    Ok(None)
                } else {
                    Err(non_generic(format!("sticks {} and {} overlap", gi + 1, gj + 1)))
                };
            }
            let t = cross2(&w, &d2) / &den;
            let s = cross2(&w, &d1) / &den;
            let (zero, one) = (Q::zero(), q(1));
            if t < zero || t > one || s < zero || s > one {
                return Ok(None);
            }
            if t == zero || t == one || s == zero || s == one {
                return Err(non_generic(format!("a vertex projects onto stick {} or {}", gi + 1, gj + 1)));
            }
            let (a0, a1) = end3(si);
            let (b0, b1) = end3(sj);
            let ha = dot(a0, direction) + &t * dot(&sub(a1, a0), direction);
            let hb = dot(b0, direction) + &s * dot(&sub(b1, b0), direction);
            let point = [&p0[0] + &t * &d1[0], &p0[1] + &t * &d1[1]];
            let (over, under, op, up, od, ud) = match ha.cmp(&hb) {
                std::cmp::Ordering::Greater => (gi, gj, t, s, &d1, &d2),
                std::cmp::Ordering::Less => (gj, gi, s, t, &d2, &d1),
                std::cmp::Ordering::Equal => {
                    return Err(Error::IntersectingCurves(format!("sticks {} and {} meet", gi + 1, gj + 1)))
                }
            };
            let sgn = sign(&cross2(od, ud));
            Ok(Some(Crossing { over, under, over_param: op, under_param: up, point, sign: sgn }))
        })
        .collect::<Result<_>>()?;
    let crossings: Vec<Crossing> = found.into_iter().flatten().collect();
    for i in 0..crossings.len() {
        for j in i + 1..crossings.len() {
            if crossings[i].point == crossings[j].point {
                return Err(non_generic("triple point".into()));
            }
        }
    }
    Ok(Projection { points, offsets, crossings })
}

/// Diagram of `knot` seen along `direction`, with every regularity condition
/// checked exactly.
pub fn project_diagram(knot: &StickKnot, direction: &Point3) -> Result<KnotDiagram> {
    let proj = project_curves(&[knot.vertices()], direction)?;
    let mut passages: Vec<(usize, Q, usize, bool)> = Vec::new();
    for (ci, c) in proj.crossings.iter().enumerate() {
        passages.push((c.over, c.over_param.clone(), ci, true));
        passages.push((c.under, c.under_param.clone(), ci, false));
    }
    passages.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    let mut number = vec![0i64; proj.crossings.len()];
    let mut order = Vec::new();
    let mut gauss_code = Vec::with_capacity(passages.len());
    for (_, _, ci, over) in &passages {
        if number[*ci] == 0 {
            order.push(*ci);
            number[*ci] = order.len() as i64;
        }
        gauss_code.push(if *over { number[*ci] } else { -number[*ci] });
    }
    let crossings = order.iter().map(|&i| proj.crossings[i].clone()).collect();
    Ok(KnotDiagram {
        crossings,
        gauss_code,
        projection_direction: direction.clone(),
        points: proj.points.into_iter().next().unwrap(),
    })
}

/// First regular diagram along the fixed direction sequence.
pub fn project_generic(knot: &StickKnot) -> Result<KnotDiagram> {
    let mut last = None;
    for j in 0..MAX_DIRECTION_RETRIES {
        match project_diagram(knot, &generic_direction(j)) {
            Err(e @ Error::NonGenericDirection(_)) => last = Some(e),
            other => return other,
        }
    }
    Err(last.unwrap())
}
