//! Linking numbers of disjoint closed polygons.

use num_traits::Zero;

use super::diagram::{generic_direction, project_curves, MAX_DIRECTION_RETRIES};
use crate::error::{Error, Result};
use crate::geometry::predicates::segment_segment_dist2;
use crate::geometry::rational::Point3;

fn sticks(c: &[Point3]) -> impl Iterator<Item = (&Point3, &Point3)> {
    (0..c.len()).map(move |i| (&c[i], &c[(i + 1) % c.len()]))
}

/// Half the signed count of crossings between `a` and `b` in a regular
/// projection.
pub fn linking_number(a: &[Point3], b: &[Point3]) -> Result<i64> {
    if a.len() < 3 || b.len() < 3 {
        return Err(Error::DegenerateKnot("a closed polygon needs three vertices".into()));
    }
    for (i, (p, q)) in sticks(a).enumerate() {
        for (j, (r, s)) in sticks(b).enumerate() {
            if segment_segment_dist2(p, q, r, s).is_zero() {
                return Err(Error::IntersectingCurves(format!("stick {} of the first curve meets stick {} of the second", i + 1, j + 1)));
            }
        }
    }
    let mut last = None;
    for j in 0..MAX_DIRECTION_RETRIES {
        match project_curves(&[a, b], &generic_direction(j)) {
            Ok(proj) => {
                let twice: i64 = proj
                    .crossings
                    .iter()
                    .filter(|c| proj.curve_of(c.over) != proj.curve_of(c.under))
                    .map(|c| c.sign as i64)
                    .sum();
                debug_assert_eq!(twice % 2, 0);
                return Ok(twice / 2);
            }
            Err(e @ Error::NonGenericDirection(_)) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rational::point;

    fn square(c: [i64; 3], axes: (usize, usize), r: i64) -> Vec<Point3> {
        [(-r, -r), (r, -r), (r, r), (-r, r)]
            .iter()
            .map(|&(x, y)| {
                let mut p = c;
                p[axes.0] += x;
                p[axes.1] += y;
                point(p[0], p[1], p[2])
            })
            .collect()
    }

    #[test]
    fn far_apart_squares_are_unlinked() {
        let a = square([0, 0, 0], (0, 1), 1);
        let b = square([10, 0, 0], (0, 1), 1);
        assert_eq!(linking_number(&a, &b).unwrap(), 0);
    }

    #[test]
    fn hopf_squares() {
        // one square in the xy-plane, one in the xz-plane threading it
        let a = square([0, 0, 0], (0, 1), 2);
        let b = square([2, 0, 0], (0, 2), 2);
        let l = linking_number(&a, &b).unwrap();
        assert_eq!(l.abs(), 1);
        assert_eq!(linking_number(&b, &a).unwrap(), l);
        let reversed: Vec<Point3> = b.iter().rev().cloned().collect();
        assert_eq!(linking_number(&a, &reversed).unwrap(), -l);
    }

    #[test]
    fn touching_curves_are_rejected() {
        let a = square([0, 0, 0], (0, 1), 2);
        let c = square([4, 0, 0], (0, 2), 2);
        assert!(matches!(linking_number(&a, &c), Err(Error::IntersectingCurves(_))));
    }
}
