//! Convex hulls of small point sets in general position.

use super::predicates::orient3d;
use super::rational::Point3;

/// Facets `(a, b, c)` of the hull, oriented so that every other point lies
/// strictly on the negative side. Returns `None` when four hull-relevant
/// points are coplanar.
pub fn hull_facets(points: &[Point3]) -> Option<Vec<[usize; 3]>> {
    let n = points.len();
    let mut facets = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let (mut pos, mut neg, mut zero) = (false, false, false);
                for d in (0..n).filter(|&d| d != a && d != b && d != c) {
                    match orient3d(&points[a], &points[b], &points[c], &points[d]) {
                        1 => pos = true,
                        -1 => neg = true,
                        _ => zero = true,
                    }
                    if pos && neg {
                        break;
                    }
                }
                if pos && neg {
                    continue;
                }
                if zero {
                    return None;
                }
                facets.push(if pos { [a, c, b] } else { [a, b, c] });
            }
        }
    }
    Some(facets)
}

/// `(a, b, c)` is a facet with all other points strictly on one side.
pub fn is_strict_hull_facet(points: &[Point3], [a, b, c]: [usize; 3]) -> Option<i8> {
    let mut side = 0;
    for d in (0..points.len()).filter(|&d| d != a && d != b && d != c) {
        let o = orient3d(&points[a], &points[b], &points[c], &points[d]);
        if o == 0 || (side != 0 && o != side) {
            return None;
        }
        side = o;
    }
    Some(side)
}
