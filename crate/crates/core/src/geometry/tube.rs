//! The ε-tube around a stick knot and the enclosing complement torus.

use num_traits::{One, Zero};

use super::hull::{hull_facets, is_strict_hull_facet};
use super::mesh::{verify_embedding, Construction, Mesh, Provenance};
use super::predicates::{orient3d, point_segment_dist2, segment_segment_dist2};
use super::rational::{add, centroid, cross, dot, frac, norm2, q, scale, sqrt_floor, sub, Point3, Q};
use super::stick::StickKnot;
use crate::complex::SimplicialTorus;
use crate::error::{Error, Result};

/// Binary digits kept when rounding square roots.
const SQRT_BITS: u32 = 30;
const MAX_HALVINGS: usize = 40;

/// `(1/16)·min(d²)` over pairs of disjoint sticks and over vertices against
/// sticks not incident to them; the square of the ε bound.
pub fn epsilon_bound_squared(knot: &StickKnot) -> Result<Q> {
    let k = knot.k();
    let mut best: Option<Q> = None;
    let mut consider = |d: Q, what: String| -> Result<()> {
        if d.is_zero() {
            return Err(Error::DegenerateKnot(what));
        }
        if best.as_ref().is_none_or(|b| &d < b) {
            best = Some(d);
        }
        Ok(())
    };
    for (i, j) in knot.non_adjacent_pairs() {
        let (a, b) = knot.edge(i);
        let (c, d) = knot.edge(j);
        consider(segment_segment_dist2(a, b, c, d), format!("sticks {} and {} touch", i + 1, j + 1))?;
    }
    for v in 0..k {
        for e in (0..k).filter(|&e| e != v && (e + 1) % k != v) {
            let (a, b) = knot.edge(e);
            consider(point_segment_dist2(&knot.vertices()[v], a, b), format!("vertex {} lies on stick {}", v + 1, e + 1))?;
        }
    }
    Ok(best.expect("a polygon has a vertex off some stick") / q(16))
}

/// A rational `ε ≤ (1/4)·min distance`, exactly doubled when the knot is
/// scaled by 2.
pub fn epsilon_bound(knot: &StickKnot) -> Result<Q> {
    Ok(sqrt_floor(&epsilon_bound_squared(knot)?, SQRT_BITS))
}

/// [`epsilon_bound`], halved until the tube is embedded.
pub fn choose_epsilon(knot: &StickKnot) -> Result<Q> {
    Ok(auto_tube(knot)?.0)
}

/// The embedded tube for [`choose_epsilon`], together with its radius.
pub fn auto_tube(knot: &StickKnot) -> Result<(Q, Mesh)> {
    let mut eps = epsilon_bound(knot)?;
    for _ in 0..MAX_HALVINGS {
        match tube_construction(knot, &eps) {
            Ok(mesh) => return Ok((eps, mesh)),
            Err(Error::EpsilonTooLarge(_)) => eps /= q(2),
            Err(e) => return Err(e),
        }
    }
    Err(Error::EpsilonTooLarge(format!("no embedded tube after {MAX_HALVINGS} halvings")))
}

/// `v / |v|` to within a relative error of about `2^-SQRT_BITS`.
fn unit(v: &Point3) -> Point3 {
    let len = sqrt_floor(&norm2(v), SQRT_BITS);
    scale(v, &(Q::one() / len))
}

fn perpendicular(n: &Point3) -> Point3 {
    use num_traits::Signed;
    let axis = (0..3).min_by(|&i, &j| n[i].abs().cmp(&n[j].abs())).unwrap();
    let mut e = [Q::zero(), Q::zero(), Q::zero()];
    e[axis] = Q::one();
    cross(n, &e)
}

/// A vector orthogonal to `n` that avoids the coordinate planes, so that
/// rings of planar knots are not symmetric about the knot plane.
fn skew_perpendicular(n: &Point3) -> Point3 {
    let p = perpendicular(n);
    let w = cross(n, &p);
    add(&scale(&p, &(q(3) * norm2(n))), &scale(&w, &q(2)))
}

/// Unit directions at 0°, 120°, 240° in the plane spanned by the orthogonal
/// vectors `e1`, `e2`, summing to zero exactly.
fn tripod(e1: &Point3, e2: &Point3) -> [Point3; 3] {
    let u = unit(e1);
    let w = scale(&unit(e2), &sqrt_floor(&frac(3, 4), SQRT_BITS));
    let half = scale(&u, &frac(-1, 2));
    let b = add(&half, &w);
    let c = sub(&half, &w);
    [u, b, c]
}

/// Normal of the plane bisecting the angle of the knot at vertex `i`.
pub fn bisector_normal(knot: &StickKnot, i: usize) -> Point3 {
    let k = knot.k();
    let v = knot.vertices();
    let a = sub(&v[i], &v[(i + k - 1) % k]);
    let b = sub(&v[(i + 1) % k], &v[i]);
    add(&unit(&a), &unit(&b))
}

/// Three points around every knot vertex, in the (rounded) bisector plane at
/// distance `ε` from the vertex up to rounding, with centroid exactly the
/// vertex. Ring references are carried from vertex to vertex by projection.
pub fn ring_points(knot: &StickKnot, eps: &Q) -> Vec<[Point3; 3]> {
    let k = knot.k();
    let mut rings = Vec::with_capacity(k);
    let mut reference: Option<Point3> = None;
    for i in 0..k {
        let n = bisector_normal(knot, i);
        let r = match reference {
            Some(prev) => {
                let t = dot(&prev, &n) / norm2(&n);
                let r = sub(&prev, &scale(&n, &t));
                if norm2(&r).is_zero() {
                    skew_perpendicular(&n)
                } else {
                    r
                }
            }
            None => skew_perpendicular(&n),
        };
        let e2 = cross(&n, &r);
        let dirs = tripod(&r, &e2);
        let v = &knot.vertices()[i];
        rings.push(dirs.map(|d| add(v, &scale(&d, eps))));
        reference = Some(r);
    }
    rings
}

/// Side triangles of the hull of two rings, in global vertex ids.
fn prism_sides(points: &[Point3], ring_a: [usize; 3], ring_b: [usize; 3]) -> Option<Vec<[usize; 3]>> {
    let ids: Vec<usize> = ring_a.iter().chain(&ring_b).copied().collect();
    let local: Vec<Point3> = ids.iter().map(|&i| points[i].clone()).collect();
    let facets = hull_facets(&local)?;
    if facets.len() != 8 {
        return None;
    }
    let is_cap = |f: &[usize; 3]| f.iter().all(|&x| x < 3) || f.iter().all(|&x| x >= 3);
    if facets.iter().filter(|f| is_cap(f)).count() != 2 {
        return None;
    }
    Some(facets.iter().filter(|f| !is_cap(f)).map(|f| f.map(|x| ids[x])).collect())
}

/// The tube: prisms over consecutive rings, each the boundary of the convex
/// hull of its six points minus the two ring triangles. Fails with
/// `EpsilonTooLarge` unless the result is an embedded torus.
pub fn tube_construction(knot: &StickKnot, eps: &Q) -> Result<Mesh> {
    let too_large = |why: String| Error::EpsilonTooLarge(why);
    let k = knot.k();
    let coords: Vec<Point3> = ring_points(knot, eps).into_iter().flatten().collect();
    let rings: Vec<[usize; 3]> = (0..k).map(|i| [3 * i, 3 * i + 1, 3 * i + 2]).collect();
    let mut faces = Vec::with_capacity(6 * k);
    for i in 0..k {
        let sides = prism_sides(&coords, rings[i], rings[(i + 1) % k])
            .ok_or_else(|| too_large(format!("prism {} is not a triangular prism", i + 1)))?;
        faces.extend(sides);
    }
    let complex = SimplicialTorus::new(3 * k, &faces).map_err(|e| too_large(e.to_string()))?;
    let provenance = Provenance {
        construction: Construction::Tube,
        epsilon: Some(eps.clone()),
        source_knot: Some(knot.clone()),
        rings,
        attachment: None,
    };
    let mesh = Mesh::new(coords, complex, provenance)?;
    let report = verify_embedding(&mesh);
    match report.violation {
        None => Ok(mesh),
        Some(v) => Err(too_large(format!(
            "faces {:?} and {:?}: {}",
            v.faces[0].map(|x| x + 1),
            v.faces[1].map(|x| x + 1),
            v.reason
        ))),
    }
}

/// A tube face that is a facet of the convex hull of all tube vertices,
/// rotated so that its first two vertices lie on different rings.
fn attachment_face(tube: &Mesh) -> Option<([usize; 3], i8)> {
    let ring_of = |v: usize| v / 3;
    tube.complex().faces().iter().find_map(|&f| {
        let side = is_strict_hull_facet(tube.coords(), f)?;
        let rot = (0..3)
            .map(|r| [f[r], f[(r + 1) % 3], f[(r + 2) % 3]])
            .find(|g| ring_of(g[0]) != ring_of(g[1]))?;
        Some((rot, side))
    })
}

/// Sullivan's complement torus: the tube with a tent over one hull triangle
/// `v1 v2 x`, joined along `v1 v2 y` to an octahedron `v1 v2 y z1 z2 z3` that
/// encloses it. `3k + 4` vertices.
pub fn complement_construction(knot: &StickKnot) -> Result<Mesh> {
    let (eps, tube) = auto_tube(knot)?;
    let (t, side) = attachment_face(&tube)
        .ok_or_else(|| Error::EnclosureFailure("no tube face lies on the convex hull".into()))?;
    let [v1, v2, x] = t;
    let p = tube.coords();
    let raw_normal = cross(&sub(&p[v2], &p[v1]), &sub(&p[x], &p[v1]));
    // points outward, away from the other tube vertices
    let normal = unit(&if side > 0 { scale(&raw_normal, &q(-1)) } else { raw_normal });
    let c_t = centroid(&[&p[v1], &p[v2], &p[x]]);
    let height = sqrt_floor(&point_segment_dist2(&p[x], &p[v1], &p[v2]), SQRT_BITS);
    let extent: Q = (0..3)
        .map(|ax| {
            let lo = p.iter().map(|c| &c[ax]).min().unwrap();
            let hi = p.iter().map(|c| &c[ax]).max().unwrap();
            hi - lo
        })
        .fold(Q::zero(), |a, b| a + b);
    let e1 = perpendicular(&normal);
    let e2 = cross(&normal, &e1);
    let dirs = tripod(&e1, &e2);
    let n = p.len();
    let (y, z0) = (n, n + 1);

    for attempt in 0..24 {
        let depth = &extent * q(4);
        let radius = &depth * Q::from_integer((1u64 << attempt).into());
        let lift = &height * &depth / (&radius * q(8));
        let mut coords = p.to_vec();
        coords.push(add(&p[x], &scale(&normal, &lift)));
        let base = sub(&c_t, &scale(&normal, &depth));
        for d in &dirs {
            coords.push(add(&base, &scale(d, &radius)));
        }
        let octa_ids = [v1, v2, y, z0, z0 + 1, z0 + 2];
        let octa_pts: Vec<Point3> = octa_ids.iter().map(|&i| coords[i].clone()).collect();
        let Some(facets) = hull_facets(&octa_pts) else { continue };
        let facets: Vec<[usize; 3]> = facets.iter().map(|f| f.map(|i| octa_ids[i])).collect();
        let has = |g: [usize; 3]| facets.iter().any(|f| sorted(*f) == sorted(g));
        if facets.len() != 8 || !has([v1, v2, y]) || !has([z0, z0 + 1, z0 + 2]) {
            continue;
        }
        let enclosed = (0..n).filter(|&v| v != v1 && v != v2).all(|v| {
            facets
                .iter()
                .all(|f| orient3d(&coords[f[0]], &coords[f[1]], &coords[f[2]], &coords[v]) < 0)
        });
        if !enclosed {
            continue;
        }
        let mut faces: Vec<[usize; 3]> =
            tube.complex().faces().iter().copied().filter(|&f| f != sorted(t)).collect();
        faces.push([v2, x, y]);
        faces.push([x, v1, y]);
        faces.extend(facets.iter().copied().filter(|&f| sorted(f) != sorted([v1, v2, y])));
        let complex = SimplicialTorus::new(n + 4, &faces)?;
        let provenance = Provenance {
            construction: Construction::Complement,
            epsilon: Some(eps.clone()),
            source_knot: Some(knot.clone()),
            rings: tube.provenance().rings.clone(),
            attachment: Some(t),
        };
        let mesh = Mesh::new(coords, complex, provenance)?;
        if verify_embedding(&mesh).embedded {
            return Ok(mesh);
        }
    }
    Err(Error::EnclosureFailure("octahedron does not enclose the tube".into()))
}

fn sorted(mut f: [usize; 3]) -> [usize; 3] {
    f.sort_unstable();
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rational::point;
    use crate::geometry::stick::StickKnot;

    fn triangle() -> StickKnot {
        StickKnot::new(vec![point(0, 0, 0), point(1, 0, 0), point(0, 1, 0)]).unwrap()
    }

    #[test]
    fn epsilon_of_right_triangle() {
        // shortest vertex-to-opposite-side distance is the height 1/√2
        assert_eq!(epsilon_bound_squared(&triangle()).unwrap(), frac(1, 32));
    }

    #[test]
    fn epsilon_doubles_with_the_knot() {
        let k = triangle();
        let big = k.scaled(&q(2)).unwrap();
        assert_eq!(epsilon_bound(&big).unwrap(), epsilon_bound(&k).unwrap() * q(2));
        let third = k.scaled(&frac(1, 3)).unwrap();
        assert_eq!(epsilon_bound_squared(&third).unwrap(), epsilon_bound_squared(&k).unwrap() / q(9));
    }

    #[test]
    fn rings_are_centred_and_planar() {
        let k = triangle();
        let eps = epsilon_bound(&k).unwrap();
        for (i, ring) in ring_points(&k, &eps).iter().enumerate() {
            let v = &k.vertices()[i];
            assert_eq!(&centroid(&[&ring[0], &ring[1], &ring[2]]), v);
            let n = bisector_normal(&k, i);
            for p in ring {
                assert!(dot(&sub(p, v), &n).is_zero());
                let r2 = norm2(&sub(p, v));
                let e2 = &eps * &eps;
                assert!((&r2 - &e2) * Q::from_integer((1u64 << 20).into()) < e2);
                assert!((&e2 - &r2) * Q::from_integer((1u64 << 20).into()) < e2);
            }
        }
    }

    #[test]
    fn triangle_tube() {
        let k = triangle();
        let eps = choose_epsilon(&k).unwrap();
        let m = tube_construction(&k, &eps).unwrap();
        assert_eq!((m.complex().n(), m.complex().faces().len()), (9, 18));
        assert!(m.complex().is_torus());
    }

    #[test]
    fn triangle_complement() {
        let m = complement_construction(&triangle()).unwrap();
        let r = m.complex().report();
        assert_eq!((r.vertices, r.faces, r.euler, r.orientable), (13, 26, 0, true));
    }
}
