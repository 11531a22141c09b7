//! Exact orientation and intersection predicates on closed simplices.

use num_traits::{One, Signed, Zero};

use super::rational::{cross, dot, norm2, sign, sub, Point2, Point3, Q};

/// Sign of `det(b − a, c − a, d − a)`: positive when `d` lies on the side of
/// plane `abc` that `(b − a) × (c − a)` points to.
pub fn orient3d(a: &Point3, b: &Point3, c: &Point3, d: &Point3) -> i8 {
    let n = cross(&sub(b, a), &sub(c, a));
    sign(&dot(&n, &sub(d, a)))
}

pub fn orient2d(a: &Point2, b: &Point2, c: &Point2) -> i8 {
    let v = (&b[0] - &a[0]) * (&c[1] - &a[1]) - (&b[1] - &a[1]) * (&c[0] - &a[0]);
    sign(&v)
}

/// Drops the coordinate in which `normal` is largest, giving an injective
/// affine chart of any plane with that normal.
pub fn chart(normal: &Point3) -> impl Fn(&Point3) -> Point2 {
    let axis = (0..3).max_by(|&i, &j| normal[i].abs().cmp(&normal[j].abs())).unwrap();
    let (u, v) = match axis {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    move |p: &Point3| [p[u].clone(), p[v].clone()]
}

fn between(a: &Q, b: &Q, x: &Q) -> bool {
    (a <= x && x <= b) || (b <= x && x <= a)
}

/// `c` on the closed segment `ab`, given that the three points are collinear.
fn on_segment2(a: &Point2, b: &Point2, c: &Point2) -> bool {
    between(&a[0], &b[0], &c[0]) && between(&a[1], &b[1], &c[1])
}

pub fn segments_intersect2(p: &Point2, q: &Point2, a: &Point2, b: &Point2) -> bool {
    let d1 = orient2d(a, b, p);
    let d2 = orient2d(a, b, q);
    let d3 = orient2d(p, q, a);
    let d4 = orient2d(p, q, b);
    if d1 * d2 < 0 && d3 * d4 < 0 {
        return true;
    }
    (d1 == 0 && on_segment2(a, b, p))
        || (d2 == 0 && on_segment2(a, b, q))
        || (d3 == 0 && on_segment2(p, q, a))
        || (d4 == 0 && on_segment2(p, q, b))
}

/// Closed triangle contains `p`.
pub fn in_triangle2(p: &Point2, a: &Point2, b: &Point2, c: &Point2) -> bool {
    let s = [orient2d(a, b, p), orient2d(b, c, p), orient2d(c, a, p)];
    !(s.contains(&1) && s.contains(&-1))
}

fn segment_triangle_coplanar(p: &Point3, q: &Point3, t: [&Point3; 3], normal: &Point3) -> bool {
    let f = chart(normal);
    let (p, q) = (f(p), f(q));
    let [a, b, c] = t.map(&f);
    in_triangle2(&p, &a, &b, &c)
        || in_triangle2(&q, &a, &b, &c)
        || segments_intersect2(&p, &q, &a, &b)
        || segments_intersect2(&p, &q, &b, &c)
        || segments_intersect2(&p, &q, &c, &a)
}

/// Closed segment `pq` meets the closed triangle `abc`.
pub fn segment_triangle(p: &Point3, q: &Point3, a: &Point3, b: &Point3, c: &Point3) -> bool {
    let op = orient3d(a, b, c, p);
    let oq = orient3d(a, b, c, q);
    if op * oq > 0 {
        return false;
    }
    if op == 0 && oq == 0 {
        let n = cross(&sub(b, a), &sub(c, a));
        return segment_triangle_coplanar(p, q, [a, b, c], &n);
    }
    let s = [orient3d(p, q, a, b), orient3d(p, q, b, c), orient3d(p, q, c, a)];
    !(s.contains(&1) && s.contains(&-1))
}

/// Closed triangles meet.
pub fn triangles_intersect(t: [&Point3; 3], u: [&Point3; 3]) -> bool {
    let n = cross(&sub(t[1], t[0]), &sub(t[2], t[0]));
    let coplanar = u.iter().all(|p| orient3d(t[0], t[1], t[2], p) == 0);
    if coplanar {
        let f = chart(&n);
        let a = t.map(&f);
        let b = u.map(&f);
        for i in 0..3 {
            for j in 0..3 {
                if segments_intersect2(&a[i], &a[(i + 1) % 3], &b[j], &b[(j + 1) % 3]) {
                    return true;
                }
            }
        }
        return in_triangle2(&a[0], &b[0], &b[1], &b[2]) || in_triangle2(&b[0], &a[0], &a[1], &a[2]);
    }
    (0..3).any(|i| segment_triangle(t[i], t[(i + 1) % 3], u[0], u[1], u[2]))
        || (0..3).any(|i| segment_triangle(u[i], u[(i + 1) % 3], t[0], t[1], t[2]))
}

/// Direction `d` lies in the closed cone at the apex spanned by `p` and `q`
/// (which span a proper angle and are coplanar with `d`).
fn in_cone(p: &Point3, q: &Point3, d: &Point3) -> bool {
    let n = cross(p, q);
    sign(&dot(&cross(p, d), &n)) >= 0 && sign(&dot(&cross(d, q), &n)) >= 0
}

/// Triangles `(v, a, b)` and `(v, c, d)` meet only in `v`.
pub fn meet_only_at_vertex(v: &Point3, a: &Point3, b: &Point3, c: &Point3, d: &Point3) -> bool {
    if segment_triangle(a, b, v, c, d) || segment_triangle(c, d, v, a, b) {
        return false;
    }
    let (pa, pb, pc, pd) = (sub(a, v), sub(b, v), sub(c, v), sub(d, v));
    let n1 = cross(&pa, &pb);
    let n2 = cross(&pc, &pd);
    let line = cross(&n1, &n2);
    if line.iter().all(Zero::is_zero) {
        // coplanar: some boundary ray of one angle inside the other
        return !(in_cone(&pa, &pb, &pc)
            || in_cone(&pa, &pb, &pd)
            || in_cone(&pc, &pd, &pa)
            || in_cone(&pc, &pd, &pb));
    }
    let back = line.clone().map(|x| -x);
    !((in_cone(&pa, &pb, &line) && in_cone(&pc, &pd, &line))
        || (in_cone(&pa, &pb, &back) && in_cone(&pc, &pd, &back)))
}

/// Triangles `(u, v, a)` and `(u, v, b)` meet only along `uv`.
pub fn meet_only_along_edge(u: &Point3, v: &Point3, a: &Point3, b: &Point3) -> bool {
    if orient3d(u, v, a, b) != 0 {
        return true;
    }
    let n = cross(&sub(v, u), &sub(a, u));
    let f = chart(&n);
    let (u, v, a, b) = (f(u), f(v), f(a), f(b));
    orient2d(&u, &v, &a) * orient2d(&u, &v, &b) < 0
}

/// Squared distance from `p` to the closed segment `ab`.
pub fn point_segment_dist2(p: &Point3, a: &Point3, b: &Point3) -> Q {
    let ab = sub(b, a);
    let l = norm2(&ab);
    let mut t = dot(&sub(p, a), &ab) / &l;
    if t.is_negative() {
        t = Q::zero();
    } else if t > Q::one() {
        t = Q::one();
    }
    let c = [&a[0] + &t * &ab[0], &a[1] + &t * &ab[1], &a[2] + &t * &ab[2]];
    norm2(&sub(p, &c))
}

/// Squared distance between closed segments `p0p1` and `q0q1`.
pub fn segment_segment_dist2(p0: &Point3, p1: &Point3, q0: &Point3, q1: &Point3) -> Q {
    let d1 = sub(p1, p0);
    let d2 = sub(q1, q0);
    let r = sub(p0, q0);
    let a = norm2(&d1);
    let e = norm2(&d2);
    let f = dot(&d2, &r);
    let c = dot(&d1, &r);
    let b = dot(&d1, &d2);
    let denom = &a * &e - &b * &b;
    let clamp = |x: Q| {
        if x.is_negative() {
            Q::zero()
        } else if x > Q::one() {
            Q::one()
        } else {
            x
        }
    };
    let mut s = if denom.is_zero() { Q::zero() } else { clamp((&b * &f - &c * &e) / &denom) };
    let mut t = (&b * &s + &f) / &e;
    if t.is_negative() {
        t = Q::zero();
        s = clamp(-&c / &a);
    } else if t > Q::one() {
        t = Q::one();
        s = clamp((&b - &c) / &a);
    }
    let cp = [&p0[0] + &s * &d1[0], &p0[1] + &s * &d1[1], &p0[2] + &s * &d1[2]];
    let cq = [&q0[0] + &t * &d2[0], &q0[1] + &t * &d2[1], &q0[2] + &t * &d2[2]];
    norm2(&sub(&cp, &cq))
}
