//! The vertex-minimal `3 × k` tori inside the boundary of the cyclic
//! 4-polytope `C_4(3k − 2)`, brought to `R^3` by a Schlegel projection.

use num_traits::{One, Signed, Zero};

use super::mesh::{verify_embedding, Construction, EmbeddingReport, Mesh, Provenance};
use super::rational::{q, Point3, Q};
use crate::error::{Error, Result};
use crate::generators::minimal_torus_3k;

type Point4 = [Q; 4];

/// The point `(t, t², t³, t⁴)` with `t = i + 1`.
pub fn moment_point(i: usize) -> Point4 {
    let t = q(i as i64 + 1);
    let t2 = &t * &t;
    let t3 = &t2 * &t;
    let t4 = &t3 * &t;
    [t, t2, t3, t4]
}

/// Gale's evenness condition: every two non-members of `s` are separated by
/// an even number of members.
pub fn satisfies_gale_evenness(n: usize, s: &[usize]) -> bool {
    let outside: Vec<usize> = (0..n).filter(|i| !s.contains(i)).collect();
    outside
        .windows(2)
        .all(|w| s.iter().filter(|&&x| w[0] < x && x < w[1]).count() % 2 == 0)
}

/// Facets of `C_4(n)`, in lexicographic order.
pub fn cyclic_facets(n: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if satisfies_gale_evenness(n, &[a, b, c, d]) {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

/// The lexicographically least facet of `C_4(n)` containing `tri`.
pub fn containing_facet(n: usize, tri: [usize; 3]) -> Option<[usize; 4]> {
    (0..n).filter(|v| !tri.contains(v)).find_map(|v| {
        let mut s = [tri[0], tri[1], tri[2], v];
        s.sort_unstable();
        satisfies_gale_evenness(n, &s).then_some(s)
    })
}

fn sub4(a: &Point4, b: &Point4) -> Point4 {
    std::array::from_fn(|i| &a[i] - &b[i])
}

fn dot4(a: &Point4, b: &Point4) -> Q {
    (0..4).map(|i| &a[i] * &b[i]).fold(Q::zero(), |s, x| s + x)
}

fn det3(m: [[&Q; 3]; 3]) -> Q {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// A vector orthogonal to `u`, `v`, `w`.
fn normal4(u: &Point4, v: &Point4, w: &Point4) -> Point4 {
    std::array::from_fn(|i| {
        let cols: Vec<usize> = (0..4).filter(|&c| c != i).collect();
        let m = [u, v, w].map(|r| [&r[cols[0]], &r[cols[1]], &r[cols[2]]]);
        let d = det3(m);
        if i % 2 == 0 {
            d
        } else {
            -d
        }
    })
}

/// Hyperplane `a·x = b` through four points, with `a` pointing away from
/// `interior`.
fn hyperplane(p: [&Point4; 4], interior: &Point4) -> (Point4, Q) {
    let mut a = normal4(&sub4(p[1], p[0]), &sub4(p[2], p[0]), &sub4(p[3], p[0]));
    let mut b = dot4(&a, p[0]);
    if dot4(&a, interior) > b {
        a = a.map(|x| -x);
        b = -b;
    }
    (a, b)
}

#[derive(Debug, Clone)]
pub struct CyclicRealization {
    pub mesh: Mesh,
    /// Each torus triangle with the facet of `C_4(3k − 2)` that contains it.
    pub containing_facets: Vec<([usize; 3], [usize; 4])>,
    pub schlegel_facet: [usize; 4],
    pub embedding: EmbeddingReport,
}

/// Places the torus on the moment curve, certifies every triangle as a face of
/// `C_4(3k − 2)` and projects from a point just beyond the least facet.
pub fn cyclic_polytope_realization(k: usize) -> Result<CyclicRealization> {
    let torus = minimal_torus_3k(k)?;
    let n = torus.n();
    let mut containing_facets = Vec::with_capacity(torus.faces().len());
    for &f in torus.faces() {
        let facet = containing_facet(n, f).ok_or(Error::FaceNotInPolytope(f))?;
        containing_facets.push((f, facet));
    }

    let pts: Vec<Point4> = (0..n).map(moment_point).collect();
    let nq = q(n as i64);
    let interior: Point4 = std::array::from_fn(|i| pts.iter().map(|p| &p[i]).fold(Q::zero(), |s, x| s + x) / &nq);
    let facets = cyclic_facets(n);
    let planes: Vec<(Point4, Q)> = facets.iter().map(|f| hyperplane(f.map(|i| &pts[i]), &interior)).collect();
    let schlegel_facet = facets[0];
    let (a, b) = planes[0].clone();
    let c_f: Point4 = std::array::from_fn(|i| schlegel_facet.iter().map(|&v| &pts[v][i]).fold(Q::zero(), |s, x| s + x) / q(4));
    let outward = sub4(&c_f, &interior);

    // Beyond the first facet and beneath every other one.
    let mut lambda = Q::one();
    let view = loop {
        let p: Point4 = std::array::from_fn(|i| &c_f[i] + &lambda * &outward[i]);
        if planes[1..].iter().all(|(g, h)| dot4(g, &p) < *h) {
            break p;
        }
        lambda /= q(2);
    };

    let axis = (0..4).max_by(|&i, &j| a[i].abs().cmp(&a[j].abs())).unwrap();
    let keep: Vec<usize> = (0..4).filter(|&i| i != axis).collect();
    let ap = dot4(&a, &view);
    let coords: Vec<Point3> = pts
        .iter()
        .map(|x| {
            let s = (&b - &ap) / dot4(&a, &sub4(x, &view));
            let y: Point4 = std::array::from_fn(|i| &view[i] + &s * (&x[i] - &view[i]));
            [y[keep[0]].clone(), y[keep[1]].clone(), y[keep[2]].clone()]
        })
        .collect();
    let mesh = Mesh::new(coords, torus, Provenance::bare(Construction::CyclicPolytope))?;
    let embedding = verify_embedding(&mesh);
    Ok(CyclicRealization { mesh, containing_facets, schlegel_facet, embedding })
}
