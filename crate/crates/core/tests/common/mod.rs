//! Independent brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

type Q = BigRational;

fn qi(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Homology classes of edge cycles, as normal forms modulo the span of the
/// face boundaries over the rationals.
pub struct HomologyOracle {
    n: usize,
    adj: Vec<Vec<usize>>,
    edge: HashMap<(usize, usize), usize>,
    /// Reduced row echelon basis of the boundary space: (pivot, row).
    basis: Vec<(usize, Vec<Q>)>,
}

impl HomologyOracle {
    pub fn new(n: usize, faces: &[[usize; 3]]) -> Self {
        let mut edge = HashMap::new();
        let mut adj = vec![Vec::new(); n];
        for f in faces {
            for (a, b) in [(f[0], f[1]), (f[1], f[2]), (f[2], f[0])] {
                let key = (a.min(b), a.max(b));
                if !edge.contains_key(&key) {
                    let id = edge.len();
                    edge.insert(key, id);
                    adj[a].push(b);
                    adj[b].push(a);
                }
            }
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        let mut me = Self { n, adj, edge, basis: Vec::new() };
        for f in faces {
            let v = me.chain(&[f[0], f[1], f[2]]);
            me.insert(v);
        }
        me
    }

    /// Oriented edge vector of a closed vertex sequence.
    pub fn chain(&self, cyc: &[usize]) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.edge.len()];
        for i in 0..cyc.len() {
            let (a, b) = (cyc[i], cyc[(i + 1) % cyc.len()]);
            let id = self.edge[&(a.min(b), a.max(b))];
            if a < b {
                v[id] += Q::one();
            } else {
                v[id] -= Q::one();
            }
        }
        v
    }

    fn reduce(&self, mut v: Vec<Q>) -> Vec<Q> {
        for (p, row) in &self.basis {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    *x -= &f * r;
                }
            }
        }
        v
    }

    fn insert(&mut self, v: Vec<Q>) {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else { return };
        let inv = Q::one() / &v[p];
        for x in &mut v {
            *x *= &inv;
        }
        for (_, row) in &mut self.basis {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&v) {
                    *x -= &f * y;
                }
            }
        }
        self.basis.push((p, v));
    }

    pub fn class(&self, cyc: &[usize]) -> Vec<Q> {
        self.reduce(self.chain(cyc))
    }

    pub fn boundary_rank(&self) -> usize {
        self.basis.len()
    }

    pub fn edges(&self) -> usize {
        self.edge.len()
    }

    /// Every simple cycle of length at most `max_len`, once each.
    pub fn simple_cycles(&self, max_len: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for s in 0..self.n {
            let mut path = vec![s];
            let mut used = vec![false; self.n];
            used[s] = true;
            self.extend(s, max_len, &mut path, &mut used, &mut out);
        }
        out
    }

    fn extend(&self, s: usize, max_len: usize, path: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        for &w in &self.adj[last] {
            if w == s && path.len() >= 3 && path[1] < last {
                out.push(path.clone());
            }
            if w <= s || used[w] || path.len() == max_len {
                continue;
            }
            used[w] = true;
            path.push(w);
            self.extend(s, max_len, path, used, out);
            path.pop();
            used[w] = false;
        }
    }
}

fn same_unoriented(a: &[Q], b: &[Q]) -> bool {
    a == b || a.iter().zip(b).all(|(x, y)| *x == -y.clone())
}

fn is_zero(a: &[Q]) -> bool {
    a.iter().all(Zero::is_zero)
}

/// Non-separating simple cycles up to `max_len`, with their classes.
fn nonseparating(o: &HomologyOracle, max_len: usize) -> Vec<(Vec<usize>, Vec<Q>)> {
    o.simple_cycles(max_len)
        .into_iter()
        .map(|c| {
            let k = o.class(&c);
            (c, k)
        })
        .filter(|(_, k)| !is_zero(k))
        .collect()
}

pub fn oracle_is_separating(n: usize, faces: &[[usize; 3]], cyc: &[usize]) -> bool {
    is_zero(&HomologyOracle::new(n, faces).class(cyc))
}

/// Length of a shortest non-separating simple cycle.
pub fn oracle_shortest(n: usize, faces: &[[usize; 3]]) -> usize {
    let o = HomologyOracle::new(n, faces);
    (3..=n).find(|&l| !nonseparating(&o, l).is_empty()).expect("a torus has non-separating cycles")
}

/// `(m_M, k_M)` for a non-separating mark.
pub fn oracle_marked(n: usize, faces: &[[usize; 3]], mark: &[usize]) -> (usize, usize) {
    let o = HomologyOracle::new(n, faces);
    let cm = o.class(mark);
    assert!(!is_zero(&cm), "mark must be non-separating");
    let mut m_mark = None;
    let mut k_mark = None;
    for l in 3..=n {
        for (c, k) in nonseparating(&o, l) {
            if same_unoriented(&k, &cm) {
                m_mark = Some(m_mark.map_or(c.len(), |x: usize| x.min(c.len())));
            } else {
                k_mark = Some(k_mark.map_or(c.len(), |x: usize| x.min(c.len())));
            }
        }
        if let (Some(a), Some(b)) = (m_mark, k_mark) {
            return (a, b);
        }
    }
    panic!("a torus has two non-homotopic cycle classes")
}

/// `(m, s)`: `m` the shortest non-separating length and `s` the largest
/// `k_M` over all non-separating marks `M`.
pub fn oracle_type(n: usize, faces: &[[usize; 3]]) -> (usize, usize) {
    let o = HomologyOracle::new(n, faces);
    for l in 3..=n {
        let cycles = nonseparating(&o, l);
        if cycles.is_empty() {
            continue;
        }
        let m = cycles.iter().map(|(c, _)| c.len()).min().unwrap();
        // classes of shortest cycles, the only marks whose k_M can exceed m
        let mut classes: Vec<&Vec<Q>> = Vec::new();
        for (c, k) in &cycles {
            if c.len() == m && !classes.iter().any(|x| same_unoriented(x, k)) {
                classes.push(k);
            }
        }
        let k_of = |cls: &Vec<Q>| {
            cycles.iter().filter(|(_, k)| !same_unoriented(k, cls)).map(|(c, _)| c.len()).min()
        };
        if classes.iter().all(|c| k_of(c).is_some()) {
            let s = classes.iter().map(|c| k_of(c).unwrap()).max().unwrap();
            return (m, s);
        }
    }
    panic!("no two non-homotopic cycle classes")
}

// ---- knot determinant by Fox colourings ----

type P3 = [Q; 3];

fn cross2(a: [&Q; 2], b: [&Q; 2]) -> Q {
    a[0] * b[1] - a[1] * b[0]
}

/// Crossings of the view from `+z`: (over stick, over param, under stick,
/// under param); `None` when the view is not regular.
fn z_crossings(p: &[P3]) -> Option<Vec<(usize, Q, usize, Q)>> {
    let k = p.len();
    let d = |i: usize| [&p[(i + 1) % k][0] - &p[i][0], &p[(i + 1) % k][1] - &p[i][1]];
    let mut xs = Vec::new();
    for i in 0..k {
        let di = d(i);
        if di[0].is_zero() && di[1].is_zero() {
            return None;
        }
        for j in i + 1..k {
            let dj = d(j);
            let den = cross2([&di[0], &di[1]], [&dj[0], &dj[1]]);
            let adjacent = j == i + 1 || (i == 0 && j == k - 1);
            if adjacent {
                if den.is_zero() {
                    return None;
                }
                continue;
            }
            let w = [&p[j][0] - &p[i][0], &p[j][1] - &p[i][1]];
            if den.is_zero() {
                if cross2([&di[0], &di[1]], [&w[0], &w[1]]).is_zero() {
                    return None;
                }
                continue;
            }
            let t = cross2([&w[0], &w[1]], [&dj[0], &dj[1]]) / &den;
            let s = cross2([&w[0], &w[1]], [&di[0], &di[1]]) / &den;
            let (zero, one) = (Q::zero(), Q::one());
            if t < zero || t > one || s < zero || s > one {
                continue;
            }
            if t == zero || t == one || s == zero || s == one {
                return None;
            }
            let hi = &p[i][2] + &t * (&p[(i + 1) % k][2] - &p[i][2]);
            let hj = &p[j][2] + &s * (&p[(j + 1) % k][2] - &p[j][2]);
            if hi == hj {
                return None;
            }
            xs.push(if hi > hj { (i, t, j, s) } else { (j, s, i, t) });
        }
    }
    Some(xs)
}

fn abs_det(mut a: Vec<Vec<Q>>) -> Q {
    let n = a.len();
    let mut det = Q::one();
    for i in 0..n {
        let Some(p) = (i..n).find(|&r| !a[r][i].is_zero()) else { return Q::zero() };
        a.swap(i, p);
        det *= &a[i][i];
        for r in i + 1..n {
            let f = &a[r][i] / &a[i][i];
            let (top, rest) = a.split_at_mut(r);
            for (x, y) in rest[0][i..].iter_mut().zip(&top[i][i..]) {
                *x -= &f * y;
            }
        }
    }
    det.abs()
}

/// Determinant from a minor of the Fox colouring matrix of the view from `+z`.
fn fox_from_crossings(xs: &[(usize, Q, usize, Q)]) -> u64 {
    let c = xs.len();
    if c == 0 {
        return 1;
    }
    let mut under: Vec<(usize, &Q, usize)> = xs.iter().enumerate().map(|(n, x)| (x.2, &x.3, n)).collect();
    under.sort();
    // arc a runs from under-passage a−1 to under-passage a
    let arc_at = |stick: usize, t: &Q| under.iter().filter(|u| (u.0, u.1) < (stick, t)).count() % c;
    let mut m = vec![vec![qi(0); c]; c];
    for (n, x) in xs.iter().enumerate() {
        let over = arc_at(x.0, &x.1);
        let idx = under.iter().position(|u| u.2 == n).unwrap();
        m[n][over] += qi(2);
        m[n][idx] -= qi(1);
        m[n][(idx + 1) % c] -= qi(1);
    }
    m.pop();
    for r in &mut m {
        r.pop();
    }
    let d = abs_det(m);
    assert!(d.is_integer());
    d.to_integer().try_into().unwrap()
}

/// Knot determinant by Fox colourings, viewed along `+z` after the shear
/// `(x, y, z) ↦ (x + a z, y + b z, z)`, which preserves the knot type.
pub fn fox_determinant(points: &[P3]) -> u64 {
    for (a, b) in [(0, 0), (1, 2), (2, -3), (-5, 7), (3, 11), (13, -2)] {
        let (a, b) = (qi(a) / qi(7), qi(b) / qi(5));
        let sheared: Vec<P3> =
            points.iter().map(|p| [&p[0] + &a * &p[2], &p[1] + &b * &p[2], p[2].clone()]).collect();
        if let Some(xs) = z_crossings(&sheared) {
            return fox_from_crossings(&xs);
        }
    }
    panic!("no regular view found")
}
