//! Integer homology signatures from a tree–cotree decomposition.

use std::collections::VecDeque;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::complex::{Complex, Cycle};
use crate::error::{Error, Result};

/// Coordinates of a first-homology class of the torus in a fixed basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct HomologySignature {
    pub p: i64,
    pub q: i64,
}

impl HomologySignature {
    pub const ZERO: Self = Self { p: 0, q: 0 };

    pub const fn new(p: i64, q: i64) -> Self {
        Self { p, q }
    }

    pub fn is_zero(self) -> bool {
        self.p == 0 && self.q == 0
    }

    /// Algebraic intersection form `p*q' - q*p'`.
    pub fn cross(self, other: Self) -> i64 {
        self.p * other.q - self.q * other.p
    }

    /// Equal up to sign: the classes of the two orientations of one curve.
    pub fn same_unoriented(self, other: Self) -> bool {
        self == other || self == -other
    }

    pub fn is_primitive(self) -> bool {
        num_integer::gcd(self.p, self.q) == 1
    }
}

impl Add for HomologySignature {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.p + o.p, self.q + o.q)
    }
}

impl Sub for HomologySignature {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.p - o.p, self.q - o.q)
    }
}

impl Neg for HomologySignature {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.p, -self.q)
    }
}

impl fmt::Display for HomologySignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// Signature of every edge, oriented from its smaller to its larger endpoint.
#[derive(Debug, Clone)]
pub struct HomologyBasis {
    edge_sig: Vec<HomologySignature>,
    n: usize,
    /// Edge lookup `a * n + b`, valid for both orders.
    lookup: Vec<u32>,
    /// The two edges outside both the spanning tree and the dual spanning tree.
    pub generators: [usize; 2],
    pub tree_edges: Vec<usize>,
}

const NONE: u32 = u32::MAX;

impl HomologyBasis {
    /// Signature of the directed edge `a -> b`; `None` when `ab` is not an edge.
    #[inline]
    pub fn directed(&self, a: usize, b: usize) -> Option<HomologySignature> {
        let e = self.lookup[a * self.n + b];
        if e == NONE {
            return None;
        }
        let s = self.edge_sig[e as usize];
        Some(if a < b { s } else { -s })
    }

    pub fn edge_signature(&self, e: usize) -> HomologySignature {
        self.edge_sig[e]
    }

    /// Sum along a closed walk `w[0] -> w[1] -> ... -> w[0]`.
    pub fn walk_signature(&self, walk: &[usize]) -> Result<HomologySignature> {
        let l = walk.len();
        let mut acc = HomologySignature::ZERO;
        for i in 0..l {
            let (a, b) = (walk[i], walk[(i + 1) % l]);
            acc = acc
                + self
                    .directed(a, b)
                    .ok_or_else(|| Error::NotACycle(format!("{}-{} is not an edge", a + 1, b + 1)))?;
        }
        Ok(acc)
    }

    pub fn cycle_signature(&self, c: &Cycle) -> HomologySignature {
        self.walk_signature(c.vertices()).expect("validated cycle")
    }

    /// A cycle separates the torus exactly when its class vanishes.
    pub fn is_separating(&self, c: &Cycle) -> bool {
        self.cycle_signature(c).is_zero()
    }
}

/// Builds the signature cocycle basis via a BFS tree and a dual BFS cotree.
pub fn homology_basis(c: &Complex) -> Result<HomologyBasis> {
    let oriented = match c.oriented_faces() {
        Some(o) if c.report().euler == 0 => o,
        _ => return Err(Error::NotGenusOne),
    };
    let n = c.n();
    let ne = c.edges().len();
    let mut lookup = vec![NONE; n * n];
    for (i, e) in c.edges().iter().enumerate() {
        lookup[e[0] * n + e[1]] = i as u32;
        lookup[e[1] * n + e[0]] = i as u32;
    }

    let mut in_tree = vec![false; ne];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for &w in c.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                in_tree[lookup[v * n + w] as usize] = true;
                queue.push_back(w);
            }
        }
    }

    let nf = oriented.len();
    let face_edges: Vec<[usize; 3]> = oriented
        .iter()
        .map(|t| {
            [
                lookup[t[0] * n + t[1]] as usize,
                lookup[t[1] * n + t[2]] as usize,
                lookup[t[2] * n + t[0]] as usize,
            ]
        })
        .collect();
    let mut in_cotree = vec![false; ne];
    let mut parent_edge = vec![usize::MAX; nf];
    let mut fseen = vec![false; nf];
    let mut forder = vec![0usize];
    fseen[0] = true;
    let mut i = 0;
    while i < forder.len() {
        let f = forder[i];
        for &e in &face_edges[f] {
            if in_tree[e] || in_cotree[e] {
                continue;
            }
            let [g0, g1] = c.edge_faces(e);
            let g = if g0 == f { g1 } else { g0 };
            if !fseen[g] {
                fseen[g] = true;
                in_cotree[e] = true;
                parent_edge[g] = e;
                forder.push(g);
            }
        }
        i += 1;
    }

    let leftover: Vec<usize> = (0..ne).filter(|&e| !in_tree[e] && !in_cotree[e]).collect();
    if leftover.len() != 2 {
        return Err(Error::NotGenusOne);
    }

    let mut sig: Vec<Option<HomologySignature>> = vec![None; ne];
    for e in 0..ne {
        if in_tree[e] {
            sig[e] = Some(HomologySignature::ZERO);
        }
    }
    sig[leftover[0]] = Some(HomologySignature::new(1, 0));
    sig[leftover[1]] = Some(HomologySignature::new(0, 1));

    let directed = |sig: &[Option<HomologySignature>], a: usize, b: usize, e: usize| {
        sig[e].map(|s| if a < b { s } else { -s })
    };
    // Leaves of the dual tree first: each face solves for its parent edge.
    for &f in forder.iter().skip(1).rev() {
        let t = oriented[f];
        let mut acc = HomologySignature::ZERO;
        let mut unknown = None;
        for j in 0..3 {
            let (a, b) = (t[j], t[(j + 1) % 3]);
            let e = face_edges[f][j];
            if e == parent_edge[f] {
                unknown = Some((a, b, e));
            } else {
                acc = acc + directed(&sig, a, b, e).expect("child edges solved first");
            }
        }
        let (a, b, e) = unknown.expect("non-root face has a parent edge");
        // acc + sig(a->b) = 0
        let s = -acc;
        sig[e] = Some(if a < b { s } else { -s });
    }
    let edge_sig: Vec<HomologySignature> = sig.into_iter().map(|s| s.unwrap()).collect();
    let basis = HomologyBasis {
        edge_sig,
        n,
        lookup,
        generators: [leftover[0], leftover[1]],
        tree_edges: (0..ne).filter(|&e| in_tree[e]).collect(),
    };
    debug_assert!(oriented.iter().all(|t| basis.walk_signature(t).unwrap().is_zero()));
    Ok(basis)
}

/// Parent pointers of the BFS spanning tree rooted at vertex 0 (the tree used
/// by [`homology_basis`]).
pub(crate) fn bfs_parents(c: &Complex) -> Vec<usize> {
    let n = c.n();
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for &w in c.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    parent
}

/// Length of the fundamental cycle of a non-tree edge.
pub(crate) fn fundamental_cycle_len(c: &Complex, parent: &[usize], e: usize) -> usize {
    let [a, b] = c.edges()[e];
    let path = |mut v: usize| {
        let mut p = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            p.push(v);
        }
        p
    };
    let pa = path(a);
    let pb = path(b);
    // strip the common suffix
    let mut i = pa.len();
    let mut j = pb.len();
    while i > 1 && j > 1 && pa[i - 2] == pb[j - 2] {
        i -= 1;
        j -= 1;
    }
    (i - 1) + (j - 1) + 1
}
