//! Distance layers around a vertex of a shortest non-separating cycle.
//!
//! `V_i` is the set of vertices at edge distance `i` from `v`. Cutting the
//! torus along the mark `M` gives a cylinder with two copies of `v`; a vertex
//! off `M` belongs to the left part of its layer when it is strictly closer,
//! inside the cylinder, to the left copy of `v`. Vertices of `M` count as
//! right. With `c = ⌈m/2⌉` the parts are named
//!
//! * `A_i` right part, `0 ≤ i ≤ c−1` (`|A_i| ≥ 2i+1`)
//! * `E_i` left part, `1 ≤ i ≤ c` (`|E_i| ≥ 2i−1`)
//! * `B_i` right part, `c ≤ i ≤ ⌊(k−1)/2⌋` (`|B_i| ≥ m`)
//! * `D_i` left part, `c+1 ≤ i ≤ ⌊(k−1)/2⌋` (`|D_i| ≥ m`)
//! * `C = V_{k/2}` for even `k` (`|C| ≥ m`)
//!
//! Only layers with `i ≤ ⌊k/2⌋` are considered, and for even `k` the layer
//! `k/2` is always reported as `C`.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::cycles::CycleAnalyzer;
use crate::complex::{Complex, Cycle, SimplicialTorus};
use crate::error::{Error, Result};

/// One checked layer inequality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayerCheck {
    /// `"A"`, `"B"`, `"C"`, `"D"`, `"E"` or `"V"` (non-emptiness).
    pub part: String,
    pub index: usize,
    pub size: usize,
    pub required: usize,
}

impl LayerCheck {
    pub fn holds(&self) -> bool {
        self.size >= self.required
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DistanceLayerReport {
    pub m: usize,
    pub k: usize,
    pub base_vertex: usize,
    /// `|V_i|` for `0 ≤ i ≤ ⌊k/2⌋`.
    pub layer_sizes: Vec<usize>,
    /// Sizes of the right and left parts of every `V_i` in range.
    pub right_sizes: Vec<usize>,
    pub left_sizes: Vec<usize>,
    pub checks: Vec<LayerCheck>,
    pub violated: Vec<LayerCheck>,
}

impl DistanceLayerReport {
    pub fn all_hold(&self) -> bool {
        self.violated.is_empty()
    }
}

fn bfs(adj: &[Vec<usize>], src: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[src] = 0;
    let mut q = VecDeque::from([src]);
    while let Some(u) = q.pop_front() {
        for &w in &adj[u] {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                q.push_back(w);
            }
        }
    }
    dist
}

/// Adjacency of the cylinder obtained by cutting along `mark`. Vertex `u` of
/// the mark keeps id `u` for its right copy; its left copy is `n + index`.
fn cut_cylinder(c: &Complex, mark: &[usize]) -> Vec<Vec<usize>> {
    let n = c.n();
    let l = mark.len();
    let mut index = vec![usize::MAX; n];
    for (i, &u) in mark.iter().enumerate() {
        index[u] = i;
    }
    // side[u][w]: true if neighbour w of mark vertex u lies on the left.
    let mut left_of = vec![Vec::new(); n];
    for (i, &u) in mark.iter().enumerate() {
        let prev = mark[(i + l - 1) % l];
        let next = mark[(i + 1) % l];
        let rot = c.rotation(u);
        let d = rot.len();
        let pn = rot.iter().position(|&x| x == next).unwrap();
        let mut left = vec![false; n];
        let mut t = 1;
        while rot[(pn + t) % d] != prev {
            left[rot[(pn + t) % d]] = true;
            t += 1;
        }
        left_of[u] = left;
    }
    let copy = |u: usize, left: bool| if left { n + index[u] } else { u };
    let mut adj = vec![Vec::new(); n + l];
    let add = |a: usize, b: usize, adj: &mut Vec<Vec<usize>>| {
        adj[a].push(b);
        adj[b].push(a);
    };
    for e in c.edges() {
        let (a, b) = (e[0], e[1]);
        match (index[a] != usize::MAX, index[b] != usize::MAX) {
            (false, false) => add(a, b, &mut adj),
            (true, false) => add(copy(a, left_of[a][b]), b, &mut adj),
            (false, true) => add(a, copy(b, left_of[b][a]), &mut adj),
            (true, true) => {
                let (ia, ib) = (index[a], index[b]);
                if (ia + 1) % l == ib || (ib + 1) % l == ia {
                    add(a, b, &mut adj);
                    add(copy(a, true), copy(b, true), &mut adj);
                } else {
                    add(copy(a, left_of[a][b]), copy(b, left_of[b][a]), &mut adj);
                }
            }
        }
    }
    adj
}

/// Layer decomposition around `v` for a shortest non-separating mark.
pub fn distance_layers(t: &SimplicialTorus, mark: &Cycle, v: usize) -> Result<DistanceLayerReport> {
    let mut analyzer = CycleAnalyzer::new(t)?;
    if analyzer.basis().is_separating(mark) {
        return Err(Error::SeparatingMark);
    }
    let ty = analyzer.torus_type();
    if mark.len() > ty.m {
        return Err(Error::MarkNotShortest { len: mark.len(), m: ty.m });
    }
    let pos = mark
        .vertices()
        .iter()
        .position(|&x| x == v)
        .ok_or_else(|| Error::NotACycle(format!("vertex {} is not on the mark", v + 1)))?;
    let mut rotated = mark.vertices().to_vec();
    rotated.rotate_left(pos);
    Ok(layers_for(t, &rotated, ty.m, ty.s))
}

fn layers_for(t: &Complex, mark: &[usize], m: usize, k: usize) -> DistanceLayerReport {
    let n = t.n();
    let v = mark[0];
    let adj_t: Vec<Vec<usize>> = (0..n).map(|u| t.neighbors(u).to_vec()).collect();
    let dist = bfs(&adj_t, v);
    let cyl = cut_cylinder(t, mark);
    let d_right = bfs(&cyl, v);
    let d_left = bfs(&cyl, n);
    let on_mark: Vec<bool> = (0..n).map(|u| mark.contains(&u)).collect();

    let top = k / 2;
    let mut layer_sizes = vec![0; top + 1];
    let mut right = vec![0; top + 1];
    let mut left = vec![0; top + 1];
    for u in 0..n {
        let i = dist[u];
        if i > top {
            continue;
        }
        layer_sizes[i] += 1;
        if !on_mark[u] && d_left[u] < d_right[u] {
            left[i] += 1;
        } else {
            right[i] += 1;
        }
    }

    let c = m.div_ceil(2);
    let half_layer = k.is_multiple_of(2).then_some(k / 2);
    let in_range = |i: usize| i <= top && Some(i) != half_layer;
    let mut checks = Vec::new();
    let mut push = |part: &str, index: usize, size: usize, required: usize| {
        checks.push(LayerCheck { part: part.into(), index, size, required });
    };
    for (i, &size) in layer_sizes.iter().enumerate().take(top + 1) {
        push("V", i, size, 1);
    }
    for i in (0..c).filter(|&i| in_range(i)) {
        push("A", i, right[i], 2 * i + 1);
    }
    for i in (1..=c).filter(|&i| in_range(i)) {
        push("E", i, left[i], 2 * i - 1);
    }
    let upper = (k - 1) / 2;
    for i in (c..=upper).filter(|&i| in_range(i)) {
        push("B", i, right[i], m);
    }
    for i in (c + 1..=upper).filter(|&i| in_range(i)) {
        push("D", i, left[i], m);
    }
    if let Some(h) = half_layer {
        push("C", h, layer_sizes[h], m);
    }
    let violated = checks.iter().filter(|c| !c.holds()).cloned().collect();
    DistanceLayerReport {
        m,
        k,
        base_vertex: v,
        layer_sizes,
        right_sizes: right,
        left_sizes: left,
        checks,
        violated,
    }
}
