//! Shortest non-separating cycles, marked types and the combinatorial stick
//! number.
//!
//! Searches run in the Z²-cover of the edge graph labeled by homology
//! signatures: a closed walk of class `σ` based at `s` is a path from `(s, 0)`
//! to `(s, σ)`. Minimal closed walks give lower bounds; a depth-first search
//! over simple cycles, pruned by exact cover distances, produces witnesses.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::homology::{bfs_parents, fundamental_cycle_len, homology_basis, HomologyBasis, HomologySignature};
use crate::complex::{Complex, Cycle, SimplicialTorus};
use crate::error::{Error, Result};

type Sig = HomologySignature;

/// For every vertex `v`, the cover states `(v, δ)` within `depth` of `(s, 0)`
/// and their distances.
pub(crate) struct CoverBall {
    pub by_vertex: Vec<Vec<(Sig, u32)>>,
}

pub(crate) fn cover_ball(c: &Complex, basis: &HomologyBasis, s: usize, depth: usize) -> CoverBall {
    let mut dist: HashMap<(usize, Sig), u32> = HashMap::new();
    let mut queue = VecDeque::new();
    dist.insert((s, Sig::ZERO), 0);
    queue.push_back((s, Sig::ZERO, 0u32));
    while let Some((v, sig, d)) = queue.pop_front() {
        if d as usize == depth {
            continue;
        }
        for &w in c.neighbors(v) {
            let next = sig + basis.directed(v, w).unwrap();
            if let std::collections::hash_map::Entry::Vacant(e) = dist.entry((w, next)) {
                e.insert(d + 1);
                queue.push_back((w, next, d + 1));
            }
        }
    }
    let mut by_vertex = vec![Vec::new(); c.n()];
    for ((v, sig), d) in dist {
        by_vertex[v].push((sig, d));
    }
    for list in &mut by_vertex {
        list.sort_unstable_by_key(|&(sig, d)| (d, sig));
    }
    CoverBall { by_vertex }
}

/// Length of a shortest closed walk whose class satisfies `pred`, if one has
/// length at most `depth`.
pub(crate) fn shortest_closed_walk(
    c: &Complex,
    balls: &[CoverBall],
    depth: usize,
    pred: &dyn Fn(Sig) -> bool,
) -> Option<usize> {
    (0..c.n())
        .filter_map(|s| {
            balls[s].by_vertex[s]
                .iter()
                .filter(|&&(sig, d)| d > 0 && d as usize <= depth && pred(sig))
                .map(|&(_, d)| d as usize)
                .min()
        })
        .min()
}

struct SimpleSearch<'a> {
    c: &'a Complex,
    basis: &'a HomologyBasis,
    ball: &'a CoverBall,
    pred: &'a dyn Fn(Sig) -> bool,
    start: usize,
    target_len: usize,
    visited: Vec<bool>,
    path: Vec<usize>,
}

impl SimpleSearch<'_> {
    fn reachable(&self, w: usize, sig: Sig, remaining: usize) -> bool {
        self.ball.by_vertex[w]
            .iter()
            .take_while(|&&(_, d)| d as usize <= remaining)
            .any(|&(delta, _)| (self.pred)(sig - delta))
    }

    fn dfs(&mut self, v: usize, sig: Sig) -> bool {
        let depth = self.path.len();
        for &w in self.c.neighbors(v) {
            let next = sig + self.basis.directed(v, w).unwrap();
            if w == self.start {
                if depth == self.target_len && depth >= 3 && (self.pred)(next) {
                    return true;
                }
                continue;
            }
            if w < self.start || self.visited[w] || depth >= self.target_len {
                continue;
            }
            if !self.reachable(w, next, self.target_len - depth) {
                continue;
            }
            self.visited[w] = true;
            self.path.push(w);
            if self.dfs(w, next) {
                return true;
            }
            self.path.pop();
            self.visited[w] = false;
        }
        false
    }
}

/// Lexicographically least simple cycle of minimal length in `lower..=upper`
/// whose class satisfies `pred`; cycles start at their smallest vertex.
pub(crate) fn shortest_simple_cycle(
    c: &Complex,
    basis: &HomologyBasis,
    balls: &[CoverBall],
    lower: usize,
    upper: usize,
    pred: &dyn Fn(Sig) -> bool,
) -> Option<Cycle> {
    for len in lower.max(3)..=upper {
        for (s, ball) in balls.iter().enumerate().take(c.n()) {
            let mut search = SimpleSearch {
                c,
                basis,
                ball,
                pred,
                start: s,
                target_len: len,
                visited: vec![false; c.n()],
                path: vec![s],
            };
            search.visited[s] = true;
            if search.dfs(s, Sig::ZERO) {
                return Some(Cycle::new_unchecked(search.path));
            }
        }
    }
    None
}

/// Shared per-torus search state.
pub struct CycleAnalyzer<'a> {
    torus: &'a SimplicialTorus,
    basis: HomologyBasis,
    depth: usize,
    balls: Vec<CoverBall>,
    generator_lens: [usize; 2],
}

impl<'a> CycleAnalyzer<'a> {
    pub fn new(torus: &'a SimplicialTorus) -> Result<Self> {
        let basis = homology_basis(torus)?;
        let parent = bfs_parents(torus);
        let generator_lens = [
            fundamental_cycle_len(torus, &parent, basis.generators[0]),
            fundamental_cycle_len(torus, &parent, basis.generators[1]),
        ];
        Ok(Self { torus, basis, depth: 0, balls: Vec::new(), generator_lens })
    }

    pub fn basis(&self) -> &HomologyBasis {
        &self.basis
    }

    fn ensure_depth(&mut self, depth: usize) {
        if depth > self.depth {
            self.balls = (0..self.torus.n())
                .map(|s| cover_ball(self.torus, &self.basis, s, depth))
                .collect();
            self.depth = depth;
        }
    }

    /// Minimal simple cycle with class in `pred`, given an upper bound known
    /// to be attained by some simple cycle, and the fact that a minimal closed
    /// walk for `pred` can always be shortened to a simple cycle.
    fn minimal_reducible(&mut self, upper: usize, pred: &dyn Fn(Sig) -> bool) -> Cycle {
        self.ensure_depth(upper);
        let lower = shortest_closed_walk(self.torus, &self.balls, upper, pred)
            .expect("upper bound is attained");
        let cyc = shortest_simple_cycle(self.torus, &self.basis, &self.balls, lower, upper, pred)
            .expect("a closed walk of minimal length reduces to a simple cycle");
        debug_assert_eq!(cyc.len(), lower);
        cyc
    }

    /// Length and witness of a shortest non-separating cycle.
    pub fn shortest_nonseparating(&mut self) -> (usize, Cycle) {
        let upper = self.generator_lens[0].min(self.generator_lens[1]);
        let cyc = self.minimal_reducible(upper, &|s: Sig| !s.is_zero());
        (cyc.len(), cyc)
    }

    /// `(m_M, k_M)` with witnesses for a non-separating mark `M`.
    pub fn marked_type(&mut self, mark: &Cycle) -> Result<MarkedType> {
        let sm = self.basis.cycle_signature(mark);
        if sm.is_zero() {
            return Err(Error::SeparatingMark);
        }
        // Homotopic cycles: signature ±[M]. Bounded above by M itself.
        let upper_h = mark.len();
        self.ensure_depth(upper_h);
        let same = move |s: Sig| s.same_unoriented(sm);
        let lower_h =
            shortest_closed_walk(self.torus, &self.balls, upper_h, &same).unwrap_or(upper_h);
        let homotopic = shortest_simple_cycle(self.torus, &self.basis, &self.balls, lower_h, upper_h, &same)
            .expect("the mark itself qualifies");

        // Classes outside Z·[M]: non-separating and not homotopic to M. One of
        // the two generator cycles always qualifies.
        let other = move |s: Sig| sm.cross(s) != 0;
        let g = [Sig::new(1, 0), Sig::new(0, 1)];
        let upper_o = (0..2)
            .filter(|&i| other(g[i]))
            .map(|i| self.generator_lens[i])
            .min()
            .expect("generators span the lattice");
        let other_cycle = self.minimal_reducible(upper_o, &other);
        Ok(MarkedType {
            m_mark: homotopic.len(),
            k_mark: other_cycle.len(),
            mark_signature: sm,
            witness_homotopic: homotopic,
            witness_other: other_cycle,
        })
    }

    /// Type `m × s(T)`: `s(T) = k_M` for any shortest non-separating `M`.
    pub fn torus_type(&mut self) -> TorusTypeResult {
        let (m, witness_m) = self.shortest_nonseparating();
        let mt = self.marked_type(&witness_m).expect("shortest cycle is non-separating");
        let signature_s = self.basis.cycle_signature(&mt.witness_other);
        TorusTypeResult {
            m,
            s: mt.k_mark,
            signature_m: mt.mark_signature,
            signature_s,
            witness_m,
            witness_s: mt.witness_other,
        }
    }

    /// Every simple non-separating cycle of length at most `max_len`, each
    /// listed once (from its smallest vertex, lexicographically least direction).
    pub fn nonseparating_cycles_up_to(&self, max_len: usize) -> Vec<Cycle> {
        let mut out = Vec::new();
        let c: &Complex = self.torus;
        let n = c.n();
        for s in 0..n {
            let mut visited = vec![false; n];
            visited[s] = true;
            let mut path = vec![s];
            enumerate_from(c, &self.basis, s, Sig::ZERO, max_len, &mut visited, &mut path, &mut out);
        }
        out
    }
}

#[allow(clippy::too_many_arguments)]
fn enumerate_from(
    c: &Complex,
    basis: &HomologyBasis,
    s: usize,
    sig: Sig,
    max_len: usize,
    visited: &mut [bool],
    path: &mut Vec<usize>,
    out: &mut Vec<Cycle>,
) {
    let v = *path.last().unwrap();
    for &w in c.neighbors(v) {
        let next = sig + basis.directed(v, w).unwrap();
        if w == s {
            // keep one direction: second vertex smaller than the last one
            if path.len() >= 3 && path[1] < v && !next.is_zero() {
                out.push(Cycle::new_unchecked(path.clone()));
            }
            continue;
        }
        if w < s || visited[w] || path.len() >= max_len {
            continue;
        }
        visited[w] = true;
        path.push(w);
        enumerate_from(c, basis, s, next, max_len, visited, path, out);
        path.pop();
        visited[w] = false;
    }
}

/// Marked type `m_M × k_M` with witnesses.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MarkedType {
    pub m_mark: usize,
    pub k_mark: usize,
    pub mark_signature: HomologySignature,
    pub witness_homotopic: Cycle,
    pub witness_other: Cycle,
}

/// Type `m × s(T)` of a torus.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TorusTypeResult {
    pub m: usize,
    pub s: usize,
    pub signature_m: HomologySignature,
    pub signature_s: HomologySignature,
    pub witness_m: Cycle,
    pub witness_s: Cycle,
}

impl TorusTypeResult {
    pub fn label(&self) -> String {
        format!("{}x{}", self.m, self.s)
    }
}

pub fn cycle_signature(basis: &HomologyBasis, c: &Cycle) -> HomologySignature {
    basis.cycle_signature(c)
}

pub fn is_separating(basis: &HomologyBasis, c: &Cycle) -> bool {
    basis.is_separating(c)
}

pub fn shortest_nonseparating(t: &SimplicialTorus) -> Result<(usize, Cycle)> {
    Ok(CycleAnalyzer::new(t)?.shortest_nonseparating())
}

pub fn marked_type(t: &SimplicialTorus, mark: &Cycle) -> Result<MarkedType> {
    CycleAnalyzer::new(t)?.marked_type(mark)
}

pub fn stick_number_and_type(t: &SimplicialTorus) -> Result<TorusTypeResult> {
    Ok(CycleAnalyzer::new(t)?.torus_type())
}
