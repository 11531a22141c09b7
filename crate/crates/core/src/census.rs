//! Exhaustive enumeration of torus triangulations on few vertices.
//!
//! Both strategies grow a surface by repeatedly closing the smallest open edge
//! and introducing unused vertices only in label order, so that a completed
//! complex is determined by its starting configuration.
//!
//! * Orderly: vertex `0` has maximal degree `d` and its star is fixed up
//!   front. A completed complex is accepted iff its face list is the least
//!   among the relabelings produced by the same procedure from every flag at
//!   a vertex of degree `d`, which keeps exactly one member per class.
//! * Exhaustive: start from the single face `{0, 1, 2}`, keep every completed
//!   torus and remove duplicates by [`canonical_form`].

use std::collections::{BTreeMap, BTreeSet};
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canonical::{canonize, is_isomorphic, CanonicalForm};
use crate::complex::{Complex, SimplicialTorus};
use crate::error::{Error, Result};
use crate::generators::minimal_torus_3k;
use crate::topology::CycleAnalyzer;

pub const MIN_VERTICES: usize = 7;
pub const MAX_VERTICES: usize = 11;
pub const TIME_BUDGET_ENV: &str = "TORUS_TIME_BUDGET_SECS";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub canonical_faces: Vec<[usize; 3]>,
    pub n: usize,
    /// `(m, s(T))`.
    pub torus_type: (usize, usize),
    pub equivelar: bool,
    pub automorphism_order: usize,
}

impl CensusRecord {
    pub fn from_torus(t: &SimplicialTorus) -> Result<Self> {
        let canon = canonize(t)?;
        let ty = CycleAnalyzer::new(t)?.torus_type();
        Ok(Self {
            canonical_faces: canon.form.faces,
            n: t.n(),
            torus_type: (ty.m, ty.s),
            equivelar: t.is_equivelar(),
            automorphism_order: canon.automorphism_order,
        })
    }

    pub fn form(&self) -> CanonicalForm {
        CanonicalForm { n: self.n, faces: self.canonical_faces.clone() }
    }

    pub fn torus(&self) -> SimplicialTorus {
        SimplicialTorus::new(self.n, &self.canonical_faces).expect("census records are tori")
    }

    pub fn type_label(&self) -> String {
        format!("{}x{}", self.torus_type.0, self.torus_type.1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Orderly,
    Exhaustive,
}

#[derive(Debug, Clone, Copy)]
pub struct CensusOptions {
    pub strategy: Strategy,
    pub time_budget: Option<Duration>,
}

impl Default for CensusOptions {
    /// Orderly generation, with the time budget taken from
    /// `TORUS_TIME_BUDGET_SECS` when set.
    fn default() -> Self {
        let time_budget = std::env::var(TIME_BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<u64>().ok())
            .map(Duration::from_secs);
        Self { strategy: Strategy::Orderly, time_budget }
    }
}

/// All `n`-vertex triangulated tori up to isomorphism, sorted by canonical form.
pub fn enumerate_tori(n: usize) -> Result<Vec<CensusRecord>> {
    enumerate_tori_with(n, CensusOptions::default())
}

pub fn enumerate_tori_with(n: usize, opts: CensusOptions) -> Result<Vec<CensusRecord>> {
    if !(MIN_VERTICES..=MAX_VERTICES).contains(&n) {
        return Err(Error::OutOfRange(n));
    }
    let clock = Clock::new(opts.time_budget);
    let tori = match opts.strategy {
        Strategy::Orderly => orderly(n, &clock),
        Strategy::Exhaustive => exhaustive(n, &clock),
    };
    if clock.expired.load(Ordering::Relaxed) {
        return Err(Error::TimeBudgetExceeded(opts.time_budget.map_or(0, |d| d.as_secs())));
    }
    let mut records = tori
        .par_iter()
        .map(CensusRecord::from_torus)
        .collect::<Result<Vec<_>>>()?;
    records.sort_by(|a, b| a.canonical_faces.cmp(&b.canonical_faces));
    records.dedup_by(|a, b| a.canonical_faces == b.canonical_faces);
    Ok(records)
}

/// `{n, count, by_type}` summary of a census.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusSummary {
    pub n: usize,
    pub count: usize,
    pub by_type: BTreeMap<String, usize>,
}

pub fn census_summary(n: usize, records: &[CensusRecord]) -> CensusSummary {
    let mut by_type = BTreeMap::new();
    for r in records {
        *by_type.entry(r.type_label()).or_insert(0) += 1;
    }
    CensusSummary { n, count: records.len(), by_type }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem31Report {
    pub k: usize,
    /// `(n, number of tori of type 3×k)` for `7 ≤ n ≤ 3k−2`.
    pub type_counts: Vec<(usize, usize)>,
    pub none_below: bool,
    pub unique_at_minimum: bool,
    pub isomorphic_to_generator: bool,
    pub witness: Option<Vec<[usize; 3]>>,
}

impl Theorem31Report {
    pub fn holds(&self) -> bool {
        self.none_below && self.unique_at_minimum && self.isomorphic_to_generator
    }
}

/// Checks that no torus of type `3×k` has fewer than `3k−2` vertices and that
/// exactly one has `3k−2`, namely [`minimal_torus_3k`].
pub fn census_verify_theorem31(k: usize) -> Result<Theorem31Report> {
    census_verify_theorem31_with(k, CensusOptions::default())
}

pub fn census_verify_theorem31_with(k: usize, opts: CensusOptions) -> Result<Theorem31Report> {
    if k < 3 {
        return Err(Error::InvalidK(k));
    }
    let top = 3 * k - 2;
    if top > MAX_VERTICES {
        return Err(Error::OutOfRange(top));
    }
    let mut type_counts = Vec::new();
    let mut witness = None;
    for n in MIN_VERTICES..=top {
        let hits: Vec<CensusRecord> = enumerate_tori_with(n, opts)?
            .into_iter()
            .filter(|r| r.torus_type == (3, k))
            .collect();
        type_counts.push((n, hits.len()));
        if n == top && hits.len() == 1 {
            witness = Some(hits[0].clone());
        }
    }
    let none_below = type_counts.iter().all(|&(n, c)| n == top || c == 0);
    let unique_at_minimum = type_counts.last().map(|&(_, c)| c) == Some(1);
    let generator = minimal_torus_3k(k)?;
    let isomorphic_to_generator = match &witness {
        Some(w) => is_isomorphic(&w.torus(), &generator)?.is_some(),
        None => false,
    };
    Ok(Theorem31Report {
        k,
        type_counts,
        none_below,
        unique_at_minimum,
        isomorphic_to_generator,
        witness: witness.map(|w| w.canonical_faces),
    })
}

struct Clock {
    start: Instant,
    budget: Option<Duration>,
    expired: AtomicBool,
}

impl Clock {
    fn new(budget: Option<Duration>) -> Self {
        Self { start: Instant::now(), budget, expired: AtomicBool::new(false) }
    }

    fn out_of_time(&self) -> bool {
        if self.expired.load(Ordering::Relaxed) {
            return true;
        }
        if self.budget.is_some_and(|b| self.start.elapsed() > b) {
            self.expired.store(true, Ordering::Relaxed);
            return true;
        }
        false
    }
}

const NO: u8 = u8::MAX;

/// Partial surface. `third[a][b]` holds the apexes of the (at most two) faces
/// on edge `ab`.
#[derive(Clone)]
struct State {
    n: usize,
    max_degree: usize,
    next: usize,
    third: [[[u8; 2]; MAX_VERTICES]; MAX_VERTICES],
    degree: [u8; MAX_VERTICES],
    open: [u8; MAX_VERTICES],
    faces: Vec<[usize; 3]>,
}

impl State {
    fn new(n: usize, max_degree: usize) -> Self {
        Self {
            n,
            max_degree,
            next: 0,
            third: [[[NO; 2]; MAX_VERTICES]; MAX_VERTICES],
            degree: [0; MAX_VERTICES],
            open: [0; MAX_VERTICES],
            faces: Vec::with_capacity(2 * n),
        }
    }

    fn count(&self, a: usize, b: usize) -> usize {
        let t = self.third[a][b];
        (t[0] != NO) as usize + (t[1] != NO) as usize
    }

    fn add_half(&mut self, a: usize, b: usize, c: usize) {
        let slot = &mut self.third[a][b];
        if slot[0] == NO {
            slot[0] = c as u8;
        } else {
            slot[1] = c as u8;
        }
    }

    fn add_face(&mut self, [a, b, c]: [usize; 3]) {
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            match self.count(x, y) {
                0 => {
                    self.degree[x] += 1;
                    self.degree[y] += 1;
                    self.open[x] += 1;
                    self.open[y] += 1;
                }
                _ => {
                    self.open[x] -= 1;
                    self.open[y] -= 1;
                }
            }
            self.add_half(x, y, z);
            self.add_half(y, x, z);
        }
        self.next = self.next.max(a + 1).max(b + 1).max(c + 1);
        let mut f = [a, b, c];
        f.sort_unstable();
        self.faces.push(f);
    }

    fn closed(&self, v: usize) -> bool {
        self.degree[v] > 0 && self.open[v] == 0
    }

    /// Other end of the link path of `v` that starts at the open end `x`,
    /// together with the number of vertices on the path.
    fn path_end(&self, v: usize, x: usize) -> (usize, usize) {
        let (mut prev, mut cur, mut len) = (NO as usize, x, 1);
        loop {
            let t = self.third[v][cur];
            let step = [t[0], t[1]]
                .into_iter()
                .filter(|&y| y != NO && y as usize != prev)
                .map(|y| y as usize)
                .next();
            match step {
                Some(y) if self.count(v, cur) == 2 || prev == NO as usize => {
                    prev = cur;
                    cur = y;
                    len += 1;
                }
                _ => return (cur, len),
            }
        }
    }

    /// Whether adding the link edge `x-y` at vertex `v` keeps the link of
    /// `v` a disjoint union of paths or a single cycle.
    fn link_ok(&self, v: usize, x: usize, y: usize) -> bool {
        if self.closed(v) {
            return false;
        }
        let has_x = self.count(v, x) > 0;
        let has_y = self.count(v, y) > 0;
        if (has_x && self.count(v, x) == 2) || (has_y && self.count(v, y) == 2) {
            return false;
        }
        let new = (!has_x) as usize + (!has_y) as usize;
        if self.degree[v] as usize + new > self.max_degree {
            return false;
        }
        if has_x && has_y {
            let (end, len) = self.path_end(v, x);
            if end == y {
                return len == self.degree[v] as usize && len >= 3;
            }
        }
        true
    }

    fn smallest_open_edge(&self) -> Option<(usize, usize)> {
        (0..self.next).find_map(|a| {
            (a + 1..self.next).find(|&b| self.count(a, b) == 1).map(|b| (a, b))
        })
    }

    fn candidates(&self, a: usize, b: usize) -> Vec<usize> {
        let t = self.third[a][b][0] as usize;
        let limit = (self.next + 1).min(self.n);
        (0..limit)
            .filter(|&c| c != a && c != b && c != t)
            .filter(|&c| self.link_ok(a, b, c) && self.link_ok(b, a, c))
            .filter(|&c| c >= self.next || self.link_ok(c, a, b))
            .collect()
    }

    fn dead(&self) -> bool {
        self.faces.len() > 2 * self.n
    }

    fn children(&self) -> Vec<State> {
        let Some((a, b)) = self.smallest_open_edge() else { return Vec::new() };
        self.candidates(a, b)
            .into_iter()
            .map(|c| {
                let mut s = self.clone();
                s.add_face([a, b, c]);
                s
            })
            .filter(|s| !s.dead())
            .collect()
    }

    fn complete(&self) -> Option<SimplicialTorus> {
        if self.smallest_open_edge().is_some() || self.next != self.n || self.faces.len() != 2 * self.n {
            return None;
        }
        SimplicialTorus::new(self.n, &self.faces).ok()
    }
}

fn search(s: State, clock: &Clock, accept: &(dyn Fn(&SimplicialTorus) -> bool + Sync), out: &mut Vec<SimplicialTorus>) {
    if clock.out_of_time() {
        return;
    }
    if let Some(t) = s.complete() {
        if accept(&t) {
            out.push(t);
        }
        return;
    }
    for child in s.children() {
        search(child, clock, accept, out);
    }
}

/// Expands `roots` breadth-first until there are enough independent subtrees,
/// then searches them in parallel.
fn run(roots: Vec<State>, clock: &Clock, accept: &(dyn Fn(&SimplicialTorus) -> bool + Sync)) -> Vec<SimplicialTorus> {
    let mut frontier = roots;
    let mut done = Vec::new();
    for _ in 0..4 {
        if frontier.len() >= 256 {
            break;
        }
        let mut next = Vec::new();
        for s in frontier {
            if let Some(t) = s.complete() {
                if accept(&t) {
                    done.push(t);
                }
            } else {
                next.extend(s.children());
            }
        }
        frontier = next;
    }
    let found: Vec<Vec<SimplicialTorus>> = frontier
        .into_par_iter()
        .map(|s| {
            let mut out = Vec::new();
            search(s, clock, accept, &mut out);
            out
        })
        .collect();
    done.extend(found.into_iter().flatten());
    done
}

fn orderly(n: usize, clock: &Clock) -> Vec<SimplicialTorus> {
    let roots: Vec<State> = (6..n)
        .map(|d| {
            let mut s = State::new(n, d);
            for i in 1..=d {
                s.add_face([0, i, i % d + 1]);
            }
            s
        })
        .collect();
    run(roots, clock, &is_orderly_representative)
}

fn exhaustive(n: usize, clock: &Clock) -> Vec<SimplicialTorus> {
    let mut root = State::new(n, n - 1);
    root.add_face([0, 1, 2]);
    let tori = run(vec![root], clock, &|_| true);
    let mut seen = BTreeSet::new();
    tori.into_iter()
        .filter(|t| seen.insert(canonize(t).expect("torus").form))
        .collect()
}

/// Face list obtained by relabeling `c` from the flag `(v, w, direction)`:
/// `v ↦ 0`, the link of `v` from `w` ↦ `1..=d`, then every further vertex gets
/// the next label when first reached by closing the smallest open edge.
fn closing_relabel(c: &Complex, v: usize, start: usize, forward: bool) -> Vec<[usize; 3]> {
    let n = c.n();
    let rot = c.rotation(v);
    let d = rot.len();
    let p = rot.iter().position(|&x| x == start).unwrap();
    let mut label = vec![usize::MAX; n];
    let mut old = vec![usize::MAX; n];
    label[v] = 0;
    old[0] = v;
    for i in 0..d {
        let x = if forward { rot[(p + i) % d] } else { rot[(p + d - i) % d] };
        label[x] = i + 1;
        old[i + 1] = x;
    }
    let mut s = State::new(n, n - 1);
    for i in 1..=d {
        s.add_face([0, i, i % d + 1]);
    }
    while let Some((a, b)) = s.smallest_open_edge() {
        let t = s.third[a][b][0] as usize;
        let (oa, ob, ot) = (old[a], old[b], old[t]);
        let e = c.edge_id(oa, ob).unwrap();
        let [f0, f1] = c.edge_faces(e);
        let apex = |f: usize| c.faces()[f].into_iter().find(|&x| x != oa && x != ob).unwrap();
        let oc = if apex(f0) == ot { apex(f1) } else { apex(f0) };
        if label[oc] == usize::MAX {
            label[oc] = s.next;
            old[s.next] = oc;
        }
        s.add_face([a, b, label[oc]]);
    }
    let mut faces = s.faces;
    faces.sort_unstable();
    faces
}

fn is_orderly_representative(t: &SimplicialTorus) -> bool {
    let mut own = t.faces().to_vec();
    own.sort_unstable();
    let d = t.degree(0);
    for v in (0..t.n()).filter(|&v| t.degree(v) == d) {
        for &w in t.rotation(v) {
            for forward in [true, false] {
                if closing_relabel(t, v, w, forward) < own {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::canonical_form;
    use crate::generators::moebius_torus;

    fn opts(strategy: Strategy) -> CensusOptions {
        CensusOptions { strategy, time_budget: None }
    }

    #[test]
    fn seven_vertices_is_moebius() {
        let r = enumerate_tori(7).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].form(), canonical_form(&moebius_torus()).unwrap());
        assert_eq!(r[0].torus_type, (3, 3));
        assert_eq!(r[0].automorphism_order, 42);
    }

    #[test]
    fn strategies_agree_on_eight_vertices() {
        let a = enumerate_tori_with(8, opts(Strategy::Orderly)).unwrap();
        let b = enumerate_tori_with(8, opts(Strategy::Exhaustive)).unwrap();
        assert_eq!(a, b);
        let forms: BTreeSet<_> = a.iter().map(|r| r.form()).collect();
        assert_eq!(forms.len(), a.len());
    }

    #[test]
    fn closing_relabel_reproduces_generator_labels() {
        let r = enumerate_tori(8).unwrap();
        for rec in &r {
            let t = rec.torus();
            let v = (0..t.n()).max_by_key(|&v| t.degree(v)).unwrap();
            let w = t.rotation(v)[0];
            let faces = closing_relabel(&t, v, w, true);
            let relabeled = SimplicialTorus::new(t.n(), &faces).unwrap();
            assert!(is_isomorphic(&t, &relabeled).unwrap().is_some());
        }
    }

    #[test]
    fn out_of_range() {
        assert_eq!(enumerate_tori(6).unwrap_err(), Error::OutOfRange(6));
        assert_eq!(enumerate_tori(12).unwrap_err(), Error::OutOfRange(12));
        assert_eq!(census_verify_theorem31(5).unwrap_err(), Error::OutOfRange(13));
    }

    #[test]
    fn zero_budget_is_reported() {
        let o = CensusOptions { strategy: Strategy::Orderly, time_budget: Some(Duration::ZERO) };
        std::thread::sleep(Duration::from_millis(2));
        assert_eq!(enumerate_tori_with(9, o).unwrap_err(), Error::TimeBudgetExceeded(0));
    }

    #[test]
    fn theorem31_k3() {
        let r = census_verify_theorem31_with(3, opts(Strategy::Orderly)).unwrap();
        assert!(r.holds());
        assert_eq!(r.type_counts, vec![(7, 1)]);
    }

    #[test]
    fn summary_counts_types() {
        let r = enumerate_tori(8).unwrap();
        let s = census_summary(8, &r);
        assert_eq!(s.count, r.len());
        assert_eq!(s.by_type.values().sum::<usize>(), r.len());
    }
}
