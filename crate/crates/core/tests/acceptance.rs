//! One PASS/FAIL line per acceptance criterion. Run with
//! `cargo test --release --test acceptance`.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use knotted_tori::canonical::{is_automorphism, is_isomorphic, CanonicalForm};
use knotted_tori::census::{
    census_verify_theorem31, enumerate_tori, enumerate_tori_with, CensusOptions, CensusRecord, Strategy,
};
use knotted_tori::generators::{
    minimal_torus_3k, minimal_torus_hamiltonian, minimal_torus_symmetry, moebius_torus, tube_complex,
};
use knotted_tori::geometry::cyclic::{cyclic_polytope_realization, satisfies_gale_evenness};
use knotted_tori::geometry::{auto_tube, complement_construction, load_stick_knot, verify_embedding, StickKnot};
use knotted_tori::knot::{classify_cycle_in_tube, core_curve, knot_determinant, CycleClass};
use knotted_tori::report::realization_report;
use knotted_tori::topology::{
    bound_strict_gap, lower_bound, marked_type, shortest_nonseparating, stick_number_and_type, CycleAnalyzer,
};
use knotted_tori::{Cycle, SimplicialTorus};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn trefoil() -> StickKnot {
    load_stick_knot(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/trefoil6.txt")).unwrap()
}

struct Census {
    /// Records for n = 7..=10.
    by_n: Vec<(usize, Vec<CensusRecord>, Duration)>,
}

impl Census {
    fn compute() -> Self {
        let by_n = (7..=10)
            .map(|n| {
                let t = Instant::now();
                let r = enumerate_tori(n).expect("census runs");
                (n, r, t.elapsed())
            })
            .collect();
        Self { by_n }
    }

    fn get(&self, n: usize) -> &[CensusRecord] {
        &self.by_n.iter().find(|e| e.0 == n).unwrap().1
    }

    fn elapsed(&self, n: usize) -> Duration {
        self.by_n.iter().find(|e| e.0 == n).unwrap().2
    }
}

fn criterion_1(c: &Census) -> Check {
    let recs = c.get(7);
    ensure(recs.len() == 1, format!("{} tori on 7 vertices", recs.len()))?;
    let t = recs[0].torus();
    ensure(is_isomorphic(&t, &moebius_torus()).map_err(err)?.is_some(), "not the Möbius torus")?;
    let ty = stick_number_and_type(&t).map_err(err)?;
    ensure(ty.label() == "3x3", format!("type {}", ty.label()))?;
    ensure(c.elapsed(7) < Duration::from_secs(60), "slower than one minute")?;
    Ok(format!("1 torus, Möbius, type 3x3, {:.2?}", c.elapsed(7)))
}

fn forms(recs: &[CensusRecord]) -> BTreeSet<CanonicalForm> {
    recs.iter().map(CensusRecord::form).collect()
}

fn criterion_2(c: &Census) -> Check {
    let count = |n: usize| c.get(n).iter().filter(|r| r.torus_type == (3, 4)).count();
    ensure(count(7) + count(8) + count(9) == 0, "a 3x4 torus below 10 vertices")?;
    let hits: Vec<&CensusRecord> = c.get(10).iter().filter(|r| r.torus_type == (3, 4)).collect();
    ensure(hits.len() == 1, format!("{} tori of type 3x4 on 10 vertices", hits.len()))?;
    ensure(
        is_isomorphic(&hits[0].torus(), &minimal_torus_3k(4).unwrap()).map_err(err)?.is_some(),
        "not isomorphic to minimal_torus_3k(4)",
    )?;
    let report = census_verify_theorem31(4).map_err(err)?;
    ensure(report.holds(), format!("{report:?}"))?;
    let exhaustive = CensusOptions { strategy: Strategy::Exhaustive, time_budget: None };
    for n in [8, 9] {
        let other = enumerate_tori_with(n, exhaustive).map_err(err)?;
        ensure(
            forms(&other) == forms(c.get(n)) && other.len() == c.get(n).len(),
            format!("strategies disagree at n = {n}"),
        )?;
    }
    let total: Duration = (7..=10).map(|n| c.elapsed(n)).sum();
    ensure(total < Duration::from_secs(30 * 60), "over 30 minutes")?;
    Ok(format!(
        "counts 1/{}/{}/{}, unique 3x4 at n = 10, strategies agree at n = 8, 9, {total:.2?}",
        c.get(8).len(),
        c.get(9).len(),
        c.get(10).len()
    ))
}

fn criterion_3() -> Check {
    let t0 = Instant::now();
    for k in 3..=12 {
        let t = minimal_torus_3k(k).map_err(err)?;
        ensure(t.n() == 3 * k - 2, format!("k = {k}: {} vertices", t.n()))?;
        let ty = stick_number_and_type(&t).map_err(err)?;
        ensure((ty.m, ty.s) == (3, k), format!("k = {k}: type {}", ty.label()))?;
        ensure(t.degrees().iter().all(|&d| d == 6), format!("k = {k}: not 6-regular"))?;
        ensure(is_automorphism(&t, &minimal_torus_symmetry(k)), format!("k = {k}: v -> v+3 is no automorphism"))?;
        let ham = minimal_torus_hamiltonian(k);
        ensure(ham.len() == t.n() && Cycle::new(&t, ham).is_ok(), format!("k = {k}: no Hamiltonian cycle"))?;
    }
    ensure(t0.elapsed() < Duration::from_secs(60), "slower than one minute")?;
    Ok(format!("k = 3..12, {:.2?}", t0.elapsed()))
}

fn criterion_4(c: &Census) -> Check {
    let mut checked = 0;
    for (n, recs, _) in &c.by_n {
        for r in recs {
            let (m, s) = r.torus_type;
            ensure(m <= s, format!("m > s on {n} vertices"))?;
            let b = lower_bound(m as i64, s as i64).map_err(err)?;
            ensure(*n as i64 >= b, format!("{n} < bound {b} for type {m}x{s}"))?;
            checked += 1;
        }
    }
    for k in 6..=20 {
        for m in 4..=k {
            ensure(bound_strict_gap(m, k).map_err(err)?, format!("gap fails at ({m}, {k})"))?;
        }
    }
    ensure(lower_bound(7, 12).map_err(err)? == 61, "lower_bound(7,12) != 61")?;
    ensure(lower_bound(4, 6).map_err(err)? == 17, "lower_bound(4,6) != 17")?;
    Ok(format!("{checked} census tori within the bound, gap holds for 6 <= k <= 20"))
}

fn criterion_5() -> Check {
    let t0 = Instant::now();
    let tri = StickKnot::parse("0 0 0\n1 0 0\n0 1 0\n").unwrap();
    let (_, small) = auto_tube(&tri).map_err(err)?;
    ensure(small.complex().n() == 9 && verify_embedding(&small).embedded, "triangle tube")?;
    ensure(knot_determinant(&core_curve(&small).map_err(err)?).map_err(err)? == 1, "unknot determinant")?;

    let knot = trefoil();
    ensure(common::fox_determinant(knot.vertices()) == 3, "coordinates are not a trefoil")?;
    let (eps, tube) = auto_tube(&knot).map_err(err)?;
    ensure(tube.complex().n() == 18 && tube.complex().faces().len() == 36, "trefoil tube size")?;
    ensure(verify_embedding(&tube).embedded, "trefoil tube not embedded")?;
    let core = core_curve(&tube).map_err(err)?;
    ensure(core == knot, "core differs from the knot")?;
    ensure(knot_determinant(&core).map_err(err)? == 3, "core determinant")?;
    let short = CycleAnalyzer::new(tube.complex()).map_err(err)?.nonseparating_cycles_up_to(5);
    for c in &short {
        let cls = classify_cycle_in_tube(&tube, c).map_err(err)?;
        ensure(cls.class == CycleClass::Meridian, format!("non-meridian cycle {:?} of length {}", c.labels(), c.len()))?;
        ensure(cls.linking_number.abs() == 1, "meridian not linked once with the core")?;
    }
    ensure(t0.elapsed() < Duration::from_secs(300), "slower than five minutes")?;
    Ok(format!(
        "9-vertex unknot tube; trefoil tube 18 vertices, eps = {eps}, determinant 3, {} short cycles all meridians, {:.2?}",
        short.len(),
        t0.elapsed()
    ))
}

fn criterion_6() -> Check {
    let t0 = Instant::now();
    let m = complement_construction(&trefoil()).map_err(err)?;
    let r = m.complex().report();
    ensure(r.vertices == 22, format!("{} vertices", r.vertices))?;
    ensure(r.faces == 44 && r.euler == 0 && r.orientable && r.genus == 1, format!("{r:?}"))?;
    ensure(verify_embedding(&m).embedded, "not embedded")?;
    Ok(format!("22 vertices, 44 faces, orientable genus 1, embedded, {:.2?}", t0.elapsed()))
}

fn criterion_7() -> Check {
    let mut dets = Vec::new();
    for k in 3..=6 {
        let r = cyclic_polytope_realization(k).map_err(err)?;
        let n = 3 * k - 2;
        ensure(r.containing_facets.len() == r.mesh.complex().faces().len(), "faces without facets")?;
        for (f, facet) in &r.containing_facets {
            ensure(
                f.iter().all(|v| facet.contains(v)) && satisfies_gale_evenness(n, facet),
                format!("k = {k}: {f:?} not in facet {facet:?}"),
            )?;
        }
        ensure(r.embedding.embedded, format!("k = {k}: not embedded"))?;
        let report = realization_report(&r.mesh, &r.embedding).map_err(err)?;
        let det = report.core.map(|c| c.determinant);
        ensure(det == Some(1), format!("k = {k}: core determinant {det:?}"))?;
        dets.push(det.unwrap());
    }
    Ok(format!("k = 3..6 pass Gale evenness and embed; core determinants {dets:?}"))
}

fn criterion_8(c: &Census) -> Check {
    let mut complexes: Vec<SimplicialTorus> = vec![moebius_torus()];
    for k in 3..=4 {
        complexes.push(minimal_torus_3k(k).unwrap());
        complexes.push(tube_complex(k).unwrap());
    }
    for (_, recs, _) in &c.by_n {
        complexes.extend(recs.iter().map(CensusRecord::torus));
    }
    for t in &complexes {
        let (n, f) = (t.n(), t.faces());
        let (m, w) = shortest_nonseparating(t).map_err(err)?;
        ensure(m == common::oracle_shortest(n, f), format!("shortest cycle differs on {t}"))?;
        let ty = stick_number_and_type(t).map_err(err)?;
        ensure((ty.m, ty.s) == common::oracle_type(n, f), format!("type differs on {t}"))?;
        let mt = marked_type(t, &w).map_err(err)?;
        ensure((mt.m_mark, mt.k_mark) == common::oracle_marked(n, f, w.vertices()), format!("marked type differs on {t}"))?;
    }
    Ok(format!("{} complexes with at most 12 vertices", complexes.len()))
}

fn run(id: usize, f: impl FnOnce() -> Check) -> bool {
    let t0 = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
    });
    match outcome {
        Ok(msg) => {
            println!("criterion {id}: PASS ({msg}) [{:.2?}]", t0.elapsed());
            true
        }
        Err(msg) => {
            println!("criterion {id}: FAIL ({msg}) [{:.2?}]", t0.elapsed());
            false
        }
    }
}

fn main() {
    let census = Census::compute();
    let results = [
        run(1, || criterion_1(&census)),
        run(2, || criterion_2(&census)),
        run(3, criterion_3),
        run(4, || criterion_4(&census)),
        run(5, criterion_5),
        run(6, criterion_6),
        run(7, criterion_7),
        run(8, || criterion_8(&census)),
    ];
    let failed: Vec<usize> = results.iter().enumerate().filter(|(_, &ok)| !ok).map(|(i, _)| i + 1).collect();
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
