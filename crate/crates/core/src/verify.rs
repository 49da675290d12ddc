//! Verification suites. Each suite is a list of named checks that pass or fail.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice;
use crate::length::{self, DEFAULT_DP_CAP};
use crate::monoid::{
    predicted_face_lattice, proper_generators_criterion, proper_generators_slab, MonoidCtx, SlabRoute,
    DEFAULT_POINT_CAP,
};
use crate::oracle::{brute_positive_length, LengthOracle, DEFAULT_BFS_CAP, DEFAULT_R_MAX};
use crate::polytope::{
    adjacent_facets, all_faces, barycenter, closure_data, enumerate_facets, face_contains, face_roots,
    geometric_neighbours, index_set, level_roots, maximal_roots, FaceSpec,
};
use crate::rootcore::{all_types, CartanType, RootSystem};
use crate::vector::{qi, LatticeVec, Rational, SimpleSet};
use crate::weyl::{parabolic_order, stabilizer_simple_roots, WeylWord, DEFAULT_ORBIT_CAP};

pub const SUITES: &[&str] = &[
    "length-oracle",
    "intro",
    "theoremB",
    "normality",
    "integral-closure",
    "typeA",
    "typeC",
    "strictness",
    "geometry",
    "lattice",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Largest rank for the suites that sweep over all types.
    pub max_rank: usize,
    /// Level bound for the proper-generator search; stability is re-checked at bound + 1.
    pub level_bound: Rational,
    /// Sampled points per type for the sampled part of the oracle suite.
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { max_rank: 4, level_bound: qi(7), samples: 500, seed: 0x5eed_2024 }
    }
}

struct Collector {
    checks: Vec<Check>,
}

impl Collector {
    fn new() -> Self {
        Collector { checks: Vec::new() }
    }

    fn run(&mut self, name: impl Into<String>, f: impl FnOnce() -> Result<Outcome>) {
        let (status, detail) = match f() {
            Ok(Outcome::Pass(d)) => (Status::Pass, d),
            Ok(Outcome::Fail(d)) => (Status::Fail, d),
            Err(e) => (Status::Fail, format!("error: {e}")),
        };
        self.checks.push(Check { name: name.into(), status, detail });
    }

    fn finish(self, suite: &str) -> SuiteReport {
        SuiteReport { suite: suite.to_string(), checks: self.checks }
    }
}

enum Outcome {
    Pass(String),
    Fail(String),
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    if ok {
        Outcome::Pass(detail.into())
    } else {
        Outcome::Fail(detail.into())
    }
}

fn sys(name: &str) -> Result<RootSystem> {
    RootSystem::new(name.parse::<CartanType>()?)
}

/// Every integer point of `[lo, hi]^rank`.
fn box_points(rank: usize, lo: i64, hi: i64) -> Vec<LatticeVec> {
    let w = hi - lo + 1;
    let n = (w as usize).pow(rank as u32);
    (0..n)
        .map(|code| {
            let mut c = code as i64;
            LatticeVec(
                (0..rank)
                    .map(|_| {
                        let d = c % w + lo;
                        c /= w;
                        d
                    })
                    .collect(),
            )
        })
        .collect()
}

pub fn run_suite(name: &str, opts: &VerifyOptions) -> Result<SuiteReport> {
    Ok(match name {
        "length-oracle" => length_oracle(opts),
        "intro" => intro(),
        "theoremB" => theorem_b(opts),
        "normality" => normality(opts),
        "integral-closure" => integral_closure(opts),
        "typeA" => type_a(),
        "typeC" => type_c(),
        "strictness" => strictness(),
        "geometry" => geometry(opts),
        "lattice" => lattice_suite(opts),
        _ => return Err(Error::Parse(format!("unknown suite {name:?}"))),
    })
}

pub fn run_all(opts: &VerifyOptions) -> Vec<SuiteReport> {
    SUITES.iter().map(|s| run_suite(s, opts).expect("known suite")).collect()
}

/// Compares the formula with brute force. The brute-force depth is the default `r_max`,
/// raised to the largest formula value on the point set.
fn oracle_compare(rs: &RootSystem, pts: &[LatticeVec]) -> Result<Outcome> {
    let mut formula = Vec::with_capacity(pts.len());
    for g in pts {
        formula.push(length::length_value(rs, g)?);
    }
    let max_len = formula.iter().copied().max().unwrap_or(0);
    let r_max = DEFAULT_R_MAX.max(max_len as usize);
    let o = LengthOracle::new(rs, r_max);
    for (g, &f) in pts.iter().zip(&formula) {
        let b = o.length(g)?;
        if b as i64 != f {
            return Ok(Outcome::Fail(format!("{g}: formula {f}, brute force {b}")));
        }
    }
    Ok(Outcome::Pass(format!("{} points, max length {max_len}, r_max {r_max}", pts.len())))
}

fn length_oracle(opts: &VerifyOptions) -> SuiteReport {
    let mut c = Collector::new();
    for t in ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2"] {
        c.run(format!("{t} box [-3,3]"), || {
            let rs = sys(t)?;
            if rs.rank() > opts.max_rank {
                return Ok(Outcome::Pass("outside rank range".into()));
            }
            oracle_compare(&rs, &box_points(rs.rank(), -3, 3))
        });
    }
    if opts.max_rank >= 4 {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        for t in ["A4", "B4", "C4", "D4", "F4"] {
            let pts: Vec<LatticeVec> =
                (0..opts.samples).map(|_| LatticeVec((0..4).map(|_| rng.gen_range(-3..=3)).collect())).collect();
            c.run(format!("{t} {} samples", opts.samples), || oracle_compare(&sys(t)?, &pts));
        }
    }
    c.finish("length-oracle")
}

fn intro() -> SuiteReport {
    let mut c = Collector::new();
    c.run("B3 alpha1+2alpha3", || {
        let rs = sys("B3")?;
        let g = LatticeVec(vec![1, 0, 2]);
        let len = length::length_value(&rs, &g)?;
        let pos = length::positive_length(&rs, &g, DEFAULT_DP_CAP)?;
        let brute = LengthOracle::new(&rs, DEFAULT_R_MAX).length(&g)?;
        let brute_pos = brute_positive_length(&rs, &g, DEFAULT_BFS_CAP)?;
        let dec = length::decompose(&rs, &g)?;
        let ok = len == 2 && brute == 2 && pos == 3 && brute_pos == 3 && dec.len() == 2;
        Ok(outcome(ok, format!("length {len} (brute {brute}), positive length {pos} (brute {brute_pos})")))
    });
    c.finish("intro")
}

fn weights(rs: &RootSystem, cs: &[Vec<i64>]) -> Result<Vec<LatticeVec>> {
    cs.iter().map(|c| rs.from_weight_coords(c)).collect()
}

fn theorem_b(opts: &VerifyOptions) -> SuiteReport {
    let mut c = Collector::new();
    let b = opts.level_bound.clone();
    let b1 = &b + qi(1);
    let mut expected: Vec<(String, usize, Vec<Vec<i64>>)> = vec![
        ("B3".into(), 3, vec![vec![0, 0, 2]]),
        ("G2".into(), 1, vec![vec![1, 0], vec![2, 0]]),
    ];
    let mut types: Vec<String> = all_types(5).into_iter().map(|t| t.to_string()).collect();
    if !types.iter().any(|t| t == "F4") {
        types.push("F4".into());
    }
    types.push("E6".into());
    for t in &types {
        let Ok(rs) = sys(t) else { continue };
        for a in maximal_roots(&rs) {
            if !expected.iter().any(|(n, i, _)| n == t && *i == a + 1) {
                expected.push((t.clone(), a + 1, Vec::new()));
            }
        }
    }
    for (t, a, dom) in &expected {
        c.run(format!("{t} F(alpha{a}) slab"), || {
            let rs = sys(t)?;
            let want = weights(&rs, dom)?;
            let r7 = proper_generators_slab(&rs, a - 1, &b, None, DEFAULT_POINT_CAP)?;
            let r8 = proper_generators_slab(&rs, a - 1, &b1, None, DEFAULT_POINT_CAP)?;
            let ok = r7.generators == want && r8.generators == r7.generators;
            Ok(outcome(ok, format!("{} generators, stable at the next bound: {}", r7.generators.len(), r8.generators == r7.generators)))
        });
    }
    let exceptional: [(&str, usize, Vec<Vec<i64>>); 2] = [
        ("E7", 2, vec![vec![0, 2, 0, 0, 0, 0, 0]]),
        ("E8", 2, vec![vec![0, 1, 0, 0, 0, 0, 0, 0], vec![0, 2, 0, 0, 0, 0, 0, 0]]),
    ];
    for (t, a, dom) in &exceptional {
        c.run(format!("{t} F(alpha{a}) certificates"), || {
            let rs = sys(t)?;
            let want = weights(&rs, dom)?;
            let r = proper_generators_criterion(&rs, a - 1)?;
            Ok(outcome(r.generators == want, format!("{} candidates, {} certified", r.candidates, r.generators.len())))
        });
        c.run(format!("{t} F(alpha{a}) stabilizer-dominant slab"), || {
            let rs = sys(t)?;
            let want = weights(&rs, dom)?;
            let r7 = proper_generators_slab(&rs, a - 1, &b, Some(SlabRoute::Dominant), DEFAULT_POINT_CAP)?;
            let r8 = proper_generators_slab(&rs, a - 1, &b1, Some(SlabRoute::Dominant), DEFAULT_POINT_CAP)?;
            Ok(outcome(r7.generators == want && r8.generators == want, format!("{} generators", r7.generators.len())))
        });
    }
    // the remaining coordinate facets of E7 and E8 by the same dominant slab
    for (t, a) in [("E7", 7usize), ("E8", 1)] {
        c.run(format!("{t} F(alpha{a}) stabilizer-dominant slab"), || {
            let rs = sys(t)?;
            let r = proper_generators_slab(&rs, a - 1, &b1, Some(SlabRoute::Dominant), DEFAULT_POINT_CAP)?;
            Ok(outcome(r.generators.is_empty(), format!("{} generators", r.generators.len())))
        });
    }
    c.finish("theoremB")
}

/// The facets with proper generators, as (type, 0-based root).
const EXCEPTIONAL: [(&str, usize); 4] = [("B3", 2), ("E7", 1), ("E8", 1), ("G2", 0)];

fn normality(opts: &VerifyOptions) -> SuiteReport {
    let mut c = Collector::new();
    let four = qi(4);
    for t in all_types(opts.max_rank) {
        c.run(format!("{t} all faces"), || {
            let rs = RootSystem::new(t)?;
            let faces = all_faces(&rs, DEFAULT_ORBIT_CAP)?;
            let mut pts = 0;
            for f in &faces {
                let ctx = MonoidCtx::new(&rs, f.clone())?;
                let d = ctx.is_normal(&four, Some(SlabRoute::Box), DEFAULT_POINT_CAP)?;
                if !d.holds {
                    return Ok(Outcome::Fail(format!("{f:?}: {}", d.witness.unwrap())));
                }
                pts += d.checked;
            }
            Ok(Outcome::Pass(format!("{} faces, {pts} points", faces.len())))
        });
    }
    for (t, a) in EXCEPTIONAL {
        c.run(format!("{t} F(alpha{})", a + 1), || {
            let rs = sys(t)?;
            let ctx = MonoidCtx::facet(&rs, a, WeylWord::identity())?;
            let d = ctx.is_normal(&four, None, DEFAULT_POINT_CAP)?;
            Ok(outcome(d.holds, format!("{} points", d.checked)))
        });
    }
    c.finish("normality")
}

fn integral_closure(opts: &VerifyOptions) -> SuiteReport {
    let mut c = Collector::new();
    let four = qi(4);
    for t in all_types(opts.max_rank) {
        let Ok(rs) = RootSystem::new(t) else { continue };
        for a in maximal_roots(&rs) {
            c.run(format!("{t} F(alpha{})", a + 1), || {
                let ctx = MonoidCtx::facet(&rs, a, WeylWord::identity())?;
                let d = ctx.is_integrally_closed(&four, None, DEFAULT_POINT_CAP)?;
                let m = rs.marks()[a];
                let witness = d.witness.as_ref().map_or(String::new(), |w| format!(", witness {w}"));
                Ok(outcome(d.holds == (m == 1), format!("m = {m}, closed: {}{witness}", d.holds)))
            });
        }
    }
    c.finish("integral-closure")
}

fn type_a() -> SuiteReport {
    let mut c = Collector::new();
    for n in 1..=5 {
        let t = format!("A{n}");
        c.run(format!("{t} box [0,3]"), || {
            let rs = sys(&t)?;
            let pts = box_points(n, 0, 3);
            for g in &pts {
                let l = length::length_value(&rs, g)?;
                let p = length::positive_length(&rs, g, DEFAULT_DP_CAP)?;
                let h = length::horizontal_length_type_a(&rs, g)?;
                if l != p || p != h {
                    return Ok(Outcome::Fail(format!("{g}: length {l}, positive {p}, horizontal {h}")));
                }
            }
            Ok(Outcome::Pass(format!("{} points", pts.len())))
        });
    }
    c.finish("typeA")
}

fn type_c() -> SuiteReport {
    let mut c = Collector::new();
    for n in 2..=4 {
        let t = format!("C{n}");
        c.run(format!("{t} box [0,3]"), || {
            let rs = sys(&t)?;
            let pts = box_points(n, 0, 3);
            for g in &pts {
                let l = length::length_value(&rs, g)?;
                let p = length::positive_length(&rs, g, DEFAULT_DP_CAP)?;
                if l != p {
                    return Ok(Outcome::Fail(format!("{g}: length {l}, positive {p}")));
                }
            }
            Ok(Outcome::Pass(format!("{} points", pts.len())))
        });
    }
    c.finish("typeC")
}

/// (type, α, β) with `α − β` of length 2 and positive length 3.
pub const STRICTNESS_ROWS: [(&str, &[i64], &[i64]); 6] = [
    ("B3", &[1, 1, 2], &[0, 1, 0]),
    ("B4", &[0, 1, 1, 2], &[0, 0, 1, 0]),
    ("D4", &[1, 1, 1, 1], &[0, 1, 0, 0]),
    ("E6", &[0, 1, 1, 1, 1, 0], &[0, 0, 0, 1, 0, 0]),
    ("F4", &[1, 1, 2, 0], &[0, 1, 0, 0]),
    ("G2", &[3, 1], &[0, 1]),
];

fn strictness() -> SuiteReport {
    let mut c = Collector::new();
    for (t, a, b) in STRICTNESS_ROWS {
        c.run(t, || {
            let rs = sys(t)?;
            let (a, b) = (LatticeVec(a.to_vec()), LatticeVec(b.to_vec()));
            if !rs.is_root(&a) || !rs.is_root(&b) {
                return Ok(Outcome::Fail("table entry is not a pair of roots".into()));
            }
            let g = a.sub(&b);
            let l = length::length_value(&rs, &g)?;
            let p = length::positive_length(&rs, &g, DEFAULT_DP_CAP)?;
            let bp = brute_positive_length(&rs, &g, DEFAULT_BFS_CAP)?;
            Ok(outcome(l == 2 && p == 3 && bp == 3, format!("gamma {g}: length {l}, positive length {p} (brute {bp})")))
        });
    }
    c.finish("strictness")
}

fn geometry(opts: &VerifyOptions) -> SuiteReport {
    let mut c = Collector::new();
    for (t, n) in [("A2", 6usize), ("A3", 14), ("B3", 14), ("C3", 8), ("G2", 6)] {
        c.run(format!("{t} facet count"), || {
            let rs = sys(t)?;
            let got = enumerate_facets(&rs)?.len();
            let arith = orbit_arithmetic(&rs);
            Ok(outcome(got == n && arith == n as u128, format!("{got} facets, orbit arithmetic {arith}")))
        });
    }
    for t in all_types(opts.max_rank) {
        let Ok(rs) = RootSystem::new(t) else { continue };
        c.run(format!("{t} facet orbits"), || {
            let got = enumerate_facets(&rs)?.len() as u128;
            let arith = orbit_arithmetic(&rs);
            Ok(outcome(got == arith, format!("{got} facets")))
        });
        c.run(format!("{t} half-space certificate"), || halfspace_certificate(&rs));
        c.run(format!("{t} barycenter stabilizers"), || {
            for a in index_set(&rs) {
                let st = stabilizer_simple_roots(&rs, &barycenter(&rs, a)?)?;
                let star = closure_data(&rs, a)?.star;
                if st != star {
                    return Ok(Outcome::Fail(format!("{a}: stabilizer {st}, expected {star}")));
                }
            }
            Ok(Outcome::Pass(format!("{} index sets", index_set(&rs).len())))
        });
        c.run(format!("{t} equal standard faces"), || {
            let l = rs.rank();
            for a in SimpleSet::all(l) {
                let ra = level_roots(&rs, a);
                let cd = closure_data(&rs, a)?;
                for b in SimpleSet::all(l) {
                    let same = level_roots(&rs, b) == ra;
                    let pred = cd.boundary.is_subset(b) && b.is_subset(cd.closure);
                    if same != pred {
                        return Ok(Outcome::Fail(format!("A = {a}, B = {b}")));
                    }
                }
            }
            Ok(Outcome::Pass(format!("{} pairs", 1u64 << (2 * l))))
        });
        if rs.rank() >= 2 {
            c.run(format!("{t} adjacency"), || {
                let all = enumerate_facets(&rs)?;
                for a in maximal_roots(&rs) {
                    let f = all
                        .iter()
                        .find(|f| f.alpha == a && f.tau.is_empty())
                        .ok_or_else(|| Error::Inconsistent("standard facet missing".into()))?;
                    let geo: BTreeSet<Vec<i64>> =
                        geometric_neighbours(&rs, f, &all).into_iter().map(|g| g.dual).collect();
                    let cls: BTreeSet<Vec<i64>> =
                        adjacent_facets(&rs, a)?.into_iter().map(|g| g.facet.dual).collect();
                    if geo != cls {
                        return Ok(Outcome::Fail(format!("alpha{}: {} vs {}", a + 1, geo.len(), cls.len())));
                    }
                }
                Ok(Outcome::Pass(String::new()))
            });
        }
    }
    c.finish("geometry")
}

fn orbit_arithmetic(rs: &RootSystem) -> u128 {
    let full = SimpleSet::full(rs.rank());
    maximal_roots(rs)
        .into_iter()
        .map(|a| rs.cartan_type().weyl_order() / parabolic_order(rs, full.without(a)))
        .sum()
}

fn halfspace_certificate(rs: &RootSystem) -> Result<Outcome> {
    let facets = enumerate_facets(rs)?;
    for f in &facets {
        let mut tight = Vec::new();
        for b in rs.roots() {
            let v = f.value(&b.0);
            if v > qi(1) {
                return Ok(Outcome::Fail(format!("{b} outside a half-space")));
            }
            if v == qi(1) {
                tight.push(b.clone());
            }
        }
        tight.sort();
        if tight != face_roots(rs, &f.face())? {
            return Ok(Outcome::Fail(format!("tight set of facet alpha{} {:?}", f.alpha + 1, f.tau)));
        }
    }
    Ok(Outcome::Pass(format!("{} facets", facets.len())))
}

fn lattice_suite(opts: &VerifyOptions) -> SuiteReport {
    let mut c = Collector::new();
    for t in all_types(opts.max_rank) {
        let Ok(rs) = RootSystem::new(t) else { continue };
        c.run(format!("{t} face lattices"), || {
            for a in index_set(&rs) {
                if a.is_empty() {
                    continue;
                }
                let ctx = MonoidCtx::new(&rs, FaceSpec::standard(&rs, a)?)?;
                if ctx.zbasis != predicted_face_lattice(&rs, a)? {
                    return Ok(Outcome::Fail(format!("A = {a}")));
                }
            }
            Ok(Outcome::Pass(String::new()))
        });
        c.run(format!("{t} subface lattices"), || subface_lattices(&rs));
        c.run(format!("{t} minimal elements off the face lattice"), || {
            let bound = opts.level_bound.clone();
            let mut n = 0;
            for a in maximal_roots(&rs) {
                for f in crate::polytope::facets_of(&rs, a, DEFAULT_ORBIT_CAP)? {
                    let ctx = MonoidCtx::new(&rs, f.face())?;
                    for g in ctx.minimal_elements(&bound)? {
                        n += 1;
                        if ctx.in_zspan(&g) {
                            return Ok(Outcome::Fail(format!("{g} lies in Z(F)")));
                        }
                    }
                }
            }
            Ok(Outcome::Pass(format!("{n} minimal elements")))
        });
        if rs.rank() <= 3 {
            c.run(format!("{t} slab decomposition"), || slab_decomposition(&rs));
        }
    }
    for (t, a) in EXCEPTIONAL {
        c.run(format!("{t} F(alpha{}) minimal elements off the face lattice", a + 1), || {
            let rs = sys(t)?;
            let ctx = MonoidCtx::facet(&rs, a, WeylWord::identity())?;
            let mins = ctx.minimal_elements(&opts.level_bound)?;
            let bad: Vec<&LatticeVec> = mins.iter().filter(|g| ctx.in_zspan(g)).collect();
            Ok(outcome(bad.is_empty(), format!("{} minimal elements", mins.len())))
        });
    }
    c.finish("lattice")
}

/// `Z(V(F')) = Z(V(F)) ∩ span(F')` for each standard face `F` and each face `F' ⊆ F`.
/// Pairs `(τF, τF')` reduce to these by applying `τ⁻¹`.
fn subface_lattices(rs: &RootSystem) -> Result<Outcome> {
    let faces = all_faces(rs, DEFAULT_ORBIT_CAP)?;
    let mut pairs = 0;
    for a in index_set(rs) {
        if a.is_empty() {
            continue;
        }
        let outer = FaceSpec::standard(rs, a)?;
        let zf: Vec<Vec<i64>> = face_roots(rs, &outer)?.into_iter().map(|v| v.0).collect();
        let zf = lattice::hnf(&zf);
        for inner in &faces {
            if !face_contains(rs, &outer, inner)? {
                continue;
            }
            pairs += 1;
            let v: Vec<Vec<i64>> = face_roots(rs, inner)?.into_iter().map(|v| v.0).collect();
            let normals = lattice::span_normals(&v, rs.rank());
            if lattice::hnf(&v) != lattice::intersect_with_subspace(&zf, &normals) {
                return Ok(Outcome::Fail(format!("{a} over {inner:?}")));
            }
        }
    }
    Ok(Outcome::Pass(format!("{pairs} pairs")))
}

/// On the slab of each standard facet: `N ⊆ Z`, `N ⊆ M`, and every point of `M` is a
/// minimal element (or zero) plus an element of `N`.
fn slab_decomposition(rs: &RootSystem) -> Result<Outcome> {
    let bound = qi(4);
    let mut pts = 0;
    for a in maximal_roots(rs) {
        let ctx = MonoidCtx::facet(rs, a, WeylWord::identity())?;
        let mins = ctx.minimal_elements(&bound)?;
        for p in ctx.slab_points(&bound, DEFAULT_POINT_CAP)? {
            pts += 1;
            let in_n = ctx.in_nspan(&p).is_some();
            if in_n && !ctx.in_zspan(&p) {
                return Ok(Outcome::Fail(format!("{p} in N but not in Z")));
            }
            if in_n {
                continue;
            }
            let split = mins.iter().any(|g| {
                let rest = p.sub(g);
                ctx.in_m(&rest) && ctx.in_nspan(&rest).is_some()
            });
            if !split {
                return Ok(Outcome::Fail(format!("{p} has no decomposition")));
            }
        }
        // N-side: sums of face roots up to the bound lie in M
        let mut frontier: BTreeSet<LatticeVec> = [LatticeVec::zero(rs.rank())].into();
        for _ in 0..4 {
            let mut next = BTreeSet::new();
            for s in &frontier {
                for v in &ctx.vroots {
                    next.insert(s.add(v));
                }
            }
            if next.iter().any(|s| !ctx.in_m(s)) {
                return Ok(Outcome::Fail("a sum of face roots left the cone".into()));
            }
            frontier = next;
        }
    }
    Ok(Outcome::Pass(format!("{pts} points")))
}
