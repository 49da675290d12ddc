//! Monoids spanned by the roots on a face: membership, minimal elements, normality.
//!
//! For a face `F` with roots `V(F)`, `N(F)` is the monoid generated by `V(F)`, `Z(F)` its
//! lattice, and `M(F)` the root-lattice points of the cone over `V(F)`.

use std::collections::{BTreeSet, HashSet};
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice;
use crate::polytope::{
    closure_data, enumerate_facets, face_roots, geometric_neighbours, is_maximal, maximal_roots,
    moved_coweight, psi_and_nabla, FaceSpec, Facet, PsiData,
};
use crate::rootcore::{Family, RootSystem};
use crate::vector::{ceil_div, floor_div, floor_to_i64, fmt_rational, q, qi, LatticeVec, Rational, SimpleSet};
use crate::weyl::{parabolic_orbit, WeylWord, DEFAULT_ORBIT_CAP};

/// Default level bound for slab searches.
pub const DEFAULT_LEVEL_BOUND: i64 = 7;

/// Default cap on the number of lattice points scanned by one slab search.
pub const DEFAULT_POINT_CAP: usize = 200_000_000;

/// Largest level `max_F (λ_F, γ)` over all facets, through the dominant conjugate.
pub fn max_level(rs: &RootSystem, g: &[i64]) -> Rational {
    let d = rs.dominant(g, SimpleSet::full(rs.rank()));
    let m = rs.marks();
    maximal_roots(rs).into_iter().map(|a| q(d[a], m[a])).max().unwrap()
}

/// How slab points are produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SlabRoute {
    /// Scan the full box of root coordinates.
    Box,
    /// Scan points dominant for the stabilizer of a standard facet, then expand orbits.
    Dominant,
}

/// Context for one face.
#[derive(Debug)]
pub struct MonoidCtx {
    rs: RootSystem,
    pub face: FaceSpec,
    /// Set when the face is a facet.
    pub facet: Option<Facet>,
    pub vroots: Vec<LatticeVec>,
    /// A facet containing the face; its functional is 1 on `vroots`.
    pub level: Facet,
    pub separators: Option<PsiData>,
    pub zbasis: Vec<Vec<i64>>,
    /// Normals of the span of the face (empty for facets).
    normals: Vec<Vec<i64>>,
    ridges: OnceLock<Result<Vec<Vec<i64>>>>,
}

impl MonoidCtx {
    pub fn new(rs: &RootSystem, face: FaceSpec) -> Result<MonoidCtx> {
        let face = FaceSpec::new(rs, face.a, face.tau)?;
        if face.a.is_empty() {
            return Err(Error::NotInIndexSet("{}".into()));
        }
        let vroots = face_roots(rs, &face)?;
        let alpha = face
            .a
            .iter()
            .find(|&i| is_maximal(rs, i))
            .ok_or_else(|| Error::Inconsistent(format!("{}: face {} has no maximal root", rs.name(), face.a)))?;
        let level = Facet {
            alpha,
            tau: face.tau.clone(),
            dual: moved_coweight(rs, &face.tau, alpha),
            denom: rs.marks()[alpha],
        };
        if vroots.iter().any(|v| level.eval_num(&v.0) != level.denom) {
            return Err(Error::Inconsistent("level functional not tight on the face".into()));
        }
        let cols: Vec<Vec<i64>> = vroots.iter().map(|v| v.0.clone()).collect();
        let zbasis = lattice::hnf(&cols);
        let is_facet = face.is_facet();
        let normals = if is_facet { Vec::new() } else { lattice::span_normals(&cols, rs.rank()) };
        let (facet, separators) = if is_facet {
            let facet = Facet { alpha, tau: face.tau.clone(), dual: level.dual.clone(), denom: level.denom };
            (Some(facet), Some(psi_and_nabla(rs, alpha)?))
        } else {
            (None, None)
        };
        Ok(MonoidCtx {
            rs: rs.clone(),
            face,
            facet,
            vroots,
            level,
            separators,
            zbasis,
            normals,
            ridges: OnceLock::new(),
        })
    }

    /// Context for the facet `τ F(α)`.
    pub fn facet(rs: &RootSystem, alpha: usize, tau: WeylWord) -> Result<MonoidCtx> {
        if !is_maximal(rs, alpha) {
            return Err(Error::NotMaximal(alpha + 1));
        }
        MonoidCtx::new(rs, FaceSpec { a: SimpleSet::single(alpha), tau })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    fn is_standard_facet(&self) -> bool {
        self.facet.is_some() && self.face.tau.is_empty()
    }

    /// `(λ_F, γ)`.
    pub fn level_of(&self, g: &LatticeVec) -> Rational {
        self.level.value(&g.0)
    }

    fn in_span(&self, g: &[i64]) -> bool {
        self.normals.iter().all(|n| lattice::dot(n, g) == 0)
    }

    /// Membership in the cone over `V(F)`.
    pub fn in_cone(&self, g: &LatticeVec) -> bool {
        self.in_span(&g.0) && self.level.value(&g.0) == max_level(&self.rs, &g.0)
    }

    /// Same as [`in_cone`](Self::in_cone), comparing against every facet explicitly.
    pub fn in_cone_by_facets(&self, g: &LatticeVec, facets: &[Facet]) -> bool {
        if !self.in_span(&g.0) {
            return false;
        }
        let own = self.level.value(&g.0);
        facets.iter().all(|f| f.value(&g.0) <= own)
    }

    pub fn in_zspan(&self, g: &LatticeVec) -> bool {
        lattice::hnf_contains(&self.zbasis, &g.0)
    }

    /// A multiset of face roots summing to `γ`, if one exists.
    pub fn in_nspan(&self, g: &LatticeVec) -> Option<Vec<LatticeVec>> {
        let lv = self.level_of(g);
        if !lv.is_integer() || lv < qi(0) {
            return None;
        }
        if g.is_zero() {
            return Some(Vec::new());
        }
        if !self.in_cone(g) {
            return None;
        }
        let depth = floor_to_i64(&lv).ok()?;
        let mut failed: HashSet<(Vec<i64>, usize)> = HashSet::new();
        let mut picks = Vec::new();
        if self.nspan_rec(&g.0, depth, 0, &mut failed, &mut picks) {
            Some(picks.into_iter().map(|k| self.vroots[k].clone()).collect())
        } else {
            None
        }
    }

    fn nspan_rec(
        &self,
        rem: &[i64],
        depth: i64,
        start: usize,
        failed: &mut HashSet<(Vec<i64>, usize)>,
        picks: &mut Vec<usize>,
    ) -> bool {
        if depth == 0 {
            return rem.iter().all(|&x| x == 0);
        }
        if failed.contains(&(rem.to_vec(), start)) {
            return false;
        }
        for k in start..self.vroots.len() {
            let next: Vec<i64> = rem.iter().zip(&self.vroots[k].0).map(|(a, b)| a - b).collect();
            let ok = depth == 1 || self.in_cone(&LatticeVec(next.clone()));
            if ok {
                picks.push(k);
                if self.nspan_rec(&next, depth - 1, k, failed, picks) {
                    return true;
                }
                picks.pop();
            }
        }
        failed.insert((rem.to_vec(), start));
        false
    }

    /// Membership in `M(F)`, the root-lattice points of the cone.
    pub fn in_m(&self, g: &LatticeVec) -> bool {
        self.in_cone(g)
    }

    /// Is `γ ∈ M(F)` nonzero with `γ − v ∉ M(F)` for every face root `v`?
    pub fn is_minimal(&self, g: &LatticeVec) -> bool {
        !g.is_zero() && self.in_m(g) && self.vroots.iter().all(|v| !self.in_m(&g.sub(v)))
    }

    /// Properness through the separating functionals, for a facet context.
    pub fn is_proper(&self, g: &LatticeVec) -> Result<bool> {
        let (Some(f), Some(psi)) = (&self.facet, &self.separators) else {
            return Err(Error::Inconsistent("properness is defined for facets".into()));
        };
        self.rs.check_dim(g.dim())?;
        if !self.in_m(g) {
            return Err(Error::NotInCone);
        }
        if g.is_zero() {
            return Ok(false);
        }
        let back = self.rs.act_root(&f.tau.inverse(), g);
        let stab = SimpleSet::full(self.rs.rank()).without(f.alpha);
        let plus = self.rs.dominant(&back.0, stab);
        Ok(psi.entries.iter().all(|e| e.eval(&self.rs, f.alpha, &plus) > qi(0)))
    }

    /// Normals of the ridges of the facet, one per geometrically adjacent facet.
    pub fn ridge_normals(&self) -> Result<&[Vec<i64>]> {
        let r = self.ridges.get_or_init(|| {
            let Some(f) = &self.facet else {
                return Err(Error::Inconsistent("ridges are defined for facets".into()));
            };
            let all = enumerate_facets(&self.rs)?;
            let vf: BTreeSet<&LatticeVec> = self.vroots.iter().collect();
            let mut out = BTreeSet::new();
            for g in geometric_neighbours(&self.rs, f, &all) {
                let common: Vec<Vec<i64>> =
                    g.vertices(&self.rs).into_iter().filter(|v| vf.contains(v)).map(|v| v.0).collect();
                let n = lattice::span_normals(&common, self.rs.rank());
                if n.len() != 1 {
                    return Err(Error::Inconsistent("ridge of unexpected dimension".into()));
                }
                out.insert(n[0].clone());
            }
            Ok(out.into_iter().collect())
        });
        match r {
            Ok(v) => Ok(v),
            Err(e) => Err(e.clone()),
        }
    }

    /// Properness from the definition: `γ` lies in the span of no ridge.
    pub fn is_proper_by_definition(&self, g: &LatticeVec) -> Result<bool> {
        if !self.in_m(g) {
            return Err(Error::NotInCone);
        }
        if g.is_zero() {
            return Ok(false);
        }
        let normals = self.ridge_normals()?;
        Ok(normals.iter().all(|n| lattice::dot(n, &g.0) != 0))
    }

    /// Slab points of `M(F)` (or of the cone ∩ span for lower faces) with `0 < level ≤ bound`,
    /// scanning the box of root coordinates.
    pub fn slab_points(&self, bound: &Rational, cap: usize) -> Result<Vec<LatticeVec>> {
        let l = self.rs.rank();
        let den = self.level.denom;
        let kmax = floor_to_i64(&(bound * qi(den)))?;
        let dual = &self.level.dual;
        let pivot = (0..l)
            .filter(|&j| dual[j] != 0)
            .min_by_key(|&j| dual[j].abs())
            .ok_or_else(|| Error::Inconsistent("zero functional".into()))?;
        let mn: Vec<i64> = (0..l).map(|i| self.vroots.iter().map(|v| v.0[i]).min().unwrap()).collect();
        let mx: Vec<i64> = (0..l).map(|i| self.vroots.iter().map(|v| v.0[i]).max().unwrap()).collect();
        let free: Vec<usize> = (0..l).filter(|&j| j != pivot).collect();
        let mut out = Vec::new();
        let mut scanned = 0usize;
        for k in 1..=kmax {
            let lo: Vec<i64> = (0..l).map(|i| ceil_div(k * mn[i], den)).collect();
            let hi: Vec<i64> = (0..l).map(|i| floor_div(k * mx[i], den)).collect();
            if free.iter().any(|&i| lo[i] > hi[i]) {
                continue;
            }
            let mut u: Vec<i64> = lo.clone();
            loop {
                scanned += 1;
                if scanned > cap {
                    return Err(Error::CapExceeded { what: "slab points", cap });
                }
                let rest: i64 = free.iter().map(|&i| dual[i] * u[i]).sum();
                let num = k - rest;
                if num % dual[pivot] == 0 {
                    let x = num / dual[pivot];
                    if x >= lo[pivot] && x <= hi[pivot] {
                        u[pivot] = x;
                        let p = LatticeVec(u.clone());
                        if self.in_cone(&p) {
                            out.push(p);
                        }
                    }
                }
                // odometer over the free coordinates
                let mut idx = 0;
                loop {
                    if idx == free.len() {
                        break;
                    }
                    let i = free[idx];
                    if u[i] < hi[i] {
                        u[i] += 1;
                        break;
                    }
                    u[i] = lo[i];
                    idx += 1;
                }
                if idx == free.len() {
                    break;
                }
            }
        }
        Ok(out)
    }

    /// Points of `M(F)` dominant for `Δ∖{α}` with `0 < level ≤ bound`, for a standard facet.
    pub fn dominant_slab_points(&self, bound: &Rational, cap: usize) -> Result<Vec<LatticeVec>> {
        if !self.is_standard_facet() {
            return Err(Error::Inconsistent("dominant slabs need a standard facet".into()));
        }
        let rs = &self.rs;
        let l = rs.rank();
        let alpha = self.level.alpha;
        let m = rs.marks()[alpha];
        let kmax = floor_to_i64(&(bound * qi(m)))?;
        let (wn, wd) = rs.weights_scaled();
        let wc: Vec<Vec<i64>> = self.vroots.iter().map(|v| rs.weight_coords(&v.0)).collect();
        let mn: Vec<i64> = (0..l).map(|i| wc.iter().map(|c| c[i]).min().unwrap()).collect();
        let mx: Vec<i64> = (0..l).map(|i| wc.iter().map(|c| c[i]).max().unwrap()).collect();
        let coef: Vec<i64> = (0..l).map(|i| wn[i][alpha]).collect();
        if coef.iter().any(|&c| c <= 0) {
            return Err(Error::Inconsistent("inverse Cartan matrix not positive".into()));
        }
        let free: Vec<usize> = (0..l).filter(|&j| j != alpha).collect();
        let mut out = Vec::new();
        let mut scanned = 0usize;
        for k in 1..=kmax {
            // γ_α = k, i.e. Σ c_i coef_i = k wd
            let target = k * wd;
            let lo: Vec<i64> = (0..l)
                .map(|i| {
                    let b = ceil_div(k * mn[i], m);
                    if i == alpha { b } else { b.max(0) }
                })
                .collect();
            let hi: Vec<i64> = (0..l).map(|i| floor_div(k * mx[i], m)).collect();
            if lo.iter().zip(&hi).any(|(a, b)| a > b) {
                continue;
            }
            let mut c = vec![0i64; l];
            let mut stack_err = None;
            self.dominant_rec(
                &free, 0, &lo, &hi, &coef, target, 0,
                &mut c, &mut |c: &[i64]| {
                    scanned += 1;
                    if scanned > cap {
                        stack_err = Some(Error::CapExceeded { what: "slab points", cap });
                        return false;
                    }
                    let rest: i64 = free.iter().map(|&i| c[i] * coef[i]).sum();
                    let num = target - rest;
                    if num % coef[alpha] != 0 {
                        return true;
                    }
                    let ca = num / coef[alpha];
                    if ca < lo[alpha] || ca > hi[alpha] {
                        return true;
                    }
                    let mut full = c.to_vec();
                    full[alpha] = ca;
                    if let Ok(p) = rs.from_weight_coords(&full) {
                        if self.in_cone(&p) {
                            out.push(p);
                        }
                    }
                    true
                },
            );
            if let Some(e) = stack_err {
                return Err(e);
            }
        }
        Ok(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn dominant_rec(
        &self,
        free: &[usize],
        pos: usize,
        lo: &[i64],
        hi: &[i64],
        coef: &[i64],
        target: i64,
        used: i64,
        c: &mut Vec<i64>,
        visit: &mut dyn FnMut(&[i64]) -> bool,
    ) -> bool {
        let alpha_coef = coef[self.level.alpha];
        // what is left must leave room for c_α ≥ lo_α
        let slack = target - alpha_coef * lo[self.level.alpha] - used;
        if pos == free.len() {
            return visit(c);
        }
        let i = free[pos];
        let mut x = lo[i];
        while x <= hi[i] {
            let add = x * coef[i];
            if add > slack {
                break;
            }
            c[i] = x;
            if !self.dominant_rec(free, pos + 1, lo, hi, coef, target, used + add, c, visit) {
                return false;
            }
            x += 1;
        }
        c[i] = 0;
        true
    }

    fn pick_route(&self, route: Option<SlabRoute>) -> SlabRoute {
        match route {
            Some(r) => r,
            None if self.is_standard_facet() && self.rs.rank() >= 5 => SlabRoute::Dominant,
            None => SlabRoute::Box,
        }
    }

    /// Points of the slab, either by box scan or (standard facets) dominant scan with
    /// orbit expansion under the stabilizer.
    pub fn slab(&self, bound: &Rational, route: Option<SlabRoute>, cap: usize) -> Result<Vec<LatticeVec>> {
        match self.pick_route(route) {
            SlabRoute::Box => self.slab_points(bound, cap),
            SlabRoute::Dominant => self.expand(&self.dominant_slab_points(bound, cap)?),
        }
    }

    fn expand(&self, pts: &[LatticeVec]) -> Result<Vec<LatticeVec>> {
        let stab = SimpleSet::full(self.rs.rank()).without(self.level.alpha);
        let mut out = BTreeSet::new();
        for p in pts {
            out.extend(parabolic_orbit(&self.rs, p, stab, DEFAULT_ORBIT_CAP)?);
        }
        Ok(out.into_iter().collect())
    }

    /// Nonzero `≤_F`-minimal elements of `M(F)` with level at most `bound`, sorted.
    pub fn minimal_elements(&self, bound: &Rational) -> Result<Vec<LatticeVec>> {
        self.minimal_elements_with(bound, None, DEFAULT_POINT_CAP)
    }

    pub fn minimal_elements_with(
        &self,
        bound: &Rational,
        route: Option<SlabRoute>,
        cap: usize,
    ) -> Result<Vec<LatticeVec>> {
        let route = self.pick_route(route);
        let pts = match route {
            SlabRoute::Box => self.slab_points(bound, cap)?,
            SlabRoute::Dominant => self.dominant_slab_points(bound, cap)?,
        };
        let mins: Vec<LatticeVec> = pts.into_iter().filter(|p| self.is_minimal(p)).collect();
        let mut out = match route {
            SlabRoute::Box => mins,
            SlabRoute::Dominant => self.expand(&mins)?,
        };
        out.sort_by(|a, b| self.level_of(a).cmp(&self.level_of(b)).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// Checks `C(V(F)) ∩ Z(F) = N(F)` up to the level bound.
    pub fn is_normal(&self, bound: &Rational, route: Option<SlabRoute>, cap: usize) -> Result<Decision> {
        let pts = self.slab(bound, route, cap)?;
        let mut bad: Vec<LatticeVec> =
            pts.iter().filter(|p| self.in_zspan(p) && self.in_nspan(p).is_none()).cloned().collect();
        self.sort_by_level(&mut bad);
        Ok(Decision { holds: bad.is_empty(), witness: bad.first().cloned(), checked: pts.len() })
    }

    /// Checks `M(F) = N(F)` up to the level bound, for a facet.
    pub fn is_integrally_closed(&self, bound: &Rational, route: Option<SlabRoute>, cap: usize) -> Result<Decision> {
        if self.facet.is_none() {
            return Err(Error::Inconsistent("integral closure is checked on facets".into()));
        }
        let pts = self.slab(bound, route, cap)?;
        let mut bad: Vec<LatticeVec> = pts.iter().filter(|p| self.in_nspan(p).is_none()).cloned().collect();
        self.sort_by_level(&mut bad);
        Ok(Decision { holds: bad.is_empty(), witness: bad.first().cloned(), checked: pts.len() })
    }

    fn sort_by_level(&self, v: &mut [LatticeVec]) {
        v.sort_by(|a, b| self.level_of(a).cmp(&self.level_of(b)).then_with(|| a.cmp(b)));
    }
}

/// Outcome of a bounded check, with the smallest-level counterexample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decision {
    pub holds: bool,
    pub witness: Option<LatticeVec>,
    pub checked: usize,
}

/// How a generator list was certified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Certificate {
    #[serde(rename = "slab-exhaustive")]
    SlabExhaustive,
    #[serde(rename = "criterion")]
    Criterion,
}

/// Proper minimal elements of a standard facet.
#[derive(Clone, Debug, Serialize)]
pub struct GeneratorReport {
    #[serde(rename = "type")]
    pub cartan_type: String,
    /// 1-based maximal root.
    pub facet: usize,
    pub generators: Vec<LatticeVec>,
    /// Generators dominant for the stabilizer, in weight coordinates.
    pub dominant_weight_coords: Vec<Vec<i64>>,
    pub certificate: Certificate,
    pub level_bound: Option<String>,
    pub candidates: usize,
}

/// Proper minimal elements of `F(α)` by exhaustive slab search.
pub fn proper_generators_slab(
    rs: &RootSystem,
    alpha: usize,
    bound: &Rational,
    route: Option<SlabRoute>,
    cap: usize,
) -> Result<GeneratorReport> {
    let ctx = MonoidCtx::facet(rs, alpha, WeylWord::identity())?;
    let route = ctx.pick_route(route);
    let pts = match route {
        SlabRoute::Box => ctx.slab_points(bound, cap)?,
        SlabRoute::Dominant => ctx.dominant_slab_points(bound, cap)?,
    };
    let candidates = pts.len();
    let mut found = Vec::new();
    for p in pts {
        if !ctx.is_minimal(&p) {
            continue;
        }
        let crit = ctx.is_proper(&p)?;
        let defn = ctx.is_proper_by_definition(&p)?;
        if crit != defn {
            return Err(Error::Inconsistent(format!("properness routes disagree at {p}")));
        }
        if crit {
            found.push(p);
        }
    }
    let generators = match route {
        SlabRoute::Box => {
            found.sort();
            found
        }
        SlabRoute::Dominant => ctx.expand(&found)?,
    };
    Ok(report(rs, alpha, generators, Certificate::SlabExhaustive, Some(bound), candidates))
}

fn report(
    rs: &RootSystem,
    alpha: usize,
    mut generators: Vec<LatticeVec>,
    certificate: Certificate,
    bound: Option<&Rational>,
    candidates: usize,
) -> GeneratorReport {
    let stab = SimpleSet::full(rs.rank()).without(alpha);
    generators.sort_by(|a, b| (a.0[alpha], a).cmp(&(b.0[alpha], b)));
    let mut dominant: Vec<Vec<i64>> = generators
        .iter()
        .map(|g| rs.weight_coords(&rs.dominant(&g.0, stab)))
        .collect();
    dominant.dedup();
    GeneratorReport {
        cartan_type: rs.name(),
        facet: alpha + 1,
        generators,
        dominant_weight_coords: dominant,
        certificate,
        level_bound: bound.map(fmt_rational),
        candidates,
    }
}

/// Path between two nodes of the Dynkin diagram.
fn dynkin_path(rs: &RootSystem, from: usize, to: usize) -> Vec<usize> {
    let l = rs.rank();
    let mut prev = vec![usize::MAX; l];
    let mut stack = vec![from];
    prev[from] = from;
    while let Some(i) = stack.pop() {
        for j in 0..l {
            if prev[j] == usize::MAX && rs.simple_adjacent(i, j) {
                prev[j] = i;
                stack.push(j);
            }
        }
    }
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        cur = prev[cur];
        path.push(cur);
    }
    path
}

/// Proper minimal elements of `F(α)` through the necessary conditions on dominant proper
/// minimal elements, followed by explicit certificates for every surviving candidate.
pub fn proper_generators_criterion(rs: &RootSystem, alpha: usize) -> Result<GeneratorReport> {
    if rs.family() == Family::A {
        return Err(Error::Inconsistent("the criterion route needs a highest root proportional to a weight".into()));
    }
    let ctx = MonoidCtx::facet(rs, alpha, WeylWord::identity())?;
    let psi = ctx.separators.clone().unwrap();
    let l = rs.rank();
    let m = rs.marks();
    let tw = rs.weight_coords(&rs.theta().0);
    let nu = (0..l).find(|&i| tw[i] != 0).unwrap();
    if (0..l).filter(|&i| tw[i] != 0).count() != 1 {
        return Err(Error::Inconsistent("highest root is not a multiple of one weight".into()));
    }
    let (wn, wd) = rs.weights_scaled();
    // (∇_{α,δ}, ω_i) = (ω_i)_α / m_α − (ω_i)_δ / m_δ
    let nab = |d: usize, i: usize| q(wn[i][alpha], wd * m[alpha]) - q(wn[i][d], wd * m[d]);
    let mut survivors: BTreeSet<LatticeVec> = BTreeSet::new();
    let mut candidates = 0usize;
    for e in &psi.entries {
        let d = e.delta;
        let path = dynkin_path(rs, d, nu);
        if path.contains(&alpha) {
            continue;
        }
        let s = path;
        if (0..l).any(|i| i != alpha && !s.contains(&i)) {
            return Err(Error::Inconsistent(format!(
                "criterion route leaves coordinates unbounded for δ = {}",
                d + 1
            )));
        }
        let na = nab(d, alpha);
        if na == qi(0) {
            return Err(Error::Inconsistent("criterion route cannot bound the α coordinate".into()));
        }
        // Σ_{ε∈S} c_ε < m_δ D_l(δ)
        let cap_s = &e.d_long * qi(m[d]);
        let mut c = vec![0i64; l];
        // enumerate c on S with nonnegative entries and sum below cap_s
        let mut combos: Vec<Vec<i64>> = Vec::new();
        enumerate_bounded(&s, 0, 0, &cap_s, &mut c, &mut combos);
        for cs in combos {
            let sum_s: i64 = s.iter().map(|&i| cs[i]).sum();
            // 0 < Σ c_i n_i < D_l − sum_s / m_δ with c_α the unknown
            let fixed: Rational = s.iter().map(|&i| qi(cs[i]) * nab(d, i)).sum();
            let upper = &e.d_long - q(sum_s, m[d]);
            let (lo, hi) = {
                let a = (qi(0) - &fixed) / &na;
                let b = (&upper - &fixed) / &na;
                if na > qi(0) { (a, b) } else { (b, a) }
            };
            let mut ca = floor_to_i64(&lo)? + 1;
            while qi(ca) < hi {
                candidates += 1;
                let mut full = cs.clone();
                full[alpha] = ca;
                ca += 1;
                let Ok(g) = rs.from_weight_coords(&full) else { continue };
                let lev: Rational = qi(0) + &fixed + qi(full[alpha]) * &na;
                let test = lev + q(sum_s, m[d]) < e.d_long;
                let proper = psi.entries.iter().all(|f| f.eval(rs, alpha, &g.0) > qi(0));
                if test && proper {
                    survivors.insert(g);
                }
            }
        }
    }
    let mut certified = Vec::new();
    for g in &survivors {
        if !ctx.in_m(g) || ctx.in_nspan(g).is_some() || !ctx.is_minimal(g) {
            continue;
        }
        let crit = ctx.is_proper(g)?;
        let defn = ctx.is_proper_by_definition(g)?;
        if crit != defn {
            return Err(Error::Inconsistent(format!("properness routes disagree at {g}")));
        }
        if crit {
            certified.push(g.clone());
        }
    }
    let generators = ctx.expand(&certified)?;
    Ok(report(rs, alpha, generators, Certificate::Criterion, None, candidates))
}

fn enumerate_bounded(s: &[usize], pos: usize, sum: i64, cap: &Rational, c: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if pos == s.len() {
        out.push(c.clone());
        return;
    }
    let i = s[pos];
    let mut x = 0;
    while qi(sum + x) < *cap {
        c[i] = x;
        enumerate_bounded(s, pos + 1, sum + x, cap, c, out);
        x += 1;
    }
    c[i] = 0;
}

/// `Z(V(A))` from its description by the complement of `A` and the minimal root.
pub fn predicted_face_lattice(rs: &RootSystem, a: SimpleSet) -> Result<Vec<Vec<i64>>> {
    let l = rs.rank();
    let beta = closure_data(rs, a)?.beta;
    let mut gens: Vec<Vec<i64>> =
        SimpleSet::full(l).minus(a).iter().map(|i| LatticeVec::unit(l, i).0).collect();
    gens.push(beta.0);
    Ok(lattice::hnf(&gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::all_faces;
    use crate::rootcore::all_types;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    fn lv(v: &[i64]) -> LatticeVec {
        LatticeVec(v.to_vec())
    }

    fn facet(r: &RootSystem, bourbaki: usize) -> MonoidCtx {
        MonoidCtx::facet(r, bourbaki - 1, WeylWord::identity()).unwrap()
    }

    #[test]
    fn b3_triangle_membership() {
        let b3 = rs("B3");
        let ctx = facet(&b3, 3);
        let w = ctx.in_nspan(&lv(&[1, 2, 4])).unwrap();
        assert_eq!(w.len(), 2);
        let two_w3 = lv(&[1, 2, 3]);
        assert!(ctx.in_nspan(&two_w3).is_none());
        assert_eq!(ctx.in_nspan(&lv(&[0, 0, 0])), Some(vec![]));
        assert!(!ctx.in_zspan(&two_w3));
        assert!(ctx.in_zspan(b3.theta()));
        assert!(!ctx.in_zspan(&lv(&[0, 0, 1])));
        assert!(ctx.in_cone(&two_w3));
        for v in &ctx.vroots {
            assert!(!ctx.in_cone(&v.neg()));
        }
        let dom = b3.dominant(&[1, 0, 2], SimpleSet::full(3));
        assert!(ctx.in_cone(&LatticeVec(dom)));
    }

    #[test]
    fn properness_examples() {
        let g2 = rs("G2");
        let ctx = facet(&g2, 1);
        assert!(ctx.is_proper(&lv(&[2, 1])).unwrap());
        assert!(!ctx.is_proper(&lv(&[0, 0])).unwrap());
        let b3 = rs("B3");
        let ctx = facet(&b3, 3);
        assert!(!ctx.is_proper(b3.theta()).unwrap());
        assert!(!ctx.is_proper_by_definition(b3.theta()).unwrap());
        assert!(ctx.is_proper(&lv(&[1, 2, 3])).unwrap());
        assert!(ctx.is_proper(&lv(&[-1, 0, 0])).is_err());
    }

    #[test]
    fn minimal_element_examples() {
        let seven = qi(7);
        let b3 = rs("B3");
        assert_eq!(facet(&b3, 3).minimal_elements(&seven).unwrap(), vec![lv(&[1, 2, 3])]);
        let g2 = rs("G2");
        assert_eq!(facet(&g2, 1).minimal_elements(&seven).unwrap(), vec![lv(&[2, 1]), lv(&[4, 2])]);
        let a2 = rs("A2");
        for a in [1, 2] {
            assert!(facet(&a2, a).minimal_elements(&seven).unwrap().is_empty());
        }
    }

    #[test]
    fn normality_and_closure_examples() {
        let four = qi(4);
        let b3 = rs("B3");
        assert!(facet(&b3, 3).is_normal(&four, None, DEFAULT_POINT_CAP).unwrap().holds);
        let a3 = rs("A3");
        for a in 1..=3 {
            assert!(facet(&a3, a).is_normal(&four, None, DEFAULT_POINT_CAP).unwrap().holds);
        }
        let a2 = rs("A2");
        let vertex = MonoidCtx::new(&a2, FaceSpec::standard(&a2, SimpleSet::full(2)).unwrap()).unwrap();
        assert!(vertex.is_normal(&four, None, DEFAULT_POINT_CAP).unwrap().holds);
        assert!(facet(&b3, 1).is_integrally_closed(&four, None, DEFAULT_POINT_CAP).unwrap().holds);
        let d = facet(&b3, 3).is_integrally_closed(&four, None, DEFAULT_POINT_CAP).unwrap();
        assert!(!d.holds);
        assert_eq!(d.witness, Some(lv(&[1, 2, 3])));
        let c3 = rs("C3");
        assert!(facet(&c3, 3).is_integrally_closed(&four, None, DEFAULT_POINT_CAP).unwrap().holds);
    }

    #[test]
    fn cone_routes_agree() {
        for t in ["A3", "B3", "C3", "G2", "B2"] {
            let r = rs(t);
            let facets = enumerate_facets(&r).unwrap();
            let l = r.rank();
            for face in all_faces(&r, 10_000).unwrap() {
                let ctx = MonoidCtx::new(&r, face).unwrap();
                let n = 5i64.pow(l as u32);
                for code in 0..n {
                    let mut c = code;
                    let g: Vec<i64> = (0..l).map(|_| { let d = c % 5 - 2; c /= 5; d }).collect();
                    let g = LatticeVec(g);
                    assert_eq!(ctx.in_cone(&g), ctx.in_cone_by_facets(&g, &facets), "{t}");
                }
            }
        }
    }

    #[test]
    fn dominant_and_box_routes_agree() {
        let seven = qi(7);
        for t in all_types(4) {
            let r = RootSystem::new(t).unwrap();
            for a in maximal_roots(&r) {
                let ctx = MonoidCtx::facet(&r, a, WeylWord::identity()).unwrap();
                let b = ctx.minimal_elements_with(&seven, Some(SlabRoute::Box), DEFAULT_POINT_CAP).unwrap();
                let d = ctx.minimal_elements_with(&seven, Some(SlabRoute::Dominant), DEFAULT_POINT_CAP).unwrap();
                assert_eq!(b, d, "{t} alpha {}", a + 1);
                let pb = proper_generators_slab(&r, a, &seven, Some(SlabRoute::Box), DEFAULT_POINT_CAP).unwrap();
                let pd = proper_generators_slab(&r, a, &seven, Some(SlabRoute::Dominant), DEFAULT_POINT_CAP).unwrap();
                assert_eq!(pb.generators, pd.generators, "{t} alpha {}", a + 1);
            }
        }
    }

    #[test]
    fn criterion_route_small_cases() {
        let b3 = rs("B3");
        assert_eq!(proper_generators_criterion(&b3, 2).unwrap().generators, vec![lv(&[1, 2, 3])]);
        let g2 = rs("G2");
        assert_eq!(proper_generators_criterion(&g2, 0).unwrap().generators, vec![lv(&[2, 1]), lv(&[4, 2])]);
    }

    #[test]
    fn face_lattices() {
        for t in all_types(4) {
            let r = RootSystem::new(t).unwrap();
            for a in crate::polytope::index_set(&r) {
                if a.is_empty() {
                    continue;
                }
                let ctx = MonoidCtx::new(&r, FaceSpec::standard(&r, a).unwrap()).unwrap();
                assert_eq!(ctx.zbasis, predicted_face_lattice(&r, a).unwrap(), "{t} {a}");
            }
        }
    }
}
