//! Weyl group actions, orbits, dominant representatives and minimal coset representatives.
//!
//! Vectors are acted on in one of three integer coordinate systems:
//! root coordinates, weight coordinates `(v, α̌_i)` and dual coordinates
//! `(v, α_i)`. Dual coordinates are used for coweight-type functionals.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootcore::RootSystem;
use crate::vector::{LatticeVec, RatVec, SimpleSet};

/// Default cap on orbit sizes.
pub const DEFAULT_ORBIT_CAP: usize = 1_000_000;

/// A word in the simple reflections (0-based letters). The leftmost letter is applied last.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn identity() -> Self {
        WeylWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> WeylWord {
        WeylWord(self.0.iter().rev().copied().collect())
    }

    /// `self * other`: apply `other` first.
    pub fn compose(&self, other: &WeylWord) -> WeylWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        WeylWord(v)
    }

    pub fn to_bourbaki(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }

    pub fn from_bourbaki(letters: &[usize]) -> Self {
        WeylWord(letters.iter().map(|i| i - 1).collect())
    }

    pub fn check(&self, rs: &RootSystem) -> Result<()> {
        for &i in &self.0 {
            rs.check_index(i)?;
        }
        Ok(())
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "s{}", i + 1)?;
        }
        Ok(())
    }
}

/// Integer coordinate systems on which simple reflections act.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coords {
    /// Coefficients over the simple roots.
    Root,
    /// `(v, α̌_j)`.
    Weight,
    /// `(v, α_j)`.
    Dual,
}

impl RootSystem {
    /// Applies `s_i` in place.
    pub fn reflect_in(&self, coords: Coords, i: usize, v: &mut [i64]) {
        let c = self.cartan();
        match coords {
            Coords::Root => {
                let p: i64 = (0..v.len()).map(|j| c[i][j] * v[j]).sum();
                v[i] -= p;
            }
            Coords::Weight => {
                let ci = v[i];
                if ci != 0 {
                    for (j, x) in v.iter_mut().enumerate() {
                        *x -= c[j][i] * ci;
                    }
                }
            }
            Coords::Dual => {
                let ci = v[i];
                if ci != 0 {
                    for (j, x) in v.iter_mut().enumerate() {
                        *x -= c[i][j] * ci;
                    }
                }
            }
        }
    }

    /// Applies a word (rightmost letter first) in place.
    pub fn act_in(&self, coords: Coords, w: &WeylWord, v: &mut [i64]) {
        for &i in w.0.iter().rev() {
            self.reflect_in(coords, i, v);
        }
    }

    pub fn act_root(&self, w: &WeylWord, v: &LatticeVec) -> LatticeVec {
        let mut out = v.0.clone();
        self.act_in(Coords::Root, w, &mut out);
        LatticeVec(out)
    }

    /// Dominant conjugate of `v` (root coordinates) for the letters in `a`, with the
    /// word `w` such that `w v` is the result. Ascends by the smallest violated index.
    pub fn dominant_root_coords(&self, v: &[i64], a: SimpleSet) -> (Vec<i64>, WeylWord) {
        let mut x = v.to_vec();
        let mut c = self.weight_coords(v);
        let mut letters = Vec::new();
        while let Some(i) = a.iter().find(|&i| c[i] < 0) {
            let ci = c[i];
            x[i] -= ci;
            self.reflect_in(Coords::Weight, i, &mut c);
            letters.push(i);
        }
        letters.reverse();
        (x, WeylWord(letters))
    }

    /// Same as [`dominant_root_coords`](Self::dominant_root_coords) without the word.
    pub fn dominant(&self, v: &[i64], a: SimpleSet) -> Vec<i64> {
        let mut x = v.to_vec();
        let mut c = self.weight_coords(v);
        while let Some(i) = a.iter().find(|&i| c[i] < 0) {
            let ci = c[i];
            x[i] -= ci;
            self.reflect_in(Coords::Weight, i, &mut c);
        }
        x
    }

    /// Canonical word of the element `y = w x0`, where `y` is given in dual coordinates and
    /// `x0` is dominant: the letters applied while ascending `y`, first applied leftmost.
    pub fn ascend_dual(&self, y: &[i64], a: SimpleSet) -> (Vec<i64>, WeylWord) {
        let mut x = y.to_vec();
        let mut letters = Vec::new();
        while let Some(i) = a.iter().find(|&i| x[i] < 0) {
            self.reflect_in(Coords::Dual, i, &mut x);
            letters.push(i);
        }
        (x, WeylWord(letters))
    }
}

/// Rational vector in root coordinates for scaled integer work.
fn scaled(rs: &RootSystem, v: &RatVec) -> Result<(Vec<i64>, i64)> {
    rs.check_dim(v.dim())?;
    v.to_scaled()
}

/// `s_i(v) = v − (v, α̌_i) α_i`.
pub fn reflect_simple(rs: &RootSystem, i: usize, v: &RatVec) -> Result<RatVec> {
    rs.check_index(i)?;
    let (mut num, den) = scaled(rs, v)?;
    rs.reflect_in(Coords::Root, i, &mut num);
    Ok(RatVec::from_scaled(&num, den))
}

pub fn act_word(rs: &RootSystem, w: &WeylWord, v: &RatVec) -> Result<RatVec> {
    w.check(rs)?;
    let (mut num, den) = scaled(rs, v)?;
    rs.act_in(Coords::Root, w, &mut num);
    Ok(RatVec::from_scaled(&num, den))
}

/// Dominant representative for the letters in `a` and a word `w ∈ W_A` with `w v = v₊`.
pub fn to_dominant(rs: &RootSystem, v: &RatVec, a: SimpleSet) -> Result<(RatVec, WeylWord)> {
    let (num, den) = scaled(rs, v)?;
    let (x, w) = rs.dominant_root_coords(&num, a.intersect(SimpleSet::full(rs.rank())));
    Ok((RatVec::from_scaled(&x, den), w))
}

/// Breadth-first orbit of `start` under the letters in `letters`. Each element carries the
/// lexicographically smallest among the shortest words reaching it from `start`.
pub(crate) fn bfs_orbit(
    rs: &RootSystem,
    coords: Coords,
    start: &[i64],
    letters: SimpleSet,
    cap: usize,
) -> Result<Vec<(Vec<i64>, WeylWord)>> {
    let mut out: Vec<(Vec<i64>, WeylWord)> = vec![(start.to_vec(), WeylWord::identity())];
    let mut seen: HashMap<Vec<i64>, usize> = HashMap::from([(start.to_vec(), 0)]);
    let mut level: Vec<usize> = vec![0];
    while !level.is_empty() {
        // new element -> (smallest letter, parent index)
        let mut next: HashMap<Vec<i64>, (usize, usize)> = HashMap::new();
        let mut order: Vec<Vec<i64>> = Vec::new();
        for &u in &level {
            for i in letters.iter() {
                let mut t = out[u].0.clone();
                rs.reflect_in(coords, i, &mut t);
                if seen.contains_key(&t) {
                    continue;
                }
                match next.get_mut(&t) {
                    Some(e) => {
                        if i < e.0 {
                            *e = (i, u);
                        }
                    }
                    None => {
                        next.insert(t.clone(), (i, u));
                        order.push(t);
                    }
                }
            }
        }
        if out.len() + order.len() > cap {
            return Err(Error::CapExceeded { what: "orbit size", cap });
        }
        let mut new_level = Vec::with_capacity(order.len());
        for t in order {
            let (i, u) = next[&t];
            let mut w = vec![i];
            w.extend_from_slice(&out[u].1 .0);
            seen.insert(t.clone(), out.len());
            new_level.push(out.len());
            out.push((t, WeylWord(w)));
        }
        level = new_level;
    }
    Ok(out)
}

/// Full W-orbit of `v` with one witness word per element (root coordinates).
pub fn orbit_with_words(rs: &RootSystem, v: &RatVec, cap: usize) -> Result<Vec<(RatVec, WeylWord)>> {
    let (num, den) = scaled(rs, v)?;
    let orbit = bfs_orbit(rs, Coords::Root, &num, SimpleSet::full(rs.rank()), cap)?;
    Ok(orbit.into_iter().map(|(x, w)| (RatVec::from_scaled(&x, den), w)).collect())
}

/// Orbit of an integer vector under the parabolic subgroup `W_A` (root coordinates).
pub fn parabolic_orbit(rs: &RootSystem, v: &LatticeVec, a: SimpleSet, cap: usize) -> Result<Vec<LatticeVec>> {
    Ok(bfs_orbit(rs, Coords::Root, &v.0, a, cap)?.into_iter().map(|(x, _)| LatticeVec(x)).collect())
}

/// Minimal length representatives of `W / W_A`, as canonical words.
pub fn coset_reps(rs: &RootSystem, a: SimpleSet, cap: usize) -> Result<Vec<WeylWord>> {
    let l = rs.rank();
    let start: Vec<i64> = (0..l).map(|i| i64::from(!a.contains(i))).collect();
    Ok(bfs_orbit(rs, Coords::Dual, &start, SimpleSet::full(l), cap)?.into_iter().map(|(_, w)| w).collect())
}

/// `{i : (v, α_i) = 0}` for a dominant `v`.
pub fn stabilizer_simple_roots(rs: &RootSystem, v: &RatVec) -> Result<SimpleSet> {
    let (num, _) = scaled(rs, v)?;
    let c = rs.weight_coords(&num);
    if c.iter().any(|&x| x < 0) {
        return Err(Error::NotDominant);
    }
    Ok(SimpleSet::from_indices((0..rs.rank()).filter(|&i| c[i] == 0)))
}

/// Order of the parabolic subgroup `W_A`, from the types of the components of `A`.
pub fn parabolic_order(rs: &RootSystem, a: SimpleSet) -> u128 {
    let mut order = 1u128;
    let mut left = a;
    while let Some(s) = left.iter().next() {
        let mut comp = SimpleSet::single(s);
        let mut stack = vec![s];
        while let Some(i) = stack.pop() {
            for j in left.iter() {
                if !comp.contains(j) && rs.simple_adjacent(i, j) {
                    comp.insert(j);
                    stack.push(j);
                }
            }
        }
        left = left.minus(comp);
        order *= component_order(rs, comp);
    }
    order
}

fn component_order(rs: &RootSystem, comp: SimpleSet) -> u128 {
    use crate::rootcore::{CartanType, Family};
    let n = comp.len();
    let c = rs.cartan();
    let idx: Vec<usize> = comp.iter().collect();
    let mut multiple = None;
    let mut branch = false;
    for &i in &idx {
        let deg = idx.iter().filter(|&&j| rs.simple_adjacent(i, j)).count();
        if deg >= 3 {
            branch = true;
        }
        for &j in &idx {
            if i != j && c[i][j] * c[j][i] > 1 {
                multiple = Some(c[i][j] * c[j][i]);
            }
        }
    }
    let family = match (multiple, branch) {
        (Some(3), _) => Family::G,
        (Some(2), _) if n == 4 && !is_end_double(rs, &idx) => Family::F,
        (Some(2), _) => Family::B,
        (None, true) => {
            // D_n or E_n: E has a branch with arms (1, 2, ≥2)
            if n >= 6 && is_e_shape(rs, &idx) {
                Family::E
            } else {
                Family::D
            }
        }
        _ => Family::A,
    };
    CartanType { family, rank: n }.weyl_order()
}

fn is_end_double(rs: &RootSystem, idx: &[usize]) -> bool {
    let c = rs.cartan();
    idx.iter().any(|&i| {
        let deg = idx.iter().filter(|&&j| rs.simple_adjacent(i, j)).count();
        deg == 1 && idx.iter().any(|&j| i != j && c[i][j] * c[j][i] == 2)
    })
}

fn is_e_shape(rs: &RootSystem, idx: &[usize]) -> bool {
    let Some(&b) = idx
        .iter()
        .find(|&&i| idx.iter().filter(|&&j| rs.simple_adjacent(i, j)).count() == 3)
    else {
        return false;
    };
    let mut arms: Vec<usize> = Vec::new();
    for &start in idx.iter().filter(|&&j| rs.simple_adjacent(b, j)) {
        let (mut prev, mut cur, mut len) = (b, start, 1);
        loop {
            let nxt: Vec<usize> =
                idx.iter().copied().filter(|&j| j != prev && rs.simple_adjacent(cur, j)).collect();
            if nxt.is_empty() {
                break;
            }
            prev = cur;
            cur = nxt[0];
            len += 1;
        }
        arms.push(len);
    }
    arms.sort_unstable();
    arms[0] == 1 && arms[1] == 2
}
