//! Irreducible root systems in Bourbaki numbering.
//!
//! Simple roots are indexed from 0 in this crate; the CLI and the Python
//! bindings use the 1-based Bourbaki labels.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vector::{qi, LatticeVec, RatVec, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn from_char(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    pub fn as_char(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// An irreducible Cartan type such as `B3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        // bitmask subsets and i64 coordinates stay comfortable below this
        if !ok || rank > 24 {
            return Err(Error::InvalidType(format!("{}{}", family.as_char(), rank)));
        }
        Ok(CartanType { family, rank })
    }

    /// Number of roots, from the closed-form counts.
    pub fn root_count(self) -> usize {
        let l = self.rank;
        match self.family {
            Family::A => l * (l + 1),
            Family::B | Family::C => 2 * l * l,
            Family::D => 2 * l * (l - 1),
            Family::E => match l {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Family::F => 48,
            Family::G => 12,
        }
    }

    /// Order of the Weyl group, from the closed-form products.
    pub fn weyl_order(self) -> u128 {
        let l = self.rank as u128;
        let fact = |n: u128| (1..=n).product::<u128>();
        match self.family {
            Family::A => fact(l + 1),
            Family::B | Family::C => (1u128 << l) * fact(l),
            Family::D => (1u128 << (l - 1)) * fact(l),
            Family::E => match l {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.as_char(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidType(s.to_string());
        let mut chars = s.chars();
        let family = chars.next().and_then(Family::from_char).ok_or_else(bad)?;
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        CartanType::new(family, rank)
    }
}

#[derive(Deserialize)]
struct FixtureFile {
    system: Vec<FixtureEntry>,
}

#[derive(Deserialize)]
struct FixtureEntry {
    name: String,
    cartan: Vec<Vec<i64>>,
    affine: Vec<usize>,
}

/// Cartan matrix and affine attachment (0-based) as listed in the fixture.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureSystem {
    pub cartan: Vec<Vec<i64>>,
    pub affine: Vec<usize>,
}

fn fixture() -> &'static Result<HashMap<CartanType, FixtureSystem>> {
    static FIXTURE: OnceLock<Result<HashMap<CartanType, FixtureSystem>>> = OnceLock::new();
    FIXTURE.get_or_init(|| {
        let file: FixtureFile = toml::from_str(include_str!("../data/cartan.toml"))
            .map_err(|e| Error::Fixture(e.to_string()))?;
        let mut out = HashMap::new();
        for e in file.system {
            let t: CartanType = e.name.parse()?;
            if e.cartan.len() != t.rank || e.cartan.iter().any(|r| r.len() != t.rank) {
                return Err(Error::Fixture(format!("{}: bad matrix shape", e.name)));
            }
            if e.affine.iter().any(|&i| i == 0 || i > t.rank) {
                return Err(Error::Fixture(format!("{}: bad affine node", e.name)));
            }
            let affine = e.affine.iter().map(|i| i - 1).collect();
            out.insert(t, FixtureSystem { cartan: e.cartan, affine });
        }
        Ok(out)
    })
}

/// Looks up a system in the committed fixture.
pub fn fixture_system(t: CartanType) -> Result<Option<FixtureSystem>> {
    match fixture() {
        Ok(m) => Ok(m.get(&t).cloned()),
        Err(e) => Err(e.clone()),
    }
}

/// Cartan matrix of a classical type generated from its Dynkin diagram.
pub fn classical_cartan(t: CartanType) -> Option<Vec<Vec<i64>>> {
    let l = t.rank;
    let mut c = vec![vec![0i64; l]; l];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut bond = |i: usize, j: usize, cij: i64, cji: i64| {
        c[i][j] = cij;
        c[j][i] = cji;
    };
    match t.family {
        Family::A => (0..l - 1).for_each(|i| bond(i, i + 1, -1, -1)),
        Family::B => {
            (0..l - 2).for_each(|i| bond(i, i + 1, -1, -1));
            bond(l - 2, l - 1, -1, -2);
        }
        Family::C => {
            (0..l - 2).for_each(|i| bond(i, i + 1, -1, -1));
            bond(l - 2, l - 1, -2, -1);
        }
        Family::D => {
            (0..l - 2).for_each(|i| bond(i, i + 1, -1, -1));
            bond(l - 3, l - 1, -1, -1);
        }
        _ => return None,
    }
    Some(c)
}

/// Immutable root-system datum.
#[derive(Clone, Debug)]
pub struct RootSystem {
    ctype: CartanType,
    cartan: Vec<Vec<i64>>,
    gram: Vec<Vec<Rational>>,
    gram_int: Vec<Vec<i64>>,
    gram_den: i64,
    half_norms: Vec<Rational>,
    roots: Vec<LatticeVec>,
    n_pos: usize,
    index: HashMap<LatticeVec, usize>,
    long: Vec<bool>,
    theta: LatticeVec,
    theta_s: Option<LatticeVec>,
    coweights: Vec<RatVec>,
    weights: Vec<RatVec>,
    coweight_num: Vec<Vec<i64>>,
    coweight_den: i64,
    weight_num: Vec<Vec<i64>>,
    weight_den: i64,
    affine: Vec<Vec<bool>>,
}

/// Builds the irreducible root system of the given type.
pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    RootSystem::new(CartanType::new(family, rank)?)
}

impl RootSystem {
    pub fn new(ctype: CartanType) -> Result<Self> {
        let (cartan, affine_fixture) = match fixture_system(ctype)? {
            Some(f) => (f.cartan, Some(f.affine)),
            None => (
                classical_cartan(ctype).ok_or_else(|| Error::InvalidType(ctype.to_string()))?,
                None,
            ),
        };
        Self::from_cartan(ctype, cartan, affine_fixture)
    }

    fn from_cartan(
        ctype: CartanType,
        cartan: Vec<Vec<i64>>,
        affine_fixture: Option<Vec<usize>>,
    ) -> Result<Self> {
        let l = ctype.rank;
        for i in 0..l {
            for j in 0..l {
                let bad = if i == j {
                    cartan[i][j] != 2
                } else {
                    cartan[i][j] > 0 || (cartan[i][j] == 0) != (cartan[j][i] == 0)
                };
                if bad {
                    return Err(Error::Fixture(format!("{ctype}: not a Cartan matrix")));
                }
            }
        }

        // symmetrizer: d_j = d_i c_ij / c_ji along the (tree) diagram
        let mut d: Vec<Option<Rational>> = vec![None; l];
        d[0] = Some(Rational::one());
        let mut queue = VecDeque::from([0]);
        while let Some(i) = queue.pop_front() {
            for j in 0..l {
                if i != j && cartan[i][j] != 0 && d[j].is_none() {
                    let di = d[i].clone().unwrap();
                    d[j] = Some(di * qi(cartan[i][j]) / qi(cartan[j][i]));
                    queue.push_back(j);
                }
            }
        }
        let d: Vec<Rational> = d
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Fixture(format!("{ctype}: disconnected diagram")))?;
        let dmax = d.iter().max().unwrap().clone();
        let half_norms: Vec<Rational> = d.iter().map(|x| x / &dmax).collect();
        let gram: Vec<Vec<Rational>> = (0..l)
            .map(|i| (0..l).map(|j| &half_norms[i] * qi(cartan[i][j])).collect())
            .collect();
        for i in 0..l {
            for j in 0..l {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::Fixture(format!("{ctype}: not symmetrizable")));
                }
            }
        }
        if !leading_minors_positive(&gram) {
            return Err(Error::Fixture(format!("{ctype}: Gram matrix not positive definite")));
        }
        let mut gden = num_bigint::BigInt::one();
        for row in &gram {
            for x in row {
                gden = gden.lcm(x.denom());
            }
        }
        let gram_den = gden.to_i64().ok_or(Error::Overflow)?;
        let gram_int: Vec<Vec<i64>> = gram
            .iter()
            .map(|r| r.iter().map(|x| (x * qi(gram_den)).to_integer().to_i64().unwrap()).collect())
            .collect();

        // closure of the simple roots under simple reflections
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..l {
            let e = LatticeVec::unit(l, i).0;
            seen.insert(e.clone(), ());
            queue.push_back(e);
        }
        while let Some(v) = queue.pop_front() {
            for i in 0..l {
                let p: i64 = (0..l).map(|j| cartan[i][j] * v[j]).sum();
                if p == 0 {
                    continue;
                }
                let mut w = v.clone();
                w[i] -= p;
                if !seen.contains_key(&w) {
                    seen.insert(w.clone(), ());
                    queue.push_back(w);
                }
            }
            if seen.len() > 4 * ctype.root_count() {
                return Err(Error::Fixture(format!("{ctype}: root closure does not terminate")));
            }
        }
        let mut pos: Vec<LatticeVec> = Vec::new();
        for v in seen.keys() {
            let nonneg = v.iter().all(|&x| x >= 0);
            let nonpos = v.iter().all(|&x| x <= 0);
            if !nonneg && !nonpos {
                return Err(Error::Inconsistent(format!("{ctype}: root with mixed signs")));
            }
            if nonneg {
                pos.push(LatticeVec(v.clone()));
            }
        }
        pos.sort_by(|a, b| {
            let ha: i64 = a.0.iter().sum();
            let hb: i64 = b.0.iter().sum();
            ha.cmp(&hb).then_with(|| a.cmp(b))
        });
        let n_pos = pos.len();
        let mut roots = pos.clone();
        roots.extend(pos.iter().map(|v| v.neg()));
        if roots.len() != seen.len() || roots.len() != ctype.root_count() {
            return Err(Error::Inconsistent(format!(
                "{ctype}: {} roots, expected {}",
                roots.len(),
                ctype.root_count()
            )));
        }
        let index: HashMap<LatticeVec, usize> =
            roots.iter().cloned().enumerate().map(|(k, v)| (v, k)).collect();

        let norm = |v: &[i64]| -> i64 {
            let mut s = 0;
            for i in 0..l {
                for j in 0..l {
                    s += v[i] * gram_int[i][j] * v[j];
                }
            }
            s
        };
        let long_norm = 2 * gram_den;
        let long: Vec<bool> = roots.iter().map(|r| norm(&r.0) == long_norm).collect();

        let weight_coords =
            |v: &[i64]| -> Vec<i64> { (0..l).map(|i| (0..l).map(|j| cartan[i][j] * v[j]).sum()).collect() };
        let dominant = |v: &LatticeVec| weight_coords(&v.0).iter().all(|&c| c >= 0);
        let dom_long: Vec<&LatticeVec> =
            pos.iter().filter(|v| dominant(v) && long[index[*v]]).collect();
        let dom_short: Vec<&LatticeVec> =
            pos.iter().filter(|v| dominant(v) && !long[index[*v]]).collect();
        if dom_long.len() != 1 {
            return Err(Error::Inconsistent(format!("{ctype}: no unique dominant long root")));
        }
        let theta = dom_long[0].clone();
        let theta_s = if ctype.is_simply_laced() {
            if !dom_short.is_empty() {
                return Err(Error::Inconsistent(format!("{ctype}: short roots in simply laced type")));
            }
            None
        } else {
            if dom_short.len() != 1 {
                return Err(Error::Inconsistent(format!("{ctype}: no unique dominant short root")));
            }
            Some(dom_short[0].clone())
        };

        let ginv = invert(&gram)
            .ok_or_else(|| Error::Inconsistent(format!("{ctype}: singular Gram matrix")))?;
        let coweights: Vec<RatVec> = ginv.iter().map(|r| RatVec(r.clone())).collect();
        let weights: Vec<RatVec> =
            coweights.iter().zip(&half_norms).map(|(w, d)| w.scale(d)).collect();
        let (coweight_num, coweight_den) = common_scale(&coweights)?;
        let (weight_num, weight_den) = common_scale(&weights)?;

        // affine diagram; the extra node has index l
        let mut affine = vec![vec![false; l + 1]; l + 1];
        for i in 0..l {
            for j in 0..l {
                affine[i][j] = i != j && cartan[i][j] != 0;
            }
        }
        let theta_pair: Vec<i64> = (0..l)
            .map(|j| (0..l).map(|i| theta.0[i] * gram_int[i][j]).sum())
            .collect();
        let computed: Vec<usize> = (0..l).filter(|&j| theta_pair[j] != 0).collect();
        if let Some(fx) = affine_fixture {
            let mut fx = fx;
            fx.sort_unstable();
            if fx != computed {
                return Err(Error::Fixture(format!(
                    "{ctype}: affine attachment {fx:?} disagrees with highest root {computed:?}"
                )));
            }
        }
        for &j in &computed {
            affine[l][j] = true;
            affine[j][l] = true;
        }

        Ok(RootSystem {
            ctype,
            cartan,
            gram,
            gram_int,
            gram_den,
            half_norms,
            roots,
            n_pos,
            index,
            long,
            theta,
            theta_s,
            coweights,
            weights,
            coweight_num,
            coweight_den,
            weight_num,
            weight_den,
            affine,
        })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ctype
    }

    pub fn family(&self) -> Family {
        self.ctype.family
    }

    pub fn rank(&self) -> usize {
        self.ctype.rank
    }

    pub fn name(&self) -> String {
        self.ctype.to_string()
    }

    /// `cartan()[i][j] = 2(α_i, α_j) / (α_i, α_i)`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    /// Gram matrix scaled by [`gram_den`](Self::gram_den) to integers.
    pub fn gram_int(&self) -> &[Vec<i64>] {
        &self.gram_int
    }

    pub fn gram_den(&self) -> i64 {
        self.gram_den
    }

    /// `(α_i, α_i) / 2`.
    pub fn half_norms(&self) -> &[Rational] {
        &self.half_norms
    }

    /// All roots: positive roots by height, then their negatives in the same order.
    pub fn roots(&self) -> &[LatticeVec] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[LatticeVec] {
        &self.roots[..self.n_pos]
    }

    pub fn root_index(&self, v: &LatticeVec) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn is_root(&self, v: &LatticeVec) -> bool {
        self.index.contains_key(v)
    }

    pub fn is_long_root(&self, idx: usize) -> bool {
        self.long[idx]
    }

    pub fn theta(&self) -> &LatticeVec {
        &self.theta
    }

    pub fn theta_s(&self) -> Option<&LatticeVec> {
        self.theta_s.as_ref()
    }

    pub fn marks(&self) -> &[i64] {
        &self.theta.0
    }

    pub fn coweights(&self) -> &[RatVec] {
        &self.coweights
    }

    pub fn weights(&self) -> &[RatVec] {
        &self.weights
    }

    /// Fundamental coweight `ω̌_i` in root coordinates.
    pub fn coweight(&self, i: usize) -> Result<RatVec> {
        self.check_index(i)?;
        Ok(self.coweights[i].clone())
    }

    /// Fundamental weight `ω_i` in root coordinates.
    pub fn weight(&self, i: usize) -> Result<RatVec> {
        self.check_index(i)?;
        Ok(self.weights[i].clone())
    }

    /// Coweights as `num[i] / den`.
    pub fn coweights_scaled(&self) -> (&[Vec<i64>], i64) {
        (&self.coweight_num, self.coweight_den)
    }

    /// Weights as `num[i] / den`.
    pub fn weights_scaled(&self) -> (&[Vec<i64>], i64) {
        (&self.weight_num, self.weight_den)
    }

    /// Adjacency in the affine diagram; node `rank()` is the extra node α_0.
    pub fn affine_adjacency(&self) -> &[Vec<bool>] {
        &self.affine
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.rank() {
            return Err(Error::IndexOutOfRange { index: i, rank: self.rank() });
        }
        Ok(())
    }

    pub fn check_dim(&self, n: usize) -> Result<()> {
        if n != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), got: n });
        }
        Ok(())
    }

    /// Exact invariant pairing of two vectors in root coordinates.
    pub fn pairing(&self, u: &RatVec, v: &RatVec) -> Result<Rational> {
        self.check_dim(u.dim())?;
        self.check_dim(v.dim())?;
        let l = self.rank();
        let mut s = Rational::zero();
        for i in 0..l {
            if u.0[i].is_zero() {
                continue;
            }
            for j in 0..l {
                if !self.gram[i][j].is_zero() {
                    s += &u.0[i] * &self.gram[i][j] * &v.0[j];
                }
            }
        }
        Ok(s)
    }

    /// `gram_den() * (u, v)` for integer vectors.
    pub fn pairing_scaled(&self, u: &[i64], v: &[i64]) -> i64 {
        let l = self.rank();
        let mut s = 0;
        for i in 0..l {
            if u[i] == 0 {
                continue;
            }
            for j in 0..l {
                s += u[i] * self.gram_int[i][j] * v[j];
            }
        }
        s
    }

    /// Weight coordinates `(v, α̌_i)`.
    pub fn weight_coords(&self, v: &[i64]) -> Vec<i64> {
        let l = self.rank();
        (0..l).map(|i| (0..l).map(|j| self.cartan[i][j] * v[j]).sum()).collect()
    }

    /// Converts weight coordinates to root coordinates when the result is integral.
    pub fn from_weight_coords(&self, c: &[i64]) -> Result<LatticeVec> {
        self.check_dim(c.len())?;
        let l = self.rank();
        let (num, den) = self.weights_scaled();
        let mut out = vec![0i64; l];
        for j in 0..l {
            let s: i64 = (0..l).map(|i| c[i] * num[i][j]).sum();
            if s % den != 0 {
                return Err(Error::NotInRootLattice);
            }
            out[j] = s / den;
        }
        Ok(LatticeVec(out))
    }

    pub fn is_dominant(&self, v: &[i64]) -> bool {
        self.weight_coords(v).iter().all(|&c| c >= 0)
    }

    /// Is `v` a long root (or, for simply laced types, any root)?
    pub fn is_long(&self, v: &LatticeVec) -> Option<bool> {
        self.root_index(v).map(|k| self.long[k])
    }

    pub fn simple_adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan[i][j] != 0
    }
}

fn leading_minors_positive(g: &[Vec<Rational>]) -> bool {
    (1..=g.len()).all(|k| {
        let m: Vec<Vec<Rational>> = g[..k].iter().map(|r| r[..k].to_vec()).collect();
        determinant(m).is_positive()
    })
}

pub(crate) fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        let piv = m[c][c].clone();
        det *= &piv;
        for r in c + 1..n {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &piv;
            for k in c..n {
                let t = &f * &m[c][k];
                m[r][k] -= t;
            }
        }
    }
    det
}

pub(crate) fn invert(g: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = g.len();
    let mut a: Vec<Vec<Rational>> = g
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(p, c);
        let piv = a[c][c].clone();
        for k in 0..2 * n {
            a[c][k] = &a[c][k] / &piv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for k in 0..2 * n {
                    let t = &f * &a[c][k];
                    a[r][k] -= t;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

fn common_scale(vs: &[RatVec]) -> Result<(Vec<Vec<i64>>, i64)> {
    let mut den = num_bigint::BigInt::one();
    for v in vs {
        for x in &v.0 {
            den = den.lcm(x.denom());
        }
    }
    let d = den.to_i64().ok_or(Error::Overflow)?;
    let num = vs
        .iter()
        .map(|v| {
            v.0.iter()
                .map(|x| (x * qi(d)).to_integer().to_i64().ok_or(Error::Overflow))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((num, d))
}

/// Every type with rank at most `max_rank`, in a fixed order.
pub fn all_types(max_rank: usize) -> Vec<CartanType> {
    let mut out = Vec::new();
    for rank in 1..=max_rank {
        for family in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
            if let Ok(t) = CartanType::new(family, rank) {
                out.push(t);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::q;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn a2_basics() {
        let r = rs("A2");
        assert_eq!(r.roots().len(), 6);
        assert_eq!(r.theta().0, vec![1, 1]);
        assert_eq!(r.marks(), &[1, 1]);
        assert!(r.theta_s().is_none());
        let a1 = RatVec::from_ints(&[1, 0]);
        let a2 = RatVec::from_ints(&[0, 1]);
        assert_eq!(r.pairing(&a1, &a2).unwrap(), qi(-1));
        assert_eq!(r.coweight(0).unwrap(), RatVec(vec![q(2, 3), q(1, 3)]));
    }

    #[test]
    fn g2_basics() {
        let r = rs("G2");
        assert_eq!(r.roots().len(), 12);
        assert_eq!(r.marks(), &[3, 2]);
        assert_eq!(r.coweight(0).unwrap(), RatVec::from_ints(&[6, 3]));
        let w1 = r.weight(0).unwrap();
        assert_eq!(w1, RatVec::from_ints(&[2, 1]));
        assert_eq!(r.pairing(&r.coweight(0).unwrap(), &w1).unwrap(), qi(2));
        assert!(r.is_root(&LatticeVec(vec![2, 1])));
    }

    #[test]
    fn b3_basics() {
        let r = rs("B3");
        assert_eq!(r.roots().len(), 18);
        assert_eq!(r.theta().0, vec![1, 2, 2]);
        assert_eq!(r.theta_s().unwrap().0, vec![1, 1, 1]);
        assert_eq!(r.cartan()[2], vec![0, -2, 2]);
        assert!(!r.is_root(&LatticeVec(vec![0, -1, 1])));
        assert!(!r.is_root(&LatticeVec(vec![0, 0, 0])));
    }

    #[test]
    fn e7_pairing_example() {
        let r = rs("E7");
        let w2 = r.weight(1).unwrap().scale(&qi(2));
        assert_eq!(r.pairing(&r.coweight(1).unwrap(), &w2).unwrap(), qi(7));
    }

    #[test]
    fn fixture_matches_generator() {
        for t in all_types(8) {
            if let Some(c) = classical_cartan(t) {
                assert_eq!(fixture_system(t).unwrap().unwrap().cartan, c, "{t}");
            }
        }
    }

    #[test]
    fn invariants_all_types() {
        for t in all_types(8) {
            let r = RootSystem::new(t).unwrap();
            let l = r.rank();
            assert_eq!(r.roots().len(), t.root_count(), "{t}");
            for b in r.roots() {
                assert!(r.is_root(&b.neg()));
                let n = r.pairing_scaled(&b.0, &b.0);
                let norm = q(n, r.gram_den());
                assert!(norm == qi(2) || norm == qi(1) || norm == q(2, 3), "{t}");
                for i in 0..l {
                    let mut w = b.0.clone();
                    w[i] -= r.weight_coords(&b.0)[i];
                    assert!(r.is_root(&LatticeVec(w)));
                }
            }
            for i in 0..l {
                for j in 0..l {
                    let e = RatVec::from_ints(&LatticeVec::unit(l, j).0);
                    let p = r.pairing(&r.coweights()[i], &e).unwrap();
                    assert_eq!(p, if i == j { qi(1) } else { qi(0) });
                }
                let p = r.pairing(&r.coweights()[i], &r.theta().to_ratvec()).unwrap();
                assert_eq!(p, qi(r.marks()[i]));
            }
        }
    }

    #[test]
    fn large_classical_rank() {
        let r = RootSystem::new(CartanType::new(Family::D, 10).unwrap()).unwrap();
        assert_eq!(r.roots().len(), 180);
    }

    #[test]
    fn invalid_types() {
        assert!(build_root_system(Family::D, 3).is_err());
        assert!(build_root_system(Family::E, 9).is_err());
        assert!(build_root_system(Family::G, 3).is_err());
        assert!("X3".parse::<CartanType>().is_err());
    }
}
