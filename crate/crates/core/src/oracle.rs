//! Brute-force lengths that never consult facets: meet-in-the-middle over sums of roots,
//! and breadth-first search for positive lengths.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::rootcore::RootSystem;
use crate::vector::LatticeVec;

pub const DEFAULT_R_MAX: usize = 6;

/// Default cap on the states visited by [`brute_positive_length`].
pub const DEFAULT_BFS_CAP: usize = 10_000_000;

/// Tables `S_k` of all sums of `k` roots, `k ≤ ⌈r_max / 2⌉`, each sum mapped to the last
/// root index used to reach it.
pub struct LengthOracle {
    roots: Vec<LatticeVec>,
    rank: usize,
    r_max: usize,
    tables: Vec<HashMap<Vec<i64>, usize>>,
}

impl LengthOracle {
    pub fn new(rs: &RootSystem, r_max: usize) -> LengthOracle {
        let roots = rs.roots().to_vec();
        let rank = rs.rank();
        let depth = r_max.div_ceil(2);
        let mut tables: Vec<HashMap<Vec<i64>, usize>> = vec![HashMap::from([(vec![0; rank], usize::MAX)])];
        for _ in 0..depth {
            let prev = tables.last().unwrap();
            let mut next = HashMap::with_capacity(prev.len() * 4);
            // keys are sorted so the stored predecessor does not depend on hashing order
            let mut keys: Vec<&Vec<i64>> = prev.keys().collect();
            keys.sort();
            for s in keys {
                for (i, b) in roots.iter().enumerate() {
                    let t: Vec<i64> = s.iter().zip(&b.0).map(|(x, y)| x + y).collect();
                    next.entry(t).or_insert(i);
                }
            }
            tables.push(next);
        }
        LengthOracle { roots, rank, r_max, tables }
    }

    pub fn r_max(&self) -> usize {
        self.r_max
    }

    fn unwind(&self, k: usize, s: &[i64]) -> Vec<LatticeVec> {
        let mut out = Vec::with_capacity(k);
        let mut cur = s.to_vec();
        for j in (1..=k).rev() {
            let i = self.tables[j][&cur];
            out.push(self.roots[i].clone());
            cur = cur.iter().zip(&self.roots[i].0).map(|(x, y)| x - y).collect();
        }
        out
    }

    /// Smallest `r ≤ r_max` with `γ` a sum of `r` roots, with a witness multiset.
    pub fn length_with_witness(&self, g: &LatticeVec) -> Result<(usize, Vec<LatticeVec>)> {
        if g.dim() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, got: g.dim() });
        }
        for r in 0..=self.r_max {
            let a = r / 2;
            let b = r - a;
            // scan the smaller table, look the complement up in the larger one
            for x in self.tables[a].keys() {
                let rest: Vec<i64> = g.0.iter().zip(x).map(|(p, q)| p - q).collect();
                if self.tables[b].contains_key(&rest) {
                    let mut w = self.unwind(a, x);
                    w.extend(self.unwind(b, &rest));
                    w.sort();
                    return Ok((r, w));
                }
            }
        }
        Err(Error::ExceedsRMax(self.r_max))
    }

    pub fn length(&self, g: &LatticeVec) -> Result<usize> {
        self.length_with_witness(g).map(|x| x.0)
    }
}

/// One-shot brute length; build a [`LengthOracle`] for repeated queries.
pub fn brute_length(rs: &RootSystem, g: &LatticeVec, r_max: usize) -> Result<usize> {
    rs.check_dim(g.dim())?;
    LengthOracle::new(rs, r_max).length(g)
}

/// Minimal number of positive roots summing to `γ`, by breadth-first search from `γ` to
/// `0` subtracting positive roots inside the nonnegative orthant.
pub fn brute_positive_length(rs: &RootSystem, g: &LatticeVec, cap: usize) -> Result<usize> {
    rs.check_dim(g.dim())?;
    if !g.is_nonnegative() {
        return Err(Error::NotPositive);
    }
    let mut seen: HashMap<Vec<i64>, usize> = HashMap::from([(g.0.clone(), 0)]);
    let mut queue = VecDeque::from([g.0.clone()]);
    while let Some(v) = queue.pop_front() {
        let d = seen[&v];
        if v.iter().all(|&x| x == 0) {
            return Ok(d);
        }
        for b in rs.positive_roots() {
            let w: Vec<i64> = v.iter().zip(&b.0).map(|(x, y)| x - y).collect();
            if w.iter().all(|&x| x >= 0) && !seen.contains_key(&w) {
                if seen.len() >= cap {
                    return Err(Error::CapExceeded { what: "positive-length search states", cap });
                }
                seen.insert(w.clone(), d + 1);
                queue.push_back(w);
            }
        }
    }
    Err(Error::Inconsistent("positive element not reachable".into()))
}
