//! The length map `γ ↦ |γ|`, minimal decompositions and the positive length.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polytope::{maximal_roots, Facet};
use crate::rootcore::{Family, RootSystem};
use crate::vector::{ceil_to_i64, q, LatticeVec, SimpleSet};

/// Default cap on the state space of the positive-length recursion.
pub const DEFAULT_DP_CAP: usize = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LengthResult {
    pub gamma: LatticeVec,
    pub length: i64,
    /// 1-based maximal roots whose standard facet attains the maximum at `dom(γ)`.
    pub attaining_facets: Vec<usize>,
    pub decomposition: Option<Vec<LatticeVec>>,
}

fn check_gamma(rs: &RootSystem, g: &LatticeVec) -> Result<()> {
    rs.check_dim(g.dim())
}

/// `max_α ⌈dom(γ)_α / m_α⌉` over maximal roots, with the attaining roots.
fn length_with_attaining(rs: &RootSystem, g: &LatticeVec) -> (i64, Vec<usize>) {
    if g.is_zero() {
        return (0, Vec::new());
    }
    let d = rs.dominant(&g.0, SimpleSet::full(rs.rank()));
    let m = rs.marks();
    let vals: Vec<(usize, i64)> = maximal_roots(rs)
        .into_iter()
        .map(|a| (a, crate::vector::ceil_div(d[a], m[a])))
        .collect();
    let best = vals.iter().map(|v| v.1).max().unwrap();
    let att = vals.iter().filter(|v| v.1 == best).map(|v| v.0 + 1).collect();
    (best, att)
}

pub fn length(rs: &RootSystem, g: &LatticeVec) -> Result<LengthResult> {
    check_gamma(rs, g)?;
    let (length, attaining_facets) = length_with_attaining(rs, g);
    Ok(LengthResult { gamma: g.clone(), length, attaining_facets, decomposition: None })
}

pub fn length_value(rs: &RootSystem, g: &LatticeVec) -> Result<i64> {
    check_gamma(rs, g)?;
    Ok(length_with_attaining(rs, g).0)
}

/// The same maximum, taken over an explicit facet list.
pub fn length_by_facets(rs: &RootSystem, g: &LatticeVec, facets: &[Facet]) -> Result<i64> {
    check_gamma(rs, g)?;
    let mut best = 0;
    for f in facets {
        best = best.max(ceil_to_i64(&q(f.eval_num(&g.0), f.denom))?);
    }
    Ok(best)
}

/// Length together with a minimal decomposition.
pub fn length_with_decomposition(rs: &RootSystem, g: &LatticeVec) -> Result<LengthResult> {
    let mut r = length(rs, g)?;
    r.decomposition = Some(decompose(rs, g)?);
    Ok(r)
}

/// A multiset of `|γ|` roots summing to `γ`: greedily take the lexicographically first
/// root that drops the length by one.
pub fn decompose(rs: &RootSystem, g: &LatticeVec) -> Result<Vec<LatticeVec>> {
    check_gamma(rs, g)?;
    let mut roots: Vec<&LatticeVec> = rs.roots().iter().collect();
    roots.sort();
    let mut out = Vec::new();
    let mut cur = g.clone();
    let mut len = length_with_attaining(rs, &cur).0;
    while len > 0 {
        let next = roots
            .iter()
            .map(|b| cur.sub(b))
            .position(|rest| length_with_attaining(rs, &rest).0 == len - 1)
            .ok_or_else(|| Error::Inconsistent(format!("no root lowers the length of {cur}")))?;
        out.push(roots[next].clone());
        cur = cur.sub(roots[next]);
        len -= 1;
    }
    out.sort();
    Ok(out)
}

/// Minimal number of positive roots summing to `γ`, by a forward recursion over the box
/// `[0, γ_1] × … × [0, γ_ℓ]`.
pub fn positive_length(rs: &RootSystem, g: &LatticeVec, cap: usize) -> Result<i64> {
    check_gamma(rs, g)?;
    if !g.is_nonnegative() {
        return Err(Error::NotPositive);
    }
    let l = rs.rank();
    let mut size: usize = 1;
    let mut stride = vec![0usize; l];
    for i in 0..l {
        stride[i] = size;
        size = size
            .checked_mul(g.0[i] as usize + 1)
            .filter(|&s| s <= cap)
            .ok_or(Error::CapExceeded { what: "positive-length states", cap })?;
    }
    let steps: Vec<(usize, &LatticeVec)> = rs
        .positive_roots()
        .iter()
        .filter(|b| b.0.iter().zip(&g.0).all(|(x, y)| x <= y))
        .map(|b| (b.0.iter().zip(&stride).map(|(x, s)| *x as usize * s).sum(), b))
        .collect();
    let mut dp = vec![u32::MAX; size];
    dp[0] = 0;
    let mut coords = vec![0i64; l];
    for idx in 0..size {
        if idx > 0 {
            // advance the mixed-radix counter
            let mut i = 0;
            while coords[i] == g.0[i] {
                coords[i] = 0;
                i += 1;
            }
            coords[i] += 1;
        }
        let here = dp[idx];
        if here == u32::MAX {
            continue;
        }
        for (off, b) in &steps {
            if b.0.iter().zip(&coords).zip(&g.0).all(|((x, c), y)| x + c <= *y) {
                let t = idx + off;
                if dp[t] > here + 1 {
                    dp[t] = here + 1;
                }
            }
        }
    }
    Ok(i64::from(dp[size - 1]))
}

/// `Σ_i max(a_i − a_{i−1}, 0)` with `a_0 = 0`, for type A.
pub fn horizontal_length_type_a(rs: &RootSystem, g: &LatticeVec) -> Result<i64> {
    if rs.family() != Family::A {
        return Err(Error::WrongFamily);
    }
    check_gamma(rs, g)?;
    if !g.is_nonnegative() {
        return Err(Error::NotPositive);
    }
    let mut prev = 0;
    let mut h = 0;
    for &a in &g.0 {
        h += (a - prev).max(0);
        prev = a;
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::enumerate_facets;
    use crate::rootcore::all_types;
    use crate::weyl::WeylWord;
    use proptest::prelude::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    fn lv(v: &[i64]) -> LatticeVec {
        LatticeVec(v.to_vec())
    }

    #[test]
    fn length_examples() {
        let b3 = rs("B3");
        assert_eq!(length(&b3, &lv(&[1, 0, 2])).unwrap().length, 2);
        let g2 = rs("G2");
        assert_eq!(length(&g2, &lv(&[2, 1])).unwrap().length, 1);
        assert_eq!(length(&g2, &lv(&[4, 2])).unwrap().length, 2);
        assert_eq!(length(&b3, &lv(&[0, 0, 0])).unwrap().length, 0);
        assert!(length(&b3, &lv(&[1, 0])).is_err());
    }

    #[test]
    fn decompose_examples() {
        let b3 = rs("B3");
        assert_eq!(decompose(&b3, &lv(&[1, 0, 2])).unwrap(), vec![lv(&[0, -1, 0]), lv(&[1, 1, 2])]);
        let d = decompose(&b3, &lv(&[1, 2, 3])).unwrap();
        assert_eq!(d.len(), 2);
        let e8 = rs("E8");
        let w2 = e8.from_weight_coords(&[0, 1, 0, 0, 0, 0, 0, 0]).unwrap();
        let d = decompose(&e8, &w2).unwrap();
        assert_eq!(d.len(), 3);
        assert_eq!(d.iter().fold(LatticeVec::zero(8), |a, b| a.add(b)), w2);
        assert!(d.iter().all(|b| e8.is_root(b)));
    }

    #[test]
    fn positive_length_examples() {
        let b3 = rs("B3");
        assert_eq!(positive_length(&b3, &lv(&[1, 0, 2]), DEFAULT_DP_CAP).unwrap(), 3);
        for b in b3.positive_roots() {
            assert_eq!(positive_length(&b3, b, DEFAULT_DP_CAP).unwrap(), 1);
        }
        let a6 = rs("A6");
        let g = lv(&[2, 3, 3, 0, 4, 1]);
        assert_eq!(positive_length(&a6, &g, DEFAULT_DP_CAP).unwrap(), 7);
        assert_eq!(horizontal_length_type_a(&a6, &g).unwrap(), 7);
        assert!(positive_length(&b3, &lv(&[1, -1, 0]), DEFAULT_DP_CAP).is_err());
        assert!(positive_length(&a6, &lv(&[9, 9, 9, 9, 9, 9]), 1000).is_err());
        assert_eq!(horizontal_length_type_a(&rs("A2"), &lv(&[2, 1])).unwrap(), 2);
        assert!(horizontal_length_type_a(&b3, &lv(&[1, 0, 0])).is_err());
    }

    #[test]
    fn dominant_shortcut_matches_facets() {
        for t in all_types(4) {
            let r = RootSystem::new(t).unwrap();
            let facets = enumerate_facets(&r).unwrap();
            let l = r.rank();
            let n = 7i64.pow(l as u32);
            for code in 0..n {
                let mut c = code;
                let g: Vec<i64> = (0..l).map(|_| { let d = c % 7 - 3; c /= 7; d }).collect();
                let g = LatticeVec(g);
                let a = length_value(&r, &g).unwrap();
                assert_eq!(a, length_by_facets(&r, &g, &facets).unwrap(), "{t} {g}");
                for f in &facets {
                    assert!(ceil_to_i64(&f.value(&g.0)).unwrap() <= a);
                }
            }
        }
    }

    #[test]
    fn length_one_iff_root() {
        for t in all_types(4) {
            let r = RootSystem::new(t).unwrap();
            for b in r.roots() {
                assert_eq!(length_value(&r, b).unwrap(), 1);
            }
        }
    }

    proptest! {
        #[test]
        fn invariance_and_subadditivity(a in prop::collection::vec(-4i64..5, 4),
                                        b in prop::collection::vec(-4i64..5, 4),
                                        w in prop::collection::vec(0usize..4, 0..10),
                                        pick in 0usize..4) {
            let r = RootSystem::new(["B4", "C4", "D4", "F4"][pick].parse().unwrap()).unwrap();
            let (a, b) = (LatticeVec(a), LatticeVec(b));
            let la = length_value(&r, &a).unwrap();
            let lb = length_value(&r, &b).unwrap();
            prop_assert!(length_value(&r, &a.add(&b)).unwrap() <= la + lb);
            prop_assert_eq!(la == 0, a.is_zero());
            prop_assert_eq!(la == 1, r.is_root(&a));
            let wa = r.act_root(&WeylWord(w), &a);
            prop_assert_eq!(length_value(&r, &wa).unwrap(), la);
            prop_assert_eq!(length_value(&r, &a.neg()).unwrap(), la);
            let d = decompose(&r, &a).unwrap();
            prop_assert_eq!(d.len() as i64, la);
            prop_assert_eq!(d.iter().fold(LatticeVec::zero(4), |s, x| s.add(x)), a);
        }
    }
}
