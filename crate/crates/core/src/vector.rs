//! Coordinate vectors over the simple roots and a small set type for subsets of Δ.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational number in lowest terms.
pub type Rational = BigRational;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Formats a rational as `p/q`, always with an explicit denominator.
pub fn fmt_rational(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `p/q`, `p` or a decimal-free integer string.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn ceil_to_i64(x: &Rational) -> Result<i64> {
    x.ceil().to_integer().to_i64().ok_or(Error::Overflow)
}

pub fn floor_to_i64(x: &Rational) -> Result<i64> {
    x.floor().to_integer().to_i64().ok_or(Error::Overflow)
}

/// Ceiling of `a / b` for `b > 0`.
pub fn ceil_div(a: i64, b: i64) -> i64 {
    num_integer::Integer::div_ceil(&a, &b)
}

/// Floor of `a / b` for `b > 0`.
pub fn floor_div(a: i64, b: i64) -> i64 {
    num_integer::Integer::div_floor(&a, &b)
}

/// Integer vector in the basis of simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticeVec(pub Vec<i64>);

impl LatticeVec {
    pub fn zero(n: usize) -> Self {
        LatticeVec(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        LatticeVec(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn add(&self, o: &LatticeVec) -> LatticeVec {
        LatticeVec(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &LatticeVec) -> LatticeVec {
        LatticeVec(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> LatticeVec {
        LatticeVec(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i64) -> LatticeVec {
        LatticeVec(self.0.iter().map(|a| a * k).collect())
    }

    /// Coordinatewise `self >= o`.
    pub fn dominates(&self, o: &LatticeVec) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a >= b)
    }

    pub fn to_ratvec(&self) -> RatVec {
        RatVec(self.0.iter().map(|&x| qi(x)).collect())
    }
}

impl From<Vec<i64>> for LatticeVec {
    fn from(v: Vec<i64>) -> Self {
        LatticeVec(v)
    }
}

impl fmt::Display for LatticeVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Rational vector in the basis of simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatVec(pub Vec<Rational>);

impl RatVec {
    pub fn zero(n: usize) -> Self {
        RatVec(vec![Rational::zero(); n])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        RatVec(v.iter().map(|&x| qi(x)).collect())
    }

    /// `num / den` coordinatewise.
    pub fn from_scaled(num: &[i64], den: i64) -> Self {
        RatVec(num.iter().map(|&x| q(x, den)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, o: &RatVec) -> RatVec {
        RatVec(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &RatVec) -> RatVec {
        RatVec(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &Rational) -> RatVec {
        RatVec(self.0.iter().map(|a| a * k).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.is_integer())
    }

    pub fn to_lattice(&self) -> Option<LatticeVec> {
        self.0
            .iter()
            .map(|x| if x.is_integer() { x.to_integer().to_i64() } else { None })
            .collect::<Option<Vec<_>>>()
            .map(LatticeVec)
    }

    /// Writes the vector as `num / den` with `den > 0` minimal.
    pub fn to_scaled(&self) -> Result<(Vec<i64>, i64)> {
        let mut den = BigInt::one();
        for x in &self.0 {
            den = den.lcm(x.denom());
        }
        let num = self
            .0
            .iter()
            .map(|x| (x.numer() * (&den / x.denom())).to_i64().ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok((num, den.to_i64().ok_or(Error::Overflow)?))
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(fmt_rational).collect()
    }

    pub fn from_strings(s: &[String]) -> Result<Self> {
        s.iter().map(|x| parse_rational(x)).collect::<Result<Vec<_>>>().map(RatVec)
    }

    pub fn has_negative(&self) -> bool {
        self.0.iter().any(|x| x.is_negative())
    }
}

impl Serialize for RatVec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl fmt::Display for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A subset of the simple roots, stored as a bitmask over 0-based indices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleSet(pub u32);

impl SimpleSet {
    pub const EMPTY: SimpleSet = SimpleSet(0);

    pub fn full(rank: usize) -> Self {
        SimpleSet(((1u64 << rank) - 1) as u32)
    }

    pub fn single(i: usize) -> Self {
        SimpleSet(1 << i)
    }

    /// Builds a set from 1-based (Bourbaki) indices.
    pub fn from_bourbaki(idx: &[usize]) -> Self {
        SimpleSet(idx.iter().fold(0, |m, &i| m | (1 << (i - 1))))
    }

    pub fn from_indices(idx: impl IntoIterator<Item = usize>) -> Self {
        SimpleSet(idx.into_iter().fold(0, |m, i| m | (1 << i)))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1 << i);
    }

    pub fn with(self, i: usize) -> Self {
        SimpleSet(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Self {
        SimpleSet(self.0 & !(1 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, o: SimpleSet) -> Self {
        SimpleSet(self.0 | o.0)
    }

    pub fn intersect(self, o: SimpleSet) -> Self {
        SimpleSet(self.0 & o.0)
    }

    pub fn minus(self, o: SimpleSet) -> Self {
        SimpleSet(self.0 & !o.0)
    }

    pub fn complement(self, rank: usize) -> Self {
        SimpleSet::full(rank).minus(self)
    }

    pub fn is_subset(self, o: SimpleSet) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }

    pub fn to_bourbaki(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    /// All subsets of `{0..rank}` in increasing bitmask order.
    pub fn all(rank: usize) -> impl Iterator<Item = SimpleSet> {
        (0..(1u32 << rank)).map(SimpleSet)
    }
}

impl fmt::Display for SimpleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_strings_round_trip() {
        for s in ["2/3", "-1/2", "0/1", "7/1"] {
            assert_eq!(fmt_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(parse_rational("4").unwrap(), qi(4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn scaled_form() {
        let v = RatVec(vec![q(2, 3), q(1, 3), qi(0)]);
        assert_eq!(v.to_scaled().unwrap(), (vec![2, 1, 0], 3));
        assert_eq!(RatVec::from_scaled(&[2, 1, 0], 3), v);
    }

    #[test]
    fn simple_set_ops() {
        let a = SimpleSet::from_bourbaki(&[1, 3]);
        assert_eq!(a.to_bourbaki(), vec![1, 3]);
        assert_eq!(a.complement(3), SimpleSet::from_bourbaki(&[2]));
        assert_eq!(a.to_string(), "{1,3}");
        assert_eq!(SimpleSet::all(3).count(), 8);
    }
}
