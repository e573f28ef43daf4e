//! Integer partitions and the scalar kernel built on them: dominance,
//! containment, conjugation, cells and the generalized Pochhammer symbol.

use std::cmp::Ordering;
use std::fmt;

use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{half, int, rising, Rational};

/// A partition in canonical form: weakly decreasing positive parts, no
/// trailing zeros. `(2, 0)` and `(2)` are the same value.
///
/// The ordering is weight ascending, then lexicographically descending, so
/// ordered maps keyed by partitions iterate in the output order used
/// everywhere in this crate.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// Trusted constructor for parts already known to be weakly decreasing.
    pub(crate) fn from_sorted(mut parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    /// Builds a partition from any exponent vector by sorting it.
    pub(crate) fn from_unsorted(exps: &[u32]) -> Self {
        let mut parts = exps.to_vec();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_sorted(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The `i`-th part, 1-based, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// Parts zero-padded to length `r`. Callers guarantee `len() <= r`.
    pub fn padded(&self, r: usize) -> Vec<u32> {
        debug_assert!(self.len() <= r);
        let mut v = self.parts.clone();
        v.resize(r.max(self.len()), 0);
        v
    }

    pub fn check_fits(&self, r: usize) -> Result<()> {
        if self.len() > r {
            Err(Error::TooManyParts {
                partition: self.to_string(),
                r,
            })
        } else {
            Ok(())
        }
    }

    /// Conjugate partition: `m'_j = #{i : m_i >= j}`.
    pub fn conjugate(&self) -> Partition {
        let first = self.part(1);
        let parts = (1..=first)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition::from_sorted(parts)
    }

    /// Strict dominance `self < other`; both must have the same weight.
    pub fn dominance_less(&self, other: &Partition) -> Result<bool> {
        let (a, b) = (self.weight(), other.weight());
        if a != b {
            return Err(Error::WeightMismatch { left: a, right: b });
        }
        if self == other {
            return Ok(false);
        }
        let n = self.len().max(other.len());
        let (mut sa, mut sb) = (0u32, 0u32);
        for i in 1..=n {
            sa += self.part(i);
            sb += other.part(i);
            if sa > sb {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Diagram containment: `k ⊂ self` iff `k_i <= self_i` for every `i`.
    pub fn contains(&self, k: &Partition) -> bool {
        k.len() <= self.len() && (1..=k.len()).all(|i| k.part(i) <= self.part(i))
    }

    /// Cells `(i, j)` of the Young diagram, 1-based, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i as u32 + 1, j)))
    }

    /// `self + ε_i` if the result is still a partition (1-based `i`, `i <= r`).
    pub fn add_box(&self, i: usize, r: usize) -> Option<Partition> {
        if i == 0 || i > r || (i > 1 && self.part(i - 1) == self.part(i)) {
            return None;
        }
        let mut v = self.padded(r);
        v[i - 1] += 1;
        Some(Partition::from_sorted(v))
    }

    /// `self - ε_i` if the result is still a partition.
    pub fn remove_box(&self, i: usize, r: usize) -> Option<Partition> {
        if i == 0 || i > r || self.part(i) == 0 || self.part(i) == self.part(i + 1) {
            return None;
        }
        let mut v = self.padded(r);
        v[i - 1] -= 1;
        Some(Partition::from_sorted(v))
    }

    /// All partitions `k ⊂ self`, in the crate's canonical order.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.len());
        fn rec(bound: &[u32], cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if cur.len() == bound.len() {
                out.push(Partition::from_sorted(cur.clone()));
                return;
            }
            let hi = bound[cur.len()].min(cap);
            for v in 0..=hi {
                cur.push(v);
                rec(bound, v, cur, out);
                cur.pop();
            }
        }
        rec(&self.parts, u32::MAX, &mut cur, &mut out);
        out.sort();
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Partitions with exactly `weight` and at most `r` parts, lexicographically
/// descending.
pub fn partitions_of(weight: u32, r: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for v in (1..=rem.min(cap)).rev() {
            cur.push(v);
            rec(rem - v, v, slots - 1, cur, out);
            cur.pop();
        }
    }
    rec(weight, weight, r, &mut cur, &mut out);
    out
}

/// Every partition with at most `r` parts and weight `<= max_weight`, weight
/// ascending and lexicographically descending within a weight.
pub fn enumerate_partitions(r: usize, max_weight: u32) -> Vec<Partition> {
    (0..=max_weight).flat_map(|w| partitions_of(w, r)).collect()
}

/// Generalized Pochhammer symbol `(a)_m = Π_j (a - (d/2)(j-1))_{m_j}`.
pub fn gen_pochhammer(a: &Rational, m: &Partition, d: &Rational) -> Rational {
    let h = half(d);
    m.parts()
        .iter()
        .enumerate()
        .fold(Rational::one(), |acc, (j, &mj)| {
            acc * rising(&(a - &h * int(j as i64)), mj)
        })
}
