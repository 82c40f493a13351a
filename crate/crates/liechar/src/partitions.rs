//! Integer partitions: the bookkeeping substrate for Jordan types of
//! unipotent elements.
//!
//! Partitions are stored in part-list form (weakly decreasing, no zero
//! parts); a multiplicity view is derived on demand since the classical
//! centralizer formulas are written in multiplicities.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Guard for [`Partition::enumerate`]; p(40) = 37338 keeps sweeps instant.
pub const ENUMERATE_MAX: u32 = 40;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be positive (got a zero part)")]
    ZeroPart,
    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<u32>),
    #[error("dominance comparison requires equal sums: {0} vs {1}")]
    MismatchedSizes(u32, u32),
    #[error("enumeration guard: n must satisfy 1 <= n <= {ENUMERATE_MAX}, got {0}")]
    OutOfRange(u32),
}

/// A partition of a positive integer, i.e. a weakly decreasing tuple of
/// positive parts. The empty partition (of 0) is allowed so that absent
/// classical factors have a Jordan type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from an already weakly decreasing list of
    /// positive parts.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self, PartitionError> {
        let parts = parts.into();
        if parts.iter().any(|&p| p == 0) {
            return Err(PartitionError::ZeroPart);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The partitioned integer, sum of the parts.
    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// True for the Jordan type of the identity, (1^n) (or the empty type).
    pub fn is_trivial(&self) -> bool {
        self.parts.first().is_none_or(|&p| p == 1)
    }

    /// Multiplicity view `m_i = #{j : parts[j] = i}`.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Transpose of the Young diagram; an involution.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0) as usize;
        let mut conj = Vec::with_capacity(cols);
        for k in 1..=cols as u32 {
            conj.push(self.parts.iter().filter(|&&p| p >= k).count() as u32);
        }
        Partition { parts: conj }
    }

    /// Parabolic block sizes whose Richardson class has this Jordan type;
    /// equals the conjugate partition's parts.
    pub fn richardson_blocks(&self) -> Vec<u32> {
        self.conjugate().parts
    }

    /// Dominance order: true iff every prefix sum of `self` is at most the
    /// corresponding prefix sum of `other`. Errors when the partitioned
    /// integers differ (incomparable sizes).
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool, PartitionError> {
        if self.n() != other.n() {
            return Err(PartitionError::MismatchedSizes(self.n(), other.n()));
        }
        let mut acc_self: u64 = 0;
        let mut acc_other: u64 = 0;
        let len = self.parts.len().max(other.parts.len());
        for i in 0..len {
            acc_self += u64::from(self.parts.get(i).copied().unwrap_or(0));
            acc_other += u64::from(other.parts.get(i).copied().unwrap_or(0));
            if acc_self > acc_other {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All partitions of `n`, each exactly once, in reverse-lexicographic
    /// order: (n), (n-1,1), ..., (1^n).
    pub fn enumerate(n: u32) -> Result<Vec<Partition>, PartitionError> {
        if n == 0 || n > ENUMERATE_MAX {
            return Err(PartitionError::OutOfRange(n));
        }
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(remaining: u32, max_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            let hi = remaining.min(max_part);
            for p in (1..=hi).rev() {
                cur.push(p);
                rec(remaining - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        Ok(out)
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

/// Number of partitions of `n`, via the pentagonal-number recurrence.
/// Independent of [`Partition::enumerate`]; used to cross-check counts.
pub fn partition_count(n: u32) -> u64 {
    let n = n as usize;
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut total = 0i64;
        let mut k = 1i64;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            let g2 = k * (3 * k + 1) / 2;
            if g1 as usize > m && g2 as usize > m {
                break;
            }
            let sign = if k % 2 == 0 { -1 } else { 1 };
            if g1 as usize <= m {
                total += sign * p[m - g1 as usize];
            }
            if g2 as usize <= m {
                total += sign * p[m - g2 as usize];
            }
            k += 1;
        }
        p[m] = total;
    }
    p[n] as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(pt(&[3, 1]).conjugate(), pt(&[2, 1, 1]));
        assert_eq!(pt(&[5]).conjugate(), pt(&[1, 1, 1, 1, 1]));
        // rectangle symmetry: k rows of m <-> m entries of k
        assert_eq!(pt(&[4, 4, 4]).conjugate(), pt(&[3, 3, 3, 3]));
    }

    #[test]
    fn conjugate_is_involution_exhaustive() {
        for n in 1..=20 {
            for p in Partition::enumerate(n).unwrap() {
                assert_eq!(p.conjugate().conjugate(), p);
            }
        }
    }

    #[test]
    fn dominance_examples() {
        assert!(pt(&[2, 2]).dominance_leq(&pt(&[3, 1])).unwrap());
        assert!(!pt(&[3, 1]).dominance_leq(&pt(&[2, 2])).unwrap());
        assert!(pt(&[3, 1]).dominance_leq(&pt(&[3, 1])).unwrap());
        assert_eq!(
            pt(&[2, 1]).dominance_leq(&pt(&[2, 2])),
            Err(PartitionError::MismatchedSizes(3, 4))
        );
    }

    #[test]
    fn dominance_is_partial_order() {
        for n in 1..=12 {
            let ps = Partition::enumerate(n).unwrap();
            for p in &ps {
                assert!(p.dominance_leq(p).unwrap());
            }
            for p in &ps {
                for q in &ps {
                    let pq = p.dominance_leq(q).unwrap();
                    let qp = q.dominance_leq(p).unwrap();
                    if pq && qp {
                        assert_eq!(p, q);
                    }
                    if n <= 9 {
                        for r in &ps {
                            if pq && q.dominance_leq(r).unwrap() {
                                assert!(p.dominance_leq(r).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dominance_reversed_by_conjugation() {
        for n in 1..=12 {
            let ps = Partition::enumerate(n).unwrap();
            for p in &ps {
                for q in &ps {
                    assert_eq!(
                        p.dominance_leq(q).unwrap(),
                        q.conjugate().dominance_leq(&p.conjugate()).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn enumerate_counts_match_recurrence() {
        assert_eq!(Partition::enumerate(1).unwrap(), vec![pt(&[1])]);
        assert_eq!(Partition::enumerate(5).unwrap().len(), 7);
        assert_eq!(Partition::enumerate(12).unwrap().len(), 77);
        for n in 1..=40 {
            assert_eq!(
                Partition::enumerate(n).unwrap().len() as u64,
                partition_count(n)
            );
        }
    }

    #[test]
    fn enumerate_order_is_reverse_lexicographic() {
        let ps = Partition::enumerate(5).unwrap();
        assert_eq!(ps[0], pt(&[5]));
        assert_eq!(ps[1], pt(&[4, 1]));
        assert_eq!(*ps.last().unwrap(), pt(&[1, 1, 1, 1, 1]));
        for w in ps.windows(2) {
            assert!(w[0].parts() > w[1].parts());
        }
    }

    #[test]
    fn enumerate_guard() {
        assert!(Partition::enumerate(0).is_err());
        assert!(Partition::enumerate(41).is_err());
    }

    #[test]
    fn richardson_blocks_examples() {
        assert_eq!(pt(&[2, 2, 1, 1]).richardson_blocks(), vec![4, 2]);
        assert_eq!(pt(&[4]).richardson_blocks(), vec![1, 1, 1, 1]);
        assert_eq!(pt(&[2, 1]).richardson_blocks(), vec![2, 1]);
    }

    #[test]
    fn rejects_invalid() {
        assert_eq!(Partition::new(vec![1, 0]), Err(PartitionError::ZeroPart));
        assert!(matches!(
            Partition::new(vec![1, 2]),
            Err(PartitionError::NotDecreasing(_))
        ));
    }

    proptest! {
        #[test]
        fn multiplicities_sum_back(n in 1u32..=25) {
            for p in Partition::enumerate(n).unwrap() {
                let total: u32 = p.multiplicities().iter().map(|(i, m)| i * m).sum();
                prop_assert_eq!(total, n);
            }
        }
    }
}
