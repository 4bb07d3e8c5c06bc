//! Young diagram arithmetic: weight, conjugation, reversed dominance,
//! hooks, enumeration.

use crate::error::{Error, Result};
use serde::{Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// Largest weight `enumerate_partitions` accepts.
pub const ENUMERATION_BOUND: u64 = 60;

/// A prime number, validated at construction.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u64) -> Result<Prime> {
        if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
            return Err(Error::NotPrime(p));
        }
        Ok(Prime(p as u32))
    }

    pub fn get(self) -> u64 {
        self.0 as u64
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A partition: weakly decreasing positive parts, trailing zeros stripped.
///
/// The empty sequence is the unique partition of 0. Canonical storage makes
/// equality structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Partition> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Partition {
        Partition { parts: vec![] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The part at `i` (0-indexed), with implicit zeros beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&x| x as u64).sum()
    }

    /// The transpose diagram; an involution.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let parts = (0..cols)
            .map(|j| self.parts.iter().take_while(|&&r| r as usize > j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Cellwise containment of diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.parts.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the text literal format `"a,b,c"`; the empty partition is `"0"`.
    fn from_str(s: &str) -> Result<Partition> {
        let s = s.trim();
        if s == "0" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: std::result::Result<Vec<u32>, _> =
            s.split(',').filter(|t| !t.trim().is_empty()).map(|t| t.trim().parse::<u32>()).collect();
        let parts = parts.map_err(|e| Error::Parse(format!("bad partition {:?}: {}", s, e)))?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

/// True iff `lam` dominates `mu` in the reversed dominance order: every
/// leading partial sum of `lam` is at most the corresponding sum of `mu`.
///
/// Both partitions must have the same weight; comparison runs over the max
/// of the two lengths with implicit zero parts.
pub fn dominates_reversed(lam: &Partition, mu: &Partition) -> Result<bool> {
    if lam.weight() != mu.weight() {
        return Err(Error::WeightMismatch(lam.weight(), mu.weight()));
    }
    let len = lam.len().max(mu.len());
    let mut sl = 0u64;
    let mut sm = 0u64;
    for i in 0..len {
        sl += lam.part(i) as u64;
        sm += mu.part(i) as u64;
        if sl > sm {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Index of a hook of weight p: the partition `(i+1, 1^{p-i-1})`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct HookIdx {
    pub p: Prime,
    pub i: u32,
}

impl HookIdx {
    pub fn new(p: Prime, i: u32) -> Result<HookIdx> {
        if (i as u64) < p.get() {
            Ok(HookIdx { p, i })
        } else {
            Err(Error::IndexRange(i as i64, p.get() as i64 - 1))
        }
    }
}

pub fn hook_partition(h: HookIdx) -> Partition {
    let p = h.p.get() as u32;
    let mut parts = vec![h.i + 1];
    parts.extend(std::iter::repeat_n(1, (p - h.i - 1) as usize));
    Partition::new(parts).expect("hook shape is a partition")
}

/// Inverse of `hook_partition` on hooks of weight p; `None` for non-hooks.
pub fn hook_index(lam: &Partition, p: Prime) -> Option<HookIdx> {
    if lam.weight() != p.get() {
        return None;
    }
    if !lam.is_empty() && lam.parts()[1..].iter().all(|&x| x == 1) {
        return Some(HookIdx { p, i: lam.part(0) - 1 });
    }
    None
}

/// Iterator over all partitions of `e` in reverse-lexicographic order.
pub fn partitions_iter(e: u64) -> PartitionIter {
    PartitionIter { stack: vec![], current: vec![], remaining: e, started: false }
}

pub struct PartitionIter {
    stack: Vec<(u32, u64)>, // (part placed, remainder before placing)
    current: Vec<u32>,
    remaining: u64,
    started: bool,
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if !self.started {
            self.started = true;
            // descend greedily: largest possible part at each step
            while self.remaining > 0 {
                let cap = self.current.last().copied().unwrap_or(u32::MAX);
                let part = (self.remaining.min(cap as u64)) as u32;
                self.stack.push((part, self.remaining));
                self.current.push(part);
                self.remaining -= part as u64;
            }
            return Some(Partition { parts: self.current.clone() });
        }
        // backtrack to the last part that can be decreased
        loop {
            let (part, before) = self.stack.pop()?;
            self.current.pop();
            self.remaining = before;
            if part > 1 {
                // decrease it and re-descend
                let part = part - 1;
                self.stack.push((part, self.remaining));
                self.current.push(part);
                self.remaining -= part as u64;
                while self.remaining > 0 {
                    let cap = self.current.last().copied().unwrap_or(u32::MAX);
                    let nxt = (self.remaining.min(cap as u64)) as u32;
                    if nxt == 0 {
                        break;
                    }
                    self.stack.push((nxt, self.remaining));
                    self.current.push(nxt);
                    self.remaining -= nxt as u64;
                }
                return Some(Partition { parts: self.current.clone() });
            }
        }
    }
}

/// All partitions of `e`, each exactly once, in reverse-lexicographic order.
pub fn enumerate_partitions(e: u64) -> Result<Vec<Partition>> {
    if e > ENUMERATION_BOUND {
        return Err(Error::EnumerationBound(e, ENUMERATION_BOUND));
    }
    Ok(partitions_iter(e).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(pt(&[3, 1]).conjugate(), pt(&[2, 1, 1]));
        // single row transposes to single column
        assert_eq!(pt(&[4]).conjugate(), pt(&[1, 1, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn conjugate_is_involutive_up_to_weight_12() {
        for e in 0..=12u64 {
            for lam in partitions_iter(e) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn reversed_dominance_examples() {
        assert!(dominates_reversed(&pt(&[1, 1, 1, 1, 1]), &pt(&[5])).unwrap());
        assert!(dominates_reversed(&pt(&[3, 1]), &pt(&[3, 1])).unwrap());
        assert!(!dominates_reversed(&pt(&[3, 1]), &pt(&[2, 2])).unwrap());
        assert!(dominates_reversed(&pt(&[2, 2]), &pt(&[3, 1])).unwrap());
        assert!(dominates_reversed(&pt(&[2, 1]), &pt(&[3])).unwrap());
        assert!(matches!(
            dominates_reversed(&pt(&[2]), &pt(&[3])),
            Err(Error::WeightMismatch(2, 3))
        ));
    }

    #[test]
    fn reversed_dominance_is_a_partial_order() {
        // reflexive, antisymmetric, transitive on each weight class up to 10
        for e in 0..=10u64 {
            let all = enumerate_partitions(e).unwrap();
            for a in &all {
                assert!(dominates_reversed(a, a).unwrap());
            }
            for a in &all {
                for b in &all {
                    let ab = dominates_reversed(a, b).unwrap();
                    let ba = dominates_reversed(b, a).unwrap();
                    if ab && ba {
                        assert_eq!(a, b);
                    }
                    if e <= 8 {
                        for c in &all {
                            if ab && dominates_reversed(b, c).unwrap() {
                                assert!(dominates_reversed(a, c).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn conjugation_reverses_dominance() {
        for e in 0..=10u64 {
            let all = enumerate_partitions(e).unwrap();
            for a in &all {
                for b in &all {
                    assert_eq!(
                        dominates_reversed(a, b).unwrap(),
                        dominates_reversed(&b.conjugate(), &a.conjugate()).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn hook_partition_examples() {
        let p5 = Prime::new(5).unwrap();
        assert_eq!(hook_partition(HookIdx::new(p5, 2).unwrap()), pt(&[3, 1, 1]));
        let p3 = Prime::new(3).unwrap();
        assert_eq!(hook_partition(HookIdx::new(p3, 2).unwrap()), pt(&[3]));
        assert_eq!(hook_partition(HookIdx::new(p3, 0).unwrap()), pt(&[1, 1, 1]));
    }

    #[test]
    fn hook_index_roundtrip_and_rejections() {
        assert!(Prime::new(4).is_err());
        let p5 = Prime::new(5).unwrap();
        assert_eq!(hook_index(&pt(&[2, 2, 1]), p5), None);
        for i in 0..5 {
            let h = HookIdx::new(p5, i).unwrap();
            assert_eq!(hook_index(&hook_partition(h), p5), Some(h));
        }
    }

    /// Independent oracle: the partition-counting function via the pentagonal
    /// number recurrence.
    fn partition_count(n: usize) -> u64 {
        let mut table = vec![0u64; n + 1];
        table[0] = 1;
        for i in 1..=n {
            let mut sum: i64 = 0;
            let mut k: i64 = 1;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > i {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                sum += sign * table[i - g1] as i64;
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= i {
                    sum += sign * table[i - g2] as i64;
                }
                k += 1;
            }
            table[i] = sum as u64;
        }
        table[n]
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(enumerate_partitions(0).unwrap(), vec![Partition::empty()]);
        let p4 = enumerate_partitions(4).unwrap();
        assert_eq!(p4.len(), 5);
        assert_eq!(
            p4,
            vec![pt(&[4]), pt(&[3, 1]), pt(&[2, 2]), pt(&[2, 1, 1]), pt(&[1, 1, 1, 1])]
        );
        // frozen from the independent recurrence: p(10) = 42
        assert_eq!(partition_count(10), 42);
        assert_eq!(enumerate_partitions(10).unwrap().len(), 42);
        for e in 0..=20 {
            assert_eq!(partitions_iter(e).count() as u64, partition_count(e as usize));
        }
        assert!(enumerate_partitions(61).is_err());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3,1,1".parse::<Partition>().unwrap(), pt(&[3, 1, 1]));
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(pt(&[3, 1, 1]).to_string(), "3,1,1");
        assert_eq!(Partition::empty().to_string(), "0");
        assert!("1,3".parse::<Partition>().is_err());
    }
}
