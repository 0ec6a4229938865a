//! Partitions in frequency notation and a streaming enumerator.

use crate::error::{Error, Result};

/// A partition written as `size^multiplicity` pairs with strictly increasing
/// sizes, e.g. `2 + 1 + 1` is `[(1, 2), (2, 1)]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PartitionFreq {
    entries: Vec<(u32, u32)>,
}

impl PartitionFreq {
    pub fn new(entries: Vec<(u32, u32)>) -> Result<Self> {
        for w in entries.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(Error::InvalidParameter(format!("part sizes must strictly increase: {entries:?}")));
            }
        }
        if entries.iter().any(|&(s, e)| s == 0 || e == 0) {
            return Err(Error::InvalidParameter(format!("sizes and multiplicities must be positive: {entries:?}")));
        }
        Ok(PartitionFreq { entries })
    }

    pub fn empty() -> Self {
        PartitionFreq::default()
    }

    /// From parts in any order.
    pub fn from_parts(parts: &[u32]) -> Result<Self> {
        let mut sorted = parts.to_vec();
        sorted.sort_unstable();
        let mut entries: Vec<(u32, u32)> = Vec::new();
        for p in sorted {
            match entries.last_mut() {
                Some((s, e)) if *s == p => *e += 1,
                _ => entries.push((p, 1)),
            }
        }
        PartitionFreq::new(entries)
    }

    pub fn entries(&self) -> &[(u32, u32)] {
        &self.entries
    }

    /// The partitioned integer.
    pub fn weight(&self) -> u64 {
        self.entries.iter().map(|&(s, e)| s as u64 * e as u64).sum()
    }

    /// Number of distinct part sizes.
    pub fn num_sizes(&self) -> usize {
        self.entries.len()
    }

    pub fn num_parts(&self) -> u64 {
        self.entries.iter().map(|&(_, e)| e as u64).sum()
    }

    /// Parts in weakly decreasing order.
    pub fn to_parts(&self) -> Vec<u32> {
        self.entries.iter().rev().flat_map(|&(s, e)| std::iter::repeat_n(s, e as usize)).collect()
    }
}

impl std::fmt::Display for PartitionFreq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "()");
        }
        let parts: Vec<String> = self.entries.iter().rev().map(|(s, e)| format!("{s}^{e}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Constraints on the partitions visited by [`for_each_partition`].
#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    pub max_part: u32,
    pub max_parts: u64,
}

impl Bounds {
    pub fn unrestricted(n: u64) -> Self {
        Bounds { max_part: n.min(u32::MAX as u64) as u32, max_parts: n }
    }
}

/// Visits every partition of `n` satisfying `bounds` exactly once.
///
/// Sizes are chosen smallest first, so the entries stack is always in
/// frequency order and no partition is ever materialized twice.
pub fn for_each_partition<F: FnMut(&PartitionFreq)>(n: u64, bounds: Bounds, mut visit: F) {
    let mut current = PartitionFreq::empty();
    walk(n, 1, bounds.max_parts, bounds.max_part, &mut current, &mut visit);
}

fn walk<F: FnMut(&PartitionFreq)>(rest: u64, min_size: u32, parts_left: u64, max_part: u32, current: &mut PartitionFreq, visit: &mut F) {
    if rest == 0 {
        visit(current);
        return;
    }
    let top = rest.min(max_part as u64) as u32;
    for s in min_size..=top {
        let s64 = s as u64;
        let max_e = (rest / s64).min(parts_left);
        for e in 1..=max_e {
            let left = rest - s64 * e;
            // Remaining weight must be zero or splittable into sizes above s.
            if left != 0 && left <= s64 {
                continue;
            }
            current.entries.push((s, e as u32));
            walk(left, s + 1, parts_left - e, max_part, current, visit);
            current.entries.pop();
        }
    }
}

/// Collects all partitions of `n` (no bounds). Intended for small `n`.
pub fn partitions_of(n: u64) -> Vec<PartitionFreq> {
    let mut out = Vec::new();
    for_each_partition(n, Bounds::unrestricted(n), |p| out.push(p.clone()));
    out
}
