//! `c_{2p,p}(n)` modulo `p` and `p^2`.
//!
//! Modulo `p^2` the count splits into the overpartition number `pbar(n/p)`
//! (all multiplicities divisible by `p`) plus `p` times a weighted sum over
//! the set S of partitions of `n` with exactly one part size whose
//! multiplicity `t*p + y` has `1 <= y <= p-1`. Each member of S carries
//! weight `2^r (t+1) y^{-1}`, with `r` the number of part sizes and the
//! inverse taken mod `p`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::colored::{ckj_series, overpartition_series, ColoredCountParams};
use crate::error::{Error, Result};
use crate::partition::PartitionFreq;
use crate::scalar::mod_inverse;
use crate::series::TruncatedSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SpecialPartStats {
    pub t: u64,
    pub y: u64,
    /// Number of distinct part sizes.
    pub r: u64,
}

fn check_prime(p: u64) -> Result<()> {
    let prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
    if prime {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("p must be prime, got {p}")))
    }
}

/// `t, y, r` for `lambda` if it lies in S, `None` otherwise.
pub fn special_part_stats(lambda: &PartitionFreq, p: u64) -> Option<SpecialPartStats> {
    let mut special = None;
    for &(_, e) in lambda.entries() {
        let e = e as u64;
        if !e.is_multiple_of(p) {
            if special.is_some() {
                return None;
            }
            special = Some((e / p, e % p));
        }
    }
    special.map(|(t, y)| SpecialPartStats { t, y, r: lambda.num_sizes() as u64 })
}

/// Calls `visit` with the statistics of every member of S for `n`.
///
/// Enumerates partitions size by size, smallest first, and prunes as soon
/// as a second non-divisible multiplicity would appear, or the remaining
/// weight cannot be filled with multiplicities divisible by `p`.
pub fn for_each_s_member<F: FnMut(SpecialPartStats)>(n: u64, p: u64, mut visit: F) {
    s_walk(n, 1, p, 0, None, &mut visit);
}

fn s_walk<F: FnMut(SpecialPartStats)>(rest: u64, min_size: u64, p: u64, depth: u64, special: Option<(u64, u64)>, visit: &mut F) {
    if rest == 0 {
        if let Some((t, y)) = special {
            visit(SpecialPartStats { t, y, r: depth });
        }
        return;
    }
    if special.is_some() && !rest.is_multiple_of(p) {
        return;
    }
    for s in min_size..=rest {
        let max_e = rest / s;
        let (first, stride) = if special.is_some() { (p, p) } else { (1, 1) };
        let mut e = first;
        while e <= max_e {
            let left = rest - s * e;
            if left == 0 || left > s {
                let next = if e % p != 0 { Some((e / p, e % p)) } else { special };
                s_walk(left, s + 1, p, depth + 1, next, visit);
            }
            e += stride;
        }
    }
}

/// `sum over S of 2^r (t+1) y^{-1}`, reduced mod `p`.
pub fn s_sum_mod_p(p: u64, n: u64) -> u64 {
    let mut acc = 0u64;
    for_each_s_member(n, p, |st| {
        let y_inv = mod_inverse(&(st.y as i64), &(p as i64)).expect("1 <= y < p is a unit") as u64;
        let two_r = pow_mod(2, st.r, p);
        acc = (acc + two_r * ((st.t + 1) % p) % p * y_inv) % p;
    });
    acc
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut b = base % m;
    let mut acc = 1 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc
}

/// `C_{2p,p}` mod `p^2` through `q^order`.
pub fn lhs_series(p: u64, order: usize) -> Result<TruncatedSeries<i64>> {
    check_prime(p)?;
    let params = ColoredCountParams::new(2 * p as u32, p as u32)?;
    ckj_series(params, order, Some((p * p) as i64))
}

/// `c_{2p,p}(n) mod p^2` from the series expansion.
pub fn theorem2_lhs(p: u64, n: u64) -> Result<u64> {
    Ok(*lhs_series(p, n as usize)?.coeff(n as usize) as u64)
}

/// `pbar(n/p) + p * sum_S ...` mod `p^2`, with `pbar` of a non-integer
/// taken as zero.
pub fn theorem2_rhs(p: u64, n: u64) -> Result<u64> {
    check_prime(p)?;
    let pbar = overpartition_series::<i64>((n / p) as usize, Some((p * p) as i64))?;
    Ok(rhs_with(p, n, &pbar))
}

fn rhs_with(p: u64, n: u64, pbar: &TruncatedSeries<i64>) -> u64 {
    let m = p * p;
    let head = if n.is_multiple_of(p) { *pbar.coeff((n / p) as usize) as u64 } else { 0 };
    (head + p * s_sum_mod_p(p, n)) % m
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem2Mismatch {
    pub n: u64,
    pub lhs: u64,
    pub rhs: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem2Report {
    pub p: u64,
    pub modulus: u64,
    pub n_max: u64,
    pub checked_count: u64,
    pub mismatches: Vec<Theorem2Mismatch>,
}

impl Theorem2Report {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares both sides of the mod-`p^2` identity for every `n <= n_max`.
pub fn theorem2_check(p: u64, n_max: u64) -> Result<Theorem2Report> {
    let lhs = lhs_series(p, n_max as usize)?;
    let pbar = overpartition_series::<i64>((n_max / p) as usize, Some((p * p) as i64))?;
    let mut mismatches: Vec<Theorem2Mismatch> = (0..=n_max)
        .into_par_iter()
        .filter_map(|n| {
            let l = *lhs.coeff(n as usize) as u64;
            let r = rhs_with(p, n, &pbar);
            (l != r).then_some(Theorem2Mismatch { n, lhs: l, rhs: r })
        })
        .collect();
    mismatches.sort_by_key(|m| m.n);
    Ok(Theorem2Report { p, modulus: p * p, n_max, checked_count: n_max + 1, mismatches })
}

/// Checks `c_{2p,p}(n) = pbar(n/p) (mod p)` when `p | n` and `= 0` otherwise.
pub fn mod_p_check(p: u64, n_max: u64) -> Result<Theorem2Report> {
    check_prime(p)?;
    let params = ColoredCountParams::new(2 * p as u32, p as u32)?;
    let lhs = ckj_series(params, n_max as usize, Some(p as i64))?;
    let pbar = overpartition_series::<i64>((n_max / p) as usize, Some(p as i64))?;
    let mismatches = (0..=n_max)
        .filter_map(|n| {
            let l = *lhs.coeff(n as usize) as u64;
            let want = if n % p == 0 { *pbar.coeff((n / p) as usize) as u64 } else { 0 };
            (l != want).then_some(Theorem2Mismatch { n, lhs: l, rhs: want })
        })
        .collect();
    Ok(Theorem2Report { p, modulus: p, n_max, checked_count: n_max + 1, mismatches })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colored::ckj_brute;
    use crate::partition::{for_each_partition, Bounds};

    #[test]
    fn prime_validation() {
        assert!(theorem2_lhs(4, 3).is_err());
        assert!(theorem2_rhs(1, 3).is_err());
        assert!(theorem2_check(9, 3).is_err());
    }

    #[test]
    fn lhs_examples() {
        assert_eq!(theorem2_lhs(2, 0).unwrap(), 1);
        assert_eq!(ckj_brute::<i64>(ColoredCountParams::new(4, 2).unwrap(), 1), 4);
        assert_eq!(theorem2_lhs(2, 1).unwrap(), 0);
        // mod-p statement at p=3, n=3: pbar(1) = 2
        assert_eq!(theorem2_lhs(3, 3).unwrap() % 3, 2);
    }

    #[test]
    fn rhs_examples() {
        assert_eq!(theorem2_rhs(2, 1).unwrap(), 0);
        assert_eq!(theorem2_rhs(2, 2).unwrap(), 2);
        assert_eq!(ckj_brute::<i64>(ColoredCountParams::new(4, 2).unwrap(), 2) % 4, 2);
        assert_eq!(theorem2_rhs(3, 1).unwrap(), 6);
        assert_eq!(ckj_brute::<i64>(ColoredCountParams::new(6, 3).unwrap(), 1), 6);
    }

    #[test]
    fn stats_of_shapes() {
        let l = PartitionFreq::from_parts(&[3, 3, 3, 1, 1]).unwrap();
        assert_eq!(special_part_stats(&l, 2), Some(SpecialPartStats { t: 1, y: 1, r: 2 }));
        assert_eq!(special_part_stats(&l, 3), Some(SpecialPartStats { t: 0, y: 2, r: 2 }));
        let all_even = PartitionFreq::from_parts(&[2, 2, 1, 1]).unwrap();
        assert_eq!(special_part_stats(&all_even, 2), None);
        let two_odd = PartitionFreq::from_parts(&[2, 1]).unwrap();
        assert_eq!(special_part_stats(&two_odd, 2), None);
    }

    #[test]
    fn pruned_enumeration_matches_filter() {
        for p in [2u64, 3, 5] {
            for n in 0..=28u64 {
                let mut want = Vec::new();
                for_each_partition(n, Bounds::unrestricted(n), |l| {
                    if let Some(st) = special_part_stats(l, p) {
                        want.push(st);
                    }
                });
                let mut got = Vec::new();
                for_each_s_member(n, p, |st| got.push(st));
                want.sort();
                got.sort();
                assert_eq!(got, want, "p={p} n={n}");
            }
        }
    }

    #[test]
    fn small_identity_checks() {
        for p in [2, 3, 5, 7] {
            let r = theorem2_check(p, 40).unwrap();
            assert!(r.holds(), "p={p}: {:?}", r.mismatches);
            let r = mod_p_check(p, 120).unwrap();
            assert!(r.holds(), "p={p}: {:?}", r.mismatches);
        }
    }

    #[test]
    fn dropping_the_s_sum_breaks_the_identity() {
        // The p * sum_S term is needed: pbar(n/p) alone disagrees for n = 1.
        let lhs = theorem2_lhs(3, 1).unwrap();
        assert_eq!(lhs, 6);
        assert_ne!(lhs, 0);
    }
}
