//! Mod-27 behaviour of `c_{9,j}`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::{verify_progression, CongruenceReport, ProgressionSpec};
use crate::colored::{ckj_series, ColoredCountParams};
use crate::error::{Error, Result};
use crate::scalar::binomial;
use crate::series::TruncatedSeries;

pub const COLORS: u32 = 9;
pub const MODULUS: u64 = 27;
pub const DEFAULT_WITNESS_BOUND: u64 = 20_000;
pub const DEFAULT_ELL_MAX: u32 = 4;

/// `(j, step)` pairs for which `c_{9,j}(step*n + 2) = 0 (mod 27)` is claimed.
pub const CLAIMED: [(u32, u64); 6] = [(2, 3), (5, 3), (8, 3), (9, 3), (3, 9), (6, 9)];

/// `C_{9,j}` reduced mod 27 through `q^order`.
pub fn c9_series_mod27(j: u32, order: usize) -> Result<TruncatedSeries<i64>> {
    ckj_series(ColoredCountParams::new(COLORS, j)?, order, Some(MODULUS as i64))
}

/// Runs every claimed progression up to `max_index`.
pub fn check_claimed_congruences(max_index: u64) -> Result<Vec<(u32, CongruenceReport)>> {
    let mut out = Vec::new();
    for (j, step) in CLAIMED {
        let s = c9_series_mod27(j, max_index as usize)?;
        let spec = ProgressionSpec::new(2, step, MODULUS, max_index)?;
        out.push((j, verify_progression(&s, &spec)?));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessEntry {
    pub ell: u32,
    pub step: u64,
    /// Least index `3^ell * n + 2 <= coeff_bound` with nonzero residue.
    pub witness: Option<(u64, u64)>,
    pub checked_count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessSearchReport {
    pub k: u32,
    pub j: u32,
    pub modulus: u64,
    pub coeff_bound: u64,
    pub ell_max: u32,
    pub entries: Vec<WitnessEntry>,
}

/// For each `ell <= ell_max`, the first coefficient `c_{9,j}(3^ell n + 2)`
/// up to `coeff_bound` that is nonzero mod 27, if any.
pub fn witness_search(j: u32, ell_max: u32, coeff_bound: u64) -> Result<WitnessSearchReport> {
    if coeff_bound < 2 {
        return Err(Error::InvalidParameter(format!("coefficient bound must be at least 2, got {coeff_bound}")));
    }
    let series = c9_series_mod27(j, coeff_bound as usize)?;
    let mut entries = Vec::new();
    for ell in 0..=ell_max {
        let step = 3u64.checked_pow(ell).ok_or_else(|| Error::InvalidParameter(format!("3^{ell} overflows")))?;
        let mut checked_count = 0;
        let mut witness = None;
        let mut idx = 2;
        while idx <= coeff_bound {
            checked_count += 1;
            let v = *series.coeff(idx as usize);
            if v != 0 {
                witness = Some((idx, v as u64));
                break;
            }
            idx += step;
        }
        entries.push(WitnessEntry { ell, step, witness, checked_count });
    }
    Ok(WitnessSearchReport { k: COLORS, j, modulus: MODULUS, coeff_bound, ell_max, entries })
}

/// Sum of the positive divisors of `n`.
pub fn sigma1(n: u64) -> u64 {
    assert!(n >= 1, "sigma1 is defined for n >= 1");
    let mut rest = n;
    let mut total = 1u64;
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut pk = 1u64;
            let mut sum = 1u64;
            while rest.is_multiple_of(p) {
                rest /= p;
                pk *= p;
                sum += pk;
            }
            total *= sum;
        }
        p += 1;
    }
    if rest > 1 {
        total *= rest + 1;
    }
    total
}

/// `sum_{i=1}^{j} C(9,i) C(e-1,i-1)` exactly: the number of (9,j)-colorings
/// of a single part size repeated `e` times.
pub fn single_size_count(j: u32, e: u64) -> BigInt {
    assert!(e >= 1, "multiplicity must be positive");
    (1..=j as i64).map(|i| binomial::<BigInt>(9, i) * binomial::<BigInt>(e as i64 - 1, i - 1)).sum()
}

/// [`single_size_count`] reduced mod 27.
pub fn single_size_contribution(j: u32, e: u64) -> u32 {
    let r = single_size_count(j, e) % BigInt::from(MODULUS);
    r.to_u32().expect("residue below 27")
}

/// Closed form of [`single_size_count`] for `j = 5`:
/// `3/4 (76 - 162e + 133e^2 - 42e^3 + 7e^4)`.
pub fn j5_quartic(e: u64) -> BigInt {
    let e = BigInt::from(e);
    let poly = BigInt::from(76) - BigInt::from(162) * &e + BigInt::from(133) * &e * &e
        - BigInt::from(42) * &e * &e * &e
        + BigInt::from(7) * &e * &e * &e * &e;
    poly * 3 / 4
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_values() {
        assert_eq!(sigma1(1), 1);
        assert_eq!(sigma1(6), 12);
        assert_eq!(sigma1(12), 28);
        assert_eq!(sigma1(97), 98);
        for n in 1..=500u64 {
            let brute: u64 = (1..=n).filter(|d| n % d == 0).sum();
            assert_eq!(sigma1(n), brute);
        }
    }

    #[test]
    fn sigma_divisible_by_three() {
        for n in (2..=10_000u64).step_by(3) {
            assert_eq!(sigma1(n) % 3, 0, "n={n}");
        }
    }

    #[test]
    fn single_size_residues() {
        for e in [1, 4, 7, 10, 301] {
            assert_eq!(single_size_contribution(5, e), 9, "e={e}");
        }
        for e in [2, 5, 8, 11, 302] {
            assert_eq!(single_size_contribution(5, e), 18, "e={e}");
        }
        assert_eq!(single_size_contribution(1, 1), 9);
    }

    #[test]
    fn quartic_matches_sum() {
        for e in 1..=300 {
            assert_eq!(j5_quartic(e), single_size_count(5, e), "e={e}");
        }
    }

    #[test]
    fn complementary_divisors_cancel() {
        for j in [5, 8] {
            for n in (2..=2000u64).step_by(3) {
                let total: u32 = (1..=n).filter(|d| n % d == 0).map(|d| single_size_contribution(j, d)).sum();
                assert_eq!(total % 27, 0, "j={j} N={n}");
            }
        }
    }

    #[test]
    fn two_part_sizes_for_j2() {
        // j=2 single-size total is 9*sigma1(N) mod 27.
        for n in 1..=300u64 {
            let total: u32 = (1..=n).filter(|d| n % d == 0).map(|d| single_size_contribution(2, d)).sum();
            assert_eq!(total as u64 % 27, 9 * sigma1(n) % 27);
        }
    }

    #[test]
    fn claimed_congruences_small() {
        for (j, report) in check_claimed_congruences(500).unwrap() {
            assert!(report.holds, "j={j}: {:?}", report.witnesses);
        }
    }

    #[test]
    fn j1_witness() {
        let r = witness_search(1, 2, 400).unwrap();
        assert_eq!(r.entries[0].witness, Some((2, 18)));
        let s = c9_series_mod27(1, 100).unwrap();
        let rep = verify_progression(&s, &ProgressionSpec::new(2, 3, 27, 100).unwrap()).unwrap();
        assert!(!rep.holds);
        assert_eq!(rep.witnesses[0], (2, 18));
    }

    #[test]
    fn j3_fails_on_3n_plus_2() {
        // Only the 9n+2 subprogression is claimed for j=3.
        let s = c9_series_mod27(3, 500).unwrap();
        let rep = verify_progression(&s, &ProgressionSpec::new(2, 3, 27, 500).unwrap()).unwrap();
        let rep9 = verify_progression(&s, &ProgressionSpec::new(2, 9, 27, 500).unwrap()).unwrap();
        assert!(rep9.holds);
        assert!(!rep.holds);
    }

    #[test]
    fn monotone_in_bound() {
        let s = c9_series_mod27(5, 600).unwrap();
        for b in [50, 200, 600] {
            let rep = verify_progression(&s, &ProgressionSpec::new(2, 3, 27, b).unwrap()).unwrap();
            assert!(rep.holds);
        }
        let s = c9_series_mod27(4, 600).unwrap();
        let big = verify_progression(&s, &ProgressionSpec::new(2, 3, 27, 600).unwrap()).unwrap();
        if big.holds {
            for b in [50, 200] {
                assert!(verify_progression(&s, &ProgressionSpec::new(2, 3, 27, b).unwrap()).unwrap().holds);
            }
        }
    }
}
