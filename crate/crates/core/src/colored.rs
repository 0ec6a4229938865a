//! Overpartitions, k-colored partitions and (k,j)-colored partitions.
//!
//! A (k,j)-colored partition is a k-colored partition in which any single
//! part size uses at most j distinct colors. Overpartitions are the (2,1)
//! case and ordinary k-colored partitions the (k,k) case.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{for_each_partition, Bounds, PartitionFreq};
use crate::products::{inverse_euler_power, pochhammer_inf_series};
use crate::scalar::{binomial, Coefficient};
use crate::series::TruncatedSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColoredCountParams {
    k: u32,
    j: u32,
}

impl ColoredCountParams {
    pub fn new(k: u32, j: u32) -> Result<Self> {
        if j == 0 || j > k {
            return Err(Error::InvalidParameter(format!("need 1 <= j <= k, got k={k}, j={j}")));
        }
        Ok(ColoredCountParams { k, j })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    /// Coefficients of `sum_{i=0}^{j} C(k-j+i-1, i) x^i`, the per-size factor
    /// left over after pulling `1/(q;q)_inf^j` out of the product.
    pub fn factor_poly<T: Coefficient>(&self) -> Vec<T> {
        let (k, j) = (self.k as i64, self.j as i64);
        (0..=j).map(|i| binomial::<T>(k - j + i - 1, i)).collect()
    }
}

/// `C_{k,j}(q)` through `q^order`: the product over n of the factor
/// polynomial in `q^n`, divided by `(q;q)_inf^j`.
pub fn ckj_series<T: Coefficient>(params: ColoredCountParams, order: usize, modulus: Option<T>) -> Result<TruncatedSeries<T>> {
    let factor: Vec<T> = params.factor_poly();
    let mut acc = TruncatedSeries::one(order, modulus.clone())?;
    if factor.len() > 1 && factor[1..].iter().any(|c| !c.is_zero()) {
        for n in 1..=order {
            acc = acc.mul_dilated(&factor, n);
        }
    }
    let denom = inverse_euler_power(params.j as usize, order, modulus)?;
    acc.mul(&denom)
}

/// Which closed product form to use in [`ckj_eta_series`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EtaForm {
    /// j = 1: `prod (1 + (k-1) q^n) / (q;q)_inf`
    One,
    /// j = k - 1: `(q^k;q^k)_inf / (q;q)_inf^k`
    KMinusOne,
    /// j = k: `1 / (q;q)_inf^k`
    K,
}

impl EtaForm {
    pub fn j_for(self, k: u32) -> u32 {
        match self {
            EtaForm::One => 1,
            EtaForm::KMinusOne => k - 1,
            EtaForm::K => k,
        }
    }
}

/// `C_{k,j}` through the special product forms, an independent route to
/// [`ckj_series`] for `j` in `{1, k-1, k}`.
pub fn ckj_eta_series<T: Coefficient>(k: u32, form: EtaForm, order: usize, modulus: Option<T>) -> Result<TruncatedSeries<T>> {
    if k == 0 || (form == EtaForm::KMinusOne && k < 2) {
        return Err(Error::InvalidParameter(format!("form {form:?} needs a larger k, got {k}")));
    }
    match form {
        EtaForm::One => {
            // (1 + (k-1) q^n) divided by (1 - q^n), one n at a time.
            let lin = [T::one(), T::from_u(k as u64 - 1)];
            let mut acc = TruncatedSeries::one(order, modulus)?;
            for n in 1..=order {
                acc = acc.mul_dilated(&lin, n).div_one_minus_power(n);
            }
            Ok(acc)
        }
        EtaForm::KMinusOne => {
            let num = pochhammer_inf_series(k as usize, order, modulus.clone())?;
            num.mul(&inverse_euler_power(k as usize, order, modulus)?)
        }
        EtaForm::K => inverse_euler_power(k as usize, order, modulus),
    }
}

/// Rebuilds `c_{k,k}` from `c_{k,k-1}` using `C_{k,k} = C_{k,k-1} / (q^k;q^k)_inf`.
///
/// Written out, `c_{k,k}(n) = c_{k,k-1}(n) + c_{k,k}(n-k) + c_{k,k}(n-2k) -
/// c_{k,k}(n-5k) - c_{k,k}(n-7k) + ...`, the k-dilated pentagonal
/// recurrence.
pub fn ckk_from_pentagonal_recurrence<T: Coefficient>(k: u32, ck_km1: &TruncatedSeries<T>) -> TruncatedSeries<T> {
    let order = ck_km1.order();
    let k = k as usize;
    let pent = crate::products::generalized_pentagonals(order / k.max(1));
    let mut out: Vec<T> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = ck_km1.coeff(n).clone();
        for &(g, sign) in pent.iter().skip(1) {
            let off = g * k;
            if off > n {
                break;
            }
            // (q^k;q^k) has coefficient `sign` at off; move it across.
            let term = out[n - off].clone();
            acc = if sign < 0 { acc + term } else { acc - term };
        }
        out.push(match ck_km1.modulus() {
            Some(m) => acc.mod_floor(m),
            None => acc,
        });
    }
    TruncatedSeries::from_canonical(out, ck_km1.modulus().cloned())
}

/// Overpartition generating function `(q^2;q^2)_inf / (q;q)_inf^2`.
pub fn overpartition_series<T: Coefficient>(order: usize, modulus: Option<T>) -> Result<TruncatedSeries<T>> {
    let num = pochhammer_inf_series(2, order, modulus.clone())?;
    num.mul(&inverse_euler_power(2, order, modulus)?)
}

/// `1 / (q;q)_inf^k`.
pub fn kcolored_series<T: Coefficient>(k: u32, order: usize, modulus: Option<T>) -> Result<TruncatedSeries<T>> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    inverse_euler_power(k as usize, order, modulus)
}

/// Number of (k,j)-colorings of a fixed shape.
///
/// A size with multiplicity `e` colored by exactly `s` distinct colors can
/// be chosen in `C(k,s) * C(e-1,s-1)` ways; sizes are independent.
pub fn ckj_partition_weight<T: Coefficient>(params: ColoredCountParams, lambda: &PartitionFreq) -> T {
    let k = params.k as i64;
    let mut acc = T::one();
    for &(_, e) in lambda.entries() {
        let e = e as i64;
        let mut size_weight = T::zero();
        for s in 1..=(params.j as i64).min(e) {
            size_weight = size_weight + binomial::<T>(k, s) * binomial::<T>(e - 1, s - 1);
        }
        acc = acc * size_weight;
    }
    acc
}

/// `c_{k,j}(n)` by summing shape weights over every partition of `n`.
pub fn ckj_brute<T: Coefficient>(params: ColoredCountParams, n: u64) -> T {
    let mut total = T::zero();
    for_each_partition(n, Bounds::unrestricted(n), |lambda| {
        total = std::mem::replace(&mut total, T::zero()) + ckj_partition_weight::<T>(params, lambda);
    });
    total
}

/// Counts (k,j)-colored partitions of `n` by listing every colored partition
/// as a multiset of `(size, color)` pairs and checking the color limit.
/// Exponential; meant for `n <= 8` to validate the shape weight formula.
pub fn ckj_explicit_count(params: ColoredCountParams, n: u32) -> u64 {
    let kinds: Vec<(u32, u32)> = (1..=n).flat_map(|s| (0..params.k).map(move |c| (s, c))).collect();
    let mut colors_used = vec![0u32; n as usize + 1];
    let mut count = 0u64;
    explicit_walk(&kinds, 0, n, params.j, &mut colors_used, &mut count);
    count
}

fn explicit_walk(kinds: &[(u32, u32)], from: usize, rest: u32, j: u32, colors_used: &mut [u32], count: &mut u64) {
    if rest == 0 {
        *count += 1;
        return;
    }
    for idx in from..kinds.len() {
        let (s, _) = kinds[idx];
        if s > rest {
            break;
        }
        if colors_used[s as usize] == j {
            continue;
        }
        colors_used[s as usize] += 1;
        let mut m = 1;
        while m * s <= rest {
            explicit_walk(kinds, idx + 1, rest - m * s, j, colors_used, count);
            m += 1;
        }
        colors_used[s as usize] -= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(k: u32, j: u32) -> ColoredCountParams {
        ColoredCountParams::new(k, j).unwrap()
    }

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn params_validation() {
        assert!(ColoredCountParams::new(3, 0).is_err());
        assert!(ColoredCountParams::new(3, 4).is_err());
        assert!(ColoredCountParams::new(3, 3).is_ok());
    }

    #[test]
    fn factor_polys() {
        assert_eq!(p(2, 1).factor_poly::<i64>(), vec![1, 1]);
        assert_eq!(p(9, 9).factor_poly::<i64>(), vec![1, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(p(9, 8).factor_poly::<i64>(), vec![1; 9]);
        // k=9, j=3: C(5,0), C(6,1), C(7,2), C(8,3)
        assert_eq!(p(9, 3).factor_poly::<i64>(), vec![1, 6, 21, 56]);
    }

    #[test]
    fn listed_examples() {
        assert_eq!(ckj_series::<i64>(p(2, 1), 3, None).unwrap().coeff(3), &8);
        assert_eq!(ckj_series::<i64>(p(2, 2), 3, None).unwrap().coeff(3), &10);
        for k in 1..=9 {
            for j in 1..=k {
                assert_eq!(ckj_series::<i64>(p(k, j), 4, None).unwrap().coeff(0), &1);
            }
        }
        let over = overpartition_series::<i64>(4, None).unwrap();
        assert_eq!(over.coeffs(), &[1, 2, 4, 8, 14]);
        assert_eq!(kcolored_series::<i64>(2, 3, None).unwrap().coeff(3), &10);
        assert_eq!(kcolored_series::<i64>(1, 4, None).unwrap().coeff(4), &5);
    }

    #[test]
    fn nine_one_at_two() {
        let s = ckj_series::<BigInt>(p(9, 1), 10, None).unwrap();
        assert_eq!(s.coeff(2), &big(18));
        assert_eq!(s.reduce_mod(&big(27)).unwrap().coeff(2), &big(18));
    }

    #[test]
    fn weights() {
        let l = PartitionFreq::from_parts(&[2, 1, 1]).unwrap();
        assert_eq!(ckj_partition_weight::<i64>(p(9, 1), &l), 81);
        assert_eq!(ckj_partition_weight::<i64>(p(9, 1), &PartitionFreq::from_parts(&[2]).unwrap()), 9);
        assert_eq!(ckj_partition_weight::<i64>(p(9, 1), &PartitionFreq::from_parts(&[1, 1]).unwrap()), 9);
        assert_eq!(ckj_partition_weight::<i64>(p(4, 2), &PartitionFreq::empty()), 1);
        assert_eq!(ckj_partition_weight::<i64>(p(9, 2), &PartitionFreq::from_parts(&[1, 1]).unwrap()), 45);
    }

    #[test]
    fn brute_examples() {
        assert_eq!(ckj_brute::<i64>(p(2, 1), 3), 8);
        assert_eq!(ckj_brute::<i64>(p(5, 3), 0), 1);
        assert_eq!(ckj_brute::<i64>(p(9, 2), 2), 54);
        assert_eq!(ckj_brute::<i64>(p(9, 1), 2), 18);
        assert_eq!(ckj_brute::<i64>(p(4, 2), 1), 4);
    }

    #[test]
    fn weight_formula_matches_explicit_enumeration() {
        for k in 1..=4 {
            for j in 1..=k {
                for n in 0..=8 {
                    assert_eq!(ckj_explicit_count(p(k, j), n), ckj_brute::<i64>(p(k, j), n as u64) as u64, "k={k} j={j} n={n}");
                }
            }
        }
        for j in [1, 2, 5, 9] {
            for n in 0..=4 {
                assert_eq!(ckj_explicit_count(p(9, j), n), ckj_brute::<i64>(p(9, j), n as u64) as u64);
            }
        }
    }

    #[test]
    fn series_matches_brute() {
        for k in 1..=9 {
            for j in 1..=k {
                let s = ckj_series::<BigInt>(p(k, j), 25, None).unwrap();
                for n in 0..=25 {
                    assert_eq!(s.coeff(n), &ckj_brute::<BigInt>(p(k, j), n as u64), "k={k} j={j} n={n}");
                }
            }
        }
    }

    #[test]
    fn single_entry_weight_matches_contribution_sum() {
        for k in 1..=9i64 {
            for j in 1..=k {
                for e in j..=12 {
                    let lam = PartitionFreq::new(vec![(5, e as u32)]).unwrap();
                    let want: i64 = (1..=j).map(|i| binomial::<i64>(k, i) * binomial::<i64>(e - 1, i - 1)).sum();
                    assert_eq!(ckj_partition_weight::<i64>(p(k as u32, j as u32), &lam), want);
                }
            }
        }
    }

    #[test]
    fn special_cases_agree() {
        let order = 200;
        for k in 1..=9 {
            let a = ckj_series::<BigInt>(p(k, k), order, None).unwrap();
            assert_eq!(a, kcolored_series(k, order, None).unwrap());
        }
        let order = 500;
        let m = Some(big(1_000_000_007));
        assert_eq!(ckj_series::<BigInt>(p(2, 1), order, m.clone()).unwrap(), overpartition_series(order, m).unwrap());
        let exact = ckj_series::<BigInt>(p(2, 1), 120, None).unwrap();
        assert_eq!(exact, overpartition_series(120, None).unwrap());
    }

    #[test]
    fn eta_forms_agree() {
        let order = 300;
        for (j, form) in [(8, EtaForm::KMinusOne), (9, EtaForm::K), (1, EtaForm::One)] {
            let a = ckj_series::<BigInt>(p(9, j), order, None).unwrap();
            let b = ckj_eta_series::<BigInt>(9, form, order, None).unwrap();
            assert_eq!(a, b, "j={j}");
        }
        assert_eq!(ckj_eta_series::<BigInt>(9, EtaForm::K, 1, None).unwrap().coeff(1), &big(9));
        for k in 2..=6 {
            let a = ckj_series::<BigInt>(p(k, k - 1), 60, None).unwrap();
            assert_eq!(a, ckj_eta_series(k, EtaForm::KMinusOne, 60, None).unwrap());
        }
    }

    #[test]
    fn pentagonal_reconstruction() {
        let order = 300;
        let c98 = ckj_series::<BigInt>(p(9, 8), order, None).unwrap();
        let c99 = ckj_series::<BigInt>(p(9, 9), order, None).unwrap();
        assert_eq!(ckk_from_pentagonal_recurrence(9, &c98), c99);
        let m = big(27);
        assert_eq!(ckk_from_pentagonal_recurrence(9, &c98.reduce_mod(&m).unwrap()), c99.reduce_mod(&m).unwrap());
    }

    #[test]
    fn literal_subtractive_recurrence_is_the_inverse_relation() {
        // Subtracting the dilated terms from c_{9,8} yields C_{9,8}*(q^9;q^9),
        // not C_{9,9}; the subtractive form holds with the roles swapped.
        let order = 40;
        let c98 = ckj_series::<BigInt>(p(9, 8), order, None).unwrap();
        let c99 = ckj_series::<BigInt>(p(9, 9), order, None).unwrap();
        let e9 = pochhammer_inf_series::<BigInt>(9, order, None).unwrap();
        assert_ne!(c98.mul(&e9).unwrap(), c99);
        assert_eq!(c99.mul(&e9).unwrap(), c98);
        assert_eq!(c99.coeff(9), &(c98.coeff(9) + c98.coeff(0)));
    }
}
