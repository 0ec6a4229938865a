//! Infinite q-Pochhammer products via the pentagonal number theorem.

use crate::error::{Error, Result};
use crate::scalar::Coefficient;
use crate::series::TruncatedSeries;

/// Generalized pentagonal numbers `g(k) = k(3k-1)/2` for `k = 1, -1, 2, -2, ...`
/// up to `bound`, with their signs `(-1)^k`.
pub fn generalized_pentagonals(bound: usize) -> Vec<(usize, i8)> {
    let mut out = vec![(0usize, 1i8)];
    for k in 1usize.. {
        let sign = if k % 2 == 1 { -1 } else { 1 };
        let a = k * (3 * k - 1) / 2;
        if a > bound {
            break;
        }
        out.push((a, sign));
        let b = k * (3 * k + 1) / 2;
        if b <= bound {
            out.push((b, sign));
        }
    }
    out
}

/// `(q^d; q^d)_inf` through `q^order`.
///
/// Nonzero coefficients sit at `d * g` for generalized pentagonal `g`, with
/// value `(-1)^k`.
pub fn pochhammer_inf_series<T: Coefficient>(d: usize, order: usize, modulus: Option<T>) -> Result<TruncatedSeries<T>> {
    if d == 0 {
        return Err(Error::InvalidParameter("dilation d must be at least 1".into()));
    }
    let mut coeffs = vec![T::zero(); order + 1];
    for (g, sign) in generalized_pentagonals(order / d) {
        coeffs[d * g] = T::from_i(sign as i64);
    }
    TruncatedSeries::new(coeffs, order, modulus)
}

/// `1 / (q; q)_inf^power` by repeated sparse division.
pub fn inverse_euler_power<T: Coefficient>(power: usize, order: usize, modulus: Option<T>) -> Result<TruncatedSeries<T>> {
    let euler = pochhammer_inf_series(1, order, modulus.clone())?;
    let mut acc = TruncatedSeries::one(order, modulus)?;
    for _ in 0..power {
        acc = acc.div(&euler)?;
    }
    Ok(acc)
}

/// `1 / (q; q)_n` through `q^order`.
pub fn inverse_finite_pochhammer<T: Coefficient>(n: usize, order: usize, modulus: Option<T>) -> Result<TruncatedSeries<T>> {
    let mut acc = TruncatedSeries::one(order, modulus)?;
    for i in 1..=n.min(order) {
        acc = acc.div_one_minus_power(i);
    }
    Ok(acc)
}
