//! Partitions with exactly `r` distinct part sizes, unrestricted and with
//! bounded largest part.

use crate::error::{Error, Result};
use crate::poly::gaussian_binomial;
use crate::products::{inverse_euler_power, inverse_finite_pochhammer};
use crate::scalar::{binomial, Coefficient};
use crate::series::TruncatedSeries;

/// `N_r(q) = 1/(q)_inf * sum_{n>=r} (-1)^{n-r} C(n,r) q^{n(n+1)/2} / (q)_n`.
pub fn macmahon_nr<T: Coefficient>(r: usize, order: usize) -> Result<TruncatedSeries<T>> {
    let mut sum = TruncatedSeries::<T>::zero(order, None)?;
    let mut inv_poch = TruncatedSeries::<T>::one(order, None)?;
    for n in 1..r {
        inv_poch = inv_poch.div_one_minus_power(n);
    }
    let mut n = r;
    while n * (n + 1) / 2 <= order {
        if n >= 1 {
            inv_poch = inv_poch.div_one_minus_power(n);
        }
        let mut c: T = binomial(n as i64, r as i64);
        if (n - r) % 2 == 1 {
            c = -c;
        }
        sum = sum.add(&inv_poch.shift(n * (n + 1) / 2).scale(&c))?;
        n += 1;
    }
    sum.mul(&inverse_euler_power(1, order, None)?)
}

/// `N_{r,<=M}(q) = 1/(q)_M * sum_{j=r}^{M} (-1)^{j-r} q^{j(j+1)/2} C(j,r) [M over j]_q`.
pub fn merca_nrm<T: Coefficient>(r: usize, max_part: usize, order: usize) -> Result<TruncatedSeries<T>> {
    if max_part == 0 {
        return Err(Error::InvalidParameter("largest part bound M must be at least 1".into()));
    }
    let mut sum = TruncatedSeries::<T>::zero(order, None)?;
    for j in r..=max_part {
        let shift = j * (j + 1) / 2;
        if shift > order {
            break;
        }
        let mut c: T = binomial(j as i64, r as i64);
        if (j - r) % 2 == 1 {
            c = -c;
        }
        let term = gaussian_binomial::<T>(max_part, j).to_series(order).shift(shift).scale(&c);
        sum = sum.add(&term)?;
    }
    sum.mul(&inverse_finite_pochhammer(max_part, order, None)?)
}
