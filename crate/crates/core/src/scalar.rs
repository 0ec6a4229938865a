//! Exact coefficient types.
//!
//! Everything in this crate is generic over a [`Coefficient`]: an exact,
//! signed integer type. `BigInt` is the default for exact values; `i64` and
//! `i128` are meant for residue-ring work where every stored value is below
//! the modulus. Fixed-width types used for *exact* expansions will overflow
//! quickly (c_{9,j}(n) passes 2^63 before n = 150).

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, NumRef, Signed, ToPrimitive};

/// Exact signed integer usable as a series / polynomial coefficient.
pub trait Coefficient:
    Clone
    + Debug
    + Display
    + FromStr
    + Integer
    + NumRef
    + Signed
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    /// Lift a machine integer. Panics only if the value does not fit `Self`.
    fn from_i(x: i64) -> Self {
        Self::from_i64(x).expect("integer does not fit in coefficient type")
    }

    fn from_u(x: u64) -> Self {
        Self::from_u64(x).expect("integer does not fit in coefficient type")
    }
}

impl Coefficient for i64 {}
impl Coefficient for i128 {}
impl Coefficient for BigInt {}

/// Canonical residue of `x` in `[0, m)`.
pub fn reduce<T: Coefficient>(x: &T, m: &T) -> T {
    x.mod_floor(m)
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn mod_inverse<T: Coefficient>(a: &T, m: &T) -> Option<T> {
    if m.is_one() {
        return Some(T::zero());
    }
    let eg = reduce(a, m).extended_gcd(m);
    if eg.gcd.is_one() {
        Some(reduce(&eg.x, m))
    } else {
        None
    }
}

/// Binomial coefficient C(n, k) for `n` possibly equal to -1.
///
/// Only the generalized value C(-1, 0) = 1 is needed by the colored
/// partition factor; any other negative top returns 0 for k > 0 as well,
/// which is what the product formula requires.
pub fn binomial<T: Coefficient>(n: i64, k: i64) -> T {
    if k < 0 {
        return T::zero();
    }
    if n < 0 {
        return if k == 0 { T::one() } else { T::zero() };
    }
    if k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    let mut acc = T::one();
    for i in 0..k {
        acc = acc * T::from_i(n - i);
        acc = acc / T::from_i(i + 1);
    }
    acc
}

/// Multinomial coefficient (Σ parts)! / Π parts!.
pub fn multinomial<T: Coefficient>(parts: &[usize]) -> T {
    let mut total = 0i64;
    let mut acc = T::one();
    for &p in parts {
        total += p as i64;
        acc = acc * binomial::<T>(total, p as i64);
    }
    acc
}

/// Convert between coefficient types; panics if the value does not fit.
pub fn convert<S: Coefficient, T: Coefficient>(x: &S) -> T {
    match x.to_i128() {
        Some(v) => T::from_i128(v).expect("value does not fit target coefficient type"),
        None => x
            .to_string()
            .parse::<T>()
            .ok()
            .expect("value does not fit target coefficient type"),
    }
}
