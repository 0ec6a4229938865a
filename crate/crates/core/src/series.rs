//! Truncated formal power series in `q` over the integers or `Z/mZ`.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{self, Coefficient};

/// Coefficients of `q^0 .. q^Q`, exact or reduced modulo a fixed `m`.
///
/// The coefficient ring is fixed at construction. Binary operations between
/// series with different moduli are rejected instead of promoted.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
    modulus: Option<T>,
}

impl<T: Coefficient> TruncatedSeries<T> {
    /// Builds a series of order `order` from a coefficient prefix. Missing
    /// coefficients are zero, extra ones are dropped, and everything is
    /// reduced into `[0, m)` when a modulus is given.
    pub fn new(mut coeffs: Vec<T>, order: usize, modulus: Option<T>) -> Result<Self> {
        if let Some(m) = &modulus {
            if !m.is_positive() {
                return Err(Error::InvalidModulus(m.to_string()));
            }
        }
        coeffs.resize(order + 1, T::zero());
        let mut s = TruncatedSeries { coeffs, modulus };
        if let Some(m) = s.modulus.clone() {
            for c in s.coeffs.iter_mut() {
                *c = scalar::reduce(c, &m);
            }
        }
        Ok(s)
    }

    /// Exact series from a coefficient list; the order is `coeffs.len() - 1`.
    pub fn exact(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        let order = coeffs.len() - 1;
        TruncatedSeries::new(coeffs, order, None).expect("exact series is always valid")
    }

    pub fn zero(order: usize, modulus: Option<T>) -> Result<Self> {
        TruncatedSeries::new(Vec::new(), order, modulus)
    }

    pub fn one(order: usize, modulus: Option<T>) -> Result<Self> {
        TruncatedSeries::new(vec![T::one()], order, modulus)
    }

    /// Internal constructor for already-canonical data.
    pub(crate) fn from_canonical(coeffs: Vec<T>, modulus: Option<T>) -> Self {
        debug_assert!(!coeffs.is_empty());
        TruncatedSeries { coeffs, modulus }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn modulus(&self) -> Option<&T> {
        self.modulus.as_ref()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `q^n`; panics past the truncation order.
    pub fn coeff(&self, n: usize) -> &T {
        &self.coeffs[n]
    }

    pub fn get(&self, n: usize) -> Option<&T> {
        self.coeffs.get(n)
    }

    fn norm(&self, x: T) -> T {
        match &self.modulus {
            Some(m) => scalar::reduce(&x, m),
            None => x,
        }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            let show = |m: &Option<T>| m.as_ref().map_or("exact".to_string(), |m| m.to_string());
            return Err(Error::ModulusMismatch { left: show(&self.modulus), right: show(&other.modulus) });
        }
        Ok(())
    }

    /// Cauchy product, truncated to the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let order = self.order().min(other.order());
        let lhs: Vec<(usize, &T)> = self.coeffs[..=order].iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        let mut out = vec![T::zero(); order + 1];
        for (i, a) in lhs {
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = a.clone() * b;
                out[i + j] = self.norm(std::mem::replace(&mut out[i + j], T::zero()) + t);
            }
        }
        Ok(TruncatedSeries { coeffs: out, modulus: self.modulus.clone() })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let order = self.order().min(other.order());
        let coeffs = (0..=order).map(|i| self.norm(self.coeffs[i].clone() + &other.coeffs[i])).collect();
        Ok(TruncatedSeries { coeffs, modulus: self.modulus.clone() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|c| self.norm(-c.clone())).collect();
        TruncatedSeries { coeffs, modulus: self.modulus.clone() }
    }

    pub fn scale(&self, factor: &T) -> Self {
        let coeffs = self.coeffs.iter().map(|c| self.norm(c.clone() * factor)).collect();
        TruncatedSeries { coeffs, modulus: self.modulus.clone() }
    }

    /// Multiplies by `q^s`, keeping the truncation order.
    pub fn shift(&self, s: usize) -> Self {
        let q = self.order();
        let mut coeffs = vec![T::zero(); q + 1];
        if s <= q {
            coeffs[s..].clone_from_slice(&self.coeffs[..=q - s]);
        }
        TruncatedSeries { coeffs, modulus: self.modulus.clone() }
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        TruncatedSeries { coeffs: self.coeffs[..=order].to_vec(), modulus: self.modulus.clone() }
    }

    fn unit_inverse(&self, a0: &T) -> Result<T> {
        match &self.modulus {
            None if a0.is_one() || (-a0.clone()).is_one() => Ok(a0.clone()),
            None => Err(Error::NonUnitConstant(a0.to_string())),
            Some(m) => scalar::mod_inverse(a0, m).ok_or_else(|| Error::NonUnitConstant(a0.to_string())),
        }
    }

    /// Multiplicative inverse through the truncation order.
    pub fn inv(&self) -> Result<Self> {
        let one = TruncatedSeries::one(self.order(), self.modulus.clone())?;
        one.div(self)
    }

    /// `self / divisor`, which needs a unit constant term in `divisor`.
    ///
    /// Only the nonzero terms of the divisor are visited, so dividing by a
    /// sparse series (a Pochhammer product) costs O(Q * nnz).
    pub fn div(&self, divisor: &Self) -> Result<Self> {
        self.check_ring(divisor)?;
        let order = self.order().min(divisor.order());
        let b0_inv = self.unit_inverse(&divisor.coeffs[0])?;
        let support: Vec<(usize, &T)> =
            divisor.coeffs[..=order].iter().enumerate().skip(1).filter(|(_, c)| !c.is_zero()).collect();
        let mut out: Vec<T> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for &(i, b) in &support {
                if i > n {
                    break;
                }
                acc = self.norm(acc - b.clone() * &out[n - i]);
            }
            out.push(self.norm(acc * &b0_inv));
        }
        Ok(TruncatedSeries { coeffs: out, modulus: self.modulus.clone() })
    }

    /// Reduces into `Z/mZ`. Allowed from exact series, or from a modulus
    /// that `m` divides.
    pub fn reduce_mod(&self, m: &T) -> Result<Self> {
        if !m.is_positive() {
            return Err(Error::InvalidModulus(m.to_string()));
        }
        if let Some(from) = &self.modulus {
            if !from.is_multiple_of(m) {
                return Err(Error::IncompatibleModulus { from: from.to_string(), to: m.to_string() });
            }
        }
        let coeffs = self.coeffs.iter().map(|c| scalar::reduce(c, m)).collect();
        Ok(TruncatedSeries { coeffs, modulus: Some(m.clone()) })
    }

    /// Multiplies by `P(q^step)` where `poly[i]` is the coefficient of `x^i`
    /// in `P(x)`. Consumes the series and works in place.
    pub fn mul_dilated(mut self, poly: &[T], step: usize) -> Self {
        assert!(step >= 1);
        let q = self.order();
        let poly: Vec<T> = poly.iter().map(|c| self.norm(c.clone())).collect();
        // Descending so c[idx - i*step] is still the old value.
        for idx in (0..=q).rev() {
            let mut acc = T::zero();
            for (i, p) in poly.iter().enumerate() {
                let off = i * step;
                if off > idx {
                    break;
                }
                if p.is_zero() {
                    continue;
                }
                acc = acc + p.clone() * &self.coeffs[idx - off];
            }
            self.coeffs[idx] = self.norm(acc);
        }
        self
    }

    /// Divides by `1 - q^step` in place.
    pub fn div_one_minus_power(mut self, step: usize) -> Self {
        assert!(step >= 1);
        for idx in step..self.coeffs.len() {
            let prev = self.coeffs[idx - step].clone();
            self.coeffs[idx] = self.norm(self.coeffs[idx].clone() + prev);
        }
        self
    }

    /// Same series over another coefficient type.
    pub fn convert<S: Coefficient>(&self) -> TruncatedSeries<S> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(scalar::convert).collect(),
            modulus: self.modulus.as_ref().map(scalar::convert),
        }
    }
}

impl<T: Coefficient> fmt::Debug for TruncatedSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries(order={}, modulus=", self.order())?;
        match &self.modulus {
            Some(m) => write!(f, "{m}")?,
            None => write!(f, "exact")?,
        }
        write!(f, ", {:?})", self.coeffs)
    }
}

impl<T: Coefficient> fmt::Display for TruncatedSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*q")?,
                _ => write!(f, "{c}*q^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    modulus: Option<serde_json::Number>,
    order: usize,
    coeffs: Vec<String>,
}

impl<T: Coefficient> Serialize for TruncatedSeries<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let modulus = match &self.modulus {
            Some(m) => Some(m.to_string().parse::<serde_json::Number>().map_err(serde::ser::Error::custom)?),
            None => None,
        };
        SeriesRepr { modulus, order: self.order(), coeffs: self.coeffs.iter().map(|c| c.to_string()).collect() }
            .serialize(serializer)
    }
}

impl<'de, T: Coefficient> Deserialize<'de> for TruncatedSeries<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = SeriesRepr::deserialize(deserializer)?;
        if repr.coeffs.len() != repr.order + 1 {
            return Err(D::Error::custom(format!(
                "order {} needs {} coefficients, got {}",
                repr.order,
                repr.order + 1,
                repr.coeffs.len()
            )));
        }
        let parse = |s: &str| s.parse::<T>().map_err(|_| D::Error::custom(format!("bad integer {s:?}")));
        let modulus = repr.modulus.map(|m| parse(&m.to_string())).transpose()?;
        let coeffs = repr.coeffs.iter().map(|c| parse(c)).collect::<std::result::Result<Vec<_>, _>>()?;
        if let Some(m) = &modulus {
            if coeffs.iter().any(|c| c.is_negative() || c >= m) {
                return Err(D::Error::custom("coefficient outside [0, modulus)"));
            }
        }
        TruncatedSeries::new(coeffs, repr.order, modulus).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn ex(c: &[i64]) -> TruncatedSeries<i64> {
        TruncatedSeries::exact(c.to_vec())
    }

    #[test]
    fn difference_of_squares() {
        let a = ex(&[1, 1, 0]);
        let b = ex(&[1, -1, 0]);
        assert_eq!(a.mul(&b).unwrap().coeffs(), &[1, 0, -1]);
    }

    #[test]
    fn hand_convolution() {
        let a = ex(&[1, 1, 1, 0]);
        let b = ex(&[1, 1, 0, 0]);
        assert_eq!(a.mul(&b).unwrap().coeffs(), &[1, 2, 2, 1]);
    }

    #[test]
    fn identity_element() {
        let a = ex(&[3, -1, 4, 1, -5]);
        let one = TruncatedSeries::one(4, None).unwrap();
        assert_eq!(a.mul(&one).unwrap(), a);
    }

    #[test]
    fn mismatched_orders_truncate() {
        let a = ex(&[1, 1, 1, 1, 1]);
        let b = ex(&[1, 1]);
        assert_eq!(a.mul(&b).unwrap().order(), 1);
    }

    #[test]
    fn modulus_mismatch_rejected() {
        let a = ex(&[1, 2]);
        let b = a.reduce_mod(&5).unwrap();
        assert!(matches!(a.mul(&b), Err(Error::ModulusMismatch { .. })));
        let c = a.reduce_mod(&7).unwrap();
        assert!(matches!(b.mul(&c), Err(Error::ModulusMismatch { .. })));
    }

    #[test]
    fn geometric_inverse() {
        let a = ex(&[1, -1, 0, 0, 0]);
        assert_eq!(a.inv().unwrap().coeffs(), &[1, 1, 1, 1, 1]);
        let one = TruncatedSeries::<i64>::one(4, None).unwrap();
        assert_eq!(one.inv().unwrap(), one);
    }

    #[test]
    fn fibonacci_inverse() {
        let a = ex(&[1, -1, -1, 0, 0, 0]);
        assert_eq!(a.inv().unwrap().coeffs(), &[1, 1, 2, 3, 5, 8]);
    }

    #[test]
    fn non_unit_constant_rejected() {
        assert!(matches!(ex(&[2, 1]).inv(), Err(Error::NonUnitConstant(_))));
        let m = ex(&[3, 1]).reduce_mod(&27).unwrap();
        assert!(matches!(m.inv(), Err(Error::NonUnitConstant(_))));
        // 2 is a unit mod 27
        let m = ex(&[2, 1, 0, 0]).reduce_mod(&27).unwrap();
        let prod = m.mul(&m.inv().unwrap()).unwrap();
        assert_eq!(prod.coeffs(), &[1, 0, 0, 0]);
    }

    #[test]
    fn reduction() {
        let a = ex(&[18, 27, 28]);
        assert_eq!(a.reduce_mod(&27).unwrap().coeffs(), &[18, 0, 1]);
        assert_eq!(a.reduce_mod(&1).unwrap().coeffs(), &[0, 0, 0]);
        let a = ex(&[-1, -28]).reduce_mod(&27).unwrap();
        assert_eq!(a.coeffs(), &[26, 26]);
        assert_eq!(a.reduce_mod(&9).unwrap().coeffs(), &[8, 8]);
        assert!(matches!(a.reduce_mod(&4), Err(Error::IncompatibleModulus { .. })));
        assert!(matches!(a.reduce_mod(&0), Err(Error::InvalidModulus(_))));
    }

    #[test]
    fn dilated_factor_and_geometric_division() {
        // (1 + q^2 + q^4)(1/(1-q)) through q^5
        let s = TruncatedSeries::<i64>::one(5, None).unwrap();
        let s = s.mul_dilated(&[1, 1, 1], 2).div_one_minus_power(1);
        assert_eq!(s.coeffs(), &[1, 1, 2, 2, 3, 3]);
    }

    #[test]
    fn json_shape() {
        let a: TruncatedSeries<BigInt> =
            TruncatedSeries::new(vec![BigInt::from(5), BigInt::from(3)], 2, Some(BigInt::from(27))).unwrap();
        let v = serde_json::to_string(&a).unwrap();
        assert_eq!(v, r#"{"modulus":27,"order":2,"coeffs":["5","3","0"]}"#);
        let e = TruncatedSeries::exact(vec![BigInt::from(1)]);
        assert_eq!(serde_json::to_string(&e).unwrap(), r#"{"modulus":null,"order":0,"coeffs":["1"]}"#);
        assert!(serde_json::from_str::<TruncatedSeries<i64>>(r#"{"modulus":5,"order":0,"coeffs":["7"]}"#).is_err());
        assert!(serde_json::from_str::<TruncatedSeries<i64>>(r#"{"modulus":null,"order":1,"coeffs":["7"]}"#).is_err());
    }

    fn arb_series(order: usize) -> impl Strategy<Value = Vec<i64>> {
        proptest::collection::vec(-50i64..50, order + 1)
    }

    proptest! {
        #[test]
        fn mul_commutative_associative(a in arb_series(8), b in arb_series(8), c in arb_series(8)) {
            let (a, b, c) = (ex(&a), ex(&b), ex(&c));
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            let l = a.mul(&b).unwrap().mul(&c).unwrap();
            let r = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(l, r);
        }

        #[test]
        fn inverse_is_inverse(mut a in arb_series(12), sign in prop::bool::ANY) {
            a[0] = if sign { 1 } else { -1 };
            let a: TruncatedSeries<BigInt> = ex(&a).convert();
            let one = TruncatedSeries::one(12, None).unwrap();
            prop_assert_eq!(a.mul(&a.inv().unwrap()).unwrap(), one);
        }

        #[test]
        fn inverse_mod_m(a in arb_series(10), m in 2i64..60) {
            let s = ex(&a).reduce_mod(&m).unwrap();
            match s.inv() {
                Ok(inv) => {
                    let one = TruncatedSeries::one(10, Some(m)).unwrap();
                    prop_assert_eq!(s.mul(&inv).unwrap(), one);
                }
                Err(_) => prop_assert!(num_integer::gcd(*s.coeff(0), m) != 1),
            }
        }

        #[test]
        fn reduction_commutes_with_mul(a in arb_series(6), b in arb_series(6), m in 1i64..40) {
            let (a, b) = (ex(&a), ex(&b));
            let l = a.mul(&b).unwrap().reduce_mod(&m).unwrap();
            let r = a.reduce_mod(&m).unwrap().mul(&b.reduce_mod(&m).unwrap()).unwrap();
            prop_assert_eq!(l, r);
        }

        #[test]
        fn json_roundtrip(a in arb_series(7), m in proptest::option::of(1i64..1000)) {
            let s: TruncatedSeries<BigInt> = TruncatedSeries::new(ex(&a).convert::<BigInt>().into_coeffs(), 7, m.map(BigInt::from)).unwrap();
            let text = serde_json::to_string(&s).unwrap();
            let back: TruncatedSeries<BigInt> = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(back, s);
        }
    }
}
