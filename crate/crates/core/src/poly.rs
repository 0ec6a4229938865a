//! Finite integer polynomials in `q`, and Gaussian binomial coefficients.

use std::fmt;

use crate::scalar::{self, Coefficient};
use crate::series::TruncatedSeries;

/// Exact polynomial in `q`. The leading coefficient is nonzero, except for
/// the zero polynomial which is stored as the single coefficient `0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QPolynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Coefficient> QPolynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(T::zero());
        }
        QPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        QPolynomial { coeffs: vec![T::zero()] }
    }

    pub fn one() -> Self {
        QPolynomial { coeffs: vec![T::one()] }
    }

    /// `c * q^power`.
    pub fn monomial(c: T, power: usize) -> Self {
        let mut coeffs = vec![T::zero(); power + 1];
        coeffs[power] = c;
        QPolynomial::new(coeffs)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `q^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        QPolynomial::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        QPolynomial::new((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return QPolynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = std::mem::replace(&mut out[i + j], T::zero()) + a.clone() * b;
            }
        }
        QPolynomial::new(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        QPolynomial::new(self.coeffs.iter().map(|x| x.clone() * c).collect())
    }

    /// Multiplies by `q^s`.
    pub fn shift(&self, s: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![T::zero(); s];
        coeffs.extend(self.coeffs.iter().cloned());
        QPolynomial { coeffs }
    }

    /// Value at `q = 1`, i.e. the coefficient sum.
    pub fn eval_one(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |acc, c| acc + c)
    }

    pub fn is_palindromic(&self) -> bool {
        let d = self.degree();
        (0..=d).all(|i| self.coeffs[i] == self.coeffs[d - i])
    }

    /// Truncation to a series of the given order (exact ring).
    pub fn to_series(&self, order: usize) -> TruncatedSeries<T> {
        TruncatedSeries::new(self.coeffs.clone(), order, None).expect("exact series")
    }

    pub fn convert<S: Coefficient>(&self) -> QPolynomial<S> {
        QPolynomial { coeffs: self.coeffs.iter().map(scalar::convert).collect() }
    }
}

impl<T: Coefficient> fmt::Display for QPolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
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
        Ok(())
    }
}

/// Gaussian binomial `[top over bottom]_q`; zero when `bottom > top`.
pub fn gaussian_binomial<T: Coefficient>(top: usize, bottom: usize) -> QPolynomial<T> {
    if bottom > top {
        return QPolynomial::zero();
    }
    box_generating_function(top - bottom, bottom)
}

/// `[M+N over N]_q`: partitions with at most `n_parts` parts, each at most
/// `max_part`.
pub fn qbinomial<T: Coefficient>(max_part: usize, n_parts: usize) -> QPolynomial<T> {
    box_generating_function(max_part, n_parts)
}

// G(a, b) = G(a, b-1) + q^b G(a-1, b), G(0, b) = G(a, 0) = 1, which is the
// Gaussian recurrence [a+b over b] = [a+b-1 over b-1] + q^b [a+b-1 over b].
fn box_generating_function<T: Coefficient>(a: usize, b: usize) -> QPolynomial<T> {
    // prev[j] = G(i-1, j); cur[j] = G(i, j)
    let mut prev: Vec<QPolynomial<T>> = vec![QPolynomial::one(); b + 1];
    for _ in 1..=a {
        let mut cur: Vec<QPolynomial<T>> = Vec::with_capacity(b + 1);
        cur.push(QPolynomial::one());
        for j in 1..=b {
            let next = cur[j - 1].add(&prev[j].shift(j));
            cur.push(next);
        }
        prev = cur;
    }
    prev.pop().expect("b + 1 >= 1 entries")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    /// Oracle: count partitions in the box by listing weakly decreasing
    /// sequences directly.
    fn box_counts(m: usize, n: usize) -> Vec<i64> {
        fn rec(max: usize, slots: usize, sum: usize, out: &mut Vec<i64>) {
            out[sum] += 1;
            if slots == 0 {
                return;
            }
            for p in 1..=max {
                rec(p, slots - 1, sum + p, out);
            }
        }
        let mut out = vec![0; m * n + 1];
        rec(m, n, 0, &mut out);
        out
    }

    #[test]
    fn small_cases() {
        assert_eq!(qbinomial::<i64>(0, 5), QPolynomial::one());
        assert_eq!(qbinomial::<i64>(1, 1).coeffs(), &[1, 1]);
        assert_eq!(qbinomial::<i64>(2, 2).coeffs(), &[1, 1, 2, 1, 1]);
        assert!(gaussian_binomial::<i64>(2, 3).is_zero());
        assert_eq!(gaussian_binomial::<i64>(4, 2).coeffs(), &[1, 1, 2, 1, 1]);
    }

    #[test]
    fn matches_enumeration_palindromic_and_binomial_sum() {
        for m in 0..=8 {
            for n in 0..=8 {
                let p = qbinomial::<BigInt>(m, n);
                assert_eq!(p.degree(), m * n);
                assert!(p.is_palindromic(), "{m}x{n}");
                assert_eq!(p.eval_one(), scalar::binomial::<BigInt>((m + n) as i64, n as i64));
                let want: Vec<BigInt> = box_counts(m, n).into_iter().map(BigInt::from).collect();
                assert_eq!(p.coeffs(), &want[..], "{m}x{n}");
            }
        }
    }

    #[test]
    fn arithmetic() {
        let a = QPolynomial::new(vec![1i64, 1]);
        let b = QPolynomial::new(vec![1i64, -1]);
        assert_eq!(a.mul(&b).coeffs(), &[1, 0, -1]);
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.shift(2).coeffs(), &[0, 0, 1, 1]);
        assert_eq!(QPolynomial::new(vec![0i64, 0, 0]).degree(), 0);
        assert_eq!(a.to_string(), "1 + 1*q");
    }
}
