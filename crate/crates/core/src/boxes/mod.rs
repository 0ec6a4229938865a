//! Partitions in an `M x N` box counted by number of distinct part sizes,
//! their colored refinement, and the unimodality scanner.

pub mod array;
pub mod sizes;
pub mod unimodal;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{for_each_partition, Bounds};
use crate::poly::{gaussian_binomial, qbinomial, QPolynomial};
use crate::scalar::{binomial, Coefficient};

/// At most `max_parts` (N) parts, each of size at most `max_part` (M).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoxSpec {
    #[serde(rename = "M")]
    pub max_part: usize,
    #[serde(rename = "N")]
    pub max_parts: usize,
}

impl BoxSpec {
    pub fn new(max_part: usize, max_parts: usize) -> Result<Self> {
        if max_part == 0 || max_parts == 0 {
            return Err(Error::InvalidParameter(format!("box dimensions must be positive, got {max_part}x{max_parts}")));
        }
        Ok(BoxSpec { max_part, max_parts })
    }

    /// Largest possible number of distinct part sizes.
    pub fn max_sizes(&self) -> usize {
        self.max_part.min(self.max_parts)
    }

    pub fn area(&self) -> usize {
        self.max_part * self.max_parts
    }

    pub fn transpose(&self) -> Self {
        BoxSpec { max_part: self.max_parts, max_parts: self.max_part }
    }
}

/// Generating function of box partitions with exactly `r` distinct part
/// sizes:
///
/// `sum_{s=r}^{min(M,N)} C(s,r) (-1)^{s-r} q^{s(s+1)/2} [M over s]_q [M+N-s over N-s]_q`.
///
/// Returns the zero polynomial for `r > min(M, N)`.
pub fn f_box_sizes<T: Coefficient>(bx: BoxSpec, r: usize) -> QPolynomial<T> {
    let (m, n) = (bx.max_part, bx.max_parts);
    let mut acc = QPolynomial::zero();
    for s in r..=bx.max_sizes() {
        let mut c: T = binomial(s as i64, r as i64);
        if (s - r) % 2 == 1 {
            c = -c;
        }
        let term = gaussian_binomial::<T>(m, s).mul(&gaussian_binomial(m + n - s, n - s)).shift(s * (s + 1) / 2).scale(&c);
        acc = acc.add(&term);
    }
    acc
}

/// `f_box_sizes` for every `r` in `0..=min(M,N)`.
pub fn f_box_sizes_all<T: Coefficient>(bx: BoxSpec) -> Vec<QPolynomial<T>> {
    (0..=bx.max_sizes()).map(|r| f_box_sizes(bx, r)).collect()
}

/// Enumeration oracle for [`f_box_sizes_all`]: every box partition bucketed
/// by its number of distinct sizes. Index `r` of the result is the
/// polynomial for `r`.
pub fn box_sizes_brute_all<T: Coefficient>(bx: BoxSpec) -> Vec<QPolynomial<T>> {
    let mut counts = vec![vec![0u64; bx.area() + 1]; bx.max_sizes() + 1];
    let bounds = Bounds { max_part: bx.max_part as u32, max_parts: bx.max_parts as u64 };
    for n in 0..=bx.area() {
        for_each_partition(n as u64, bounds, |lam| counts[lam.num_sizes()][n] += 1);
    }
    counts.into_iter().map(|row| QPolynomial::new(row.into_iter().map(T::from_u).collect())).collect()
}

pub fn box_sizes_brute<T: Coefficient>(bx: BoxSpec, r: usize) -> QPolynomial<T> {
    box_sizes_brute_all(bx).into_iter().nth(r).unwrap_or_else(QPolynomial::zero)
}

/// A polynomial in `t` whose coefficients are polynomials in `q`; index `i`
/// holds the coefficient of `t^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TPolynomial<T> {
    coeffs: Vec<QPolynomial<T>>,
}

impl<T: Coefficient> TPolynomial<T> {
    pub fn new(mut coeffs: Vec<QPolynomial<T>>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(QPolynomial::zero());
        }
        TPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[QPolynomial<T>] {
        &self.coeffs
    }

    /// Coefficient of `t^i`.
    pub fn t_coeff(&self, i: usize) -> QPolynomial<T> {
        self.coeffs.get(i).cloned().unwrap_or_else(QPolynomial::zero)
    }

    pub fn t_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Substitutes `t -> t + a`.
    pub fn shift_t(&self, a: i64) -> Self {
        let d = self.coeffs.len();
        let mut out = vec![QPolynomial::zero(); d];
        // (t + a)^k = sum_r C(k, r) a^(k-r) t^r
        for (k, c) in self.coeffs.iter().enumerate() {
            let mut apow = T::one();
            for r in (0..=k).rev() {
                let w = binomial::<T>(k as i64, r as i64) * &apow;
                out[r] = out[r].add(&c.scale(&w));
                apow = apow * T::from_i(a);
            }
        }
        TPolynomial::new(out)
    }

    /// Evaluates at a fixed `t`.
    pub fn eval_t(&self, t: i64) -> QPolynomial<T> {
        let t = T::from_i(t);
        self.coeffs.iter().rev().fold(QPolynomial::zero(), |acc, c| acc.scale(&t).add(c))
    }
}

/// Overpartitions in the box, `t` marking overlined parts:
/// `sum_k t^k q^{k(k+1)/2} [M over k]_q [M+N-k over N-k]_q`.
pub fn dousse_kim_poly<T: Coefficient>(bx: BoxSpec) -> TPolynomial<T> {
    let (m, n) = (bx.max_part, bx.max_parts);
    TPolynomial::new(
        (0..=bx.max_sizes())
            .map(|k| gaussian_binomial::<T>(m, k).mul(&gaussian_binomial(m + n - k, n - k)).shift(k * (k + 1) / 2))
            .collect(),
    )
}

/// `sum_r t^r f_{MxN;r}(q)`.
pub fn sizes_t_poly<T: Coefficient>(bx: BoxSpec) -> TPolynomial<T> {
    TPolynomial::new(f_box_sizes_all(bx))
}

/// Sum of all `f_{MxN;r}`, which should be the plain box generating function.
pub fn sizes_total<T: Coefficient>(bx: BoxSpec) -> QPolynomial<T> {
    f_box_sizes_all::<T>(bx).iter().fold(QPolynomial::zero(), |acc, f| acc.add(f))
}

/// `[M+N over N]_q`, re-exported here for symmetry with the other box
/// generating functions.
pub fn box_qbinomial<T: Coefficient>(bx: BoxSpec) -> QPolynomial<T> {
    qbinomial(bx.max_part, bx.max_parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn bx(m: usize, n: usize) -> BoxSpec {
        BoxSpec::new(m, n).unwrap()
    }

    #[test]
    fn small_boxes() {
        assert_eq!(f_box_sizes::<i64>(bx(3, 5), 0), QPolynomial::one());
        assert_eq!(f_box_sizes::<i64>(bx(2, 2), 1).coeffs(), &[0, 1, 2, 0, 1]);
        assert_eq!(f_box_sizes::<i64>(bx(2, 2), 2).coeffs(), &[0, 0, 0, 1]);
        assert!(f_box_sizes::<i64>(bx(2, 2), 3).is_zero());
        assert_eq!(box_sizes_brute::<i64>(bx(1, 1), 1).coeffs(), &[0, 1]);
        assert!(BoxSpec::new(0, 3).is_err());
    }

    #[test]
    fn formula_matches_enumeration() {
        for m in 1..=6 {
            for n in 1..=6 {
                let b = bx(m, n);
                assert_eq!(f_box_sizes_all::<BigInt>(b), box_sizes_brute_all::<BigInt>(b), "{m}x{n}");
                assert_eq!(sizes_total::<BigInt>(b), box_qbinomial(b));
            }
        }
    }

    #[test]
    fn dousse_kim_small() {
        let dk = dousse_kim_poly::<i64>(bx(1, 1));
        assert_eq!(dk.t_coeff(0).coeffs(), &[1, 1]);
        assert_eq!(dk.t_coeff(1).coeffs(), &[0, 1]);
        for m in 1..=5 {
            for n in 1..=5 {
                let b = bx(m, n);
                let dk = dousse_kim_poly::<BigInt>(b);
                assert_eq!(dk.eval_t(0), box_qbinomial(b));
                assert_eq!(dk.shift_t(-1), sizes_t_poly(b));
            }
        }
    }

    #[test]
    fn t_shift_roundtrip() {
        let p = TPolynomial::new(vec![
            QPolynomial::new(vec![1i64, 2]),
            QPolynomial::new(vec![0i64, 3]),
            QPolynomial::new(vec![5i64]),
        ]);
        assert_eq!(p.shift_t(3).shift_t(-3), p);
        assert_eq!(p.shift_t(1).eval_t(0), p.eval_t(1));
        assert_eq!(p.eval_t(2).coeffs(), &[21, 8]);
    }
}
