//! Coefficient arrays over color exponents for a fixed power of `q`.
//!
//! For `k` colors, the coefficient of `x_1^{t_1} ... x_k^{t_k} q^n` in the
//! colored box generating function is `multinomial(r; t) * [q^n] f_{MxN;r}`
//! with `r = t_1 + ... + t_k`. Arrays are dense, row-major, 0-indexed, with
//! side `min(M,N) + 1` along every axis.

use num_integer::Integer;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use super::{f_box_sizes_all, BoxSpec};
use crate::error::{Error, Result};
use crate::poly::QPolynomial;
use crate::scalar::{multinomial, Coefficient};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorCoefficientArray<T> {
    pub bx: BoxSpec,
    pub k: usize,
    pub n: usize,
    /// Axis (0-based variable index) that has been set to 1, if any.
    specialized: Option<usize>,
    shape: Vec<usize>,
    data: Vec<T>,
}

/// Builds the unspecialized `k`-dimensional array for the coefficient of `q^n`.
pub fn box_color_array<T: Coefficient>(bx: BoxSpec, k: usize, n: usize) -> Result<ColorCoefficientArray<T>> {
    box_color_array_with(&f_box_sizes_all(bx), bx, k, n)
}

/// Same as [`box_color_array`] with the `f_{MxN;r}` polynomials supplied,
/// so sweeps over `n` build them once.
pub fn box_color_array_with<T: Coefficient>(fs: &[QPolynomial<T>], bx: BoxSpec, k: usize, n: usize) -> Result<ColorCoefficientArray<T>> {
    if k == 0 {
        return Err(Error::InvalidParameter("need at least one color".into()));
    }
    let side = bx.max_sizes() + 1;
    let shape = vec![side; k];
    let len = side.checked_pow(k as u32).ok_or_else(|| Error::InvalidParameter(format!("array {side}^{k} is too large")))?;
    let fq: Vec<T> = fs.iter().map(|f| f.coeff(n)).collect();
    let mut data = Vec::with_capacity(len);
    let mut idx = vec![0usize; k];
    for _ in 0..len {
        let r: usize = idx.iter().sum();
        let v = match fq.get(r) {
            Some(c) if !c.is_zero() => multinomial::<T>(&idx) * c,
            _ => T::zero(),
        };
        data.push(v);
        // odometer, last axis fastest
        for a in (0..k).rev() {
            idx[a] += 1;
            if idx[a] < side {
                break;
            }
            idx[a] = 0;
        }
    }
    Ok(ColorCoefficientArray { bx, k, n, specialized: None, shape, data })
}

impl<T: Coefficient> ColorCoefficientArray<T> {
    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn dims(&self) -> usize {
        self.shape.len()
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn specialized(&self) -> Option<usize> {
        self.specialized
    }

    fn offset(&self, pos: &[usize]) -> Option<usize> {
        if pos.len() != self.shape.len() {
            return None;
        }
        let mut off = 0;
        for (p, s) in pos.iter().zip(&self.shape) {
            if p >= s {
                return None;
            }
            off = off * s + p;
        }
        Some(off)
    }

    pub fn get(&self, pos: &[usize]) -> Option<&T> {
        self.offset(pos).map(|o| &self.data[o])
    }

    /// Sets variable `axis` to 1, summing the array along that axis.
    pub fn specialize_one(&self, axis: usize) -> Result<Self> {
        if let Some(a) = self.specialized {
            return Err(Error::AlreadySpecialized(a));
        }
        if axis >= self.dims() {
            return Err(Error::InvalidParameter(format!("axis {axis} out of range for {} variables", self.dims())));
        }
        let outer: usize = self.shape[..axis].iter().product();
        let along = self.shape[axis];
        let inner: usize = self.shape[axis + 1..].iter().product();
        let mut data = vec![T::zero(); outer * inner];
        for o in 0..outer {
            for a in 0..along {
                for i in 0..inner {
                    let src = &self.data[(o * along + a) * inner + i];
                    let dst = &mut data[o * inner + i];
                    *dst = std::mem::replace(dst, T::zero()) + src;
                }
            }
        }
        let mut shape = self.shape.clone();
        shape.remove(axis);
        Ok(ColorCoefficientArray { bx: self.bx, k: self.k, n: self.n, specialized: Some(axis), shape, data })
    }

    /// The 2-D array as rows, or `None` for other dimensions.
    pub fn rows(&self) -> Option<Vec<Vec<T>>> {
        if self.dims() != 2 {
            return None;
        }
        Some(self.data.chunks(self.shape[1]).map(|c| c.to_vec()).collect())
    }

    /// Entries visited from `cut.start` along `cut.direction` until leaving
    /// the array.
    pub fn linear_cut(&self, cut: &CutSpec) -> Result<Vec<T>> {
        let oob = || Error::OutOfBounds { position: cut.start.clone(), shape: self.shape.clone() };
        if cut.start.len() != self.dims() || cut.direction.len() != self.dims() {
            return Err(Error::InvalidParameter(format!(
                "cut has {} coordinates, array has {} axes",
                cut.start.len(),
                self.dims()
            )));
        }
        let mut pos = cut.start.clone();
        if !self.in_bounds(&pos) {
            return Err(oob());
        }
        let mut out = Vec::new();
        while self.in_bounds(&pos) {
            let upos: Vec<usize> = pos.iter().map(|&p| p as usize).collect();
            out.push(self.get(&upos).expect("in bounds").clone());
            for (p, d) in pos.iter_mut().zip(&cut.direction) {
                *p += d;
            }
        }
        Ok(out)
    }

    pub(crate) fn in_bounds(&self, pos: &[i64]) -> bool {
        pos.len() == self.shape.len() && pos.iter().zip(&self.shape).all(|(&p, &s)| p >= 0 && (p as usize) < s)
    }

    /// Every position in row-major order.
    pub fn positions(&self) -> Vec<Vec<i64>> {
        let total: usize = self.shape.iter().product();
        let mut out = Vec::with_capacity(total);
        let mut idx = vec![0i64; self.dims()];
        for _ in 0..total {
            out.push(idx.clone());
            for a in (0..self.dims()).rev() {
                idx[a] += 1;
                if (idx[a] as usize) < self.shape[a] {
                    break;
                }
                idx[a] = 0;
            }
        }
        out
    }

    /// Smallest leading sub-array containing every nonzero entry.
    pub fn nonzero_extent(&self) -> Vec<usize> {
        let mut ext = vec![0usize; self.dims()];
        for pos in self.positions() {
            let u: Vec<usize> = pos.iter().map(|&p| p as usize).collect();
            if !self.get(&u).expect("in bounds").is_zero() {
                for (e, p) in ext.iter_mut().zip(&u) {
                    *e = (*e).max(p + 1);
                }
            }
        }
        ext
    }
}

impl<T: Coefficient> Serialize for ColorCoefficientArray<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Ints<'a, T>(&'a [T]);
        impl<T: Coefficient> Serialize for Ints<'_, T> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                crate::json::serialize_ints(self.0, s)
            }
        }
        let mut st = serializer.serialize_struct("ColorCoefficientArray", 6)?;
        st.serialize_field("box", &self.bx)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("specialized", &self.specialized)?;
        st.serialize_field("shape", &self.shape)?;
        st.serialize_field("data", &Ints(&self.data))?;
        st.end()
    }
}

/// A lattice line: `start + i * direction` for `i = 0, 1, ...`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CutSpec {
    pub start: Vec<i64>,
    pub direction: Vec<i64>,
}

impl CutSpec {
    pub fn new(start: Vec<i64>, direction: Vec<i64>) -> Result<Self> {
        if start.len() != direction.len() {
            return Err(Error::InvalidParameter("start and direction need the same length".into()));
        }
        let g = direction.iter().fold(0i64, |g, d| g.gcd(d));
        if g != 1 {
            return Err(Error::InvalidParameter(format!("direction {direction:?} must be nonzero and primitive")));
        }
        Ok(CutSpec { start, direction })
    }
}
