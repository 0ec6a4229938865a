//! Unimodality of linear cuts through color coefficient arrays.

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::array::{box_color_array_with, ColorCoefficientArray, CutSpec};
use super::{f_box_sizes_all, BoxSpec};
use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// Weakly increasing up to some peak, weakly decreasing after it.
pub fn is_unimodal<T: PartialOrd>(seq: &[T]) -> bool {
    let mut i = 1;
    while i < seq.len() && seq[i - 1] <= seq[i] {
        i += 1;
    }
    while i < seq.len() && seq[i - 1] >= seq[i] {
        i += 1;
    }
    i >= seq.len()
}

/// Primitive integer directions with coordinates in `[-bound, bound]`, one
/// per antipodal pair (first nonzero coordinate positive), sorted.
pub fn primitive_directions(dims: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    if dims == 0 || bound < 1 {
        return out;
    }
    let width = (2 * bound + 1) as usize;
    let total = width.pow(dims as u32);
    for code in 0..total {
        let mut c = code;
        let mut v = Vec::with_capacity(dims);
        for _ in 0..dims {
            v.push((c % width) as i64 - bound);
            c /= width;
        }
        v.reverse();
        let first = v.iter().copied().find(|&x| x != 0);
        if first.is_none_or(|f| f < 0) {
            continue;
        }
        if v.iter().fold(0i64, |g, x| g.gcd(x)) == 1 {
            out.push(v);
        }
    }
    out.sort();
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutViolation<T> {
    pub cut: CutSpec,
    pub sequence: Vec<T>,
}

impl<T: Coefficient> Serialize for CutViolation<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        struct Ints<'a, T>(&'a [T]);
        impl<T: Coefficient> Serialize for Ints<'_, T> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                crate::json::serialize_ints(self.0, s)
            }
        }
        let mut st = serializer.serialize_struct("CutViolation", 3)?;
        st.serialize_field("start", &self.cut.start)?;
        st.serialize_field("direction", &self.cut.direction)?;
        st.serialize_field("sequence", &Ints(&self.sequence))?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnimodalityReport<T: Coefficient> {
    #[serde(rename = "box")]
    pub bx: BoxSpec,
    pub k: usize,
    pub n: usize,
    pub specialized: Option<usize>,
    pub direction_bound: i64,
    pub cuts_checked: u64,
    /// Sorted by direction, then start.
    pub violations: Vec<CutViolation<T>>,
}

impl<T: Coefficient> UnimodalityReport<T> {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every lattice cut of `array` (every in-bounds start, every
/// primitive direction up to `bound`).
pub fn scan_array<T: Coefficient>(array: &ColorCoefficientArray<T>, bound: i64) -> (u64, Vec<CutViolation<T>>) {
    let mut checked = 0;
    let mut violations = Vec::new();
    let starts = array.positions();
    for dir in primitive_directions(array.dims(), bound) {
        for start in &starts {
            let cut = CutSpec { start: start.clone(), direction: dir.clone() };
            let seq = array.linear_cut(&cut).expect("start is in bounds");
            checked += 1;
            if !is_unimodal(&seq) {
                violations.push(CutViolation { cut, sequence: seq });
            }
        }
    }
    (checked, violations)
}

/// Builds the array for `q^n` in the box with `k` colors, sets the last
/// variable to 1, and scans every cut.
pub fn unimodality_scan<T: Coefficient>(bx: BoxSpec, k: usize, n: usize, bound: i64) -> Result<UnimodalityReport<T>> {
    let fs = f_box_sizes_all::<T>(bx);
    scan_with(&fs, bx, k, n, bound)
}

fn scan_with<T: Coefficient>(fs: &[crate::poly::QPolynomial<T>], bx: BoxSpec, k: usize, n: usize, bound: i64) -> Result<UnimodalityReport<T>> {
    if bound < 1 {
        return Err(Error::InvalidParameter(format!("direction bound must be at least 1, got {bound}")));
    }
    let array = box_color_array_with(fs, bx, k, n)?.specialize_one(k - 1)?;
    let (cuts_checked, violations) = scan_array(&array, bound);
    Ok(UnimodalityReport { bx, k, n, specialized: Some(k - 1), direction_bound: bound, cuts_checked, violations })
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport<T: Coefficient> {
    pub max_part: usize,
    pub max_parts: usize,
    pub colors: Vec<usize>,
    pub direction_bound: i64,
    pub arrays_checked: u64,
    pub cuts_checked: u64,
    /// Only the arrays with at least one violation.
    pub findings: Vec<UnimodalityReport<T>>,
}

impl<T: Coefficient> SweepReport<T> {
    pub fn holds(&self) -> bool {
        self.findings.is_empty()
    }
}

/// Every box up to `max_part x max_parts`, every `k` in `colors`, every
/// `n <= M*N`.
pub fn unimodality_sweep<T: Coefficient>(max_part: usize, max_parts: usize, colors: &[usize], bound: i64) -> Result<SweepReport<T>> {
    let mut boxes = Vec::new();
    for m in 1..=max_part {
        for n in 1..=max_parts {
            boxes.push(BoxSpec::new(m, n)?);
        }
    }
    let per_box: Vec<Result<Vec<UnimodalityReport<T>>>> = boxes
        .par_iter()
        .map(|&bx| {
            let fs = f_box_sizes_all::<T>(bx);
            let mut reps = Vec::new();
            for &k in colors {
                for n in 0..=bx.area() {
                    reps.push(scan_with(&fs, bx, k, n, bound)?);
                }
            }
            Ok(reps)
        })
        .collect();
    let mut arrays_checked = 0;
    let mut cuts_checked = 0;
    let mut findings = Vec::new();
    for reps in per_box {
        for rep in reps? {
            arrays_checked += 1;
            cuts_checked += rep.cuts_checked;
            if !rep.holds() {
                findings.push(rep);
            }
        }
    }
    Ok(SweepReport { max_part, max_parts, colors: colors.to_vec(), direction_bound: bound, arrays_checked, cuts_checked, findings })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn reference(seq: &[i64]) -> bool {
        // exists a peak p: increasing on [0,p], decreasing on [p,len)
        if seq.is_empty() {
            return true;
        }
        (0..seq.len()).any(|p| seq[..=p].windows(2).all(|w| w[0] <= w[1]) && seq[p..].windows(2).all(|w| w[0] >= w[1]))
    }

    #[test]
    fn examples() {
        assert!(is_unimodal(&[101, 291, 300, 129, 19]));
        assert!(!is_unimodal(&[1, 0, 1]));
        assert!(is_unimodal::<i64>(&[]));
        assert!(is_unimodal(&[5]));
        assert!(is_unimodal(&[1, 2, 2, 1, 1, 0]));
        assert!(!is_unimodal(&[3, 1, 1, 2]));
    }

    #[test]
    fn directions() {
        assert_eq!(primitive_directions(1, 2), vec![vec![1]]);
        let d2 = primitive_directions(2, 2);
        assert_eq!(d2.len(), 8);
        assert!(d2.contains(&vec![2, -1]));
        assert!(d2.contains(&vec![0, 1]));
        assert!(!d2.contains(&vec![-1, 0]));
        assert!(primitive_directions(0, 2).is_empty());
    }

    #[test]
    fn eleven_by_seven_scan() {
        let rep = unimodality_scan::<i64>(BoxSpec::new(11, 7).unwrap(), 3, 14, 2).unwrap();
        assert!(rep.holds());
        assert_eq!(rep.cuts_checked, 64 * 8);
    }

    #[test]
    fn single_color_is_vacuous() {
        let rep = unimodality_scan::<i64>(BoxSpec::new(4, 4).unwrap(), 1, 6, 2).unwrap();
        assert_eq!(rep.cuts_checked, 0);
        assert!(rep.holds());
    }

    #[test]
    fn unspecialized_single_axis() {
        let rep = scan_array(&crate::boxes::array::box_color_array::<i64>(BoxSpec::new(2, 2).unwrap(), 1, 2).unwrap(), 1);
        // k=1 unspecialized: [f_0, f_1, f_2] at q^2 = [0, 2, 0] is unimodal
        assert!(rep.1.is_empty());
        let rep = scan_array(&crate::boxes::array::box_color_array::<i64>(BoxSpec::new(2, 2).unwrap(), 1, 0).unwrap(), 1);
        assert!(rep.1.is_empty());
    }

    proptest! {
        #[test]
        fn matches_reference(seq in proptest::collection::vec(0i64..5, 0..12)) {
            prop_assert_eq!(is_unimodal(&seq), reference(&seq));
        }

        #[test]
        fn up_then_down_is_unimodal(mut up in proptest::collection::vec(0i64..100, 0..10), mut down in proptest::collection::vec(0i64..100, 0..10)) {
            up.sort();
            down.sort_by(|a, b| b.cmp(a));
            prop_assert!(is_unimodal(&up));
            prop_assert!(is_unimodal(&down));
            if let (Some(a), Some(b)) = (up.last(), down.first()) {
                let peak = a.max(b) + 1;
                let mut seq = up.clone();
                seq.push(peak);
                seq.extend(&down);
                prop_assert!(is_unimodal(&seq));
            }
        }
    }
}
