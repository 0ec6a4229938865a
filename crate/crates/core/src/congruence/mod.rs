//! Scanning coefficient sequences along arithmetic progressions.
//!
//! [`nine_colors`] covers the mod-27 statements for nine colors and
//! [`two_p`] the mod-p^2 identity for `c_{2p,p}`.

pub mod nine_colors;
pub mod two_p;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Coefficient;
use crate::series::TruncatedSeries;

/// Witness lists are capped at this many entries.
pub const MAX_WITNESSES: usize = 100;

/// Indices `residue, residue + step, ...` up to `max_index`, checked modulo
/// `modulus`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProgressionSpec {
    pub residue: u64,
    pub step: u64,
    pub modulus: u64,
    pub max_index: u64,
}

impl ProgressionSpec {
    pub fn new(residue: u64, step: u64, modulus: u64, max_index: u64) -> Result<Self> {
        if step == 0 {
            return Err(Error::InvalidParameter("progression step must be positive".into()));
        }
        if modulus == 0 {
            return Err(Error::InvalidModulus("0".into()));
        }
        Ok(ProgressionSpec { residue, step, modulus, max_index })
    }

    /// `0 <= residue < step`.
    pub fn is_canonical(&self) -> bool {
        self.residue < self.step
    }

    pub fn indices(&self) -> impl Iterator<Item = u64> + '_ {
        (self.residue..=self.max_index).step_by(self.step as usize)
    }

    /// Parses `"3n+2"`, `"9n+2"`, `"n+2"`, `"3^2n+2"` or `"3^l n+2"`; a
    /// literal `l` exponent is replaced by `ell`.
    pub fn parse(text: &str, ell: Option<u32>, modulus: u64, max_index: u64) -> Result<Self> {
        let form = ProgressionForm::parse(text, ell)?;
        ProgressionSpec::new(form.residue, form.step, modulus, max_index)
    }
}

/// The `step*n + residue` part of a progression, without modulus or bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProgressionForm {
    pub step: u64,
    pub residue: u64,
}

impl ProgressionForm {
    pub fn parse(text: &str, ell: Option<u32>) -> Result<Self> {
        let bad = || Error::Parse(format!("expected a progression like 3n+2 or 3^l n+2, got {text:?}"));
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let (head, residue) = match compact.split_once('+') {
            Some((h, r)) => (h, r.parse::<u64>().map_err(|_| bad())?),
            None => (compact.as_str(), 0),
        };
        let head = head.strip_suffix('n').ok_or_else(bad)?;
        let step = if head.is_empty() {
            1
        } else if let Some((base, exp)) = head.split_once('^') {
            let base: u64 = base.parse().map_err(|_| bad())?;
            let exp: u32 = match exp {
                "l" | "ell" => ell.ok_or_else(|| Error::Parse(format!("{text:?} needs an ell value")))?,
                e => e.parse().map_err(|_| bad())?,
            };
            base.checked_pow(exp).ok_or_else(|| Error::Parse(format!("{base}^{exp} overflows")))?
        } else {
            head.parse().map_err(|_| bad())?
        };
        if step == 0 {
            return Err(bad());
        }
        Ok(ProgressionForm { step, residue })
    }
}

impl fmt::Display for ProgressionForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.step {
            1 => write!(f, "n+{}", self.residue),
            s => write!(f, "{s}n+{}", self.residue),
        }
    }
}

impl FromStr for ProgressionForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ProgressionForm::parse(s, None)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceReport {
    pub spec: ProgressionSpec,
    pub holds: bool,
    /// `(index, coefficient mod m)` for every nonzero residue, capped at
    /// [`MAX_WITNESSES`], sorted by index.
    pub witnesses: Vec<(u64, u64)>,
    pub checked_count: u64,
}

/// Checks that every coefficient on the progression vanishes mod `m`.
pub fn verify_progression<T: Coefficient>(series: &TruncatedSeries<T>, spec: &ProgressionSpec) -> Result<CongruenceReport> {
    if (series.order() as u64) < spec.max_index {
        return Err(Error::OrderTooSmall { have: series.order(), need: spec.max_index as usize });
    }
    let m = T::from_u(spec.modulus);
    if let Some(sm) = series.modulus() {
        if !sm.is_multiple_of(&m) {
            return Err(Error::IncompatibleModulus { from: sm.to_string(), to: m.to_string() });
        }
    }
    let mut witnesses = Vec::new();
    let mut any = false;
    let mut checked_count = 0;
    for idx in spec.indices() {
        checked_count += 1;
        let r = series.coeff(idx as usize).mod_floor(&m);
        if !r.is_zero() {
            any = true;
            if witnesses.len() < MAX_WITNESSES {
                witnesses.push((idx, r.to_u64().expect("residue below a u64 modulus")));
            }
        }
    }
    Ok(CongruenceReport { spec: spec.clone(), holds: !any, witnesses, checked_count })
}
