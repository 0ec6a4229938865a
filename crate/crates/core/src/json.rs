//! Exact integers as JSON numbers of any size.

use std::fmt::Display;

use serde::ser::{Error as _, SerializeSeq};
use serde::Serializer;

pub fn number<T: Display>(x: &T) -> serde_json::Number {
    x.to_string().parse().expect("integer Display output is a valid JSON number")
}

pub fn serialize_ints<T: Display, S: Serializer>(xs: &[T], serializer: S) -> Result<S::Ok, S::Error> {
    let mut seq = serializer.serialize_seq(Some(xs.len()))?;
    for x in xs {
        let n: serde_json::Number = x.to_string().parse().map_err(S::Error::custom)?;
        seq.serialize_element(&n)?;
    }
    seq.end()
}
