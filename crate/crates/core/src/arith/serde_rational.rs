//! Serde helpers writing rationals as exact `"num/den"` strings.

use num_rational::BigRational;
use serde::{Deserialize, Deserializer, Serializer};

use super::parse_rational;

pub fn serialize<S: Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{}/{}", q.numer(), q.denom()))
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
    let s = String::deserialize(d)?;
    parse_rational(&s).map_err(serde::de::Error::custom)
}
