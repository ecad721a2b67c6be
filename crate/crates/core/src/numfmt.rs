//! Serde glue for writing `BigInt`s as exact JSON numbers.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub(crate) mod json_int {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        let n = serde_json::Number::from_str(&x.to_string()).map_err(serde::ser::Error::custom)?;
        n.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let n = serde_json::Number::deserialize(d)?;
        BigInt::from_str(&n.to_string())
            .map_err(|_| D::Error::custom(format!("expected an integer, found {n}")))
    }
}

pub(crate) mod json_int_opt {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        match x {
            Some(x) => json_int::serialize(x, s),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
        #[derive(Deserialize)]
        struct Wrap(#[serde(with = "json_int")] BigInt);
        Ok(Option::<Wrap>::deserialize(d)?.map(|w| w.0))
    }
}
