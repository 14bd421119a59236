//! JSON encoding of arbitrary-precision integers.
//!
//! Values within `±(2^53 - 1)` are written as JSON numbers; anything larger
//! is written as a decimal string so double-precision consumers never round
//! it. Both forms are accepted on input.

use std::fmt;

use num_bigint::BigInt;
use serde::de::{self, Visitor};
use serde::{Deserializer, Serializer};
use serde_json::Value;

pub const MAX_SAFE: i64 = (1 << 53) - 1;

pub fn to_value(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(small) if (-MAX_SAFE..=MAX_SAFE).contains(&small) => Value::from(small),
        _ => Value::String(v.to_string()),
    }
}

pub fn serialize<S: Serializer>(v: &BigInt, ser: S) -> Result<S::Ok, S::Error> {
    match i64::try_from(v) {
        Ok(small) if (-MAX_SAFE..=MAX_SAFE).contains(&small) => ser.serialize_i64(small),
        _ => ser.serialize_str(&v.to_string()),
    }
}

pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<BigInt, D::Error> {
    de.deserialize_any(IntVisitor)
}

struct IntVisitor;

impl<'de> Visitor<'de> for IntVisitor {
    type Value = BigInt;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer or a decimal integer string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigInt, E> {
        Ok(BigInt::from(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigInt, E> {
        Ok(BigInt::from(v))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<BigInt, E> {
        v.parse()
            .map_err(|_| E::invalid_value(de::Unexpected::Str(v), &self))
    }
}

/// `Option<BigInt>` fields; pair with `#[serde(default)]`.
pub mod opt {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Option<BigInt>, ser: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => super::serialize(v, ser),
            None => ser.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Option<BigInt>, D::Error> {
        super::deserialize(de).map(Some)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary() {
        assert_eq!(to_value(&BigInt::from(MAX_SAFE)), Value::from(MAX_SAFE));
        assert_eq!(to_value(&BigInt::from(-MAX_SAFE)), Value::from(-MAX_SAFE));
        assert_eq!(
            to_value(&BigInt::from(MAX_SAFE + 1)),
            Value::String("9007199254740992".into())
        );
        let huge: BigInt = "-123456789012345678901234567890".parse().unwrap();
        assert_eq!(to_value(&huge), Value::String(huge.to_string()));
    }
}
