//! The norm exponent `p ∈ [1, ∞]`.

use std::fmt;
use std::str::FromStr;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A validated L^p exponent: finite `p ≥ 1` or `∞`.
///
/// Serializes as a JSON number, or the string `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Exponent {
    Finite(f64),
    Infinity,
}

impl Exponent {
    pub fn new(p: f64) -> Result<Self> {
        if !p.is_finite() || p < 1.0 {
            return Err(Error::domain("exponent", format!("p = {p} must be >= 1")));
        }
        Ok(Exponent::Finite(p))
    }

    pub const INF: Exponent = Exponent::Infinity;

    pub fn is_finite(self) -> bool {
        matches!(self, Exponent::Finite(_))
    }

    /// The finite value, or `None` for `∞`.
    pub fn value(self) -> Option<f64> {
        match self {
            Exponent::Finite(p) => Some(p),
            Exponent::Infinity => None,
        }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Finite(p) => write!(f, "{p}"),
            Exponent::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for Exponent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "Inf" | "INF" | "infinity" | "oo" => Ok(Exponent::Infinity),
            t => {
                let p: f64 = t
                    .parse()
                    .map_err(|_| Error::domain("exponent", format!("cannot parse p from {t:?}")))?;
                Exponent::new(p)
            }
        }
    }
}

impl Serialize for Exponent {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Exponent::Finite(p) => ser.serialize_f64(*p),
            Exponent::Infinity => ser.serialize_str("inf"),
        }
    }
}

struct ExponentVisitor;

impl<'de> Visitor<'de> for ExponentVisitor {
    type Value = Exponent;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a number >= 1 or the string \"inf\"")
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<Exponent, E> {
        Exponent::new(v).map_err(|e| E::custom(e.to_string()))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Exponent, E> {
        self.visit_f64(v as f64)
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Exponent, E> {
        self.visit_f64(v as f64)
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Exponent, E> {
        v.parse().map_err(|e: Error| E::custom(e.to_string()))
    }
}

impl<'de> Deserialize<'de> for Exponent {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        de.deserialize_any(ExponentVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_sub_one() {
        assert!(Exponent::new(0.5).is_err());
        assert!(Exponent::new(f64::NAN).is_err());
        assert!(Exponent::new(1.0).is_ok());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("1.5".parse::<Exponent>().unwrap(), Exponent::Finite(1.5));
        assert_eq!("inf".parse::<Exponent>().unwrap(), Exponent::Infinity);
        assert_eq!(Exponent::Infinity.to_string(), "inf");
    }

    #[test]
    fn serde_round_trip() {
        let ps = [Exponent::Finite(1.95), Exponent::Infinity];
        let s = serde_json::to_string(&ps).unwrap();
        let back: Vec<Exponent> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, ps);
    }
}
