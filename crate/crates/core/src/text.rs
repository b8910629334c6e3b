//! Serde helpers that write rationals as `"p/q"` strings (`"p"` for
//! integers). Reading also accepts JSON integers. Use as
//! `#[serde(with = "crate::text")]` on any field built from rationals.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Rational;

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Text(String),
    Int(i64),
}

pub trait Text: Sized {
    type Repr: Serialize + for<'de> Deserialize<'de>;
    fn to_repr(&self) -> Self::Repr;
    fn from_repr(r: Self::Repr) -> Result<Self, String>;
}

impl Text for Rational {
    type Repr = Number;

    fn to_repr(&self) -> Number {
        Number::Text(self.to_string())
    }

    fn from_repr(r: Number) -> Result<Self, String> {
        match r {
            Number::Int(n) => Ok(Rational::from_integer(n.into())),
            Number::Text(s) => {
                let (num, den) = match s.split_once('/') {
                    Some((a, b)) => (a.trim(), b.trim()),
                    None => (s.trim(), "1"),
                };
                let num = num.parse().map_err(|_| format!("not a rational: {s:?}"))?;
                let den: num_bigint::BigInt = den.parse().map_err(|_| format!("not a rational: {s:?}"))?;
                if num_traits::Zero::is_zero(&den) {
                    return Err(format!("zero denominator in {s:?}"));
                }
                Ok(Rational::new(num, den))
            }
        }
    }
}

impl<T: Text> Text for Vec<T> {
    type Repr = Vec<T::Repr>;

    fn to_repr(&self) -> Self::Repr {
        self.iter().map(Text::to_repr).collect()
    }

    fn from_repr(r: Self::Repr) -> Result<Self, String> {
        r.into_iter().map(T::from_repr).collect()
    }
}

impl<T: Text> Text for Option<T> {
    type Repr = Option<T::Repr>;

    fn to_repr(&self) -> Self::Repr {
        self.as_ref().map(Text::to_repr)
    }

    fn from_repr(r: Self::Repr) -> Result<Self, String> {
        r.map(T::from_repr).transpose()
    }
}

impl<A: Text, B: Text> Text for (A, B) {
    type Repr = (A::Repr, B::Repr);

    fn to_repr(&self) -> Self::Repr {
        (self.0.to_repr(), self.1.to_repr())
    }

    fn from_repr(r: Self::Repr) -> Result<Self, String> {
        Ok((A::from_repr(r.0)?, B::from_repr(r.1)?))
    }
}

pub fn serialize<T: Text, S: Serializer>(value: &T, s: S) -> Result<S::Ok, S::Error> {
    value.to_repr().serialize(s)
}

pub fn deserialize<'de, T: Text, D: Deserializer<'de>>(d: D) -> Result<T, D::Error> {
    T::from_repr(T::Repr::deserialize(d)?).map_err(D::Error::custom)
}

/// Parse `"p/q"`, `"p"` or an integer literal.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    Rational::from_repr(Number::Text(s.into()))
}
