//! Exact scalar fields.
//!
//! All linear algebra in the crate is written against [`Field`], so the same
//! code runs over machine-word rationals, arbitrary precision rationals and
//! the cyclotomic fields used by the local model. Floating point types are
//! intentionally not fields here.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

/// A commutative ring with exact arithmetic.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
}

impl<T> Ring for T where
    T: Clone
        + Debug
        + PartialEq
        + Zero
        + One
        + Neg<Output = Self>
        + Add<Output = Self>
        + Sub<Output = Self>
        + Mul<Output = Self>
        + Send
        + Sync
        + 'static
{
}

/// A commutative field with exact arithmetic.
pub trait Field: Ring + Div<Output = Self> {
    fn from_i64(n: i64) -> Self;

    /// The value as an exact rational, when it is one.
    fn to_rational(&self) -> Option<BigRational>;

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

pub type BigRational = Ratio<BigInt>;

impl<T> Field for Ratio<T>
where
    T: Integer + Clone + Signed + FromPrimitive + Into<BigInt> + Debug + Send + Sync + 'static,
{
    fn from_i64(n: i64) -> Self {
        Ratio::from_integer(T::from_i64(n).expect("integer out of range for scalar type"))
    }

    fn to_rational(&self) -> Option<BigRational> {
        Some(Ratio::new(self.numer().clone().into(), self.denom().clone().into()))
    }
}

/// Converts an exact rational to `i64` when it is an integer in range.
pub fn rational_to_i64(q: &BigRational) -> Option<i64> {
    if q.is_integer() {
        q.to_integer().to_i64()
    } else {
        None
    }
}

/// Formats a rational as `p/q` with `q >= 1`.
pub fn format_rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `p/q` or a plain integer.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Ratio::new(p, q))
            }
        }
        None => s.parse::<BigInt>().ok().map(Ratio::from_integer),
    }
}

pub fn rat(p: i64, q: i64) -> BigRational {
    Ratio::new(BigInt::from(p), BigInt::from(q))
}

pub fn rat_int(p: i64) -> BigRational {
    Ratio::from_integer(BigInt::from(p))
}

/// Serde adapter writing rationals as `"p/q"` strings.
pub mod serde_rational {
    use super::{format_rational, parse_rational, BigRational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).ok_or_else(|| serde::de::Error::custom(format!("bad rational `{s}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field_roundtrip<F: Field>() {
        let a = F::from_i64(3);
        let b = F::from_i64(-7);
        let q = a.clone() / b.clone();
        assert_eq!(q.clone() * b, a);
        assert_eq!(q.inv() * q, F::one());
    }

    #[test]
    fn generic_over_rational_widths() {
        field_roundtrip::<Ratio<i64>>();
        field_roundtrip::<Ratio<i128>>();
        field_roundtrip::<BigRational>();
    }

    #[test]
    fn rational_strings() {
        assert_eq!(format_rational(&rat(4, 6)), "2/3");
        assert_eq!(format_rational(&rat_int(5)), "5/1");
        assert_eq!(parse_rational("2/3"), Some(rat(2, 3)));
        assert_eq!(parse_rational("-5"), Some(rat_int(-5)));
        assert_eq!(parse_rational("1/0"), None);
    }
}
