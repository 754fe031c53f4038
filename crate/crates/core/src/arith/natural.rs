use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision non-negative integer.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Natural(BigUint);

impl Natural {
    pub fn zero() -> Self {
        Natural(BigUint::zero())
    }

    pub fn one() -> Self {
        Natural(BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn gcd(&self, other: &Natural) -> Natural {
        Natural(self.0.gcd(&other.0))
    }

    /// Truncating division with remainder. `None` when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Natural) -> Option<(Natural, Natural)> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.0.div_rem(&divisor.0);
        Some((Natural(q), Natural(r)))
    }

    pub fn checked_sub(&self, other: &Natural) -> Option<Natural> {
        if self.0 >= other.0 {
            Some(Natural(&self.0 - &other.0))
        } else {
            None
        }
    }
}

impl From<u64> for Natural {
    fn from(v: u64) -> Self {
        Natural(BigUint::from(v))
    }
}

impl From<u32> for Natural {
    fn from(v: u32) -> Self {
        Natural(BigUint::from(v))
    }
}

impl FromStr for Natural {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits: String = s.chars().filter(|c| *c != '_' && *c != ',').collect();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("not a natural number: {s:?}")));
        }
        BigUint::parse_bytes(digits.as_bytes(), 10)
            .map(Natural)
            .ok_or_else(|| Error::Parse(format!("not a natural number: {s:?}")))
    }
}

impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Natural({})", self.0)
    }
}

impl Add for &Natural {
    type Output = Natural;
    fn add(self, rhs: &Natural) -> Natural {
        Natural(&self.0 + &rhs.0)
    }
}

impl Add for Natural {
    type Output = Natural;
    fn add(self, rhs: Natural) -> Natural {
        Natural(self.0 + rhs.0)
    }
}

impl Mul for &Natural {
    type Output = Natural;
    fn mul(self, rhs: &Natural) -> Natural {
        Natural(&self.0 * &rhs.0)
    }
}

impl Mul for Natural {
    type Output = Natural;
    fn mul(self, rhs: Natural) -> Natural {
        Natural(self.0 * rhs.0)
    }
}

// Big values travel as decimal strings so that no consumer truncates them.
impl Serialize for Natural {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Natural {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `base` raised to `exp` by binary exponentiation.
///
/// `0^0` is rejected rather than defined.
pub fn power(base: &Natural, exp: &Natural) -> Result<Natural> {
    if base.is_zero() && exp.is_zero() {
        return Err(Error::Domain("0^0 is undefined".into()));
    }
    let mut result = BigUint::one();
    let mut acc = base.0.clone();
    let bits = exp.0.bits();
    for i in 0..bits {
        if exp.0.bit(i) {
            result *= &acc;
        }
        if i + 1 < bits {
            acc = &acc * &acc;
        }
    }
    Ok(Natural(result))
}

/// The `n`-th successive square of `base`, i.e. `base^(2^n)`.
pub fn square_iterate(base: &Natural, n: u32) -> Natural {
    let mut v = base.0.clone();
    for _ in 0..n {
        v = &v * &v;
    }
    Natural(v)
}

const CHUNK: u64 = 10_000_000_000_000_000_000;
const CHUNK_DIGITS: usize = 19;

/// Number of base-10 digits; `digit_count(0) == 1`.
pub fn digit_count(n: &Natural) -> usize {
    let chunk = BigUint::from(CHUNK);
    let mut v = n.0.clone();
    let mut digits = 0;
    while v >= chunk {
        v /= &chunk;
        digits += CHUNK_DIGITS;
    }
    let mut last = v.to_u64().expect("below one chunk");
    loop {
        digits += 1;
        last /= 10;
        if last == 0 {
            break;
        }
    }
    digits
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(s: &str) -> Natural {
        s.parse().unwrap()
    }

    #[test]
    fn powers_from_the_number_lists() {
        assert_eq!(power(&10u64.into(), &12u64.into()).unwrap(), nat("1000000000000"));
        assert_eq!(power(&2u64.into(), &0u64.into()).unwrap(), Natural::one());
        assert_eq!(power(&2u64.into(), &32u64.into()).unwrap(), nat("4294967296"));
        assert_eq!(power(&0u64.into(), &5u64.into()).unwrap(), Natural::zero());
    }

    #[test]
    fn zero_to_the_zero_is_rejected() {
        assert!(matches!(
            power(&Natural::zero(), &Natural::zero()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn successive_squares_of_two() {
        assert_eq!(square_iterate(&2u64.into(), 5), nat("4294967296"));
        assert_eq!(square_iterate(&2u64.into(), 6), nat("18446744073709551616"));
        assert_eq!(square_iterate(&7u64.into(), 0), nat("7"));
    }

    #[test]
    fn digit_counts() {
        assert_eq!(digit_count(&Natural::zero()), 1);
        assert_eq!(digit_count(&nat("9")), 1);
        assert_eq!(digit_count(&nat("10")), 2);
        assert_eq!(digit_count(&nat("9999999999999999999")), 19);
        assert_eq!(digit_count(&nat("10000000000000000000")), 20);
        let two_96 = power(&2u64.into(), &96u64.into()).unwrap();
        assert_eq!(digit_count(&two_96), 29);
        let ten_53 = power(&10u64.into(), &53u64.into()).unwrap();
        assert_eq!(digit_count(&ten_53), 54);
    }

    #[test]
    fn parse_accepts_grouping() {
        assert_eq!(nat("18,446,744,073,709,551,616"), nat("18446744073709551616"));
        assert!("".parse::<Natural>().is_err());
        assert!("-3".parse::<Natural>().is_err());
        assert!("1e5".parse::<Natural>().is_err());
    }
}
