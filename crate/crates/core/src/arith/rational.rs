use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::natural::{power, Natural};
use crate::error::{Error, Result};

/// Exact signed fraction, always kept in lowest terms with a positive
/// denominator. Zero is never negative.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    negative: bool,
    numer: Natural,
    denom: Natural,
}

/// Non-negative rational split into a whole part and a proper fraction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MixedNumber {
    pub whole: Natural,
    pub frac: Rational,
}

/// Builds the reduced form of `numer/denom`.
pub fn reduce(negative: bool, numer: Natural, denom: Natural) -> Result<Rational> {
    if denom.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let g = numer.gcd(&denom);
    let (numer, denom) = if g.is_one() || numer.is_zero() {
        if numer.is_zero() {
            (Natural::zero(), Natural::one())
        } else {
            (numer, denom)
        }
    } else {
        (numer.div_rem(&g).unwrap().0, denom.div_rem(&g).unwrap().0)
    };
    Ok(Rational {
        negative: negative && !numer.is_zero(),
        numer,
        denom,
    })
}

impl Rational {
    pub fn new(numer: impl Into<Natural>, denom: impl Into<Natural>) -> Result<Self> {
        reduce(false, numer.into(), denom.into())
    }

    pub fn zero() -> Self {
        Rational::from_natural(Natural::zero())
    }

    pub fn one() -> Self {
        Rational::from_natural(Natural::one())
    }

    pub fn from_natural(n: Natural) -> Self {
        Rational {
            negative: false,
            numer: n,
            denom: Natural::one(),
        }
    }

    pub fn from_u64(n: u64) -> Self {
        Rational::from_natural(n.into())
    }

    pub fn numer(&self) -> &Natural {
        &self.numer
    }

    pub fn denom(&self) -> &Natural {
        &self.denom
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.denom.is_one()
    }

    pub fn abs(&self) -> Rational {
        Rational {
            negative: false,
            ..self.clone()
        }
    }

    pub fn recip(&self) -> Result<Rational> {
        reduce(self.negative, self.denom.clone(), self.numer.clone())
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        Ok(self * &rhs.recip()?)
    }

    /// Whole part and proper fraction of a non-negative value.
    pub fn to_mixed(&self) -> Result<MixedNumber> {
        if self.negative {
            return Err(Error::Domain(format!(
                "mixed form needs a non-negative value, got {self}"
            )));
        }
        let (whole, rem) = self.numer.div_rem(&self.denom).expect("denominator is nonzero");
        let frac = reduce(false, rem, self.denom.clone())?;
        Ok(MixedNumber { whole, frac })
    }

    /// Decimal text rounded half-up (on the magnitude) to `places` digits.
    pub fn render_decimal(&self, places: usize) -> String {
        let scale = power(&Natural::from(10u64), &Natural::from(places as u64))
            .expect("base 10 is nonzero");
        // floor((2·n·10^p + d) / (2·d))
        let two = Natural::from(2u64);
        let num = &(&(&two * &self.numer) * &scale) + &self.denom;
        let den = &two * &self.denom;
        let (scaled, _) = num.div_rem(&den).expect("denominator is nonzero");
        let (int_part, frac_part) = scaled.div_rem(&scale).expect("scale is nonzero");

        let mut out = String::new();
        if self.negative && !scaled.is_zero() {
            out.push('-');
        }
        out.push_str(&int_part.to_string());
        if places > 0 {
            let digits = frac_part.to_string();
            out.push('.');
            out.extend(std::iter::repeat_n('0', places - digits.len()));
            out.push_str(&digits);
        }
        out
    }

    fn signed_cmp_key(&self) -> i8 {
        if self.is_zero() {
            0
        } else if self.negative {
            -1
        } else {
            1
        }
    }
}

/// Solves `a/b = c/d` for `a`, i.e. returns `b·c/d`.
pub fn rule_of_three(b: &Rational, c: &Rational, d: &Rational) -> Result<Rational> {
    if d.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    (b * c).checked_div(d)
}

impl MixedNumber {
    pub fn to_rational(&self) -> Rational {
        &Rational::from_natural(self.whole.clone()) + &self.frac
    }
}

impl fmt::Display for MixedNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.frac.is_zero() {
            write!(f, "{}", self.whole)
        } else if self.whole.is_zero() {
            write!(f, "{}", self.frac)
        } else {
            write!(f, "{} {}", self.whole, self.frac)
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        if self.denom.is_one() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rational({self})")
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `n`, `n/d`, with an optional leading `-`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (n, d) = match body.split_once('/') {
            Some((n, d)) => (n.trim().parse()?, d.trim().parse()?),
            None => (body.parse()?, Natural::one()),
        };
        reduce(negative, n, d)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (self.signed_cmp_key(), other.signed_cmp_key());
        if a != b {
            return a.cmp(&b);
        }
        let lhs = &self.numer * &other.denom;
        let rhs = &other.numer * &self.denom;
        if a < 0 {
            rhs.cmp(&lhs)
        } else {
            lhs.cmp(&rhs)
        }
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            negative: !self.negative && !self.is_zero(),
            numer: self.numer.clone(),
            denom: self.denom.clone(),
        }
    }
}

impl Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        let l = &self.numer * &rhs.denom;
        let r = &rhs.numer * &self.denom;
        let denom = &self.denom * &rhs.denom;
        let (negative, numer) = if self.negative == rhs.negative {
            (self.negative, l + r)
        } else {
            match l.checked_sub(&r) {
                Some(diff) => (self.negative, diff),
                None => (rhs.negative, r.checked_sub(&l).expect("r > l")),
            }
        };
        reduce(negative, numer, denom).expect("product of nonzero denominators")
    }
}

impl Sub for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        self + &(-rhs)
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        reduce(
            self.negative != rhs.negative,
            &self.numer * &rhs.numer,
            &self.denom * &rhs.denom,
        )
        .expect("product of nonzero denominators")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    /// Greatest common divisor by trial division from the smaller value down.
    fn trial_gcd(a: u64, b: u64) -> u64 {
        let lim = a.min(b);
        (1..=lim).rev().find(|k| a % k == 0 && b % k == 0).unwrap_or(1)
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(Rational::new(6u64, 4u64).unwrap(), q("3/2"));
        assert_eq!(trial_gcd(1860, 1830), 30);
        assert_eq!(Rational::new(1860u64, 1830u64).unwrap(), q("62/61"));
        assert_eq!(q("62/61").numer().to_u64(), Some(1860 / 30));
        assert_eq!(trial_gcd(1809, 124), 1);
        let r = Rational::new(1809u64, 124u64).unwrap();
        assert_eq!(r.numer().to_u64(), Some(1809));
        assert_eq!(r.denom().to_u64(), Some(124));
    }

    #[test]
    fn zero_denominator_is_an_error() {
        assert_eq!(Rational::new(1u64, 0u64), Err(Error::ZeroDenominator));
        assert_eq!("3/0".parse::<Rational>(), Err(Error::ZeroDenominator));
        assert_eq!(Rational::zero().recip(), Err(Error::ZeroDenominator));
    }

    #[test]
    fn add_and_multiply_examples() {
        assert_eq!(&q("1/2") + &q("1/2"), Rational::one());
        // 1809·124 + 1809·124 over 124·124
        assert_eq!(&q("1809/124") + &q("1809/124"), q("1809/62"));
        assert_eq!(&q("61/62") * &q("24"), q("732/31"));
    }

    #[test]
    fn sign_handling() {
        assert_eq!(&q("1/3") - &q("1/2"), q("-1/6"));
        assert_eq!(&q("-1/3") * &q("-3"), Rational::one());
        assert_eq!(&q("-1/2") + &q("1/2"), Rational::zero());
        assert!(!(&q("-1/2") + &q("1/2")).is_negative());
        assert!(q("-1/2") < q("-1/3"));
        assert!(q("-1/2") < Rational::zero());
        assert_eq!(q("-0"), Rational::zero());
    }

    #[test]
    fn mixed_forms() {
        let m = q("1809/124").to_mixed().unwrap();
        assert_eq!(m.whole, Natural::from(14u64));
        assert_eq!(m.frac, q("73/124"));
        assert_eq!(m.to_string(), "14 73/124");

        let m = q("5").to_mixed().unwrap();
        assert_eq!(m.whole, Natural::from(5u64));
        assert!(m.frac.is_zero());
        assert_eq!(m.to_string(), "5");

        // 1647 = 13·122 + 61
        let m = q("1647/122").to_mixed().unwrap();
        assert_eq!((m.whole, m.frac), (Natural::from(13u64), q("1/2")));

        assert!(q("-1/2").to_mixed().is_err());
    }

    #[test]
    fn rule_of_three_examples() {
        assert_eq!(rule_of_three(&q("6"), &q("2"), &q("3")).unwrap(), q("4"));
        assert_eq!(rule_of_three(&q("1"), &q("7/9"), &q("1")).unwrap(), q("7/9"));
        assert_eq!(rule_of_three(&q("1830"), &q("62"), &q("124")).unwrap(), q("915"));
        assert_eq!(
            rule_of_three(&q("1"), &q("1"), &q("0")),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(q("1809/124").render_decimal(5), "14.58871");
        assert_eq!(q("1/2").render_decimal(1), "0.5");
        assert_eq!(q("732/31").render_decimal(2), "23.61");
        assert_eq!(q("16/5").render_decimal(1), "3.2");
        assert_eq!(q("1/2").render_decimal(0), "1");
        assert_eq!(q("1/200").render_decimal(2), "0.01");
        assert_eq!(q("1/1000").render_decimal(2), "0.00");
        assert_eq!(q("-1/2").render_decimal(1), "-0.5");
        assert_eq!(q("-1/1000").render_decimal(2), "0.00");
        assert_eq!(q("999/1000").render_decimal(2), "1.00");
    }
}
