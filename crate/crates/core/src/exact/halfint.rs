use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A half-integer `j`, stored as the integer `2j`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };
    pub const ONE: HalfInt = HalfInt { twice: 2 };

    pub const fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub const fn from_int(n: i64) -> Self {
        HalfInt { twice: 2 * n }
    }

    #[inline]
    pub const fn twice(self) -> i64 {
        self.twice
    }

    #[inline]
    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// `2j + 1`.
    #[inline]
    pub const fn multiplicity(self) -> i64 {
        self.twice + 1
    }

    pub fn abs(self) -> Self {
        HalfInt::from_twice(self.twice.abs())
    }

    pub fn to_f64(self) -> f64 {
        self.twice as f64 / 2.0
    }

    /// The integer value, if this is an integer.
    pub fn as_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.twice / 2)
    }

    /// Magnitude values `j, j-1, ..., -j` of a spin `j`.
    pub fn projections(self) -> impl DoubleEndedIterator<Item = HalfInt> + Clone {
        let j = self.twice;
        (0..=j.max(-1)).map(move |k| HalfInt::from_twice(j - 2 * k))
    }

    /// `(-1)^{self}` for an integer `self`; `None` otherwise.
    pub fn parity_sign(self) -> Option<i64> {
        self.as_integer()
            .map(|n| if n.rem_euclid(2) == 0 { 1 } else { -1 })
    }

    /// Checks that `m` is a projection of `j`: `|m| <= j` and `j - m` integer.
    pub fn check_projection(j: HalfInt, m: HalfInt) -> Result<()> {
        if j.twice < 0 {
            return Err(Error::Domain(format!("negative angular momentum {j}")));
        }
        if m.abs() > j || !(j - m).is_integer() {
            return Err(Error::Domain(format!("m = {m} is not a projection of j = {j}")));
        }
        Ok(())
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice + rhs.twice)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice - rhs.twice)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_twice(-self.twice)
    }
}

impl From<i64> for HalfInt {
    fn from(n: i64) -> Self {
        HalfInt::from_int(n)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    /// Accepts `"3"`, `"-1"`, `"5/2"` and decimal forms such as `"2.5"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Domain(format!("`{s}` is not an integer or half-integer"));
        if let Some((num, den)) = s.split_once('/') {
            let num: i64 = num.trim().parse().map_err(|_| bad())?;
            match den.trim() {
                "1" => Ok(HalfInt::from_int(num)),
                "2" => Ok(HalfInt::from_twice(num)),
                _ => Err(bad()),
            }
        } else if let Some((whole, frac)) = s.split_once('.') {
            let negative = whole.starts_with('-');
            let whole: i64 = if whole.is_empty() || whole == "-" {
                0
            } else {
                whole.parse().map_err(|_| bad())?
            };
            let frac = frac.trim_end_matches('0');
            let half = match frac {
                "" => 0,
                "5" => 1,
                _ => return Err(bad()),
            };
            let twice = 2 * whole.abs() + half;
            Ok(HalfInt::from_twice(if negative { -twice } else { twice }))
        } else {
            s.parse::<i64>().map(HalfInt::from_int).map_err(|_| bad())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!("3".parse::<HalfInt>().unwrap(), HalfInt::from_twice(6));
        assert_eq!("5/2".parse::<HalfInt>().unwrap(), HalfInt::from_twice(5));
        assert_eq!("2.5".parse::<HalfInt>().unwrap(), HalfInt::from_twice(5));
        assert_eq!("-0.5".parse::<HalfInt>().unwrap(), HalfInt::from_twice(-1));
        assert_eq!("4/1".parse::<HalfInt>().unwrap(), HalfInt::from_int(4));
        assert!("1/3".parse::<HalfInt>().is_err());
        assert!("0.25".parse::<HalfInt>().is_err());
        assert!("x".parse::<HalfInt>().is_err());
    }

    #[test]
    fn display_round_trip() {
        for t in -7..=7 {
            let h = HalfInt::from_twice(t);
            assert_eq!(h.to_string().parse::<HalfInt>().unwrap(), h);
        }
    }

    #[test]
    fn integer_iff_twice_even() {
        assert!(HalfInt::from_twice(4).is_integer());
        assert!(!HalfInt::from_twice(3).is_integer());
    }

    #[test]
    fn projections_cover_range() {
        let m: Vec<_> = HalfInt::from_twice(3).projections().map(|m| m.twice()).collect();
        assert_eq!(m, vec![3, 1, -1, -3]);
        assert_eq!(HalfInt::ZERO.projections().count(), 1);
    }

    #[test]
    fn projection_check() {
        let j = HalfInt::ONE;
        assert!(HalfInt::check_projection(j, HalfInt::ZERO).is_ok());
        assert!(HalfInt::check_projection(j, HalfInt::HALF).is_err());
        assert!(HalfInt::check_projection(j, HalfInt::from_int(2)).is_err());
    }
}
