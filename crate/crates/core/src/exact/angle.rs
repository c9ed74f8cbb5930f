use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The angle `2π·num/den`, canonicalized so that `0 ≤ num < den` and `gcd(num, den) = 1`.
///
/// The zero angle is stored as `0/1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawAngle")]
pub struct Angle {
    num: u64,
    den: u64,
}

#[derive(Deserialize)]
struct RawAngle {
    num: i64,
    den: i64,
}

impl TryFrom<RawAngle> for Angle {
    type Error = Error;
    fn try_from(raw: RawAngle) -> Result<Angle> {
        Angle::new(raw.num, raw.den)
    }
}

impl Angle {
    pub fn new(num: i64, den: i64) -> Result<Angle> {
        if den <= 0 {
            return Err(Error::InvalidAngle(format!("denominator must be positive, got {den}")));
        }
        let p = num.rem_euclid(den) as u64;
        let q = den as u64;
        let g = p.gcd(&q);
        Ok(Angle { num: p / g, den: q / g })
    }

    pub const fn zero() -> Angle {
        Angle { num: 0, den: 1 }
    }

    /// The half turn `π`.
    pub const fn half_turn() -> Angle {
        Angle { num: 1, den: 2 }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// `2π − θ`.
    pub fn negate(&self) -> Angle {
        if self.num == 0 {
            *self
        } else {
            Angle { num: self.den - self.num, den: self.den }
        }
    }

    /// Whether the angle lies in `[0, π]`.
    pub fn is_at_most_half_turn(&self) -> bool {
        2 * self.num <= self.den
    }

    /// Representative of `±θ` in `[0, π]`.
    pub fn fold_to_half_turn(&self) -> Angle {
        if self.is_at_most_half_turn() {
            *self
        } else {
            self.negate()
        }
    }

    pub fn radians(&self) -> f64 {
        std::f64::consts::TAU * self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "2pi*{}/{}", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert_eq!(Angle::new(2, 4).unwrap(), Angle::half_turn());
        assert_eq!(Angle::new(-1, 3).unwrap(), Angle::new(2, 3).unwrap());
        assert_eq!(Angle::new(5, 5).unwrap(), Angle::zero());
        assert!(Angle::new(1, 0).is_err());
        assert_eq!(Angle::new(2, 3).unwrap().fold_to_half_turn(), Angle::new(1, 3).unwrap());
    }

    #[test]
    fn json_form_is_canonicalized() {
        let a: Angle = serde_json::from_str(r#"{"num": 3, "den": 6}"#).unwrap();
        assert_eq!(a, Angle::half_turn());
        assert_eq!(serde_json::to_string(&a).unwrap(), r#"{"num":1,"den":2}"#);
        assert!(serde_json::from_str::<Angle>(r#"{"num": 1, "den": -2}"#).is_err());
    }
}
