use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::angle::Angle;
use super::cyclotomic::{field, Cyclo};
use super::interval::cos_turn;
use super::rational::{format_rational, serde_rational_vec, Rational};
use crate::error::{Error, Result};

/// Exact real number in a cyclotomic field.
///
/// Values are kept at their minimal conductor, so two values are equal exactly
/// when their conductors and coordinates agree.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "AlgRealRepr", into = "AlgRealRepr")]
pub struct AlgReal(Cyclo);

#[derive(Clone, Serialize, Deserialize)]
struct AlgRealRepr {
    conductor: u64,
    #[serde(with = "serde_rational_vec")]
    coords: Vec<Rational>,
}

impl TryFrom<AlgRealRepr> for AlgReal {
    type Error = Error;
    fn try_from(r: AlgRealRepr) -> Result<AlgReal> {
        AlgReal::from_parts(r.conductor, r.coords)
    }
}

impl From<AlgReal> for AlgRealRepr {
    fn from(x: AlgReal) -> AlgRealRepr {
        AlgRealRepr { conductor: x.0.n, coords: x.0.coords }
    }
}

impl AlgReal {
    /// Validates raw coordinates in ℚ(ζ_conductor) and normalizes them.
    pub fn from_parts(conductor: u64, coords: Vec<Rational>) -> Result<AlgReal> {
        if conductor == 0 {
            return Err(Error::InvalidData("conductor must be positive".into()));
        }
        let deg = field(conductor).degree();
        if coords.len() != deg {
            return Err(Error::InvalidData(format!(
                "conductor {conductor} needs {deg} coordinates, got {}",
                coords.len()
            )));
        }
        let c = Cyclo { n: conductor, coords };
        if c.conj() != c {
            return Err(Error::NotReal(format!("conductor {conductor} element is not conjugation-fixed")));
        }
        Ok(AlgReal(c.normalize()))
    }

    pub(crate) fn from_cyclo(c: Cyclo) -> AlgReal {
        debug_assert!(c.conj() == c, "non-real cyclotomic value");
        AlgReal(c.normalize())
    }

    pub fn zero() -> AlgReal {
        AlgReal::from(Rational::zero())
    }

    pub fn one() -> AlgReal {
        AlgReal::from(Rational::one())
    }

    pub fn conductor(&self) -> u64 {
        self.0.n
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0.coords
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// The rational value, or `NotRational` if the number is irrational.
    pub fn as_rational(&self) -> Result<Rational> {
        if self.0.n == 1 {
            Ok(self.0.coords[0].clone())
        } else {
            Err(Error::NotRational(format!("{self} has conductor {}", self.0.n)))
        }
    }

    pub fn scale(&self, r: &Rational) -> AlgReal {
        AlgReal(self.0.scale(r).normalize())
    }

    /// Rational bounds `lo ≤ x ≤ hi` from a `bits`-bit fixed-point evaluation.
    pub fn enclose(&self, bits: u32) -> (Rational, Rational) {
        let denom = BigInt::one() << bits;
        let mut lo = Rational::zero();
        let mut hi = Rational::zero();
        for (k, c) in self.0.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // The imaginary parts cancel because the value is real.
            let cs = cos_turn(k as u64, self.0.n, bits);
            let a = c * Rational::new(cs.lo, denom.clone());
            let b = c * Rational::new(cs.hi, denom.clone());
            if c.is_positive() {
                lo += a;
                hi += b;
            } else {
                lo += b;
                hi += a;
            }
        }
        (lo, hi)
    }

    /// Exact sign: zero by coordinates, nonzero by interval refinement.
    pub fn sign(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let mut bits = 64;
        loop {
            let (lo, hi) = self.enclose(bits);
            if lo.is_positive() {
                return 1;
            }
            if hi.is_negative() {
                return -1;
            }
            bits *= 2;
        }
    }

    pub fn to_f64(&self) -> f64 {
        let (lo, hi) = self.enclose(80);
        let mid = (lo + hi) / Rational::from_integer(2.into());
        rational_to_f64(&mid)
    }
}

pub(crate) fn rational_to_f64(r: &Rational) -> f64 {
    // Scale by a power of two so the quotient keeps full double precision.
    let (n, d) = (r.numer(), r.denom());
    let shift = d.bits() as i64 - n.bits() as i64 + 64;
    let scaled = if shift >= 0 { (n << shift as u64) / d } else { n / (d << (-shift) as u64) };
    let f: f64 = scaled.to_string().parse().unwrap_or(f64::NAN);
    f * 2f64.powi(-shift as i32)
}

impl From<Rational> for AlgReal {
    fn from(r: Rational) -> AlgReal {
        AlgReal(Cyclo::from_rational(r))
    }
}

impl From<i64> for AlgReal {
    fn from(n: i64) -> AlgReal {
        AlgReal::from(Rational::from_integer(n.into()))
    }
}

impl fmt::Debug for AlgReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgReal({self})")
    }
}

impl fmt::Display for AlgReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.n == 1 {
            return write!(f, "{}", format_rational(&self.0.coords[0]));
        }
        let terms: Vec<String> = self
            .0
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("({})z^{k}", format_rational(c)))
            .collect();
        write!(f, "{} [z = exp(2pi i/{})]", terms.join(" + "), self.0.n)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&AlgReal> for &AlgReal {
            type Output = AlgReal;
            fn $m(self, rhs: &AlgReal) -> AlgReal {
                let f: fn(&Cyclo, &Cyclo) -> Cyclo = $body;
                AlgReal(f(&self.0, &rhs.0).normalize())
            }
        }
        impl $tr for AlgReal {
            type Output = AlgReal;
            fn $m(self, rhs: AlgReal) -> AlgReal {
                (&self).$m(&rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| a.add(b));
binop!(Sub, sub, |a, b| a.add(&b.neg()));
binop!(Mul, mul, |a, b| a.mul(b));

impl Neg for &AlgReal {
    type Output = AlgReal;
    fn neg(self) -> AlgReal {
        AlgReal(self.0.neg())
    }
}

impl Neg for AlgReal {
    type Output = AlgReal;
    fn neg(self) -> AlgReal {
        -&self
    }
}

impl std::iter::Sum for AlgReal {
    fn sum<I: Iterator<Item = AlgReal>>(iter: I) -> AlgReal {
        iter.fold(AlgReal::zero(), |a, b| a + b)
    }
}

/// `1/(ω − 1)` for `ω = ζ_q^p` primitive: `(1/q) Σ_k k ω^k`.
fn inv_root_minus_one(p: u64, q: u64) -> Cyclo {
    let mut exps = vec![Rational::zero(); q as usize];
    for k in 1..q {
        exps[((k * p) % q) as usize] += Rational::new(BigInt::from(k), BigInt::from(q));
    }
    Cyclo::from_exponents(q, &exps)
}

/// `1/sin²(ψ/2)`, exactly.
pub fn cosec2_half(psi: &Angle) -> Result<AlgReal> {
    if psi.is_zero() {
        return Err(Error::ZeroAngle);
    }
    let (p, q) = (psi.num(), psi.den());
    let omega = Cyclo::root_power(q, p);
    let u = inv_root_minus_one(p, q);
    // 1/sin²(ψ/2) = −4ω/(ω − 1)².
    let v = omega.mul(&u).mul(&u).scale(&Rational::from_integer((-4).into()));
    Ok(AlgReal::from_cyclo(v))
}

/// `cot(φ/2)`, exactly.
pub fn cot_half(phi: &Angle) -> Result<AlgReal> {
    if phi.is_zero() {
        return Err(Error::PoleAngle);
    }
    let (p, q) = (phi.num(), phi.den());
    let omega = Cyclo::root_power(q, p);
    let u = inv_root_minus_one(p, q);
    let n = q.lcm(&4);
    // cot(φ/2) = i(ω + 1)/(ω − 1).
    let i = Cyclo::root_power(n, n / 4);
    let v = omega.add(&Cyclo::from_rational(Rational::one())).mul(&u).mul(&i);
    Ok(AlgReal::from_cyclo(v))
}

pub fn as_rational(x: &AlgReal) -> Result<Rational> {
    x.as_rational()
}

pub fn sign_of(x: &AlgReal) -> i8 {
    x.sign()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{integer, rational};

    fn ang(p: i64, q: i64) -> Angle {
        Angle::new(p, q).unwrap()
    }

    #[test]
    fn cosecant_examples() {
        assert_eq!(cosec2_half(&ang(1, 2)).unwrap().as_rational().unwrap(), integer(1));
        assert_eq!(cosec2_half(&ang(1, 4)).unwrap().as_rational().unwrap(), integer(2));
        assert_eq!(cosec2_half(&ang(1, 3)).unwrap().as_rational().unwrap(), rational(4, 3));
        assert_eq!(cosec2_half(&Angle::zero()), Err(Error::ZeroAngle));
    }

    #[test]
    fn cotangent_examples() {
        assert!(cot_half(&ang(1, 2)).unwrap().is_zero());
        assert_eq!(cot_half(&ang(1, 4)).unwrap().as_rational().unwrap(), integer(1));
        let c = cot_half(&ang(1, 3)).unwrap();
        assert!(matches!(c.as_rational(), Err(Error::NotRational(_))));
        assert_eq!((&c * &c).as_rational().unwrap(), rational(1, 3));
        assert_eq!(c.sign(), 1);
        assert_eq!(cot_half(&ang(2, 3)).unwrap().sign(), -1);
        assert_eq!(cot_half(&Angle::zero()), Err(Error::PoleAngle));
    }

    #[test]
    fn signs() {
        assert_eq!(AlgReal::zero().sign(), 0);
        let x = AlgReal::one() - cosec2_half(&ang(1, 3)).unwrap();
        assert_eq!(x.as_rational().unwrap(), rational(-1, 3));
        assert_eq!(x.sign(), -1);
        let y = cot_half(&ang(1, 5)).unwrap() - cot_half(&ang(1, 7)).unwrap();
        assert_eq!(y.sign(), -1);
    }

    #[test]
    fn cosec_square_sum_five() {
        let s: AlgReal = (1..5).map(|h| cosec2_half(&ang(h, 5)).unwrap()).sum();
        assert_eq!(s.as_rational().unwrap(), integer(8));
    }

    #[test]
    fn json_round_trip_and_reality_check() {
        let c = cot_half(&ang(1, 3)).unwrap();
        let s = serde_json::to_string(&c).unwrap();
        let back: AlgReal = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
        // ζ_3 alone is not real.
        let err = serde_json::from_str::<AlgReal>(r#"{"conductor":3,"coords":["0","1"]}"#);
        assert!(err.is_err());
        // 4/3 written at conductor 12 normalizes to the rational.
        let x = AlgReal::from_parts(12, vec![rational(4, 3), integer(0), integer(0), integer(0)]).unwrap();
        assert_eq!(x.as_rational().unwrap(), rational(4, 3));
        assert_eq!(x.conductor(), 1);
    }

    #[test]
    fn float_conversion() {
        let c = cot_half(&ang(1, 3)).unwrap();
        assert!((c.to_f64() - 1.0 / 3f64.sqrt()).abs() < 1e-15);
    }
}
