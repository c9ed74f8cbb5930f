//! Rigorous fixed-point interval evaluation of `cos(2πk/n)`.
//!
//! Every quantity is an interval `[lo, hi] · 2^-w` with outward rounding, so the
//! enclosures are certified regardless of the working precision `w`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug)]
pub(crate) struct Fx {
    pub(crate) lo: BigInt,
    pub(crate) hi: BigInt,
}

fn shr_floor(x: &BigInt, w: u32) -> BigInt {
    x.div_floor(&(BigInt::one() << w))
}

fn shr_ceil(x: &BigInt, w: u32) -> BigInt {
    x.div_ceil(&(BigInt::one() << w))
}

impl Fx {
    fn exact(x: BigInt) -> Fx {
        Fx { lo: x.clone(), hi: x }
    }

    fn add(&self, o: &Fx) -> Fx {
        Fx { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    fn sub(&self, o: &Fx) -> Fx {
        Fx { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo }
    }

    fn scale(&self, k: i64) -> Fx {
        let (a, b) = (&self.lo * k, &self.hi * k);
        if k >= 0 {
            Fx { lo: a, hi: b }
        } else {
            Fx { lo: b, hi: a }
        }
    }

    fn div_int(&self, k: &BigInt) -> Fx {
        debug_assert!(k.is_positive());
        Fx { lo: self.lo.div_floor(k), hi: self.hi.div_ceil(k) }
    }

    fn mul(&self, o: &Fx, w: u32) -> Fx {
        let p = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let min = p.iter().min().expect("nonempty");
        let max = p.iter().max().expect("nonempty");
        Fx { lo: shr_floor(min, w), hi: shr_ceil(max, w) }
    }

    fn widen(&self, e: &BigInt) -> Fx {
        Fx { lo: &self.lo - e, hi: &self.hi + e }
    }

    fn magnitude(&self) -> BigInt {
        self.lo.abs().max(self.hi.abs())
    }
}

/// Enclosure of `atan(1/x)` for an integer `x ≥ 2`.
fn atan_inv(x: u64, w: u32) -> Fx {
    let one = BigInt::one() << w;
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut pow = x.clone();
    let mut acc = Fx::exact(BigInt::zero());
    let mut j: u64 = 0;
    loop {
        let den = &pow * BigInt::from(2 * j + 1);
        let term = Fx { lo: one.div_floor(&den), hi: one.div_ceil(&den) };
        acc = if j.is_multiple_of(2) { acc.add(&term) } else { acc.sub(&term) };
        if den > (&one << 2) {
            // Alternating series with decreasing terms: the tail is below one unit.
            return acc.widen(&BigInt::one());
        }
        pow *= &x2;
        j += 1;
    }
}

fn pi(w: u32) -> Fx {
    atan_inv(5, w).scale(16).sub(&atan_inv(239, w).scale(4))
}

/// Enclosure of `cos(2πk/n)` at `w` fractional bits.
pub(crate) fn cos_turn(k: u64, n: u64, w: u32) -> Fx {
    let one = BigInt::one() << w;
    let mut k = k % n;
    if 2 * k > n {
        k = n - k;
    }
    if k == 0 {
        return Fx::exact(one);
    }
    // θ ∈ (0, π].
    let theta = pi(w).scale(2 * k as i64).div_int(&BigInt::from(n));
    let theta2 = theta.mul(&theta, w);
    let mut term = Fx::exact(one.clone());
    let mut acc = term.clone();
    let mut j: u64 = 1;
    loop {
        term = term.mul(&theta2, w).div_int(&BigInt::from((2 * j - 1) * (2 * j)));
        acc = if j % 2 == 1 { acc.sub(&term) } else { acc.add(&term) };
        j += 1;
        let next = term.mul(&theta2, w).div_int(&BigInt::from((2 * j - 1) * (2 * j)));
        if next.magnitude() <= BigInt::one() && j > 2 {
            // Lagrange remainder is bounded by the next term's magnitude.
            return acc.widen(&(next.magnitude() + BigInt::one()));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn to_f64(x: &BigInt, w: u32) -> f64 {
        let s = x.to_string();
        s.parse::<f64>().unwrap() / 2f64.powi(w as i32)
    }

    #[test]
    fn pi_enclosure_is_tight() {
        let w = 200;
        let p = pi(w);
        assert!(&p.hi - &p.lo < BigInt::from(1 << 12));
        assert!((to_f64(&p.lo, w) - std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn cosine_enclosures_contain_float_values() {
        for n in 1..40u64 {
            for k in 0..n {
                let c = cos_turn(k, n, 96);
                let f = (std::f64::consts::TAU * k as f64 / n as f64).cos();
                assert!(to_f64(&c.lo, 96) <= f + 1e-12 && f - 1e-12 <= to_f64(&c.hi, 96), "{k}/{n}");
                assert!(&c.hi - &c.lo < BigInt::from(1u64 << 20));
            }
        }
    }
}
