//! Arithmetic in ℚ(ζ_N) = ℚ[x]/Φ_N(x), embedded by `x ↦ exp(2πi/N)`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::Rational;
use crate::linalg::{rational_solve, RatMatrix};

pub(crate) struct Field {
    /// `powers[k]` holds the power-basis coordinates of `ζ^k` for `0 ≤ k < n`.
    powers: Vec<Vec<BigInt>>,
}

impl Field {
    pub(crate) fn degree(&self) -> usize {
        self.powers.first().map_or(1, Vec::len)
    }

    fn build(n: u64) -> Field {
        let phi = cyclotomic_poly(n);
        let deg = phi.len() - 1;
        let mut powers = Vec::with_capacity(n as usize);
        for k in 0..n as usize {
            if k < deg {
                let mut v = vec![BigInt::zero(); deg];
                v[k] = BigInt::one();
                powers.push(v);
            } else {
                let prev: &Vec<BigInt> = &powers[k - 1];
                let top = prev[deg - 1].clone();
                let mut v = vec![BigInt::zero(); deg];
                for i in (1..deg).rev() {
                    v[i] = prev[i - 1].clone();
                }
                for (i, c) in v.iter_mut().enumerate() {
                    *c -= &top * &phi[i];
                }
                powers.push(v);
            }
        }
        Field { powers }
    }

    /// Power-basis coordinates of `Σ e_k ζ^k` (exponents taken mod `n`).
    fn reduce(&self, exps: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.degree()];
        for (k, e) in exps.iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&self.powers[k]) {
                if !p.is_zero() {
                    *o += e * Rational::from_integer(p.clone());
                }
            }
        }
        out
    }
}

fn field_cache() -> &'static RwLock<HashMap<u64, Arc<Field>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<Field>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

pub(crate) fn field(n: u64) -> Arc<Field> {
    assert!(n >= 1);
    if let Some(f) = field_cache().read().expect("field cache poisoned").get(&n) {
        return f.clone();
    }
    let built = Arc::new(Field::build(n));
    field_cache().write().expect("field cache poisoned").entry(n).or_insert(built).clone()
}

/// Coefficients of Φ_n, lowest degree first, from `Φ_n = Π_{d|n} (x^d − 1)^{μ(n/d)}`.
pub(crate) fn cyclotomic_poly(n: u64) -> Vec<BigInt> {
    let binomial = |d: u64| {
        let mut p = vec![BigInt::zero(); d as usize + 1];
        p[0] = -BigInt::one();
        p[d as usize] = BigInt::one();
        p
    };
    let divisors: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    let mut p = vec![BigInt::one()];
    for &d in &divisors {
        if mobius(n / d) == 1 {
            p = mul_poly(&p, &binomial(d));
        }
    }
    for &d in &divisors {
        if mobius(n / d) == -1 {
            p = div_monic(&p, &binomial(d));
        }
    }
    // Each factor x^d − 1 was used up to sign; Φ_n is monic.
    if p[p.len() - 1] < BigInt::zero() {
        p.iter_mut().for_each(|c| *c = -c.clone());
    }
    p
}

fn mobius(n: u64) -> i32 {
    let mut m = n;
    let mut sign = 1;
    for p in prime_factors(n) {
        m /= p;
        if m.is_multiple_of(p) {
            return 0;
        }
        sign = -sign;
    }
    sign
}

fn mul_poly(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let nd = num.len() - 1;
    let mut q = vec![BigInt::zero(); nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = r[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, dc) in den.iter().enumerate() {
            r[k + i] -= &c * dc;
        }
        q[k] = c;
    }
    debug_assert!(r.iter().all(Zero::is_zero));
    q
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Element of ℚ(ζ_n) in power-basis coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Cyclo {
    pub(crate) n: u64,
    pub(crate) coords: Vec<Rational>,
}

impl Cyclo {
    pub(crate) fn from_rational(r: Rational) -> Cyclo {
        Cyclo { n: 1, coords: vec![r] }
    }

    /// `Σ e_k ζ_n^k` for exponent-indexed coefficients.
    pub(crate) fn from_exponents(n: u64, exps: &[Rational]) -> Cyclo {
        let mut full = vec![Rational::zero(); n as usize];
        for (k, e) in exps.iter().enumerate() {
            full[k % n as usize] += e;
        }
        Cyclo { n, coords: field(n).reduce(&full) }
    }

    /// `ζ_n^k`.
    pub(crate) fn root_power(n: u64, k: u64) -> Cyclo {
        let mut exps = vec![Rational::zero(); n as usize];
        exps[(k % n) as usize] = Rational::one();
        Cyclo { n, coords: field(n).reduce(&exps) }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Re-expresses the element in ℚ(ζ_n2) for a multiple `n2` of `n`.
    pub(crate) fn lift(&self, n2: u64) -> Cyclo {
        if n2 == self.n {
            return self.clone();
        }
        debug_assert_eq!(n2 % self.n, 0);
        let step = (n2 / self.n) as usize;
        let mut exps = vec![Rational::zero(); n2 as usize];
        for (k, c) in self.coords.iter().enumerate() {
            exps[k * step] = c.clone();
        }
        Cyclo { n: n2, coords: field(n2).reduce(&exps) }
    }

    fn common(a: &Cyclo, b: &Cyclo) -> (Cyclo, Cyclo) {
        let n = a.n.lcm(&b.n);
        (a.lift(n), b.lift(n))
    }

    pub(crate) fn add(&self, other: &Cyclo) -> Cyclo {
        let (a, b) = Cyclo::common(self, other);
        let coords = a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect();
        Cyclo { n: a.n, coords }
    }

    pub(crate) fn neg(&self) -> Cyclo {
        Cyclo { n: self.n, coords: self.coords.iter().map(|x| -x).collect() }
    }

    pub(crate) fn scale(&self, r: &Rational) -> Cyclo {
        Cyclo { n: self.n, coords: self.coords.iter().map(|x| x * r).collect() }
    }

    pub(crate) fn mul(&self, other: &Cyclo) -> Cyclo {
        let (a, b) = Cyclo::common(self, other);
        let n = a.n as usize;
        let mut exps = vec![Rational::zero(); n];
        for (i, x) in a.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                if !y.is_zero() {
                    exps[(i + j) % n] += x * y;
                }
            }
        }
        Cyclo { n: a.n, coords: field(a.n).reduce(&exps) }
    }

    /// Image under the automorphism `ζ ↦ ζ^a`, `gcd(a, n) = 1`.
    pub(crate) fn galois(&self, a: u64) -> Cyclo {
        let n = self.n as usize;
        let mut exps = vec![Rational::zero(); n];
        for (k, c) in self.coords.iter().enumerate() {
            exps[(k * a as usize) % n] = c.clone();
        }
        Cyclo { n: self.n, coords: field(self.n).reduce(&exps) }
    }

    pub(crate) fn conj(&self) -> Cyclo {
        if self.n <= 2 {
            self.clone()
        } else {
            self.galois(self.n - 1)
        }
    }

    /// Moves the element to the smallest cyclotomic field containing it.
    pub(crate) fn normalize(self) -> Cyclo {
        if self.is_zero() {
            return Cyclo::from_rational(Rational::zero());
        }
        let mut cur = self;
        'outer: loop {
            for p in prime_factors(cur.n) {
                if let Some(down) = cur.descend(cur.n / p) {
                    cur = down;
                    continue 'outer;
                }
            }
            return cur;
        }
    }

    /// The same element in ℚ(ζ_m), if it lies there (`m | n`).
    fn descend(&self, m: u64) -> Option<Cyclo> {
        let n = self.n;
        let fixed = (2..n)
            .filter(|a| a % m == 1 % m && a.gcd(&n) == 1)
            .all(|a| self.galois(a) == *self);
        if !fixed {
            return None;
        }
        let fld = field(n);
        let sub_deg = field(m).degree();
        let step = (n / m) as usize;
        let basis = RatMatrix::from_fn(fld.degree(), sub_deg, |i, j| {
            Rational::from_integer(fld.powers[j * step][i].clone())
        });
        let y = rational_solve(&basis, &self.coords)?;
        Some(Cyclo { n: m, coords: y })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::integer;

    #[test]
    fn small_cyclotomic_polynomials() {
        let to_i64 = |v: Vec<BigInt>| v.into_iter().map(|x| i64::try_from(x).unwrap()).collect::<Vec<_>>();
        assert_eq!(to_i64(cyclotomic_poly(1)), vec![-1, 1]);
        assert_eq!(to_i64(cyclotomic_poly(4)), vec![1, 0, 1]);
        assert_eq!(to_i64(cyclotomic_poly(6)), vec![1, -1, 1]);
        assert_eq!(to_i64(cyclotomic_poly(12)), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_poly(105).len() - 1, 48);
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        let mut s = Cyclo::from_rational(integer(0));
        for k in 0..12 {
            s = s.add(&Cyclo::root_power(12, k));
        }
        assert!(s.is_zero());
    }

    #[test]
    fn normalization_finds_rationals() {
        // ζ_8 + ζ_8^7 = √2, and its square is 2.
        let r2 = Cyclo::root_power(8, 1).add(&Cyclo::root_power(8, 7));
        let two = r2.mul(&r2).normalize();
        assert_eq!(two, Cyclo::from_rational(integer(2)));
        assert_eq!(r2.clone().normalize().n, 8);
        // ζ_12^4 = ζ_3.
        assert_eq!(Cyclo::root_power(12, 4).normalize(), Cyclo::root_power(3, 1));
    }
}
