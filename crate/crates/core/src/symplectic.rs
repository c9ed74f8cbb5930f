//! Integral symplectic matrices and the Meyer signature cocycle.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::form_signature;
use crate::linalg::{rational_kernel, IntMatrix, RatMatrix};

/// Global sign applied to the restricted Wall form.
///
/// With `+1` the cobounding function of the cover representation takes the
/// positive base values, and its coboundary reproduces the cocycle on every
/// tested word pair.
pub const MEYER_FORM_SIGN: i64 = 1;

/// `J = [[0, I_g], [−I_g, 0]]`.
pub fn standard_form(g: usize) -> IntMatrix {
    let mut j = IntMatrix::zeros(2 * g, 2 * g);
    for i in 0..g {
        j[(i, g + i)] = BigInt::one();
        j[(g + i, i)] = -BigInt::one();
    }
    j
}

/// A `2g × 2g` integer matrix with `AᵀJA = J`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SpMatrix {
    g: usize,
    a: IntMatrix,
}

impl fmt::Debug for SpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SpMatrix(g={}, {:?})", self.g, self.a)
    }
}

/// Validates `a` and wraps it as a symplectic matrix.
pub fn check_symplectic(a: IntMatrix) -> Result<SpMatrix> {
    if !a.is_square() || !a.rows().is_multiple_of(2) {
        return Err(Error::DimensionMismatch(format!(
            "symplectic matrices are square of even size, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let g = a.rows() / 2;
    let j = standard_form(g);
    let defect = &(&(&a.transpose() * &j) * &a) - &j;
    for r in 0..2 * g {
        for c in 0..2 * g {
            if !defect[(r, c)].is_zero() {
                return Err(Error::NotSymplectic { row: r, col: c, value: defect[(r, c)].to_string() });
            }
        }
    }
    Ok(SpMatrix { g, a })
}

impl SpMatrix {
    pub fn identity(g: usize) -> SpMatrix {
        SpMatrix { g, a: IntMatrix::identity(2 * g) }
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.a
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.a
    }

    pub fn is_identity(&self) -> bool {
        self.a == IntMatrix::identity(2 * self.g)
    }

    /// `A⁻¹ = −J Aᵀ J`.
    pub fn inverse(&self) -> SpMatrix {
        let j = standard_form(self.g);
        SpMatrix { g: self.g, a: -&(&(&j * &self.a.transpose()) * &j) }
    }

    /// `self^e` for any integer exponent.
    pub fn pow(&self, e: i64) -> SpMatrix {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        SpMatrix { g: self.g, a: base.a.pow(e.unsigned_abs() as u32) }
    }

    /// `P A P⁻¹`.
    pub fn conjugate_by(&self, p: &SpMatrix) -> SpMatrix {
        &(p * self) * &p.inverse()
    }
}

impl Mul for &SpMatrix {
    type Output = SpMatrix;
    fn mul(self, rhs: &SpMatrix) -> SpMatrix {
        assert_eq!(self.g, rhs.g, "genus mismatch in symplectic product");
        SpMatrix { g: self.g, a: &self.a * &rhs.a }
    }
}

impl Mul for SpMatrix {
    type Output = SpMatrix;
    fn mul(self, rhs: SpMatrix) -> SpMatrix {
        &self * &rhs
    }
}

/// `x ↦ x + ε⟨x, c⟩c` with `⟨x, c⟩ = xᵀJc`.
pub fn transvection(c: &[BigInt], eps: i32) -> Result<SpMatrix> {
    if !c.len().is_multiple_of(2) || c.is_empty() {
        return Err(Error::DimensionMismatch(format!("transvection vector has length {}", c.len())));
    }
    if eps != 1 && eps != -1 {
        return Err(Error::InvalidData(format!("transvection sign must be ±1, got {eps}")));
    }
    let g = c.len() / 2;
    let jc = standard_form(g).mul_vec(c);
    let eps = BigInt::from(eps);
    let a = IntMatrix::from_fn(2 * g, 2 * g, |i, j| {
        let delta = if i == j { BigInt::one() } else { BigInt::zero() };
        delta + &eps * &c[i] * &jc[j]
    });
    Ok(SpMatrix { g, a })
}

/// The Meyer cocycle `τ(A, B)`.
///
/// Signature of `((x₁, y₁), (x₂, y₂)) ↦ (x₁ + y₁)ᵀ J (I − B) y₂` on
/// `V = {(x, y) : (A⁻¹ − I)x + (B − I)y = 0}`.
pub fn meyer_tau(a: &SpMatrix, b: &SpMatrix) -> Result<i64> {
    if a.g != b.g {
        return Err(Error::DimensionMismatch(format!("genus {} against genus {}", a.g, b.g)));
    }
    let n = 2 * a.g;
    let id = IntMatrix::identity(n);
    let lhs = (&a.inverse().a - &id).hstack(&(&b.a - &id)).to_rational();
    let v = rational_kernel(&lhs);
    if v.cols() == 0 {
        return Ok(0);
    }
    let w = (&standard_form(a.g) * &(&id - &b.a)).to_rational();
    let x = v.columns(0..v.cols());
    let xs = RatMatrix::from_fn(n, x.cols(), |i, k| &x[(i, k)] + &x[(n + i, k)]);
    let ys = RatMatrix::from_fn(n, x.cols(), |i, k| x[(n + i, k)].clone());
    let gram = &(&xs.transpose() * &w) * &ys;
    for i in 0..gram.rows() {
        for j in i + 1..gram.cols() {
            if gram[(i, j)] != gram[(j, i)] {
                return Err(Error::ModelInconsistent(format!("restricted Wall form is not symmetric at ({i}, {j})")));
            }
        }
    }
    Ok(MEYER_FORM_SIGN * form_signature(&gram)?)
}

/// Random symplectic matrix as a product of `steps` transvections along small vectors.
pub fn random_symplectic<R: Rng>(g: usize, steps: usize, rng: &mut R) -> SpMatrix {
    let mut acc = SpMatrix::identity(g);
    for _ in 0..steps {
        let c: Vec<BigInt> = (0..2 * g).map(|_| BigInt::from(rng.gen_range(-1..=1))).collect();
        let eps = if rng.gen_bool(0.5) { 1 } else { -1 };
        acc = &acc * &transvection(&c, eps).expect("even length");
    }
    acc
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum IntRepr {
    Small(i64),
    Big(String),
}

fn int_to_repr(x: &BigInt) -> IntRepr {
    i64::try_from(x).map_or_else(|_| IntRepr::Big(x.to_string()), IntRepr::Small)
}

fn int_from_repr(r: IntRepr) -> Result<BigInt> {
    match r {
        IntRepr::Small(n) => Ok(BigInt::from(n)),
        IntRepr::Big(s) => s.trim().parse().map_err(|_| Error::InvalidData(format!("not an integer: {s:?}"))),
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    g: usize,
    rows: Vec<Vec<IntRepr>>,
}

/// Parses `{g, rows}` into an integer matrix, checking the size against `g`.
pub fn matrix_from_json(value: &serde_json::Value) -> Result<IntMatrix> {
    let raw: MatrixJson =
        serde_json::from_value(value.clone()).map_err(|e| Error::InvalidData(format!("matrix JSON: {e}")))?;
    let n = 2 * raw.g;
    if raw.rows.len() != n || raw.rows.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch(format!("expected {n}x{n} rows for g = {}", raw.g)));
    }
    let rows = raw
        .rows
        .into_iter()
        .map(|r| r.into_iter().map(int_from_repr).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(IntMatrix::from_rows(rows).expect("rows checked"))
}

impl Serialize for SpMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows = self.a.to_rows().iter().map(|r| r.iter().map(int_to_repr).collect()).collect();
        MatrixJson { g: self.g, rows }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SpMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<SpMatrix, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        matrix_from_json(&v).and_then(check_symplectic).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64(rows)
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn validation() {
        assert!(check_symplectic(IntMatrix::identity(4)).is_ok());
        assert!(check_symplectic(standard_form(2)).is_ok());
        let err = check_symplectic(m(&[vec![2, 0], vec![0, 1]])).unwrap_err();
        assert_eq!(err, Error::NotSymplectic { row: 0, col: 1, value: "1".into() });
        assert!(matches!(check_symplectic(m(&[vec![1, 0, 0]])), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn transvections() {
        assert!(transvection(&ints(&[0, 0]), 1).unwrap().is_identity());
        let t = transvection(&ints(&[1, 0]), 1).unwrap();
        assert_eq!(t.matrix().mul_vec(&ints(&[1, 0])), ints(&[1, 0]));
        assert!(check_symplectic(t.matrix().clone()).is_ok());
        let t = transvection(&ints(&[1, -2, 0, 3]), -1).unwrap();
        assert!(check_symplectic(t.matrix().clone()).is_ok());
        assert!((&t * &t.inverse()).is_identity());
    }

    #[test]
    fn tau_of_quarter_turn_squared() {
        let s = check_symplectic(m(&[vec![0, -1], vec![1, 0]])).unwrap();
        assert_eq!(meyer_tau(&s, &s).unwrap(), -2);
    }

    #[test]
    fn tau_trivial_cases() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for g in 1..=3 {
            let a = random_symplectic(g, 6, &mut rng);
            let id = SpMatrix::identity(g);
            assert_eq!(meyer_tau(&id, &a).unwrap(), 0);
            assert_eq!(meyer_tau(&a, &id).unwrap(), 0);
            assert_eq!(meyer_tau(&a, &a.inverse()).unwrap(), 0);
        }
        let a = SpMatrix::identity(1);
        assert!(meyer_tau(&a, &SpMatrix::identity(2)).is_err());
    }

    #[test]
    fn json_round_trip() {
        let s = check_symplectic(m(&[vec![0, -1], vec![1, 0]])).unwrap();
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"g":1,"rows":[[0,-1],[1,0]]}"#);
        let back: SpMatrix = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<SpMatrix>(r#"{"g":1,"rows":[[2,0],[0,1]]}"#).is_err());
    }
}
