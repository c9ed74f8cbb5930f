//! The ℤ_d cyclic branched cover of the sphere and the integral symplectic
//! representation of its symmetric mapping class group.
//!
//! Branch points `1 … m` sit in a row; `σ_{i,i+1}` is the counterclockwise
//! half twist exchanging neighbours. For `i < j` the half twist along the
//! standard arc is the conjugate
//! `σᵢⱼ = (σ_{j−1,j} ⋯ σ_{i+1,i+2}) σ_{i,i+1} (σ_{j−1,j} ⋯ σ_{i+1,i+2})⁻¹`,
//! and `τᵢⱼ = σᵢⱼ²` is the full twist. Each generator lifts uniquely to the
//! cover once the fiber over the base point is fixed pointwise.

mod basis;
mod model;
mod word;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

pub use basis::symplectic_basis;
pub use word::{GeneratorWord, Kind, Letter};

use crate::error::{Error, Result};
use crate::symplectic::SpMatrix;
use model::{Automorphism, Model};

/// A cyclic branched cover: deck group ℤ_d, `m` branch points with monodromy labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoverSpec {
    d: u32,
    labels: Vec<u32>,
}

impl CoverSpec {
    /// Validates `d ≥ 2`, `m ≥ 3` and `Σ labels ≡ 0 mod d`; labels are reduced mod `d`.
    pub fn new(d: u32, labels: Vec<u32>) -> Result<CoverSpec> {
        if d < 2 {
            return Err(Error::BadSpec(format!("deck group order must be at least 2, got {d}")));
        }
        if labels.len() < 3 {
            return Err(Error::BadSpec(format!("need at least 3 branch points, got {}", labels.len())));
        }
        let labels: Vec<u32> = labels.into_iter().map(|l| l % d).collect();
        let total: u64 = labels.iter().map(|&l| l as u64).sum();
        if !total.is_multiple_of(d as u64) {
            return Err(Error::BadSpec(format!("labels sum to {total}, not 0 mod {d}")));
        }
        Ok(CoverSpec { d, labels })
    }

    /// The cover with every label 1; requires `d | m`.
    pub fn p1(d: u32, m: usize) -> Result<CoverSpec> {
        if d >= 2 && m >= 3 && !m.is_multiple_of(d as usize) {
            return Err(Error::BadSpec(format!("{d} does not divide {m}")));
        }
        CoverSpec::new(d, vec![1; m])
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn m(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Whether every label equals 1.
    pub fn is_p1(&self) -> bool {
        self.labels.iter().all(|&l| l == 1)
    }

    /// Checks indices and the label condition for half twists.
    pub fn check_letter(&self, l: &Letter) -> Result<()> {
        if l.j > self.m() {
            return Err(Error::InvalidWord(format!("{l}: index {} exceeds m = {}", l.j, self.m())));
        }
        if l.kind == Kind::Sigma && self.labels[l.i - 1] != self.labels[l.j - 1] {
            return Err(Error::InvalidWord(format!("{l}: half twist between points with different labels")));
        }
        Ok(())
    }
}

impl fmt::Display for CoverSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(d={}, m={}, labels={:?})", self.d, self.m(), self.labels)
    }
}

/// Genus of the cover: `2g = 2 − 2d + m(d − 1)` for total ramification.
pub fn genus(spec: &CoverSpec) -> Result<usize> {
    for &l in &spec.labels {
        if l.gcd(&spec.d) != 1 {
            return Err(Error::NotTotallyRamified { label: l, d: spec.d });
        }
    }
    let (d, m) = (spec.d as usize, spec.m());
    Ok((2 + m * (d - 1) - 2 * d) / 2)
}

/// Per-cover homology model and memoized generator matrices.
struct CoverRep {
    model: Model,
    generators: RwLock<HashMap<(Kind, usize, usize), SpMatrix>>,
}

fn registry() -> &'static RwLock<HashMap<CoverSpec, Arc<CoverRep>>> {
    static REG: OnceLock<RwLock<HashMap<CoverSpec, Arc<CoverRep>>>> = OnceLock::new();
    REG.get_or_init(Default::default)
}

fn cover_rep(spec: &CoverSpec) -> Result<Arc<CoverRep>> {
    if let Some(rep) = registry().read().expect("cover registry poisoned").get(spec) {
        return Ok(rep.clone());
    }
    let g = genus(spec)?;
    let labels: Vec<usize> = spec.labels.iter().map(|&l| l as usize).collect();
    let model = Model::build(spec.d as usize, &labels, g)?;
    let rep = Arc::new(CoverRep { model, generators: RwLock::new(HashMap::new()) });
    Ok(registry().write().expect("cover registry poisoned").entry(spec.clone()).or_insert(rep).clone())
}

/// Free group automorphism of the positive generator `kind_ij`.
fn generator_automorphism(m: usize, kind: Kind, i: usize, j: usize) -> Automorphism {
    let (i0, j0) = (i - 1, j - 1);
    let mut conj = Automorphism::identity(m);
    for k in (i0 + 1..j0).rev() {
        conj = conj.compose(&Automorphism::half_twist(m, k, false));
    }
    let mut conj_inv = Automorphism::identity(m);
    for k in i0 + 1..j0 {
        conj_inv = conj_inv.compose(&Automorphism::half_twist(m, k, true));
    }
    let sigma = conj.compose(&Automorphism::half_twist(m, i0, false)).compose(&conj_inv);
    match kind {
        Kind::Sigma => sigma,
        Kind::Tau => sigma.compose(&sigma),
    }
}

impl CoverRep {
    fn generator(&self, spec: &CoverSpec, kind: Kind, i: usize, j: usize) -> Result<SpMatrix> {
        let key = (kind, i, j);
        if let Some(m) = self.generators.read().expect("generator cache poisoned").get(&key) {
            return Ok(m.clone());
        }
        let mat = self.model.action(&generator_automorphism(spec.m(), kind, i, j))?;
        self.generators.write().expect("generator cache poisoned").insert(key, mat.clone());
        Ok(mat)
    }
}

/// Matrix of one letter on H₁ in the fixed symplectic basis of the cover.
pub fn homology_rep(spec: &CoverSpec, letter: &Letter) -> Result<SpMatrix> {
    spec.check_letter(letter)?;
    let rep = cover_rep(spec)?;
    let m = rep.generator(spec, letter.kind, letter.i, letter.j)?;
    Ok(if letter.inverse { m.inverse() } else { m })
}

/// Product of the letter matrices, in word order.
pub fn word_to_matrix(spec: &CoverSpec, w: &GeneratorWord) -> Result<SpMatrix> {
    let rep = cover_rep(spec)?;
    let mut acc = SpMatrix::identity(rep.model.genus());
    for l in w.letters() {
        acc = &acc * &homology_rep(spec, l)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> GeneratorWord {
        s.parse().unwrap()
    }

    #[test]
    fn genus_examples() {
        assert_eq!(genus(&CoverSpec::p1(2, 4).unwrap()).unwrap(), 1);
        assert_eq!(genus(&CoverSpec::p1(2, 6).unwrap()).unwrap(), 2);
        assert_eq!(genus(&CoverSpec::p1(3, 3).unwrap()).unwrap(), 1);
        assert_eq!(genus(&CoverSpec::p1(3, 6).unwrap()).unwrap(), 4);
        let spec = CoverSpec::new(4, vec![1, 2, 1, 0]).unwrap();
        assert_eq!(genus(&spec), Err(Error::NotTotallyRamified { label: 2, d: 4 }));
        assert!(matches!(CoverSpec::p1(2, 5), Err(Error::BadSpec(_))));
        assert!(CoverSpec::new(3, vec![1, 1, 2]).is_err());
    }

    #[test]
    fn double_cover_half_twist_is_transvection() {
        let spec = CoverSpec::p1(2, 4).unwrap();
        let m = homology_rep(&spec, &Letter::sigma(1, 2)).unwrap();
        let n = m.matrix() - &crate::linalg::IntMatrix::identity(2);
        assert!((&n * &n).is_zero());
        assert!(!n.is_zero());
    }

    #[test]
    fn words_multiply_in_order() {
        let spec = CoverSpec::p1(2, 4).unwrap();
        assert!(word_to_matrix(&spec, &GeneratorWord::empty()).unwrap().is_identity());
        assert!(word_to_matrix(&spec, &w("s12 s12^-1")).unwrap().is_identity());
        let a = word_to_matrix(&spec, &w("s12")).unwrap();
        let b = word_to_matrix(&spec, &w("s23")).unwrap();
        assert_eq!(word_to_matrix(&spec, &w("s12 s23")).unwrap(), &a * &b);
        assert_eq!(
            word_to_matrix(&spec, &w("s12 s23 s12")).unwrap(),
            word_to_matrix(&spec, &w("s23 s12 s23")).unwrap()
        );
        assert_eq!(word_to_matrix(&spec, &w("t12")).unwrap(), word_to_matrix(&spec, &w("s12 s12")).unwrap());
    }

    #[test]
    fn letter_validation() {
        let spec = CoverSpec::p1(2, 4).unwrap();
        assert!(matches!(homology_rep(&spec, &Letter::sigma(1, 5)), Err(Error::InvalidWord(_))));
        let mixed = CoverSpec::new(3, vec![1, 2, 1, 2]).unwrap();
        assert!(homology_rep(&mixed, &Letter::sigma(1, 2)).is_err());
        assert!(homology_rep(&mixed, &Letter::sigma(1, 3)).is_ok());
        assert!(homology_rep(&mixed, &Letter::tau(1, 2)).is_ok());
    }
}
