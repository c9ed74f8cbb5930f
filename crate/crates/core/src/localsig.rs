//! Local signatures of fiber germs with cyclic symmetry, the germ of the
//! cyclic cover family with one tangency, and the cobounding function of the
//! Meyer cocycle on the symmetric mapping class group.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::coverrep::{word_to_matrix, CoverSpec, GeneratorWord, Kind, Letter};
use crate::error::{Error, Result};
use crate::exact::{cosec2_half, cot_half, serde_rational, AlgReal, Angle, Rational};
use crate::gsign::{check_point, check_surface_angle, FixedPoint, FixedPointData, FixedSurface, GroupActionData};
use crate::symplectic::meyer_tau;

/// Horizontal fixed component data: local Euler number for element `h` at
/// rotation angle `ψ ∈ (0, π]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HorizontalEntry {
    pub h: String,
    pub psi: Angle,
    #[serde(with = "serde_rational")]
    pub chi: Rational,
}

/// Combinatorial record of a fiber germ with a cyclic group action.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GermData {
    pub order: u32,
    #[serde(rename = "signQuotient")]
    pub sign_quotient: i64,
    #[serde(default)]
    pub horizontal: Vec<HorizontalEntry>,
    #[serde(rename = "verticalPoints", default)]
    pub vertical_points: BTreeMap<String, Vec<FixedPoint>>,
    #[serde(rename = "verticalSurfaces", default)]
    pub vertical_surfaces: BTreeMap<String, Vec<FixedSurface>>,
}

impl GermData {
    pub fn validate(&self) -> Result<()> {
        if self.order == 0 {
            return Err(Error::InvalidData("group order must be positive".into()));
        }
        self.horizontal.iter().try_for_each(|e| check_surface_angle(&e.psi))?;
        self.vertical_surfaces.values().flatten().try_for_each(|s| check_surface_angle(&s.psi))?;
        self.vertical_points.values().flatten().try_for_each(check_point)?;
        let labels = self.element_labels();
        if labels.len() > self.order as usize - 1 {
            return Err(Error::InvalidData(format!(
                "{} element labels for a group of order {}",
                labels.len(),
                self.order
            )));
        }
        Ok(())
    }

    fn element_labels(&self) -> BTreeSet<&str> {
        self.horizontal
            .iter()
            .map(|e| e.h.as_str())
            .chain(self.vertical_points.keys().map(String::as_str))
            .chain(self.vertical_surfaces.keys().map(String::as_str))
            .collect()
    }

    /// The same data read as a group action on a closed manifold: horizontal
    /// components become fixed surfaces with their local Euler numbers.
    ///
    /// Elements without fixed data are listed under fresh labels with empty data.
    pub fn to_action_data(&self) -> Result<GroupActionData> {
        self.validate()?;
        let mut per_element: BTreeMap<String, FixedPointData> = BTreeMap::new();
        for e in &self.horizontal {
            per_element
                .entry(e.h.clone())
                .or_default()
                .surfaces
                .push(FixedSurface { psi: e.psi, euler: e.chi.clone() });
        }
        for (h, surfaces) in &self.vertical_surfaces {
            per_element.entry(h.clone()).or_default().surfaces.extend(surfaces.iter().cloned());
        }
        for (h, points) in &self.vertical_points {
            per_element.entry(h.clone()).or_default().points.extend(points.iter().cloned());
        }
        let mut k = 0;
        while per_element.len() < self.order as usize - 1 {
            let label = format!("#{k}");
            per_element.entry(label).or_default();
            k += 1;
        }
        Ok(GroupActionData { order: self.order, sign_quotient: self.sign_quotient, per_element })
    }
}

/// `σ_loc = |G|·Sign(E/G) + Σ_h (−Σ χ·cosec²(ψ/2) + Σ cot(φ/2)cot(φ′/2) − Σ e·cosec²(ψ/2))`.
pub fn sigma_loc(germ: &GermData) -> Result<Rational> {
    germ.validate()?;
    let mut acc = AlgReal::from(i64::from(germ.order) * germ.sign_quotient);
    for e in &germ.horizontal {
        acc = acc - cosec2_half(&e.psi)?.scale(&e.chi);
    }
    for p in germ.vertical_points.values().flatten() {
        acc = acc + cot_half(&p.phi)? * cot_half(&p.phi_prime)?;
    }
    for s in germ.vertical_surfaces.values().flatten() {
        acc = acc - cosec2_half(&s.psi)?.scale(&s.euler);
    }
    acc.as_rational()
}

fn check_p1(d: u32, m: usize) -> Result<()> {
    if d < 2 || m < 3 {
        return Err(Error::BadSpec(format!("need d >= 2 and m >= 3, got d = {d}, m = {m}")));
    }
    if !m.is_multiple_of(d as usize) {
        return Err(Error::BadSpec(format!("{d} does not divide {m}")));
    }
    Ok(())
}

/// Local Euler number `m/(d(m − 1))` of the horizontal components.
pub fn p1_local_euler(d: u32, m: usize) -> Result<Rational> {
    check_p1(d, m)?;
    Ok(Rational::new(BigInt::from(m), BigInt::from(d as usize * (m - 1))))
}

/// Germ of the ℤ_d cover family with `m` branch points, two of which meet tangentially.
///
/// Element `h` rotates the normal bundle of the horizontal component by
/// `2πh/d`, recorded folded into `[0, π]`.
pub fn p1_germ(d: u32, m: usize) -> Result<GermData> {
    let chi = p1_local_euler(d, m)?;
    let horizontal = (1..d)
        .map(|h| {
            Ok(HorizontalEntry {
                h: h.to_string(),
                psi: Angle::new(i64::from(h), i64::from(d))?.fold_to_half_turn(),
                chi: chi.clone(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GermData {
        order: d,
        sign_quotient: 0,
        horizontal,
        vertical_points: BTreeMap::new(),
        vertical_surfaces: BTreeMap::new(),
    })
}

/// `(d − 1)(d + 1)m / (3d(m − 1))`.
pub fn closed_form_base(d: u32, m: usize) -> Result<Rational> {
    check_p1(d, m)?;
    let (d, m) = (BigInt::from(d), BigInt::from(m));
    let one = BigInt::from(1);
    Ok(Rational::new((&d - &one) * (&d + &one) * &m, BigInt::from(3) * &d * (&m - &one)))
}

/// The word `(σ₁₂ σ₂₃ ⋯ σ_{m−1,m})^m`, trivial in the mapping class group of the sphere.
pub fn full_rotation_word(m: usize) -> GeneratorWord {
    let round: Vec<Letter> = (1..m).map(|i| Letter::sigma(i, i + 1)).collect();
    GeneratorWord::from_letters(round.iter().cycle().take(m * (m - 1)).copied().collect())
}

/// The half-twist value `c` for which the cobounding function vanishes on
/// the full rotation word, computed from the cocycle alone.
///
/// With `φ(σ) = c` on every half twist, a left fold over the word gives
/// `φ(Δ²) = L·c + Σ_k (τ(W_{k+1}, W_{k+1}⁻¹) − τ(W_k, σ_{k+1}))` for prefixes `W_k`.
pub fn pinned_base(spec: &CoverSpec) -> Result<Rational> {
    let word = full_rotation_word(spec.m());
    let letters = word.letters();
    let mut prefix = word_to_matrix(spec, &GeneratorWord::from(letters[0]))?;
    let mut correction = BigInt::zero();
    for l in &letters[1..] {
        let next = word_to_matrix(spec, &GeneratorWord::from(*l))?;
        let prod = &prefix * &next;
        correction += meyer_tau(&prod, &prod.inverse())? - meyer_tau(&prefix, &next)?;
        prefix = prod;
    }
    if !prefix.is_identity() {
        return Err(Error::ModelInconsistent("full rotation acts nontrivially on homology".into()));
    }
    Ok(Rational::new(-correction, BigInt::from(letters.len())))
}

/// The cobounding function of the Meyer cocycle on words over half twists.
pub struct PhiTable {
    spec: CoverSpec,
    base: Rational,
    cache: RwLock<HashMap<GeneratorWord, Rational>>,
}

impl PhiTable {
    /// Table for the cover with all labels 1, with the closed-form base value.
    pub fn p1(d: u32, m: usize) -> Result<PhiTable> {
        let base = closed_form_base(d, m)?;
        PhiTable::with_base(CoverSpec::p1(d, m)?, base)
    }

    pub fn with_base(spec: CoverSpec, base: Rational) -> Result<PhiTable> {
        if !spec.is_p1() {
            return Err(Error::BadSpec(format!("cobounding table needs all labels equal to 1, got {spec}")));
        }
        Ok(PhiTable { spec, base, cache: RwLock::new(HashMap::new()) })
    }

    pub fn spec(&self) -> &CoverSpec {
        &self.spec
    }

    pub fn base(&self) -> &Rational {
        &self.base
    }

    /// Rewrites full twists as squared half twists and cancels inverse pairs.
    pub fn canonical(&self, w: &GeneratorWord) -> Result<GeneratorWord> {
        let mut out = Vec::with_capacity(w.len());
        for l in w.letters() {
            self.spec.check_letter(l)?;
            match l.kind {
                Kind::Sigma => out.push(*l),
                Kind::Tau => {
                    let s = Letter { kind: Kind::Sigma, ..*l };
                    out.extend([s, s]);
                }
            }
        }
        Ok(GeneratorWord::from_letters(out).freely_reduced())
    }

    pub fn phi(&self, w: &GeneratorWord) -> Result<Rational> {
        let w = self.canonical(w)?;
        self.phi_canonical(&w)
    }

    fn phi_canonical(&self, w: &GeneratorWord) -> Result<Rational> {
        if w.is_empty() {
            return Ok(Rational::zero());
        }
        if let Some(v) = self.cache.read().expect("phi cache poisoned").get(w) {
            return Ok(v.clone());
        }
        let value = if w.len() == 1 {
            let l = w.letters()[0];
            if l.inverse {
                let m = word_to_matrix(&self.spec, &GeneratorWord::from(l.inv()))?;
                Rational::from_integer(meyer_tau(&m, &m.inverse())?.into()) - &self.base
            } else {
                self.base.clone()
            }
        } else {
            let (u, v) = w.split_at(w.len() / 2);
            let (mu, mv) = (word_to_matrix(&self.spec, &u)?, word_to_matrix(&self.spec, &v)?);
            let mw = &mu * &mv;
            let tau_w = meyer_tau(&mw, &mw.inverse())?;
            let tau_uv = meyer_tau(&mu, &mv)?;
            Rational::from_integer((tau_w - tau_uv).into()) + self.phi_canonical(&u)? + self.phi_canonical(&v)?
        };
        self.cache.write().expect("phi cache poisoned").insert(w.clone(), value.clone());
        Ok(value)
    }
}

pub fn phi_word(table: &PhiTable, w: &GeneratorWord) -> Result<Rational> {
    table.phi(w)
}

/// Local signature in the broad sense: `φ(w) + Sign E`.
pub fn sigma_loc_broad(germ_signature: i64, w: &GeneratorWord, table: &PhiTable) -> Result<Rational> {
    Ok(table.phi(w)? + Rational::from_integer(germ_signature.into()))
}
