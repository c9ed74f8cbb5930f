//! The G-signature fixed-point formula and the averaging identity for the
//! signature of a quotient.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{cosec2_half, cot_half, serde_rational, AlgReal, Angle, Rational};

/// A fixed surface: normal rotation angle `ψ ∈ (0, π]` and normal Euler number.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FixedSurface {
    pub psi: Angle,
    #[serde(rename = "e", with = "serde_rational")]
    pub euler: Rational,
}

/// An isolated fixed point with rotation angles `φ, φ′ ∈ (0, 2π)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FixedPoint {
    pub phi: Angle,
    #[serde(rename = "phiPrime")]
    pub phi_prime: Angle,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct FixedPointData {
    #[serde(default)]
    pub surfaces: Vec<FixedSurface>,
    #[serde(default)]
    pub points: Vec<FixedPoint>,
}

pub(crate) fn check_surface_angle(psi: &Angle) -> Result<()> {
    if psi.is_zero() {
        return Err(Error::ZeroAngle);
    }
    if !psi.is_at_most_half_turn() {
        return Err(Error::InvalidAngle(format!("surface rotation angle {psi} exceeds pi")));
    }
    Ok(())
}

pub(crate) fn check_point(p: &FixedPoint) -> Result<()> {
    if p.phi.is_zero() || p.phi_prime.is_zero() {
        return Err(Error::PoleAngle);
    }
    Ok(())
}

impl FixedPointData {
    pub fn validate(&self) -> Result<()> {
        self.surfaces.iter().try_for_each(|s| check_surface_angle(&s.psi))?;
        self.points.iter().try_for_each(check_point)
    }

    /// Disjoint union of fixed sets.
    pub fn union(&self, other: &FixedPointData) -> FixedPointData {
        FixedPointData {
            surfaces: self.surfaces.iter().chain(&other.surfaces).cloned().collect(),
            points: self.points.iter().chain(&other.points).cloned().collect(),
        }
    }
}

/// Group action bookkeeping: `|G|`, `Sign(X/G)` and fixed data per nontrivial element.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupActionData {
    pub order: u32,
    #[serde(rename = "signQuotient")]
    pub sign_quotient: i64,
    #[serde(rename = "perElement", default)]
    pub per_element: BTreeMap<String, FixedPointData>,
}

impl GroupActionData {
    pub fn validate(&self) -> Result<()> {
        if self.order == 0 {
            return Err(Error::InvalidData("group order must be positive".into()));
        }
        if self.per_element.len() != self.order as usize - 1 {
            return Err(Error::InvalidData(format!(
                "expected {} nontrivial elements, got {}",
                self.order - 1,
                self.per_element.len()
            )));
        }
        self.per_element.values().try_for_each(FixedPointData::validate)
    }
}

/// `Sign(h, X) = Σ e·cosec²(ψ/2) − Σ cot(φ/2)·cot(φ′/2)`.
pub fn g_signature(fp: &FixedPointData) -> Result<AlgReal> {
    fp.validate()?;
    let mut acc = AlgReal::zero();
    for s in &fp.surfaces {
        acc = acc + cosec2_half(&s.psi)?.scale(&s.euler);
    }
    for p in &fp.points {
        acc = acc - cot_half(&p.phi)? * cot_half(&p.phi_prime)?;
    }
    Ok(acc)
}

/// `Sign(X) = −Σ_{h≠1} Sign(h, X) + |G|·Sign(X/G)`.
pub fn total_signature(gd: &GroupActionData) -> Result<Rational> {
    gd.validate()?;
    let mut acc = AlgReal::from(i64::from(gd.order) * gd.sign_quotient);
    for fp in gd.per_element.values() {
        acc = acc - g_signature(fp)?;
    }
    acc.as_rational()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{integer, rational};

    fn ang(p: i64, q: i64) -> Angle {
        Angle::new(p, q).unwrap()
    }

    #[test]
    fn g_signature_examples() {
        assert!(g_signature(&FixedPointData::default()).unwrap().is_zero());
        let one_surface = FixedPointData {
            surfaces: vec![FixedSurface { psi: Angle::half_turn(), euler: integer(5) }],
            points: vec![],
        };
        assert_eq!(g_signature(&one_surface).unwrap().as_rational().unwrap(), integer(5));
        let one_point = FixedPointData {
            surfaces: vec![],
            points: vec![FixedPoint { phi: Angle::half_turn(), phi_prime: Angle::half_turn() }],
        };
        assert!(g_signature(&one_point).unwrap().is_zero());
    }

    #[test]
    fn total_signature_examples() {
        let trivial = GroupActionData { order: 1, sign_quotient: 3, per_element: BTreeMap::new() };
        assert_eq!(total_signature(&trivial).unwrap(), integer(3));
        let mut per = BTreeMap::new();
        per.insert(
            "h".to_string(),
            FixedPointData {
                surfaces: vec![FixedSurface { psi: Angle::half_turn(), euler: integer(-2) }],
                points: vec![],
            },
        );
        let inv = GroupActionData { order: 2, sign_quotient: 0, per_element: per };
        assert_eq!(total_signature(&inv).unwrap(), integer(2));
    }

    #[test]
    fn irrational_totals_are_rejected() {
        let mut per = BTreeMap::new();
        per.insert(
            "h".to_string(),
            FixedPointData {
                surfaces: vec![],
                points: vec![FixedPoint { phi: ang(1, 3), phi_prime: ang(1, 4) }],
            },
        );
        let gd = GroupActionData { order: 2, sign_quotient: 0, per_element: per };
        assert!(matches!(total_signature(&gd), Err(Error::NotRational(_))));
    }

    #[test]
    fn validation() {
        let bad = FixedPointData {
            surfaces: vec![FixedSurface { psi: ang(2, 3), euler: integer(1) }],
            points: vec![],
        };
        assert!(matches!(g_signature(&bad), Err(Error::InvalidAngle(_))));
        let gd = GroupActionData { order: 3, sign_quotient: 0, per_element: BTreeMap::new() };
        assert!(matches!(total_signature(&gd), Err(Error::InvalidData(_))));
        let rotation = FixedPointData {
            surfaces: vec![],
            points: vec![FixedPoint { phi: ang(1, 3), phi_prime: ang(2, 3) }],
        };
        // cot(π/3)·cot(2π/3) = −1/3.
        assert_eq!(g_signature(&rotation).unwrap().as_rational().unwrap(), rational(1, 3));
    }

    #[test]
    fn json_format() {
        let text = r#"{"order": 2, "signQuotient": 0,
            "perElement": {"h": {"surfaces": [{"psi": {"num": 1, "den": 2}, "e": -2}]}}}"#;
        let gd: GroupActionData = serde_json::from_str(text).unwrap();
        assert_eq!(total_signature(&gd).unwrap(), integer(2));
    }
}
