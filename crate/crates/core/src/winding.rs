//! Winding numbers of the cross-ratio sections over the branch locus of the
//! ℤ_d germ, and the local Euler number assembled from them.
//!
//! In the fiber coordinate `w` over `b ∈ Δ` the branch trajectories are
//! `α₁ = √b`, `α₂ = −√b` and `αᵢ = e^{2πi(i−2)/(m−2)}` for `i ≥ 3`. The section
//! `t^{ijk}` is the pushforward of `d/dz` under the Möbius map sending
//! `0, 1, ∞` to `αᵢ, αⱼ, αₖ`; its coefficient on `d/dw` at `αᵢ` is
//! `(αᵢ − αⱼ)(αₖ − αᵢ)/(αⱼ − αₖ)`.
//!
//! Windings are measured by phase continuation along `|b| = r`, with `√b`
//! continued from the previous sample. A step is accepted only when the phase
//! moves by less than `π/4`; otherwise it is bisected.

use std::f64::consts::{FRAC_PI_4, PI};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{rational, rational_to_f64, serde_rational, Rational};

/// Relation between boundary intersection numbers and raw phase windings:
/// `s′·s|∂ = INTERSECTION_SIGN · raw_winding(s′/s)`.
///
/// With `−1` a section of phase winding `k` against a trivializing section
/// has intersection `−k` and, by the boundary rule, `k` zeros; the assembled
/// total is then `m(m−2)`.
pub const INTERSECTION_SIGN: i64 = -1;

/// Environment variable overriding the starting number of samples per loop.
pub const PRECISION_VAR: &str = "GERMSIG_PRECISION";

const DEFAULT_SAMPLES: usize = 64;
/// Floor on starting samples; below it the square root cannot be continued reliably.
pub const MIN_SAMPLES: usize = 16;
const MIN_STEP: f64 = 1e-12;
const VANISHING_BOUND: f64 = 1e-200;
const COLLISION_BOUND: f64 = 1e-12;
const CLOSURE_TOLERANCE: f64 = 1e-6;

/// Starting samples per loop, raised by `GERMSIG_PRECISION` when set.
pub fn starting_samples() -> usize {
    std::env::var(PRECISION_VAR)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map_or(DEFAULT_SAMPLES, |n| n.max(DEFAULT_SAMPLES))
}

/// The section `t^{ijk}` at the moving branch point `αᵢ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SectionSpec {
    m: usize,
    i: usize,
    j: usize,
    k: usize,
}

impl SectionSpec {
    /// Requires `m ≥ 3` and `i, j, k` distinct in `1..=m`.
    pub fn new(m: usize, i: usize, j: usize, k: usize) -> Result<SectionSpec> {
        if m < 3 {
            return Err(Error::BadSpec(format!("need at least 3 branch points, got {m}")));
        }
        for x in [i, j, k] {
            if x == 0 || x > m {
                return Err(Error::InvalidData(format!("section index {x} outside 1..={m}")));
            }
        }
        if i == j || j == k || i == k {
            return Err(Error::InvalidData(format!("section indices ({i}, {j}, {k}) are not distinct")));
        }
        Ok(SectionSpec { m, i, j, k })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn indices(&self) -> (usize, usize, usize) {
        (self.i, self.j, self.k)
    }

    /// Whether the section lives over the pair of moving points.
    pub fn on_s12(&self) -> bool {
        self.i <= 2
    }

    fn touches_moving(&self) -> bool {
        self.i <= 2 || self.j <= 2 || self.k <= 2
    }
}

impl fmt::Display for SectionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m < 10 {
            write!(f, "{}:{}{}", self.i, self.j, self.k)
        } else {
            write!(f, "{}:{},{}", self.i, self.j, self.k)
        }
    }
}

/// A tensor product of sections; the empty product is the coordinate frame `d/dw`.
pub type Tensor = Vec<SectionSpec>;

/// The circle `|b| = radius`, traversed `sheets` times.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryLoop {
    #[serde(with = "serde_rational")]
    radius: Rational,
    sheets: u32,
}

impl BoundaryLoop {
    pub fn new(radius: Rational, sheets: u32) -> Result<BoundaryLoop> {
        if radius <= rational(0, 1) {
            return Err(Error::InvalidData(format!("loop radius must be positive, got {radius}")));
        }
        if !(1..=2).contains(&sheets) {
            return Err(Error::InvalidData(format!("sheets must be 1 or 2, got {sheets}")));
        }
        Ok(BoundaryLoop { radius, sheets })
    }

    /// Boundary of a fixed branch point's trajectory.
    pub fn s_i() -> BoundaryLoop {
        BoundaryLoop { radius: rational(1, 2), sheets: 1 }
    }

    /// Boundary of the trajectory of the exchanged pair, covering `|b| = 1/2` twice.
    pub fn s12() -> BoundaryLoop {
        BoundaryLoop { radius: rational(1, 2), sheets: 2 }
    }

    /// The loop matching the base points of the given sections.
    pub fn for_sections(sections: &[SectionSpec]) -> BoundaryLoop {
        if sections.iter().any(SectionSpec::on_s12) {
            BoundaryLoop::s12()
        } else {
            BoundaryLoop::s_i()
        }
    }

    pub fn radius(&self) -> &Rational {
        &self.radius
    }

    pub fn sheets(&self) -> u32 {
        self.sheets
    }

    fn point(&self, t: f64) -> Complex64 {
        Complex64::from_polar(rational_to_f64(&self.radius), t)
    }

    fn length(&self) -> f64 {
        2.0 * PI * f64::from(self.sheets)
    }
}

/// Continuation state: the currently chosen square root of `b`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Branch {
    root: Complex64,
}

impl Branch {
    /// Principal root at the starting point.
    pub fn start(b: Complex64) -> Branch {
        Branch { root: b.sqrt() }
    }

    pub fn root(&self) -> Complex64 {
        self.root
    }

    /// The branch at `b` continued from `self`: the root of `b` nearest the current one.
    pub fn continue_to(&self, b: Complex64) -> Branch {
        let r = b.sqrt();
        if (r - self.root).norm_sqr() <= (r + self.root).norm_sqr() {
            Branch { root: r }
        } else {
            Branch { root: -r }
        }
    }
}

fn trajectory(m: usize, idx: usize, root: Complex64) -> Complex64 {
    match idx {
        1 => root,
        2 => -root,
        _ => Complex64::from_polar(1.0, 2.0 * PI * (idx - 2) as f64 / (m - 2) as f64),
    }
}

/// Coefficient of `d/dw` of `t^{ijk}_*(d/dz)` at `αᵢ(b)`, with `√b` taken from `branch` continued to `b`.
pub fn section_value(spec: &SectionSpec, b: Complex64, branch: &Branch) -> Result<Complex64> {
    let root = branch.continue_to(b).root;
    let (ai, aj, ak) = (
        trajectory(spec.m, spec.i, root),
        trajectory(spec.m, spec.j, root),
        trajectory(spec.m, spec.k, root),
    );
    for (x, y, p, q) in [(ai, aj, spec.i, spec.j), (aj, ak, spec.j, spec.k), (ai, ak, spec.i, spec.k)] {
        if (x - y).norm() < COLLISION_BOUND {
            return Err(Error::Collision(p.min(q), p.max(q)));
        }
    }
    Ok((ai - aj) * (ak - ai) / (aj - ak))
}

fn tensor_value(t: &[SectionSpec], b: Complex64, branch: &Branch) -> Result<Complex64> {
    t.iter().try_fold(Complex64::new(1.0, 0.0), |acc, s| Ok(acc * section_value(s, b, branch)?))
}

struct Sample {
    t: f64,
    branch: Branch,
    value: Complex64,
}

/// Accumulated phase of `f` around `lp`, divided by `2π`, with `f` given the continued branch.
fn winding_of<F>(lp: &BoundaryLoop, samples: usize, f: F) -> Result<i64>
where
    F: Fn(Complex64, &Branch) -> Result<Complex64>,
{
    let eval = |t: f64, prev: &Branch| -> Result<Sample> {
        let b = lp.point(t);
        let branch = prev.continue_to(b);
        let value = f(b, &branch)?;
        if !value.is_finite() || value.norm() <= VANISHING_BOUND {
            return Err(Error::NonVanishingViolated(format!("section vanishes near arg b = {t:.6}")));
        }
        Ok(Sample { t, branch, value })
    };
    let len = lp.length();
    let start = eval(0.0, &Branch::start(lp.point(0.0)))?;
    let first = start.value;
    let mut phase = 0.0;
    let mut cur = start;
    for n in 1..=samples {
        let target = len * n as f64 / samples as f64;
        let mut pending = vec![target];
        while let Some(&t1) = pending.last() {
            let next = eval(t1, &cur.branch)?;
            let step = (next.value / cur.value).arg();
            if step.abs() < FRAC_PI_4 {
                phase += step;
                cur = next;
                pending.pop();
            } else if t1 - cur.t < MIN_STEP {
                return Err(Error::NonVanishingViolated(format!(
                    "phase jumps by {step:.3} within a step below {MIN_STEP:e} near arg b = {t1:.6}"
                )));
            } else {
                pending.push(0.5 * (cur.t + t1));
            }
        }
    }
    let closing = (cur.value / first).arg();
    let turns = phase / (2.0 * PI);
    if closing.abs() > CLOSURE_TOLERANCE || (turns - turns.round()).abs() > CLOSURE_TOLERANCE {
        return Err(Error::InvalidData(format!(
            "section does not close up over {} sheet(s): {turns:.6} turns",
            lp.sheets
        )));
    }
    Ok(turns.round() as i64)
}

fn check_tensors(a: &[SectionSpec], b: &[SectionSpec], lp: &BoundaryLoop) -> Result<()> {
    let mut ms = a.iter().chain(b).map(SectionSpec::m);
    if let Some(m) = ms.next() {
        if ms.any(|x| x != m) {
            return Err(Error::DimensionMismatch("sections over different branch sets".into()));
        }
    }
    let base: Vec<bool> = a.iter().chain(b).map(SectionSpec::on_s12).collect();
    if base.iter().any(|&x| x) && base.iter().any(|&x| !x) {
        return Err(Error::InvalidData("sections live over different fixed components".into()));
    }
    if base.iter().any(|&x| x) && lp.sheets != 2 {
        return Err(Error::InvalidData("sections over the exchanged pair need a two-sheet loop".into()));
    }
    Ok(())
}

/// Phase winding of `a/b` as `b` runs counterclockwise around `lp`.
pub fn raw_winding(a: &[SectionSpec], b: &[SectionSpec], lp: &BoundaryLoop) -> Result<i64> {
    raw_winding_with(a, b, lp, starting_samples())
}

/// As `raw_winding`, with an explicit starting sample count.
pub fn raw_winding_with(a: &[SectionSpec], b: &[SectionSpec], lp: &BoundaryLoop, samples: usize) -> Result<i64> {
    check_tensors(a, b, lp)?;
    winding_of(lp, samples.max(MIN_SAMPLES), |z, br| Ok(tensor_value(a, z, br)? / tensor_value(b, z, br)?))
}

/// Boundary intersection number `a·b`, i.e. the winding of `a/b` in the
/// orientation of the intersection pairing.
pub fn relative_winding(a: &[SectionSpec], b: &[SectionSpec], lp: &BoundaryLoop) -> Result<i64> {
    relative_winding_with(a, b, lp, starting_samples())
}

/// As `relative_winding`, with an explicit starting sample count.
pub fn relative_winding_with(a: &[SectionSpec], b: &[SectionSpec], lp: &BoundaryLoop, samples: usize) -> Result<i64> {
    Ok(INTERSECTION_SIGN * raw_winding_with(a, b, lp, samples)?)
}

/// Winding of a section over the exchanged pair, read in the normal bundle of its trajectory.
///
/// The trajectory is `{(u², u)}`; the covector `db − 2u dw` frames its normal
/// bundle over the whole disk, and sends `c·d/dw` to `−2u·c`.
pub fn normal_winding(a: &[SectionSpec]) -> Result<i64> {
    let lp = BoundaryLoop::s12();
    check_tensors(a, &[], &lp)?;
    if !a.iter().all(SectionSpec::on_s12) {
        return Err(Error::InvalidData("normal framing applies to sections over the exchanged pair".into()));
    }
    winding_of(&lp, starting_samples(), |z, br| Ok(-2.0 * br.root() * tensor_value(a, z, br)?))
}

/// Parses `i:jk/i:j'k'`; factors are joined by `*`, and `i:j,k` allows multi-digit indices.
pub fn parse_pair(m: usize, text: &str) -> Result<(Tensor, Tensor)> {
    let (lhs, rhs) = text
        .split_once('/')
        .ok_or_else(|| Error::InvalidData(format!("pair {text:?} needs the form a/b")))?;
    Ok((parse_tensor(m, lhs)?, parse_tensor(m, rhs)?))
}

/// Parses a `*`-separated product of sections; `1` is the empty product.
pub fn parse_tensor(m: usize, text: &str) -> Result<Tensor> {
    let text = text.trim();
    if text == "1" {
        return Ok(Vec::new());
    }
    text.split('*').map(|f| parse_section(m, f)).collect()
}

fn parse_section(m: usize, text: &str) -> Result<SectionSpec> {
    let bad = || Error::InvalidData(format!("cannot parse section {text:?}"));
    let (i, rest) = text.trim().split_once(':').ok_or_else(bad)?;
    let i: usize = i.trim().parse().map_err(|_| bad())?;
    let (j, k) = match rest.split_once(',') {
        Some((j, k)) => (j.trim().parse().map_err(|_| bad())?, k.trim().parse().map_err(|_| bad())?),
        None => {
            let digits: Vec<u32> = rest.trim().chars().map(|c| c.to_digit(10)).collect::<Option<_>>().ok_or_else(bad)?;
            match digits[..] {
                [j, k] => (j as usize, k as usize),
                _ => return Err(bad()),
            }
        }
    };
    SectionSpec::new(m, i, j, k)
}

impl FromStr for SectionSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<SectionSpec> {
        let (m, rest) = s
            .split_once('@')
            .ok_or_else(|| Error::InvalidData(format!("expected m@i:jk, got {s:?}")))?;
        let m = m.trim().parse().map_err(|_| Error::InvalidData(format!("bad branch count in {s:?}")))?;
        parse_section(m, rest)
    }
}

/// Every section `t^{ijk}` at a fixed `i`, over all admissible `j ≠ k`.
fn full_tensor(m: usize, i: usize, admissible: impl Fn(usize) -> bool) -> Tensor {
    let mut out = Vec::new();
    for j in (1..=m).filter(|&j| j != i && admissible(j)) {
        for k in (1..=m).filter(|&k| k != i && k != j && admissible(k)) {
            out.push(SectionSpec { m, i, j, k });
        }
    }
    out
}

/// Reference trivialization over the trajectory of a fixed point `i ≥ 3`.
///
/// A section with all indices fixed when one exists, else the coordinate frame.
fn reference(m: usize, i: usize) -> Tensor {
    full_tensor(m, i, |x| x >= 3).into_iter().take(1).collect()
}

/// Intersection counts over the trajectory of one fixed branch point `i ≥ 3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPointNumbers {
    pub i: usize,
    /// `sᵢ(j,k)·sᵢ(j′,k′)` over all indices at least 3.
    pub fixed_pairs: Vec<i64>,
    /// `(sᵢ(1,k)⊗sᵢ(2,k))·ref²` and `(sᵢ(k,1)⊗sᵢ(k,2))·ref²`.
    pub mixed_pairs: Vec<i64>,
    /// `(sᵢ(1,2)⊗sᵢ(2,1))·ref²`.
    pub exchange: i64,
    /// `n(s_∂S̄ᵢ)`.
    pub boundary_number: i64,
}

/// Intersection counts over the trajectory of the exchanged pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangedPairNumbers {
    /// `n(r s₁₂(j,k))` for each `j ≠ k ≥ 3`.
    pub fixed_sections: Vec<i64>,
    /// `s₁₂^ε(j)·s₁₂(j,k)` for each `j` and both signs.
    pub crossings: Vec<i64>,
    /// `n(r s₁₂^ε(j))` from the boundary rule.
    pub moving_sections: Vec<i64>,
    /// `n(r s₁₂^ε(j))` read directly in the normal frame.
    pub moving_direct: Vec<i64>,
    pub boundary_number: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryNumbers {
    pub m: usize,
    pub fixed_points: Vec<FixedPointNumbers>,
    pub exchanged_pair: ExchangedPairNumbers,
    pub total: i64,
}

fn fixed_point_numbers(m: usize, i: usize) -> Result<FixedPointNumbers> {
    let lp = BoundaryLoop::s_i();
    let sec = |i, j, k| SectionSpec { m, i, j, k };
    let reference = reference(m, i);
    let ref2: Tensor = reference.iter().chain(&reference).copied().collect();
    let fixed = full_tensor(m, i, |x| x >= 3);
    let mut fixed_pairs = Vec::new();
    for a in &fixed {
        for b in &fixed {
            fixed_pairs.push(relative_winding(&[*a], &[*b], &lp)?);
        }
    }
    let mut mixed_pairs = Vec::new();
    for k in (3..=m).filter(|&k| k != i) {
        mixed_pairs.push(relative_winding(&[sec(i, 1, k), sec(i, 2, k)], &ref2, &lp)?);
        mixed_pairs.push(relative_winding(&[sec(i, k, 1), sec(i, k, 2)], &ref2, &lp)?);
    }
    let exchange = relative_winding(&[sec(i, 1, 2), sec(i, 2, 1)], &ref2, &lp)?;
    let all = full_tensor(m, i, |_| true);
    let power: Tensor = std::iter::repeat_n(reference.iter().copied(), all.len()).flatten().collect();
    let boundary_number = -relative_winding(&all, &power, &lp)?;
    Ok(FixedPointNumbers { i, fixed_pairs, mixed_pairs, exchange, boundary_number })
}

fn exchanged_pair_numbers(m: usize) -> Result<ExchangedPairNumbers> {
    let lp = BoundaryLoop::s12();
    let sec = |i, j, k| SectionSpec { m, i, j, k };
    let pairs = full_tensor(m, 1, |x| x >= 3);
    let fixed_sections = pairs.iter().map(|s| normal_winding(&[*s])).collect::<Result<Vec<_>>>()?;
    let mut crossings = Vec::new();
    let mut moving_sections = Vec::new();
    let mut moving_direct = Vec::new();
    for j in 3..=m {
        for eps in [sec(1, 2, j), sec(1, j, 2)] {
            // Any s₁₂(j,k) trivializes the boundary; with m = 3 only the coordinate frame is left.
            let (reference, n_ref) = match pairs.first() {
                Some(p) => (vec![*p], normal_winding(&[*p])?),
                None => (Vec::new(), normal_winding(&[])?),
            };
            let dot = relative_winding(&[eps], &reference, &lp)?;
            crossings.push(dot);
            moving_sections.push(-dot + n_ref);
            moving_direct.push(normal_winding(&[eps])?);
        }
    }
    let boundary_number = fixed_sections.iter().sum::<i64>() + moving_sections.iter().sum::<i64>();
    Ok(ExchangedPairNumbers { fixed_sections, crossings, moving_sections, moving_direct, boundary_number })
}

/// All boundary numbers of the germ's fixed set for `m ≥ 3` branch points.
pub fn boundary_numbers(m: usize) -> Result<BoundaryNumbers> {
    if m < 3 {
        return Err(Error::BadSpec(format!("need at least 3 branch points, got {m}")));
    }
    let fixed_points = (3..=m).map(|i| fixed_point_numbers(m, i)).collect::<Result<Vec<_>>>()?;
    let exchanged_pair = exchanged_pair_numbers(m)?;
    let total = fixed_points.iter().map(|f| f.boundary_number).sum::<i64>() + exchanged_pair.boundary_number;
    Ok(BoundaryNumbers { m, fixed_points, exchanged_pair, total })
}

/// Local Euler number of each nontrivial element's fixed set for the germ with `d | m`.
///
/// The boundary numbers count zeros of a section of the
/// `(m−1)(m−2)`-th tensor power downstairs; upstairs the isotropy order is `d`.
pub fn chi_loc_p1(d: u32, m: usize) -> Result<Rational> {
    if d < 2 || m < 3 || !m.is_multiple_of(d as usize) {
        return Err(Error::BadSpec(format!("need d >= 2, m >= 3 and d | m, got d = {d}, m = {m}")));
    }
    let total = boundary_numbers(m)?.total;
    let weight = i64::from(d) * (m as i64 - 1) * (m as i64 - 2);
    Ok(rational(total, weight))
}

/// Whether `a` changes value after one turn of `b` (its formula involves `√b`).
pub fn is_multivalued(a: &SectionSpec) -> bool {
    a.touches_moving()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(m: usize, i: usize, j: usize, k: usize) -> SectionSpec {
        SectionSpec::new(m, i, j, k).unwrap()
    }

    #[test]
    fn validation() {
        assert!(SectionSpec::new(4, 1, 1, 2).is_err());
        assert!(SectionSpec::new(4, 1, 2, 5).is_err());
        assert!(SectionSpec::new(2, 1, 2, 3).is_err());
        assert!(BoundaryLoop::new(rational(1, 2), 3).is_err());
        assert!(BoundaryLoop::new(rational(0, 1), 1).is_err());
    }

    #[test]
    fn sample_value() {
        let b = Complex64::new(0.25, 0.0);
        let v = section_value(&s(4, 3, 1, 2), b, &Branch::start(b)).unwrap();
        // α₃ = −1, α₁ = 1/2, α₂ = −1/2: (−3/2)(1/2)/1.
        assert!((v - Complex64::new(-0.75, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn collisions_are_reported() {
        let b = Complex64::new(1.0, 0.0);
        assert_eq!(section_value(&s(4, 1, 4, 2), b, &Branch::start(b)), Err(Error::Collision(1, 4)));
    }

    #[test]
    fn one_turn_exchanges_the_moving_points() {
        let lp = BoundaryLoop::s_i();
        let b0 = lp.point(0.0);
        let mut br = Branch::start(b0);
        for n in 1..=256 {
            br = br.continue_to(lp.point(2.0 * PI * n as f64 / 256.0));
        }
        let a = section_value(&s(5, 1, 3, 4), b0, &br).unwrap();
        let b = section_value(&s(5, 2, 3, 4), b0, &Branch::start(b0)).unwrap();
        assert!((a - b).norm() < 1e-9);
        assert!(is_multivalued(&s(5, 1, 3, 4)));
        assert!(!is_multivalued(&s(5, 3, 4, 5)));
    }

    #[test]
    fn windings() {
        let lp = BoundaryLoop::s_i();
        let a = s(6, 3, 4, 5);
        assert_eq!(relative_winding(&[a], &[a], &lp).unwrap(), 0);
        assert_eq!(raw_winding(&[s(6, 3, 1, 2), s(6, 3, 2, 1)], &[a, a], &lp).unwrap(), -1);
        assert_eq!(relative_winding(&[s(6, 3, 1, 2), s(6, 3, 2, 1)], &[a, a], &lp).unwrap(), 1);
        assert!(matches!(raw_winding(&[s(6, 3, 1, 2)], &[], &lp), Err(Error::InvalidData(_))));
        assert_eq!(normal_winding(&[s(5, 1, 3, 4)]).unwrap(), 1);
        assert_eq!(normal_winding(&[s(5, 1, 2, 3)]).unwrap(), 2);
    }

    #[test]
    fn pair_grammar() {
        let (a, b) = parse_pair(6, "3:12*3:21/3:45*3:45").unwrap();
        assert_eq!(a, vec![s(6, 3, 1, 2), s(6, 3, 2, 1)]);
        assert_eq!(b, vec![s(6, 3, 4, 5), s(6, 3, 4, 5)]);
        let (a, b) = parse_pair(12, "11:1,12/1").unwrap();
        assert_eq!(a, vec![s(12, 11, 1, 12)]);
        assert!(b.is_empty());
        assert!(parse_pair(6, "3:12").is_err());
        assert!(parse_pair(6, "3:1/3:45").is_err());
        assert_eq!("6@3:45".parse::<SectionSpec>().unwrap(), s(6, 3, 4, 5));
        assert_eq!(s(6, 3, 4, 5).to_string(), "3:45");
    }

    #[test]
    fn local_euler_numbers() {
        assert_eq!(chi_loc_p1(2, 6).unwrap(), rational(3, 5));
        assert_eq!(chi_loc_p1(3, 3).unwrap(), rational(1, 2));
        let n = boundary_numbers(4).unwrap();
        assert_eq!(n.exchanged_pair.boundary_number, 10);
        assert!(n.fixed_points.iter().all(|f| f.boundary_number == -1));
        assert_eq!(n.total, 8);
        assert!(chi_loc_p1(4, 6).is_err());
    }
}
