//! Reproducible verification suites, listed in `verify_suites.json`.
//!
//! Every suite is deterministic: random inputs come from a ChaCha stream
//! with a fixed seed per suite.

use std::fmt::Write as _;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::coverrep::{genus, homology_rep, word_to_matrix, CoverSpec, GeneratorWord, Letter};
use crate::error::{Error, Result};
use crate::exact::{cosec2_half, format_rational, integer, rational, AlgReal, Angle, Rational};
use crate::gsign::total_signature;
use crate::linalg::{rational_rank, IntMatrix};
use crate::localsig::{closed_form_base, p1_germ, phi_word, pinned_base, sigma_loc, PhiTable};
use crate::symplectic::{check_symplectic, meyer_tau, random_symplectic, transvection, SpMatrix};
use crate::winding::{boundary_numbers, chi_loc_p1, relative_winding_with, starting_samples, MIN_SAMPLES, BoundaryLoop, SectionSpec};

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

impl Check {
    fn from_result(name: impl Into<String>, r: Result<(bool, String)>) -> Check {
        let name = name.into();
        match r {
            Ok((passed, details)) => Check { name, passed, details },
            Err(e) => Check { name, passed: false, details: format!("{}: {e}", e.name()) },
        }
    }
}

/// One entry of the suite manifest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteInfo {
    pub name: String,
    pub criterion: u32,
    pub title: String,
}

#[derive(Deserialize)]
struct Manifest {
    suites: Vec<SuiteInfo>,
}

const MANIFEST: &str = include_str!("../verify_suites.json");

/// The suites in manifest order.
pub fn suites() -> &'static [SuiteInfo] {
    static SUITES: OnceLock<Vec<SuiteInfo>> = OnceLock::new();
    SUITES.get_or_init(|| {
        serde_json::from_str::<Manifest>(MANIFEST).expect("verify_suites.json is well formed").suites
    })
}

pub fn suite(name: &str) -> Result<&'static SuiteInfo> {
    suites()
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::InvalidData(format!("unknown verification suite {name:?}")))
}

/// Runs one suite by name.
pub fn run_suite(name: &str) -> Result<Vec<Check>> {
    let info = suite(name)?;
    Ok(match info.criterion {
        1 => cosec_sum(),
        2 => local_signature(),
        3 => winding(),
        4 => meyer(),
        5 => representation(),
        6 => coboundary(),
        7 => well_defined(),
        8 => gsign_bookkeeping(),
        c => return Err(Error::InvalidData(format!("suite {name:?} names unknown criterion {c}"))),
    })
}

/// Runs every suite in parallel, returning results in manifest order.
pub fn run_all() -> Vec<(&'static SuiteInfo, Vec<Check>)> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = suites()
            .iter()
            .map(|info| (info, scope.spawn(move || run_suite(&info.name).expect("manifest suite"))))
            .collect();
        handles.into_iter().map(|(info, h)| (info, h.join().expect("verification thread panicked"))).collect()
    })
}

fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

/// Tallies a batch of sub-cases into one check, reporting the first failure.
struct Tally {
    total: usize,
    failures: usize,
    first: Option<String>,
}

impl Tally {
    fn new() -> Tally {
        Tally { total: 0, failures: 0, first: None }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.total += 1;
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(what());
            }
        }
    }

    fn finish(self) -> (bool, String) {
        match self.first {
            None => (true, format!("{} cases", self.total)),
            Some(f) => (false, format!("{} of {} cases failed; first: {f}", self.failures, self.total)),
        }
    }
}

/// The pairs `(d, m)` with `d ∈ 2..=5`, `3 ≤ m ≤ 20` and `d | m`.
pub fn p1_range() -> Vec<(u32, usize)> {
    (2..=5u32).flat_map(|d| (3..=20).filter(move |m| m % d as usize == 0).map(move |m| (d, m))).collect()
}

fn cosec_sum() -> Vec<Check> {
    let r = (|| {
        let mut t = Tally::new();
        for d in 2..=64i64 {
            let mut acc = AlgReal::zero();
            for h in 1..d {
                acc = acc + cosec2_half(&Angle::new(h, d)?)?;
            }
            let expected = rational(d * d - 1, 3);
            let got = acc.as_rational();
            t.record(got.as_ref() == Ok(&expected), || format!("d = {d}: got {got:?}, expected {expected}"));
        }
        Ok(t.finish())
    })();
    vec![Check::from_result("cosec-squared sum, d = 2..64", r)]
}

/// Genus up to which the base value is also recomputed from the cocycle alone.
const PINNED_GENUS_LIMIT: usize = 10;

fn local_signature() -> Vec<Check> {
    let mut checks = Vec::new();
    let r = (|| {
        let mut t = Tally::new();
        for (d, m) in p1_range() {
            let expected = -closed_form_base(d, m)?;
            let got = sigma_loc(&p1_germ(d, m)?)?;
            t.record(got == expected, || format!("(d, m) = ({d}, {m}): {got} vs {expected}"));
        }
        Ok(t.finish())
    })();
    checks.push(Check::from_result("sigma_loc of the tangency germ", r));
    let r = (|| {
        let mut t = Tally::new();
        let s12 = GeneratorWord::from(Letter::sigma(1, 2));
        for (d, m) in p1_range() {
            let expected = closed_form_base(d, m)?;
            let got = phi_word(&PhiTable::p1(d, m)?, &s12)?;
            t.record(got == expected, || format!("(d, m) = ({d}, {m}): {got} vs {expected}"));
            t.record(got == -sigma_loc(&p1_germ(d, m)?)?, || format!("(d, m) = ({d}, {m}): phi != -sigma_loc"));
        }
        Ok(t.finish())
    })();
    checks.push(Check::from_result("phi(s12) and phi = -sigma_loc", r));
    let r = (|| {
        let mut t = Tally::new();
        for (d, m) in p1_range() {
            let spec = CoverSpec::p1(d, m)?;
            if genus(&spec)? > PINNED_GENUS_LIMIT {
                continue;
            }
            let pinned = pinned_base(&spec)?;
            let expected = closed_form_base(d, m)?;
            t.record(pinned == expected, || format!("(d, m) = ({d}, {m}): pinned {pinned} vs {expected}"));
        }
        Ok(t.finish())
    })();
    checks.push(Check::from_result(format!("base pinned by the full rotation, genus <= {PINNED_GENUS_LIMIT}"), r));
    let r = (|| {
        let mut t = Tally::new();
        for m in (4..=20).step_by(2) {
            let g = genus(&CoverSpec::p1(2, m)?)? as i64;
            let got = closed_form_base(2, m)?;
            let expected = rational(g + 1, 2 * g + 1);
            t.record(got == expected, || format!("g = {g}: {got} vs {expected}"));
        }
        Ok(t.finish())
    })();
    checks.push(Check::from_result("hyperelliptic value (g+1)/(2g+1)", r));
    checks
}

fn winding() -> Vec<Check> {
    let mut checks = Vec::new();
    for m in 3..=10usize {
        let r = (|| {
            let n = boundary_numbers(m)?;
            let mm = m as i64;
            let mut t = Tally::new();
            for f in &n.fixed_points {
                let i = f.i;
                t.record(f.fixed_pairs.iter().all(|&x| x == 0), || format!("S{i}: nonzero fixed pair"));
                t.record(f.mixed_pairs.iter().all(|&x| x == 0), || format!("S{i}: nonzero mixed pair"));
                t.record(f.exchange == 1, || format!("S{i}: exchange pair gives {}", f.exchange));
                t.record(f.boundary_number == -1, || format!("S{i}: boundary number {}", f.boundary_number));
            }
            let p = &n.exchanged_pair;
            t.record(p.fixed_sections.iter().all(|&x| x == 1), || format!("S12: fixed sections {:?}", p.fixed_sections));
            t.record(p.crossings.iter().all(|&x| x == -1), || format!("S12: crossings {:?}", p.crossings));
            t.record(p.moving_sections.iter().all(|&x| x == 2), || format!("S12: moving sections {:?}", p.moving_sections));
            t.record(p.moving_direct == p.moving_sections, || "S12: direct normal count disagrees".to_string());
            t.record(p.boundary_number == (mm + 1) * (mm - 2), || format!("S12 subtotal {}", p.boundary_number));
            t.record(n.total == mm * (mm - 2), || format!("total {}", n.total));
            for d in (2..=m as u32).filter(|d| m % *d as usize == 0) {
                let chi = chi_loc_p1(d, m)?;
                let expected = rational(mm, i64::from(d) * (mm - 1));
                t.record(chi == expected, || format!("chi_loc(d = {d}) = {chi}, expected {expected}"));
                let stored = &p1_germ(d, m)?.horizontal[0].chi;
                t.record(&chi == stored, || format!("chi_loc(d = {d}) differs from the germ record {stored}"));
            }
            let mut details = String::new();
            let (ok, summary) = t.finish();
            write!(details, "{summary}; S12 subtotal {}, total {}", p.boundary_number, n.total).ok();
            Ok((ok, details))
        })();
        checks.push(Check::from_result(format!("boundary numbers, m = {m}"), r));
    }
    let r = (|| {
        let mut t = Tally::new();
        let base = starting_samples();
        for m in [5usize, 8] {
            let sec = |i, j, k| SectionSpec::new(m, i, j, k);
            let cases: Vec<(Vec<SectionSpec>, Vec<SectionSpec>)> = vec![
                (vec![sec(3, 1, 2)?, sec(3, 2, 1)?], vec![sec(3, 4, 5)?, sec(3, 4, 5)?]),
                (vec![sec(1, 2, 4)?], vec![sec(1, 4, 5)?]),
                (vec![sec(1, 4, 2)?], vec![sec(1, 3, 5)?]),
                (vec![sec(4, 1, 3)?, sec(4, 2, 3)?], vec![]),
            ];
            for (a, b) in cases {
                let lp = BoundaryLoop::for_sections(&a);
                let coarse = relative_winding_with(&a, &b, &lp, base)?;
                let fine = relative_winding_with(&a, &b, &lp, 2 * base)?;
                let sparse = relative_winding_with(&a, &b, &lp, MIN_SAMPLES)?;
                t.record(coarse == fine && fine == sparse, || format!("m = {m}: {coarse}, {fine}, {sparse}"));
            }
        }
        Ok(t.finish())
    })();
    checks.push(Check::from_result("windings stable under sample density", r));
    checks
}

fn meyer() -> Vec<Check> {
    let mut checks = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x4d65_7965);
    for g in 1..=3usize {
        let steps = 2 * g + 2;
        let r = (|| {
            let mut t = Tally::new();
            for _ in 0..200 {
                let a = random_symplectic(g, steps, &mut rng);
                let b = random_symplectic(g, steps, &mut rng);
                let c = random_symplectic(g, steps, &mut rng);
                let lhs = meyer_tau(&a, &b)? + meyer_tau(&(&a * &b), &c)?;
                let rhs = meyer_tau(&a, &(&b * &c))? + meyer_tau(&b, &c)?;
                t.record(lhs == rhs, || format!("{lhs} != {rhs}"));
            }
            Ok(t.finish())
        })();
        checks.push(Check::from_result(format!("cocycle identity, g = {g}"), r));
        let r = (|| {
            let mut t = Tally::new();
            for _ in 0..200 {
                let a = random_symplectic(g, steps, &mut rng);
                let b = random_symplectic(g, steps, &mut rng);
                let p = random_symplectic(g, steps, &mut rng);
                let before = meyer_tau(&a, &b)?;
                let after = meyer_tau(&a.conjugate_by(&p), &b.conjugate_by(&p))?;
                t.record(before == after, || format!("{before} != {after}"));
            }
            Ok(t.finish())
        })();
        checks.push(Check::from_result(format!("conjugation invariance, g = {g}"), r));
        let r = (|| {
            let mut t = Tally::new();
            let id = SpMatrix::identity(g);
            for _ in 0..100 {
                let b = random_symplectic(g, steps, &mut rng);
                let v = meyer_tau(&id, &b)?;
                t.record(v == 0, || format!("tau(I, B) = {v}"));
            }
            for _ in 0..100 {
                let a = random_symplectic(g, steps, &mut rng);
                let v = meyer_tau(&a, &a.inverse())?;
                t.record(v == 0, || format!("tau(A, A^-1) = {v}"));
            }
            Ok(t.finish())
        })();
        checks.push(Check::from_result(format!("vanishing cases, g = {g}"), r));
    }
    checks
}

/// Whether `m` is a symplectic transvection `x ↦ x ± ⟨x, c⟩c`.
fn is_transvection(m: &SpMatrix) -> Result<bool> {
    let n = m.matrix() - &IntMatrix::identity(2 * m.genus());
    if n.is_zero() || rational_rank(&n.to_rational()) != 1 {
        return Ok(false);
    }
    let col = (0..n.cols()).map(|j| n.column(j)).find(|c| c.iter().any(|x| !x.is_zero())).expect("rank one");
    let g = col.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let c: Vec<BigInt> = col.iter().map(|x| x / &g).collect();
    Ok(transvection(&c, 1)? == *m || transvection(&c, -1)? == *m)
}

const REPRESENTATION_SPECS: [(u32, usize); 4] = [(2, 4), (2, 6), (3, 3), (3, 6)];

fn representation() -> Vec<Check> {
    let mut checks = Vec::new();
    for (d, m) in REPRESENTATION_SPECS {
        let r = (|| {
            let spec = CoverSpec::p1(d, m)?;
            let size = 2 - 2 * d as i64 + m as i64 * (d as i64 - 1);
            let mut t = Tally::new();
            for i in 1..m {
                for j in i + 1..=m {
                    let a = homology_rep(&spec, &Letter::sigma(i, j))?;
                    t.record(a.matrix().rows() as i64 == size, || format!("s{i},{j} has size {}", a.matrix().rows()));
                    t.record(check_symplectic(a.matrix().clone()).is_ok(), || format!("s{i},{j} not symplectic"));
                    if d == 2 {
                        t.record(is_transvection(&a)?, || format!("s{i},{j} is not a transvection"));
                    }
                }
            }
            let mat = |w: &str| -> Result<SpMatrix> { word_to_matrix(&spec, &w.parse()?) };
            for i in 1..m - 1 {
                let (a, b) = (format!("s{i},{}", i + 1), format!("s{},{}", i + 1, i + 2));
                t.record(mat(&format!("{a} {b} {a}"))? == mat(&format!("{b} {a} {b}"))?, || format!("braid relation at {i}"));
            }
            for i in 1..m {
                for j in i + 2..m {
                    let (a, b) = (format!("s{i},{}", i + 1), format!("s{j},{}", j + 1));
                    t.record(mat(&format!("{a} {b}"))? == mat(&format!("{b} {a}"))?, || format!("commutation of {a}, {b}"));
                }
            }
            for (a, b) in disjoint_pairs(m) {
                let (sa, sb) = (GeneratorWord::from(a), GeneratorWord::from(b));
                let ab = word_to_matrix(&spec, &sa.concat(&sb))?;
                let ba = word_to_matrix(&spec, &sb.concat(&sa))?;
                t.record(ab == ba, || format!("commutation of {a}, {b}"));
            }
            Ok(t.finish())
        })();
        checks.push(Check::from_result(format!("generators and relations, (d, m) = ({d}, {m})"), r));
    }
    checks
}

/// Pairs of half twists along disjoint standard arcs.
fn disjoint_pairs(m: usize) -> Vec<(Letter, Letter)> {
    let mut arcs = Vec::new();
    for i in 1..m {
        for j in i + 1..=m {
            arcs.push(Letter::sigma(i, j));
        }
    }
    let mut out = Vec::new();
    for (n, a) in arcs.iter().enumerate() {
        for b in &arcs[n + 1..] {
            if a.disjoint_from(b) {
                out.push((*a, *b));
            }
        }
    }
    out
}

fn random_word<R: Rng>(m: usize, max_len: usize, rng: &mut R) -> GeneratorWord {
    let len = rng.gen_range(1..=max_len);
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..m);
            let j = rng.gen_range(i + 1..=m);
            let l = Letter::sigma(i, j);
            if rng.gen_bool(0.5) {
                l.inv()
            } else {
                l
            }
        })
        .collect();
    GeneratorWord::from_letters(letters)
}

fn coboundary() -> Vec<Check> {
    let mut checks = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x636f_626f);
    for (d, m) in [(2u32, 6usize), (3, 3)] {
        let r = (|| {
            let table = PhiTable::p1(d, m)?;
            let spec = table.spec().clone();
            let mut t = Tally::new();
            for _ in 0..100 {
                let u = random_word(m, 6, &mut rng);
                let v = random_word(m, 6, &mut rng);
                let uv = u.concat(&v);
                let lhs = phi_word(&table, &u)? + phi_word(&table, &v)? + phi_word(&table, &uv.inverse())?;
                let tau = meyer_tau(&word_to_matrix(&spec, &u)?, &word_to_matrix(&spec, &v)?)?;
                t.record(lhs == integer(tau), || format!("u = {u}, v = {v}: {} vs {tau}", format_rational(&lhs)));
            }
            Ok(t.finish())
        })();
        checks.push(Check::from_result(format!("coboundary on 100 word pairs, (d, m) = ({d}, {m})"), r));
    }
    for (d, m) in [(2u32, 4usize), (2, 6), (3, 3), (3, 6)] {
        let r = (|| {
            let spec = CoverSpec::p1(d, m)?;
            let pinned = pinned_base(&spec)?;
            let expected = closed_form_base(d, m)?;
            Ok((pinned == expected, format!("pinned {pinned}, closed form {expected}")))
        })();
        checks.push(Check::from_result(format!("full rotation pins the base, (d, m) = ({d}, {m})"), r));
    }
    checks
}

fn well_defined() -> Vec<Check> {
    let mut checks = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x7765_6c6c);
    for (d, m) in [(2u32, 4usize), (2, 6), (3, 3), (3, 6)] {
        let r = (|| {
            let table = PhiTable::p1(d, m)?;
            let mut t = Tally::new();
            let mut pairs: Vec<(GeneratorWord, GeneratorWord)> = Vec::new();
            for i in 1..m - 1 {
                let (a, b) = (Letter::sigma(i, i + 1), Letter::sigma(i + 1, i + 2));
                pairs.push((GeneratorWord::from_letters(vec![a, b, a]), GeneratorWord::from_letters(vec![b, a, b])));
            }
            for (a, b) in disjoint_pairs(m) {
                pairs.push((GeneratorWord::from_letters(vec![a, b]), GeneratorWord::from_letters(vec![b, a])));
            }
            for (lhs, rhs) in &pairs {
                let (x, y) = (phi_word(&table, lhs)?, phi_word(&table, rhs)?);
                t.record(x == y, || format!("{lhs}: {x} vs {rhs}: {y}"));
            }
            for _ in 0..50 {
                let w = random_word(m, 4, &mut rng);
                let x = random_word(m, 4, &mut rng);
                let conj = x.concat(&w).concat(&x.inverse());
                let (a, b) = (phi_word(&table, &w)?, phi_word(&table, &conj)?);
                t.record(a == b, || format!("w = {w}, x = {x}: {a} vs {b}"));
            }
            Ok(t.finish())
        })();
        checks.push(Check::from_result(format!("relations and conjugations, (d, m) = ({d}, {m})"), r));
    }
    checks
}

fn gsign_bookkeeping() -> Vec<Check> {
    let r = (|| {
        let mut t = Tally::new();
        for (d, m) in p1_range() {
            let germ = p1_germ(d, m)?;
            let total: Rational = total_signature(&germ.to_action_data()?)?;
            let expected = -closed_form_base(d, m)?;
            t.record(total == expected, || format!("(d, m) = ({d}, {m}): {total} vs {expected}"));
            t.record(total == sigma_loc(&germ)?, || format!("(d, m) = ({d}, {m}): assembly disagrees"));
        }
        Ok(t.finish())
    })();
    vec![Check::from_result("total signature of the tangency germ", r)]
}

/// Whether every check of every suite passed.
pub fn summary(results: &[(&SuiteInfo, Vec<Check>)]) -> bool {
    results.iter().all(|(_, c)| all_pass(c))
}
