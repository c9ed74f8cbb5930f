//! Values computed outside this crate and frozen here.
//!
//! `fixtures/meyer_tau.json` comes from a symbolic kernel computation with a
//! floating eigenvalue count; `fixtures/trig60.json` holds 60-digit values of
//! `cosec²(πp/q)` and `cot(πp/q)`.

use germsig::coverrep::{homology_rep, word_to_matrix, CoverSpec, GeneratorWord, Letter};
use germsig::exact::{cosec2_half, cot_half, form_signature, integer, rational, AlgReal, Angle, Rational};
use germsig::linalg::RatMatrix;
use germsig::localsig::{p1_germ, phi_word, sigma_loc, PhiTable};
use germsig::symplectic::{check_symplectic, matrix_from_json, meyer_tau};
use germsig::winding::{boundary_numbers, chi_loc_p1};
use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::Value;

fn fixture(name: &str) -> Value {
    let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn meyer_fixture() {
    let cases = fixture("meyer_tau.json");
    let cases = cases["cases"].as_array().unwrap();
    assert!(cases.len() > 30);
    for case in cases {
        let a = check_symplectic(matrix_from_json(&case["a"]).unwrap()).unwrap();
        let b = check_symplectic(matrix_from_json(&case["b"]).unwrap()).unwrap();
        assert_eq!(meyer_tau(&a, &b).unwrap(), case["tau"].as_i64().unwrap(), "{case}");
    }
}

#[test]
fn quarter_turn_fixture() {
    let case = fixture("meyer_g1.json");
    let a = check_symplectic(matrix_from_json(&case["a"]).unwrap()).unwrap();
    let b = check_symplectic(matrix_from_json(&case["b"]).unwrap()).unwrap();
    assert_eq!(meyer_tau(&a, &b).unwrap(), case["tau"].as_i64().unwrap());
    assert_eq!(fixture("meyer_tau.json")["cases"][0], case);
}

fn parse_decimal(s: &str) -> Rational {
    let (neg, body) = s.strip_prefix('-').map_or((false, s), |b| (true, b));
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    let digits: BigInt = format!("{int}{frac}").parse().unwrap();
    let r = Rational::new(digits, BigInt::from(10).pow(frac.len() as u32));
    if neg {
        -r
    } else {
        r
    }
}

fn within(x: &AlgReal, target: &Rational, tol: &Rational) {
    let (lo, hi) = x.enclose(240);
    assert!(&hi - &lo < *tol, "enclosure too wide");
    assert!((&lo - target).abs() < *tol && (&hi - target).abs() < *tol, "{x} vs {target}");
}

#[test]
fn trig_fixture_to_fifty_digits() {
    let data = fixture("trig60.json");
    let tol = Rational::new(BigInt::from(1), BigInt::from(10).pow(50));
    let angles = data["angles"].as_array().unwrap();
    assert_eq!(angles.len(), 100);
    for a in angles {
        let (p, q) = (a["num"].as_i64().unwrap(), a["den"].as_i64().unwrap());
        // ψ = 2πp/q, so ψ/2 = πp/q.
        let psi = Angle::new(p, q).unwrap();
        if psi.is_at_most_half_turn() {
            within(&cosec2_half(&psi).unwrap(), &parse_decimal(a["cosec2_half"].as_str().unwrap()), &tol);
        }
        within(&cot_half(&psi).unwrap(), &parse_decimal(a["cot_half"].as_str().unwrap()), &tol);
    }
}

#[test]
fn exact_values() {
    let cot = cot_half(&Angle::new(1, 3).unwrap()).unwrap();
    assert_eq!((&cot * &cot).as_rational().unwrap(), rational(1, 3));
    let hz: AlgReal = (1..5).map(|h| cosec2_half(&Angle::new(h, 5).unwrap()).unwrap()).sum();
    assert_eq!(hz.as_rational().unwrap(), integer(8));
    let x = AlgReal::one() - cosec2_half(&Angle::new(1, 3).unwrap()).unwrap();
    assert_eq!(x.as_rational().unwrap(), rational(-1, 3));
    let m = RatMatrix::from_rows(vec![vec![integer(2), integer(1)], vec![integer(1), integer(2)]]).unwrap();
    assert_eq!(form_signature(&m).unwrap(), 2);
}

#[test]
fn representation_values() {
    let spec = CoverSpec::p1(2, 4).unwrap();
    let m = homology_rep(&spec, &Letter::sigma(1, 2)).unwrap();
    let n = m.matrix() - &germsig::linalg::IntMatrix::identity(2);
    assert!((&n * &n).is_zero());
    let spec = CoverSpec::p1(3, 3).unwrap();
    let s = homology_rep(&spec, &Letter::sigma(1, 2)).unwrap();
    assert!(s.pow(6).is_identity());
    assert!(!s.pow(3).is_identity() && !s.pow(2).is_identity());
    // (σ₁₂σ₂₃)³ is the full rotation of three points.
    let w: GeneratorWord = "s12 s23 s12 s23 s12 s23".parse().unwrap();
    assert!(word_to_matrix(&spec, &w).unwrap().is_identity());
}

#[test]
fn germ_values() {
    assert_eq!(sigma_loc(&p1_germ(2, 6).unwrap()).unwrap(), rational(-3, 5));
    assert_eq!(sigma_loc(&p1_germ(3, 3).unwrap()).unwrap(), rational(-4, 3));
    let g = p1_germ(2, 6).unwrap();
    assert_eq!(g.horizontal.len(), 1);
    assert_eq!(g.horizontal[0].psi, Angle::half_turn());
    assert_eq!(g.horizontal[0].chi, rational(3, 5));
    let g = p1_germ(3, 3).unwrap();
    assert_eq!(g.horizontal.len(), 2);
    assert!(g.horizontal.iter().all(|e| e.chi == rational(1, 2)));
    for gen in 1..=5i64 {
        let m = 2 * gen as usize + 2;
        let table = PhiTable::p1(2, m).unwrap();
        let v = phi_word(&table, &"s12".parse().unwrap()).unwrap();
        assert_eq!(v, rational(gen + 1, 2 * gen + 1));
    }
    for (d, m) in [(2, 4), (2, 6), (3, 3), (3, 6)] {
        let table = PhiTable::p1(d, m).unwrap();
        let inv = phi_word(&table, &"s12^-1".parse().unwrap()).unwrap();
        assert_eq!(inv, sigma_loc(&p1_germ(d, m).unwrap()).unwrap());
    }
}

#[test]
fn winding_values() {
    assert_eq!(chi_loc_p1(2, 6).unwrap(), rational(3, 5));
    assert_eq!(chi_loc_p1(3, 3).unwrap(), rational(1, 2));
    let n = boundary_numbers(4).unwrap();
    let fixed: i64 = n.fixed_points.iter().map(|f| f.boundary_number).sum();
    assert_eq!((fixed, n.exchanged_pair.boundary_number, n.total), (-2, 10, 8));
}
