mod common;

use common::*;
use uqgl::checks::{bracket_shift_identities, kac_formula, lemma81_identities};
use uqgl::pbwcore::{divided_power, k_alpha, kbracket_element, Element, Kind, PbwError};
use uqgl::scalars::RatFunc;

const SMALL: [(usize, usize); 6] = [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1), (1, 3)];

#[test]
fn straightening_identities() {
    for &(m, n) in SMALL.iter() {
        let c = lemma81_identities(sh(m, n), 3).unwrap_or_else(|e| panic!("({m},{n}): {e}"));
        assert!(c > 0);
    }
}

#[test]
fn kac_formula_holds() {
    for &(m, n) in SMALL.iter() {
        kac_formula(sh(m, n), 3).unwrap_or_else(|e| panic!("({m},{n}): {e}"));
    }
}

#[test]
fn bracket_shifts() {
    for &(m, n) in &[(1, 1), (2, 1), (1, 2), (2, 2)] {
        bracket_shift_identities(sh(m, n), 2).unwrap_or_else(|e| panic!("({m},{n}): {e}"));
    }
}

#[test]
fn divided_power_examples() {
    let s = sh(3, 1);
    assert_eq!(divided_power(s, Kind::E, 1, 2, 0).unwrap(), Element::one(s));
    let two = &q(1) + &q(-1);
    let want = (&e(s, 1, 2) * &e(s, 1, 2)).scale(&two.inv().unwrap());
    assert_eq!(divided_power(s, Kind::E, 1, 2, 2).unwrap(), want);
    let s = sh(2, 2);
    assert_eq!(divided_power(s, Kind::E, 1, 4, 2), Err(PbwError::OddPowerTooHigh(1, 4, 2)));
}

#[test]
fn bracket_element_examples() {
    let s = sh(2, 1);
    assert_eq!(kbracket_element(s, 1, 5, 0).unwrap(), Element::one(s));
    let d = (&q(1) - &q(-1)).inv().unwrap();
    let want = (&k_alpha(s, 1, 1).unwrap() - &k_alpha(s, 1, -1).unwrap()).scale(&d);
    assert_eq!(kbracket_element(s, 1, 0, 1).unwrap(), want);
    // i = m+n = 3 sits in the odd block, so q_3 = q^-1
    let q3 = q(-1);
    let d3 = (&q3 - &q3.inv().unwrap()).inv().unwrap();
    let k3 = k_alpha(s, 3, 1).unwrap();
    let k3i = k_alpha(s, 3, -1).unwrap();
    let want = (&k3.scale(&q3) - &k3i.scale(&q3.inv().unwrap())).scale(&d3);
    assert_eq!(kbracket_element(s, 3, 1, 1).unwrap(), want);
}

#[test]
fn a_form_examples() {
    let s = sh(2, 1);
    let x = divided_power(s, Kind::E, 1, 2, 3).unwrap();
    let c = x.a_form_coords().unwrap();
    assert_eq!(c.len(), 1);
    assert!(c.values().next().unwrap().is_one());
    let half = e(s, 1, 2).scale(&(&q(1) + &q(-1)).inv().unwrap());
    assert!(matches!(half.a_form_coords(), Err(PbwError::NotIntegral { .. })));
    let p = &divided_power(s, Kind::E, 1, 2, 2).unwrap() * &divided_power(s, Kind::F, 1, 2, 2).unwrap();
    assert!(p.a_form_coords().is_ok());
    let half_int = Element::scalar(s, RatFunc::from_rational(num_rational::BigRational::new(1.into(), 2.into())));
    assert!(half_int.a_form_coords().is_err());
}
