#![allow(dead_code)]

use rand_chacha::ChaCha8Rng;
use uqgl::pbwcore::{generator, Element, Kind, Monomial};
use uqgl::rootdata::Shape;
use uqgl::scalars::RatFunc;

pub const SHAPES: [(usize, usize); 5] = [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1)];

pub fn sh(m: usize, n: usize) -> Shape {
    Shape::new(m, n).unwrap()
}

pub fn e(s: Shape, i: usize, j: usize) -> Element {
    generator(s, Kind::E, i, j).unwrap()
}

pub fn f(s: Shape, i: usize, j: usize) -> Element {
    generator(s, Kind::F, i, j).unwrap()
}

pub fn q(k: i64) -> RatFunc {
    RatFunc::q_pow(k)
}

pub fn int(k: i64) -> RatFunc {
    RatFunc::from_int(k)
}

/// Random PBW monomial with `deg` E/F atoms and small K exponents.
pub fn random_monomial(s: Shape, rng: &mut ChaCha8Rng, deg: u32) -> Monomial {
    uqgl::checks::random_monomial(s, rng, deg)
}

pub fn mono_el(s: Shape, m: Monomial) -> Element {
    Element::from_monomial(s, m, RatFunc::one())
}

/// Small random element: a few monomials with coefficients in {±1, ±2}·q^k.
pub fn random_element(s: Shape, rng: &mut ChaCha8Rng, max_deg: u32, n_terms: usize) -> Element {
    uqgl::checks::random_element(s, rng, max_deg, n_terms)
}
