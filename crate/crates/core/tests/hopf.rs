mod common;

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use uqgl::hopf::{
    antipode, antipode_left_contract, antipode_right_contract, coassociativity_sides, counit, counit_sides, delta,
    TensorElement,
};
use uqgl::pbwcore::relations::{prop86_relations, Letter};
use uqgl::pbwcore::{divided_power, k_alpha_vector, k_monomial, Element, GenMap, Kind};
use uqgl::rootdata::Shape;
use uqgl::scalars::RatFunc;

fn ka(s: Shape, i: usize, e: i64) -> Element {
    k_monomial(s, &k_alpha_vector(s, i, e)).unwrap()
}

fn generators(s: Shape) -> Vec<Element> {
    let mut v = Vec::new();
    for c in 1..s.rank() {
        v.push(e(s, c, c + 1));
        v.push(f(s, c, c + 1));
    }
    for j in 0..s.rank() {
        let mut mu = vec![0; s.rank()];
        mu[j] = 1;
        v.push(k_monomial(s, &mu).unwrap());
        mu[j] = -1;
        v.push(k_monomial(s, &mu).unwrap());
    }
    v
}

#[test]
fn delta_of_simple_e() {
    let s = sh(2, 1);
    let x = e(s, 1, 2);
    let want = &TensorElement::pure(&x, &ka(s, 1, 1)) + &TensorElement::pure(&Element::one(s), &x);
    assert_eq!(delta(&x), want);
    assert_eq!(delta(&Element::one(s)), TensorElement::one(s));
}

#[test]
fn delta_of_divided_square() {
    for &(m, n) in &[(2, 1), (1, 2)] {
        let s = sh(m, n);
        // an even simple root
        let i = if m >= 2 { 1 } else { 2 };
        let x = e(s, i, i + 1);
        let x2 = divided_power(s, Kind::E, i, i + 1, 2).unwrap();
        let k = ka(s, i, 1);
        let qi = q(-(s.q_sign(i) as i64));
        let want = &(&TensorElement::pure(&x2, &(&k * &k)) + &TensorElement::pure(&x, &(&k * &x)).scale(&qi))
            + &TensorElement::pure(&Element::one(s), &x2);
        assert_eq!(delta(&x2), want, "({m},{n})");
    }
}

#[test]
fn tensor_sign_rule() {
    let s = sh(1, 1);
    let one = Element::one(s);
    let x = e(s, 1, 2);
    let y = f(s, 1, 2);
    let l = &TensorElement::pure(&one, &x) * &TensorElement::pure(&y, &one);
    assert_eq!(l, TensorElement::pure(&y, &x).scale(&int(-1)));
    let r = &TensorElement::pure(&x, &one) * &TensorElement::pure(&one, &y);
    assert_eq!(r, TensorElement::pure(&x, &y));
    let u = TensorElement::one(s);
    assert_eq!(&u * &l, l);
}

#[test]
fn delta_preserves_relations() {
    for &(m, n) in &[(1, 1), (2, 1), (2, 2)] {
        let s = sh(m, n);
        let img = |l: &Letter| delta(&l.element(s));
        let mul = |a: &TensorElement, b: &TensorElement| a * b;
        let add = |a: &TensorElement, b: &TensorElement| a + b;
        let scale = |a: &TensorElement, c: &RatFunc| a.scale(c);
        let ops = GenMap {
            image: &img,
            mul: &mul,
            add: &add,
            scale: &scale,
            zero: TensorElement::zero(s),
            one: TensorElement::one(s),
        };
        for r in prop86_relations(s) {
            assert!(r.evaluate_with(&ops).is_zero(), "({m},{n}) {} {}", r.family, r.label);
        }
    }
}

#[test]
fn delta_is_multiplicative_on_random_pairs() {
    for &(m, n) in &[(1, 1), (2, 1), (1, 2)] {
        let s = sh(m, n);
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for _ in 0..20 {
            let x = random_element(s, &mut rng, 2, 2);
            let y = random_element(s, &mut rng, 2, 2);
            assert_eq!(delta(&(&x * &y)), &delta(&x) * &delta(&y));
        }
    }
}

#[test]
fn coassociativity_and_counit() {
    for &(m, n) in &[(1, 1), (2, 1), (2, 2)] {
        let s = sh(m, n);
        let mut items = generators(s);
        let mut rng = ChaCha8Rng::seed_from_u64(5 + m as u64);
        let trials = if (m, n) == (2, 2) { 15 } else { 50 };
        for _ in 0..trials {
            items.push(random_element(s, &mut rng, 3, 2));
        }
        for a in &items {
            let (l, r) = coassociativity_sides(a);
            assert_eq!(l, r, "({m},{n}) coassoc {a:?}");
            let (cl, cr) = counit_sides(a);
            assert_eq!(&cl, a);
            assert_eq!(&cr, a);
        }
    }
}

#[test]
fn antipode_axioms() {
    for &(m, n) in &[(1, 1), (2, 1), (2, 2), (1, 2)] {
        let s = sh(m, n);
        let mut items = generators(s);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..10 {
            items.push(random_element(s, &mut rng, 2, 2));
        }
        for a in &items {
            let want = Element::scalar(s, counit(a));
            assert_eq!(antipode_left_contract(a), want, "({m},{n}) S*id {a:?}");
            assert_eq!(antipode_right_contract(a), want, "({m},{n}) id*S {a:?}");
        }
    }
    let s = sh(2, 1);
    let mut mu = vec![0; 3];
    mu[0] = 1;
    let k1 = k_monomial(s, &mu).unwrap();
    mu[0] = -1;
    assert_eq!(antipode(&k1), k_monomial(s, &mu).unwrap());
    assert_eq!(counit(&k_monomial(s, &[1, -1, 0]).unwrap()), RatFunc::one());
    assert!(antipode_left_contract(&f(s, 1, 2)).is_zero());
}

#[test]
fn antipode_is_graded_antihomomorphism() {
    let s = sh(2, 1);
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..30 {
        let (dx, dy) = (rng.gen_range(0..3), rng.gen_range(0..3));
        let x = mono_el(s, random_monomial(s, &mut rng, dx));
        let y = mono_el(s, random_monomial(s, &mut rng, dy));
        let sign = if x.parity() == Some(1) && y.parity() == Some(1) { -1 } else { 1 };
        assert_eq!(antipode(&(&x * &y)), (&antipode(&y) * &antipode(&x)).scale(&int(sign)));
    }
}

#[test]
fn coproduct_triangularity() {
    for &(m, n) in SHAPES.iter() {
        let s = sh(m, n);
        let mut rng = ChaCha8Rng::seed_from_u64(400 + (m * 10 + n) as u64);
        for _ in 0..25 {
            let len = rng.gen_range(1..=4);
            let word: Vec<usize> = (0..len).map(|_| rng.gen_range(1..s.rank())).collect();
            let mut ei = Element::one(s);
            let mut kw = vec![0i64; s.rank()];
            for &c in &word {
                ei = &ei * &e(s, c, c + 1);
                for (a, b) in kw.iter_mut().zip(k_alpha_vector(s, c, 1)) {
                    *a += b;
                }
            }
            let d = delta(&ei);
            let mut right_k = TensorElement::zero(s);
            let mut left_one = TensorElement::zero(s);
            for ((a, b), c) in d.terms() {
                if b.degree() == 0 {
                    right_k.add_term(a.clone(), b.clone(), c.clone());
                }
                if a.is_identity() {
                    left_one.add_term(a.clone(), b.clone(), c.clone());
                }
            }
            let k = k_monomial(s, &kw).unwrap();
            assert_eq!(right_k, TensorElement::pure(&ei, &k), "({m},{n}) {word:?}");
            assert_eq!(left_one, TensorElement::pure(&Element::one(s), &ei), "({m},{n}) {word:?}");
        }
    }
}

#[test]
fn omega_bar_intertwines_delta() {
    for &(m, n) in &[(1, 1), (2, 1), (2, 2)] {
        let s = sh(m, n);
        let mut items = generators(s);
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..15 {
            items.push(random_element(s, &mut rng, 3, 2));
        }
        for a in &items {
            assert_eq!(delta(a).omega_bar(), delta(&a.omega()), "({m},{n}) {a:?}");
        }
    }
}
