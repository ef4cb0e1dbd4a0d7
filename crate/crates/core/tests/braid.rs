mod common;

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use uqgl::braid::{braid_t, braid_t_inv, root_vector_via_braid, BraidError};
use uqgl::pbwcore::relations::{prop86_relations, Letter};
use uqgl::pbwcore::{k_alpha_vector, k_monomial, Element, GenMap, Kind};
use uqgl::rootdata::Shape;
use uqgl::scalars::RatFunc;

fn even_nodes(s: Shape) -> Vec<usize> {
    (1..s.rank()).filter(|&i| i != s.m).collect()
}

#[test]
fn table_values() {
    let s = sh(2, 1);
    let k = k_monomial(s, &k_alpha_vector(s, 1, 1)).unwrap();
    assert_eq!(braid_t(1, &e(s, 1, 2)).unwrap(), -&(&f(s, 1, 2) * &k));
    let k1 = k_monomial(s, &[1, 0, 0]).unwrap();
    assert_eq!(braid_t(1, &k1).unwrap(), k_monomial(s, &[0, 1, 0]).unwrap());
    assert_eq!(braid_t(2, &k1), Err(BraidError::BraidAtOddNode(2)));
}

#[test]
fn inverse_law() {
    for &(m, n) in &[(2, 1), (2, 2), (3, 1), (1, 2)] {
        let s = sh(m, n);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for i in even_nodes(s) {
            for _ in 0..100 / even_nodes(s).len() + 1 {
                let x = random_element(s, &mut rng, 3, 2);
                assert_eq!(braid_t_inv(i, &braid_t(i, &x).unwrap()).unwrap(), x);
                assert_eq!(braid_t(i, &braid_t_inv(i, &x).unwrap()).unwrap(), x);
            }
        }
    }
}

#[test]
fn braid_preserves_relations() {
    for &(m, n) in &[(2, 1), (2, 2), (3, 1)] {
        let s = sh(m, n);
        for i in even_nodes(s) {
            for inverse in [false, true] {
                let img = |l: &Letter| {
                    let x = l.element(s);
                    if inverse { braid_t_inv(i, &x).unwrap() } else { braid_t(i, &x).unwrap() }
                };
                let mul = |a: &Element, b: &Element| a * b;
                let add = |a: &Element, b: &Element| a + b;
                let scale = |a: &Element, c: &RatFunc| a.scale(c);
                let ops = GenMap {
                    image: &img,
                    mul: &mul,
                    add: &add,
                    scale: &scale,
                    zero: Element::zero(s),
                    one: Element::one(s),
                };
                for r in prop86_relations(s) {
                    assert!(r.evaluate_with(&ops).is_zero(), "({m},{n}) T{i} inv={inverse} {} {}", r.family, r.label);
                }
            }
        }
    }
}

#[test]
fn omega_commutes_with_braid() {
    for &(m, n) in &[(2, 1), (2, 2), (3, 1)] {
        let s = sh(m, n);
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for i in even_nodes(s) {
            for _ in 0..50 {
                let x = random_element(s, &mut rng, 3, 2);
                assert_eq!(braid_t(i, &x).unwrap().omega(), braid_t(i, &x.omega()).unwrap());
            }
        }
    }
}

#[test]
fn braid_is_even() {
    let s = sh(2, 2);
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let odd = [e(s, 2, 3), f(s, 2, 3), e(s, 1, 3), f(s, 2, 4), e(s, 1, 4)];
    for i in even_nodes(s) {
        for a in &odd {
            for b in &odd {
                assert_eq!(braid_t(i, &(a * b)).unwrap(), &braid_t(i, a).unwrap() * &braid_t(i, b).unwrap());
            }
        }
        for _ in 0..20 {
            let (dx, dy) = (rng.gen_range(0..3), rng.gen_range(0..3));
            let x = mono_el(s, random_monomial(s, &mut rng, dx));
            let y = mono_el(s, random_monomial(s, &mut rng, dy));
            assert_eq!(braid_t(i, &(&x * &y)).unwrap(), &braid_t(i, &x).unwrap() * &braid_t(i, &y).unwrap());
        }
    }
}

/// Every admissible chain (i ≤ k < j, no T at the odd node) reproduces the root vector.
#[test]
fn composite_root_vectors_from_braids() {
    for &(m, n) in &[(2, 2), (3, 1)] {
        let s = sh(m, n);
        let mut checked = 0;
        for i in 1..=s.rank() {
            for j in i + 2..=s.rank() {
                for k in i..j {
                    let touches = (i..k).chain(k + 1..j).any(|t| t == s.m);
                    for kind in [Kind::E, Kind::F] {
                        let got = root_vector_via_braid(s, kind, i, j, k);
                        if touches {
                            assert_eq!(got, Err(BraidError::BraidAtOddNode(s.m)));
                            continue;
                        }
                        let want = if kind == Kind::E { e(s, i, j) } else { f(s, i, j) };
                        assert_eq!(got.unwrap(), want, "({m},{n}) {kind:?}{i}{j} via {k}");
                        checked += 1;
                    }
                }
            }
        }
        assert!(checked >= 4, "({m},{n}) only {checked}");
    }
    let s = sh(2, 2);
    assert_eq!(root_vector_via_braid(s, Kind::E, 1, 4, 2).unwrap(), e(s, 1, 4));
    assert_eq!(root_vector_via_braid(s, Kind::F, 1, 4, 2).unwrap(), f(s, 1, 4));
}
