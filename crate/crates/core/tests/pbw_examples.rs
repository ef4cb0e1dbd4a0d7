use uqgl::pbwcore::{generator, k_alpha, k_monomial, Element, Kind};
use uqgl::rootdata::Shape;
use uqgl::scalars::RatFunc;

fn sh(m: usize, n: usize) -> Shape {
    Shape::new(m, n).unwrap()
}

fn e(s: Shape, i: usize, j: usize) -> Element {
    generator(s, Kind::E, i, j).unwrap()
}

fn f(s: Shape, i: usize, j: usize) -> Element {
    generator(s, Kind::F, i, j).unwrap()
}

fn q(k: i64) -> RatFunc {
    RatFunc::q_pow(k)
}

#[test]
fn odd_simple_squares_to_zero() {
    let s = sh(2, 1);
    assert!((&e(s, 2, 3) * &e(s, 2, 3)).is_zero());
    assert!((&f(s, 2, 3) * &f(s, 2, 3)).is_zero());
}

#[test]
fn gl11_e_times_f() {
    let s = sh(1, 1);
    let lhs = &e(s, 1, 2) * &f(s, 1, 2);
    let fe = &f(s, 1, 2) * &e(s, 1, 2);
    let d = &q(1) - &q(-1);
    let ka = k_alpha(s, 1, 1).unwrap();
    let kai = k_alpha(s, 1, -1).unwrap();
    let rhs = &(-&fe) + &(&ka - &kai).scale(&d.inv().unwrap());
    assert_eq!(lhs, rhs);
}

#[test]
fn gl21_e23_e12() {
    let s = sh(2, 1);
    let lhs = &e(s, 2, 3) * &e(s, 1, 2);
    let rhs = &(&e(s, 1, 2) * &e(s, 2, 3)).scale(&q(1)) - &e(s, 1, 3).scale(&q(1));
    assert_eq!(lhs, rhs);
    // E12 E23 is already a basis monomial
    assert_eq!((&e(s, 1, 2) * &e(s, 2, 3)).len(), 1);
}

#[test]
fn k_past_e() {
    let s = sh(2, 1);
    let k1 = k_monomial(s, &[1, 0, 0]).unwrap();
    let lhs = &k1 * &e(s, 1, 2);
    let rhs = (&e(s, 1, 2) * &k1).scale(&q(1));
    assert_eq!(lhs, rhs);
}

#[test]
fn composite_e_against_simple_f() {
    let s = sh(2, 1);
    let alg = uqgl::pbwcore::Algebra::get(s);
    let r = alg.table.id(1, 3).unwrap();
    let a = alg.cross_expanded(r, 1);
    let b = alg.cross_closed_form(r, 1);
    assert_eq!(a, b);
}
