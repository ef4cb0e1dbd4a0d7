mod common;

use common::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use uqgl::expr::{parse, parse_element, print_canonical, ExprAst, ExprError, GenAtom};
use uqgl::pbwcore::{divided_power, Element, Kind};
use uqgl::scalars::RatFunc;

#[test]
fn grammar_examples() {
    let s = sh(2, 1);
    assert_eq!(
        parse("E[1,2]^(2)", s).unwrap(),
        ExprAst::DividedPower(Box::new(ExprAst::Gen(GenAtom::E(1, 2))), 2)
    );
    assert_eq!(
        parse("q^-1 * F[2,3] E[1,2]", s).unwrap(),
        ExprAst::Product(vec![
            ExprAst::Scalar(RatFunc::q_pow(-1)),
            ExprAst::Gen(GenAtom::F(2, 3)),
            ExprAst::Gen(GenAtom::E(1, 2)),
        ])
    );
    assert!(matches!(parse("E[1,4]", s), Err(ExprError::IndexOutOfShape { .. })));
    assert!(matches!(parse("E[1,2]^(-1)", s), Err(ExprError::NegativeDividedPower { offset: 8 })));
}

#[test]
fn syntax_errors_carry_offsets() {
    let s = sh(2, 1);
    assert_eq!(parse("E[1,2] +", s), Err(ExprError::Syntax { offset: 8, msg: "unexpected end of input".into() }));
    assert!(matches!(parse("E[1 2]", s), Err(ExprError::Syntax { offset: 4, .. })));
    assert!(matches!(parse("", s), Err(ExprError::Syntax { offset: 0, .. })));
    assert!(matches!(parse("X", s), Err(ExprError::Syntax { offset: 0, .. })));
    assert!(matches!(parse("(E[1,2]", s), Err(ExprError::Syntax { offset: 7, .. })));
    assert!(matches!(parse("E[2,1]", s), Err(ExprError::IndexOutOfShape { .. })));
    assert!(matches!(parse("K[0]", s), Err(ExprError::IndexOutOfShape { offset: 2, .. })));
}

#[test]
fn evaluation() {
    let s = sh(2, 1);
    assert_eq!(parse_element("E[1,2]^(2)", s).unwrap(), divided_power(s, Kind::E, 1, 2, 2).unwrap());
    assert_eq!(parse_element("K[1]*Kinv[1]", s).unwrap(), Element::one(s));
    assert_eq!(parse_element("Ka[1]", s).unwrap(), parse_element("K[1] Kinv[2]", s).unwrap());
    assert_eq!(parse_element("K[1]^-2 K[1]^2", s).unwrap(), Element::one(s));
    assert_eq!(parse_element("E[1,2]/(q+q^-1)*(q+q^-1)", s).unwrap(), e(s, 1, 2));
    assert_eq!(parse_element("E[1,2]/E[1,2]", s), Err(ExprError::NonScalarDivisor));
    assert_eq!(parse_element("E[1,2]/(q-q)", s), Err(ExprError::DivisionByZero));
    assert_eq!(parse_element("E[1,2]^-1", s), Err(ExprError::NegativePower));
    assert!(parse_element("E[1,3]^(2)", s).is_err());
    assert_eq!(parse_element("-E[1,2] + E[1,2]", s).unwrap(), Element::zero(s));
    assert_eq!(
        parse_element("Kb[1;0;1]", s).unwrap(),
        uqgl::pbwcore::kbracket_element(s, 1, 0, 1).unwrap()
    );
}

#[test]
fn printer_examples() {
    let s = sh(2, 1);
    assert_eq!(print_canonical(&Element::zero(s)), "0");
    let x = &(&f(s, 1, 2) * &parse_element("K[1]", s).unwrap()) * &e(s, 1, 3);
    assert_eq!(print_canonical(&x), "F[1,2]*K[1]*E[1,3]");
    let y = e(s, 1, 2).scale(&(&q(1) + &q(-1)));
    assert_eq!(print_canonical(&y), "(q + q^-1)*E[1,2]");
    let s11 = sh(1, 1);
    let z = parse_element("E[1,2]*F[1,2]", s11).unwrap();
    assert_eq!(z.len(), 3);
    assert_eq!(print_canonical(&-&e(s, 1, 2)), "-E[1,2]");
}

#[test]
fn round_trip_random_elements() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..300 {
        let (m, n) = SHAPES[i % SHAPES.len()];
        let s = sh(m, n);
        let mut x = random_element(s, &mut rng, 4, 3);
        if i % 7 == 0 {
            x = x.scale(&(&q(2) + &int(3)).inv().unwrap());
        }
        let text = print_canonical(&x);
        let back = parse_element(&text, s).unwrap_or_else(|err| panic!("{text}: {err}"));
        assert_eq!(back, x, "{text}");
    }
}
