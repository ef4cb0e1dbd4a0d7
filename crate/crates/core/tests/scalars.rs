use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use uqgl::scalars::{
    binomial, evaluate_at_root, gauss_binomial, gauss_int, kbracket_scalar, CycloField, LaurentInt, RatFunc,
};

fn lint(terms: &[(i64, i64)]) -> LaurentInt {
    let mut x = LaurentInt::zero();
    for &(e, c) in terms {
        x = &x + &LaurentInt::monomial(BigInt::from(c), e);
    }
    x
}

#[test]
fn gauss_examples() {
    assert_eq!(gauss_int(1, 1), LaurentInt::one());
    assert_eq!(gauss_int(2, 1), lint(&[(1, 1), (-1, 1)]));
    assert_eq!(gauss_int(3, -1), lint(&[(2, 1), (0, 1), (-2, 1)]));
    assert_eq!(gauss_int(-3, 1), -&gauss_int(3, 1));
    assert_eq!(gauss_binomial(4, 2, 1), lint(&[(4, 1), (2, 1), (0, 2), (-2, 1), (-4, 1)]));
    assert_eq!(gauss_binomial(7, 0, -1), LaurentInt::one());
    assert_eq!(gauss_binomial(5, 5, 1), LaurentInt::one());
    assert!(gauss_binomial(2, 3, 1).is_zero());
}

#[test]
fn binomial_at_one_and_bar_symmetry() {
    for m in 0..=8u32 {
        for n in 0..=m {
            let g = gauss_binomial(m, n, 1);
            assert_eq!(g.at_one(), binomial(m as u64, n as u64));
            assert_eq!(g.bar(), g);
        }
        assert_eq!(gauss_int(m as i64, 1).bar(), gauss_int(m as i64, 1));
    }
}

#[test]
fn bracket_scalar_matches_binomial() {
    assert!(kbracket_scalar(4, -1, 0, 1).is_one());
    assert!(kbracket_scalar(1, 0, 1, 1).is_one());
    assert!(kbracket_scalar(2, 0, 2, 1).is_one());
    for z in -3..=8i64 {
        for c in -3..=3i64 {
            let top = z + c;
            if !(0..=8).contains(&top) {
                continue;
            }
            for t in 0..=top as u32 {
                for sign in [1, -1] {
                    let want = RatFunc::from_laurent_int(&gauss_binomial(top as u32, t, sign));
                    assert_eq!(kbracket_scalar(z, c, t, sign), want, "z={z} c={c} t={t}");
                }
            }
        }
    }
}

#[test]
fn root_of_unity_examples() {
    let f = CycloField::new(3).unwrap();
    assert_eq!(evaluate_at_root(&RatFunc::q_pow(3), 3).unwrap(), f.one());
    let three = RatFunc::from_laurent_int(&gauss_int(3, 1));
    assert!(evaluate_at_root(&three, 3).unwrap().is_zero());
    // 1/(η−1) = −(η+2)/3, since (η−1)(η+2) = η² + η − 2 = −3
    let x = &RatFunc::one() / &(&RatFunc::q_pow(1) - &RatFunc::one());
    let want = &(&f.eta_pow(1) + &f.from_int(2)) / &f.from_int(-3);
    assert_eq!(evaluate_at_root(&x, 3).unwrap(), want);
    let pole = &RatFunc::one() / &RatFunc::from_laurent_int(&gauss_int(3, 1));
    assert!(evaluate_at_root(&pole, 3).is_err());
    assert!(CycloField::new(4).is_err());
    assert!(CycloField::new(1).is_err());
}

fn ratfunc_strategy() -> impl Strategy<Value = RatFunc> {
    (prop::collection::vec(-3i64..=3, 1..4), -2i64..=2, prop::collection::vec(-2i64..=2, 1..3), 1i64..=3).prop_map(
        |(num, lo, den, dd)| {
            let mk = |c: &[i64], lo: i64| {
                let mut x = RatFunc::zero();
                for (k, &v) in c.iter().enumerate() {
                    x = &x + &(&RatFunc::from_int(v) * &RatFunc::q_pow(lo + k as i64));
                }
                x
            };
            let d = &mk(&den, 0) + &RatFunc::from_rational(BigRational::new(BigInt::from(1), BigInt::from(dd)));
            let d = if d.is_zero() { RatFunc::one() } else { d };
            &mk(&num, lo) / &d
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ratfunc_field_axioms(a in ratfunc_strategy(), b in ratfunc_strategy(), c in ratfunc_strategy()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
        prop_assert_eq!(a.bar().bar(), a.clone());
    }

    #[test]
    fn cyclo_field_axioms(a in ratfunc_strategy(), b in ratfunc_strategy(), c in ratfunc_strategy(), l in prop::sample::select(vec![3u32, 5, 7])) {
        let ev = |x: &RatFunc| evaluate_at_root(x, l);
        if let (Ok(x), Ok(y), Ok(z)) = (ev(&a), ev(&b), ev(&c)) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            if !x.is_zero() {
                prop_assert!((&x * &x.inv().unwrap()).is_one());
            }
            // evaluation is a ring map
            prop_assert_eq!(ev(&(&a * &b)).unwrap(), &x * &y);
            prop_assert_eq!(ev(&(&a + &b)).unwrap(), &x + &y);
        }
    }
}
