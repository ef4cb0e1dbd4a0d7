mod common;

use common::*;
use uqgl::pbwcore::{kbracket_element, Element};
use uqgl::repmod::kac_module;
use uqgl::rootdata::Shape;
use uqgl::rootofunity::*;
use uqgl::scalars::{gauss_int, RatFunc};

#[test]
fn gl11_restricted_simples() {
    let s = sh(1, 1);
    let typ = restricted_simple(s, &[1, 0], 3).unwrap();
    assert_eq!(typ.dim(), 2);
    let generic = kac_module(s, &s.z_to_weight(&[1, 0]).unwrap().eps).unwrap();
    assert_eq!(typ.character(), generic.character());
    assert_eq!(restricted_simple(s, &[0, 0], 3).unwrap().dim(), 1);
}

#[test]
fn restricted_range_is_enforced() {
    let s = sh(2, 1);
    assert!(matches!(restricted_simple(s, &[3, 0, 0], 3), Err(RootError::OutOfRestrictedRange(_))));
    assert!(matches!(simple_at_root(s, &[-1, 0, 0], 3), Err(RootError::NotDominant(_))));
    assert!(matches!(restricted_simple(s, &[1, 0, 0], 4), Err(RootError::BadOrder(4))));
    assert!(matches!(small_group_counts(s, 1), Err(RootError::BadOrder(1))));
}

#[test]
fn specialized_kac_keeps_generic_character() {
    for (s, lam) in [(sh(2, 1), vec![4, 1, 0]), (sh(2, 1), vec![2, 2, -1]), (sh(1, 2), vec![1, 0, -2])] {
        let k = specialize_kac(s, &lam, 3).unwrap();
        let g = kac_module(s, &lam).unwrap();
        assert_eq!(k.character(), g.character(), "{lam:?}");
    }
}

const RESTRICTED: [[i64; 3]; 6] = [[1, 1, 1], [2, 1, 0], [0, 2, 1], [1, 0, 0], [2, 0, 1], [2, 2, 2]];

#[test]
fn restricted_simple_maximal_vector_and_generation() {
    let s = sh(2, 1);
    for z in RESTRICTED {
        let r = restricted_report(s, &z, 3).unwrap();
        assert!(r.frobenius_kills_top, "{z:?}");
        assert_eq!(r.kernel_dim, 1, "{z:?}");
        assert_eq!(r.generated_dim, r.dim, "{z:?}");
    }
}

#[test]
fn restricted_dimensions_frozen() {
    let s = sh(2, 1);
    let dims: Vec<usize> = RESTRICTED.iter().map(|z| restricted_simple(s, z, 3).unwrap().dim()).collect();
    assert_eq!(dims, vec![5, 12, 3, 3, 5, 12]);
}

/// Only E_1 in gl(2,1): the even kernel also holds lower maximal vectors of
/// the even part, so it is larger than ℂ·x whenever the module is not trivial.
#[test]
fn even_kernel_is_not_the_top_line() {
    let s = sh(2, 1);
    let got: Vec<usize> = RESTRICTED.iter().map(|z| restricted_report(s, z, 3).unwrap().even_kernel_dim).collect();
    assert_eq!(got, vec![2, 4, 2, 2, 2, 4]);
    assert_eq!(restricted_report(s, &[0, 0, 0], 3).unwrap().even_kernel_dim, 1);
}

#[test]
fn frobenius_tensor_factorization() {
    let s = sh(2, 1);
    let want_dims = [6, 8, 24, 24];
    for (z, d) in [[4, 0, 0], [3, 1, 1], [5, 2, 1], [7, 5, 2]].iter().zip(want_dims) {
        let (_, z2) = s.frobenius_decompose(z, 3).unwrap();
        assert!(z2.iter().any(|&x| x != 0));
        let (a, b) = frobenius_characters(s, z, 3).unwrap();
        assert_eq!(a, b, "{z:?}");
        assert_eq!(a.dimension(), d, "{z:?}");
    }
}

#[test]
fn frobenius_pullback_acts_through_even_part() {
    let s = sh(2, 1);
    for zp in [[1, 0, 0], [1, 0, 1], [2, 1, 0], [0, 0, 1]] {
        let (zero, dim) = frobenius_pullback_pattern(s, &zp, 3).unwrap();
        assert!(zero, "{zp:?}");
        assert_eq!(dim as u64, s.even_dimension(&s.z_to_weight(&zp).unwrap()), "{zp:?}");
    }
}

fn all_generators(s: Shape) -> Vec<Element> {
    let mut out = Vec::new();
    for i in 1..=s.rank() {
        for j in i + 1..=s.rank() {
            out.push(e(s, i, j));
            out.push(f(s, i, j));
        }
        out.push(uqgl::pbwcore::k_alpha(s, i, 1).unwrap());
    }
    out
}

#[test]
fn k_to_the_l_is_central_at_eta() {
    for s in [sh(1, 1), sh(2, 1)] {
        for i in 1..=s.rank() {
            let kl = k_power(s, i, 3).unwrap();
            for x in all_generators(s) {
                let c = &(&kl * &x) - &(&x * &kl);
                assert!(specialize_element(&c, 3).unwrap().is_empty());
            }
        }
    }
    // not central generically
    let s = sh(2, 1);
    let c = &(&k_power(s, 1, 3).unwrap() * &e(s, 1, 2)) - &(&e(s, 1, 2) * &k_power(s, 1, 3).unwrap());
    assert!(!c.is_zero());
}

#[test]
fn quantum_l_vanishes_and_integers_survive() {
    let s = sh(2, 1);
    for l in [3u32, 5] {
        let x = Element::one(s).scale(&RatFunc::from_laurent_int(&gauss_int(l as i64, 1)));
        assert!(specialize_element(&x, l).unwrap().is_empty());
        let y = Element::one(s).scale(&int(5));
        let sp = specialize_element(&y, l).unwrap();
        assert_eq!(sp.len(), 1);
        let c = sp.values().next().unwrap();
        assert_eq!(*c, uqgl::scalars::CycloField::new(l).unwrap().from_int(5));
    }
}

#[test]
fn non_integral_elements_are_rejected() {
    let s = sh(1, 1);
    let x = e(s, 1, 2).scale(&(&q(1) - &q(-1)).inv().unwrap());
    assert!(matches!(specialize_element(&x, 3), Err(RootError::Pbw(_))));
}

#[test]
fn small_group_counts_match_products() {
    for m in 1..=2usize {
        for n in 1..=2usize {
            let s = sh(m, n);
            let i0 = (m * (m - 1) / 2 + n * (n - 1) / 2) as u32;
            let i1 = (m * n) as u32;
            for l in [3u64, 5] {
                let c = small_group_counts(s, l as u32).unwrap();
                let k = (m + n) as u32;
                assert_eq!(c.plus, l.pow(i0) * 2u64.pow(i1));
                assert_eq!(c.zero, (2 * l).pow(k));
                assert_eq!(c.u, 2u64.pow(2 * i1) * l.pow(2 * i0) * (2 * l).pow(k));
                assert_eq!(c.u_tilde, 2u64.pow(2 * i1) * l.pow(2 * i0) * l.pow(k));
            }
        }
    }
    let c = small_group_counts(sh(1, 1), 3).unwrap();
    assert_eq!((c.u_tilde, c.u), (36, 144));
    assert_eq!(small_group_counts(sh(2, 1), 3).unwrap().plus, 12);
}

#[test]
fn classical_serre_relations() {
    for s in [sh(1, 1), sh(2, 1), sh(2, 2)] {
        let report = classical_limit_check(s).unwrap();
        for fam in ["a1", "a2", "a3", "a7"] {
            assert!(report.iter().any(|x| x.family == fam), "{fam} missing");
        }
        for x in &report {
            assert!(x.holds, "{s:?} {} {}", x.family, x.label);
        }
    }
    let r22 = classical_limit_check(sh(2, 2)).unwrap();
    for fam in ["a4", "a5", "a6", "a8"] {
        assert!(r22.iter().any(|x| x.family == fam), "{fam} missing");
    }
}

#[test]
fn classical_check_detects_wrong_sign() {
    // e f − f e at the odd root is not h at q = 1 modulo K − 1
    let s = sh(1, 1);
    let h = kbracket_element(s, 1, 0, 1).unwrap();
    let wrong = &(&(&e(s, 1, 2) * &f(s, 1, 2)) - &(&f(s, 1, 2) * &e(s, 1, 2))) - &h;
    let right = &(&(&e(s, 1, 2) * &f(s, 1, 2)) + &(&f(s, 1, 2) * &e(s, 1, 2))) - &h;
    assert!(!vanishes_classically(&wrong));
    assert!(vanishes_classically(&right));
    // q-dependent but integral: (q − q⁻¹)·E vanishes at q = 1
    let s = sh(2, 1);
    let x = e(s, 1, 2).scale(&(&q(1) - &q(-1)));
    assert!(vanishes_classically(&x));
    assert!(!vanishes_classically(&e(s, 1, 2)));
}
