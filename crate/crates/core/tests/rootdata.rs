use num_rational::Rational64;
use proptest::prelude::*;
use uqgl::rootdata::{Shape, Weight};

fn sh(m: usize, n: usize) -> Shape {
    Shape::new(m, n).unwrap()
}

fn w(v: &[i64]) -> Weight {
    Weight::new(v.to_vec())
}

#[test]
fn form_and_constants() {
    let s = sh(2, 2);
    assert_eq!(s.bilinear_form(&s.epsilon(1), &s.epsilon(1)).unwrap(), 1);
    assert_eq!(s.bilinear_form(&s.epsilon(3), &s.epsilon(3)).unwrap(), -1);
    assert_eq!(s.bilinear_form(&s.epsilon(1), &s.epsilon(2)).unwrap(), 0);
    assert_eq!(sh(1, 1).c_value(1, 2).unwrap(), 0);
    assert_eq!(sh(2, 1).c_value(1, 3).unwrap(), -1);
    assert_eq!(sh(2, 2).c_value(2, 4).unwrap(), 1);
    assert!(sh(2, 2).c_value(1, 2).is_err());
    assert_eq!(s.i0().len(), 2);
    assert_eq!(s.i1().len(), 4);
    assert_eq!(sh(3, 2).i0().len(), 4);
}

#[test]
fn typicality_examples() {
    assert!(!sh(1, 1).is_typical(&w(&[0, 0])).unwrap());
    assert!(sh(1, 1).is_typical(&w(&[1, 0])).unwrap());
    assert!(sh(2, 1).is_typical(&w(&[1, 1, 1])).unwrap());
}

#[test]
fn z_coordinates() {
    assert_eq!(sh(1, 1).weight_to_z(&w(&[1, 0])).unwrap(), vec![1, 0]);
    assert_eq!(sh(2, 1).weight_to_z(&w(&[1, 1, 1])).unwrap(), vec![0, 2, 1]);
    assert_eq!(sh(2, 2).weight_to_z(&w(&[0, 0, 0, 0])).unwrap(), vec![0; 4]);
    // exhaustive box |λ_i| ≤ 3
    for s in [sh(2, 1), sh(1, 2)] {
        let mut seen = std::collections::HashSet::new();
        for a in -3..=3 {
            for b in -3..=3 {
                for c in -3..=3 {
                    let l = w(&[a, b, c]);
                    let z = s.weight_to_z(&l).unwrap();
                    assert_eq!(s.z_to_weight(&z).unwrap(), l);
                    assert!(seen.insert(z));
                }
            }
        }
    }
}

#[test]
fn dominance() {
    let s = sh(2, 1);
    assert!(s.in_xplus(&w(&[2, 0, 5])).unwrap());
    assert!(!s.in_xplus(&w(&[0, 2, 5])).unwrap());
    assert!(!s.in_xplus_l(&[3, 0, 0], 3));
    assert!(s.in_xplus_l(&[2, 7, 9], 3));
    assert!(sh(1, 1).in_xplus_l(&[11, 4], 3));
}

#[test]
fn frobenius_examples() {
    let s = sh(2, 1);
    assert_eq!(s.frobenius_decompose(&[4, 0, 0], 3).unwrap(), (vec![1, 0, 0], vec![1, 0, 0]));
    assert_eq!(s.frobenius_decompose(&[2, 1, 1], 3).unwrap(), (vec![2, 1, 1], vec![0, 0, 0]));
    assert_eq!(s.frobenius_decompose(&[7, 5, 2], 3).unwrap(), (vec![1, 5, 2], vec![2, 0, 0]));
    assert!(s.frobenius_decompose(&[1, 0, 0], 4).is_err());
}

#[test]
fn cartan_entries() {
    let s = sh(2, 2);
    assert_eq!(s.cartan_entry(2, 2).unwrap(), 0);
    assert_eq!(s.cartan_entry(2, 3).unwrap(), 1);
    assert_eq!(s.cartan_entry(4, 3).unwrap(), -1);
    assert_eq!(s.cartan_entry(1, 1).unwrap(), 2);
    assert_eq!(s.cartan_entry(3, 3).unwrap(), 2);
    assert_eq!(s.cartan_entry(4, 1).unwrap(), 0);
}

/// ρ from the half sums of positive roots, in exact rationals.
fn rho_oracle(s: Shape) -> Vec<Rational64> {
    let k = s.m + s.n;
    let mut r = vec![Rational64::from_integer(0); k];
    for i in 1..=k {
        for j in i + 1..=k {
            let odd = (i <= s.m) != (j <= s.m);
            let h = Rational64::new(if odd { -1 } else { 1 }, 2);
            r[i - 1] += h;
            r[j - 1] -= h;
        }
    }
    r
}

#[test]
fn p_factor_grid() {
    let s = sh(2, 2);
    let rho = rho_oracle(s);
    let d = |i: usize| if i <= s.m { 1 } else { -1 };
    for a in -2..=2 {
        for b in -2..=2 {
            let l = w(&[a, 1, b, -1]);
            let mut p = Rational64::from_integer(1);
            let mut via_c = 1i64;
            for i in 1..=2 {
                for j in 3..=4 {
                    let x = (Rational64::from_integer(l.eps[i - 1]) + rho[i - 1]) * d(i)
                        - (Rational64::from_integer(l.eps[j - 1]) + rho[j - 1]) * d(j);
                    p *= x;
                    via_c *= l.eps[i - 1] + l.eps[j - 1] - s.c_value(i, j).unwrap();
                }
            }
            assert!(p.is_integer());
            assert_eq!(s.p_factor(&l).unwrap(), p.to_integer(), "{l:?}");
            assert_eq!(p.to_integer().abs(), via_c.abs());
            assert_eq!(s.is_typical(&l).unwrap(), via_c != 0);
        }
    }
}

proptest! {
    #[test]
    fn frobenius_reassembles(z0 in 0i64..20, z1 in -5i64..20, z2 in -5i64..20, l in prop::sample::select(vec![3u32, 5, 7])) {
        let s = sh(2, 1);
        let z = [z0, z1, z2];
        let (a, b) = s.frobenius_decompose(&z, l).unwrap();
        prop_assert!(s.in_xplus_l(&a, l));
        prop_assert!(s.in_zplus(&b));
        for k in 0..3 {
            prop_assert_eq!(a[k] + l as i64 * b[k], z[k]);
        }
    }

    #[test]
    fn z_round_trip(v in prop::collection::vec(-10i64..10, 4)) {
        for s in [sh(2, 2), sh(3, 1), sh(1, 3)] {
            let l = Weight::new(v.clone());
            prop_assert_eq!(s.z_to_weight(&s.weight_to_z(&l).unwrap()).unwrap(), l);
        }
    }

    #[test]
    fn form_symmetric(a in prop::collection::vec(-5i64..5, 3), b in prop::collection::vec(-5i64..5, 3)) {
        let s = sh(1, 2);
        prop_assert_eq!(s.bilinear_form(&Weight::new(a.clone()), &Weight::new(b.clone())).unwrap(),
                        s.bilinear_form(&Weight::new(b), &Weight::new(a)).unwrap());
    }
}
