mod common;

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use uqgl::pbwcore::relations::Letter;
use uqgl::pbwcore::{Gen, Kind};
use uqgl::repmod::{
    kac_module, simple_even_module, tensor_module, trivial_module, verma_model, ModuleError, Vector, WeightModule,
};
use uqgl::rootdata::{Shape, Weight};
use uqgl::scalars::RatFunc;

fn ident(c: &RatFunc) -> RatFunc {
    c.clone()
}

fn unit(i: usize) -> Vector<RatFunc> {
    let mut v = Vector::new();
    v.insert(i, RatFunc::one());
    v
}

fn index_of(m: &WeightModule<RatFunc>, label: &str) -> usize {
    m.labels().iter().position(|l| l == label).unwrap_or_else(|| panic!("no basis vector {label}"))
}

#[test]
fn verma_model_examples() {
    let s = sh(1, 1);
    let m = verma_model(s, &[1, 0], 2);
    let x1 = index_of(&m, "ξ1");
    let one = index_of(&m, "1");
    let y = m.apply_gen(&Gen::E(1), &unit(x1)).unwrap();
    assert_eq!(y, unit(one));
    assert_eq!(m.apply_gen(&Gen::F(1), &unit(one)).unwrap(), unit(x1));
    // ξ₁ξ₁ lies in N
    assert!(m.apply_gen(&Gen::F(1), &unit(x1)).unwrap().is_empty());
    assert_eq!(m.dim(), 2);
    let s = sh(2, 1);
    let m = verma_model(s, &[2, 1, 0], 3);
    for i in 1..3 {
        let y = m.apply_gen(&Gen::F(i), &unit(index_of(&m, "1"))).unwrap();
        assert_eq!(y, unit(index_of(&m, &format!("ξ{i}"))));
    }
}

/// Relations hold on \bar M(c) wherever no word of the relation can leave the truncation.
#[test]
fn verma_model_relations_below_boundary() {
    for &(mm, n, ref lam) in &[(1usize, 1usize, vec![1i64, 0]), (2, 1, vec![2, 0, 1]), (1, 2, vec![0, 1, -1])] {
        let s = sh(mm, n);
        let depth = 5;
        let m = verma_model(s, lam, depth);
        let mut checked = 0;
        for rel in uqgl::pbwcore::relations::all_relations(s) {
            let lowering = rel
                .terms
                .iter()
                .map(|(_, w)| w.iter().map(|l| if let Letter::F(i, j) = l { j - i } else { 0 }).sum::<usize>())
                .max()
                .unwrap_or(0);
            for j in 0..m.dim() {
                if m.labels()[j].chars().filter(|c| *c == 'ξ').count() + lowering > depth {
                    continue;
                }
                let mut total = Vector::new();
                for (c, w) in &rel.terms {
                    let mut x = unit(j);
                    for l in w.iter().rev() {
                        x = m.apply_element(&l.element(s), &ident, &x).unwrap();
                    }
                    for (a, y) in x {
                        let v = &total.get(&a).cloned().unwrap_or_else(RatFunc::zero) + &(c * &y);
                        if v.is_zero() {
                            total.remove(&a);
                        } else {
                            total.insert(a, v);
                        }
                    }
                }
                assert!(total.is_empty(), "({mm},{n}) {} {} on {}", rel.family, rel.label, m.labels()[j]);
                checked += 1;
            }
        }
        assert!(checked > 0);
    }
}

fn pbw_f_degree(u: &uqgl::pbwcore::Element) -> usize {
    let t = uqgl::pbwcore::RootTable::new(u.shape());
    u.terms()
        .keys()
        .map(|m| m.f_exponents().iter().enumerate().map(|(id, &p)| p as usize * (t.root(id).j - t.root(id).i)).sum::<usize>())
        .max()
        .unwrap_or(0)
}

/// Action on \bar M(c) of a straightened product equals the composite action.
#[test]
fn verma_model_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for &(mm, n, ref lam) in &[(1usize, 1usize, vec![2i64, -1]), (2, 1, vec![3, 1, 0])] {
        let s = sh(mm, n);
        let depth = 4;
        let m = verma_model(s, lam, depth);
        let mut done = 0;
        while done < 100 {
            let u1 = random_element(s, &mut rng, 2, 2);
            let u2 = random_element(s, &mut rng, 2, 2);
            let budget = pbw_f_degree(&u1) + pbw_f_degree(&u2);
            if budget > depth {
                continue;
            }
            let prod = &u1 * &u2;
            let cands: Vec<usize> = (0..m.dim())
                .filter(|&j| m.labels()[j].chars().filter(|c| *c == 'ξ').count() + budget <= depth)
                .collect();
            let j = cands[rng.gen_range(0..cands.len())];
            let lhs = m.apply_element(&prod, &ident, &unit(j)).unwrap();
            let mid = m.apply_element(&u2, &ident, &unit(j)).unwrap();
            let rhs = m.apply_element(&u1, &ident, &mid).unwrap();
            assert_eq!(lhs, rhs, "({mm},{n}) u1={u1} u2={u2} on {}", m.labels()[j]);
            done += 1;
        }
    }
}

#[test]
fn truncation_is_reported() {
    let s = sh(1, 1);
    let m = verma_model(s, &[0, 0], 1);
    let x = index_of(&m, "ξ1");
    assert_eq!(m.apply_gen(&Gen::F(1), &unit(x)), Err(ModuleError::Truncated));
}

#[test]
fn even_simple_dimensions() {
    assert_eq!(simple_even_module(sh(2, 1), &[1, 0, 0]).unwrap().dim(), 2);
    assert_eq!(simple_even_module(sh(1, 1), &[5, -3]).unwrap().dim(), 1);
    assert_eq!(simple_even_module(sh(2, 2), &[2, 0, 1, 0]).unwrap().dim(), 6);
    assert_eq!(simple_even_module(sh(3, 1), &[2, 1, 0, 4]).unwrap().dim(), 8);
    assert!(matches!(simple_even_module(sh(2, 1), &[0, 1, 0]), Err(ModuleError::NonDominant(_))));
    let l0 = simple_even_module(sh(2, 2), &[2, 0, 1, 0]).unwrap();
    assert!((0..l0.dim()).all(|j| l0.parity(j) == 0));
}

fn eps_character(m: &WeightModule<RatFunc>) -> Vec<Vec<i64>> {
    let mut w: Vec<Vec<i64>> = (0..m.dim()).map(|j| m.weight(j).to_vec()).collect();
    w.sort();
    w
}

#[test]
fn kac_examples() {
    let k = kac_module(sh(1, 1), &[1, 0]).unwrap();
    assert_eq!(k.dim(), 2);
    let zs: Vec<Vec<i64>> = k.character().0.keys().cloned().collect();
    // top z = (λ₁+λ₂, λ₂); F₁₂ lowers λ to (0, 1)
    assert_eq!(zs, vec![vec![1, 0], vec![1, 1]]);
    let k = kac_module(sh(2, 1), &[1, 1, 1]).unwrap();
    let mut want = vec![vec![1, 1, 1], vec![0, 1, 2], vec![1, 0, 2], vec![0, 0, 3]];
    want.sort();
    assert_eq!(eps_character(&k), want);
    assert!(k.character().0.values().all(|&x| x == 1));
    assert_eq!(kac_module(sh(2, 1), &[2, 0, 0]).unwrap().dim(), 12);
}

#[test]
fn singular_vectors_of_kac_modules() {
    let k = kac_module(sh(1, 1), &[0, 0]).unwrap();
    assert_eq!(k.singular_vectors().unwrap().len(), 2);
    let k = kac_module(sh(1, 1), &[1, 0]).unwrap();
    assert_eq!(k.singular_vectors().unwrap().len(), 1);
    let k = kac_module(sh(2, 1), &[2, 0, 1]).unwrap();
    assert_eq!(k.singular_vectors().unwrap().len(), 1);
    let empty = WeightModule::new(sh(1, 1), RatFunc::one(), vec![], vec![], vec![]);
    assert!(empty.singular_vectors().unwrap().is_empty());
}

#[test]
fn simple_head_examples() {
    let k = kac_module(sh(1, 1), &[1, 0]).unwrap();
    assert_eq!(k.simple_head().unwrap().dim(), 2);
    let k = kac_module(sh(1, 1), &[0, 0]).unwrap();
    let h = k.simple_head().unwrap();
    assert_eq!(h.dim(), 1);
    assert_eq!(h.singular_vectors().unwrap().len(), 1);
    let l0 = simple_even_module(sh(2, 1), &[1, 0, 0]).unwrap();
    assert_eq!(l0.simple_head().unwrap().dim(), l0.dim());
    // two independent top vectors: not highest weight
    let mut two = WeightModule::new(sh(1, 1), RatFunc::one(), vec!["a".into(), "b".into()], vec![vec![0, 0]; 2], vec![0, 0]);
    two.set_op(Kind::E, 1, 1, uqgl::repmod::SpMat::zero(2, 2));
    two.set_op(Kind::F, 1, 1, uqgl::repmod::SpMat::zero(2, 2));
    assert_eq!(two.simple_head().unwrap_err(), ModuleError::NotHighestWeight);
}

fn kac_law(s: Shape, lam: &[i64]) {
    let l0 = simple_even_module(s, lam).unwrap();
    let k = kac_module(s, lam).unwrap();
    assert_eq!(l0.dim() as u64, s.even_dimension(&Weight::new(lam.to_vec())));
    assert_eq!(k.dim(), (1 << (s.m * s.n)) * l0.dim(), "{s:?} {lam:?}");
}

#[test]
fn kac_dimension_law_grid() {
    let grid: &[(usize, usize, &[i64])] = &[
        (1, 1, &[0, 0]),
        (1, 1, &[2, -1]),
        (2, 1, &[1, 0, 0]),
        (2, 1, &[2, 0, 3]),
        (2, 1, &[3, 1, -2]),
        (1, 2, &[1, 1, 0]),
        (1, 2, &[0, 2, -1]),
        (1, 2, &[-1, 3, 3]),
        (2, 2, &[1, 0, 1, 0]),
        (2, 2, &[0, 0, 2, 0]),
        (2, 2, &[1, 1, 0, 0]),
    ];
    for &(m, n, lam) in grid {
        kac_law(sh(m, n), lam);
    }
}

fn typical_grid(s: Shape) -> Vec<Vec<i64>> {
    let k = s.rank();
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..k {
        out = out.into_iter().flat_map(|v| (-3..=3).map(move |x| {
            let mut v = v.clone();
            v.push(x);
            v
        })).collect();
    }
    out.into_iter().filter(|l| s.in_xplus(&Weight::new(l.clone())).unwrap()).collect()
}

#[test]
fn typical_iff_simple() {
    for &(m, n, step) in &[(1usize, 1usize, 1usize), (2, 1, 1), (1, 2, 1)] {
        let s = sh(m, n);
        for lam in typical_grid(s).into_iter().step_by(step) {
            let k = kac_module(s, &lam).unwrap();
            let simple = k.simple_head().unwrap().dim() == k.dim();
            let typ = s.is_typical(&Weight::new(lam.clone())).unwrap();
            assert_eq!(simple, typ, "({m},{n}) λ={lam:?}");
        }
    }
}

#[test]
fn tensor_with_trivial_and_convolution() {
    let s = sh(2, 1);
    let k = kac_module(s, &[1, 0, 1]).unwrap();
    let t = trivial_module(s, RatFunc::one(), 1);
    let kt = tensor_module(&k, &t, &ident).unwrap();
    assert_eq!(kt.character(), k.character());
    kt.verify_relations(&ident).unwrap();
    let a = kac_module(s, &[1, 0, 0]).unwrap();
    let b = kac_module(s, &[0, 0, -1]).unwrap();
    let ab = tensor_module(&a, &b, &ident).unwrap();
    assert_eq!(ab.character(), a.character().convolve(&b.character()));
    ab.verify_weights().unwrap();
    ab.verify_relations(&ident).unwrap();
}

#[test]
fn tensor_divided_powers_match_generic_powers() {
    let s = sh(2, 1);
    let a = kac_module(s, &[2, 0, 0]).unwrap();
    let b = kac_module(s, &[1, 0, 1]).unwrap();
    let mut ab = tensor_module(&a, &b, &ident).unwrap();
    let derived = ab.op(Kind::E, 1, 2).unwrap();
    let mut a2 = a.clone();
    let mut b2 = b.clone();
    for (m, x) in [(&mut a2, &a), (&mut b2, &b)] {
        for kind in [Kind::E, Kind::F] {
            m.set_op(kind, 1, 2, x.op(kind, 1, 2).unwrap());
        }
    }
    ab = tensor_module(&a2, &b2, &ident).unwrap();
    assert_eq!(ab.op(Kind::E, 1, 2).unwrap(), derived);
    let f2 = ab.op(Kind::F, 1, 2).unwrap();
    let f1 = ab.op(Kind::F, 1, 1).unwrap();
    let sq = f1.compose(&f1).scale(&(&q(1) + &q(-1)).inv().unwrap());
    assert_eq!(f2, sq);
}

#[test]
fn pbw_vectors_independent_in_kac_module() {
    for (s, lam) in [(sh(2, 1), vec![4, 1, 0]), (sh(2, 2), vec![3, 0, 3, 0])] {
        assert!(s.is_typical(&Weight::new(lam.clone())).unwrap());
        let n = uqgl::checks::pbw_independence(s, &lam, 2).unwrap();
        let t = uqgl::pbwcore::RootTable::new(s);
        let ne = t.n_even;
        // number of ψ ∈ ℕ^{ne} with |ψ| ≤ 2, times 2^{|I₁|}
        let count_psi = 1 + ne + ne * (ne + 1) / 2;
        assert_eq!(n, count_psi << (t.len() - ne), "{lam:?}");
    }
}

#[test]
fn even_part_generated_by_top_is_l0() {
    // U_q(g₀)·v⁺ inside the simple head has the dimension of L₀(λ)
    for (s, lam) in [(sh(2, 1), vec![2, 0, 0]), (sh(2, 1), vec![1, 1, 0]), (sh(1, 2), vec![1, 0, -1]), (sh(2, 2), vec![1, 0, 0, 0])] {
        let head = kac_module(s, &lam).unwrap().simple_head().unwrap();
        let top = (0..head.dim()).find(|&j| head.weight(j) == lam.as_slice()).unwrap();
        let even: Vec<_> = (1..s.rank())
            .filter(|&i| i != s.m)
            .flat_map(|i| [(Kind::E, i, 1), (Kind::F, i, 1)])
            .collect();
        let d = head.generated_dim(&unit(top), &even).unwrap();
        assert_eq!(d as u64, s.even_dimension(&Weight::new(lam.clone())), "{lam:?}");
    }
}
