//! Even simple modules L₀(λ) and Kac modules K(λ) over ℚ(q).

use std::collections::HashMap;

use super::{axpy, unit, ModuleError, OpKey, SpMat, Vector, WeightModule};
use crate::pbwcore::{generator, Element, Kind, Monomial, RootTable};
use crate::rootdata::{Shape, Weight};
use crate::scalars::RatFunc;

fn ident(c: &RatFunc) -> RatFunc {
    c.clone()
}

fn atoms_label(table: &RootTable, f: &[u32]) -> String {
    let mut s = String::new();
    for id in (0..f.len()).rev() {
        if f[id] > 0 {
            let r = table.root(id);
            s.push_str(&format!("F{}{}", r.i, r.j));
            if f[id] > 1 {
                s.push_str(&format!("^{}", f[id]));
            }
        }
    }
    s
}

/// Heights of λ − μ in simple roots.
fn height(top: &[i64], mu: &[i64]) -> i64 {
    let mut acc = 0;
    let mut h = 0;
    for t in 0..top.len() - 1 {
        acc += top[t] - mu[t];
        h += acc;
    }
    h
}

fn even_raising(shape: Shape) -> Vec<OpKey> {
    (1..shape.rank()).filter(|&i| i != shape.m).map(|i| (Kind::E, i, 1)).collect()
}

/// Even Verma module U_q(g₀)⁻·v of highest weight λ, cut off above height `h`.
pub fn even_verma(shape: Shape, lambda: &[i64], h: i64) -> WeightModule<RatFunc> {
    let t = RootTable::new(shape);
    let ne = t.n_even;
    let ht = |id: usize| (t.root(id).j - t.root(id).i) as i64;
    let mut basis: Vec<Vec<u32>> = vec![Vec::new()];
    for id in 0..ne {
        let mut next = Vec::new();
        for b in &basis {
            let used: i64 = b.iter().enumerate().map(|(a, &p)| p as i64 * ht(a)).sum();
            let mut p = 0;
            while used + p * ht(id) <= h {
                let mut nb = b.clone();
                nb.push(p as u32);
                next.push(nb);
                p += 1;
            }
        }
        basis = next;
    }
    let index: HashMap<Vec<u32>, usize> = basis.iter().cloned().enumerate().map(|(a, b)| (b, a)).collect();
    let mono = |psi: &[u32]| {
        let mut f = vec![0u32; t.len()];
        f[..ne].copy_from_slice(psi);
        let fpsi: Vec<u32> = (0..ne).rev().map(|id| f[id]).collect();
        let zero_odd = vec![0u32; t.len() - ne];
        Monomial::from_parts(&t, &zero_odd, &fpsi, &vec![0; shape.rank()], &vec![0; ne], &zero_odd).unwrap()
    };
    let weights: Vec<Vec<i64>> = basis
        .iter()
        .map(|psi| {
            let mut w = lambda.to_vec();
            for (id, &p) in psi.iter().enumerate() {
                let r = t.root(id);
                w[r.i - 1] -= p as i64;
                w[r.j - 1] += p as i64;
            }
            w
        })
        .collect();
    let labels: Vec<String> = basis
        .iter()
        .map(|psi| {
            let mut f = vec![0u32; t.len()];
            f[..ne].copy_from_slice(psi);
            format!("{}v", atoms_label(&t, &f))
        })
        .collect();
    let n = basis.len();
    let mut module = WeightModule::new(shape, RatFunc::one(), labels, weights, vec![0; n]);
    let lam_pair = |kap: &[i64]| (0..kap.len()).map(|j| shape.eps_norm(j + 1) * kap[j] * lambda[j]).sum::<i64>();
    for i in (1..shape.rank()).filter(|&i| i != shape.m) {
        for kind in [Kind::E, Kind::F] {
            let g = generator(shape, kind, i, i + 1).unwrap();
            let mut cols = Vec::with_capacity(n);
            for psi in &basis {
                let p = &g * &Element::from_monomial(shape, mono(psi), RatFunc::one());
                let mut col = Vector::new();
                for (m, c) in p.terms() {
                    if m.e_exponents().iter().any(|&x| x > 0) {
                        continue;
                    }
                    let f = m.f_exponents();
                    debug_assert!(f[ne..].iter().all(|&x| x == 0));
                    let Some(&j) = index.get(&f[..ne].to_vec()) else {
                        continue;
                    };
                    let s = &RatFunc::q_pow(lam_pair(m.k_exponents())) * c;
                    axpy(&mut col, &s, &unit(j, &RatFunc::one()));
                }
                cols.push(col);
            }
            module.set_op(kind, i, 1, SpMat::from_columns(n, cols));
        }
    }
    module
}

fn check_dominant(shape: Shape, lambda: &[i64]) -> Result<(), ModuleError> {
    match shape.in_xplus(&Weight::new(lambda.to_vec())) {
        Ok(true) => Ok(()),
        _ => Err(ModuleError::NonDominant(lambda.to_vec())),
    }
}

/// L₀(λ): simple head of a truncated even Verma module, with the cutoff
/// doubled until the top layer of the head is empty.
pub fn simple_even_module(shape: Shape, lambda: &[i64]) -> Result<WeightModule<RatFunc>, ModuleError> {
    check_dominant(shape, lambda)?;
    let mut h = 2;
    loop {
        let head = even_verma(shape, lambda, h).simple_head_with(&even_raising(shape))?;
        let reaches_cutoff = (0..head.dim()).any(|j| height(lambda, head.weight(j)) >= h);
        if !reaches_cutoff {
            let want = shape.even_dimension(&Weight::new(lambda.to_vec())) as usize;
            if head.dim() != want {
                return Err(ModuleError::Check(format!("L0{lambda:?} has dimension {} but Weyl's formula gives {want}", head.dim())));
            }
            head.verify_weights()?;
            head.verify_relations(&ident)?;
            return Ok(head);
        }
        h *= 2;
    }
}

/// K(λ) = U_q ⊗ L₀(λ) with N₁⁺ acting by zero, on the basis F₁^d ⊗ v.
pub fn kac_module(shape: Shape, lambda: &[i64]) -> Result<WeightModule<RatFunc>, ModuleError> {
    let l0 = simple_even_module(shape, lambda)?;
    let kac = induce(&l0)?;
    kac.verify_weights()?;
    kac.verify_relations(&ident)?;
    Ok(kac)
}

fn induce(l0: &WeightModule<RatFunc>) -> Result<WeightModule<RatFunc>, ModuleError> {
    let shape = l0.shape();
    let t = RootTable::new(shape);
    let ne = t.n_even;
    let no = t.len() - ne;
    let d0 = l0.dim();
    let masks = 1usize << no;
    let fvec = |mask: usize| {
        let mut f = vec![0u32; t.len()];
        for b in 0..no {
            if mask >> b & 1 == 1 {
                f[ne + b] = 1;
            }
        }
        f
    };
    let odd_mono = |mask: usize| {
        let f = fvec(mask);
        let fd: Vec<u32> = (ne..t.len()).rev().map(|id| f[id]).collect();
        Monomial::from_parts(&t, &fd, &vec![0; ne], &vec![0; shape.rank()], &vec![0; ne], &vec![0; no]).unwrap()
    };
    let mut labels = Vec::new();
    let mut weights = Vec::new();
    let mut parities = Vec::new();
    for mask in 0..masks {
        let f = fvec(mask);
        for v in 0..d0 {
            let mut w = l0.weight(v).to_vec();
            for b in 0..no {
                if mask >> b & 1 == 1 {
                    let r = t.root(ne + b);
                    w[r.i - 1] -= 1;
                    w[r.j - 1] += 1;
                }
            }
            let pre = atoms_label(&t, &f);
            labels.push(if pre.is_empty() { l0.labels()[v].clone() } else { format!("{pre}⊗{}", l0.labels()[v]) });
            weights.push(w);
            parities.push((mask.count_ones() % 2) as u8);
        }
    }
    let n = masks * d0;
    let mut kac = WeightModule::new(shape, RatFunc::one(), labels, weights, parities);
    for i in 1..shape.rank() {
        for kind in [Kind::E, Kind::F] {
            let g = generator(shape, kind, i, i + 1).unwrap();
            let mut cols = vec![Vector::new(); n];
            for mask in 0..masks {
                let p = &g * &Element::from_monomial(shape, odd_mono(mask), RatFunc::one());
                for (m, c) in p.terms() {
                    if m.e_exponents()[ne..].iter().any(|&x| x > 0) {
                        continue;
                    }
                    let f = m.f_exponents();
                    let mask2 = (0..no).filter(|&b| f[ne + b] == 1).fold(0usize, |a, b| a | 1 << b);
                    let fpsi: Vec<u32> = (0..ne).rev().map(|id| f[id]).collect();
                    let even = Monomial::from_parts(&t, &vec![0; no], &fpsi, m.k_exponents(), &m.e_exponents()[..ne], &vec![0; no])
                        .unwrap();
                    let ev = Element::from_monomial(shape, even, c.clone());
                    for v in 0..d0 {
                        let y = l0.apply_element(&ev, &ident, &unit(v, &RatFunc::one()))?;
                        let shifted: Vector<RatFunc> = y.into_iter().map(|(a, x)| (mask2 * d0 + a, x)).collect();
                        axpy(&mut cols[mask * d0 + v], &RatFunc::one(), &shifted);
                    }
                }
            }
            kac.set_op(kind, i, 1, SpMat::from_columns(n, cols));
        }
    }
    Ok(kac)
}
