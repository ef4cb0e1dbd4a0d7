//! \bar M(c): words ξ_{i₁}⋯ξ_{i_r} modulo the ideal N, truncated at a depth.

use std::collections::HashMap;

use super::{axpy, unit, SpMat, Vector, WeightModule};
use crate::linalg::rref;
use crate::pbwcore::Kind;
use crate::rootdata::Shape;
use crate::scalars::RatFunc;

type Word = Vec<usize>;
type Lin = Vec<(RatFunc, Word)>;

fn q(e: i64) -> RatFunc {
    RatFunc::q_pow(e)
}

/// φ_ij, φ_m and φ_ex.
fn ideal_generators(shape: Shape) -> Vec<Lin> {
    let k = shape.rank();
    let m = shape.m;
    let one = RatFunc::one;
    let qsum = &q(1) + &q(-1);
    let mut out = Vec::new();
    for i in 1..k {
        for j in 1..k {
            if i.abs_diff(j) == 1 && i != m {
                out.push(vec![(one(), vec![i, i, j]), (-&qsum, vec![i, j, i]), (one(), vec![j, i, i])]);
            }
            if i.abs_diff(j) > 1 {
                out.push(vec![(one(), vec![i, j]), (-&one(), vec![j, i])]);
            }
        }
    }
    out.push(vec![(one(), vec![m, m])]);
    if m >= 2 && m + 1 < k {
        let (a, b) = (m - 1, m + 1);
        out.push(vec![
            (one(), vec![a, m, b, m]),
            (one(), vec![m, a, m, b]),
            (one(), vec![b, m, a, m]),
            (one(), vec![m, b, m, a]),
            (-&qsum, vec![m, a, b, m]),
        ]);
    }
    out
}

/// One degree: all words, the reduced slice of N, and the normal words.
struct Layer {
    index: HashMap<Word, usize>,
    rows: Vec<Vec<RatFunc>>,
    pivot_row: HashMap<usize, usize>,
    global: HashMap<usize, usize>,
}

fn all_words(letters: usize, d: usize) -> Vec<Word> {
    let mut out: Vec<Word> = vec![Vec::new()];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=letters).map(move |a| {
                    let mut w = w.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out
}

impl Layer {
    fn reduce(&self, w: &Word, c: &RatFunc, acc: &mut Vector<RatFunc>) {
        let col = self.index[w];
        match self.pivot_row.get(&col) {
            None => axpy(acc, c, &unit(self.global[&col], &RatFunc::one())),
            Some(&r) => {
                for (cc, x) in self.rows[r].iter().enumerate() {
                    if cc != col && !x.is_zero() {
                        axpy(acc, &-&(c * x), &unit(self.global[&cc], &RatFunc::one()));
                    }
                }
            }
        }
    }
}

/// The free module on words in ξ₁…ξ_{m+n−1} with the action of simple
/// generators on highest weight c_j = q_j^{λ_j}, modulo N, in degrees ≤ depth.
/// F applied in the top degree is reported as truncation.
pub fn verma_model(shape: Shape, lambda: &[i64], depth: usize) -> WeightModule<RatFunc> {
    let k = shape.rank();
    assert_eq!(lambda.len(), k, "weight length");
    assert!(depth >= 1, "depth must be positive");
    let gens = ideal_generators(shape);
    let mut layers: Vec<Layer> = Vec::new();
    let mut basis: Vec<Word> = Vec::new();
    for d in 0..=depth {
        let words = all_words(k - 1, d);
        let index: HashMap<Word, usize> = words.iter().cloned().enumerate().map(|(a, w)| (w, a)).collect();
        let mut rows: Vec<Vec<RatFunc>> = Vec::new();
        for g in &gens {
            let len = g[0].1.len();
            if len > d {
                continue;
            }
            for a in 0..=d - len {
                for u1 in all_words(k - 1, a) {
                    for u2 in all_words(k - 1, d - len - a) {
                        let mut row = vec![RatFunc::zero(); words.len()];
                        for (c, w) in g {
                            let mut full = u1.clone();
                            full.extend(w);
                            full.extend(&u2);
                            let col = index[&full];
                            row[col] = &row[col] + c;
                        }
                        rows.push(row);
                    }
                }
            }
        }
        let piv = rref(&mut rows);
        rows.truncate(piv.len());
        let pivot_row: HashMap<usize, usize> = piv.iter().enumerate().map(|(r, &c)| (c, r)).collect();
        let mut global = HashMap::new();
        for (col, w) in words.iter().enumerate() {
            if !pivot_row.contains_key(&col) {
                global.insert(col, basis.len());
                basis.push(w.clone());
            }
        }
        layers.push(Layer { index, rows, pivot_row, global });
    }
    let d = |i: usize| shape.eps_norm(i);
    let weight_of = |w: &Word| {
        let mut mu = lambda.to_vec();
        for &a in w {
            mu[a - 1] -= 1;
            mu[a] += 1;
        }
        mu
    };
    let labels: Vec<String> = basis
        .iter()
        .map(|w| if w.is_empty() { "1".to_string() } else { w.iter().map(|a| format!("ξ{a}")).collect() })
        .collect();
    let weights: Vec<Vec<i64>> = basis.iter().map(weight_of).collect();
    let parities: Vec<u8> = basis.iter().map(|w| (w.iter().filter(|&&a| a == shape.m).count() % 2) as u8).collect();
    let grades: Vec<u32> = basis.iter().map(|w| w.len() as u32).collect();
    let mut module = WeightModule::new(shape, RatFunc::one(), labels, weights, parities);
    let n = basis.len();
    for i in 1..k {
        let mut fcols = Vec::with_capacity(n);
        let mut ecols = Vec::with_capacity(n);
        let qi = q(d(i));
        let den = (&qi - &qi.inv().unwrap()).inv().unwrap();
        for w in &basis {
            let mut fc = Vector::new();
            if w.len() < depth {
                let mut nw = vec![i];
                nw.extend(w);
                layers[nw.len()].reduce(&nw, &RatFunc::one(), &mut fc);
            }
            fcols.push(fc);
            let mut ec = Vector::new();
            let mut odd_before = 0;
            for s in 0..w.len() {
                if w[s] == i {
                    // (α_i, α_{i_{s+1}} + … + α_{i_r})
                    let mut beta = vec![0i64; k];
                    for &a in &w[s + 1..] {
                        beta[a - 1] += 1;
                        beta[a] -= 1;
                    }
                    let pair = d(i) * beta[i - 1] - d(i + 1) * beta[i];
                    let a = d(i) * lambda[i - 1] - d(i + 1) * lambda[i] - pair;
                    let mut c = &(&q(a) - &q(-a)) * &den;
                    if i == shape.m && odd_before % 2 == 1 {
                        c = -&c;
                    }
                    let mut nw = w[..s].to_vec();
                    nw.extend(&w[s + 1..]);
                    layers[nw.len()].reduce(&nw, &c, &mut ec);
                }
                if w[s] == shape.m {
                    odd_before += 1;
                }
            }
            ecols.push(ec);
        }
        module.set_op(Kind::F, i, 1, SpMat::from_columns(n, fcols));
        module.set_op(Kind::E, i, 1, SpMat::from_columns(n, ecols));
    }
    module.set_grades(grades, depth as u32);
    module
}
