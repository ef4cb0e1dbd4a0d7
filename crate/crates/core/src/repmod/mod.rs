//! Finite-dimensional weight modules: the truncated free-module model
//! \bar M(c), even simple modules L₀(λ), Kac modules, simple heads,
//! characters and tensor products.
//!
//! Vectors are sparse maps from basis index to coefficient. Operators are
//! stored per simple root as divided powers `X_i^{(r)}`; generically only
//! `r = 1` is stored and higher powers are derived, at a root of unity the
//! lattice construction stores them explicitly.

mod kac;
mod verma;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

pub use kac::{even_verma, kac_module, simple_even_module};
pub use verma::verma_model;

use crate::hopf::delta;
use crate::linalg::rref;
use crate::pbwcore::relations::{all_relations, Letter};
use crate::pbwcore::{divided_power, monomial_words, Element, Gen, Kind, Monomial, RootTable};
use crate::rootdata::Shape;
use crate::scalars::{Field, RatFunc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("weight {0:?} is not dominant for the even blocks")]
    NonDominant(Vec<i64>),
    #[error("module is not generated by a unique top weight vector")]
    NotHighestWeight,
    #[error("modules have different shapes or scalar fields")]
    Mismatch,
    #[error("action leaves the truncated range")]
    Truncated,
    #[error("operator {0:?}_{1}^({2}) is not available on this module")]
    MissingOp(Kind, usize, u32),
    #[error("monomial {0} cannot be applied through divided powers")]
    UnsupportedMonomial(String),
    #[error("{0}")]
    Check(String),
}

/// Sparse vector: basis index to nonzero coefficient.
pub type Vector<F> = BTreeMap<usize, F>;

/// Sparse matrix stored by columns.
#[derive(Clone, Debug, PartialEq)]
pub struct SpMat<F> {
    pub nrows: usize,
    pub cols: Vec<Vec<(usize, F)>>,
}

pub(crate) fn axpy<F: Field>(acc: &mut Vector<F>, c: &F, v: &Vector<F>) {
    for (i, x) in v {
        let t = c.mul(x);
        match acc.get_mut(i) {
            Some(y) => {
                let s = y.add(&t);
                if s.is_zero() {
                    acc.remove(i);
                } else {
                    *y = s;
                }
            }
            None => {
                if !t.is_zero() {
                    acc.insert(*i, t);
                }
            }
        }
    }
}

pub(crate) fn unit<F: Field>(i: usize, one: &F) -> Vector<F> {
    let mut v = Vector::new();
    v.insert(i, one.clone());
    v
}

impl<F: Field> SpMat<F> {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        SpMat { nrows, cols: vec![Vec::new(); ncols] }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn apply(&self, v: &Vector<F>) -> Vector<F> {
        let mut out = Vector::new();
        for (j, c) in v {
            for (i, x) in &self.cols[*j] {
                let t = c.mul(x);
                match out.get_mut(i) {
                    Some(y) => {
                        let s: F = Field::add(&*y, &t);
                        if s.is_zero() {
                            out.remove(i);
                        } else {
                            *y = s;
                        }
                    }
                    None => {
                        out.insert(*i, t);
                    }
                }
            }
        }
        out
    }

    pub fn column(&self, j: usize) -> Vector<F> {
        self.cols[j].iter().cloned().collect()
    }

    /// self ∘ o.
    pub fn compose(&self, o: &SpMat<F>) -> SpMat<F> {
        let cols = (0..o.ncols()).map(|j| self.apply(&o.column(j)).into_iter().collect()).collect();
        SpMat { nrows: self.nrows, cols }
    }

    pub fn scale(&self, c: &F) -> SpMat<F> {
        let cols = self
            .cols
            .iter()
            .map(|col| col.iter().map(|(i, x)| (*i, x.mul(c))).filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        SpMat { nrows: self.nrows, cols }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn from_columns(nrows: usize, cols: Vec<Vector<F>>) -> Self {
        SpMat { nrows, cols: cols.into_iter().map(|c| c.into_iter().collect()).collect() }
    }
}

/// Weight-space multiplicities keyed by z-coordinates.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Character(pub BTreeMap<Vec<i64>, usize>);

impl Character {
    pub fn dimension(&self) -> usize {
        self.0.values().sum()
    }

    /// Character of a tensor product.
    pub fn convolve(&self, o: &Character) -> Character {
        let mut out = BTreeMap::new();
        for (a, x) in &self.0 {
            for (b, y) in &o.0 {
                let w: Vec<i64> = a.iter().zip(b).map(|(s, t)| s + t).collect();
                *out.entry(w).or_insert(0) += x * y;
            }
        }
        Character(out)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(z, m)| format!("{m}·{z:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Key of a stored operator: kind, simple root index, divided power.
pub type OpKey = (Kind, usize, u32);

/// A finite-dimensional module with a weight basis.
///
/// Weights are ε-coordinates; K_μ acts on a vector of weight ν by
/// q^{(μ,ν)}, with q read as η over a cyclotomic field.
#[derive(Clone, Debug)]
pub struct WeightModule<F> {
    shape: Shape,
    one: F,
    labels: Vec<String>,
    weights: Vec<Vec<i64>>,
    parities: Vec<u8>,
    ops: HashMap<OpKey, SpMat<F>>,
    grades: Option<(Vec<u32>, u32)>,
}

impl<F: Field> WeightModule<F> {
    pub fn new(shape: Shape, one: F, labels: Vec<String>, weights: Vec<Vec<i64>>, parities: Vec<u8>) -> Self {
        assert_eq!(labels.len(), weights.len());
        assert_eq!(labels.len(), parities.len());
        WeightModule { shape, one, labels, weights, parities, ops: HashMap::new(), grades: None }
    }

    pub fn set_op(&mut self, kind: Kind, i: usize, r: u32, m: SpMat<F>) {
        assert_eq!(m.nrows, self.dim());
        assert_eq!(m.ncols(), self.dim());
        self.ops.insert((kind, i, r), m);
    }

    /// Marks the module as a truncation: F applied at `boundary` grade is an error.
    pub(crate) fn set_grades(&mut self, grades: Vec<u32>, boundary: u32) {
        self.grades = Some((grades, boundary));
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn one(&self) -> &F {
        &self.one
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn weight(&self, idx: usize) -> &[i64] {
        &self.weights[idx]
    }

    pub fn z_weight(&self, idx: usize) -> Vec<i64> {
        self.shape.weight_to_z(&crate::rootdata::Weight::new(self.weights[idx].clone())).unwrap()
    }

    pub fn parity(&self, idx: usize) -> u8 {
        self.parities[idx]
    }

    pub fn op_keys(&self) -> Vec<OpKey> {
        let mut v: Vec<OpKey> = self.ops.keys().copied().collect();
        v.sort_by_key(|(k, i, r)| (matches!(k, Kind::F), *i, *r));
        v
    }

    pub fn has_op(&self, kind: Kind, i: usize) -> bool {
        self.ops.contains_key(&(kind, i, 1))
    }

    /// q^{(μ,ν)} for ν the weight of basis vector `idx`.
    pub fn k_scalar(&self, mu: &[i64], idx: usize) -> F {
        let w = &self.weights[idx];
        let e: i64 = (0..mu.len()).map(|j| self.shape.eps_norm(j + 1) * mu[j] * w[j]).sum();
        self.one.q_pow_like(e)
    }

    /// [n]_{q_i}! in the scalar field.
    fn gauss_fact(&self, i: usize, n: u32) -> F {
        let s = self.shape.q_sign(i) as i64;
        let mut acc = self.one.clone();
        for t in 1..=n as i64 {
            let num = self.one.q_pow_like(s * t).sub(&self.one.q_pow_like(-s * t));
            let den = self.one.q_pow_like(s).sub(&self.one.q_pow_like(-s));
            acc = acc.mul(&num.mul(&den.inv().unwrap()));
        }
        acc
    }

    /// X_i^{(r)}: stored, or X_i^r / [r]_{q_i}! when that quotient exists.
    pub fn op(&self, kind: Kind, i: usize, r: u32) -> Result<SpMat<F>, ModuleError> {
        if let Some(m) = self.ops.get(&(kind, i, r)) {
            return Ok(m.clone());
        }
        let base = self.ops.get(&(kind, i, 1)).ok_or(ModuleError::MissingOp(kind, i, r))?;
        if r == 0 {
            let cols = (0..self.dim()).map(|j| vec![(j, self.one.clone())]).collect();
            return Ok(SpMat { nrows: self.dim(), cols });
        }
        let f = self.gauss_fact(i, r).inv().ok_or(ModuleError::MissingOp(kind, i, r))?;
        let mut p = base.clone();
        for _ in 1..r {
            p = base.compose(&p);
        }
        Ok(p.scale(&f))
    }

    fn check_boundary(&self, g: &Gen, v: &Vector<F>) -> Result<(), ModuleError> {
        if let (Gen::F(_), Some((grades, b))) = (g, &self.grades) {
            if v.keys().any(|&i| grades[i] >= *b) {
                return Err(ModuleError::Truncated);
            }
        }
        Ok(())
    }

    pub fn apply_gen(&self, g: &Gen, v: &Vector<F>) -> Result<Vector<F>, ModuleError> {
        self.check_boundary(g, v)?;
        match g {
            Gen::E(i) => Ok(self.ops.get(&(Kind::E, *i, 1)).ok_or(ModuleError::MissingOp(Kind::E, *i, 1))?.apply(v)),
            Gen::F(i) => Ok(self.ops.get(&(Kind::F, *i, 1)).ok_or(ModuleError::MissingOp(Kind::F, *i, 1))?.apply(v)),
            Gen::K(mu) => Ok(v.iter().map(|(j, c)| (*j, c.mul(&self.k_scalar(mu, *j)))).collect()),
        }
    }

    /// u·v, expanding each PBW monomial of `u` into simple-generator words.
    pub fn apply_element(
        &self,
        u: &Element,
        coeff: &dyn Fn(&RatFunc) -> F,
        v: &Vector<F>,
    ) -> Result<Vector<F>, ModuleError> {
        let alg = u.algebra();
        let mut out = Vector::new();
        for (m, c) in u.terms() {
            for (wc, word) in monomial_words(&alg, m) {
                let mut x = v.clone();
                for g in word.iter().rev() {
                    if x.is_empty() {
                        break;
                    }
                    x = self.apply_gen(g, &x)?;
                }
                axpy(&mut out, &coeff(&(c * &wc)), &x);
            }
        }
        Ok(out)
    }

    pub fn element_matrix(&self, u: &Element, coeff: &dyn Fn(&RatFunc) -> F) -> Result<SpMat<F>, ModuleError> {
        let cols = (0..self.dim())
            .map(|j| self.apply_element(u, coeff, &unit(j, &self.one)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SpMat::from_columns(self.dim(), cols))
    }

    /// Applies a PBW monomial of the form F_i^a K_μ E_j^b through divided
    /// powers, so that `c` may carry 1/[a]!·1/[b]! factors that vanish at η.
    pub fn apply_divided_monomial(
        &self,
        m: &Monomial,
        c: &RatFunc,
        coeff: &dyn Fn(&RatFunc) -> F,
        v: &Vector<F>,
    ) -> Result<Vector<F>, ModuleError> {
        let t = RootTable::new(self.shape);
        let bad = || ModuleError::UnsupportedMonomial(format!("{m:?}"));
        let single = |ex: &[u32]| -> Result<Option<(usize, u32)>, ModuleError> {
            let nz: Vec<usize> = (0..ex.len()).filter(|&id| ex[id] > 0).collect();
            match nz.as_slice() {
                [] => Ok(None),
                [id] => {
                    let r = t.root(*id);
                    if r.j != r.i + 1 {
                        return Err(bad());
                    }
                    Ok(Some((r.i, ex[*id])))
                }
                _ => Err(bad()),
            }
        };
        let fpart = single(m.f_exponents())?;
        let epart = single(m.e_exponents())?;
        let mut scale = c.clone();
        let mut x = v.clone();
        if let Some((i, p)) = epart {
            scale = &scale * &RatFunc::from_laurent_int(&crate::scalars::gauss_factorial(p, self.shape.q_sign(i)));
            x = self.op(Kind::E, i, p)?.apply(&x);
        }
        x = self.apply_gen(&Gen::K(m.k_exponents().to_vec()), &x)?;
        if let Some((i, p)) = fpart {
            scale = &scale * &RatFunc::from_laurent_int(&crate::scalars::gauss_factorial(p, self.shape.q_sign(i)));
            x = self.op(Kind::F, i, p)?.apply(&x);
        }
        let s = coeff(&scale);
        Ok(x.into_iter().map(|(j, y)| (j, y.mul(&s))).filter(|(_, y)| !y.is_zero()).collect())
    }

    /// Basis indices grouped by ε-weight.
    pub fn weight_spaces(&self) -> BTreeMap<Vec<i64>, Vec<usize>> {
        let mut out: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
        for (j, w) in self.weights.iter().enumerate() {
            out.entry(w.clone()).or_default().push(j);
        }
        out
    }

    pub fn character(&self) -> Character {
        let mut c = BTreeMap::new();
        for j in 0..self.dim() {
            *c.entry(self.z_weight(j)).or_insert(0) += 1;
        }
        Character(c)
    }

    pub fn dimension(&self) -> usize {
        self.dim()
    }

    /// Joint kernel of the given operators, weight space by weight space.
    pub fn joint_kernel(&self, ops: &[OpKey]) -> Result<Vec<(Vec<i64>, Vector<F>)>, ModuleError> {
        let mats = ops
            .iter()
            .map(|&(k, i, r)| self.op(k, i, r))
            .collect::<Result<Vec<_>, _>>()?;
        let mut out = Vec::new();
        for (w, idx) in self.weight_spaces() {
            let pos: HashMap<usize, usize> = idx.iter().enumerate().map(|(a, &b)| (b, a)).collect();
            // rows: one per (operator, target coordinate)
            let mut rows: BTreeMap<(usize, usize), Vec<F>> = BTreeMap::new();
            for (oi, m) in mats.iter().enumerate() {
                for &j in &idx {
                    for (r, x) in &m.cols[j] {
                        rows.entry((oi, *r)).or_insert_with(|| vec![self.one.zero_like(); idx.len()])[pos[&j]] = x.clone();
                    }
                }
            }
            let rows: Vec<Vec<F>> = rows.into_values().collect();
            for v in crate::linalg::nullspace(&rows, idx.len(), &self.one) {
                let vec: Vector<F> = v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(a, x)| (idx[a], x)).collect();
                out.push((w.clone(), vec));
            }
        }
        Ok(out)
    }

    /// Basis of the joint kernel of all E_{α_i}.
    pub fn singular_vectors(&self) -> Result<Vec<(Vec<i64>, Vector<F>)>, ModuleError> {
        let ops: Vec<OpKey> = (1..self.shape.rank()).filter(|&i| self.has_op(Kind::E, i)).map(|i| (Kind::E, i, 1)).collect();
        self.joint_kernel(&ops)
    }

    /// Coefficients of λ − μ in the simple roots, if they exist in ℤ.
    fn root_coords(&self, top: &[i64], mu: &[i64]) -> Option<Vec<i64>> {
        let k = self.shape.rank();
        let mut c = Vec::with_capacity(k - 1);
        let mut acc = 0;
        for t in 0..k - 1 {
            acc += top[t] - mu[t];
            c.push(acc);
        }
        acc += top[k - 1] - mu[k - 1];
        (acc == 0).then_some(c)
    }

    /// The unique weight all other weights lie below, with height function.
    fn top_weight(&self) -> Option<Vec<i64>> {
        let spaces = self.weight_spaces();
        spaces.keys().find(|t| {
            spaces.keys().all(|mu| self.root_coords(t, mu).is_some_and(|c| c.iter().all(|&x| x >= 0)))
        }).cloned()
    }

    /// Default raising operators: every stored E-type operator.
    pub fn raising_ops(&self) -> Vec<OpKey> {
        self.op_keys().into_iter().filter(|(k, _, _)| *k == Kind::E).collect()
    }

    /// Span of the vectors reachable from `start` under the given operators.
    pub fn generated_dim(&self, start: &Vector<F>, ops: &[OpKey]) -> Result<usize, ModuleError> {
        let mats = ops.iter().map(|&(k, i, r)| self.op(k, i, r)).collect::<Result<Vec<_>, _>>()?;
        let mut basis: Vec<Vec<F>> = Vec::new();
        let mut queue = vec![start.clone()];
        let dense = |v: &Vector<F>| {
            let mut d = vec![self.one.zero_like(); self.dim()];
            for (i, x) in v {
                d[*i] = x.clone();
            }
            d
        };
        while let Some(v) = queue.pop() {
            if v.is_empty() {
                continue;
            }
            let mut trial = basis.clone();
            trial.push(dense(&v));
            if crate::linalg::rank(&trial) > basis.len() {
                basis = trial;
                for m in &mats {
                    queue.push(m.apply(&v));
                }
            }
        }
        Ok(basis.len())
    }

    /// The simple quotient by the maximal submodule avoiding the top vector.
    ///
    /// Works weight by weight from the top: a vector lies in the radical
    /// exactly when every raising operator maps it into the radical.
    pub fn simple_head_with(&self, raising: &[OpKey]) -> Result<WeightModule<F>, ModuleError> {
        if self.dim() == 0 {
            return Ok(self.clone());
        }
        let top = self.top_weight().ok_or(ModuleError::NotHighestWeight)?;
        let spaces = self.weight_spaces();
        if spaces[&top].len() != 1 {
            return Err(ModuleError::NotHighestWeight);
        }
        let mats: Vec<(OpKey, SpMat<F>)> =
            raising.iter().map(|&key| self.op(key.0, key.1, key.2).map(|m| (key, m))).collect::<Result<_, _>>()?;
        let height = |mu: &Vec<i64>| self.root_coords(&top, mu).unwrap().iter().sum::<i64>();
        let mut order: Vec<&Vec<i64>> = spaces.keys().collect();
        order.sort_by_key(|mu| height(mu));
        // P_μ in rref: rows are quotient coordinates over the weight space
        let mut proj: HashMap<Vec<i64>, (Vec<Vec<F>>, Vec<usize>)> = HashMap::new();
        let mut pos: HashMap<usize, usize> = HashMap::new();
        for idx in spaces.values() {
            for (a, &b) in idx.iter().enumerate() {
                pos.insert(b, a);
            }
        }
        for mu in order {
            let idx = &spaces[mu];
            if *mu == top {
                proj.insert(mu.clone(), (vec![vec![self.one.clone()]], vec![0]));
                continue;
            }
            let mut rows: Vec<Vec<F>> = Vec::new();
            for (_, m) in &mats {
                // image weight of this block, read off from any nonzero column
                let mut block: BTreeMap<Vec<i64>, Vec<Vec<F>>> = BTreeMap::new();
                for (a, &j) in idx.iter().enumerate() {
                    for (r, x) in &m.cols[j] {
                        let nu = &self.weights[*r];
                        let (p, _) = &proj[nu];
                        let cols = block.entry(nu.clone()).or_insert_with(|| vec![vec![self.one.zero_like(); idx.len()]; p.len()]);
                        for (row, prow) in p.iter().enumerate() {
                            let c = &prow[pos[r]];
                            if !c.is_zero() {
                                cols[row][a] = cols[row][a].add(&c.mul(x));
                            }
                        }
                    }
                }
                for (_, b) in block {
                    rows.extend(b);
                }
            }
            let piv = rref(&mut rows);
            rows.truncate(piv.len());
            proj.insert(mu.clone(), (rows, piv));
        }
        // quotient basis: pivot columns of each P_μ
        let mut labels = Vec::new();
        let mut weights = Vec::new();
        let mut parities = Vec::new();
        let mut offset: HashMap<Vec<i64>, usize> = HashMap::new();
        let mut reps: Vec<usize> = Vec::new();
        for (mu, idx) in &spaces {
            let (_, piv) = &proj[mu];
            offset.insert(mu.clone(), labels.len());
            for &c in piv {
                let j = idx[c];
                reps.push(j);
                labels.push(self.labels[j].clone());
                weights.push(mu.clone());
                parities.push(self.parities[j]);
            }
        }
        let mut out = WeightModule::new(self.shape, self.one.clone(), labels, weights, parities);
        let n = out.dim();
        for (&key, m) in &self.ops {
            let mut cols = Vec::with_capacity(n);
            for &j in &reps {
                let y = m.apply(&unit(j, &self.one));
                let mut col: Vector<F> = Vector::new();
                for (r, x) in &y {
                    let nu = &self.weights[*r];
                    let (p, _) = &proj[nu];
                    let off = offset[nu];
                    for (row, prow) in p.iter().enumerate() {
                        let c = &prow[pos[r]];
                        if !c.is_zero() {
                            let e: Vector<F> = unit(off + row, &c.mul(x));
                            axpy(&mut col, &self.one, &e);
                        }
                    }
                }
                cols.push(col);
            }
            out.ops.insert(key, SpMat::from_columns(n, cols));
        }
        let lowering: Vec<OpKey> = raising.iter().map(|&(_, i, r)| (Kind::F, i, r)).collect();
        let top_idx = out.weights.iter().position(|w| *w == top).unwrap();
        if out.generated_dim(&unit(top_idx, &self.one), &lowering)? != n {
            return Err(ModuleError::NotHighestWeight);
        }
        Ok(out)
    }

    /// Simple head with all stored E-type operators as raising operators.
    pub fn simple_head(&self) -> Result<WeightModule<F>, ModuleError> {
        self.simple_head_with(&self.raising_ops())
    }

    /// Matrix of a relation letter, or `None` if some simple generator it
    /// needs is not defined on the module.
    fn letter_matrix(&self, l: &Letter, coeff: &dyn Fn(&RatFunc) -> F) -> Result<Option<SpMat<F>>, ModuleError> {
        let (kind, i, j) = match l {
            Letter::E(i, j) => (Kind::E, *i, *j),
            Letter::F(i, j) => (Kind::F, *i, *j),
            Letter::K(_) => return self.element_matrix(&l.element(self.shape), coeff).map(Some),
        };
        if (i..j).any(|c| !self.has_op(kind, c)) {
            return Ok(None);
        }
        self.element_matrix(&l.element(self.shape), coeff).map(Some)
    }

    /// Checks every defining relation whose letters act on the module.
    pub fn verify_relations(&self, coeff: &dyn Fn(&RatFunc) -> F) -> Result<usize, ModuleError> {
        let mut cache: HashMap<Letter, Option<SpMat<F>>> = HashMap::new();
        let mut count = 0;
        'rel: for rel in all_relations(self.shape) {
            for (_, w) in &rel.terms {
                for l in w {
                    if !cache.contains_key(l) {
                        let m = self.letter_matrix(l, coeff)?;
                        cache.insert(l.clone(), m);
                    }
                    if cache[l].is_none() {
                        continue 'rel;
                    }
                }
            }
            for j in 0..self.dim() {
                let mut total = Vector::new();
                for (c, w) in &rel.terms {
                    let mut x = unit(j, &self.one);
                    for l in w.iter().rev() {
                        x = cache[l].as_ref().unwrap().apply(&x);
                    }
                    axpy(&mut total, &coeff(c), &x);
                }
                if !total.is_empty() {
                    return Err(ModuleError::Check(format!("relation {} {} fails on {}", rel.family, rel.label, self.labels[j])));
                }
            }
            count += 1;
        }
        Ok(count)
    }

    /// K_{α_i} acts on every weight vector by q_i^{z_i}, and every stored
    /// operator moves weights by the expected root.
    pub fn verify_weights(&self) -> Result<(), ModuleError> {
        let k = self.shape.rank();
        for (&(kind, i, r), m) in &self.ops {
            let mut shift = vec![0i64; k];
            shift[i - 1] = r as i64;
            shift[i] = -(r as i64);
            for (j, col) in m.cols.iter().enumerate() {
                for (t, _) in col {
                    let want: Vec<i64> = (0..k)
                        .map(|a| if kind == Kind::E { self.weights[j][a] + shift[a] } else { self.weights[j][a] - shift[a] })
                        .collect();
                    if self.weights[*t] != want {
                        return Err(ModuleError::Check(format!("{kind:?}_{i}^({r}) breaks weights at {}", self.labels[j])));
                    }
                }
            }
        }
        Ok(())
    }
}

/// M ⊗ N with the action of Δ(X_i^{(r)}) for every operator stored on both.
///
/// (a ⊗ b)(x ⊗ y) = (−1)^{|b||x|} ax ⊗ by.
pub fn tensor_module<F: Field>(
    m: &WeightModule<F>,
    n: &WeightModule<F>,
    coeff: &dyn Fn(&RatFunc) -> F,
) -> Result<WeightModule<F>, ModuleError> {
    if m.shape != n.shape || m.one != n.one {
        return Err(ModuleError::Mismatch);
    }
    let shape = m.shape;
    let (dm, dn) = (m.dim(), n.dim());
    let mut labels = Vec::with_capacity(dm * dn);
    let mut weights = Vec::with_capacity(dm * dn);
    let mut parities = Vec::with_capacity(dm * dn);
    for a in 0..dm {
        for b in 0..dn {
            labels.push(format!("{}⊗{}", m.labels[a], n.labels[b]));
            weights.push(m.weights[a].iter().zip(&n.weights[b]).map(|(x, y)| x + y).collect());
            parities.push((m.parities[a] + n.parities[b]) % 2);
        }
    }
    let mut out = WeightModule::new(shape, m.one.clone(), labels, weights, parities);
    let table = RootTable::new(shape);
    for key in m.op_keys() {
        if !n.ops.contains_key(&key) {
            continue;
        }
        let (kind, i, r) = key;
        let d = delta(&divided_power(shape, kind, i, i + 1, r).expect("stored power is valid"));
        let mut cols = vec![Vector::new(); dm * dn];
        for ((ma, mb), c) in d.terms() {
            let pb = mb.parity(&table);
            for a in 0..dm {
                let xa = m.apply_divided_monomial(ma, &RatFunc::one(), coeff, &unit(a, &m.one))?;
                if xa.is_empty() {
                    continue;
                }
                let sign = if pb == 1 && m.parities[a] == 1 { -1 } else { 1 };
                for b in 0..dn {
                    let yb = n.apply_divided_monomial(mb, c, coeff, &unit(b, &m.one))?;
                    for (s, x) in &xa {
                        for (t, y) in &yb {
                            let mut v = x.mul(y);
                            if sign < 0 {
                                v = v.neg();
                            }
                            axpy(&mut cols[a * dn + b], &m.one, &unit(s * dn + t, &v));
                        }
                    }
                }
            }
        }
        out.ops.insert(key, SpMat::from_columns(dm * dn, cols));
    }
    Ok(out)
}

/// The one-dimensional trivial module of weight 0, with divided powers up to `max_r`.
pub fn trivial_module<F: Field>(shape: Shape, one: F, max_r: u32) -> WeightModule<F> {
    let mut t = WeightModule::new(shape, one, vec!["1".into()], vec![vec![0; shape.rank()]], vec![0]);
    for i in 1..shape.rank() {
        let top = if i == shape.m { 1 } else { max_r };
        for r in 1..=top {
            t.set_op(Kind::E, i, r, SpMat::zero(1, 1));
            t.set_op(Kind::F, i, r, SpMat::zero(1, 1));
        }
    }
    t
}
