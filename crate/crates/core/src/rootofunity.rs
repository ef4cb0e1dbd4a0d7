//! Specialization at q = η (a primitive l-th root of unity, l odd ≥ 3) and
//! at q = 1.
//!
//! Modules at η come from the lattice U_𝒜⁻·v⁺ inside the generic Kac module.
//! The lattice is computed over the local ring of ℚ[q,q⁻¹] at Φ_l, which is
//! a DVR, so echelon forms exist; a basis there specializes to a basis of
//! the module over ℚ(η).

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::linalg::solve_columns;
use crate::pbwcore::{
    generator, kbracket_element, AMonomial, Element, KCoord, Kind, PbwError, RootTable,
};
use crate::repmod::{kac_module, tensor_module, Character, ModuleError, OpKey, SpMat, Vector, WeightModule};
use crate::rootdata::Shape;
use crate::scalars::{CycloField, CycloNum, Field, RatFunc, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("order {0} must be odd and at least 3")]
    BadOrder(u32),
    #[error("z = {0:?} is not in the restricted range")]
    OutOfRestrictedRange(Vec<i64>),
    #[error("z = {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("lattice: {0}")]
    Lattice(String),
    #[error(transparent)]
    Pbw(#[from] PbwError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

fn field(l: u32) -> Result<CycloField, RootError> {
    CycloField::new(l).map_err(|_| RootError::BadOrder(l))
}

/// An element of U_{η} in the divided-power basis.
pub type Specialized = BTreeMap<AMonomial, CycloNum>;

/// Image of an element of U_𝒜 under q ↦ η.
pub fn specialize_element(a: &Element, l: u32) -> Result<Specialized, RootError> {
    let k = field(l)?;
    let mut out = Specialized::new();
    for (m, c) in a.a_form_coords()? {
        let x = k.from_laurent(&c.to_rational());
        if !x.is_zero() {
            out.insert(m, x);
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------- counts

/// Dimensions of the small quantum groups, each triangular factor counted by
/// walking its basis labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallGroupCounts {
    pub l: u32,
    /// '𝔲⁺ (and '𝔲⁻): E₀^{(ψ)} E₁^{d}, ψ ∈ [0,l)^{I₀}, d ∈ {0,1}^{I₁}.
    pub plus: u64,
    /// '𝔲⁰: Π K_{α_i}^{N_i}, N_i ∈ [0,2l).
    pub zero: u64,
    /// 'ũ⁰: Π K_{i,t_i}, t_i ∈ [0,l).
    pub zero_tilde: u64,
    pub u: u64,
    pub u_tilde: u64,
}

/// Counts tuples in Π [0, radix) one at a time.
fn walk(radices: &[u64]) -> u64 {
    let mut idx = vec![0u64; radices.len()];
    let mut count = 0u64;
    loop {
        count += 1;
        let mut p = 0;
        loop {
            if p == idx.len() {
                return count;
            }
            idx[p] += 1;
            if idx[p] < radices[p] {
                break;
            }
            idx[p] = 0;
            p += 1;
        }
    }
}

pub fn small_group_counts(shape: Shape, l: u32) -> Result<SmallGroupCounts, RootError> {
    field(l)?;
    let t = RootTable::new(shape);
    let l64 = l as u64;
    let half: Vec<u64> = (0..t.len()).map(|id| if id < t.n_even { l64 } else { 2 }).collect();
    let plus = walk(&half);
    let minus = walk(&half);
    let zero = walk(&vec![2 * l64; shape.rank()]);
    let zero_tilde = walk(&vec![l64; shape.rank()]);
    Ok(SmallGroupCounts { l, plus, zero, zero_tilde, u: minus * zero * plus, u_tilde: minus * zero_tilde * plus })
}

// ---------------------------------------------------------------- lattice

fn root_coords(top: &[i64], mu: &[i64]) -> Vec<i64> {
    let mut c = Vec::with_capacity(top.len() - 1);
    let mut acc = 0;
    for t in 0..top.len() - 1 {
        acc += top[t] - mu[t];
        c.push(acc);
    }
    c
}

/// Echelon basis over the DVR of the span of `rows`; pivots are powers of Φ_l.
fn dvr_echelon(k: &CycloField, rows: Vec<Vec<RatFunc>>, ncols: usize) -> Vec<(usize, Vec<RatFunc>)> {
    let phi = k.cyclotomic();
    let mut rows: Vec<Vec<RatFunc>> = rows.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect();
    let mut out = Vec::new();
    for c in 0..ncols {
        let best = rows
            .iter()
            .enumerate()
            .filter(|(_, r)| !r[c].is_zero())
            .min_by_key(|(_, r)| k.valuation(&r[c]).unwrap())
            .map(|(a, _)| a);
        let Some(b) = best else { continue };
        let mut p = rows.swap_remove(b);
        let v = k.valuation(&p[c]).unwrap();
        let scale = &phi.pow(v) / &p[c];
        for x in p.iter_mut() {
            *x = &*x * &scale;
        }
        for r in rows.iter_mut() {
            if r[c].is_zero() {
                continue;
            }
            let f = &r[c] / &p[c];
            for (x, y) in r.iter_mut().zip(&p) {
                *x = &*x - &(&f * y);
            }
        }
        rows.retain(|r| r.iter().any(|x| !x.is_zero()));
        out.push((c, p));
    }
    out
}

fn max_power(m: &WeightModule<RatFunc>, kind: Kind, i: usize) -> Result<Vec<(u32, SpMat<RatFunc>)>, RootError> {
    let mut out = Vec::new();
    let top = if i == m.shape().m { 1 } else { u32::MAX };
    let mut r = 1;
    while r <= top {
        let x = m.op(kind, i, r)?;
        if x.is_zero() {
            break;
        }
        out.push((r, x));
        r += 1;
    }
    Ok(out)
}

/// U_𝒜⁻·v⁺ ⊂ M tensored down to ℚ(η), with E_i^{(r)}, F_i^{(r)} stored for r ≤ l.
///
/// `m` must be a highest weight module over ℚ(q) with a one-dimensional top.
pub fn specialize_module(m: &WeightModule<RatFunc>, l: u32) -> Result<WeightModule<CycloNum>, RootError> {
    let k = field(l)?;
    let shape = m.shape();
    let rank = shape.rank();
    let spaces = m.weight_spaces();
    let top = spaces
        .iter()
        .find(|(t, _)| spaces.keys().all(|mu| root_coords(t, mu).iter().all(|&x| x >= 0)))
        .map(|(t, idx)| (t.clone(), idx.clone()))
        .ok_or(ModuleError::NotHighestWeight)?;
    if top.1.len() != 1 {
        return Err(ModuleError::NotHighestWeight.into());
    }
    let pos: HashMap<usize, usize> =
        spaces.values().flat_map(|idx| idx.iter().enumerate().map(|(a, &b)| (b, a))).collect();
    let height = |mu: &[i64]| root_coords(&top.0, mu).iter().sum::<i64>();

    let mut lowering = Vec::new();
    for i in 1..rank {
        for (r, x) in max_power(m, Kind::F, i)? {
            lowering.push((i, r, x));
        }
    }

    // lattice basis per weight, as (pivot column, dense coordinates)
    let mut lattice: BTreeMap<Vec<i64>, Vec<(usize, Vec<RatFunc>)>> = BTreeMap::new();
    lattice.insert(top.0.clone(), vec![(0, vec![RatFunc::one()])]);
    let mut order: Vec<&Vec<i64>> = spaces.keys().collect();
    order.sort_by_key(|mu| height(mu));
    for mu in order.into_iter().skip(1) {
        let idx = &spaces[mu];
        let mut rows = Vec::new();
        for (i, r, x) in &lowering {
            let mut nu = mu.clone();
            nu[i - 1] += *r as i64;
            nu[*i] -= *r as i64;
            let Some(src) = lattice.get(&nu) else { continue };
            let src_idx = &spaces[&nu];
            for (_, b) in src {
                let v: Vector<RatFunc> =
                    b.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(a, c)| (src_idx[a], c.clone())).collect();
                let mut row = vec![RatFunc::zero(); idx.len()];
                for (t, c) in x.apply(&v) {
                    row[pos[&t]] = c;
                }
                rows.push(row);
            }
        }
        let basis = dvr_echelon(&k, rows, idx.len());
        if basis.len() != idx.len() {
            return Err(RootError::Lattice(format!("U_A v+ has rank {} < {} at weight {mu:?}", basis.len(), idx.len())));
        }
        lattice.insert(mu.clone(), basis);
    }

    // new global indices
    let mut labels = Vec::new();
    let mut weights = Vec::new();
    let mut parities = Vec::new();
    let mut start: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    for (mu, basis) in &lattice {
        start.insert(mu.clone(), labels.len());
        for (c, _) in basis {
            let g = spaces[mu][*c];
            labels.push(m.labels()[g].clone());
            weights.push(mu.clone());
            parities.push(m.parity(g));
        }
    }
    let n = labels.len();
    let mut out = WeightModule::new(shape, k.one(), labels, weights, parities);
    for i in 1..rank {
        let top_r = if i == shape.m { 1 } else { l };
        for kind in [Kind::E, Kind::F] {
            for r in 1..=top_r {
                let x = m.op(kind, i, r)?;
                let mut cols: Vec<Vector<CycloNum>> = Vec::with_capacity(n);
                for (mu, basis) in &lattice {
                    let src_idx = &spaces[mu];
                    let mut nu = mu.clone();
                    let s = if kind == Kind::E { r as i64 } else { -(r as i64) };
                    nu[i - 1] += s;
                    nu[i] -= s;
                    for (_, b) in basis {
                        let v: Vector<RatFunc> = b
                            .iter()
                            .enumerate()
                            .filter(|(_, c)| !c.is_zero())
                            .map(|(a, c)| (src_idx[a], c.clone()))
                            .collect();
                        let y = x.apply(&v);
                        let mut col = Vector::new();
                        if !y.is_empty() {
                            let target = lattice
                                .get(&nu)
                                .ok_or_else(|| RootError::Lattice(format!("image at missing weight {nu:?}")))?;
                            let mut dense = vec![RatFunc::zero(); spaces[&nu].len()];
                            for (t, c) in y {
                                dense[pos[&t]] = c;
                            }
                            let colsb: Vec<Vec<RatFunc>> = target.iter().map(|(_, b)| b.clone()).collect();
                            let coef = solve_columns(&colsb, &dense)
                                .ok_or_else(|| RootError::Lattice(format!("image leaves the span at {nu:?}")))?;
                            for (a, c) in coef.iter().enumerate() {
                                if c.is_zero() {
                                    continue;
                                }
                                if k.valuation(c).unwrap() < 0 {
                                    return Err(RootError::Lattice(format!("{kind:?}_{i}^({r}) is not integral on the lattice")));
                                }
                                let e = k.evaluate(c)?;
                                if !e.is_zero() {
                                    col.insert(start[&nu] + a, e);
                                }
                            }
                        }
                        cols.push(col);
                    }
                }
                out.set_op(kind, i, r, SpMat::from_columns(n, cols));
            }
        }
    }
    out.verify_weights()?;
    out.verify_relations(&at_root(&k))?;
    Ok(out)
}

/// Coefficient map q ↦ η for relation and coproduct coefficients.
pub fn at_root(k: &CycloField) -> impl Fn(&RatFunc) -> CycloNum + '_ {
    move |c: &RatFunc| k.evaluate(c).expect("coefficient regular at η")
}

/// The Kac module K(λ) specialized at η along U_𝒜⁻v⁺.
pub fn specialize_kac(shape: Shape, lambda: &[i64], l: u32) -> Result<WeightModule<CycloNum>, RootError> {
    field(l)?;
    let kac = kac_module(shape, lambda)?;
    specialize_module(&kac, l)
}

/// L_η(z) for z ∈ ℤ₊: the simple head of the specialized Kac module.
pub fn simple_at_root(shape: Shape, z: &[i64], l: u32) -> Result<WeightModule<CycloNum>, RootError> {
    field(l)?;
    if !shape.in_zplus(z) {
        return Err(RootError::NotDominant(z.to_vec()));
    }
    let lambda = shape.z_to_weight(z).map_err(|_| RootError::NotDominant(z.to_vec()))?;
    Ok(specialize_kac(shape, &lambda.eps, l)?.simple_head()?)
}

/// L_η(z) for z in the restricted range.
pub fn restricted_simple(shape: Shape, z: &[i64], l: u32) -> Result<WeightModule<CycloNum>, RootError> {
    field(l)?;
    if !shape.in_xplus_l(z, l) {
        return Err(RootError::OutOfRestrictedRange(z.to_vec()));
    }
    simple_at_root(shape, z, l)
}

// ---------------------------------------------------------------- checks on L_η(z)

fn top_index<F: Field>(m: &WeightModule<F>) -> Option<usize> {
    (0..m.dim()).find(|&j| (0..m.dim()).all(|a| root_coords(m.weight(j), m.weight(a)).iter().all(|&x| x >= 0)))
}

/// Observations on a restricted simple module with top vector x.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedReport {
    pub dim: usize,
    /// F_i^{(l)} x = 0 for every even i.
    pub frobenius_kills_top: bool,
    /// dim of the joint kernel of E_i, i ∈ [1,m+n) ∖ {m}.
    pub even_kernel_dim: usize,
    /// dim of the joint kernel of all E_i, i ∈ [1,m+n).
    pub kernel_dim: usize,
    /// dim of the span of x under F_i (r = 1), i.e. of 'ũ·x.
    pub generated_dim: usize,
    /// F_m x ≠ 0.
    pub odd_lowering_nonzero: bool,
}

impl RestrictedReport {
    /// (a), (c), (d), with the kernel taken over all simple E's.
    pub fn holds(&self) -> bool {
        self.frobenius_kills_top && self.kernel_dim == 1 && self.generated_dim == self.dim
    }
}

pub fn restricted_report(shape: Shape, z: &[i64], l: u32) -> Result<RestrictedReport, RootError> {
    let lz = restricted_simple(shape, z, l)?;
    let x = top_index(&lz).ok_or(ModuleError::NotHighestWeight)?;
    let k = lz.one().clone();
    let xv: Vector<CycloNum> = [(x, k.clone())].into_iter().collect();
    let rank = shape.rank();
    let mut frob = true;
    for i in (1..rank).filter(|&i| i != shape.m) {
        if !lz.op(Kind::F, i, l)?.apply(&xv).is_empty() {
            frob = false;
        }
    }
    let even: Vec<OpKey> = (1..rank).filter(|&i| i != shape.m).map(|i| (Kind::E, i, 1)).collect();
    let all: Vec<OpKey> = (1..rank).map(|i| (Kind::E, i, 1)).collect();
    let lower: Vec<OpKey> = (1..rank).map(|i| (Kind::F, i, 1)).collect();
    Ok(RestrictedReport {
        dim: lz.dim(),
        frobenius_kills_top: frob,
        even_kernel_dim: lz.joint_kernel(&even)?.len(),
        kernel_dim: lz.joint_kernel(&all)?.len(),
        generated_dim: lz.generated_dim(&xv, &lower)?,
        odd_lowering_nonzero: !lz.op(Kind::F, shape.m, 1)?.apply(&xv).is_empty(),
    })
}

/// (char L_η(z), char L_η(z') ⊗ L_η(l z'')) for z = z' + l z''.
pub fn frobenius_characters(shape: Shape, z: &[i64], l: u32) -> Result<(Character, Character), RootError> {
    let k = field(l)?;
    let (z1, z2) = shape.frobenius_decompose(z, l).map_err(|_| RootError::NotDominant(z.to_vec()))?;
    let lz2: Vec<i64> = z2.iter().map(|x| x * l as i64).collect();
    let whole = simple_at_root(shape, z, l)?;
    let a = simple_at_root(shape, &z1, l)?;
    let b = simple_at_root(shape, &lz2, l)?;
    let t = tensor_module(&a, &b, &at_root(&k))?;
    Ok((whole.character(), t.character()))
}

/// On L_η(l z'): whether every E_i and F_i (r = 1) acts as zero, and the dimension.
pub fn frobenius_pullback_pattern(shape: Shape, zp: &[i64], l: u32) -> Result<(bool, usize), RootError> {
    let lz: Vec<i64> = zp.iter().map(|x| x * l as i64).collect();
    let m = simple_at_root(shape, &lz, l)?;
    let mut zero = true;
    for i in 1..shape.rank() {
        for kind in [Kind::E, Kind::F] {
            zero &= m.op(kind, i, 1)?.is_zero();
        }
    }
    Ok((zero, m.dim()))
}

// ---------------------------------------------------------------- q → 1

/// One instance of a classical Serre relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalInstance {
    pub family: &'static str,
    pub label: String,
    pub holds: bool,
}

/// Whether `x` lies in U_𝒜 and maps to zero in U_1 modulo (K_{α_i} − 1).
pub fn vanishes_classically(x: &Element) -> bool {
    let Ok(coords) = x.a_form_coords() else {
        return false;
    };
    let mut acc: BTreeMap<AMonomial, BigInt> = BTreeMap::new();
    for (mut m, c) in coords {
        for kc in m.k.iter_mut() {
            if let KCoord::Br { t, .. } = *kc {
                *kc = KCoord::Br { delta: 0, t };
            }
        }
        *acc.entry(m).or_insert_with(BigInt::zero) += c.at_one();
    }
    acc.values().all(|c| c.is_zero())
}

/// φ(e_i), φ(f_i), φ(h_{α_s}) checked against (a1)–(a8).
pub fn classical_limit_check(shape: Shape) -> Result<Vec<ClassicalInstance>, RootError> {
    let k = shape.rank();
    let m = shape.m;
    let e = |i: usize| generator(shape, Kind::E, i, i + 1);
    let f = |i: usize| generator(shape, Kind::F, i, i + 1);
    let h = |s: usize| kbracket_element(shape, s, 0, 1);
    let int = |n: i64| RatFunc::from_int(n);
    let mut out = Vec::new();
    let mut push = |family: &'static str, label: String, x: Element| {
        out.push(ClassicalInstance { family, label, holds: vanishes_classically(&x) });
    };
    for i in 1..=k {
        for j in 1..=k {
            push("a1", format!("[h{i},h{j}]"), h(i)?.super_bracket(&h(j)?));
        }
    }
    for i in 1..=k {
        for j in 1..k {
            let a = int(shape.cartan_entry(i, j).expect("valid indices"));
            push("a2", format!("[h{i},e{j}]"), &h(i)?.super_bracket(&e(j)?) - &e(j)?.scale(&a));
            push("a2", format!("[h{i},f{j}]"), &h(i)?.super_bracket(&f(j)?) + &f(j)?.scale(&a));
        }
    }
    for i in 1..k {
        for j in 1..k {
            let mut x = e(i)?.super_bracket(&f(j)?);
            if i == j {
                x = &x - &h(i)?;
            }
            push("a3", format!("[e{i},f{j}]"), x);
        }
    }
    for i in 1..k {
        for j in 1..k {
            if i.abs_diff(j) > 1 {
                push("a4", format!("[e{i},e{j}]"), e(i)?.super_bracket(&e(j)?));
                push("a4", format!("[f{i},f{j}]"), f(i)?.super_bracket(&f(j)?));
            }
        }
    }
    for i in 1..k {
        for j in 1..k {
            if i.abs_diff(j) == 1 && i != m {
                for (fam, g) in [("a5", &e as &dyn Fn(usize) -> Result<Element, PbwError>), ("a6", &f)] {
                    let (a, b) = (g(i)?, g(j)?);
                    let x = &(&(&(&a * &a) * &b) - &(&(&a * &b) * &a).scale(&int(2))) + &(&(&b * &a) * &a);
                    push(fam, format!("serre({i},{j})"), x);
                }
            }
        }
    }
    push("a7", format!("e{m}^2"), &e(m)? * &e(m)?);
    push("a7", format!("f{m}^2"), &f(m)? * &f(m)?);
    if m >= 2 && m + 1 < k {
        for (name, g) in [("e", &e as &dyn Fn(usize) -> Result<Element, PbwError>), ("f", &f)] {
            let x = g(m)?.super_bracket(&g(m - 1)?.super_bracket(&g(m)?.super_bracket(&g(m + 1)?)));
            push("a8", format!("[{name}{m},[{name}{},[{name}{m},{name}{}]]]", m - 1, m + 1), x);
        }
    }
    Ok(out)
}

/// Convenience for tests: the K^l element of U_𝒜 for α_i.
pub fn k_power(shape: Shape, i: usize, l: u32) -> Result<Element, RootError> {
    Ok(crate::pbwcore::k_alpha(shape, i, l as i64)?)
}
