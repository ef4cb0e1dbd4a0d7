//! Elements of U_q(gl(m,n)) over ℚ(q) in the PBW basis.

mod aform;
mod engine;
mod monomial;
pub mod relations;

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use thiserror::Error;

pub use aform::{AMonomial, KCoord};
pub use engine::Algebra;
pub use monomial::{Monomial, RootTable};

use crate::rootdata::Shape;
use crate::scalars::{gauss_factorial, LaurentInt, RatFunc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PbwError {
    #[error("indices ({0},{1}) do not name a positive root of this shape")]
    BadIndex(usize, usize),
    #[error("K exponent vector has {got} entries, expected {want}")]
    BadKVector { want: usize, got: usize },
    #[error("odd root vector ({0},{1}) squares to zero; divided power {2} not allowed")]
    OddPowerTooHigh(usize, usize, u32),
    #[error("coefficient {coeff} of {monomial} is not in Z[q,q^-1]")]
    NotIntegral { monomial: String, coeff: String },
    #[error("elements belong to different shapes")]
    ShapeMismatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    E,
    F,
}

/// A simple generator: E_{α_c}, F_{α_c} or K_μ.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Gen {
    E(usize),
    F(usize),
    K(Vec<i64>),
}

/// Finite linear combination of PBW monomials with nonzero ℚ(q) coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Element {
    shape: Shape,
    terms: BTreeMap<Monomial, RatFunc>,
}

impl Element {
    pub fn zero(shape: Shape) -> Self {
        Element { shape, terms: BTreeMap::new() }
    }

    pub fn one(shape: Shape) -> Self {
        Self::scalar(shape, RatFunc::one())
    }

    pub fn scalar(shape: Shape, c: RatFunc) -> Self {
        let t = RootTable::new(shape);
        Self::from_monomial(shape, Monomial::identity(&t), c)
    }

    pub fn from_monomial(shape: Shape, m: Monomial, c: RatFunc) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Element { shape, terms }
    }

    pub(crate) fn from_lin(shape: Shape, lin: engine::Lin<Monomial>) -> Self {
        Element { shape, terms: lin.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn from_terms(shape: Shape, terms: impl IntoIterator<Item = (Monomial, RatFunc)>) -> Self {
        let mut e = Self::zero(shape);
        for (m, c) in terms {
            e.add_term(m, c);
        }
        e
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn algebra(&self) -> Arc<Algebra> {
        Algebra::get(self.shape)
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, RatFunc> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> RatFunc {
        self.terms.get(m).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// The scalar value if this element is a multiple of 1.
    pub fn as_scalar(&self) -> Option<RatFunc> {
        match self.terms.len() {
            0 => Some(RatFunc::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_identity().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        let s = match self.terms.get(&m) {
            Some(old) => old + &c,
            None => c,
        };
        if s.is_zero() {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, s);
        }
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.shape);
        }
        Element { shape: self.shape, terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn mul(&self, o: &Element) -> Element {
        assert_eq!(self.shape, o.shape, "multiplying elements of different shapes");
        let alg = self.algebra();
        let mut acc = engine::Lin::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                let cab = ca * cb;
                for (m, c) in alg.mul_mono(a, b) {
                    engine::add_into(&mut acc, m, &cab * &c);
                }
            }
        }
        Element::from_lin(self.shape, acc)
    }

    pub fn pow(&self, n: u32) -> Element {
        let mut acc = Element::one(self.shape);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// `xy − (−1)^{x̄ȳ} yx` for homogeneous `x`, `y`.
    pub fn super_bracket(&self, o: &Element) -> Element {
        let p = self.parity().unwrap_or(0) * o.parity().unwrap_or(0);
        let yx = o.mul(self);
        let s = if p == 1 { yx.scale(&RatFunc::from_int(-1)) } else { yx };
        &self.mul(o) - &s
    }

    /// Common parity of all terms, or `None` if mixed or zero.
    pub fn parity(&self) -> Option<u8> {
        let t = RootTable::new(self.shape);
        let mut it = self.terms.keys().map(|m| m.parity(&t));
        let p = it.next()?;
        it.all(|x| x == p).then_some(p)
    }

    /// Common weight of all terms, or `None` if mixed or zero.
    pub fn weight(&self) -> Option<Vec<i64>> {
        let t = RootTable::new(self.shape);
        let mut it = self.terms.keys().map(|m| m.weight(&t));
        let w = it.next()?;
        it.all(|x| x == w).then_some(w)
    }

    /// Ω: anti-automorphism with E ↔ F, K ↦ K⁻¹, q ↦ q⁻¹.
    pub fn omega(&self) -> Element {
        let mut out = Element::zero(self.shape);
        for (m, c) in &self.terms {
            let mm = Monomial { f: m.e.clone(), k: m.k.iter().map(|x| -x).collect(), e: m.f.clone() };
            out.add_term(mm, c.bar());
        }
        out
    }

    /// Ψ: graded anti-automorphism fixing E_{α_i}, F_{α_i}, K_j with q ↦ q⁻¹.
    pub fn psi(&self) -> Element {
        let alg = self.algebra();
        let mut out = Element::zero(self.shape);
        for (m, c) in &self.terms {
            for (wc, word) in monomial_words(&alg, m) {
                let sign = graded_reversal_sign(self.shape, &word);
                let mut acc = Element::scalar(self.shape, (&c.bar() * &wc.bar()).clone());
                if sign {
                    acc = -&acc;
                }
                for g in word.iter().rev() {
                    acc = &acc * &gen_element(self.shape, g);
                }
                out = &out + &acc;
            }
        }
        out
    }

    /// Coefficient-wise image under a ring map of ℚ(q).
    pub fn map_coeffs(&self, f: impl Fn(&RatFunc) -> RatFunc) -> Element {
        Element::from_terms(self.shape, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Expands every monomial into words of simple generators and applies
    /// `ops.image` letter by letter. With `anti` the letters are taken in
    /// reverse order with the graded sign (−1)^{Σ_{i<j} p_i p_j}.
    pub fn apply_on_generators<T: Clone>(&self, ops: &GenMap<'_, T>, anti: bool) -> T {
        let alg = self.algebra();
        let mut total = ops.zero.clone();
        for (m, c) in &self.terms {
            for (wc, word) in monomial_words(&alg, m) {
                let mut coef = c * &wc;
                if anti && graded_reversal_sign(self.shape, &word) {
                    coef = -&coef;
                }
                let mut acc = ops.one.clone();
                let letters: Vec<&Gen> = if anti { word.iter().rev().collect() } else { word.iter().collect() };
                for g in letters {
                    acc = (ops.mul)(&acc, &(ops.image)(g));
                }
                total = (ops.add)(&total, &(ops.scale)(&acc, &coef));
            }
        }
        total
    }
}

/// Target algebra data for [`Element::apply_on_generators`].
pub struct GenMap<'a, T, L = Gen> {
    pub image: &'a dyn Fn(&L) -> T,
    pub mul: &'a dyn Fn(&T, &T) -> T,
    pub add: &'a dyn Fn(&T, &T) -> T,
    pub scale: &'a dyn Fn(&T, &RatFunc) -> T,
    pub zero: T,
    pub one: T,
}

/// True when reversing `word` of generators picks up a minus sign.
pub(crate) fn graded_reversal_sign(shape: Shape, word: &[Gen]) -> bool {
    let odd = word.iter().filter(|g| matches!(g, Gen::E(c) | Gen::F(c) if *c == shape.m)).count();
    (odd * odd.saturating_sub(1) / 2) % 2 == 1
}

/// Element for a simple generator.
pub fn gen_element(shape: Shape, g: &Gen) -> Element {
    match g {
        Gen::E(c) => generator(shape, Kind::E, *c, c + 1).unwrap(),
        Gen::F(c) => generator(shape, Kind::F, *c, c + 1).unwrap(),
        Gen::K(mu) => k_monomial(shape, mu).unwrap(),
    }
}

/// Writes a PBW monomial as a combination of words in simple generators.
pub fn monomial_words(alg: &Algebra, m: &Monomial) -> Vec<(RatFunc, Vec<Gen>)> {
    let mut acc: Vec<(RatFunc, Vec<Gen>)> = vec![(RatFunc::one(), Vec::new())];
    let extend = |acc: Vec<(RatFunc, Vec<Gen>)>, id: usize, is_f: bool| {
        let mut next = Vec::new();
        for (c, w) in &acc {
            for (c2, w2) in alg.root_words(id, is_f) {
                let mut w = w.clone();
                w.extend(w2.iter().map(|&x| if is_f { Gen::F(x) } else { Gen::E(x) }));
                next.push((c * c2, w));
            }
        }
        next
    };
    for (id, p) in m.f_atoms() {
        for _ in 0..p {
            acc = extend(acc, id, true);
        }
    }
    if m.k.iter().any(|&x| x != 0) {
        for (_, w) in acc.iter_mut() {
            w.push(Gen::K(m.k.clone()));
        }
    }
    for (id, p) in m.e_atoms() {
        for _ in 0..p {
            acc = extend(acc, id, false);
        }
    }
    acc
}

/// E_{ij} or F_{ij} as a single PBW atom.
pub fn generator(shape: Shape, kind: Kind, i: usize, j: usize) -> Result<Element, PbwError> {
    let t = RootTable::new(shape);
    let id = t.id(i, j).ok_or(PbwError::BadIndex(i, j))?;
    let mut m = Monomial::identity(&t);
    match kind {
        Kind::E => m.e[id] = 1,
        Kind::F => m.f[id] = 1,
    }
    Ok(Element::from_monomial(shape, m, RatFunc::one()))
}

/// K₁^{μ₁}⋯K_{m+n}^{μ_{m+n}}.
pub fn k_monomial(shape: Shape, mu: &[i64]) -> Result<Element, PbwError> {
    if mu.len() != shape.rank() {
        return Err(PbwError::BadKVector { want: shape.rank(), got: mu.len() });
    }
    let t = RootTable::new(shape);
    let mut m = Monomial::identity(&t);
    m.k = mu.to_vec();
    Ok(Element::from_monomial(shape, m, RatFunc::one()))
}

/// Exponent vector of K_{α_i}^e in the K_j basis.
pub fn k_alpha_vector(shape: Shape, i: usize, e: i64) -> Vec<i64> {
    let mut v = vec![0; shape.rank()];
    v[i - 1] = e;
    if i < shape.rank() {
        v[i] = -e;
    }
    v
}

/// K_{α_i}^e.
pub fn k_alpha(shape: Shape, i: usize, e: i64) -> Result<Element, PbwError> {
    if i == 0 || i > shape.rank() {
        return Err(PbwError::BadIndex(i, i));
    }
    k_monomial(shape, &k_alpha_vector(shape, i, e))
}

/// E_{ij}^{(n)} = E_{ij}^n / [n]! (likewise for F).
pub fn divided_power(shape: Shape, kind: Kind, i: usize, j: usize, n: u32) -> Result<Element, PbwError> {
    let g = generator(shape, kind, i, j)?;
    if shape.is_odd(i, j) && n >= 2 {
        return Err(PbwError::OddPowerTooHigh(i, j, n));
    }
    let f = RatFunc::from_laurent_int(&gauss_factorial(n, 1));
    Ok(g.pow(n).scale(&f.inv().unwrap()))
}

/// [K_{α_i}; c over t] as a Laurent polynomial in K_{α_i}.
pub fn kbracket_element(shape: Shape, i: usize, c: i64, t: u32) -> Result<Element, PbwError> {
    if i == 0 || i > shape.rank() {
        return Err(PbwError::BadIndex(i, i));
    }
    let sg = shape.q_sign(i) as i64;
    // Laurent polynomial in x = K_{α_i}: exponent -> coefficient
    let mut poly: BTreeMap<i64, RatFunc> = BTreeMap::new();
    poly.insert(0, RatFunc::one());
    for s in 1..=t as i64 {
        let den = &RatFunc::q_pow(sg * s) - &RatFunc::q_pow(-sg * s);
        let a = &RatFunc::q_pow(sg * (c - s + 1)) / &den;
        let b = -&(&RatFunc::q_pow(-sg * (c - s + 1)) / &den);
        let mut next: BTreeMap<i64, RatFunc> = BTreeMap::new();
        for (e, x) in &poly {
            for (de, y) in [(1, &a), (-1, &b)] {
                let v = x * y;
                let slot = next.entry(e + de).or_insert_with(RatFunc::zero);
                *slot = &*slot + &v;
            }
        }
        poly = next;
    }
    let t = RootTable::new(shape);
    let mut out = Element::zero(shape);
    for (e, c) in poly {
        let mut m = Monomial::identity(&t);
        m.k = k_alpha_vector(shape, i, e);
        out.add_term(m, c);
    }
    Ok(out)
}

/// Integral check helper used by the A-form conversion.
pub(crate) fn to_integral(c: &RatFunc) -> Option<LaurentInt> {
    c.to_laurent_int()
}

impl Add for &Element {
    type Output = Element;
    fn add(self, o: &Element) -> Element {
        assert_eq!(self.shape, o.shape, "adding elements of different shapes");
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, o: &Element) -> Element {
        self + &(-o)
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element { shape: self.shape, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, o: &Element) -> Element {
        Element::mul(self, o)
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, o: Element) -> Element {
        &self + &o
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, o: Element) -> Element {
        &self - &o
    }
}

impl Mul for Element {
    type Output = Element;
    fn mul(self, o: Element) -> Element {
        &self * &o
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}
