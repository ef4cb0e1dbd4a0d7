//! Coproduct, counit and antipode, with the signed tensor square.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::pbwcore::{gen_element, k_alpha_vector, k_monomial, Element, Gen, GenMap, Monomial, RootTable};
use crate::rootdata::Shape;
use crate::scalars::RatFunc;

/// Element of U ⊗ U with multiplication (a⊗b)(c⊗d) = (−1)^{b̄c̄} ac⊗bd.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorElement {
    shape: Shape,
    terms: BTreeMap<(Monomial, Monomial), RatFunc>,
}

impl TensorElement {
    pub fn zero(shape: Shape) -> Self {
        TensorElement { shape, terms: BTreeMap::new() }
    }

    pub fn one(shape: Shape) -> Self {
        Self::pure(&Element::one(shape), &Element::one(shape))
    }

    /// a ⊗ b.
    pub fn pure(a: &Element, b: &Element) -> Self {
        assert_eq!(a.shape(), b.shape());
        let mut out = Self::zero(a.shape());
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                out.add_term(ma.clone(), mb.clone(), ca * cb);
            }
        }
        out
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn terms(&self) -> &BTreeMap<(Monomial, Monomial), RatFunc> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, a: Monomial, b: Monomial, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        let key = (a, b);
        let s = match self.terms.get(&key) {
            Some(old) => old + &c,
            None => c,
        };
        if s.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, s);
        }
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        let mut out = Self::zero(self.shape);
        for ((a, b), x) in &self.terms {
            out.add_term(a.clone(), b.clone(), x * c);
        }
        out
    }

    pub fn multiply(&self, o: &TensorElement) -> TensorElement {
        assert_eq!(self.shape, o.shape, "tensor factors from different shapes");
        let t = RootTable::new(self.shape);
        let mut out = Self::zero(self.shape);
        for ((a, b), x) in &self.terms {
            let pb = b.parity(&t);
            let ea = Element::from_monomial(self.shape, a.clone(), RatFunc::one());
            let eb = Element::from_monomial(self.shape, b.clone(), RatFunc::one());
            for ((c, d), y) in &o.terms {
                let pc = c.parity(&t);
                let mut coef = x * y;
                if pb * pc == 1 {
                    coef = -&coef;
                }
                let ac = &ea * &Element::from_monomial(self.shape, c.clone(), RatFunc::one());
                let bd = &eb * &Element::from_monomial(self.shape, d.clone(), RatFunc::one());
                for (m1, c1) in ac.terms() {
                    let cc = &coef * c1;
                    for (m2, c2) in bd.terms() {
                        out.add_term(m1.clone(), m2.clone(), &cc * c2);
                    }
                }
            }
        }
        out
    }

    /// Applies linear maps `f ⊗ g` (no signs; both maps must be even or the
    /// caller handles signs).
    pub fn map_factors(&self, f: impl Fn(&Element) -> Element, g: impl Fn(&Element) -> Element) -> TensorElement {
        let mut out = Self::zero(self.shape);
        for ((a, b), x) in &self.terms {
            let fa = f(&Element::from_monomial(self.shape, a.clone(), x.clone()));
            let gb = g(&Element::from_monomial(self.shape, b.clone(), RatFunc::one()));
            out = &out + &TensorElement::pure(&fa, &gb);
        }
        out
    }

    /// m: a⊗b ↦ ab.
    pub fn contract(&self) -> Element {
        let mut out = Element::zero(self.shape);
        for ((a, b), x) in &self.terms {
            let ea = Element::from_monomial(self.shape, a.clone(), x.clone());
            let eb = Element::from_monomial(self.shape, b.clone(), RatFunc::one());
            out = &out + &(&ea * &eb);
        }
        out
    }

    /// Ω̄(a⊗b) = Ω(b) ⊗ Ω(a).
    pub fn omega_bar(&self) -> TensorElement {
        let mut out = Self::zero(self.shape);
        for ((a, b), x) in &self.terms {
            let oa = Element::from_monomial(self.shape, a.clone(), x.clone()).omega();
            let ob = Element::from_monomial(self.shape, b.clone(), RatFunc::one()).omega();
            out = &out + &TensorElement::pure(&ob, &oa);
        }
        out
    }
}

impl Add for &TensorElement {
    type Output = TensorElement;
    fn add(self, o: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for ((a, b), x) in &o.terms {
            out.add_term(a.clone(), b.clone(), x.clone());
        }
        out
    }
}

impl Neg for &TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        self.scale(&RatFunc::from_int(-1))
    }
}

impl Sub for &TensorElement {
    type Output = TensorElement;
    fn sub(self, o: &TensorElement) -> TensorElement {
        self + &(-o)
    }
}

impl Mul for &TensorElement {
    type Output = TensorElement;
    fn mul(self, o: &TensorElement) -> TensorElement {
        self.multiply(o)
    }
}

/// (x ⊗ y) · (z ⊗ w) in the signed tensor square.
pub fn tensor_multiply(x: &TensorElement, y: &TensorElement) -> TensorElement {
    x.multiply(y)
}

fn delta_gen(shape: Shape, g: &Gen) -> TensorElement {
    let one = Element::one(shape);
    match g {
        Gen::E(c) => {
            let e = gen_element(shape, g);
            let k = k_monomial(shape, &k_alpha_vector(shape, *c, 1)).unwrap();
            &TensorElement::pure(&e, &k) + &TensorElement::pure(&one, &e)
        }
        Gen::F(c) => {
            let f = gen_element(shape, g);
            let k = k_monomial(shape, &k_alpha_vector(shape, *c, -1)).unwrap();
            &TensorElement::pure(&f, &one) + &TensorElement::pure(&k, &f)
        }
        Gen::K(mu) => {
            let k = k_monomial(shape, mu).unwrap();
            TensorElement::pure(&k, &k)
        }
    }
}

/// Δ, extended from the generators as an algebra map into the signed tensor square.
pub fn delta(a: &Element) -> TensorElement {
    let shape = a.shape();
    let image = |g: &Gen| delta_gen(shape, g);
    let mul = |x: &TensorElement, y: &TensorElement| x.multiply(y);
    let add = |x: &TensorElement, y: &TensorElement| x + y;
    let scale = |x: &TensorElement, c: &RatFunc| x.scale(c);
    let ops = GenMap {
        image: &image,
        mul: &mul,
        add: &add,
        scale: &scale,
        zero: TensorElement::zero(shape),
        one: TensorElement::one(shape),
    };
    a.apply_on_generators(&ops, false)
}

/// ε: E, F ↦ 0 and K_j ↦ 1.
pub fn counit(a: &Element) -> RatFunc {
    let mut s = RatFunc::zero();
    for (m, c) in a.terms() {
        if m.degree() == 0 {
            s = &s + c;
        }
    }
    s
}

fn antipode_gen(shape: Shape, g: &Gen) -> Element {
    match g {
        Gen::E(c) => {
            let k = k_monomial(shape, &k_alpha_vector(shape, *c, -1)).unwrap();
            -&(&gen_element(shape, g) * &k)
        }
        Gen::F(c) => {
            let k = k_monomial(shape, &k_alpha_vector(shape, *c, 1)).unwrap();
            -&(&k * &gen_element(shape, g))
        }
        Gen::K(mu) => {
            let inv: Vec<i64> = mu.iter().map(|x| -x).collect();
            k_monomial(shape, &inv).unwrap()
        }
    }
}

/// S, extended as a graded anti-automorphism.
pub fn antipode(a: &Element) -> Element {
    let shape = a.shape();
    let image = |g: &Gen| antipode_gen(shape, g);
    let mul = |x: &Element, y: &Element| x * y;
    let add = |x: &Element, y: &Element| x + y;
    let scale = |x: &Element, c: &RatFunc| x.scale(c);
    let ops = GenMap {
        image: &image,
        mul: &mul,
        add: &add,
        scale: &scale,
        zero: Element::zero(shape),
        one: Element::one(shape),
    };
    a.apply_on_generators(&ops, true)
}

/// m ∘ (S ⊗ id) ∘ Δ.
pub fn antipode_left_contract(a: &Element) -> Element {
    delta(a).map_factors(antipode, |x| x.clone()).contract()
}

/// m ∘ (id ⊗ S) ∘ Δ.
pub fn antipode_right_contract(a: &Element) -> Element {
    delta(a).map_factors(|x| x.clone(), antipode).contract()
}

/// Element of U ⊗ U ⊗ U, used for coassociativity checks.
pub type Triple = BTreeMap<(Monomial, Monomial, Monomial), RatFunc>;

fn triple_add(t: &mut Triple, k: (Monomial, Monomial, Monomial), c: RatFunc) {
    if c.is_zero() {
        return;
    }
    let s = match t.get(&k) {
        Some(old) => old + &c,
        None => c,
    };
    if s.is_zero() {
        t.remove(&k);
    } else {
        t.insert(k, s);
    }
}

/// (Δ ⊗ id)Δ(a) and (id ⊗ Δ)Δ(a).
pub fn coassociativity_sides(a: &Element) -> (Triple, Triple) {
    let shape = a.shape();
    let d = delta(a);
    let mut left = Triple::new();
    let mut right = Triple::new();
    for ((x, y), c) in d.terms() {
        let dx = delta(&Element::from_monomial(shape, x.clone(), RatFunc::one()));
        for ((x1, x2), c1) in dx.terms() {
            triple_add(&mut left, (x1.clone(), x2.clone(), y.clone()), c * c1);
        }
        let dy = delta(&Element::from_monomial(shape, y.clone(), RatFunc::one()));
        for ((y1, y2), c2) in dy.terms() {
            triple_add(&mut right, (x.clone(), y1.clone(), y2.clone()), c * c2);
        }
    }
    (left, right)
}

/// (ε ⊗ id)Δ(a) and (id ⊗ ε)Δ(a).
pub fn counit_sides(a: &Element) -> (Element, Element) {
    let shape = a.shape();
    let d = delta(a);
    let mut l = Element::zero(shape);
    let mut r = Element::zero(shape);
    for ((x, y), c) in d.terms() {
        let ex = counit(&Element::from_monomial(shape, x.clone(), c.clone()));
        l.add_term(y.clone(), ex);
        let ey = counit(&Element::from_monomial(shape, y.clone(), c.clone()));
        r.add_term(x.clone(), ey);
    }
    (l, r)
}
