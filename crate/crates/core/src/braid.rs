//! Braid operators T_{α_i} for even simple roots.

use thiserror::Error;

use crate::pbwcore::{gen_element, k_alpha_vector, k_monomial, Element, Gen, GenMap, Kind};
use crate::rootdata::Shape;
use crate::scalars::RatFunc;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("T_{{alpha_{0}}} is only defined for even simple roots, index {0} is the odd node")]
    BraidAtOddNode(usize),
    #[error("index {0} is not a simple root index")]
    BadIndex(usize),
    #[error("need i <= k < k+1 <= j with j > i+1, got i={0}, k={1}, j={2}")]
    BadChain(usize, usize, usize),
}

fn check(shape: Shape, i: usize) -> Result<(), BraidError> {
    if i == 0 || i >= shape.rank() {
        return Err(BraidError::BadIndex(i));
    }
    if i == shape.m {
        return Err(BraidError::BraidAtOddNode(i));
    }
    Ok(())
}

fn kalpha(shape: Shape, i: usize, e: i64) -> Element {
    k_monomial(shape, &k_alpha_vector(shape, i, e)).unwrap()
}

fn image(shape: Shape, i: usize, g: &Gen, inverse: bool) -> Element {
    let qi = RatFunc::q_pow(shape.q_sign(i) as i64);
    let qi_inv = qi.inv().unwrap();
    let ei = gen_element(shape, &Gen::E(i));
    let fi = gen_element(shape, &Gen::F(i));
    match g {
        Gen::K(mu) => {
            let mut nu = mu.clone();
            nu.swap(i - 1, i);
            k_monomial(shape, &nu).unwrap()
        }
        Gen::E(j) | Gen::F(j) => {
            let is_e = matches!(g, Gen::E(_));
            let x = gen_element(shape, g);
            if *j == i {
                let r = match (is_e, inverse) {
                    (true, false) => &fi * &kalpha(shape, i, 1),
                    (false, false) => &kalpha(shape, i, -1) * &ei,
                    (true, true) => &kalpha(shape, i, -1) * &fi,
                    (false, true) => &ei * &kalpha(shape, i, 1),
                };
                return -&r;
            }
            let a = shape.cartan_entry(i, *j).unwrap();
            if a == 0 {
                return x;
            }
            debug_assert_eq!(a, -1);
            let xi = if is_e { &ei } else { &fi };
            let (first, second) = (xi * &x, &x * xi);
            match (is_e, inverse) {
                // −E_i E_j + q_i⁻¹ E_j E_i
                (true, false) => &second.scale(&qi_inv) - &first,
                // −F_j F_i + q_i F_i F_j
                (false, false) => &first.scale(&qi) - &second,
                // −E_j E_i + q_i⁻¹ E_i E_j
                (true, true) => &first.scale(&qi_inv) - &second,
                // −F_i F_j + q_i F_j F_i
                (false, true) => &second.scale(&qi) - &first,
            }
        }
    }
}

fn apply(i: usize, a: &Element, inverse: bool) -> Result<Element, BraidError> {
    let shape = a.shape();
    check(shape, i)?;
    let img = |g: &Gen| image(shape, i, g, inverse);
    let mul = |x: &Element, y: &Element| x * y;
    let add = |x: &Element, y: &Element| x + y;
    let scale = |x: &Element, c: &RatFunc| x.scale(c);
    let ops = GenMap {
        image: &img,
        mul: &mul,
        add: &add,
        scale: &scale,
        zero: Element::zero(shape),
        one: Element::one(shape),
    };
    Ok(a.apply_on_generators(&ops, false))
}

/// T_{α_i}(a), an even algebra automorphism.
pub fn braid_t(i: usize, a: &Element) -> Result<Element, BraidError> {
    apply(i, a, false)
}

/// T_{α_i}^{-1}(a).
pub fn braid_t_inv(i: usize, a: &Element) -> Result<Element, BraidError> {
    apply(i, a, true)
}

/// (−1)^{j−i−1} T_{α_i}⋯T_{α_{k−1}} T⁻¹_{α_{j−1}}⋯T⁻¹_{α_{k+1}} applied to E_{k,k+1} (or F).
/// Either half of the chain may be empty; a chain through the odd node is an error.
pub fn root_vector_via_braid(shape: Shape, kind: Kind, i: usize, j: usize, k: usize) -> Result<Element, BraidError> {
    if !(i <= k && k < j && j > i + 1 && j <= shape.rank()) {
        return Err(BraidError::BadChain(i, k, j));
    }
    let g = match kind {
        Kind::E => Gen::E(k),
        Kind::F => Gen::F(k),
    };
    let mut x = gen_element(shape, &g);
    // innermost operator acts first: T⁻¹_{α_{k+1}}, then up to T⁻¹_{α_{j−1}}
    for s in k + 1..j {
        x = braid_t_inv(s, &x)?;
    }
    for s in (i..k).rev() {
        x = braid_t(s, &x)?;
    }
    if (j - i - 1) % 2 == 1 {
        x = -&x;
    }
    Ok(x)
}
