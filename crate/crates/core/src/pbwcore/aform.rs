//! Coordinates in the divided-power basis of the 𝒜-form.

use std::collections::BTreeMap;

use super::{Element, PbwError, RootTable};
use crate::linalg;
use crate::scalars::{gauss_factorial, LaurentInt, RatFunc};

/// K-part coordinate in the variable K_{α_i}: an ordinary exponent (before
/// conversion) or the basis element K_{α_i}^δ [K_{α_i}; 0 over t].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KCoord {
    Exp(i64),
    Br { delta: u8, t: u32 },
}

/// Basis monomial `F_1^d F_0^{(ψ)} Π K_{α_i}^{δ_i}[K_{α_i};0;t_i] E_0^{(ψ')} E_1^{d'}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AMonomial {
    pub f: Vec<u32>,
    pub k: Vec<KCoord>,
    pub e: Vec<u32>,
}

impl std::fmt::Display for AMonomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "F{:?} K{:?} E{:?}", self.f, self.k, self.e)
    }
}

/// `[K;0;t]` as a Laurent polynomial in K, with q_i = q^sign.
fn bracket_poly(t: u32, sign: i64) -> BTreeMap<i64, RatFunc> {
    let mut poly: BTreeMap<i64, RatFunc> = BTreeMap::new();
    poly.insert(0, RatFunc::one());
    for s in 1..=t as i64 {
        let den = &RatFunc::q_pow(sign * s) - &RatFunc::q_pow(-sign * s);
        let a = &RatFunc::q_pow(sign * (1 - s)) / &den;
        let b = -&(&RatFunc::q_pow(sign * (s - 1)) / &den);
        let mut next: BTreeMap<i64, RatFunc> = BTreeMap::new();
        for (e, x) in &poly {
            for (de, y) in [(1, &a), (-1, &b)] {
                let slot = next.entry(e + de).or_insert_with(RatFunc::zero);
                *slot = &*slot + &(x * y);
            }
        }
        poly = next;
    }
    poly
}

/// Rewrites a univariate Laurent polynomial in K in the basis K^δ[K;0;t].
fn convert_univariate(p: &BTreeMap<i64, RatFunc>, sign: i64) -> Vec<((u8, u32), RatFunc)> {
    let lo = *p.keys().next().unwrap();
    let hi = *p.keys().next_back().unwrap();
    let tmax = (-lo).max(hi - 1).max(0) as u32;
    let low = -(tmax as i64);
    let width = (2 * tmax + 2) as usize;
    let mut labels = Vec::new();
    let mut cols = Vec::new();
    for delta in 0..2u8 {
        for t in 0..=tmax {
            let mut col = vec![RatFunc::zero(); width];
            for (e, c) in bracket_poly(t, sign) {
                col[(e + delta as i64 - low) as usize] = c;
            }
            labels.push((delta, t));
            cols.push(col);
        }
    }
    let mut b = vec![RatFunc::zero(); width];
    for (e, c) in p {
        b[(e - low) as usize] = c.clone();
    }
    let x = linalg::solve_columns(&cols, &b).expect("K^δ[K;0;t] spans Laurent polynomials");
    labels.into_iter().zip(x).filter(|(_, c)| !c.is_zero()).collect()
}

impl Element {
    /// Coordinates in the divided-power PBW basis with the K-part written in
    /// the basis Π K_{α_i}^δ [K_{α_i};0;t]. Fails if some coordinate is not in ℤ[q,q⁻¹].
    pub fn a_form_coords(&self) -> Result<BTreeMap<AMonomial, LaurentInt>, PbwError> {
        let t = RootTable::new(self.shape);
        let shape = self.shape;
        let mut cur: BTreeMap<AMonomial, RatFunc> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut fact = RatFunc::one();
            for id in 0..t.n_even {
                for p in [m.f[id], m.e[id]] {
                    if p > 1 {
                        fact = &fact * &RatFunc::from_laurent_int(&gauss_factorial(p, 1));
                    }
                }
            }
            // K_μ = Π K_{α_i}^{ν_i} with ν_i = μ_1 + … + μ_i
            let nu = m.k.iter().scan(0i64, |acc, &x| {
                *acc += x;
                Some(KCoord::Exp(*acc))
            });
            let key = AMonomial { f: m.f.clone(), k: nu.collect(), e: m.e.clone() };
            let slot = cur.entry(key).or_insert_with(RatFunc::zero);
            *slot = &*slot + &(c * &fact);
        }
        for j in 0..shape.rank() {
            let sign = shape.q_sign(j + 1) as i64;
            let mut groups: BTreeMap<AMonomial, BTreeMap<i64, RatFunc>> = BTreeMap::new();
            for (key, c) in &cur {
                let KCoord::Exp(e) = key.k[j] else { unreachable!() };
                let mut g = key.clone();
                g.k[j] = KCoord::Exp(0);
                groups.entry(g).or_default().insert(e, c.clone());
            }
            let mut next = BTreeMap::new();
            for (g, p) in groups {
                for ((delta, tt), c) in convert_univariate(&p, sign) {
                    let mut key = g.clone();
                    key.k[j] = KCoord::Br { delta, t: tt };
                    next.insert(key, c);
                }
            }
            cur = next;
        }
        let mut out = BTreeMap::new();
        for (key, c) in cur {
            if c.is_zero() {
                continue;
            }
            match super::to_integral(&c) {
                Some(v) => {
                    out.insert(key, v);
                }
                None => {
                    return Err(PbwError::NotIntegral { monomial: key.to_string(), coeff: c.to_string() });
                }
            }
        }
        Ok(out)
    }
}
