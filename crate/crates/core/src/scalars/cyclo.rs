use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::{LaurentQ, render_terms};
use super::poly::{self, Poly};
use super::ratfunc::RatFunc;
use super::ScalarError;

/// Element of ℚ(η) = ℚ[q]/Φ_l for an odd order `l ≥ 3`; `η` is the class of `q`.
#[derive(Clone)]
pub struct CycloNum {
    l: u32,
    modulus: Arc<Poly>,
    residue: Poly,
}

impl PartialEq for CycloNum {
    fn eq(&self, o: &Self) -> bool {
        self.l == o.l && self.residue == o.residue
    }
}
impl Eq for CycloNum {}

impl std::hash::Hash for CycloNum {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.l.hash(h);
        self.residue.hash(h);
    }
}

/// Shared description of ℚ(η) for one order `l`.
#[derive(Clone, Debug)]
pub struct CycloField {
    l: u32,
    modulus: Arc<Poly>,
}

impl CycloField {
    pub fn new(l: u32) -> Result<Self, ScalarError> {
        if l < 3 || l % 2 == 0 {
            return Err(ScalarError::BadOrder(l));
        }
        Ok(CycloField { l, modulus: Arc::new(poly::cyclotomic(l)) })
    }

    pub fn order(&self) -> u32 {
        self.l
    }

    pub fn zero(&self) -> CycloNum {
        CycloNum { l: self.l, modulus: self.modulus.clone(), residue: Vec::new() }
    }

    pub fn one(&self) -> CycloNum {
        self.from_poly(vec![BigRational::one()])
    }

    pub fn from_int(&self, n: i64) -> CycloNum {
        self.from_poly(vec![BigRational::from_integer(n.into())])
    }

    /// `η^e` for any integer `e`.
    pub fn eta_pow(&self, e: i64) -> CycloNum {
        let k = e.rem_euclid(self.l as i64) as usize;
        let mut p = vec![BigRational::zero(); k + 1];
        p[k] = BigRational::one();
        self.from_poly(p)
    }

    pub fn from_poly(&self, p: Poly) -> CycloNum {
        let residue = poly::divrem(&p, &self.modulus).1;
        CycloNum { l: self.l, modulus: self.modulus.clone(), residue }
    }

    pub fn from_laurent(&self, x: &LaurentQ) -> CycloNum {
        let l = self.l as i64;
        let mut p = vec![BigRational::zero(); self.l as usize];
        for (e, c) in x.terms() {
            p[e.rem_euclid(l) as usize] += c;
        }
        poly::trim(&mut p);
        self.from_poly(p)
    }

    /// Φ_l as an element of ℚ(q).
    pub fn cyclotomic(&self) -> RatFunc {
        RatFunc::from_laurent(LaurentQ::from_dense(0, self.modulus.to_vec()))
    }

    /// Multiplicity of Φ_l in `x` (numerator minus denominator); `None` for 0.
    pub fn valuation(&self, x: &RatFunc) -> Option<i64> {
        if x.is_zero() {
            return None;
        }
        let count = |p: &[BigRational]| {
            let mut p = p.to_vec();
            let mut n = 0;
            loop {
                let (quo, rem) = poly::divrem(&p, &self.modulus);
                if !rem.is_empty() {
                    return n;
                }
                p = quo;
                n += 1;
            }
        };
        Some(count(x.numerator_laurent().coeffs()) - count(x.den_poly()))
    }

    /// Image of a rational function under `q -> η`.
    pub fn evaluate(&self, x: &RatFunc) -> Result<CycloNum, ScalarError> {
        let num = self.from_laurent(x.numerator_laurent());
        if x.is_laurent() {
            return Ok(num);
        }
        let den = self.from_poly(x.den_poly().clone());
        let inv = den.inv().ok_or(ScalarError::DenominatorVanishes(self.l))?;
        Ok(&num * &inv)
    }
}

impl CycloNum {
    pub fn order(&self) -> u32 {
        self.l
    }

    pub fn field(&self) -> CycloField {
        CycloField { l: self.l, modulus: self.modulus.clone() }
    }

    pub fn residue(&self) -> &[BigRational] {
        &self.residue
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.residue.len() == 1 && self.residue[0].is_one()
    }

    pub fn inv(&self) -> Option<CycloNum> {
        if self.is_zero() {
            return None;
        }
        let r = poly::inverse_mod(&self.residue, &self.modulus)?;
        Some(CycloNum { l: self.l, modulus: self.modulus.clone(), residue: r })
    }

    fn with(&self, residue: Poly) -> CycloNum {
        CycloNum { l: self.l, modulus: self.modulus.clone(), residue }
    }

    fn check(&self, o: &CycloNum) {
        assert_eq!(self.l, o.l, "mixing different roots of unity");
    }
}

impl Add for &CycloNum {
    type Output = CycloNum;
    fn add(self, o: &CycloNum) -> CycloNum {
        self.check(o);
        let n = self.residue.len().max(o.residue.len());
        let mut p = vec![BigRational::zero(); n];
        for (i, x) in self.residue.iter().enumerate() {
            p[i] += x;
        }
        for (i, x) in o.residue.iter().enumerate() {
            p[i] += x;
        }
        poly::trim(&mut p);
        self.with(p)
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        self.with(self.residue.iter().map(|x| -x).collect())
    }
}

impl Sub for &CycloNum {
    type Output = CycloNum;
    fn sub(self, o: &CycloNum) -> CycloNum {
        self + &(-o)
    }
}

impl Mul for &CycloNum {
    type Output = CycloNum;
    fn mul(self, o: &CycloNum) -> CycloNum {
        self.check(o);
        let p = poly::mul(&self.residue, &o.residue);
        self.with(poly::divrem(&p, &self.modulus).1)
    }
}

impl Div for &CycloNum {
    type Output = CycloNum;
    fn div(self, o: &CycloNum) -> CycloNum {
        self * &o.inv().expect("division by zero")
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .residue
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as i64, c.clone()));
        let s = render_terms(terms, |c| c < &BigRational::zero(), |c| {
            if c < &BigRational::zero() { (-c).to_string() } else { c.to_string() }
        });
        f.write_str(&s.replace('q', "eta"))
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNum[l={}; {self}]", self.l)
    }
}
