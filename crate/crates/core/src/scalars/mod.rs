//! Exact scalars: ℤ[q,q⁻¹], ℚ(q), cyclotomic fields ℚ(η), and q-combinatorics.

mod cyclo;
mod laurent;
pub(crate) mod poly;
mod qcomb;
mod ratfunc;

use std::fmt;

use thiserror::Error;

pub use cyclo::{CycloField, CycloNum};
pub use laurent::{Coeff, Laurent, LaurentInt, LaurentQ};
pub use qcomb::{binomial, gauss_binomial, gauss_factorial, gauss_int, kbracket_scalar, q_minus_qinv};
pub use ratfunc::RatFunc;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("denominator vanishes at a primitive {0}-th root of unity")]
    DenominatorVanishes(u32),
    #[error("root of unity order must be odd and at least 3, got {0}")]
    BadOrder(u32),
}

/// Image of `x` under `q -> η`, `η` a primitive `l`-th root of unity.
pub fn evaluate_at_root(x: &RatFunc, l: u32) -> Result<CycloNum, ScalarError> {
    CycloField::new(l)?.evaluate(x)
}

/// Operations needed by exact linear algebra over a field.
///
/// Cyclotomic elements need to know their modulus, so constants are built
/// from an existing element rather than from nothing.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    /// `q^e` generically, `η^e` at a root of unity.
    fn q_pow_like(&self, e: i64) -> Self;
    fn int_like(&self, n: i64) -> Self;
}

impl Field for RatFunc {
    fn zero_like(&self) -> Self {
        RatFunc::zero()
    }
    fn one_like(&self) -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        RatFunc::inv(self)
    }
    fn q_pow_like(&self, e: i64) -> Self {
        RatFunc::q_pow(e)
    }
    fn int_like(&self, n: i64) -> Self {
        RatFunc::from_int(n)
    }
}

impl Field for CycloNum {
    fn zero_like(&self) -> Self {
        self.field().zero()
    }
    fn one_like(&self) -> Self {
        self.field().one()
    }
    fn is_zero(&self) -> bool {
        CycloNum::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        CycloNum::inv(self)
    }
    fn q_pow_like(&self, e: i64) -> Self {
        self.field().eta_pow(e)
    }
    fn int_like(&self, n: i64) -> Self {
        self.field().from_int(n)
    }
}
