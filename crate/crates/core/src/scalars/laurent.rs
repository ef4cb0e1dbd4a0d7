use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Laurent polynomial in `q` stored densely from the lowest exponent.
///
/// The zero polynomial has an empty coefficient vector; otherwise the first
/// and last stored coefficients are nonzero, so derived equality is exact.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent<T> {
    lo: i64,
    c: Vec<T>,
}

pub type LaurentInt = Laurent<BigInt>;
pub type LaurentQ = Laurent<BigRational>;

/// Coefficient ring operations by reference.
pub trait Coeff: Clone + PartialEq + Zero + One + Neg<Output = Self> {
    fn add_r(&self, o: &Self) -> Self;
    fn mul_r(&self, o: &Self) -> Self;
}

impl Coeff for BigInt {
    fn add_r(&self, o: &Self) -> Self {
        self + o
    }
    fn mul_r(&self, o: &Self) -> Self {
        self * o
    }
}

impl Coeff for BigRational {
    fn add_r(&self, o: &Self) -> Self {
        self + o
    }
    fn mul_r(&self, o: &Self) -> Self {
        self * o
    }
}

impl<T: Coeff> Laurent<T> {
    pub fn zero() -> Self {
        Laurent { lo: 0, c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(T::one(), 0)
    }

    /// `coeff * q^exp`.
    pub fn monomial(coeff: T, exp: i64) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        Laurent { lo: exp, c: vec![coeff] }
    }

    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(T::one(), exp)
    }

    pub fn constant(coeff: T) -> Self {
        Self::monomial(coeff, 0)
    }

    pub fn from_dense(lo: i64, c: Vec<T>) -> Self {
        let mut p = Laurent { lo, c };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.c.last().is_some_and(|x| x.is_zero()) {
            self.c.pop();
        }
        let lead = self.c.iter().take_while(|x| x.is_zero()).count();
        if lead > 0 {
            self.c.drain(..lead);
            self.lo += lead as i64;
        }
        if self.c.is_empty() {
            self.lo = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.lo == 0 && self.c.len() == 1 && self.c[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low(&self) -> i64 {
        self.lo
    }

    /// Highest exponent with a nonzero coefficient (−1 relative to `low` for zero).
    pub fn high(&self) -> i64 {
        self.lo + self.c.len() as i64 - 1
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.c
    }

    pub fn coeff(&self, exp: i64) -> T {
        let k = exp - self.lo;
        if k < 0 || k >= self.c.len() as i64 {
            T::zero()
        } else {
            self.c[k as usize].clone()
        }
    }

    pub fn lead(&self) -> Option<&T> {
        self.c.last()
    }

    /// Nonzero terms as `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &T)> {
        let lo = self.lo;
        self.c
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(move |(k, x)| (lo + k as i64, x))
    }

    pub fn shift(&self, by: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Laurent { lo: self.lo + by, c: self.c.clone() }
    }

    pub fn scale(&self, s: &T) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Laurent { lo: self.lo, c: self.c.iter().map(|x| x.mul_r(s)).collect() }
    }

    /// The image under `q -> q^-1`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.c.clone();
        c.reverse();
        Laurent { lo: -self.high(), c }
    }

    /// Substitute `q -> q^k` for a nonzero integer `k`.
    pub fn subs_power(&self, k: i64) -> Self {
        assert!(k != 0);
        let mut out = Self::zero();
        for (e, x) in self.terms() {
            out = &out + &Self::monomial(x.clone(), e * k);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Sum of coefficients, i.e. the value at `q = 1`.
    pub fn at_one(&self) -> T {
        let mut s = T::zero();
        for x in &self.c {
            s = s.add_r(x);
        }
        s
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> Laurent<U> {
        Laurent::from_dense(self.lo, self.c.iter().map(f).collect())
    }
}

impl<T: Coeff> Add for &Laurent<T> {
    type Output = Laurent<T>;
    fn add(self, o: &Laurent<T>) -> Laurent<T> {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(o.lo);
        let hi = self.high().max(o.high());
        let mut c = vec![T::zero(); (hi - lo + 1) as usize];
        for (k, x) in self.c.iter().enumerate() {
            let i = (self.lo - lo) as usize + k;
            c[i] = c[i].add_r(x);
        }
        for (k, x) in o.c.iter().enumerate() {
            let i = (o.lo - lo) as usize + k;
            c[i] = c[i].add_r(x);
        }
        Laurent::from_dense(lo, c)
    }
}

impl<T: Coeff> Neg for &Laurent<T> {
    type Output = Laurent<T>;
    fn neg(self) -> Laurent<T> {
        Laurent { lo: self.lo, c: self.c.iter().map(|x| -x.clone()).collect() }
    }
}

impl<T: Coeff> Sub for &Laurent<T> {
    type Output = Laurent<T>;
    fn sub(self, o: &Laurent<T>) -> Laurent<T> {
        self + &(-o)
    }
}

impl<T: Coeff> Mul for &Laurent<T> {
    type Output = Laurent<T>;
    fn mul(self, o: &Laurent<T>) -> Laurent<T> {
        if self.is_zero() || o.is_zero() {
            return Laurent::zero();
        }
        let mut c = vec![T::zero(); self.c.len() + o.c.len() - 1];
        for (a, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in o.c.iter().enumerate() {
                c[a + b] = c[a + b].add_r(&x.mul_r(y));
            }
        }
        Laurent::from_dense(self.lo + o.lo, c)
    }
}

macro_rules! owned_ops {
    ($tr:ident, $f:ident) => {
        impl<T: Coeff> $tr for Laurent<T> {
            type Output = Laurent<T>;
            fn $f(self, o: Laurent<T>) -> Laurent<T> {
                (&self).$f(&o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl LaurentInt {
    pub fn to_rational(&self) -> LaurentQ {
        self.map(|x| BigRational::from_integer(x.clone()))
    }
}

impl LaurentQ {
    /// Returns the integer-coefficient version when every coefficient is integral.
    pub fn to_integer(&self) -> Option<LaurentInt> {
        if self.c.iter().all(|x| x.is_integer()) {
            Some(self.map(|x| x.to_integer()))
        } else {
            None
        }
    }
}

/// Rendering used everywhere: `3*q^2 - q^-1 + 4`, highest exponent first.
pub(crate) fn render_terms<T: Clone>(
    terms: impl Iterator<Item = (i64, T)>,
    is_neg: impl Fn(&T) -> bool,
    abs_text: impl Fn(&T) -> String,
) -> String {
    let mut out = String::new();
    for (k, (e, x)) in terms.enumerate() {
        let neg = is_neg(&x);
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = abs_text(&x);
        let qpart = match e {
            0 => String::new(),
            1 => "q".to_string(),
            _ => format!("q^{e}"),
        };
        if qpart.is_empty() {
            out.push_str(&a);
        } else if a == "1" {
            out.push_str(&qpart);
        } else {
            out.push_str(&a);
            out.push('*');
            out.push_str(&qpart);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for LaurentInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = render_terms(
            self.terms().rev().map(|(e, x)| (e, x.clone())),
            |x| x.is_negative(),
            |x| x.abs().to_string(),
        );
        f.write_str(&s)
    }
}

impl fmt::Display for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = render_terms(
            self.terms().rev().map(|(e, x)| (e, x.clone())),
            |x| x.is_negative(),
            |x| x.abs().to_string(),
        );
        f.write_str(&s)
    }
}

impl<T: fmt::Debug> fmt::Debug for Laurent<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent(lo={}, {:?})", self.lo, self.c)
    }
}
