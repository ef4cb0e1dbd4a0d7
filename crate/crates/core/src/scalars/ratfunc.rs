use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::{LaurentInt, LaurentQ};
use super::poly::{self, Poly};

/// Element of ℚ(q) in lowest terms.
///
/// Stored as `num / den` where `num` is a Laurent polynomial and `den` is a
/// monic polynomial with nonzero constant term, coprime to `num`. Powers of `q`
/// always live in the numerator, so the representation is canonical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentQ,
    den: Poly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: LaurentQ::zero(), den: vec![BigRational::one()] }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentQ::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_laurent(LaurentQ::constant(BigRational::from_integer(n.into())))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::from_laurent(LaurentQ::constant(r))
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::from_laurent(LaurentQ::q_pow(e))
    }

    pub fn from_laurent(num: LaurentQ) -> Self {
        RatFunc { num, den: vec![BigRational::one()] }
    }

    pub fn from_laurent_int(x: &LaurentInt) -> Self {
        Self::from_laurent(x.to_rational())
    }

    /// Builds `num / den` and reduces to canonical form. Panics if `den` is zero.
    pub fn new(num: LaurentQ, den: LaurentQ) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        // Move q-powers of the denominator into the numerator.
        let num = num.shift(-den.low());
        let dpoly: Poly = den.coeffs().to_vec();
        Self::reduce(num, dpoly)
    }

    fn reduce(num: LaurentQ, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (nlo, npoly) = (num.low(), num.coeffs().to_vec());
        let (mut np, mut dp) = (npoly, den);
        if dp.len() > 1 {
            let g = poly::gcd(&np, &dp);
            if g.len() > 1 {
                np = poly::divrem(&np, &g).0;
                dp = poly::divrem(&dp, &g).0;
            }
        }
        let lead = dp.last().unwrap().clone();
        if !lead.is_one() {
            np = np.iter().map(|x| x / &lead).collect();
            dp = dp.iter().map(|x| x / &lead).collect();
        }
        RatFunc { num: LaurentQ::from_dense(nlo, np), den: dp }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.len() == 1 && self.num.is_one()
    }

    /// True when the denominator is 1, i.e. the value is a Laurent polynomial over ℚ.
    pub fn is_laurent(&self) -> bool {
        self.den.len() == 1
    }

    pub fn numerator_laurent(&self) -> &LaurentQ {
        &self.num
    }

    /// Numerator as an ordinary polynomial, absorbing negative powers of `q`
    /// into the denominator.
    pub fn numerator(&self) -> LaurentQ {
        self.num.shift(-self.num.low().min(0))
    }

    /// Monic denominator as an ordinary polynomial.
    pub fn denominator(&self) -> LaurentQ {
        let d = LaurentQ::from_dense(0, self.den.clone());
        d.shift(-self.num.low().min(0))
    }

    pub(crate) fn den_poly(&self) -> &Poly {
        &self.den
    }

    /// The Laurent polynomial over ℤ if this value lies in ℤ[q,q⁻¹].
    pub fn to_laurent_int(&self) -> Option<LaurentInt> {
        if self.is_laurent() {
            self.num.to_integer()
        } else {
            None
        }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let den = LaurentQ::from_dense(0, self.den.clone());
        Some(Self::new(den, self.num.clone()))
    }

    /// Image under `q -> q^-1`.
    pub fn bar(&self) -> Self {
        if self.is_laurent() {
            return Self::from_laurent(self.num.bar());
        }
        let den = LaurentQ::from_dense(0, self.den.clone()).bar();
        Self::new(self.num.bar(), den)
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inv().expect("zero to negative power") } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// Value at `q = 1` if the denominator does not vanish there.
    pub fn at_one(&self) -> Option<BigRational> {
        let d: BigRational = self.den.iter().cloned().fold(BigRational::zero(), |a, b| a + b);
        if d.is_zero() {
            None
        } else {
            Some(self.num.at_one() / d)
        }
    }

    /// Sign of the leading numerator coefficient, used for pretty printing.
    pub fn leading_negative(&self) -> bool {
        self.num.lead().is_some_and(|x| x.is_negative())
    }

    /// True when the canonical text needs parentheses as a factor.
    pub fn is_compound(&self) -> bool {
        !self.is_laurent() || self.num.len() > 1 || self.num.coeffs().iter().any(|x| !x.is_integer())
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.is_laurent() && o.is_laurent() {
            return RatFunc::from_laurent(&self.num + &o.num);
        }
        if self.den == o.den {
            return RatFunc::reduce(&self.num + &o.num, self.den.clone());
        }
        let d1 = LaurentQ::from_dense(0, self.den.clone());
        let d2 = LaurentQ::from_dense(0, o.den.clone());
        let num = &(&self.num * &d2) + &(&o.num * &d1);
        RatFunc::reduce(num, poly::mul(&self.den, &o.den))
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if self.is_laurent() && o.is_laurent() {
            return RatFunc::from_laurent(&self.num * &o.num);
        }
        RatFunc::reduce(&self.num * &o.num, poly::mul(&self.den, &o.den))
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, o: &RatFunc) -> RatFunc {
        self * &o.inv().expect("division by zero")
    }
}

macro_rules! owned {
    ($tr:ident, $f:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $f(self, o: RatFunc) -> RatFunc {
                (&self).$f(&o)
            }
        }
    };
}
owned!(Add, add);
owned!(Sub, sub);
owned!(Mul, mul);
owned!(Div, div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        RatFunc::from_int(n)
    }
}

impl From<LaurentInt> for RatFunc {
    fn from(x: LaurentInt) -> Self {
        RatFunc::from_laurent_int(&x)
    }
}

impl From<BigInt> for RatFunc {
    fn from(x: BigInt) -> Self {
        RatFunc::from_rational(BigRational::from_integer(x))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.numerator(), self.denominator())
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc[{self}]")
    }
}
