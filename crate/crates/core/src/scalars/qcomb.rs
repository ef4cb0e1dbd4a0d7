//! Gaussian integers, factorials, binomials and bracket scalars.

use num_bigint::BigInt;
use num_traits::One;

use super::laurent::LaurentInt;
use super::ratfunc::RatFunc;

/// `[n]` at `q_i = q^sign`, i.e. `(q_i^n - q_i^-n)/(q_i - q_i^-1)`.
///
/// The value is bar-invariant, so `sign` never changes the result; it is kept
/// so call sites read like the formulas they implement.
pub fn gauss_int(n: i64, sign: i32) -> LaurentInt {
    debug_assert!(sign == 1 || sign == -1);
    let k = n.abs();
    let mut c = LaurentInt::zero();
    for j in 0..k {
        c = &c + &LaurentInt::q_pow(k - 1 - 2 * j);
    }
    if n < 0 {
        -&c
    } else {
        c
    }
}

/// `[n]! = [1][2]...[n]`.
pub fn gauss_factorial(n: u32, sign: i32) -> LaurentInt {
    let mut acc = LaurentInt::one();
    for k in 1..=n {
        acc = &acc * &gauss_int(k as i64, sign);
    }
    acc
}

/// Gaussian binomial `[m choose n]`; zero when `n > m`.
pub fn gauss_binomial(m: u32, n: u32, sign: i32) -> LaurentInt {
    if n > m {
        return LaurentInt::zero();
    }
    // Row-by-row: [a, b] = q^b [a-1, b] + q^{-(a-b)} [a-1, b-1].
    let n = n as usize;
    let mut row: Vec<LaurentInt> = vec![LaurentInt::one()];
    for a in 1..=m as usize {
        let mut next = vec![LaurentInt::zero(); (a + 1).min(n + 1)];
        for (b, slot) in next.iter_mut().enumerate() {
            let mut v = LaurentInt::zero();
            if b < row.len() && b < a {
                v = &v + &row[b].shift(b as i64);
            }
            if b >= 1 && b - 1 < row.len() {
                v = &v + &row[b - 1].shift(-((a - b) as i64));
            }
            *slot = v;
        }
        row = next;
    }
    let _ = sign;
    row[n].clone()
}

/// `Π_{s=1}^t (q_i^{z+c-s+1} - q_i^{-z-c+s-1}) / (q_i^s - q_i^{-s})` with `q_i = q^sign`.
pub fn kbracket_scalar(zval: i64, c: i64, t: u32, sign: i32) -> RatFunc {
    let sg = sign as i64;
    let mut acc = RatFunc::one();
    for s in 1..=t as i64 {
        let e = zval + c - s + 1;
        let num = &RatFunc::q_pow(sg * e) - &RatFunc::q_pow(-sg * e);
        let den = &RatFunc::q_pow(sg * s) - &RatFunc::q_pow(-sg * s);
        acc = &acc * &(&num / &den);
    }
    acc
}

/// `q_i - q_i^-1` as a rational function.
pub fn q_minus_qinv(sign: i32) -> RatFunc {
    let s = sign as i64;
    &RatFunc::q_pow(s) - &RatFunc::q_pow(-s)
}

/// Ordinary binomial coefficient, used by oracles at `q = 1`.
pub fn binomial(m: u64, n: u64) -> BigInt {
    if n > m {
        return BigInt::from(0);
    }
    let mut acc = BigInt::one();
    for k in 0..n {
        acc = acc * BigInt::from(m - k) / BigInt::from(k + 1);
    }
    acc
}
