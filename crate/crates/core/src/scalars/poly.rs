//! Dense univariate polynomials over ℚ, coefficient `k` of `q^k` at index `k`.

use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) type Poly = Vec<BigRational>;

pub(crate) fn trim(p: &mut Poly) {
    while p.last().is_some_and(|x| x.is_zero()) {
        p.pop();
    }
}

pub(crate) fn degree(p: &[BigRational]) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

pub(crate) fn mul(a: &[BigRational], b: &[BigRational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut c = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    trim(&mut c);
    c
}

pub(crate) fn sub(a: &[BigRational], b: &[BigRational]) -> Poly {
    let n = a.len().max(b.len());
    let mut c = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        c[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        c[i] -= x;
    }
    trim(&mut c);
    c
}

/// Quotient and remainder; `b` must be nonzero.
pub(crate) fn divrem(a: &[BigRational], b: &[BigRational]) -> (Poly, Poly) {
    let db = degree(b).expect("division by zero polynomial");
    let mut r: Poly = a.to_vec();
    trim(&mut r);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let lead = b[db].clone();
    let mut quo = vec![BigRational::zero(); r.len() - db];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let f = r.last().unwrap() / &lead;
        for (j, y) in b.iter().enumerate() {
            r[k + j] -= &f * y;
        }
        quo[k] = f;
        r.pop();
        trim(&mut r);
    }
    trim(&mut quo);
    (quo, r)
}

pub(crate) fn monic(p: &[BigRational]) -> Poly {
    match p.last() {
        None => Vec::new(),
        Some(l) => {
            let l = l.clone();
            p.iter().map(|x| x / &l).collect()
        }
    }
}

/// Monic gcd (zero only if both inputs are zero).
pub(crate) fn gcd(a: &[BigRational], b: &[BigRational]) -> Poly {
    let mut x = monic(a);
    let mut y = monic(b);
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = monic(&r);
    }
    x
}

/// Inverse of `a` modulo `m` when they are coprime.
pub(crate) fn inverse_mod(a: &[BigRational], m: &[BigRational]) -> Option<Poly> {
    // Extended Euclid tracking only the coefficient of `a`.
    let mut r0: Poly = m.to_vec();
    let mut r1: Poly = divrem(a, m).1;
    let mut s0: Poly = Vec::new();
    let mut s1: Poly = vec![BigRational::one()];
    while !r1.is_empty() {
        let (qt, r2) = divrem(&r0, &r1);
        let s2 = sub(&s0, &mul(&qt, &s1));
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].clone();
    let inv: Poly = s0.iter().map(|x| x / &c).collect();
    Some(divrem(&inv, m).1)
}

/// The `l`-th cyclotomic polynomial.
pub(crate) fn cyclotomic(l: u32) -> Poly {
    let mut p: Poly = vec![BigRational::zero(); l as usize + 1];
    p[0] = -BigRational::one();
    p[l as usize] = BigRational::one();
    for d in 1..l {
        if l % d == 0 {
            p = divrem(&p, &cyclotomic(d)).0;
        }
    }
    p
}
