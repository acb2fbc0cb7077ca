//! Dense univariate polynomials with ascending coefficient vectors.

use super::field::Field;

pub fn trim<F: Field>(f: &F, p: &mut Vec<F::Elem>) {
    while p.last().is_some_and(|c| f.is_zero(c)) {
        p.pop();
    }
}

/// `None` for the zero polynomial.
pub fn degree<E>(p: &[E]) -> Option<usize> {
    // callers keep polynomials trimmed
    p.len().checked_sub(1)
}

pub fn eval<F: Field>(f: &F, p: &[F::Elem], x: &F::Elem) -> F::Elem {
    let mut acc = f.zero();
    for c in p.iter().rev() {
        acc = f.add(&f.mul(&acc, x), c);
    }
    acc
}

pub fn add<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let n = a.len().max(b.len());
    let zero = f.zero();
    let mut out: Vec<F::Elem> = (0..n)
        .map(|i| f.add(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
        .collect();
    trim(f, &mut out);
    out
}

pub fn sub<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let n = a.len().max(b.len());
    let zero = f.zero();
    let mut out: Vec<F::Elem> = (0..n)
        .map(|i| f.sub(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
        .collect();
    trim(f, &mut out);
    out
}

pub fn mul<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            f.add_mul_assign(&mut out[i + j], x, y);
        }
    }
    trim(f, &mut out);
    out
}

/// Quotient and remainder; panics on division by the zero polynomial.
pub fn divrem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> (Vec<F::Elem>, Vec<F::Elem>) {
    let db = degree(b).expect("division by zero polynomial");
    let lead_inv = f.inv(&b[db]).expect("trimmed polynomial has nonzero lead");
    let mut rem = a.to_vec();
    trim(f, &mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![f.zero(); rem.len() - db];
    while rem.len() > db {
        let shift = rem.len() - 1 - db;
        let c = f.mul(rem.last().unwrap(), &lead_inv);
        for (j, bj) in b.iter().enumerate() {
            f.sub_mul_assign(&mut rem[shift + j], &c, bj);
        }
        quot[shift] = c;
        rem.pop();
        trim(f, &mut rem);
    }
    trim(f, &mut quot);
    (quot, rem)
}

pub fn monic<F: Field>(f: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    match a.last() {
        None => Vec::new(),
        Some(lead) => {
            let inv = f.inv(lead).expect("trimmed polynomial has nonzero lead");
            a.iter().map(|c| f.mul(c, &inv)).collect()
        }
    }
}

/// Monic greatest common divisor.
pub fn gcd<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(f, &mut x);
    trim(f, &mut y);
    while !y.is_empty() {
        let (_, r) = divrem(f, &x, &y);
        x = y;
        y = r;
    }
    monic(f, &x)
}

pub fn pow_mod<F: Field>(f: &F, base: &[F::Elem], mut e: u64, modulus: &[F::Elem]) -> Vec<F::Elem> {
    let mut acc = vec![f.one()];
    let (_, mut b) = divrem(f, base, modulus);
    while e > 0 {
        if e & 1 == 1 {
            acc = divrem(f, &mul(f, &acc, &b), modulus).1;
        }
        b = divrem(f, &mul(f, &b, &b), modulus).1;
        e >>= 1;
    }
    acc
}
