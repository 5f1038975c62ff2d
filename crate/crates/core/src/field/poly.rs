//! Dense univariate polynomials over a [`Field`], constant term first.

use alloc::vec::Vec;

use super::Field;
use crate::error::{Error, Result};

pub type Poly<E> = Vec<E>;

/// Largest trial-division search space for [`factor`].
pub const FACTOR_SEARCH_CAP: u64 = 1 << 20;

pub fn trim<F: Field>(f: &F, mut a: Poly<F::Elt>) -> Poly<F::Elt> {
    while a.last().is_some_and(|c| f.is_zero(c)) {
        a.pop();
    }
    a
}

/// Degree, with the zero polynomial reported as `None`.
pub fn degree<E>(a: &Poly<E>) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn add<F: Field>(f: &F, a: &Poly<F::Elt>, b: &Poly<F::Elt>) -> Poly<F::Elt> {
    let n = a.len().max(b.len());
    let z = f.zero();
    let out = (0..n).map(|i| f.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))).collect();
    trim(f, out)
}

pub fn sub<F: Field>(f: &F, a: &Poly<F::Elt>, b: &Poly<F::Elt>) -> Poly<F::Elt> {
    let n = a.len().max(b.len());
    let z = f.zero();
    let out = (0..n).map(|i| f.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))).collect();
    trim(f, out)
}

pub fn mul<F: Field>(f: &F, a: &Poly<F::Elt>, b: &Poly<F::Elt>) -> Poly<F::Elt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = alloc::vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.mul_add(&out[i + j], x, y);
        }
    }
    trim(f, out)
}

pub fn scale<F: Field>(f: &F, a: &Poly<F::Elt>, c: &F::Elt) -> Poly<F::Elt> {
    trim(f, a.iter().map(|x| f.mul(x, c)).collect())
}

/// Quotient and remainder; panics on division by zero.
pub fn divrem<F: Field>(f: &F, a: &Poly<F::Elt>, b: &Poly<F::Elt>) -> (Poly<F::Elt>, Poly<F::Elt>) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = f.inv(&b[db]).expect("nonzero leading coefficient");
    let mut r = a.clone();
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = alloc::vec![f.zero(); r.len() - db];
    for i in (db..r.len()).rev() {
        let c = f.mul(&r[i], &lead_inv);
        if f.is_zero(&c) {
            continue;
        }
        for j in 0..=db {
            r[i - db + j] = f.sub(&r[i - db + j], &f.mul(&c, &b[j]));
        }
        q[i - db] = c;
    }
    (trim(f, q), trim(f, r))
}

pub fn rem<F: Field>(f: &F, a: &Poly<F::Elt>, b: &Poly<F::Elt>) -> Poly<F::Elt> {
    divrem(f, a, b).1
}

pub fn monic<F: Field>(f: &F, a: &Poly<F::Elt>) -> Poly<F::Elt> {
    match a.last() {
        None => Vec::new(),
        Some(l) => scale(f, a, &f.inv(l).expect("nonzero")),
    }
}

/// Monic greatest common divisor.
pub fn gcd<F: Field>(f: &F, a: &Poly<F::Elt>, b: &Poly<F::Elt>) -> Poly<F::Elt> {
    let (mut a, mut b) = (trim(f, a.clone()), trim(f, b.clone()));
    while !b.is_empty() {
        let r = rem(f, &a, &b);
        a = b;
        b = r;
    }
    monic(f, &a)
}

/// `(g, s, t)` with `g = gcd(a, b) = s a + t b`, `g` monic.
pub fn xgcd<F: Field>(
    f: &F,
    a: &Poly<F::Elt>,
    b: &Poly<F::Elt>,
) -> (Poly<F::Elt>, Poly<F::Elt>, Poly<F::Elt>) {
    let (mut r0, mut r1) = (trim(f, a.clone()), trim(f, b.clone()));
    let (mut s0, mut s1) = (alloc::vec![f.one()], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), alloc::vec![f.one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1);
        let s2 = sub(f, &s0, &mul(f, &q, &s1));
        let t2 = sub(f, &t0, &mul(f, &q, &t1));
        r0 = core::mem::replace(&mut r1, r);
        s0 = core::mem::replace(&mut s1, s2);
        t0 = core::mem::replace(&mut t1, t2);
    }
    match r0.last() {
        None => (r0, s0, t0),
        Some(l) => {
            let li = f.inv(l).expect("nonzero");
            (scale(f, &r0, &li), scale(f, &s0, &li), scale(f, &t0, &li))
        }
    }
}

pub fn eval<F: Field>(f: &F, a: &Poly<F::Elt>, x: &F::Elt) -> F::Elt {
    a.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
}

pub fn pow_mod<F: Field>(f: &F, a: &Poly<F::Elt>, mut e: u64, m: &Poly<F::Elt>) -> Poly<F::Elt> {
    let mut base = rem(f, a, m);
    let mut acc = rem(f, &alloc::vec![f.one()], m);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(f, &mul(f, &acc, &base), m);
        }
        base = rem(f, &mul(f, &base, &base), m);
        e >>= 1;
    }
    acc
}

pub fn derivative<F: Field>(f: &F, a: &Poly<F::Elt>) -> Poly<F::Elt> {
    trim(f, a.iter().enumerate().skip(1).map(|(i, c)| f.mul(&f.from_int(i as i64), c)).collect())
}

// monic polynomials of the given degree, in a fixed order
fn monic_of_degree<F: Field>(elems: &[F::Elt], f: &F, d: usize, mut code: u64) -> Poly<F::Elt> {
    let q = elems.len() as u64;
    let mut out = Vec::with_capacity(d + 1);
    for _ in 0..d {
        out.push(elems[(code % q) as usize].clone());
        code /= q;
    }
    out.push(f.one());
    out
}

/// Factorization of a nonzero polynomial over a finite field into monic
/// irreducible factors with multiplicities, by trial division in increasing
/// degree. Factors are listed in order of discovery.
pub fn factor<F: Field>(f: &F, a: &Poly<F::Elt>) -> Result<Vec<(Poly<F::Elt>, usize)>> {
    let elems = f.elements().ok_or_else(|| Error::UnsupportedField("factorization needs a finite field".into()))?;
    let q = elems.len() as u64;
    let mut rest = monic(f, a);
    let mut out = Vec::new();
    let mut d = 1;
    while degree(&rest).unwrap_or(0) > 0 {
        if 2 * d > degree(&rest).unwrap() {
            out.push((rest, 1));
            break;
        }
        let count = q.checked_pow(d as u32).filter(|&c| c <= FACTOR_SEARCH_CAP);
        let count = count.ok_or(Error::Undecided("polynomial factorization search space exceeded".into()))?;
        for code in 0..count {
            let cand = monic_of_degree(&elems, f, d, code);
            let mut mult = 0;
            loop {
                let (qt, r) = divrem(f, &rest, &cand);
                if !r.is_empty() {
                    break;
                }
                rest = qt;
                mult += 1;
            }
            if mult > 0 {
                out.push((cand, mult));
            }
        }
        d += 1;
    }
    // merge repeated irreducible leftovers (only possible for the final piece)
    let mut merged: Vec<(Poly<F::Elt>, usize)> = Vec::new();
    for (p, m) in out {
        if let Some(e) = merged.iter_mut().find(|(x, _)| *x == p) {
            e.1 += m;
        } else {
            merged.push((p, m));
        }
    }
    Ok(merged)
}
