//! Dense exact linear algebra over a [`Field`].
//!
//! Vectors are `Vec<E>`; matrices are lists of rows. Row vectors act on the
//! left where it matters and the convention is stated per function.

use alloc::vec::Vec;

use crate::field::Field;

pub type Mat<E> = Vec<Vec<E>>;

pub fn zeros<F: Field>(f: &F, rows: usize, cols: usize) -> Mat<F::Elt> {
    alloc::vec![alloc::vec![f.zero(); cols]; rows]
}

pub fn identity<F: Field>(f: &F, n: usize) -> Mat<F::Elt> {
    let mut m = zeros(f, n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = f.one();
    }
    m
}

pub fn mat_mul<F: Field>(f: &F, a: &Mat<F::Elt>, b: &Mat<F::Elt>) -> Mat<F::Elt> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            let mut out = alloc::vec![f.zero(); cols];
            for (k, x) in row.iter().enumerate() {
                if f.is_zero(x) {
                    continue;
                }
                for (o, y) in out.iter_mut().zip(&b[k]) {
                    *o = f.mul_add(o, x, y);
                }
            }
            out
        })
        .collect()
}

/// `M v` for a column vector `v`.
pub fn mat_vec<F: Field>(f: &F, m: &Mat<F::Elt>, v: &[F::Elt]) -> Vec<F::Elt> {
    m.iter().map(|row| dot(f, row, v)).collect()
}

/// `v M` for a row vector `v`.
pub fn vec_mat<F: Field>(f: &F, v: &[F::Elt], m: &Mat<F::Elt>) -> Vec<F::Elt> {
    let cols = m.first().map_or(0, Vec::len);
    let mut out = alloc::vec![f.zero(); cols];
    for (x, row) in v.iter().zip(m) {
        if f.is_zero(x) {
            continue;
        }
        for (o, y) in out.iter_mut().zip(row) {
            *o = f.mul_add(o, x, y);
        }
    }
    out
}

pub fn dot<F: Field>(f: &F, a: &[F::Elt], b: &[F::Elt]) -> F::Elt {
    a.iter().zip(b).fold(f.zero(), |acc, (x, y)| f.mul_add(&acc, x, y))
}

pub fn transpose<E: Clone>(m: &Mat<E>) -> Mat<E> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn vadd<F: Field>(f: &F, a: &[F::Elt], b: &[F::Elt]) -> Vec<F::Elt> {
    a.iter().zip(b).map(|(x, y)| f.add(x, y)).collect()
}

pub fn vsub<F: Field>(f: &F, a: &[F::Elt], b: &[F::Elt]) -> Vec<F::Elt> {
    a.iter().zip(b).map(|(x, y)| f.sub(x, y)).collect()
}

pub fn vscale<F: Field>(f: &F, a: &[F::Elt], c: &F::Elt) -> Vec<F::Elt> {
    a.iter().map(|x| f.mul(x, c)).collect()
}

/// `acc += c v`.
pub fn axpy<F: Field>(f: &F, acc: &mut [F::Elt], c: &F::Elt, v: &[F::Elt]) {
    if f.is_zero(c) {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        *a = f.mul_add(a, c, x);
    }
}

pub fn is_zero_vec<F: Field>(f: &F, v: &[F::Elt]) -> bool {
    v.iter().all(|x| f.is_zero(x))
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(f: &F, m: &mut Mat<F::Elt>) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !f.is_zero(&m[i][c])) else { continue };
        m.swap(r, p);
        let inv = f.inv(&m[r][c]).expect("nonzero pivot");
        if !f.is_one(&inv) {
            for x in m[r].iter_mut() {
                *x = f.mul(x, &inv);
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || f.is_zero(&row[c]) {
                continue;
            }
            let factor = f.neg(&row[c]);
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                *x = f.mul_add(x, &factor, y);
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    pivots
}

pub fn rank<F: Field>(f: &F, m: &Mat<F::Elt>) -> usize {
    let mut m = m.clone();
    rref(f, &mut m).len()
}

/// Basis of `{x : M x = 0}` for column vectors `x`.
pub fn nullspace<F: Field>(f: &F, m: &Mat<F::Elt>, cols: usize) -> Vec<Vec<F::Elt>> {
    let mut r = m.clone();
    let pivots = rref(f, &mut r);
    let mut is_pivot = alloc::vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = alloc::vec![f.zero(); cols];
        v[free] = f.one();
        for (row, &p) in r.iter().zip(&pivots) {
            v[p] = f.neg(&row[free]);
        }
        out.push(v);
    }
    out
}

/// Some `x` with `M x = b`.
pub fn solve<F: Field>(f: &F, m: &Mat<F::Elt>, b: &[F::Elt]) -> Option<Vec<F::Elt>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut aug: Mat<F::Elt> = m
        .iter()
        .zip(b)
        .map(|(row, y)| {
            let mut r = row.clone();
            r.push(y.clone());
            r
        })
        .collect();
    let pivots = rref(f, &mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = alloc::vec![f.zero(); cols];
    for (row, &p) in aug.iter().zip(&pivots) {
        x[p] = row[cols].clone();
    }
    Some(x)
}

pub fn inverse<F: Field>(f: &F, m: &Mat<F::Elt>) -> Option<Mat<F::Elt>> {
    let n = m.len();
    let mut aug: Mat<F::Elt> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { f.one() } else { f.zero() }));
            r
        })
        .collect();
    let pivots = rref(f, &mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// A subspace kept in reduced echelon form.
#[derive(Clone, Debug)]
pub struct Subspace<E> {
    pub dim_ambient: usize,
    basis: Vec<Vec<E>>,
    pivots: Vec<usize>,
}

impl<E: Clone + PartialEq> Subspace<E> {
    pub fn zero(dim_ambient: usize) -> Self {
        Subspace { dim_ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn span<F: Field<Elt = E>>(f: &F, dim_ambient: usize, vecs: &[Vec<E>]) -> Self {
        let mut m = vecs.to_vec();
        let pivots = rref(f, &mut m);
        Subspace { dim_ambient, basis: m, pivots }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Echelon basis.
    pub fn basis(&self) -> &[Vec<E>] {
        &self.basis
    }

    /// `v` minus its projection along the echelon basis.
    pub fn reduce<F: Field<Elt = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if !f.is_zero(&r[p]) {
                let c = f.neg(&r[p]);
                axpy(f, &mut r, &c, b);
            }
        }
        r
    }

    pub fn contains<F: Field<Elt = E>>(&self, f: &F, v: &[E]) -> bool {
        is_zero_vec(f, &self.reduce(f, v))
    }

    /// Coordinates with respect to the echelon basis, if `v` lies in the space.
    pub fn coords<F: Field<Elt = E>>(&self, f: &F, v: &[E]) -> Option<Vec<E>> {
        let c: Vec<E> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut r = v.to_vec();
        for (b, x) in self.basis.iter().zip(&c) {
            let nx = f.neg(x);
            axpy(f, &mut r, &nx, b);
        }
        if is_zero_vec(f, &r) {
            Some(c)
        } else {
            None
        }
    }

    /// Basis of `{x : b·x = 0 for every basis row b}`.
    pub fn annihilator<F: Field<Elt = E>>(&self, f: &F) -> Vec<Vec<E>> {
        let mut is_pivot = alloc::vec![false; self.dim_ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.dim_ambient).filter(|&c| !is_pivot[c]) {
            let mut v = alloc::vec![f.zero(); self.dim_ambient];
            v[free] = f.one();
            for (row, &p) in self.basis.iter().zip(&self.pivots) {
                v[p] = f.neg(&row[free]);
            }
            out.push(v);
        }
        out
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert<F: Field<Elt = E>>(&mut self, f: &F, v: &[E]) -> bool {
        let r = self.reduce(f, v);
        let Some(p) = r.iter().position(|x| !f.is_zero(x)) else { return false };
        let inv = f.inv(&r[p]).expect("nonzero");
        let r = vscale(f, &r, &inv);
        for b in self.basis.iter_mut() {
            if !f.is_zero(&b[p]) {
                let c = f.neg(&b[p]);
                axpy(f, b, &c, &r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, r);
        true
    }
}

/// Minimal polynomial of `x` under the linear action `apply`, found by the
/// first linear dependence among `1, x, x², …` (the powers are produced by
/// repeated application of `apply` to `start`).
pub fn minimal_polynomial<F: Field>(
    f: &F,
    start: Vec<F::Elt>,
    mut apply: impl FnMut(&[F::Elt]) -> Vec<F::Elt>,
) -> Vec<F::Elt> {
    let n = start.len();
    // echelon rows carrying the combination of powers that produced them
    let mut rows: Vec<(Vec<F::Elt>, Vec<F::Elt>, usize)> = Vec::new();
    let mut cur = start;
    for k in 0..=n {
        let mut v = cur.clone();
        let mut combo = alloc::vec![f.zero(); n + 1];
        combo[k] = f.one();
        for (b, c, p) in &rows {
            if !f.is_zero(&v[*p]) {
                let t = f.neg(&v[*p]);
                axpy(f, &mut v, &t, b);
                axpy(f, &mut combo, &t, c);
            }
        }
        match v.iter().position(|x| !f.is_zero(x)) {
            None => {
                combo.truncate(k + 1);
                return combo;
            }
            Some(p) => {
                let inv = f.inv(&v[p]).expect("nonzero");
                rows.push((vscale(f, &v, &inv), vscale(f, &combo, &inv), p));
            }
        }
        cur = apply(&cur);
    }
    unreachable!("dependence within dim + 1 powers")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{poly, Gf, Rationals};

    #[test]
    fn nullspace_and_rank() {
        let f = Gf::new(3, 1).unwrap();
        let m = alloc::vec![alloc::vec![1, 2, 0], alloc::vec![2, 1, 0]];
        assert_eq!(rank(&f, &m), 1);
        let ns = nullspace(&f, &m, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(is_zero_vec(&f, &mat_vec(&f, &m, &v)));
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let q = Rationals;
        let m: Mat<_> = [[2, 1], [7, 4]].iter().map(|r| r.iter().map(|&x| q.from_int(x)).collect()).collect();
        let inv = inverse(&q, &m).unwrap();
        assert_eq!(mat_mul(&q, &m, &inv), identity(&q, 2));
        let sing: Mat<_> = [[1, 2], [2, 4]].iter().map(|r| r.iter().map(|&x| q.from_int(x)).collect()).collect();
        assert!(inverse(&q, &sing).is_none());
    }

    #[test]
    fn subspace_insert_matches_span() {
        let f = Gf::new(5, 1).unwrap();
        let vecs = alloc::vec![alloc::vec![1, 2, 3, 4], alloc::vec![0, 1, 1, 0], alloc::vec![1, 3, 4, 4]];
        let mut s = Subspace::zero(4);
        let grew: Vec<bool> = vecs.iter().map(|v| s.insert(&f, v)).collect();
        assert_eq!(grew, [true, true, false]);
        let t = Subspace::span(&f, 4, &vecs);
        assert_eq!(s.basis(), t.basis());
        let c = s.coords(&f, &vecs[2]).unwrap();
        let mut back = alloc::vec![0; 4];
        for (b, x) in s.basis().iter().zip(&c) {
            axpy(&f, &mut back, x, b);
        }
        assert_eq!(back, vecs[2]);
    }

    #[test]
    fn minimal_polynomial_of_a_projection_plus_nilpotent() {
        let f = Gf::new(7, 1).unwrap();
        // M = [[1,1],[0,1]] has minimal polynomial (t-1)^2
        let m = alloc::vec![alloc::vec![1, 1], alloc::vec![0, 1]];
        // minimal polynomial of M acting on vec(M) by left multiplication
        let flat = |a: &Mat<u32>| a.iter().flatten().copied().collect::<Vec<u32>>();
        let unflat = |v: &[u32]| alloc::vec![v[0..2].to_vec(), v[2..4].to_vec()];
        let mp = minimal_polynomial(&f, flat(&identity(&f, 2)), |v| flat(&mat_mul(&f, &m, &unflat(v))));
        assert_eq!(mp, poly::mul(&f, &alloc::vec![6, 1], &alloc::vec![6, 1]));
    }
}
