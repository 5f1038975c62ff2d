use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{self, Subspace};

use super::Algebra;

/// Largest number of linear functionals enumerated when searching for a
/// nondegenerate symmetrizing form.
pub const SYMMETRIC_SEARCH_CAP: u64 = 1 << 16;

/// Outcome of the symmetric-algebra test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymmetricVerdict<E> {
    /// `λ` vanishes on commutators and `(x, y) ↦ λ(xy)` is nondegenerate.
    Symmetric { form: Vec<E> },
    /// Every functional vanishing on `[A, A]` gives a degenerate form; the
    /// whole space of such functionals was enumerated.
    NotSymmetric { trace_functionals: usize, max_rank: usize },
}

impl<E> SymmetricVerdict<E> {
    pub fn is_symmetric(&self) -> bool {
        matches!(self, SymmetricVerdict::Symmetric { .. })
    }
}

/// Decides whether `a` admits a symmetric associative nondegenerate form.
///
/// Such forms are `(x, y) ↦ λ(xy)` for `λ` vanishing on `[A, A]`; the space
/// of these `λ` is enumerated over the finite ground field, trying basis
/// functionals and their sum first. The search is capped at
/// [`SYMMETRIC_SEARCH_CAP`] functionals, beyond which the answer is
/// [`Error::Undecided`].
pub fn is_symmetric_algebra<F: Field>(a: &Algebra<F>) -> Result<SymmetricVerdict<F::Elt>> {
    let f = &a.field;
    let n = a.dim();
    let elems = f.elements().ok_or_else(|| Error::UnsupportedField("symmetric test needs a finite field".into()))?;
    let mut comm: Subspace<F::Elt> = Subspace::zero(n);
    for i in 0..n {
        for j in i + 1..n {
            let mut v = a.zero_vec();
            for (k, c) in a.basis_mul(i, j) {
                v[*k as usize] = f.add(&v[*k as usize], c);
            }
            for (k, c) in a.basis_mul(j, i) {
                v[*k as usize] = f.sub(&v[*k as usize], c);
            }
            comm.insert(f, &v);
        }
    }
    let lambdas = comm.annihilator(f);
    let s = lambdas.len();
    let grams: Vec<Vec<Vec<F::Elt>>> = lambdas
        .iter()
        .map(|l| {
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| a.basis_mul(i, j).iter().fold(f.zero(), |acc, (k, c)| f.mul_add(&acc, c, &l[*k as usize])))
                        .collect()
                })
                .collect()
        })
        .collect();
    let combine = |coeffs: &[F::Elt]| {
        let mut g = linalg::zeros(f, n, n);
        let mut form = alloc::vec![f.zero(); n];
        for ((c, gt), l) in coeffs.iter().zip(&grams).zip(&lambdas) {
            if f.is_zero(c) {
                continue;
            }
            for (row, trow) in g.iter_mut().zip(gt) {
                linalg::axpy(f, row, c, trow);
            }
            linalg::axpy(f, &mut form, c, l);
        }
        (g, form)
    };
    let mut max_rank = 0;
    let mut quick: Vec<Vec<F::Elt>> = (0..s)
        .map(|t| (0..s).map(|u| if u == t { f.one() } else { f.zero() }).collect())
        .collect();
    quick.push(alloc::vec![f.one(); s]);
    for coeffs in &quick {
        let (g, form) = combine(coeffs);
        let r = linalg::rank(f, &g);
        if r == n {
            return Ok(SymmetricVerdict::Symmetric { form });
        }
        max_rank = max_rank.max(r);
    }
    let q = elems.len() as u64;
    let total = q.checked_pow(s as u32).filter(|&t| t <= SYMMETRIC_SEARCH_CAP);
    let total = total.ok_or_else(|| {
        Error::Undecided(alloc::format!("{s} independent trace functionals over a field of size {q}"))
    })?;
    for code in 1..total {
        let mut c = code;
        let coeffs: Vec<F::Elt> = (0..s)
            .map(|_| {
                let d = (c % q) as usize;
                c /= q;
                elems[d].clone()
            })
            .collect();
        let (g, form) = combine(&coeffs);
        let r = linalg::rank(f, &g);
        if r == n {
            return Ok(SymmetricVerdict::Symmetric { form });
        }
        max_rank = max_rank.max(r);
    }
    Ok(SymmetricVerdict::NotSymmetric { trace_functionals: s, max_rank })
}
