use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{poly, Field};
use crate::linalg::{self, Subspace};

use super::Algebra;

/// Basis of the center `{z : z g = g z for every generator g}`.
///
/// Central elements commute with the grade units, so only the diagonal
/// grades carry unknowns.
pub fn center<F: Field>(a: &Algebra<F>) -> Vec<Vec<F::Elt>> {
    let f = &a.field;
    let unknowns: Vec<usize> = (0..a.dim()).filter(|&i| a.grade(i).0 == a.grade(i).1).collect();
    let n = unknowns.len();
    let mut eqs: Subspace<F::Elt> = Subspace::zero(n);
    for g in a.generators() {
        // column u holds the commutator [b_u, g]
        let cols: Vec<Vec<F::Elt>> = unknowns
            .iter()
            .map(|&i| {
                let b = a.basis_vec(i);
                a.sub(&a.mul(&b, &g), &a.mul(&g, &b))
            })
            .collect();
        for k in 0..a.dim() {
            if cols.iter().all(|c| f.is_zero(&c[k])) {
                continue;
            }
            let row: Vec<F::Elt> = cols.iter().map(|c| c[k].clone()).collect();
            eqs.insert(f, &row);
            if eqs.dim() == n {
                break;
            }
        }
    }
    eqs.annihilator(f)
        .into_iter()
        .map(|v| {
            let mut z = a.zero_vec();
            for (c, &i) in v.into_iter().zip(&unknowns) {
                z[i] = c;
            }
            z
        })
        .collect()
}

/// Evaluates `p(x)` in the corner with unit `e` (`x` must lie in it).
pub(crate) fn eval_poly<F: Field>(a: &Algebra<F>, p: &[F::Elt], x: &[F::Elt], e: &[F::Elt]) -> Vec<F::Elt> {
    let mut acc = a.zero_vec();
    for c in p.iter().rev() {
        acc = a.mul(&acc, x);
        linalg::axpy(&a.field, &mut acc, c, e);
    }
    acc
}

/// Result of trying to split an idempotent with one element of its corner.
pub(crate) enum Split<E> {
    /// Orthogonal idempotents summing to `e`, one per coprime factor of the
    /// minimal polynomial.
    Pieces(Vec<Vec<E>>),
    /// The minimal polynomial is a power of `t - λ`.
    Scalar(E),
    /// The minimal polynomial is a power of an irreducible of this degree.
    Irreducible(u32),
}

/// Splits the idempotent `e` along the primary decomposition of the minimal
/// polynomial of `x ∈ eAe`.
pub(crate) fn split_by<F: Field>(a: &Algebra<F>, e: &[F::Elt], x: &[F::Elt]) -> Result<Split<F::Elt>> {
    let f = &a.field;
    let mp = linalg::minimal_polynomial(f, e.to_vec(), |v| a.mul(v, x));
    let factors = poly::factor(f, &mp)?;
    if factors.len() == 1 {
        let (p, _) = &factors[0];
        return Ok(if p.len() == 2 { Split::Scalar(f.neg(&p[0])) } else { Split::Irreducible((p.len() - 1) as u32) });
    }
    let mut pieces = Vec::with_capacity(factors.len());
    for (p, m) in &factors {
        let mut q = alloc::vec![f.one()];
        for _ in 0..*m {
            q = poly::mul(f, &q, p);
        }
        let (r, rem) = poly::divrem(f, &mp, &q);
        debug_assert!(rem.is_empty());
        // s r ≡ 1 (mod q), so s r evaluates to the idempotent of this factor
        let (_, s, _) = poly::xgcd(f, &r, &q);
        let u = poly::rem(f, &poly::mul(f, &s, &r), &mp);
        pieces.push(eval_poly(a, &u, x, e));
    }
    Ok(Split::Pieces(pieces))
}

/// Checks that the given elements are pairwise orthogonal idempotents summing
/// to the unit.
pub fn check_idempotent_decomposition<F: Field>(a: &Algebra<F>, idem: &[Vec<F::Elt>]) -> Result<()> {
    let mut sum = a.zero_vec();
    for (i, e) in idem.iter().enumerate() {
        if a.is_zero(e) || a.mul(e, e) != *e {
            return Err(Error::Certification(alloc::format!("element {i} is not a nonzero idempotent")));
        }
        for (j, g) in idem.iter().enumerate() {
            if i != j && !a.is_zero(&a.mul(e, g)) {
                return Err(Error::Certification(alloc::format!("idempotents {i} and {j} are not orthogonal")));
            }
        }
        sum = a.add(&sum, e);
    }
    if sum != a.unit() {
        return Err(Error::Certification("idempotents do not sum to the unit".into()));
    }
    Ok(())
}

/// Central primitive idempotents, found by splitting the unit along the
/// minimal polynomials of the center basis in order.
///
/// The residue fields of the center must be the ground field; a larger one
/// is reported as [`Error::NeedsExtension`] with the degree that was seen.
/// The result is sorted by coefficient vector.
pub fn block_idempotents<F: Field>(a: &Algebra<F>) -> Result<Vec<Vec<F::Elt>>> {
    if a.field.size().is_none() {
        return Err(Error::UnsupportedField("block idempotents need a finite field".into()));
    }
    let z = center(a);
    let mut idem = alloc::vec![a.unit().to_vec()];
    for zb in &z {
        let mut next = Vec::with_capacity(idem.len());
        for e in idem {
            let x = a.mul(&e, zb);
            match split_by(a, &e, &x)? {
                Split::Pieces(p) => next.extend(p),
                Split::Scalar(_) => next.push(e),
                Split::Irreducible(d) => return Err(Error::NeedsExtension(d)),
            }
        }
        idem = next;
    }
    check_idempotent_decomposition(a, &idem)?;
    for e in &idem {
        for g in a.generators() {
            if a.mul(e, &g) != a.mul(&g, e) {
                return Err(Error::Certification("block idempotent is not central".into()));
            }
        }
    }
    idem.sort();
    Ok(idem)
}
