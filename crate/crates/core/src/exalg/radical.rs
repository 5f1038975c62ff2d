use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{self, Subspace};

use super::primitive::{corner_space, primitive_idempotents, residue, PrimitiveDecomposition};
use super::Algebra;

/// Basis of the Jacobson radical, certified to be a nilpotent two-sided
/// ideal with semisimple quotient.
///
/// In characteristic 0 the radical is the kernel of the trace form. Over a
/// finite field it is assembled from the Peirce pieces `e_i J e_j` of a
/// primitive decomposition, and the quotient is certified by
/// `dim A - dim J = Σ n_c²` over the isomorphism classes.
pub fn radical<F: Field>(a: &Algebra<F>) -> Result<Vec<Vec<F::Elt>>> {
    if a.field.characteristic() == 0 {
        return radical_by_trace_form(a);
    }
    let pd = primitive_idempotents(a)?;
    radical_from_idempotents(a, &pd)
}

fn radical_by_trace_form<F: Field>(a: &Algebra<F>) -> Result<Vec<Vec<F::Elt>>> {
    let f = &a.field;
    let n = a.dim();
    // tr(L_{b_k}) = Σ_j coefficient of b_j in b_k b_j
    let traces: Vec<F::Elt> = (0..n)
        .map(|k| {
            let mut t = f.zero();
            for j in 0..n {
                if let Some((_, c)) = a.basis_mul(k, j).iter().find(|(m, _)| *m as usize == j) {
                    t = f.add(&t, c);
                }
            }
            t
        })
        .collect();
    let gram: Vec<Vec<F::Elt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| a.basis_mul(i, j).iter().fold(f.zero(), |acc, (k, c)| f.mul_add(&acc, c, &traces[*k as usize])))
                .collect()
        })
        .collect();
    let j = linalg::nullspace(f, &gram, n);
    certify_ideal_nilpotent(a, &j)?;
    Ok(j)
}

/// The radical from a primitive decomposition (finite fields).
pub fn radical_from_idempotents<F: Field>(a: &Algebra<F>, pd: &PrimitiveDecomposition<F::Elt>) -> Result<Vec<Vec<F::Elt>>> {
    let f = &a.field;
    let mut class_of = alloc::vec![0; pd.idempotents.len()];
    for (c, members) in pd.classes.iter().enumerate() {
        for &i in members {
            class_of[i] = c;
        }
    }
    let mut rad: Subspace<F::Elt> = Subspace::zero(a.dim());
    for (i, e) in pd.idempotents.iter().enumerate() {
        for (j, g) in pd.idempotents.iter().enumerate() {
            let ef = corner_space(a, &e.vec, e.grade, &g.vec, g.grade);
            if class_of[i] != class_of[j] {
                for v in ef.basis() {
                    rad.insert(f, v);
                }
                continue;
            }
            // x ∈ eAf lies in J iff the residue of x y vanishes for all y ∈ fAe
            let fe = corner_space(a, &g.vec, g.grade, &e.vec, e.grade);
            let mut eqs = Vec::with_capacity(fe.dim());
            for y in fe.basis() {
                let row = ef.basis().iter().map(|x| residue(f, e, &a.mul(x, y))).collect::<Result<Vec<_>>>()?;
                eqs.push(row);
            }
            for combo in linalg::nullspace(f, &eqs, ef.dim()) {
                let mut v = a.zero_vec();
                for (c, x) in combo.iter().zip(ef.basis()) {
                    linalg::axpy(f, &mut v, c, x);
                }
                rad.insert(f, &v);
            }
        }
    }
    let j = rad.basis().to_vec();
    certify_ideal_nilpotent(a, &j)?;
    let semisimple_dim: usize = pd.classes.iter().map(|c| c.len() * c.len()).sum();
    if a.dim() - j.len() != semisimple_dim {
        return Err(Error::Certification(alloc::format!(
            "quotient by the radical has dimension {} but the idempotent classes give {semisimple_dim}",
            a.dim() - j.len()
        )));
    }
    Ok(j)
}

/// Checks that `j` spans a two-sided ideal with a vanishing power.
pub fn certify_ideal_nilpotent<F: Field>(a: &Algebra<F>, j: &[Vec<F::Elt>]) -> Result<()> {
    let f = &a.field;
    let space = Subspace::span(f, a.dim(), j);
    for x in space.basis() {
        for k in 0..a.dim() {
            let b = a.basis_vec(k);
            if !space.contains(f, &a.mul(&b, x)) || !space.contains(f, &a.mul(x, &b)) {
                return Err(Error::Certification("radical is not a two-sided ideal".into()));
            }
        }
    }
    let mut power = space.basis().to_vec();
    for _ in 0..=a.dim() {
        if power.is_empty() {
            return Ok(());
        }
        let prods: Vec<Vec<F::Elt>> = power.iter().flat_map(|x| space.basis().iter().map(|y| a.mul(x, y))).collect();
        let next = Subspace::span(f, a.dim(), &prods);
        if next.dim() >= power.len() {
            break;
        }
        power = next.basis().to_vec();
    }
    Err(Error::Certification("radical is not nilpotent".into()))
}
