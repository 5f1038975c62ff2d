use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{self, Subspace};

use super::blocks::{block_idempotents, check_idempotent_decomposition, split_by, Split};
use super::{Algebra, CartanMatrix};

/// Pair products tried when no basis element of a corner splits it.
const PAIR_CANDIDATES: usize = 256;
/// Seeded random elements tried after the pair products.
const RANDOM_CANDIDATES: usize = 256;

/// A primitive idempotent `e` together with the radical `N` of its local
/// corner, `eAe = F e ⊕ N`.
#[derive(Clone, Debug)]
pub struct PrimitiveIdempotent<E> {
    pub vec: Vec<E>,
    /// Grade of the Peirce component containing `e`.
    pub grade: usize,
    /// Index into the block list.
    pub block: usize,
    rad: Subspace<E>,
    residue: Vec<E>,
    pivot: usize,
}

/// A complete set of orthogonal primitive idempotents, refined from the
/// block idempotents and the grade units, grouped into isomorphism classes.
#[derive(Clone, Debug)]
pub struct PrimitiveDecomposition<E> {
    pub blocks: Vec<Vec<E>>,
    pub idempotents: Vec<PrimitiveIdempotent<E>>,
    /// Each class lists idempotent indices; classes are ordered by block and
    /// then by first member.
    pub classes: Vec<Vec<usize>>,
}

impl<E: Clone> PrimitiveDecomposition<E> {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_block(&self, c: usize) -> usize {
        self.idempotents[self.classes[c][0]].block
    }

    pub fn class_rep(&self, c: usize) -> &PrimitiveIdempotent<E> {
        &self.idempotents[self.classes[c][0]]
    }

    /// Classes belonging to block `b`, in class order.
    pub fn classes_in_block(&self, b: usize) -> Vec<usize> {
        (0..self.classes.len()).filter(|&c| self.class_block(c) == b).collect()
    }
}

/// `λ` with `z - λ e ∈ N` for `z` in the local corner of `p`.
pub fn residue<F: Field>(f: &F, p: &PrimitiveIdempotent<F::Elt>, z: &[F::Elt]) -> Result<F::Elt> {
    let r = p.rad.reduce(f, z);
    let lambda = f.div(&r[p.pivot], &p.residue[p.pivot]).expect("residue pivot is nonzero");
    if linalg::vscale(f, &p.residue, &lambda) != r {
        return Err(Error::Certification("element lies outside the local corner".into()));
    }
    Ok(lambda)
}

/// Splits `e` in `c` until every piece has a local corner.
fn decompose_local<F: Field>(c: &Algebra<F>, e: Vec<F::Elt>) -> Result<Vec<(Vec<F::Elt>, Subspace<F::Elt>)>> {
    let mut stack = alloc::vec![e];
    let mut out = Vec::new();
    while let Some(e) = stack.pop() {
        match local_or_split(c, &e)? {
            Ok(rad) => out.push((e, rad)),
            Err(mut pieces) => {
                pieces.reverse();
                stack.extend(pieces);
            }
        }
    }
    Ok(out)
}

fn is_nilpotent_subalgebra<F: Field>(c: &Algebra<F>, n: &Subspace<F::Elt>) -> bool {
    let f = &c.field;
    let basis = n.basis();
    for x in basis {
        for y in basis {
            if !n.contains(f, &c.mul(x, y)) {
                return false;
            }
        }
    }
    let mut power = basis.to_vec();
    for _ in 0..=basis.len() {
        if power.is_empty() {
            return true;
        }
        let prods: Vec<Vec<F::Elt>> = power.iter().flat_map(|x| basis.iter().map(|y| c.mul(x, y))).collect();
        let next = Subspace::span(f, c.dim(), &prods);
        if next.dim() >= power.len() {
            return false;
        }
        power = next.basis().to_vec();
    }
    power.is_empty()
}

/// Either certifies that `eCe` is local (returning its radical) or returns
/// a splitting of `e`.
fn local_or_split<F: Field>(
    c: &Algebra<F>,
    e: &[F::Elt],
) -> Result<core::result::Result<Subspace<F::Elt>, Vec<Vec<F::Elt>>>> {
    let f = &c.field;
    let vecs: Vec<Vec<F::Elt>> = (0..c.dim()).map(|i| c.mul(&c.mul(e, &c.basis_vec(i)), e)).collect();
    let corner = Subspace::span(f, c.dim(), &vecs);
    let basis = corner.basis().to_vec();
    if basis.len() == 1 {
        return Ok(Ok(Subspace::zero(c.dim())));
    }
    let mut nil = Vec::with_capacity(basis.len());
    let mut ext = None;
    for x in &basis {
        match split_by(c, e, x)? {
            Split::Pieces(p) => return Ok(Err(p)),
            Split::Scalar(l) => nil.push(linalg::vsub(f, x, &linalg::vscale(f, e, &l))),
            Split::Irreducible(d) => ext = Some(d),
        }
    }
    if ext.is_none() {
        let rad = Subspace::span(f, c.dim(), &nil);
        if rad.dim() + 1 == basis.len() && is_nilpotent_subalgebra(c, &rad) {
            return Ok(Ok(rad));
        }
    }
    for (n, (i, j)) in (0..basis.len()).flat_map(|i| (0..basis.len()).map(move |j| (i, j))).enumerate() {
        if n == PAIR_CANDIDATES {
            break;
        }
        let x = c.mul(&basis[i], &basis[j]);
        if let Split::Pieces(p) = split_by(c, e, &x)? {
            return Ok(Err(p));
        }
    }
    let elems = f.elements().ok_or_else(|| Error::UnsupportedField("idempotent search needs a finite field".into()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(basis.len() as u64);
    for _ in 0..RANDOM_CANDIDATES {
        let mut x = c.zero_vec();
        for b in &basis {
            let k = &elems[(rng.next_u64() % elems.len() as u64) as usize];
            linalg::axpy(f, &mut x, k, b);
        }
        if let Split::Pieces(p) = split_by(c, e, &x)? {
            return Ok(Err(p));
        }
    }
    Err(match ext {
        Some(d) => Error::NeedsExtension(d),
        None => Error::Undecided(format!("no splitting element found in a corner of dimension {}", basis.len())),
    })
}

/// Spanning vectors of `e A f` for `e`, `f` supported in grades `(a, a)` and `(b, b)`.
pub fn corner_space<F: Field>(a: &Algebra<F>, e: &[F::Elt], ga: usize, f_: &[F::Elt], gb: usize) -> Subspace<F::Elt> {
    let vecs: Vec<Vec<F::Elt>> =
        a.graded_indices(ga, gb).into_iter().map(|i| a.mul(&a.mul(e, &a.basis_vec(i)), f_)).collect();
    Subspace::span(&a.field, a.dim(), &vecs)
}

/// Decides `e ≅ f` for primitive idempotents; on success the witnesses
/// `x ∈ eAf`, `y ∈ fAe` with `xy = e`, `yx = f` are constructed and checked.
pub fn isomorphic<F: Field>(
    a: &Algebra<F>,
    e: &PrimitiveIdempotent<F::Elt>,
    g: &PrimitiveIdempotent<F::Elt>,
) -> Result<bool> {
    let f = &a.field;
    let ef = corner_space(a, &e.vec, e.grade, &g.vec, g.grade);
    if ef.dim() == 0 {
        return Ok(false);
    }
    let fe = corner_space(a, &g.vec, g.grade, &e.vec, e.grade);
    for x in ef.basis() {
        for y in fe.basis() {
            let z = a.mul(x, y);
            let lambda = residue(f, e, &z)?;
            if f.is_zero(&lambda) {
                continue;
            }
            // z = λ(e - m) with m nilpotent; invert by the geometric series
            let li = f.inv(&lambda).expect("nonzero");
            let m = a.sub(&e.vec, &a.scale(&z, &li));
            let mut inv = e.vec.clone();
            let mut term = e.vec.clone();
            for _ in 0..a.dim() {
                term = a.mul(&term, &m);
                if a.is_zero(&term) {
                    break;
                }
                inv = a.add(&inv, &term);
            }
            let y2 = a.scale(&a.mul(y, &inv), &li);
            if a.mul(x, &y2) != e.vec || a.mul(&y2, x) != g.vec {
                return Err(Error::Certification("isomorphism witnesses fail".into()));
            }
            return Ok(true);
        }
    }
    Ok(false)
}

/// Complete set of orthogonal primitive idempotents of `a`, refining the
/// block idempotents inside each graded corner, with isomorphism classes.
pub fn primitive_idempotents<F: Field>(a: &Algebra<F>) -> Result<PrimitiveDecomposition<F::Elt>> {
    let blocks = block_idempotents(a)?;
    primitive_idempotents_with_blocks(a, blocks)
}

/// As [`primitive_idempotents`], with the block idempotents supplied.
pub fn primitive_idempotents_with_blocks<F: Field>(
    a: &Algebra<F>,
    blocks: Vec<Vec<F::Elt>>,
) -> Result<PrimitiveDecomposition<F::Elt>> {
    let f = &a.field;
    let corners: Vec<(Algebra<F>, Vec<usize>)> = (0..a.n_grades()).map(|g| a.graded_corner(g)).collect();
    let mut idempotents = Vec::new();
    for (bi, b) in blocks.iter().enumerate() {
        for (g, (c, idx)) in corners.iter().enumerate() {
            if c.dim() == 0 {
                continue;
            }
            let bg: Vec<F::Elt> = idx.iter().map(|&i| b[i].clone()).collect();
            if c.is_zero(&bg) {
                continue;
            }
            for (e, rad) in decompose_local(c, bg)? {
                let lift = |v: &[F::Elt]| {
                    let mut out = a.zero_vec();
                    for (x, &i) in v.iter().zip(idx) {
                        out[i] = x.clone();
                    }
                    out
                };
                let vec = lift(&e);
                let rad_vecs: Vec<Vec<F::Elt>> = rad.basis().iter().map(|v| lift(v)).collect();
                let rad = Subspace::span(f, a.dim(), &rad_vecs);
                let residue = rad.reduce(f, &vec);
                let pivot = residue.iter().position(|x| !f.is_zero(x)).expect("idempotent outside its radical");
                idempotents.push(PrimitiveIdempotent { vec, grade: g, block: bi, rad, residue, pivot });
            }
        }
    }
    let vecs: Vec<Vec<F::Elt>> = idempotents.iter().map(|p| p.vec.clone()).collect();
    check_idempotent_decomposition(a, &vecs)?;
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..idempotents.len() {
        let mut found = None;
        for (c, members) in classes.iter().enumerate() {
            let rep = &idempotents[members[0]];
            if rep.block == idempotents[i].block && isomorphic(a, rep, &idempotents[i])? {
                found = Some(c);
                break;
            }
        }
        match found {
            Some(c) => classes[c].push(i),
            None => classes.push(alloc::vec![i]),
        }
    }
    Ok(PrimitiveDecomposition { blocks, idempotents, classes })
}

/// Cartan matrix `c_ij = dim e_i A e_j` over class representatives, for the
/// classes of one block (or all classes when `block` is `None`).
pub fn cartan_matrix<F: Field>(
    a: &Algebra<F>,
    pd: &PrimitiveDecomposition<F::Elt>,
    block: Option<usize>,
) -> CartanMatrix {
    let classes: Vec<usize> = match block {
        Some(b) => pd.classes_in_block(b),
        None => (0..pd.class_count()).collect(),
    };
    let entries = classes
        .iter()
        .map(|&ci| {
            let e = pd.class_rep(ci);
            classes
                .iter()
                .map(|&cj| {
                    let g = pd.class_rep(cj);
                    if e.block != g.block {
                        0
                    } else {
                        corner_space(a, &e.vec, e.grade, &g.vec, g.grade).dim()
                    }
                })
                .collect()
        })
        .collect();
    let labels: Vec<String> = classes
        .iter()
        .map(|&c| {
            let rep = pd.class_rep(c);
            match a.labels() {
                Some(l) => {
                    let i = a.graded_indices(rep.grade, rep.grade)[0];
                    format!("{}#{c}", l[i])
                }
                None => format!("P{c}"),
            }
        })
        .collect();
    CartanMatrix { entries, labels }
}
