//! Finite-dimensional algebras over exact fields: center, blocks, primitive
//! idempotents, Cartan matrices, radical and the symmetric-algebra test.

mod algebra;
mod blocks;
mod primitive;
mod radical;
mod symmetric;

use alloc::string::String;
use alloc::vec::Vec;

pub use algebra::Algebra;
pub use blocks::{block_idempotents, center, check_idempotent_decomposition};
pub use primitive::{
    cartan_matrix, corner_space, isomorphic, primitive_idempotents, primitive_idempotents_with_blocks, residue,
    PrimitiveDecomposition, PrimitiveIdempotent,
};
pub use radical::{certify_ideal_nilpotent, radical, radical_from_idempotents};
pub use symmetric::{is_symmetric_algebra, SymmetricVerdict, SYMMETRIC_SEARCH_CAP};

use crate::field::Field;
use crate::grp::GroupTable;

/// Cartan matrix over class representatives of primitive idempotents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanMatrix {
    pub entries: Vec<Vec<usize>>,
    pub labels: Vec<String>,
}

impl CartanMatrix {
    pub fn from_entries(entries: Vec<Vec<usize>>) -> Self {
        let labels = (0..entries.len()).map(|i| alloc::format!("P{i}")).collect();
        CartanMatrix { entries, labels }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// A permutation `σ` with `self[σ(i)][σ(j)] = other[i][j]`, if any.
    pub fn matching_permutation(&self, other: &[Vec<usize>]) -> Option<Vec<usize>> {
        permutation_match(&self.entries, other)
    }

    pub fn equal_up_to_permutation(&self, other: &[Vec<usize>]) -> bool {
        self.matching_permutation(other).is_some()
    }
}

/// A permutation `σ` with `a[σ(i)][σ(j)] = b[i][j]` for all `i, j`, found by
/// backtracking with row-multiset pruning.
pub fn permutation_match(a: &[Vec<usize>], b: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = a.len();
    if b.len() != n {
        return None;
    }
    let sig = |m: &[Vec<usize>], i: usize| {
        let mut r = m[i].clone();
        r.sort_unstable();
        let mut c: Vec<usize> = m.iter().map(|row| row[i]).collect();
        c.sort_unstable();
        (m[i][i], r, c)
    };
    let sa: Vec<_> = (0..n).map(|i| sig(a, i)).collect();
    let sb: Vec<_> = (0..n).map(|i| sig(b, i)).collect();
    let mut perm = alloc::vec![usize::MAX; n];
    let mut used = alloc::vec![false; n];
    fn go(
        i: usize,
        a: &[Vec<usize>],
        b: &[Vec<usize>],
        sa: &[(usize, Vec<usize>, Vec<usize>)],
        sb: &[(usize, Vec<usize>, Vec<usize>)],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = a.len();
        if i == n {
            return true;
        }
        for k in 0..n {
            if used[k] || sa[k] != sb[i] {
                continue;
            }
            if (0..i).any(|j| a[k][perm[j]] != b[i][j] || a[perm[j]][k] != b[j][i]) {
                continue;
            }
            perm[i] = k;
            used[k] = true;
            if go(i + 1, a, b, sa, sb, perm, used) {
                return true;
            }
            used[k] = false;
        }
        false
    }
    if go(0, a, b, &sa, &sb, &mut perm, &mut used) {
        Some(perm)
    } else {
        None
    }
}

/// The group algebra `F[G]` with basis the group elements, generated as an
/// algebra by the group generators.
pub fn group_algebra<F: Field>(field: &F, g: &GroupTable) -> Algebra<F> {
    let n = g.order();
    let mut a = Algebra::from_basis_products(field.clone(), alloc::vec![(0, 0); n], Vec::new(), |i, j| {
        alloc::vec![(g.mul(i, j), field.one())]
    });
    let mut unit = alloc::vec![field.zero(); n];
    unit[g.identity()] = field.one();
    a.set_grade_units(alloc::vec![unit]);
    let gens = g.generators().iter().map(|&s| a.basis_vec(s)).collect();
    let labels = (0..n).map(|i| alloc::format!("g{i}")).collect();
    a.with_generators(gens).with_labels(labels)
}
