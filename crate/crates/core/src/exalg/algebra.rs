use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{self, Mat, Subspace};

/// A finite-dimensional unital algebra given by sparse structure constants.
///
/// Every basis element carries a grade `(a, b)`; the grades form a Peirce
/// decomposition with respect to the orthogonal idempotents `grade_units`,
/// which sum to the unit. Products `x y` with `grade(x).1 != grade(y).0`
/// vanish. Algebras without such structure use a single grade `(0, 0)`.
#[derive(Clone, Debug)]
pub struct Algebra<F: Field> {
    pub field: F,
    dim: usize,
    // rows[i] lists (j, start, len) for nonzero products b_i b_j, sorted by j
    rows: Vec<Vec<(u32, u32, u32)>>,
    terms: Vec<(u32, F::Elt)>,
    unit: Vec<F::Elt>,
    grade: Vec<(u32, u32)>,
    grade_units: Vec<Vec<F::Elt>>,
    n_grades: usize,
    generators: Option<Vec<Vec<F::Elt>>>,
    labels: Option<Vec<String>>,
}

impl<F: Field> Algebra<F> {
    /// Builds an algebra from a product oracle on basis elements; the product
    /// `b_i b_j` is only requested when `grade(i).1 == grade(j).0`.
    pub fn from_basis_products(
        field: F,
        grade: Vec<(u32, u32)>,
        grade_units: Vec<Vec<F::Elt>>,
        mut product: impl FnMut(usize, usize) -> Vec<(usize, F::Elt)>,
    ) -> Self {
        let dim = grade.len();
        let n_grades = grade.iter().map(|g| g.0.max(g.1) as usize + 1).max().unwrap_or(1).max(grade_units.len());
        let mut by_left: Vec<Vec<usize>> = alloc::vec![Vec::new(); n_grades];
        for (j, g) in grade.iter().enumerate() {
            by_left[g.0 as usize].push(j);
        }
        let mut rows = Vec::with_capacity(dim);
        let mut terms: Vec<(u32, F::Elt)> = Vec::new();
        for i in 0..dim {
            let mut row = Vec::new();
            for &j in &by_left[grade[i].1 as usize] {
                let start = terms.len();
                let mut prod = product(i, j);
                prod.sort_by_key(|t| t.0);
                for (k, c) in prod {
                    if field.is_zero(&c) {
                        continue;
                    }
                    let len = terms.len();
                    match terms.last_mut() {
                        Some(last) if len > start && last.0 as usize == k => {
                            last.1 = field.add(&last.1, &c);
                        }
                        _ => terms.push((k as u32, c)),
                    }
                }
                // drop coefficients that cancelled
                let mut w = start;
                for r in start..terms.len() {
                    if !field.is_zero(&terms[r].1) {
                        terms.swap(w, r);
                        w += 1;
                    }
                }
                terms.truncate(w);
                if terms.len() > start {
                    row.push((j as u32, start as u32, (terms.len() - start) as u32));
                }
            }
            rows.push(row);
        }
        let mut unit = alloc::vec![field.zero(); dim];
        for u in &grade_units {
            linalg::axpy(&field, &mut unit, &field.one(), u);
        }
        Algebra { field, dim, rows, terms, unit, grade, grade_units, n_grades, generators: None, labels: None }
    }

    /// An ungraded algebra from a dense product oracle; the unit is found by
    /// solving `e b_j = b_j` and then certified on both sides.
    pub fn from_dense(field: F, dim: usize, product: impl FnMut(usize, usize) -> Vec<(usize, F::Elt)>) -> Result<Self> {
        let grade = alloc::vec![(0, 0); dim];
        let mut a = Self::from_basis_products(field, grade, Vec::new(), product);
        let unit = a.solve_unit()?;
        a.grade_units = alloc::vec![unit.clone()];
        a.unit = unit;
        Ok(a)
    }

    /// Replaces the grade units (and unit) after construction.
    pub fn set_grade_units(&mut self, units: Vec<Vec<F::Elt>>) {
        let mut unit = alloc::vec![self.field.zero(); self.dim];
        for u in &units {
            linalg::axpy(&self.field, &mut unit, &self.field.one(), u);
        }
        self.unit = unit;
        self.grade_units = units;
    }

    pub(crate) fn solve_unit(&self) -> Result<Vec<F::Elt>> {
        let f = &self.field;
        let n = self.dim;
        if n == 0 {
            return Ok(Vec::new());
        }
        // unknown e = Σ e_i b_i; equations Σ_i e_i (b_i b_j)_k = δ_jk, added
        // until the coefficient part has full rank
        let mut sys: Subspace<F::Elt> = Subspace::zero(n + 1);
        'outer: for j in 0..n {
            let mut block = linalg::zeros(f, n, n + 1);
            for i in 0..n {
                for (k, c) in self.basis_mul(i, j) {
                    block[*k as usize][i] = c.clone();
                }
            }
            block[j][n] = f.one();
            for row in block {
                sys.insert(f, &row);
                if sys.dim() == n && sys.pivots().last() == Some(&(n - 1)) {
                    break 'outer;
                }
                if sys.pivots().last() == Some(&n) {
                    return Err(Error::Certification("algebra has no unit".into()));
                }
            }
        }
        if sys.dim() != n || sys.pivots().last() != Some(&(n - 1)) {
            return Err(Error::Certification("unit is not determined by the products".into()));
        }
        let e: Vec<F::Elt> = sys.basis().iter().map(|r| r[n].clone()).collect();
        for j in 0..n {
            let b = self.basis_vec(j);
            if self.mul(&e, &b) != b || self.mul(&b, &e) != b {
                return Err(Error::Certification("algebra has no unit".into()));
            }
        }
        Ok(e)
    }

    /// The unit of the corner of grade `(a, a)`, solved inside that corner
    /// and certified as a left unit on grade `(a, *)` and a right unit on
    /// grade `(*, a)`.
    pub fn graded_corner_unit(&self, a: usize) -> Result<Vec<F::Elt>> {
        let (sub, idx) = self.graded_corner(a);
        let u = sub.solve_unit()?;
        let mut e = self.zero_vec();
        for (c, &i) in u.into_iter().zip(&idx) {
            e[i] = c;
        }
        for j in 0..self.dim {
            let (l, r) = self.grade(j);
            let b = self.basis_vec(j);
            if (l == a && self.mul(&e, &b) != b) || (r == a && self.mul(&b, &e) != b) {
                return Err(Error::Certification(format!("corner unit of grade {a} fails on basis element {j}")));
            }
        }
        Ok(e)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        self.labels = Some(labels);
        self
    }

    pub fn with_generators(mut self, gens: Vec<Vec<F::Elt>>) -> Self {
        self.generators = Some(gens);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[F::Elt] {
        &self.unit
    }

    pub fn grade(&self, i: usize) -> (usize, usize) {
        let (a, b) = self.grade[i];
        (a as usize, b as usize)
    }

    pub fn n_grades(&self) -> usize {
        self.n_grades
    }

    pub fn grade_units(&self) -> &[Vec<F::Elt>] {
        &self.grade_units
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Algebra generators used for commutation tests; the basis if none were given.
    pub fn generators(&self) -> Vec<Vec<F::Elt>> {
        match &self.generators {
            Some(g) => g.clone(),
            None => (0..self.dim).map(|i| self.basis_vec(i)).collect(),
        }
    }

    pub fn basis_vec(&self, i: usize) -> Vec<F::Elt> {
        let mut v = alloc::vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    pub fn zero_vec(&self) -> Vec<F::Elt> {
        alloc::vec![self.field.zero(); self.dim]
    }

    /// Basis indices of the given grade.
    pub fn graded_indices(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.dim).filter(|&i| self.grade(i) == (a, b)).collect()
    }

    /// Terms of `b_i b_j`.
    pub fn basis_mul(&self, i: usize, j: usize) -> &[(u32, F::Elt)] {
        let row = &self.rows[i];
        match row.binary_search_by_key(&(j as u32), |r| r.0) {
            Ok(pos) => {
                let (_, s, l) = row[pos];
                &self.terms[s as usize..(s + l) as usize]
            }
            Err(_) => &[],
        }
    }

    /// Number of stored nonzero structure constants.
    pub fn nnz(&self) -> usize {
        self.terms.len()
    }

    /// All nonzero structure constants `(i, j, k, c)` in lexicographic order.
    pub fn structure_constants(&self) -> Vec<(usize, usize, usize, F::Elt)> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (i, row) in self.rows.iter().enumerate() {
            for &(j, s, l) in row {
                for (k, c) in &self.terms[s as usize..(s + l) as usize] {
                    out.push((i, j as usize, *k as usize, c.clone()));
                }
            }
        }
        out
    }

    pub fn mul(&self, x: &[F::Elt], y: &[F::Elt]) -> Vec<F::Elt> {
        let f = &self.field;
        let mut out = self.zero_vec();
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for &(j, s, l) in &self.rows[i] {
                let yj = &y[j as usize];
                if f.is_zero(yj) {
                    continue;
                }
                let c = f.mul(xi, yj);
                for (k, t) in &self.terms[s as usize..(s + l) as usize] {
                    out[*k as usize] = f.mul_add(&out[*k as usize], &c, t);
                }
            }
        }
        out
    }

    pub fn add(&self, x: &[F::Elt], y: &[F::Elt]) -> Vec<F::Elt> {
        linalg::vadd(&self.field, x, y)
    }

    pub fn sub(&self, x: &[F::Elt], y: &[F::Elt]) -> Vec<F::Elt> {
        linalg::vsub(&self.field, x, y)
    }

    pub fn scale(&self, x: &[F::Elt], c: &F::Elt) -> Vec<F::Elt> {
        linalg::vscale(&self.field, x, c)
    }

    pub fn is_zero(&self, x: &[F::Elt]) -> bool {
        linalg::is_zero_vec(&self.field, x)
    }

    pub fn pow(&self, x: &[F::Elt], e: usize) -> Vec<F::Elt> {
        let mut acc = self.unit.clone();
        for _ in 0..e {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// Checks the unit law on all basis elements.
    pub fn check_unit(&self) -> Result<()> {
        for j in 0..self.dim {
            let b = self.basis_vec(j);
            if self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b {
                return Err(Error::Certification(format!("unit law fails on basis element {j}")));
            }
        }
        Ok(())
    }

    /// Checks `(b_i b_j) b_k = b_i (b_j b_k)` on one triple.
    pub fn check_triple(&self, i: usize, j: usize, k: usize) -> bool {
        let bi = self.basis_vec(i);
        let bk = self.basis_vec(k);
        let bj = self.basis_vec(j);
        self.mul(&self.mul(&bi, &bj), &bk) == self.mul(&bi, &self.mul(&bj, &bk))
    }

    /// Associativity on every basis triple; returns the number checked.
    pub fn check_associative_all(&self) -> Result<usize> {
        let mut n = 0;
        for i in 0..self.dim {
            let bi = self.basis_vec(i);
            for j in 0..self.dim {
                let bij = self.mul(&bi, &self.basis_vec(j));
                for k in 0..self.dim {
                    let bk = self.basis_vec(k);
                    let bjk = self.mul(&self.basis_vec(j), &bk);
                    if self.mul(&bij, &bk) != self.mul(&bi, &bjk) {
                        return Err(Error::Certification(format!("associativity fails at ({i}, {j}, {k})")));
                    }
                    n += 1;
                }
            }
        }
        Ok(n)
    }

    /// Associativity on `samples` seeded random triples whose grades chain,
    /// so that both sides are generically nonzero.
    pub fn check_associative_sampled(&self, samples: usize, seed: u64) -> Result<usize> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n_grades = self.n_grades();
        let mut by_left: Vec<Vec<usize>> = alloc::vec![Vec::new(); n_grades];
        for i in 0..self.dim {
            by_left[self.grade(i).0].push(i);
        }
        let pick = |v: &[usize], rng: &mut ChaCha8Rng| v[(rng.next_u64() % v.len() as u64) as usize];
        let all: Vec<usize> = (0..self.dim).collect();
        if all.is_empty() {
            return Ok(0);
        }
        for _ in 0..samples {
            let i = pick(&all, &mut rng);
            let j = pick(&by_left[self.grade(i).1], &mut rng);
            let k = pick(&by_left[self.grade(j).1], &mut rng);
            if !self.check_triple(i, j, k) {
                return Err(Error::Certification(format!("associativity fails at ({i}, {j}, {k})")));
            }
        }
        Ok(samples)
    }

    /// Matrix of left multiplication by `x` (columns are images of basis vectors).
    pub fn left_mul_matrix(&self, x: &[F::Elt]) -> Mat<F::Elt> {
        let cols: Vec<Vec<F::Elt>> = (0..self.dim).map(|j| self.mul(x, &self.basis_vec(j))).collect();
        linalg::transpose(&cols)
    }

    /// The subalgebra `e A e` for an idempotent `e`, with basis vectors
    /// expressed in the coordinates of `self`.
    pub fn corner(&self, e: &[F::Elt]) -> Result<(Algebra<F>, Vec<Vec<F::Elt>>)> {
        let f = &self.field;
        let vecs: Vec<Vec<F::Elt>> =
            (0..self.dim).map(|i| self.mul(&self.mul(e, &self.basis_vec(i)), e)).collect();
        let space = Subspace::span(f, self.dim, &vecs);
        let basis: Vec<Vec<F::Elt>> = space.basis().to_vec();
        let n = basis.len();
        let mut failed = false;
        let sub = Algebra::from_basis_products(f.clone(), alloc::vec![(0, 0); n], Vec::new(), |i, j| {
            let p = self.mul(&basis[i], &basis[j]);
            match space.coords(f, &p) {
                Some(c) => c.into_iter().enumerate().collect(),
                None => {
                    failed = true;
                    Vec::new()
                }
            }
        });
        if failed {
            return Err(Error::Certification("corner is not closed under multiplication".into()));
        }
        let mut sub = sub;
        let unit = space.coords(f, e).ok_or_else(|| Error::Certification("idempotent outside its corner".into()))?;
        sub.set_grade_units(alloc::vec![unit]);
        Ok((sub, basis))
    }

    /// The corner spanned by the basis elements of grade `(a, a)`; its
    /// basis is a subset of the basis of `self`, returned as indices.
    pub fn graded_corner(&self, a: usize) -> (Algebra<F>, Vec<usize>) {
        let idx = self.graded_indices(a, a);
        let mut pos = alloc::vec![usize::MAX; self.dim];
        for (n, &i) in idx.iter().enumerate() {
            pos[i] = n;
        }
        let f = self.field.clone();
        let mut sub = Algebra::from_basis_products(f, alloc::vec![(0, 0); idx.len()], Vec::new(), |i, j| {
            self.basis_mul(idx[i], idx[j]).iter().map(|(k, c)| (pos[*k as usize], c.clone())).collect()
        });
        let unit: Vec<F::Elt> = idx.iter().map(|&i| self.grade_units.get(a).map_or(self.field.zero(), |u| u[i].clone())).collect();
        sub.set_grade_units(alloc::vec![unit]);
        if let Some(l) = &self.labels {
            sub.labels = Some(idx.iter().map(|&i| l[i].clone()).collect());
        }
        (sub, idx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Gf;

    pub(crate) fn group_algebra_c2(f: &Gf) -> Algebra<Gf> {
        Algebra::from_dense(f.clone(), 2, |i, j| alloc::vec![((i + j) % 2, 1)]).unwrap()
    }

    #[test]
    fn unit_is_solved_and_certified() {
        let f = Gf::new(2, 1).unwrap();
        let a = group_algebra_c2(&f);
        assert_eq!(a.unit(), [1, 0]);
        a.check_unit().unwrap();
        assert_eq!(a.check_associative_all().unwrap(), 8);
    }

    #[test]
    fn non_unital_algebra_is_rejected() {
        let f = Gf::new(3, 1).unwrap();
        // the zero product on a 1-dimensional space has no unit
        assert!(Algebra::from_dense(f, 1, |_, _| Vec::new()).is_err());
    }

    #[test]
    fn corner_of_matrix_algebra() {
        let f = Gf::new(5, 1).unwrap();
        // M_2 with basis e11, e12, e21, e22
        let a = Algebra::from_dense(f.clone(), 4, |i, j| {
            let (r1, c1) = (i / 2, i % 2);
            let (r2, c2) = (j / 2, j % 2);
            if c1 == r2 {
                alloc::vec![(r1 * 2 + c2, 1)]
            } else {
                Vec::new()
            }
        })
        .unwrap();
        assert_eq!(a.unit(), [1, 0, 0, 1]);
        let (c, basis) = a.corner(&[1, 0, 0, 0]).unwrap();
        assert_eq!(c.dim(), 1);
        assert_eq!(basis, [alloc::vec![1, 0, 0, 0]]);
        assert_eq!(c.unit(), [1]);
    }
}
