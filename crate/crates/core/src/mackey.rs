//! The Mackey algebra `μ(G)` and its `p`-local subalgebra `μ¹(G)` as
//! structure-constant algebras over the integers.
//!
//! The basis is the set of normalized quadruples `(H, K, x, L)` (see
//! [`crate::gset`]), i.e. the elements `t^H_K x r^L_{K^x}`. Products are
//! computed from the span calculus; for `μ¹` only quadruples with `K` a
//! `p`-group are kept, which span a two-sided ideal of `μ(G)` with its own unit.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exalg::Algebra;
use crate::field::Field;
use crate::grp::{is_power_of, Group};
use crate::gset::{Quad, SpanCalculus};

/// `μ(G)` or `μ¹(G)` with integer structure constants.
#[derive(Clone, Debug)]
pub struct MackeyAlgebra {
    group: Arc<Group>,
    p_local: Option<usize>,
    basis: Vec<Quad>,
    index: BTreeMap<Quad, usize>,
    rows: Vec<Vec<(u32, u32, u32)>>,
    terms: Vec<(u32, u32)>,
}

/// Normalized quadruples in the order `(H, L, x, K)`; with `p_local`, only
/// those whose middle subgroup is a `p`-group.
pub fn enumerate_basis(group: &Group, sc: &SpanCalculus<'_>, p_local: Option<usize>) -> Vec<Quad> {
    let lat = &group.lattice;
    let ns = lat.len();
    let mut out = Vec::new();
    for h in 0..ns {
        for l in 0..ns {
            for &x in sc.double_cosets(h, l).reps() {
                let within = lat.intersect(h, lat.conj(x, l));
                for k in 0..ns {
                    if !lat.is_sub(k, within) || lat.min_conjugate_within(k, within).0 != k {
                        continue;
                    }
                    if let Some(p) = p_local {
                        if !is_power_of(lat.get(k).order(), p) {
                            continue;
                        }
                    }
                    out.push(Quad::new(h, k, x, l));
                }
            }
        }
    }
    out
}

/// Product of two transitive spans `a = (H, K, x, L)` and `b = (L, K', y, M)`,
/// read off the `K`-orbits on the fibre `{x l K' : l ∈ L}` of the pullback.
pub fn fiber_product(sc: &SpanCalculus<'_>, a: Quad, b: Quad) -> Vec<(Quad, u32)> {
    debug_assert_eq!(a.l, b.h);
    let g = sc.group;
    let lat = sc.lattice;
    let (h, k, x) = (a.h as usize, a.k as usize, a.x as usize);
    let (k2, y, m) = (b.k as usize, b.x as usize, b.l as usize);
    let cs = &sc.omega.cosets[k2];
    let mut state = alloc::vec![0u8; cs.reps.len()];
    let mut fiber = Vec::new();
    for &lm in &lat.get(a.l as usize).members {
        let c = cs.of[g.mul(x, lm)];
        if state[c] == 0 {
            state[c] = 1;
            fiber.push(c);
        }
    }
    let mut out: Vec<(Quad, u32)> = Vec::new();
    for c in fiber {
        if state[c] == 2 {
            continue;
        }
        let rep = cs.reps[c];
        for &km in &lat.get(k).members {
            state[cs.of[g.mul(km, rep)]] = 2;
        }
        let stab = lat.intersect(k, lat.conj(rep, k2));
        let q = sc.normalize(h, stab, 0, g.mul(rep, y), m);
        match out.iter_mut().find(|t| t.0 == q) {
            Some(t) => t.1 += 1,
            None => out.push((q, 1)),
        }
    }
    out.sort_unstable();
    out
}

/// Counts of checked instances per relation family of the presentation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelationReport {
    pub families: Vec<(String, usize)>,
}

impl RelationReport {
    pub fn total(&self) -> usize {
        self.families.iter().map(|f| f.1).sum()
    }
}

type IntVec = BTreeMap<usize, i64>;

impl MackeyAlgebra {
    pub fn build(group: Arc<Group>, p_local: Option<usize>) -> Result<Self> {
        if let Some(p) = p_local {
            if !(2..).take_while(|d| d * d <= p).all(|d| p % d != 0) || p < 2 {
                return Err(Error::InvalidArgument(format!("{p} is not prime")));
            }
        }
        let sc = SpanCalculus::new(&group.table, &group.lattice);
        let basis = enumerate_basis(&group, &sc, p_local);
        let index: BTreeMap<Quad, usize> = basis.iter().enumerate().map(|(i, &q)| (q, i)).collect();
        let ns = group.lattice.len();
        let mut by_left: Vec<Vec<usize>> = alloc::vec![Vec::new(); ns];
        for (i, q) in basis.iter().enumerate() {
            by_left[q.h as usize].push(i);
        }
        let mut rows = Vec::with_capacity(basis.len());
        let mut terms = Vec::new();
        for &a in &basis {
            let mut row = Vec::new();
            for &j in &by_left[a.l as usize] {
                let start = terms.len();
                for (q, c) in fiber_product(&sc, a, basis[j]) {
                    let k = *index
                        .get(&q)
                        .ok_or_else(|| Error::Canonicalization(format!("product label {q} is not a basis element")))?;
                    terms.push((k as u32, c));
                }
                terms[start..].sort_unstable();
                row.push((j as u32, start as u32, (terms.len() - start) as u32));
            }
            rows.push(row);
        }
        Ok(MackeyAlgebra { group, p_local, basis, index, rows, terms })
    }

    /// Rebuilds the algebra from a basis and structure constants produced by
    /// [`MackeyAlgebra::structure_constants`]; the basis must agree with the
    /// enumeration for `group`.
    pub fn from_structure_constants(
        group: Arc<Group>,
        p_local: Option<usize>,
        basis: Vec<Quad>,
        constants: &[(usize, usize, usize, u32)],
    ) -> Result<Self> {
        let sc = SpanCalculus::new(&group.table, &group.lattice);
        if enumerate_basis(&group, &sc, p_local) != basis {
            return Err(Error::InvalidArgument("basis does not match the group".into()));
        }
        let index: BTreeMap<Quad, usize> = basis.iter().enumerate().map(|(i, &q)| (q, i)).collect();
        let mut rows: Vec<Vec<(u32, u32, u32)>> = alloc::vec![Vec::new(); basis.len()];
        let mut terms = Vec::with_capacity(constants.len());
        let mut sorted = constants.to_vec();
        sorted.sort_unstable();
        for &(i, j, k, c) in &sorted {
            if i >= basis.len() || j >= basis.len() || k >= basis.len() {
                return Err(Error::InvalidArgument(format!("structure constant ({i}, {j}, {k}) out of range")));
            }
            let row = &mut rows[i];
            match row.last_mut() {
                Some(last) if last.0 == j as u32 => last.2 += 1,
                _ => row.push((j as u32, terms.len() as u32, 1)),
            }
            terms.push((k as u32, c));
        }
        Ok(MackeyAlgebra { group, p_local, basis, index, rows, terms })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn group_arc(&self) -> Arc<Group> {
        self.group.clone()
    }

    pub fn p_local(&self) -> Option<usize> {
        self.p_local
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Quad] {
        &self.basis
    }

    pub fn index_of(&self, q: Quad) -> Option<usize> {
        self.index.get(&q).copied()
    }

    /// Integer terms of `b_i b_j`.
    pub fn basis_mul(&self, i: usize, j: usize) -> &[(u32, u32)] {
        let row = &self.rows[i];
        match row.binary_search_by_key(&(j as u32), |r| r.0) {
            Ok(pos) => {
                let (_, s, l) = row[pos];
                &self.terms[s as usize..(s + l) as usize]
            }
            Err(_) => &[],
        }
    }

    /// All nonzero structure constants `(i, j, k, c)`.
    pub fn structure_constants(&self) -> Vec<(usize, usize, usize, u32)> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (i, row) in self.rows.iter().enumerate() {
            for &(j, s, l) in row {
                for &(k, c) in &self.terms[s as usize..(s + l) as usize] {
                    out.push((i, j as usize, k as usize, c));
                }
            }
        }
        out
    }

    /// Number of basis elements per `(H, L)` pair, for pairs that occur.
    pub fn block_counts(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for q in &self.basis {
            *out.entry((q.h as usize, q.l as usize)).or_insert(0) += 1;
        }
        out
    }

    fn quad_index(&self, q: Quad) -> Result<usize> {
        self.index_of(q).ok_or_else(|| Error::InvalidArgument(format!("{q} is not in this algebra")))
    }

    /// `t^K_H`, for `H ≤ K`.
    pub fn transfer(&self, h: usize, k: usize) -> Result<usize> {
        if !self.group.lattice.is_sub(h, k) {
            return Err(Error::NotSubgroup(format!("subgroup {h} is not contained in {k}")));
        }
        self.quad_index(Quad::new(k, h, 0, h))
    }

    /// `r^K_H`, for `H ≤ K`.
    pub fn restriction(&self, h: usize, k: usize) -> Result<usize> {
        if !self.group.lattice.is_sub(h, k) {
            return Err(Error::NotSubgroup(format!("subgroup {h} is not contained in {k}")));
        }
        self.quad_index(Quad::new(h, h, 0, k))
    }

    /// `c_{g,H}`, the span `G/ᵍH ← G/ᵍH → G/H`.
    pub fn conjugation(&self, g: usize, h: usize) -> Result<usize> {
        let lat = &self.group.lattice;
        let gh = lat.conj(g, h);
        let sc_x = self.coset_min(g, h);
        self.quad_index(Quad::new(gh, gh, sc_x, h))
    }

    // smallest element of gH, which is the canonical representative of ᵍH g H
    fn coset_min(&self, g: usize, h: usize) -> usize {
        let t = &self.group.table;
        self.group.lattice.get(h).members.iter().map(|&m| t.mul(g, m)).min().expect("nonempty")
    }

    /// `t^H_H` for every subgroup `H`; these sum to the unit of `μ(G)`.
    pub fn unit_components(&self) -> Vec<Option<usize>> {
        (0..self.group.lattice.len()).map(|h| self.index_of(Quad::new(h, h, 0, h))).collect()
    }

    fn int_mul(&self, x: &IntVec, y: &IntVec) -> IntVec {
        let mut out = IntVec::new();
        for (&i, &a) in x {
            for (&j, &b) in y {
                for &(k, c) in self.basis_mul(i, j) {
                    *out.entry(k as usize).or_insert(0) += a * b * c as i64;
                }
            }
        }
        out.retain(|_, v| *v != 0);
        out
    }

    fn single(i: usize) -> IntVec {
        let mut v = IntVec::new();
        v.insert(i, 1);
        v
    }

    /// Exact integer check of `(b_i b_j) b_k = b_i (b_j b_k)` on every basis
    /// triple. Triples whose grades do not chain have both sides zero and
    /// are counted without multiplying. Returns the number of triples.
    pub fn check_associative_exact(&self) -> Result<usize> {
        let n = self.basis.len();
        let ns = self.group.lattice.len();
        let mut by_left: Vec<Vec<usize>> = alloc::vec![Vec::new(); ns];
        for (i, q) in self.basis.iter().enumerate() {
            by_left[q.h as usize].push(i);
        }
        for i in 0..n {
            for &j in &by_left[self.basis[i].l as usize] {
                let bij = self.int_mul(&Self::single(i), &Self::single(j));
                for &k in &by_left[self.basis[j].l as usize] {
                    let lhs = self.int_mul(&bij, &Self::single(k));
                    let bjk = self.int_mul(&Self::single(j), &Self::single(k));
                    if lhs != self.int_mul(&Self::single(i), &bjk) {
                        return Err(Error::Certification(format!("associativity fails at ({i}, {j}, {k})")));
                    }
                }
            }
        }
        Ok(n * n * n)
    }

    /// As [`MackeyAlgebra::check_associative_exact`] on `samples` seeded
    /// random chaining triples.
    pub fn check_associative_sampled(&self, samples: usize, seed: u64) -> Result<usize> {
        use rand_chacha::ChaCha8Rng;
        use rand_core::{RngCore, SeedableRng};
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ns = self.group.lattice.len();
        let mut by_left: Vec<Vec<usize>> = alloc::vec![Vec::new(); ns];
        for (i, q) in self.basis.iter().enumerate() {
            by_left[q.h as usize].push(i);
        }
        let n = self.basis.len() as u64;
        let mut pick = |v: &[usize]| v[(rng.next_u64() % v.len() as u64) as usize];
        let all: Vec<usize> = (0..n as usize).collect();
        for _ in 0..samples {
            let i = pick(&all);
            let j = pick(&by_left[self.basis[i].l as usize]);
            let k = pick(&by_left[self.basis[j].l as usize]);
            let (bi, bj, bk) = (Self::single(i), Self::single(j), Self::single(k));
            if self.int_mul(&self.int_mul(&bi, &bj), &bk) != self.int_mul(&bi, &self.int_mul(&bj, &bk)) {
                return Err(Error::Certification(format!("associativity fails at ({i}, {j}, {k})")));
            }
        }
        Ok(samples)
    }

    /// Checks every instance of every relation family of the generators and
    /// relations presentation. Requires the full algebra (`p_local` unset).
    pub fn verify_relations(&self) -> Result<RelationReport> {
        if self.p_local.is_some() {
            return Err(Error::InvalidArgument("relations are stated for the full Mackey algebra".into()));
        }
        let lat = &self.group.lattice;
        let t = &self.group.table;
        let ns = lat.len();
        let n = t.order();
        let mut rep = RelationReport::default();
        let fail = |what: String| Err(Error::RelationViolated(what));

        // Σ t^H_H = 1
        let units: Vec<usize> = self.unit_components().into_iter().map(|u| u.expect("full algebra")).collect();
        let one: IntVec = units.iter().map(|&u| (u, 1)).collect();
        for i in 0..self.dim() {
            let b = Self::single(i);
            if self.int_mul(&one, &b) != b || self.int_mul(&b, &one) != b {
                return fail(format!("unit relation on basis element {i}"));
            }
        }
        rep.families.push(("unit".into(), self.dim()));

        // t^H_H = r^H_H = c_{h,H}
        let mut count = 0;
        for h in 0..ns {
            let u = self.transfer(h, h)?;
            if self.restriction(h, h)? != u {
                return fail(format!("r^H_H != t^H_H for H = {h}"));
            }
            for &x in &lat.get(h).members {
                if self.conjugation(x, h)? != u {
                    return fail(format!("c_(h,H) != t^H_H for h = {x}, H = {h}"));
                }
                count += 1;
            }
        }
        rep.families.push(("triviality".into(), count));

        // transitivity of transfer and restriction
        let mut count = 0;
        for h in 0..ns {
            for k in (0..ns).filter(|&k| lat.is_sub(h, k)) {
                for l in (0..ns).filter(|&l| lat.is_sub(k, l)) {
                    let tt = self.int_mul(&Self::single(self.transfer(k, l)?), &Self::single(self.transfer(h, k)?));
                    if tt != Self::single(self.transfer(h, l)?) {
                        return fail(format!("t^L_K t^K_H != t^L_H for ({h}, {k}, {l})"));
                    }
                    let rr =
                        self.int_mul(&Self::single(self.restriction(h, k)?), &Self::single(self.restriction(k, l)?));
                    if rr != Self::single(self.restriction(h, l)?) {
                        return fail(format!("r^K_H r^L_K != r^L_H for ({h}, {k}, {l})"));
                    }
                    count += 2;
                }
            }
        }
        rep.families.push(("transitivity".into(), count));

        // c_{g', gH} c_{g,H} = c_{g'g,H}
        let mut count = 0;
        for h in 0..ns {
            for g in 0..n {
                let gh = lat.conj(g, h);
                let cg = Self::single(self.conjugation(g, h)?);
                for g2 in 0..n {
                    let lhs = self.int_mul(&Self::single(self.conjugation(g2, gh)?), &cg);
                    if lhs != Self::single(self.conjugation(t.mul(g2, g), h)?) {
                        return fail(format!("conjugation composition at ({g2}, {g}, {h})"));
                    }
                    count += 1;
                }
            }
        }
        rep.families.push(("conjugation".into(), count));

        // compatibility of conjugation with transfer and restriction
        let mut count = 0;
        for h in 0..ns {
            for k in (0..ns).filter(|&k| lat.is_sub(h, k)) {
                for g in 0..n {
                    let (gh, gk) = (lat.conj(g, h), lat.conj(g, k));
                    let lhs = self.int_mul(&Self::single(self.transfer(gh, gk)?), &Self::single(self.conjugation(g, h)?));
                    let rhs = self.int_mul(&Self::single(self.conjugation(g, k)?), &Self::single(self.transfer(h, k)?));
                    if lhs != rhs {
                        return fail(format!("t c = c t at ({h}, {k}, {g})"));
                    }
                    let lhs =
                        self.int_mul(&Self::single(self.restriction(gh, gk)?), &Self::single(self.conjugation(g, k)?));
                    let rhs =
                        self.int_mul(&Self::single(self.conjugation(g, h)?), &Self::single(self.restriction(h, k)?));
                    if lhs != rhs {
                        return fail(format!("r c = c r at ({h}, {k}, {g})"));
                    }
                    count += 2;
                }
            }
        }
        rep.families.push(("conjugation-compatibility".into(), count));

        // Mackey formula r^H_L t^H_K = Σ_{h ∈ [L\H/K]} t^L_{L∩ʰK} c_{h, L^h∩K} r^K_{L^h∩K}
        let mut count = 0;
        for hh in 0..ns {
            let members = &lat.get(hh).members;
            for l in (0..ns).filter(|&l| lat.is_sub(l, hh)) {
                for k in (0..ns).filter(|&k| lat.is_sub(k, hh)) {
                    let lhs =
                        self.int_mul(&Self::single(self.restriction(l, hh)?), &Self::single(self.transfer(k, hh)?));
                    let mut rhs = IntVec::new();
                    let mut seen = alloc::vec![false; n];
                    for &x in members {
                        if seen[x] {
                            continue;
                        }
                        for &a in &lat.get(l).members {
                            for &b in &lat.get(k).members {
                                seen[t.mul(t.mul(a, x), b)] = true;
                            }
                        }
                        let lxk = lat.intersect(l, lat.conj(x, k));
                        let lk = lat.conj(t.inv(x), lxk);
                        let term = self.int_mul(
                            &self.int_mul(
                                &Self::single(self.transfer(lxk, l)?),
                                &Self::single(self.conjugation(x, lk)?),
                            ),
                            &Self::single(self.restriction(lk, k)?),
                        );
                        for (i, c) in term {
                            *rhs.entry(i).or_insert(0) += c;
                        }
                    }
                    rhs.retain(|_, v| *v != 0);
                    if lhs != rhs {
                        return fail(format!("Mackey formula at (L, H, K) = ({l}, {hh}, {k})"));
                    }
                    count += 1;
                }
            }
        }
        rep.families.push(("mackey-formula".into(), count));

        // products of generators with mismatched subgroups vanish
        let mut gens: Vec<(usize, usize, usize)> = Vec::new();
        for h in 0..ns {
            for k in (0..ns).filter(|&k| lat.is_sub(h, k)) {
                gens.push((self.transfer(h, k)?, k, h));
                gens.push((self.restriction(h, k)?, h, k));
            }
            for g in 0..n {
                gens.push((self.conjugation(g, h)?, lat.conj(g, h), h));
            }
        }
        let mut count = 0;
        for &(a, _, ra) in &gens {
            for &(b, lb, _) in &gens {
                if ra != lb {
                    if !self.basis_mul(a, b).is_empty() {
                        return fail(format!("product of generators {a} and {b} is nonzero"));
                    }
                    count += 1;
                }
            }
        }
        rep.families.push(("vanishing".into(), count));
        Ok(rep)
    }

    /// Basis indices of `t^1_1 x` for each `x ∈ G`; checks that `t^1_1 x ↦ x`
    /// is multiplicative on all `|G|²` products.
    pub fn corner_group_algebra(&self) -> Result<Vec<usize>> {
        let t = &self.group.table;
        let idx: Vec<usize> = (0..t.order())
            .map(|x| self.quad_index(Quad::new(0, 0, x, 0)))
            .collect::<Result<_>>()?;
        for x in 0..t.order() {
            for y in 0..t.order() {
                let prod = self.basis_mul(idx[x], idx[y]);
                if prod != [(idx[t.mul(x, y)] as u32, 1)] {
                    return Err(Error::Certification(format!("corner product t x * t y != t xy at ({x}, {y})")));
                }
            }
        }
        Ok(idx)
    }

    /// Reduction to a field. The grade of a basis element is its `(H, L)`
    /// pair; the grade units are `t^H_H` for `μ(G)` and the unit of each
    /// diagonal corner for `μ¹(G)`.
    pub fn over<F: Field>(&self, field: &F) -> Result<Algebra<F>> {
        let ns = self.group.lattice.len();
        let grade: Vec<(u32, u32)> = self.basis.iter().map(|q| (q.h as u32, q.l as u32)).collect();
        let mut alg = Algebra::from_basis_products(field.clone(), grade, Vec::new(), |i, j| {
            self.basis_mul(i, j).iter().map(|&(k, c)| (k as usize, field.from_int(c as i64))).collect()
        });
        let mut units = Vec::with_capacity(ns);
        for h in 0..ns {
            let u = match self.index_of(Quad::new(h, h, 0, h)) {
                Some(i) => alg.basis_vec(i),
                None => alg.graded_corner_unit(h)?,
            };
            units.push(u);
        }
        alg.set_grade_units(units);
        alg.check_unit()?;
        let gens = self.generator_indices();
        let gen_vecs = gens.into_iter().map(|i| alg.basis_vec(i)).collect();
        let labels = self.basis.iter().map(|q| format!("{q}")).collect();
        Ok(alg.with_generators(gen_vecs).with_labels(labels))
    }

    /// Generators `t^H_K`, `r^H_K` and `c_{s,K}` (for `s` among the group
    /// generators) that lie in this algebra; together with the grade units
    /// they generate it.
    pub fn generator_indices(&self) -> Vec<usize> {
        let lat = &self.group.lattice;
        let ns = lat.len();
        let mut out = Vec::new();
        for k in 0..ns {
            for h in (0..ns).filter(|&h| lat.is_sub(k, h)) {
                out.extend(self.transfer(k, h).ok());
                out.extend(self.restriction(k, h).ok());
            }
            for &s in self.group.table.generators() {
                out.extend(self.conjugation(s, k).ok());
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Outcome of testing the six-element map on `μ(C2)` against the algebra
/// structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiReport {
    pub unital: bool,
    pub bijective: bool,
    pub multiplicative_pairs: usize,
    pub failed_pairs: Vec<(usize, usize)>,
}

impl PhiReport {
    pub fn is_automorphism(&self) -> bool {
        self.unital && self.bijective && self.failed_pairs.is_empty()
    }
}

/// Basis of `μ(C2)` in the order `t^C2_C2, t^C2_1 r^C2_1, t^C2_1, r^C2_1,
/// t^1_1, t^1_1 x`, as quadruples (subgroup 0 is trivial, 1 is `C2`).
pub fn c2_named_basis() -> [Quad; 6] {
    [
        Quad::new(1, 1, 0, 1),
        Quad::new(1, 0, 0, 1),
        Quad::new(1, 0, 0, 0),
        Quad::new(0, 0, 0, 1),
        Quad::new(0, 0, 0, 0),
        Quad::new(0, 0, 1, 0),
    ]
}

/// Tests the map `t^C2_C2 ↦ t^1_1`, `t^C2_1 r^C2_1 ↦ t^1_1 + t^1_1 x`,
/// `t^C2_1 ↦ r^C2_1`, `r^C2_1 ↦ t^C2_1`, `t^1_1 ↦ t^C2_C2`,
/// `t^1_1 x ↦ t^C2_1 r^C2_1 - t^C2_C2` for being a unital algebra
/// automorphism of `μ(C2)` over `field`.
pub fn phi_automorphism_check<F: Field>(field: &F) -> Result<PhiReport> {
    let group = Arc::new(Group::builtin("C2")?);
    let mu = MackeyAlgebra::build(group, None)?;
    let alg = mu.over(field)?;
    let named = c2_named_basis();
    let pos: Vec<usize> = named.iter().map(|&q| mu.index_of(q).expect("basis of mu(C2)")).collect();
    let f = field;
    let vec_of = |coeffs: &[(usize, i64)]| {
        let mut v = alg.zero_vec();
        for &(n, c) in coeffs {
            v[pos[n]] = f.add(&v[pos[n]], &f.from_int(c));
        }
        v
    };
    // images of the named basis elements, in named coordinates
    let images: Vec<Vec<F::Elt>> = [
        vec_of(&[(4, 1)]),
        vec_of(&[(4, 1), (5, 1)]),
        vec_of(&[(3, 1)]),
        vec_of(&[(2, 1)]),
        vec_of(&[(0, 1)]),
        vec_of(&[(1, 1), (0, -1)]),
    ]
    .into_iter()
    .collect();
    // phi as a matrix on algebra coordinates
    let mut phi_of_basis: Vec<Vec<F::Elt>> = alloc::vec![alg.zero_vec(); alg.dim()];
    for (n, img) in images.iter().enumerate() {
        phi_of_basis[pos[n]] = img.clone();
    }
    let apply = |v: &[F::Elt]| {
        let mut out = alg.zero_vec();
        for (i, c) in v.iter().enumerate() {
            crate::linalg::axpy(f, &mut out, c, &phi_of_basis[i]);
        }
        out
    };
    let unital = apply(alg.unit()) == alg.unit();
    let bijective = crate::linalg::rank(f, &phi_of_basis) == alg.dim();
    let mut failed = Vec::new();
    let mut checked = 0;
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let (bi, bj) = (alg.basis_vec(i), alg.basis_vec(j));
            let lhs = apply(&alg.mul(&bi, &bj));
            let rhs = alg.mul(&apply(&bi), &apply(&bj));
            checked += 1;
            if lhs != rhs {
                failed.push((i, j));
            }
        }
    }
    Ok(PhiReport { unital, bijective, multiplicative_pairs: checked, failed_pairs: failed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Gf, Rationals};
    use crate::gset::BurnsideElt;

    fn mackey(name: &str, p: Option<usize>) -> MackeyAlgebra {
        MackeyAlgebra::build(Arc::new(Group::builtin(name).unwrap()), p).unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(mackey("C1", None).dim(), 1);
        assert_eq!(mackey("C2", None).dim(), 6);
        assert_eq!(mackey("C3", None).dim(), 7);
        assert_eq!(mackey("S3", Some(2)).dim(), 81);
    }

    #[test]
    fn rebuild_from_structure_constants() {
        let mu = mackey("S3", Some(2));
        let re = MackeyAlgebra::from_structure_constants(mu.group_arc(), Some(2), mu.basis().to_vec(), &mu.structure_constants())
            .unwrap();
        for i in 0..mu.dim() {
            for j in 0..mu.dim() {
                assert_eq!(mu.basis_mul(i, j), re.basis_mul(i, j));
            }
        }
        assert!(MackeyAlgebra::from_structure_constants(mu.group_arc(), None, mu.basis().to_vec(), &[]).is_err());
    }

    #[test]
    fn c2_basis_matches_named_elements() {
        let mu = mackey("C2", None);
        let mut named = c2_named_basis().to_vec();
        named.sort_by_key(|q| (q.h, q.l, q.x, q.k));
        assert_eq!(mu.basis(), &named[..]);
    }

    #[test]
    fn fiber_product_agrees_with_pullback() {
        for name in ["C2", "C3", "C4", "S3", "C2xC2"] {
            let g = Group::builtin(name).unwrap();
            let sc = SpanCalculus::new(&g.table, &g.lattice);
            let basis = enumerate_basis(&g, &sc, None);
            for &a in &basis {
                for &b in basis.iter().filter(|b| b.h == a.l) {
                    let fast: BurnsideElt = BurnsideElt {
                        terms: fiber_product(&sc, a, b).into_iter().map(|(q, c)| (q, c as i64)).collect(),
                    };
                    let slow = sc.compose_spans(&sc.span_of(a), &sc.span_of(b)).unwrap();
                    assert_eq!(fast, slow, "{name}: {a} * {b}");
                }
            }
        }
    }

    #[test]
    fn c2_products() {
        let mu = mackey("C2", None);
        let idx = |h, k, x, l| mu.index_of(Quad::new(h, k, x, l)).unwrap() as u32;
        let tx = idx(0, 0, 1, 0);
        let t11 = idx(0, 0, 0, 0);
        assert_eq!(mu.basis_mul(tx as usize, tx as usize), [(t11, 1)]);
        // r^C2_1 t^C2_1 = t^1_1 + t^1_1 x
        let r = mu.restriction(0, 1).unwrap();
        let t = mu.transfer(0, 1).unwrap();
        let mut expect = alloc::vec![(t11, 1), (tx, 1)];
        expect.sort_unstable();
        assert_eq!(mu.basis_mul(r, t), &expect[..]);
        // t^C2_1 r^C2_1 is a single basis element
        assert_eq!(mu.basis_mul(t, r), [(idx(1, 0, 0, 1), 1)]);
    }

    #[test]
    fn generator_labels() {
        let mu = mackey("C2", None);
        assert_eq!(mu.basis()[mu.transfer(1, 1).unwrap()], Quad::new(1, 1, 0, 1));
        assert_eq!(mu.basis()[mu.conjugation(1, 0).unwrap()], Quad::new(0, 0, 1, 0));
        assert!(mu.transfer(1, 0).is_err());
        let s3 = mackey("S3", None);
        assert_eq!(s3.basis()[s3.restriction(4, 5).unwrap()], Quad::new(4, 4, 0, 5));
    }

    #[test]
    fn relations_hold() {
        for name in ["C2", "C3", "S3", "C4"] {
            let rep = mackey(name, None).verify_relations().unwrap();
            assert!(rep.total() > 0);
        }
    }

    #[test]
    fn associativity_small() {
        for (name, p) in [("C2", None), ("S3", None), ("S3", Some(2)), ("C4", None)] {
            let mu = mackey(name, p);
            let alg = mu.over(&Rationals).unwrap();
            alg.check_associative_sampled(3000, 7).unwrap();
            mu.check_associative_sampled(3000, 7).unwrap();
        }
        assert_eq!(mackey("S3", None).check_associative_exact().unwrap(), 87 * 87 * 87);
    }

    #[test]
    fn p_local_is_closed() {
        let mu = mackey("S3", Some(2));
        let lat = &mu.group().lattice;
        for (_, _, k, _) in mu.structure_constants() {
            assert!(is_power_of(lat.get(mu.basis()[k].k as usize).order(), 2));
        }
        let f = Gf::new(2, 1).unwrap();
        let alg = mu.over(&f).unwrap();
        alg.check_unit().unwrap();
    }

    #[test]
    fn corner_is_the_group_algebra() {
        for (name, p) in [("C2", None), ("S3", None), ("S3", Some(2))] {
            let idx = mackey(name, p).corner_group_algebra().unwrap();
            assert_eq!(idx.len(), Group::builtin(name).unwrap().order());
        }
    }

    #[test]
    fn phi_in_characteristic_two() {
        let rep = phi_automorphism_check(&Gf::new(2, 1).unwrap()).unwrap();
        assert!(rep.is_automorphism(), "{rep:?}");
        assert_eq!(rep.multiplicative_pairs, 36);
    }
}
