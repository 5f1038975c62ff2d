use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Upper bound on the number of elements produced by a generator closure.
pub const MAX_CLOSURE_ORDER: usize = 4096;
/// Largest permutation degree accepted by [`GroupTable::from_permutations`].
pub const MAX_PERMUTATION_DEGREE: usize = 64;

/// A finite group stored as a full Cayley table.
///
/// Elements are the indices `0..order`. The identity is always index `0`;
/// every constructor relabels its input to guarantee this, so the minimal
/// element of any coset or double coset containing the identity is the
/// identity itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mult: Vec<u16>,
    inv: Vec<usize>,
    generators: Vec<usize>,
    name: String,
}

impl GroupTable {
    /// Builds a group from a raw multiplication table, checking the group
    /// axioms exhaustively.
    pub fn from_table(name: &str, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        if n > u16::MAX as usize {
            return Err(Error::OrderTooLarge { order: n, bound: u16::MAX as usize });
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidTable(format!("entry {bad} out of range in row {i}")));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::InvalidTable("no two-sided identity".into()))?;
        // relabel so that the identity is index 0
        let relabel = |x: usize| -> usize {
            if x == identity {
                0
            } else if x == 0 {
                identity
            } else {
                x
            }
        };
        let mut mult = alloc::vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                mult[relabel(a) * n + relabel(b)] = relabel(table[a][b]) as u16;
            }
        }
        let mut g = GroupTable { order: n, mult, inv: Vec::new(), generators: Vec::new(), name: name.to_string() };
        g.validate_and_finish()?;
        g.generators = g.greedy_generators();
        Ok(g)
    }

    /// Builds a group as the closure of `gens` under `mul`.
    ///
    /// Elements are numbered in breadth-first order from the identity, which
    /// makes the numbering a deterministic function of the generator list.
    pub fn from_closure<T, F>(name: &str, identity: T, gens: &[T], mul: F) -> Result<Self>
    where
        T: Ord + Clone,
        F: Fn(&T, &T) -> T,
    {
        let mut index: BTreeMap<T, usize> = BTreeMap::new();
        let mut elems: Vec<T> = Vec::new();
        index.insert(identity.clone(), 0);
        elems.push(identity);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for s in gens {
                let prod = mul(&elems[i], s);
                if !index.contains_key(&prod) {
                    if elems.len() >= MAX_CLOSURE_ORDER {
                        return Err(Error::OrderTooLarge { order: elems.len() + 1, bound: MAX_CLOSURE_ORDER });
                    }
                    index.insert(prod.clone(), elems.len());
                    queue.push_back(elems.len());
                    elems.push(prod);
                }
            }
        }
        let n = elems.len();
        let mut mult = alloc::vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                let prod = mul(&elems[a], &elems[b]);
                let idx = *index
                    .get(&prod)
                    .ok_or_else(|| Error::InvalidTable("generator closure is not closed under multiplication".into()))?;
                mult[a * n + b] = idx as u16;
            }
        }
        let generators = gens.iter().map(|s| index[s]).collect();
        let mut g = GroupTable { order: n, mult, inv: Vec::new(), generators, name: name.to_string() };
        g.validate_and_finish()?;
        Ok(g)
    }

    /// Builds the permutation group generated by `gens`; each generator is the
    /// image list of a permutation of `0..degree`.
    pub fn from_permutations(name: &str, gens: &[Vec<usize>]) -> Result<Self> {
        let degree = gens.iter().map(Vec::len).max().unwrap_or(0);
        if degree > MAX_PERMUTATION_DEGREE {
            return Err(Error::DegreeOverflow(degree));
        }
        let mut perms: Vec<Vec<u16>> = Vec::with_capacity(gens.len());
        for g in gens {
            let mut p: Vec<u16> = (0..degree as u16).collect();
            let mut seen = alloc::vec![false; degree];
            for (i, &img) in g.iter().enumerate() {
                if img >= degree || seen[img] {
                    return Err(Error::InvalidTable(format!("generator {g:?} is not a permutation")));
                }
                seen[img] = true;
                p[i] = img as u16;
            }
            perms.push(p);
        }
        let id: Vec<u16> = (0..degree as u16).collect();
        // (a*b)(i) = a(b(i)): b acts first
        Self::from_closure(name, id, &perms, |a, b| b.iter().map(|&i| a[i as usize]).collect())
    }

    fn validate_and_finish(&mut self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(Error::InvalidTable("index 0 is not the identity".into()));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::InvalidTable(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let mut inv = alloc::vec![usize::MAX; n];
        for a in 0..n {
            let mut found = None;
            for b in 0..n {
                if self.mul(a, b) == 0 {
                    if found.is_some() {
                        return Err(Error::InvalidTable(format!("element {a} has two right inverses")));
                    }
                    found = Some(b);
                }
            }
            let b = found.ok_or_else(|| Error::InvalidTable(format!("element {a} has no inverse")))?;
            if self.mul(b, a) != 0 {
                return Err(Error::InvalidTable(format!("element {a} has no two-sided inverse")));
            }
            inv[a] = b;
        }
        self.inv = inv;
        Ok(())
    }

    /// Smallest-index-first greedy generating set.
    fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span: u128 = 1;
        let mut members = alloc::vec![0usize];
        for g in 1..self.order {
            if self.order <= 128 && span >> g & 1 == 1 {
                continue;
            }
            if self.order > 128 && members.contains(&g) {
                continue;
            }
            gens.push(g);
            members = self.closure(&gens);
            if self.order <= 128 {
                span = members.iter().fold(0u128, |m, &x| m | 1u128 << x);
            }
            if members.len() == self.order {
                break;
            }
        }
        gens
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: &str) {
        self.name = name.to_string();
    }

    /// `g x g^-1`.
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, g: usize, mut e: u64) -> usize {
        let mut base = g;
        let mut acc = 0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order).map(|g| self.element_order(g)).fold(1, num_integer::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Sorted element list of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = alloc::vec![false; self.order];
        seen[0] = true;
        let mut out = alloc::vec![0usize];
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for &s in gens {
                let y = self.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    /// Writes every element as a word in the generators: returns, for each
    /// element `g`, a pair `(prefix, generator)` with `g = prefix * generator`
    /// (the identity maps to `None`).
    pub fn word_tree(&self) -> Vec<Option<(usize, usize)>> {
        let mut parent = alloc::vec![None; self.order];
        let mut seen = alloc::vec![false; self.order];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (gi, &s) in self.generators.iter().enumerate() {
                let y = self.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some((x, gi));
                    queue.push_back(y);
                }
            }
        }
        parent
    }

    /// Elements in breadth-first order of the generator word tree, identity first.
    pub fn bfs_order(&self) -> Vec<usize> {
        let mut seen = alloc::vec![false; self.order];
        seen[0] = true;
        let mut out = alloc::vec![0usize];
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for &s in &self.generators {
                let y = self.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out
    }

    /// The subgroup on `members` as a standalone table, with the embedding
    /// back into `self` (`embedding[i]` is the element of `self` labelled `i`).
    pub fn subgroup_table(&self, name: &str, members: &[usize]) -> Result<(GroupTable, Vec<usize>)> {
        let members: Vec<usize> = members.to_vec();
        if members.first() != Some(&0) {
            return Err(Error::NotSubgroup("member list must be sorted and contain the identity".into()));
        }
        let mut pos = alloc::vec![usize::MAX; self.order];
        for (i, &m) in members.iter().enumerate() {
            pos[m] = i;
        }
        let k = members.len();
        let mut table = alloc::vec![alloc::vec![0usize; k]; k];
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                let p = pos[self.mul(a, b)];
                if p == usize::MAX {
                    return Err(Error::NotSubgroup(format!("{members:?} is not closed")));
                }
                table[i][j] = p;
            }
        }
        let t = GroupTable::from_table(name, table)?;
        Ok((t, members))
    }

    /// The raw Cayley table as rows of element indices.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|a| (0..self.order).map(|b| self.mul(a, b)).collect()).collect()
    }
}
