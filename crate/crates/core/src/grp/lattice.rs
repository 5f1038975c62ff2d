use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::GroupTable;
use crate::error::{Error, Result};

/// Default bound on the group order accepted by [`SubgroupLattice::new`].
pub const DEFAULT_LATTICE_BOUND: usize = 48;

/// Subgroups are stored as bitmasks, which caps the group order here.
pub const MAX_LATTICE_ORDER: usize = 128;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    pub id: usize,
    pub members: Vec<usize>,
    pub mask: u128,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn contains(&self, g: usize) -> bool {
        self.mask >> g & 1 == 1
    }
}

/// Every subgroup of a group, with conjugation data.
///
/// Subgroup ids follow the order (size, sorted member list), so the trivial
/// subgroup has id 0 and the whole group has the last id. The representative
/// of a conjugacy class is its smallest id.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    subgroups: Vec<Subgroup>,
    by_mask: BTreeMap<u128, usize>,
    // conj[g * n_sub + h] = id of g H g^-1
    conj: Vec<u16>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    normalizer: Vec<usize>,
    group_order: usize,
}

fn mask_of(members: &[usize]) -> u128 {
    members.iter().fold(0u128, |m, &x| m | 1u128 << x)
}

fn members_of(mask: u128) -> Vec<usize> {
    (0..128).filter(|&i| mask >> i & 1 == 1).collect()
}

impl SubgroupLattice {
    pub fn new(g: &GroupTable) -> Result<Self> {
        Self::with_bound(g, DEFAULT_LATTICE_BOUND)
    }

    pub fn with_bound(g: &GroupTable, bound: usize) -> Result<Self> {
        let n = g.order();
        let bound = bound.min(MAX_LATTICE_ORDER);
        if n > bound {
            return Err(Error::OrderTooLarge { order: n, bound });
        }
        let close = |mask: u128| -> u128 { mask_of(&g.closure(&members_of(mask))) };
        let mut found: BTreeMap<u128, ()> = BTreeMap::new();
        let mut cyclic: Vec<u128> = Vec::new();
        for x in 0..n {
            let m = close(1u128 << x);
            if found.insert(m, ()).is_none() {
                cyclic.push(m);
            }
        }
        // every subgroup is a join of cyclic subgroups
        let mut frontier: Vec<u128> = found.keys().copied().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &a in &frontier {
                for &c in &cyclic {
                    if a | c == a {
                        continue;
                    }
                    let j = close(a | c);
                    if found.insert(j, ()).is_none() {
                        next.push(j);
                    }
                }
            }
            frontier = next;
        }
        let mut subs: Vec<Vec<usize>> = found.keys().map(|&m| members_of(m)).collect();
        subs.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let subgroups: Vec<Subgroup> = subs
            .into_iter()
            .enumerate()
            .map(|(id, members)| Subgroup { id, mask: mask_of(&members), members })
            .collect();
        let by_mask: BTreeMap<u128, usize> = subgroups.iter().map(|s| (s.mask, s.id)).collect();
        let ns = subgroups.len();
        let mut conj = alloc::vec![0u16; n * ns];
        for x in 0..n {
            for s in &subgroups {
                let m = s.members.iter().fold(0u128, |m, &h| m | 1u128 << g.conj(x, h));
                conj[x * ns + s.id] = by_mask[&m] as u16;
            }
        }
        let mut class_of = alloc::vec![usize::MAX; ns];
        let mut classes = Vec::new();
        for s in 0..ns {
            if class_of[s] != usize::MAX {
                continue;
            }
            let mut cls: Vec<usize> = (0..n).map(|x| conj[x * ns + s] as usize).collect();
            cls.sort_unstable();
            cls.dedup();
            for &c in &cls {
                class_of[c] = classes.len();
            }
            classes.push(cls);
        }
        let mut normalizer = Vec::with_capacity(ns);
        for s in 0..ns {
            let members: Vec<usize> = (0..n).filter(|&x| conj[x * ns + s] as usize == s).collect();
            normalizer.push(by_mask[&mask_of(&members)]);
        }
        Ok(SubgroupLattice { subgroups, by_mask, conj, class_of, classes, normalizer, group_order: n })
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn get(&self, id: usize) -> &Subgroup {
        &self.subgroups[id]
    }

    pub fn trivial(&self) -> usize {
        0
    }

    pub fn whole(&self) -> usize {
        self.subgroups.len() - 1
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    /// Id of the subgroup with exactly these members, if it is one.
    pub fn id_of_mask(&self, mask: u128) -> Option<usize> {
        self.by_mask.get(&mask).copied()
    }

    pub fn id_of(&self, members: &[usize]) -> Option<usize> {
        self.id_of_mask(mask_of(members))
    }

    /// Id of `x H x^-1`.
    #[inline]
    pub fn conj(&self, x: usize, h: usize) -> usize {
        self.conj[x * self.subgroups.len() + h] as usize
    }

    pub fn intersect(&self, a: usize, b: usize) -> usize {
        self.by_mask[&(self.subgroups[a].mask & self.subgroups[b].mask)]
    }

    /// `a ≤ b`.
    #[inline]
    pub fn is_sub(&self, a: usize, b: usize) -> bool {
        let (ma, mb) = (self.subgroups[a].mask, self.subgroups[b].mask);
        ma & mb == ma
    }

    pub fn class_of(&self, h: usize) -> usize {
        self.class_of[h]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// Smallest id in the conjugacy class of `h`.
    pub fn class_rep(&self, h: usize) -> usize {
        self.classes[self.class_of[h]][0]
    }

    pub fn class_reps(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    pub fn normalizer(&self, h: usize) -> usize {
        self.normalizer[h]
    }

    pub fn is_normal(&self, h: usize) -> bool {
        self.normalizer[h] == self.whole()
    }

    /// Smallest id among the subgroups of `within` that are conjugate to `k`
    /// under elements of `within`, together with a conjugating element.
    /// Requires `k ≤ within`.
    pub fn min_conjugate_within(&self, k: usize, within: usize) -> (usize, usize) {
        let mut best = (k, 0usize);
        for &w in &self.subgroups[within].members {
            let c = self.conj(w, k);
            if c < best.0 {
                best = (c, w);
            }
        }
        best
    }

    /// Subgroups of `h` that are maximal among its proper subgroups.
    pub fn maximal_subgroups(&self, h: usize) -> Vec<usize> {
        let proper: Vec<usize> = (0..self.len()).filter(|&k| k != h && self.is_sub(k, h)).collect();
        proper
            .iter()
            .copied()
            .filter(|&k| !proper.iter().any(|&m| m != k && self.is_sub(k, m)))
            .collect()
    }

    /// Conjugacy class representatives of `p`-subgroups (including the
    /// trivial one), in increasing id order.
    pub fn p_subgroup_classes(&self, p: usize) -> Vec<usize> {
        self.class_reps().into_iter().filter(|&h| is_power_of(self.subgroups[h].order(), p)).collect()
    }

    /// All `p`-subgroups, not only class representatives.
    pub fn p_subgroups(&self, p: usize) -> Vec<usize> {
        (0..self.len()).filter(|&h| is_power_of(self.subgroups[h].order(), p)).collect()
    }

    /// The class representative of the Sylow `p`-subgroups.
    pub fn sylow(&self, p: usize) -> usize {
        let mut full = self.group_order;
        while full % p == 0 {
            full /= p;
        }
        let order = self.group_order / full;
        (0..self.len()).find(|&h| self.subgroups[h].order() == order).expect("Sylow subgroup exists")
    }

    pub fn is_sylow(&self, h: usize, p: usize) -> bool {
        self.subgroups[h].order() == self.subgroups[self.sylow(p)].order()
    }

    /// A normal subgroup of order `|G|_{p'}`, if `G` is `p`-nilpotent.
    pub fn normal_p_complement(&self, p: usize) -> Option<usize> {
        let mut target = self.group_order;
        while target % p == 0 {
            target /= p;
        }
        (0..self.len()).find(|&h| self.subgroups[h].order() == target && self.is_normal(h))
    }
}

pub(crate) fn is_power_of(mut n: usize, p: usize) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Double cosets `H x L` of a fixed pair of subgroups, with canonical
/// representatives (the smallest element) and witnesses.
#[derive(Clone, Debug)]
pub struct DoubleCosets {
    reps: Vec<usize>,
    // for each element y: (index of its double coset, h ∈ H with h y ∈ rep L)
    of: Vec<(u16, u16)>,
    sizes: Vec<usize>,
}

impl DoubleCosets {
    pub fn new(g: &GroupTable, h: &Subgroup, l: &Subgroup) -> Self {
        let n = g.order();
        let mut of = alloc::vec![(u16::MAX, 0u16); n];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        for y in 0..n {
            if of[y].0 != u16::MAX {
                continue;
            }
            let idx = reps.len() as u16;
            reps.push(y);
            let mut size = 0;
            for &a in &h.members {
                let ay = g.mul(a, y);
                for &b in &l.members {
                    let z = g.mul(ay, b);
                    if of[z].0 == u16::MAX {
                        // a^-1 z b^-1 = y
                        of[z] = (idx, g.inv(a) as u16);
                        size += 1;
                    }
                }
            }
            sizes.push(size);
        }
        DoubleCosets { reps, of, sizes }
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// `(rep, h)` with `rep` the canonical representative of `H y L` and
    /// `h ∈ H` such that `h y L = rep L`.
    #[inline]
    pub fn canonical(&self, y: usize) -> (usize, usize) {
        let (i, h) = self.of[y];
        (self.reps[i as usize], h as usize)
    }

    pub fn index_of(&self, y: usize) -> usize {
        self.of[y].0 as usize
    }
}

/// Canonical representatives of the double cosets `H x L`.
pub fn double_cosets(g: &GroupTable, h: &Subgroup, l: &Subgroup) -> Vec<usize> {
    DoubleCosets::new(g, h, l).reps
}

/// The quotient `G/N` together with the projection `G → G/N`.
///
/// Cosets are numbered by their smallest element, so the trivial coset is 0.
pub fn quotient_group(g: &GroupTable, n: &Subgroup) -> Result<(GroupTable, Vec<usize>)> {
    for x in 0..g.order() {
        for &m in &n.members {
            if !n.contains(g.conj(x, m)) {
                return Err(Error::NotNormal);
            }
        }
    }
    let mut proj = alloc::vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in 0..g.order() {
        if proj[x] != usize::MAX {
            continue;
        }
        for &m in &n.members {
            proj[g.mul(x, m)] = reps.len();
        }
        reps.push(x);
    }
    let table: Vec<Vec<usize>> =
        reps.iter().map(|&a| reps.iter().map(|&b| proj[g.mul(a, b)]).collect()).collect();
    let name = alloc::format!("{}/N", g.name());
    let q = GroupTable::from_table(&name, table)?;
    Ok((q, proj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::builtin;

    #[test]
    fn small_lattices() {
        let c2 = builtin("C2").unwrap();
        let l = SubgroupLattice::new(&c2).unwrap();
        assert_eq!((l.len(), l.classes().len()), (2, 2));
        let s3 = builtin("S3").unwrap();
        let l = SubgroupLattice::new(&s3).unwrap();
        assert_eq!((l.len(), l.classes().len()), (6, 4));
        let orders: Vec<usize> = l.subgroups().iter().map(Subgroup::order).collect();
        assert_eq!(orders, [1, 2, 2, 2, 3, 6]);
        let sl = builtin("SL(2,3)").unwrap();
        let l = SubgroupLattice::new(&sl).unwrap();
        assert_eq!((l.len(), l.classes().len()), (15, 7));
    }

    #[test]
    fn order_bound_is_enforced() {
        let s5 = builtin("S5").unwrap();
        assert_eq!(
            SubgroupLattice::new(&s5).unwrap_err(),
            Error::OrderTooLarge { order: 120, bound: DEFAULT_LATTICE_BOUND }
        );
    }

    #[test]
    fn double_coset_examples() {
        let s3 = builtin("S3").unwrap();
        let l = SubgroupLattice::new(&s3).unwrap();
        let c2 = l.get(1);
        let c3 = l.get(4);
        assert_eq!(double_cosets(&s3, c2, c2).len(), 2);
        assert_eq!(double_cosets(&s3, c2, c3).len(), 1);
        let c2g = builtin("C2").unwrap();
        let lc = SubgroupLattice::new(&c2g).unwrap();
        assert_eq!(double_cosets(&c2g, lc.get(1), lc.get(1)), [0]);
    }

    #[test]
    fn quotient_examples() {
        let s3 = builtin("S3").unwrap();
        let l = SubgroupLattice::new(&s3).unwrap();
        let (q, proj) = quotient_group(&s3, l.get(4)).unwrap();
        assert_eq!(q.order(), 2);
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(proj[s3.mul(a, b)], q.mul(proj[a], proj[b]));
            }
        }
        assert_eq!(quotient_group(&s3, l.get(1)).unwrap_err(), Error::NotNormal);
        let sl = builtin("SL(2,3)").unwrap();
        let l = SubgroupLattice::new(&sl).unwrap();
        let q8 = (0..l.len()).find(|&h| l.get(h).order() == 8).unwrap();
        assert_eq!(quotient_group(&sl, l.get(q8)).unwrap().0.order(), 3);
    }

    #[test]
    fn p_subgroup_examples() {
        let s3 = builtin("S3").unwrap();
        let l = SubgroupLattice::new(&s3).unwrap();
        assert_eq!(l.p_subgroup_classes(2), [0, 1]);
        let sl = builtin("SL(2,3)").unwrap();
        let l = SubgroupLattice::new(&sl).unwrap();
        let reps = l.p_subgroup_classes(3);
        assert_eq!(reps.len(), 2);
        assert_eq!(l.get(reps[1]).order(), 3);
        assert!(l.is_sylow(reps[1], 3));
    }
}
