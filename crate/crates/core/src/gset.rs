//! Finite `G`-sets, pullbacks, and the span calculus on `Ω_G`.
//!
//! A transitive span `G/H ← G/K → G/L` is recorded by a normalized quadruple
//! `(H, K, x, L)`: the left leg is `gK ↦ gH`, the right leg is `gK ↦ gxL`,
//! `x` is the smallest element of its double coset `HxL` and `K` is the
//! smallest subgroup id in its `(H ∩ ˣL)`-conjugacy class. Two transitive
//! spans are isomorphic exactly when their quadruples agree.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::grp::{DoubleCosets, GroupTable, SubgroupLattice};

/// Normalized label of a transitive span.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Quad {
    pub h: u16,
    pub k: u16,
    pub x: u16,
    pub l: u16,
}

impl Quad {
    pub fn new(h: usize, k: usize, x: usize, l: usize) -> Self {
        Quad { h: h as u16, k: k as u16, x: x as u16, l: l as u16 }
    }
}

impl core::fmt::Display for Quad {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "({}, {}, {}, {})", self.h, self.k, self.x, self.l)
    }
}

/// A finite `G`-set given by its full action table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GSet {
    points: usize,
    // action[g * points + x]
    action: Vec<u32>,
}

impl GSet {
    /// Builds a `G`-set from `act(g, x)`, checking the action axioms.
    pub fn new(g: &GroupTable, points: usize, act: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let mut action = Vec::with_capacity(g.order() * points);
        for x in 0..g.order() {
            for p in 0..points {
                let y = act(x, p);
                if y >= points {
                    return Err(Error::InvalidArgument(format!("action sends {p} to {y} outside 0..{points}")));
                }
                action.push(y as u32);
            }
        }
        let s = GSet { points, action };
        s.check_axioms(g)?;
        Ok(s)
    }

    fn check_axioms(&self, g: &GroupTable) -> Result<()> {
        for p in 0..self.points {
            if self.act(0, p) != p {
                return Err(Error::InvalidArgument("identity does not act trivially".into()));
            }
        }
        for a in 0..g.order() {
            for b in 0..g.order() {
                let ab = g.mul(a, b);
                for p in 0..self.points {
                    if self.act(a, self.act(b, p)) != self.act(ab, p) {
                        return Err(Error::InvalidArgument(format!("action is not compatible at ({a}, {b}, {p})")));
                    }
                }
            }
        }
        Ok(())
    }

    /// The left coset space `G/K`, cosets numbered by increasing smallest element.
    pub fn cosets(g: &GroupTable, lat: &SubgroupLattice, k: usize) -> Self {
        let cs = CosetSpace::new(g, lat, k);
        let points = cs.reps.len();
        let mut action = Vec::with_capacity(g.order() * points);
        for x in 0..g.order() {
            for &r in &cs.reps {
                action.push(cs.of[g.mul(x, r)] as u32);
            }
        }
        GSet { points, action }
    }

    pub fn len(&self) -> usize {
        self.points
    }

    pub fn is_empty(&self) -> bool {
        self.points == 0
    }

    #[inline]
    pub fn act(&self, g: usize, p: usize) -> usize {
        self.action[g * self.points + p] as usize
    }

    fn group_order(&self) -> usize {
        if self.points == 0 {
            0
        } else {
            self.action.len() / self.points
        }
    }

    /// Orbits as `(sorted points, stabilizer of the smallest point)`; the
    /// stabilizer is given by its sorted member list.
    pub fn orbits(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let n = self.group_order();
        let mut seen = alloc::vec![false; self.points];
        let mut out = Vec::new();
        for p in 0..self.points {
            if seen[p] {
                continue;
            }
            let mut orbit = Vec::new();
            for g in 0..n {
                let q = self.act(g, p);
                if !seen[q] {
                    seen[q] = true;
                    orbit.push(q);
                }
            }
            orbit.sort_unstable();
            let stab = (0..n).filter(|&g| self.act(g, p) == p).collect();
            out.push((orbit, stab));
        }
        out
    }

    /// The diagonal action on `self × other`; point `(a, b)` is `a * |other| + b`.
    pub fn product(&self, other: &GSet) -> GSet {
        let n = self.group_order();
        let points = self.points * other.points;
        let mut action = Vec::with_capacity(n * points);
        for g in 0..n {
            for a in 0..self.points {
                for b in 0..other.points {
                    action.push((self.act(g, a) * other.points + other.act(g, b)) as u32);
                }
            }
        }
        GSet { points, action }
    }

    /// Points fixed by every element of `members`.
    pub fn fixed_points(&self, members: &[usize]) -> Vec<usize> {
        (0..self.points).filter(|&p| members.iter().all(|&g| self.act(g, p) == p)).collect()
    }
}

/// An equivariant map between `G`-sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GMap {
    pub map: Vec<usize>,
}

impl GMap {
    pub fn new(source: &GSet, target: &GSet, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.len() || map.iter().any(|&y| y >= target.len()) {
            return Err(Error::InvalidArgument("map does not fit its source and target".into()));
        }
        for g in 0..source.group_order() {
            for x in 0..source.len() {
                if map[source.act(g, x)] != target.act(g, map[x]) {
                    return Err(Error::InvalidArgument(format!("map is not equivariant at ({g}, {x})")));
                }
            }
        }
        Ok(GMap { map })
    }
}

/// The pullback `{(y, z) : f(y) = g(z)}` of two maps with a common target,
/// with its two projections.
pub fn pullback(y: &GSet, f: &GMap, z: &GSet, g: &GMap) -> (GSet, Vec<usize>, Vec<usize>) {
    let mut pairs = Vec::new();
    let mut index = BTreeMap::new();
    for a in 0..y.len() {
        for b in 0..z.len() {
            if f.map[a] == g.map[b] {
                index.insert((a, b), pairs.len());
                pairs.push((a, b));
            }
        }
    }
    let n = y.group_order().max(z.group_order());
    let mut action = Vec::with_capacity(n * pairs.len());
    for x in 0..n {
        for &(a, b) in &pairs {
            action.push(index[&(y.act(x, a), z.act(x, b))] as u32);
        }
    }
    let p = GSet { points: pairs.len(), action };
    let (p1, p2) = pairs.into_iter().unzip();
    (p, p1, p2)
}

/// Left cosets `gK`, each numbered by its position among the cosets sorted by
/// smallest element.
#[derive(Clone, Debug)]
pub struct CosetSpace {
    pub reps: Vec<usize>,
    pub of: Vec<usize>,
}

impl CosetSpace {
    pub fn new(g: &GroupTable, lat: &SubgroupLattice, k: usize) -> Self {
        let mut of = alloc::vec![usize::MAX; g.order()];
        let mut reps = Vec::new();
        for x in 0..g.order() {
            if of[x] != usize::MAX {
                continue;
            }
            for &m in &lat.get(k).members {
                of[g.mul(x, m)] = reps.len();
            }
            reps.push(x);
        }
        CosetSpace { reps, of }
    }
}

/// `Ω_G`: one transitive component `G/L` for every subgroup `L`.
#[derive(Clone, Debug)]
pub struct Omega {
    pub cosets: Vec<CosetSpace>,
    pub offsets: Vec<usize>,
    points: usize,
}

impl Omega {
    pub fn new(g: &GroupTable, lat: &SubgroupLattice) -> Self {
        let cosets: Vec<CosetSpace> = (0..lat.len()).map(|l| CosetSpace::new(g, lat, l)).collect();
        let mut offsets = Vec::with_capacity(cosets.len());
        let mut points = 0;
        for c in &cosets {
            offsets.push(points);
            points += c.reps.len();
        }
        Omega { cosets, offsets, points }
    }

    pub fn len(&self) -> usize {
        self.points
    }

    pub fn is_empty(&self) -> bool {
        self.points == 0
    }

    /// The point `gL`.
    pub fn point(&self, l: usize, g: usize) -> usize {
        self.offsets[l] + self.cosets[l].of[g]
    }

    /// `(L, smallest element of the coset)` for a point.
    pub fn locate(&self, p: usize) -> (usize, usize) {
        let l = self.offsets.partition_point(|&o| o <= p) - 1;
        (l, self.cosets[l].reps[p - self.offsets[l]])
    }

    pub fn gset(&self, g: &GroupTable) -> GSet {
        let mut action = Vec::with_capacity(g.order() * self.points);
        for x in 0..g.order() {
            for p in 0..self.points {
                let (l, r) = self.locate(p);
                action.push(self.point(l, g.mul(x, r)) as u32);
            }
        }
        GSet { points: self.points, action }
    }
}

/// A `G`-set with two maps to `Ω_G` (left and right legs).
#[derive(Clone, Debug)]
pub struct Span {
    pub apex: GSet,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

/// A formal integer combination of transitive spans.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BurnsideElt {
    pub terms: BTreeMap<Quad, i64>,
}

impl BurnsideElt {
    pub fn single(q: Quad) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(q, 1);
        BurnsideElt { terms }
    }

    pub fn add_term(&mut self, q: Quad, c: i64) {
        let e = self.terms.entry(q).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&q);
        }
    }

    pub fn add(&mut self, other: &BurnsideElt) {
        for (&q, &c) in &other.terms {
            self.add_term(q, c);
        }
    }

    /// Sorted `(H, K, x, L, coefficient)` tuples.
    pub fn tuples(&self) -> Vec<(usize, usize, usize, usize, i64)> {
        self.terms.iter().map(|(q, &c)| (q.h as usize, q.k as usize, q.x as usize, q.l as usize, c)).collect()
    }
}

/// The span calculus for a fixed group.
pub struct SpanCalculus<'a> {
    pub group: &'a GroupTable,
    pub lattice: &'a SubgroupLattice,
    pub omega: Omega,
    // double cosets for each pair (H, L), indexed h * n_sub + l
    dcs: Vec<DoubleCosets>,
}

impl<'a> SpanCalculus<'a> {
    pub fn new(group: &'a GroupTable, lattice: &'a SubgroupLattice) -> Self {
        let ns = lattice.len();
        let mut dcs = Vec::with_capacity(ns * ns);
        for h in 0..ns {
            for l in 0..ns {
                dcs.push(DoubleCosets::new(group, lattice.get(h), lattice.get(l)));
            }
        }
        SpanCalculus { group, lattice, omega: Omega::new(group, lattice), dcs }
    }

    pub fn double_cosets(&self, h: usize, l: usize) -> &DoubleCosets {
        &self.dcs[h * self.lattice.len() + l]
    }

    /// Normalized quadruple of the transitive span with base point stabilizer
    /// `k` (a subgroup id), base point over `g1 H` on the left and over `g2 L`
    /// on the right.
    pub fn normalize(&self, h: usize, k: usize, g1: usize, g2: usize, l: usize) -> Quad {
        let g = self.group;
        let lat = self.lattice;
        let g1i = g.inv(g1);
        let y = g.mul(g1i, g2);
        let k1 = lat.conj(g1i, k);
        let (x, w) = self.double_cosets(h, l).canonical(y);
        let k2 = lat.conj(w, k1);
        let within = lat.intersect(h, lat.conj(x, l));
        let (kmin, _) = lat.min_conjugate_within(k2, within);
        Quad::new(h, kmin, x, l)
    }

    /// Label of a span with transitive apex.
    pub fn canonical_label(&self, s: &Span) -> Result<Quad> {
        let orbits = s.apex.orbits();
        if orbits.len() != 1 {
            return Err(Error::Canonicalization(format!("apex has {} orbits", orbits.len())));
        }
        let (orbit, stab) = &orbits[0];
        self.orbit_label(s, orbit[0], stab)
    }

    fn orbit_label(&self, s: &Span, base: usize, stab: &[usize]) -> Result<Quad> {
        let k = self
            .lattice
            .id_of(stab)
            .ok_or_else(|| Error::Canonicalization("stabilizer is not a subgroup".into()))?;
        let (h, g1) = self.omega.locate(s.left[base]);
        let (l, g2) = self.omega.locate(s.right[base]);
        Ok(self.normalize(h, k, g1, g2, l))
    }

    /// The transitive span `G/H ← G/K → G/L` with legs `gK ↦ gH`, `gK ↦ gxL`.
    pub fn span_of(&self, q: Quad) -> Span {
        let g = self.group;
        let (h, k, x, l) = (q.h as usize, q.k as usize, q.x as usize, q.l as usize);
        let apex = GSet::cosets(g, self.lattice, k);
        let reps = &self.omega.cosets[k].reps;
        let left = reps.iter().map(|&r| self.omega.point(h, r)).collect();
        let right = reps.iter().map(|&r| self.omega.point(l, g.mul(r, x))).collect();
        Span { apex, left, right }
    }

    /// Splits a span into orbits and labels each one.
    pub fn decompose(&self, s: &Span) -> Result<BurnsideElt> {
        let mut out = BurnsideElt::default();
        for (orbit, stab) in s.apex.orbits() {
            out.add_term(self.orbit_label(s, orbit[0], &stab)?, 1);
        }
        Ok(out)
    }

    /// Product of two spans: the pullback of `s.right` against `t.left`, with
    /// outer legs `s.left` and `t.right`.
    pub fn compose_spans(&self, s: &Span, t: &Span) -> Result<BurnsideElt> {
        let (p, p1, p2) = pullback(&s.apex, &GMap { map: s.right.clone() }, &t.apex, &GMap { map: t.left.clone() });
        let left = p1.iter().map(|&a| s.left[a]).collect();
        let right = p2.iter().map(|&b| t.right[b]).collect();
        self.decompose(&Span { apex: p, left, right })
    }

    /// Bilinear extension of [`Self::compose_spans`] to formal sums.
    pub fn compose(&self, a: &BurnsideElt, b: &BurnsideElt) -> Result<BurnsideElt> {
        let mut out = BurnsideElt::default();
        for (&qa, &ca) in &a.terms {
            for (&qb, &cb) in &b.terms {
                let prod = self.compose_spans(&self.span_of(qa), &self.span_of(qb))?;
                for (q, c) in prod.terms {
                    out.add_term(q, c * ca * cb);
                }
            }
        }
        Ok(out)
    }

    /// `Σ_H (H, H, 1, H)`, the diagonal span on `Ω_G`.
    pub fn identity_span(&self) -> BurnsideElt {
        let mut out = BurnsideElt::default();
        for h in 0..self.lattice.len() {
            out.add_term(Quad::new(h, h, 0, h), 1);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::builtin;

    fn setup(name: &str) -> (GroupTable, SubgroupLattice) {
        let g = builtin(name).unwrap();
        let l = SubgroupLattice::new(&g).unwrap();
        (g, l)
    }

    #[test]
    fn orbit_examples() {
        let (g, lat) = setup("S3");
        let regular = GSet::new(&g, 6, |x, p| g.mul(x, p)).unwrap();
        let orbits = regular.orbits();
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].1, [0]);
        let c2 = GSet::cosets(&g, &lat, 1);
        assert_eq!(c2.product(&c2).orbits().len(), 2);
        let (c2g, _) = setup("C2");
        let trivial = GSet::new(&c2g, 3, |_, p| p).unwrap();
        assert_eq!(trivial.orbits().len(), 3);
    }

    #[test]
    fn bad_action_is_rejected() {
        let (g, _) = setup("S3");
        assert!(GSet::new(&g, 2, |x, p| if x == 1 { 1 - p } else { p }).is_err());
    }

    #[test]
    fn pullback_over_a_point() {
        let (g, lat) = setup("S3");
        let x = GSet::cosets(&g, &lat, 1);
        let pt = GSet::cosets(&g, &lat, lat.whole());
        let to_pt = GMap::new(&x, &pt, alloc::vec![0; 3]).unwrap();
        let (p, _, _) = pullback(&x, &to_pt, &x, &to_pt);
        let mut sizes: Vec<usize> = p.orbits().iter().map(|o| o.0.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, [3, 6]);
        assert_eq!(p.len(), 9);
        // pullback of identities is the diagonal
        let id = GMap::new(&x, &x, alloc::vec![0, 1, 2]).unwrap();
        assert_eq!(pullback(&x, &id, &x, &id).0.len(), 3);
    }

    #[test]
    fn pullback_of_index_two_projection() {
        let (g, lat) = setup("S3");
        let c3 = GSet::cosets(&g, &lat, 4);
        let pt = GSet::cosets(&g, &lat, lat.whole());
        let to_pt = GMap::new(&c3, &pt, alloc::vec![0; 2]).unwrap();
        let (p, _, _) = pullback(&c3, &to_pt, &c3, &to_pt);
        let sizes: Vec<usize> = p.orbits().iter().map(|o| o.0.len()).collect();
        assert_eq!(sizes, [2, 2]);
    }

    #[test]
    fn generator_products_in_c2() {
        let (g, lat) = setup("C2");
        let sc = SpanCalculus::new(&g, &lat);
        let t = Quad::new(1, 0, 0, 0);
        let r = Quad::new(0, 0, 0, 1);
        // t then r composes to a single span
        let tr = sc.compose_spans(&sc.span_of(t), &sc.span_of(r)).unwrap();
        assert_eq!(tr, BurnsideElt::single(Quad::new(1, 0, 0, 1)));
        // r t = t^1_1 + t^1_1 x
        let rt = sc.compose_spans(&sc.span_of(r), &sc.span_of(t)).unwrap();
        let mut expect = BurnsideElt::single(Quad::new(0, 0, 0, 0));
        expect.add_term(Quad::new(0, 0, 1, 0), 1);
        assert_eq!(rt, expect);
    }

    #[test]
    fn labels_of_standard_spans() {
        let (g, lat) = setup("C2");
        let sc = SpanCalculus::new(&g, &lat);
        let whole = lat.whole();
        let diag = sc.span_of(Quad::new(whole, whole, 0, whole));
        assert_eq!(sc.canonical_label(&diag).unwrap(), Quad::new(1, 1, 0, 1));
        // transfer: projection on the left, identity on the right
        let apex = GSet::cosets(&g, &lat, 0);
        let s = Span {
            apex,
            left: (0..2).map(|p| sc.omega.point(1, p)).collect(),
            right: (0..2).map(|p| sc.omega.point(0, p)).collect(),
        };
        assert_eq!(sc.canonical_label(&s).unwrap(), Quad::new(1, 0, 0, 0));
    }

    #[test]
    fn conjugate_subgroup_span_label() {
        let (g, lat) = setup("S3");
        let sc = SpanCalculus::new(&g, &lat);
        // G/1 → G/C2 and G/1 → G/C2' for distinct conjugates
        let (a, b) = (1, 2);
        let apex = GSet::cosets(&g, &lat, 0);
        let s = Span {
            apex,
            left: (0..6).map(|p| sc.omega.point(a, p)).collect(),
            right: (0..6).map(|p| sc.omega.point(b, p)).collect(),
        };
        let q = sc.canonical_label(&s).unwrap();
        assert_eq!((q.h, q.k, q.l), (1, 0, 2));
        assert_eq!(q.x as usize, sc.double_cosets(a, b).canonical(0).0);
        // relabelling the apex by right multiplication does not change the label
        for r in 0..6 {
            let moved = Span {
                apex: s.apex.clone(),
                left: (0..6).map(|p| s.left[g.mul(p, r)]).collect(),
                right: (0..6).map(|p| s.right[g.mul(p, r)]).collect(),
            };
            assert_eq!(sc.canonical_label(&moved).unwrap(), q);
        }
    }

    #[test]
    fn identity_span_is_a_unit() {
        for name in ["C1", "C2", "S3"] {
            let (g, lat) = setup(name);
            let sc = SpanCalculus::new(&g, &lat);
            let one = sc.identity_span();
            assert_eq!(one.terms.len(), lat.len());
            let probe = BurnsideElt::single(Quad::new(lat.whole(), 0, 0, 0));
            assert_eq!(sc.compose(&one, &probe).unwrap(), probe);
            assert_eq!(sc.compose(&probe, &one).unwrap(), probe);
        }
    }
}
