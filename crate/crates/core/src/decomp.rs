//! Blocks of the p-local Mackey algebra matched with blocks of the group
//! algebra, the decomposition matrix of p-permutation modules, and the
//! structural checks built on both.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::chartab::{character_of_lift, CharacterTable};
use crate::error::{Error, Result};
use crate::exalg::{
    block_idempotents, cartan_matrix, group_algebra, permutation_match, primitive_idempotents_with_blocks, Algebra,
    CartanMatrix, PrimitiveDecomposition,
};
use crate::field::{Field, Gf};
use crate::grp::{Group, GroupTable};
use crate::mackey::MackeyAlgebra;
use crate::modrep::{brauer_quotient_module, local_quotient, p_permutation_indecomposables_with_blocks, PPermModule};

/// Degree `m` of the smallest `GF(p^m)` containing the `e`-th roots of unity,
/// `e` the p'-part of the exponent of `G`.
pub fn splitting_degree(g: &GroupTable, p: u64) -> u32 {
    let mut e = g.exponent() as u64;
    while e % p == 0 {
        e /= p;
    }
    if e == 1 {
        return 1;
    }
    let mut m = 1;
    let mut x = p % e;
    while x != 1 {
        x = x * p % e;
        m += 1;
    }
    m
}

/// A block of `μ¹` together with the group-algebra block its `t^1_1`
/// compression equals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPair {
    pub mu_block: usize,
    pub group_block: usize,
    pub mu_dim: usize,
    pub group_dim: usize,
    pub mu_simples: usize,
    pub group_simples: usize,
    /// Coefficients `b(x)` of the compression, indexed by group element.
    pub compression: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowLabel {
    pub dim: usize,
    /// Order of a vertex.
    pub vertex_order: usize,
    pub vertex: usize,
    pub group_block: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnLabel {
    /// Subgroup id of the p-subgroup class representative `L`.
    pub subgroup: usize,
    pub subgroup_order: usize,
    /// Index of `χ` in the character table of `N_G(L)/L`.
    pub character: usize,
    pub degree: i64,
}

/// Decomposition numbers `d_{χ,W}`: rows are the indecomposable
/// p-permutation modules, columns pairs `(L, χ)` with `χ ∈ Irr(N_G(L)/L)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionMatrix {
    pub rows: Vec<RowLabel>,
    pub columns: Vec<ColumnLabel>,
    pub entries: Vec<Vec<i64>>,
}

impl DecompositionMatrix {
    /// Rows lying in group block `b`.
    pub fn rows_in_block(&self, b: usize) -> Vec<usize> {
        (0..self.rows.len()).filter(|&r| self.rows[r].group_block == b).collect()
    }

    /// Columns with a nonzero entry in one of `rows`.
    pub fn columns_meeting(&self, rows: &[usize]) -> Vec<usize> {
        (0..self.columns.len()).filter(|&c| rows.iter().any(|&r| self.entries[r][c] != 0)).collect()
    }

    /// Group block of each column; fails if a column meets two blocks or none.
    pub fn column_blocks(&self) -> Result<Vec<usize>> {
        (0..self.columns.len())
            .map(|c| {
                let mut bs: Vec<usize> =
                    (0..self.rows.len()).filter(|&r| self.entries[r][c] != 0).map(|r| self.rows[r].group_block).collect();
                bs.dedup();
                match bs[..] {
                    [b] => Ok(b),
                    _ => Err(Error::Certification(format!("column {c} meets {} blocks", bs.len()))),
                }
            })
            .collect()
    }

    /// `D Dᵀ` over the given rows.
    pub fn gram(&self, rows: &[usize]) -> Vec<Vec<usize>> {
        rows.iter()
            .map(|&i| {
                rows.iter()
                    .map(|&j| (0..self.columns.len()).map(|c| self.entries[i][c] * self.entries[j][c]).sum::<i64>() as usize)
                    .collect()
            })
            .collect()
    }
}

/// Everything computed for one group and prime over one field.
pub struct Analysis {
    pub group: Arc<Group>,
    pub p: u64,
    pub field: Gf,
    pub mu: Arc<MackeyAlgebra>,
    pub alg: Algebra<Gf>,
    pub mu_pd: PrimitiveDecomposition<u32>,
    pub kg: Algebra<Gf>,
    pub kg_pd: PrimitiveDecomposition<u32>,
    pub pairs: Vec<BlockPair>,
    pub pperm: Vec<PPermModule<Gf>>,
}

/// Largest field degree tried when escalating after `NeedsExtension`.
const MAX_DEGREE: u32 = 16;

impl Analysis {
    /// Builds `μ¹` (p-local) and `F[G]` over `GF(p^m)`, with `m` from
    /// [`splitting_degree`] unless given, and escalates the degree whenever a
    /// stage reports a non-split residue field.
    pub fn new(group: Arc<Group>, p: u64, field_degree: Option<u32>) -> Result<Self> {
        let mu = Arc::new(MackeyAlgebra::build(group.clone(), Some(p as usize))?);
        Self::with_algebra(mu, p, field_degree)
    }

    /// As [`Analysis::new`] with a prebuilt p-local Mackey algebra.
    pub fn with_algebra(mu: Arc<MackeyAlgebra>, p: u64, field_degree: Option<u32>) -> Result<Self> {
        if mu.p_local() != Some(p as usize) {
            return Err(Error::InvalidArgument(format!("the Mackey algebra is not {p}-local")));
        }
        let mut m = field_degree.unwrap_or_else(|| splitting_degree(&mu.group().table, p));
        loop {
            let field = Gf::new(p as u32, m)?;
            match Self::over_field(mu.clone(), p, field) {
                Err(Error::NeedsExtension(d)) if field_degree.is_none() && m * d.max(2) <= MAX_DEGREE => m *= d.max(2),
                r => return r,
            }
        }
    }

    fn over_field(mu: Arc<MackeyAlgebra>, p: u64, field: Gf) -> Result<Self> {
        let group = mu.group_arc();
        let alg = mu.over(&field)?;
        let mu_pd = primitive_idempotents_with_blocks(&alg, block_idempotents(&alg)?)?;
        let kg = group_algebra(&field, &group.table);
        let kg_pd = primitive_idempotents_with_blocks(&kg, block_idempotents(&kg)?)?;
        let pairs = match_blocks(&mu, &alg, &mu_pd, &kg, &kg_pd)?;
        let pperm = p_permutation_indecomposables_with_blocks(&field, group.clone(), p, &kg_pd.blocks)?;
        Ok(Analysis { group, p, field, mu, alg, mu_pd, kg, kg_pd, pairs, pperm })
    }

    pub fn mu_cartan(&self, mu_block: usize) -> CartanMatrix {
        cartan_matrix(&self.alg, &self.mu_pd, Some(mu_block))
    }

    pub fn group_cartan(&self, group_block: usize) -> CartanMatrix {
        cartan_matrix(&self.kg, &self.kg_pd, Some(group_block))
    }

    /// Pair whose group block acts as the identity on the trivial module.
    pub fn principal_pair(&self) -> Result<&BlockPair> {
        let one = self.field.one();
        self.pairs
            .iter()
            .find(|bp| {
                let b = &self.kg_pd.blocks[bp.group_block];
                b.iter().fold(self.field.zero(), |s, x| self.field.add(&s, x)) == one
            })
            .ok_or_else(|| Error::Certification("no principal block".into()))
    }

    pub fn decomposition_matrix(&self) -> Result<DecompositionMatrix> {
        decomposition_matrix(&self.group, self.p, &self.pperm)
    }
}

/// Matches each block of `μ¹` to the group-algebra block equal to its
/// compression by `t^1_1`, read through `t^1_1 x ↦ x`; certifies that the
/// matching is a bijection.
pub fn match_blocks(
    mu: &MackeyAlgebra,
    alg: &Algebra<Gf>,
    mu_pd: &PrimitiveDecomposition<u32>,
    kg: &Algebra<Gf>,
    kg_pd: &PrimitiveDecomposition<u32>,
) -> Result<Vec<BlockPair>> {
    let corner = mu.corner_group_algebra()?;
    if mu_pd.blocks.len() != kg_pd.blocks.len() {
        return Err(Error::Certification(format!(
            "{} Mackey blocks but {} group blocks",
            mu_pd.blocks.len(),
            kg_pd.blocks.len()
        )));
    }
    let mut used = alloc::vec![false; kg_pd.blocks.len()];
    let mut pairs = Vec::with_capacity(mu_pd.blocks.len());
    for (mb, e) in mu_pd.blocks.iter().enumerate() {
        let compression: Vec<u32> = corner.iter().map(|&i| e[i]).collect();
        let hits: Vec<usize> = (0..kg_pd.blocks.len()).filter(|&b| kg_pd.blocks[b] == compression).collect();
        let gb = match hits[..] {
            [b] if !used[b] => b,
            _ => return Err(Error::Certification(format!("Mackey block {mb} has no unique matching group block"))),
        };
        used[gb] = true;
        pairs.push(BlockPair {
            mu_block: mb,
            group_block: gb,
            mu_dim: alg.corner(e)?.0.dim(),
            group_dim: kg.corner(&kg_pd.blocks[gb])?.0.dim(),
            mu_simples: mu_pd.classes_in_block(mb).len(),
            group_simples: kg_pd.classes_in_block(gb).len(),
            compression,
        });
    }
    Ok(pairs)
}

/// Entries `⟨lift of W[L] as N_G(L)/L-module, χ⟩`, certified to be
/// non-negative integers. Columns run over p-subgroup class representatives
/// `L` in lattice order, then characters in table order.
pub fn decomposition_matrix(group: &Arc<Group>, p: u64, pperm: &[PPermModule<Gf>]) -> Result<DecompositionMatrix> {
    let lat = &group.lattice;
    let rows = pperm
        .iter()
        .map(|w| RowLabel {
            dim: w.module.dim(),
            vertex_order: lat.get(w.vertex).order(),
            vertex: w.vertex,
            group_block: w.block,
        })
        .collect();
    let mut columns = Vec::new();
    let mut entries: Vec<Vec<i64>> = alloc::vec![Vec::new(); pperm.len()];
    for l in lat.p_subgroup_classes(p as usize) {
        let local = local_quotient(group, l)?;
        let table = CharacterTable::new(&local.group.table)?;
        for i in 0..table.len() {
            columns.push(ColumnLabel { subgroup: l, subgroup_order: lat.get(l).order(), character: i, degree: table.degree(i) });
        }
        for (w, row) in pperm.iter().zip(&mut entries) {
            let wl = brauer_quotient_module(&w.module, l, p, &local)?;
            if wl.dim() == 0 {
                row.extend(core::iter::repeat(0).take(table.len()));
                continue;
            }
            let psi = character_of_lift(&wl, &table)?;
            row.extend(table.decompose(&psi)?);
        }
    }
    if let Some(r) = entries.iter().position(|row| row.iter().all(|&x| x == 0)) {
        return Err(Error::Certification(format!("decomposition row {r} vanishes")));
    }
    Ok(DecompositionMatrix { rows, columns, entries })
}

/// Agreement of `D Dᵀ` with the Cartan matrix of one Mackey block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReciprocityReport {
    pub mu_block: usize,
    pub group_block: usize,
    pub gram: Vec<Vec<usize>>,
    pub cartan: Vec<Vec<usize>>,
    /// `σ` with `cartan[σi][σj] = gram[i][j]`.
    pub matching: Option<Vec<usize>>,
}

impl ReciprocityReport {
    pub fn holds(&self) -> bool {
        self.matching.is_some()
    }
}

/// Per block, compares `D Dᵀ` over the rows of the matched group block with
/// the algebra-side Cartan matrix, up to simultaneous permutation.
pub fn verify_cartan_reciprocity(a: &Analysis, d: &DecompositionMatrix) -> Vec<ReciprocityReport> {
    a.pairs
        .iter()
        .map(|bp| {
            let rows = d.rows_in_block(bp.group_block);
            let gram = d.gram(&rows);
            let cartan = a.mu_cartan(bp.mu_block).entries;
            let matching = permutation_match(&cartan, &gram);
            ReciprocityReport { mu_block: bp.mu_block, group_block: bp.group_block, gram, cartan, matching }
        })
        .collect()
}

/// Outcome of the defect-one checks on one block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefectOneReport {
    pub mu_block: usize,
    pub group_block: usize,
    /// Number of simple modules of the group block.
    pub e: usize,
    pub mu_simples: usize,
    /// Columns of the block with `L` of order `p`.
    pub local_columns: usize,
    /// Submatrix of the block with projective rows first and `L = 1` columns first.
    pub submatrix: Vec<Vec<i64>>,
    pub doubled: bool,
    pub shape: bool,
    /// `D₀ D₀ᵀ` equals the Cartan matrix of the group block.
    pub group_reciprocity: bool,
    pub symmetric: bool,
}

impl DefectOneReport {
    pub fn holds(&self) -> bool {
        self.doubled && self.shape && self.group_reciprocity && self.symmetric
    }
}

/// Checks the structure predicted for a block with cyclic defect group of
/// order `p`. The hypothesis is verified automatically when a Sylow
/// p-subgroup has order `p`; otherwise `assume_defect_one` must be set.
pub fn defect_one_structure_check(
    a: &Analysis,
    d: &DecompositionMatrix,
    pair: &BlockPair,
    assume_defect_one: bool,
) -> Result<DefectOneReport> {
    let lat = &a.group.lattice;
    let p = a.p as usize;
    if lat.get(lat.sylow(p)).order() != p && !assume_defect_one {
        return Err(Error::Hypothesis(format!("a Sylow {p}-subgroup has order {}", lat.get(lat.sylow(p)).order())));
    }
    let rows = d.rows_in_block(pair.group_block);
    let cols = d.columns_meeting(&rows);
    let (top, bottom): (Vec<usize>, Vec<usize>) = rows.iter().partition(|&&r| d.rows[r].vertex_order == 1);
    let (c0, c1): (Vec<usize>, Vec<usize>) = cols.iter().partition(|&&c| d.columns[c].subgroup_order == 1);
    let e = pair.group_simples;
    let order: Vec<usize> = top.iter().chain(&bottom).copied().collect();
    let corder: Vec<usize> = c0.iter().chain(&c1).copied().collect();
    let submatrix: Vec<Vec<i64>> = order.iter().map(|&r| corder.iter().map(|&c| d.entries[r][c]).collect()).collect();
    let doubled = pair.mu_simples == 2 * e && rows.len() == 2 * e && top.len() == e;
    let top_zero = top.iter().all(|&r| c1.iter().all(|&c| d.entries[r][c] == 0));
    let local_ok = c1.iter().all(|&c| d.columns[c].subgroup_order == p);
    // bottom × local columns is a permutation matrix
    let perm = bottom.len() == c1.len()
        && bottom.iter().all(|&r| {
            let v: Vec<i64> = c1.iter().map(|&c| d.entries[r][c]).collect();
            v.iter().filter(|&&x| x == 1).count() == 1 && v.iter().all(|&x| x <= 1)
        })
        && c1.iter().all(|&c| bottom.iter().filter(|&&r| d.entries[r][c] == 1).count() == 1);
    let shape = top_zero && local_ok && perm && c1.len() == e;
    let d0 = DecompositionMatrix {
        rows: top.iter().map(|&r| d.rows[r].clone()).collect(),
        columns: c0.iter().map(|&c| d.columns[c].clone()).collect(),
        entries: top.iter().map(|&r| c0.iter().map(|&c| d.entries[r][c]).collect()).collect(),
    };
    let gram0 = d0.gram(&(0..top.len()).collect::<Vec<_>>());
    let group_reciprocity = permutation_match(&a.group_cartan(pair.group_block).entries, &gram0).is_some();
    let symmetric = a.mu_cartan(pair.mu_block).is_symmetric();
    Ok(DefectOneReport {
        mu_block: pair.mu_block,
        group_block: pair.group_block,
        e,
        mu_simples: pair.mu_simples,
        local_columns: c1.len(),
        submatrix,
        doubled,
        shape,
        group_reciprocity,
        symmetric,
    })
}

/// Outcome of the p-nilpotent checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PNilpotentReport {
    pub complement: usize,
    pub sylow: usize,
    pub principal_dim: usize,
    pub principal_cartan: Vec<Vec<usize>>,
    pub sylow_cartan: Vec<Vec<usize>>,
    pub cartan_match: Option<Vec<usize>>,
    /// Points of `X = ⊔_H Res_P(G/NH)`.
    pub x_points: usize,
    /// `P`-orbits on `X × X`.
    pub orbits: usize,
    /// `dim kB(X × X)`: one basis element per orbit and per conjugacy class
    /// of subgroups of the orbit's stabilizer.
    pub burnside_dim: usize,
}

impl PNilpotentReport {
    pub fn holds(&self) -> bool {
        self.cartan_match.is_some() && self.principal_dim == self.burnside_dim
    }
}

/// Points of `X` with the action of the Sylow subgroup `P` as a table
/// `act[i][x]` over the members of `P`, `X` the disjoint union of `G/NH`
/// over every subgroup `H`.
fn sylow_set(group: &Group, n: usize, pm: &[usize]) -> Vec<Vec<usize>> {
    let t = &group.table;
    let lat = &group.lattice;
    let mut act: Vec<Vec<usize>> = alloc::vec![Vec::new(); pm.len()];
    for h in 0..lat.len() {
        let mut gens = lat.get(n).members.clone();
        gens.extend(&lat.get(h).members);
        let k = lat.id_of(&t.closure(&gens)).expect("NH is a subgroup");
        let km = &lat.get(k).members;
        // left cosets xK by smallest member
        let mut reps: Vec<usize> = Vec::new();
        let mut of = alloc::vec![usize::MAX; t.order()];
        for x in 0..t.order() {
            if of[x] == usize::MAX {
                for &y in km {
                    of[t.mul(x, y)] = reps.len();
                }
                reps.push(x);
            }
        }
        for (i, &g) in pm.iter().enumerate() {
            let offset = act[i].len();
            act[i].extend(reps.iter().map(|&x| offset + of[t.mul(g, x)]));
        }
    }
    act
}

/// Number of conjugacy classes of subgroups of the subgroup of `P` (given as
/// sorted members within `G`).
fn subgroup_class_count(t: &GroupTable, members: &[usize]) -> Result<usize> {
    let (st, _) = t.subgroup_table("stab", members)?;
    Ok(Group::new(st)?.lattice.classes().len())
}

/// Checks for a p-nilpotent group: the principal Mackey block has the
/// Cartan matrix of `μ(P)` and the dimension of `kB(X × X)`.
pub fn p_nilpotent_checks(a: &Analysis) -> Result<PNilpotentReport> {
    let group = &a.group;
    let lat = &group.lattice;
    let t = &group.table;
    let p = a.p as usize;
    let n = lat.normal_p_complement(p).ok_or_else(|| Error::Hypothesis(format!("{} is not {p}-nilpotent", t.name())))?;
    let sylow = lat.sylow(p);
    let pm = lat.get(sylow).members.clone();
    let principal = a.principal_pair()?;
    let principal_cartan = a.mu_cartan(principal.mu_block).entries;

    let (pt, _) = t.subgroup_table("P", &pm)?;
    let pg = Arc::new(Group::new(pt)?);
    let mu_p = MackeyAlgebra::build(pg, None)?.over(&a.field)?;
    let pd = primitive_idempotents_with_blocks(&mu_p, block_idempotents(&mu_p)?)?;
    let sylow_cartan = cartan_matrix(&mu_p, &pd, None).entries;
    let cartan_match = permutation_match(&principal_cartan, &sylow_cartan);

    let act = sylow_set(group, n, &pm);
    let npts = act.first().map_or(0, Vec::len);
    let mut seen = alloc::vec![false; npts * npts];
    let mut orbits = 0;
    let mut burnside_dim = 0;
    for start in 0..npts * npts {
        if seen[start] {
            continue;
        }
        orbits += 1;
        let (x, y) = (start / npts, start % npts);
        let mut stab = Vec::new();
        for (i, &g) in pm.iter().enumerate() {
            let img = act[i][x] * npts + act[i][y];
            seen[img] = true;
            if img == start {
                stab.push(g);
            }
        }
        stab.sort_unstable();
        burnside_dim += subgroup_class_count(t, &stab)?;
    }
    Ok(PNilpotentReport {
        complement: n,
        sylow,
        principal_dim: principal.mu_dim,
        principal_cartan,
        sylow_cartan,
        cartan_match,
        x_points: npts,
        orbits,
        burnside_dim,
    })
}

/// Pair whose group block has a simple module of dimension `dim`, read off
/// as the size of an isomorphism class of primitive idempotents.
pub fn pair_with_simple_dim(a: &Analysis, dim: usize) -> Option<&BlockPair> {
    a.pairs.iter().find(|bp| {
        a.kg_pd.classes_in_block(bp.group_block).iter().any(|&c| a.kg_pd.classes[c].len() == dim)
    })
}

/// Human-readable label of a block pair.
pub fn pair_label(bp: &BlockPair) -> String {
    format!("B{} <-> b{}", bp.mu_block, bp.group_block)
}
