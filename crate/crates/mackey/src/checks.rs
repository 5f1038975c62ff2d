//! The verification suite behind `verify-paper`: one named check per
//! acceptance criterion, run concurrently and reported in a fixed order.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};
use std::time::Instant;

use mackey_core::chartab::{character_of_lift, CharacterTable};
use mackey_core::decomp::{
    defect_one_structure_check, p_nilpotent_checks, pair_with_simple_dim, verify_cartan_reciprocity, Analysis,
};
use mackey_core::exalg::{
    block_idempotents, cartan_matrix, is_symmetric_algebra, permutation_match, primitive_idempotents_with_blocks,
};
use mackey_core::field::{Gf, Rationals, Q};
use mackey_core::grp::Group;
use mackey_core::gset::GSet;
use mackey_core::mackey::{phi_automorphism_check, MackeyAlgebra};
use mackey_core::modrep::{brauer_quotient, coset_module};

use crate::cache::Cache;
use crate::error::{AppError, Result};
use crate::report::CheckResult;

pub const SUITE_GROUPS: [&str; 9] = ["C2", "C3", "C4", "C6", "S3", "D4", "Q8", "A4", "SL(2,3)"];
pub const SUITE_PRIMES: [u64; 2] = [2, 3];

/// `(group, p)` pairs of the suite with `p` dividing the order.
pub fn suite_pairs() -> Vec<(&'static str, u64)> {
    let mut out = Vec::new();
    for name in SUITE_GROUPS {
        let order = Group::builtin(name).expect("suite group").order() as u64;
        out.extend(SUITE_PRIMES.iter().filter(|&&p| order % p == 0).map(|&p| (name, p)));
    }
    out
}

type Shared = std::result::Result<Arc<Analysis>, String>;

/// Lazily computed analyses shared between concurrently running checks.
pub struct Context {
    cache: Cache,
    analyses: BTreeMap<(&'static str, u64), OnceLock<Shared>>,
}

impl Context {
    pub fn new(cache: Cache) -> Self {
        let analyses = suite_pairs().into_iter().map(|k| (k, OnceLock::new())).collect();
        Context { cache, analyses }
    }

    pub fn analysis(&self, name: &'static str, p: u64) -> Shared {
        let cell = self.analyses.get(&(name, p)).expect("suite member");
        cell.get_or_init(|| {
            let run = || -> Result<Analysis> {
                let g = Arc::new(Group::builtin(name)?);
                let mu = Arc::new(self.cache.mackey(&g, Some(p as usize))?);
                Ok(Analysis::with_algebra(mu, p, None)?)
            };
            run().map(Arc::new).map_err(|e| format!("{name} p={p}: {e}"))
        })
        .clone()
    }
}

type Outcome = std::result::Result<(bool, String), String>;

pub struct Check {
    pub name: &'static str,
    pub criterion: u32,
    pub summary: &'static str,
    /// Suite analyses this check reads, warmed up in parallel.
    pub needs: fn() -> Vec<(&'static str, u64)>,
    run: fn(&Context) -> Outcome,
}

fn none() -> Vec<(&'static str, u64)> {
    Vec::new()
}

pub const CHECKS: [Check; 11] = [
    Check { name: "dim-6", criterion: 1, summary: "dim mu(C2) = 6 over GF(2), GF(3), Q", needs: none, run: dim_six },
    Check {
        name: "phi-automorphism",
        criterion: 2,
        summary: "the six-element map is a unital automorphism of mu_GF(2)(C2)",
        needs: none,
        run: phi_automorphism,
    },
    Check {
        name: "dim-56",
        criterion: 3,
        summary: "principal block of mu^1_GF(2)(S3) has dim 56",
        needs: || vec![("S3", 2)],
        run: dim_56,
    },
    Check {
        name: "cartan-c3",
        criterion: 4,
        summary: "Cartan(mu_GF(3)(C3)) = [[2,1],[1,3]]",
        needs: none,
        run: cartan_c3,
    },
    Check {
        name: "cartan-sl23",
        criterion: 5,
        summary: "SL(2,3), p=3: block with the 2-dim simple has Cartan [[3,2],[2,3]]",
        needs: || vec![("SL(2,3)", 3)],
        run: cartan_sl23,
    },
    Check {
        name: "block-bijection",
        criterion: 6,
        summary: "blocks of mu^1 and of kG match through the t^1_1 corner",
        needs: suite_pairs,
        run: block_bijection,
    },
    Check {
        name: "reciprocity",
        criterion: 7,
        summary: "D D^T equals the Cartan matrix of mu^1 per block",
        needs: suite_pairs,
        run: reciprocity,
    },
    Check {
        name: "symmetric",
        criterion: 8,
        summary: "mu_GF(2)(C2), mu_GF(3)(C3) symmetric; mu_GF(2)(C4) not",
        needs: none,
        run: symmetric,
    },
    Check {
        name: "defect-one",
        criterion: 9,
        summary: "defect-one blocks: doubled simples, [D0|0;*|Id] shape, symmetric Cartan",
        needs: || vec![("S3", 3), ("SL(2,3)", 3)],
        run: defect_one,
    },
    Check {
        name: "p-nilpotent",
        criterion: 10,
        summary: "p-nilpotent groups: principal block Cartan = Cartan(mu(P)), dim = dim kB(X^2)",
        needs: || vec![("S3", 2), ("SL(2,3)", 3)],
        run: p_nilpotent,
    },
    Check {
        name: "oracles",
        criterion: 11,
        summary: "Brauer quotients, lifted characters, block dims, decomposition entries, associativity",
        needs: suite_pairs,
        run: oracles,
    },
];

fn dim_six(_: &Context) -> Outcome {
    let mu = MackeyAlgebra::build(Arc::new(Group::builtin("C2").map_err(|e| e.to_string())?), None)
        .map_err(|e| e.to_string())?;
    let dims = [
        mu.over(&Gf::new(2, 1).unwrap()).map_err(|e| e.to_string())?.dim(),
        mu.over(&Gf::new(3, 1).unwrap()).map_err(|e| e.to_string())?.dim(),
        mu.over(&Rationals).map_err(|e| e.to_string())?.dim(),
    ];
    Ok((dims == [6; 3], format!("GF(2): {}, GF(3): {}, Q: {}", dims[0], dims[1], dims[2])))
}

fn phi_automorphism(_: &Context) -> Outcome {
    let r = phi_automorphism_check(&Gf::new(2, 1).unwrap()).map_err(|e| e.to_string())?;
    let ok = r.is_automorphism() && r.multiplicative_pairs == 36;
    Ok((
        ok,
        format!(
            "unital {}, bijective {}, multiplicative on {}/36 pairs",
            r.unital, r.bijective, r.multiplicative_pairs
        ),
    ))
}

fn dim_56(ctx: &Context) -> Outcome {
    let a = ctx.analysis("S3", 2)?;
    let principal = a.principal_pair().map_err(|e| e.to_string())?;
    let others: Vec<usize> = a.pairs.iter().filter(|b| b.mu_block != principal.mu_block).map(|b| b.mu_dim).collect();
    Ok((principal.mu_dim == 56, format!("principal block dim {}, other blocks {others:?}", principal.mu_dim)))
}

fn full_cartan(name: &str, p: u32) -> std::result::Result<Vec<Vec<usize>>, String> {
    let g = Arc::new(Group::builtin(name).map_err(|e| e.to_string())?);
    let f = Gf::new(p, 1).map_err(|e| e.to_string())?;
    let a = MackeyAlgebra::build(g, None).and_then(|m| m.over(&f)).map_err(|e| e.to_string())?;
    let pd = block_idempotents(&a).and_then(|b| primitive_idempotents_with_blocks(&a, b)).map_err(|e| e.to_string())?;
    Ok(cartan_matrix(&a, &pd, None).entries)
}

fn cartan_c3(_: &Context) -> Outcome {
    let c = full_cartan("C3", 3)?;
    let ok = permutation_match(&c, &[vec![2, 1], vec![1, 3]]).is_some();
    Ok((ok, format!("computed {c:?}")))
}

fn cartan_sl23(ctx: &Context) -> Outcome {
    let a = ctx.analysis("SL(2,3)", 3)?;
    let bp = pair_with_simple_dim(&a, 2).ok_or("no block with a 2-dimensional simple")?;
    let c = a.mu_cartan(bp.mu_block).entries;
    let ok = permutation_match(&c, &[vec![3, 2], vec![2, 3]]).is_some();
    Ok((ok, format!("block {} (dim {}): {c:?}", bp.mu_block, bp.mu_dim)))
}

fn block_bijection(ctx: &Context) -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, p) in suite_pairs() {
        match ctx.analysis(name, p) {
            Ok(a) => {
                let n = a.kg_pd.blocks.len();
                let matched = a.pairs.len() == n && a.mu_pd.blocks.len() == n;
                ok &= matched;
                parts.push(format!("{name}/{p}: {n}"));
            }
            Err(e) => {
                ok = false;
                parts.push(e);
            }
        }
    }
    Ok((ok, parts.join(", ")))
}

fn reciprocity(ctx: &Context) -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, p) in suite_pairs() {
        let a = ctx.analysis(name, p)?;
        let d = a.decomposition_matrix().map_err(|e| format!("{name} p={p}: {e}"))?;
        let reps = verify_cartan_reciprocity(&a, &d);
        let good = reps.iter().filter(|r| r.holds()).count();
        ok &= good == reps.len();
        parts.push(format!("{name}/{p}: {good}/{}", reps.len()));
    }
    Ok((ok, parts.join(", ")))
}

fn symmetric(_: &Context) -> Outcome {
    let verdict = |name: &str, p: u32| -> std::result::Result<bool, String> {
        let g = Arc::new(Group::builtin(name).map_err(|e| e.to_string())?);
        let a = MackeyAlgebra::build(g, None).and_then(|m| m.over(&Gf::new(p, 1)?)).map_err(|e| e.to_string())?;
        Ok(is_symmetric_algebra(&a).map_err(|e| e.to_string())?.is_symmetric())
    };
    let got = [verdict("C2", 2)?, verdict("C3", 3)?, verdict("C4", 2)?];
    Ok((got == [true, true, false], format!("C2/2: {}, C3/3: {}, C4/2: {}", got[0], got[1], got[2])))
}

fn defect_one(ctx: &Context) -> Outcome {
    let s3 = ctx.analysis("S3", 3)?;
    let sl = ctx.analysis("SL(2,3)", 3)?;
    let mut ok = true;
    let mut parts = Vec::new();
    let cases = [
        ("S3 principal", &s3, s3.principal_pair().ok()),
        ("SL(2,3) 2-dim simple block", &sl, pair_with_simple_dim(&sl, 2)),
    ];
    for (label, a, pair) in cases {
        let pair = pair.ok_or_else(|| format!("{label}: block not found"))?;
        let d = a.decomposition_matrix().map_err(|e| e.to_string())?;
        let r = defect_one_structure_check(a, &d, pair, false).map_err(|e| e.to_string())?;
        ok &= r.holds();
        parts.push(format!(
            "{label}: e={} simples={} shape={} symmetric={} submatrix={:?}",
            r.e, r.mu_simples, r.shape, r.symmetric, r.submatrix
        ));
    }
    Ok((ok, parts.join("; ")))
}

fn p_nilpotent(ctx: &Context) -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, p) in [("S3", 2), ("SL(2,3)", 3)] {
        let a = ctx.analysis(name, p)?;
        let r = p_nilpotent_checks(&a).map_err(|e| e.to_string())?;
        ok &= r.holds();
        parts.push(format!(
            "{name}/{p}: cartan {:?} vs {:?}, dim {} vs kB(X^2) {} ({} orbits on {} points squared)",
            r.principal_cartan, r.sylow_cartan, r.principal_dim, r.burnside_dim, r.orbits, r.x_points
        ));
    }
    Ok((ok, parts.join("; ")))
}

/// Number of cosets `xH` fixed by every element of `members`.
fn fixed_cosets(x: &GSet, members: &[usize]) -> usize {
    x.fixed_points(members).len()
}

fn oracles(ctx: &Context) -> Outcome {
    let mut counts = [0usize; 5];
    let e = |e: mackey_core::Error| e.to_string();
    for name in SUITE_GROUPS {
        let g = Arc::new(Group::builtin(name).map_err(e)?);
        let table = CharacterTable::new(&g.table).map_err(e)?;
        for p in SUITE_PRIMES.iter().copied().filter(|&p| g.order() as u64 % p == 0) {
            let a = ctx.analysis(name, p)?;
            for h in g.lattice.class_reps() {
                let w = coset_module(&a.field, g.clone(), h);
                let x = GSet::cosets(&g.table, &g.lattice, h);
                for q in g.lattice.p_subgroups(p as usize) {
                    let bq = brauer_quotient(&w, q, p).map_err(e)?;
                    if bq.dim() != fixed_cosets(&x, &g.lattice.get(q).members) {
                        return Ok((false, format!("{name}: dim k[G/{h}][{q}] = {}", bq.dim())));
                    }
                    counts[0] += 1;
                }
                let psi = character_of_lift(&w, &table).map_err(e)?;
                for (k, &rep) in table.classes.reps.iter().enumerate() {
                    let want = fixed_cosets(&x, &g.table.closure(&[rep])) as i128;
                    if table.cyclo.as_rational(&psi[k]) != Some(Q::from_integer(want)) {
                        return Ok((false, format!("{name} p={p}: lifted character of k[G/{h}] at class {k}")));
                    }
                }
                counts[1] += 1;
            }
            let total: usize = a.pairs.iter().map(|b| b.mu_dim).sum();
            if total != a.alg.dim() {
                return Ok((false, format!("{name} p={p}: block dims sum to {total}, not {}", a.alg.dim())));
            }
            counts[2] += 1;
            let d = a.decomposition_matrix().map_err(e)?;
            if d.entries.iter().flatten().any(|&v| v < 0) {
                return Ok((false, format!("{name} p={p}: negative decomposition entry")));
            }
            counts[3] += d.entries.len() * d.columns.len();
        }
        let mu = MackeyAlgebra::build(g.clone(), None).map_err(e)?;
        if g.order() <= 8 {
            mu.check_associative_exact().map_err(e)?;
        } else {
            mu.check_associative_sampled(10_000, 0x6d61636b).map_err(e)?;
        }
        counts[4] += 1;
    }
    Ok((
        true,
        format!(
            "{} Brauer quotients, {} lifted characters, {} block sums, {} decomposition entries, {} associativity checks",
            counts[0], counts[1], counts[2], counts[3], counts[4]
        ),
    ))
}

/// Runs the named checks (all when `only` is empty) concurrently; results
/// come back in the canonical order with wall-clock times.
pub fn run_checks(only: &[String], cache: Cache) -> Result<Vec<CheckResult>> {
    for name in only {
        if !CHECKS.iter().any(|c| c.name == name) {
            let known: Vec<&str> = CHECKS.iter().map(|c| c.name).collect();
            return Err(AppError::Usage(format!("unknown check `{name}`; known: {}", known.join(", "))));
        }
    }
    let selected: Vec<&Check> = CHECKS.iter().filter(|c| only.is_empty() || only.iter().any(|o| o == c.name)).collect();
    let mut warm: Vec<(&'static str, u64)> = selected.iter().flat_map(|c| (c.needs)()).collect();
    warm.sort();
    warm.dedup();
    let ctx = Context::new(cache);
    let results = std::thread::scope(|s| {
        for &(name, p) in &warm {
            let ctx = &ctx;
            s.spawn(move || {
                let _ = ctx.analysis(name, p);
            });
        }
        let handles: Vec<_> = selected
            .iter()
            .map(|c| {
                let ctx = &ctx;
                s.spawn(move || {
                    let start = Instant::now();
                    let mut r = match (c.run)(ctx) {
                        Ok((pass, details)) => CheckResult::new(c.name, pass, details),
                        Err(details) => CheckResult::error(c.name, details),
                    };
                    r.elapsed_ms = Some(start.elapsed().as_millis() as u64);
                    r
                })
            })
            .collect();
        handles
            .into_iter()
            .zip(&selected)
            .map(|(h, c)| h.join().unwrap_or_else(|_| CheckResult::error(c.name, "check panicked")))
            .collect()
    });
    Ok(results)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_has_thirteen_pairs() {
        let pairs = suite_pairs();
        assert_eq!(pairs.len(), 13);
        assert!(!pairs.contains(&("C4", 3)));
    }

    #[test]
    fn unknown_check_is_a_usage_error() {
        let err = run_checks(&["nope".into()], Cache::disabled()).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn small_checks_pass() {
        let only: Vec<String> = ["dim-6", "phi-automorphism", "cartan-c3", "symmetric"].map(String::from).to_vec();
        let r = run_checks(&only, Cache::disabled()).unwrap();
        assert_eq!(r.iter().map(|c| c.name.as_str()).collect::<Vec<_>>(), ["dim-6", "phi-automorphism", "cartan-c3", "symmetric"]);
        assert!(r.iter().all(CheckResult::passed), "{r:?}");
    }
}
