//! Command-line interface.

use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use mackey_core::decomp::{splitting_degree, verify_cartan_reciprocity, Analysis};
use mackey_core::exalg::{block_idempotents, cartan_matrix, primitive_idempotents_with_blocks};
use mackey_core::field::{Gf, Rationals};
use mackey_core::grp::Group;

use crate::cache::Cache;
use crate::checks::run_checks;
use crate::error::{AppError, Result};
use crate::formats::group_from_spec;
use crate::report::{BasisCount, BlockSummary, CheckResult, GroupSummary, InfoSection, Report};

#[derive(Debug, Parser)]
#[command(name = "mackey", version, about = "Blocks, Cartan and decomposition matrices of Mackey algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,

    /// Directory for cached structure constants (overrides $MACKEY_CACHE_DIR).
    #[arg(long, global = true, value_name = "DIR")]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimensions of mu and mu^1 and basis counts per subgroup pair.
    Info(GroupArgs),
    /// Blocks of mu^1 matched with blocks of the group algebra.
    Blocks(GroupArgs),
    /// Cartan matrices per block.
    Cartan(GroupArgs),
    /// Decomposition matrix of p-permutation modules.
    Decomp(GroupArgs),
    /// Run the verification suite.
    VerifyPaper(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    /// Builtin name (C6, S3, D4, Q8, A4, SL(2,3), C2xC2, ...) or a group file.
    #[arg(long)]
    pub group: String,

    /// The characteristic.
    #[arg(long)]
    pub p: Option<u64>,

    /// Use the p-local Mackey algebra mu^1.
    #[arg(long)]
    pub p_local: bool,

    /// `principal`, `all`, or a block index.
    #[arg(long)]
    pub block: Option<String>,

    /// Work over GF(p^m) for this m instead of the computed splitting degree.
    #[arg(long, value_name = "M")]
    pub field_degree: Option<u32>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Run only the named checks.
    #[arg(long, value_name = "NAME")]
    pub only: Vec<String>,
}

enum BlockSel {
    All,
    Principal,
    Index(usize),
}

fn parse_block(s: Option<&str>) -> Result<BlockSel> {
    match s {
        None | Some("all") => Ok(BlockSel::All),
        Some("principal") => Ok(BlockSel::Principal),
        Some(n) => n
            .parse()
            .map(BlockSel::Index)
            .map_err(|_| AppError::Usage(format!("--block expects `principal`, `all` or an index, not `{n}`"))),
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn prime(args: &GroupArgs, required: bool) -> Result<Option<u64>> {
    match args.p {
        Some(p) if !is_prime(p) => Err(AppError::Usage(format!("--p {p} is not prime"))),
        None if required => Err(AppError::Usage("--p is required for this command".into())),
        p => Ok(p),
    }
}

fn field_label(f: &Gf) -> String {
    if f.degree() == 1 {
        format!("GF({})", f.p())
    } else {
        format!("GF({}^{})", f.p(), f.degree())
    }
}

fn analysis(args: &GroupArgs, cache: &Cache, group: &Arc<Group>, p: u64) -> Result<Analysis> {
    let mu = Arc::new(cache.mackey(group, Some(p as usize))?);
    Ok(Analysis::with_algebra(mu, p, args.field_degree)?)
}

fn header(command: &str, group: &Group, p: Option<u64>) -> Report {
    let mut r = Report::new(command);
    r.group = Some(GroupSummary::of(group));
    r.prime = p;
    r
}

fn info(args: &GroupArgs, cache: &Cache) -> Result<Report> {
    let p = prime(args, args.p_local)?;
    let g = group_from_spec(&args.group)?;
    let mut r = header("info", &g, p);
    let mu = cache.mackey(&g, None)?;
    let rational = mu.over(&Rationals)?.dim();
    let prime_field = p.map(|p| Gf::new(p as u32, 1).and_then(|f| mu.over(&f)).map(|a| a.dim())).transpose()?;
    let local = p.map(|p| cache.mackey(&g, Some(p as usize))).transpose()?;
    let shown = if args.p_local { local.as_ref().expect("p is required") } else { &mu };
    let basis_counts =
        shown.block_counts().into_iter().map(|((h, l), count)| BasisCount { h, l, count }).collect();
    r.field = p.map(|p| format!("GF({p})"));
    let agree = prime_field.is_none_or(|d| d == rational) && rational == mu.dim();
    r.checks.push(CheckResult::new(
        "dimension-independent-of-ring",
        agree,
        format!("Q: {rational}, GF(p): {}", prime_field.map_or("-".into(), |d| d.to_string())),
    ));
    r.info = Some(InfoSection {
        mu_dim: mu.dim(),
        mu_dim_rational: rational,
        mu_dim_prime_field: prime_field,
        p_local_dim: local.as_ref().map(|m| m.dim()),
        basis_counts,
    });
    Ok(r)
}

fn select_blocks(a: &Analysis, sel: &BlockSel, mut blocks: Vec<BlockSummary>) -> Result<Vec<BlockSummary>> {
    match sel {
        BlockSel::All => {}
        BlockSel::Principal => {
            let p = a.principal_pair()?.mu_block;
            blocks.retain(|b| b.mu_block == p);
        }
        BlockSel::Index(i) => {
            if *i >= blocks.len() {
                return Err(AppError::Usage(format!("block {i} out of range; there are {}", blocks.len())));
            }
            blocks.retain(|b| b.mu_block == *i);
        }
    }
    Ok(blocks)
}

fn blocks(args: &GroupArgs, cache: &Cache) -> Result<Report> {
    let p = prime(args, true)?.expect("required");
    let sel = parse_block(args.block.as_deref())?;
    let g = group_from_spec(&args.group)?;
    let a = analysis(args, cache, &g, p)?;
    let mut r = header("blocks", &g, Some(p));
    r.field = Some(field_label(&a.field));
    let all = BlockSummary::of_pairs(&a);
    r.checks.push(CheckResult::new(
        "block-bijection",
        a.pairs.len() == a.kg_pd.blocks.len(),
        format!("{} Mackey blocks, {} group blocks, unique corner matching", a.pairs.len(), a.kg_pd.blocks.len()),
    ));
    let total: usize = all.iter().map(|b| b.mu_dim).sum();
    r.checks.push(CheckResult::new(
        "block-dims-sum",
        total == a.alg.dim(),
        format!("{total} = dim mu^1 {}", a.alg.dim()),
    ));
    r.blocks = select_blocks(&a, &sel, all)?;
    Ok(r)
}

fn cartan(args: &GroupArgs, cache: &Cache) -> Result<Report> {
    if args.p_local || args.block.is_some() {
        let mut r = blocks(args, cache)?;
        r.command = "cartan".into();
        return Ok(r);
    }
    let p = prime(args, true)?.expect("required");
    let g = group_from_spec(&args.group)?;
    let mu = cache.mackey(&g, None)?;
    let mut m = args.field_degree.unwrap_or_else(|| splitting_degree(&g.table, p));
    let (f, alg, pd) = loop {
        let f = Gf::new(p as u32, m)?;
        let alg = mu.over(&f)?;
        match block_idempotents(&alg).and_then(|b| primitive_idempotents_with_blocks(&alg, b)) {
            Ok(pd) => break (f, alg, pd),
            Err(mackey_core::Error::NeedsExtension(d)) if args.field_degree.is_none() && m * d.max(2) <= 16 => {
                m *= d.max(2)
            }
            Err(e) => return Err(e.into()),
        }
    };
    let mut r = header("cartan", &g, Some(p));
    r.field = Some(field_label(&f));
    for b in 0..pd.blocks.len() {
        let cartan = cartan_matrix(&alg, &pd, Some(b));
        r.blocks.push(BlockSummary {
            mu_block: b,
            group_block: None,
            principal: false,
            mu_dim: alg.corner(&pd.blocks[b])?.0.dim(),
            group_dim: None,
            mu_simples: cartan.size(),
            group_simples: None,
            cartan: cartan.into(),
            group_cartan: None,
        });
    }
    Ok(r)
}

fn decomp(args: &GroupArgs, cache: &Cache) -> Result<Report> {
    let p = prime(args, true)?.expect("required");
    let g = group_from_spec(&args.group)?;
    let a = analysis(args, cache, &g, p)?;
    let d = a.decomposition_matrix()?;
    let mut r = header("decomp", &g, Some(p));
    r.field = Some(field_label(&a.field));
    r.blocks = BlockSummary::of_pairs(&a);
    for rep in verify_cartan_reciprocity(&a, &d) {
        r.checks.push(CheckResult::new(
            &format!("reciprocity-block-{}", rep.mu_block),
            rep.holds(),
            format!("D D^T = {:?}, Cartan = {:?}", rep.gram, rep.cartan),
        ));
    }
    let columns = d.column_blocks();
    r.checks.push(CheckResult::new(
        "columns-in-one-block",
        columns.is_ok(),
        columns.map_or_else(|e| e.to_string(), |c| format!("{} columns", c.len())),
    ));
    r.decomposition = Some((&d).into());
    Ok(r)
}

fn verify(args: &VerifyArgs, cache: Cache) -> Result<Report> {
    let mut r = Report::new("verify-paper");
    r.checks = run_checks(&args.only, cache)?;
    Ok(r)
}

pub fn run(cli: &Cli) -> Result<Report> {
    let cache = Cache::from_config(cli.cache_dir.as_deref());
    match &cli.command {
        Command::Info(a) => info(a, &cache),
        Command::Blocks(a) => blocks(a, &cache),
        Command::Cartan(a) => cartan(a, &cache),
        Command::Decomp(a) => decomp(a, &cache),
        Command::VerifyPaper(a) => verify(a, cache),
    }
}

/// Parses arguments, runs, prints, and returns the process exit code:
/// 0 success, 1 failed check or computation error, 2 usage error.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli) {
        Ok(report) => {
            print!("{}", if cli.json { report.to_json() } else { report.to_text() });
            if report.all_passed() {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
