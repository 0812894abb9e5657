//! Command-line front end. Every command renders to a string so tests can drive it directly.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::rational::as_i64;
use crate::arith::MPoly;
use crate::bruhat::{export_dot, CoverStyle};
use crate::csm::{csm_class_noneq, oracle_product};
use crate::error::{Error, Result};
use crate::grassmann::{export_partition_dot, parabolic_mn, parabolic_pieri};
use crate::perm::{HookShape, Partition, Perm};
use crate::rht::{rht_count, RhtMethod};
use crate::rules::{mn_csm, mn_schubert, pieri_hook_csm, pieri_hook_schubert};
use crate::schubert::{expand_in_schubert, single_schubert, Basis, CohClass};

#[derive(Parser, Debug)]
#[command(name = "flagcsm", version, about = "Exact CSM and Schubert calculus on type A flag varieties")]
pub struct Cli {
    /// Worker threads for parallel loops; FLAGCSM_THREADS is used when absent.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Product with the hook Schur polynomial s_(1+alpha, 1^beta)(x_1..x_k).
    Pieri(PieriArgs),
    /// Product with the power sum p_r(x_1..x_k).
    Mn(MnArgs),
    /// DOT export of a labeled k-Bruhat graph.
    Graph(GraphArgs),
    /// Count standard r-rim hook tableaux.
    Rht(RhtArgs),
    /// Pieri or Murnaghan-Nakayama rule on Gr(k, n).
    Grassmann(GrassmannArgs),
    /// Exhaustive nonnegativity scan.
    ScanPositivity(ScanArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    Csm,
    Schubert,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Switch {
    On,
    Off,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Args, Debug)]
pub struct ProductArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub u: Perm,
    #[arg(long, value_enum, default_value = "csm")]
    pub basis: BasisArg,
    #[arg(long, value_enum, default_value = "on")]
    pub equivariant: Switch,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct PieriArgs {
    #[command(flatten)]
    pub common: ProductArgs,
    #[arg(long, default_value_t = 0)]
    pub alpha: usize,
    #[arg(long, default_value_t = 0)]
    pub beta: usize,
}

#[derive(Args, Debug)]
pub struct MnArgs {
    #[command(flatten)]
    pub common: ProductArgs,
    #[arg(long)]
    pub r: usize,
}

#[derive(Args, Debug)]
pub struct GraphArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    /// Graph on partitions in the k x (n-k) rectangle instead of S_n.
    #[arg(long)]
    pub partitions: bool,
    /// Drop non-cover edges instead of drawing them dashed.
    #[arg(long)]
    pub covers_only: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Enumerate,
    Limit,
    Maj,
    Hook,
    /// Every applicable method; disagreement is an invariant violation.
    All,
}

#[derive(Args, Debug)]
pub struct RhtArgs {
    #[arg(long, value_parser = parse_partition)]
    pub outer: Partition,
    #[arg(long, value_parser = parse_partition, default_value = "")]
    pub inner: Partition,
    #[arg(long)]
    pub r: usize,
    #[arg(long, value_enum, default_value = "enumerate")]
    pub method: MethodArg,
}

#[derive(Args, Debug)]
pub struct GrassmannArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_parser = parse_partition)]
    pub lambda: Partition,
    #[arg(long)]
    pub alpha: Option<usize>,
    #[arg(long)]
    pub beta: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScanMode {
    Product,
    SchubertExpansion,
}

#[derive(Args, Debug)]
pub struct ScanArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "product")]
    pub mode: ScanMode,
}

fn parse_partition(s: &str) -> std::result::Result<Partition, String> {
    Partition::parse(s).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct TermJson<'a> {
    perm: &'a Perm,
    coeff: String,
}

#[derive(Serialize)]
struct ExpansionJson<'a> {
    basis: Basis,
    equivariant: bool,
    diagonal: String,
    terms: Vec<TermJson<'a>>,
}

#[derive(Serialize)]
struct PartitionTermJson {
    partition: String,
    coeff: String,
}

#[derive(Serialize)]
struct GrassmannJson {
    k: usize,
    n: usize,
    lambda: String,
    terms: Vec<PartitionTermJson>,
}

/// Applies --threads or FLAGCSM_THREADS to the global rayon pool. Later calls are ignored.
pub fn init_threads(flag: Option<usize>) -> Result<()> {
    let from_env = match std::env::var("FLAGCSM_THREADS") {
        Ok(v) => Some(v.trim().parse::<usize>().map_err(|_| Error::Usage(format!("FLAGCSM_THREADS={v:?}")))?),
        Err(_) => None,
    };
    if let Some(t) = flag.or(from_env) {
        if t == 0 {
            return Err(Error::Usage("thread count must be positive".into()));
        }
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    Ok(())
}

pub fn run(cli: &Cli) -> Result<String> {
    init_threads(cli.threads)?;
    match &cli.command {
        Command::Pieri(a) => cmd_pieri(a),
        Command::Mn(a) => cmd_mn(a),
        Command::Graph(a) => cmd_graph(a),
        Command::Rht(a) => cmd_rht(a),
        Command::Grassmann(a) => cmd_grassmann(a),
        Command::ScanPositivity(a) => cmd_scan_positivity(a),
    }
}

fn check_product(a: &ProductArgs) -> Result<()> {
    if a.u.n() != a.n {
        return Err(Error::Usage(format!("--u {} is not in S_{}", a.u, a.n)));
    }
    Ok(())
}

pub fn cmd_pieri(a: &PieriArgs) -> Result<String> {
    let c = &a.common;
    check_product(c)?;
    if a.beta + 1 > c.k {
        return Err(Error::Domain(format!("hook with {} rows does not fit k={}", a.beta + 1, c.k)));
    }
    let hook = HookShape::new(a.alpha, a.beta);
    let eq = c.equivariant == Switch::On;
    let out = match c.basis {
        BasisArg::Csm => pieri_hook_csm(&c.u, c.k, hook, eq)?,
        BasisArg::Schubert => pieri_hook_schubert(&c.u, c.k, hook, eq)?,
    };
    Ok(render_expansion(&out, &c.u, c.format))
}

pub fn cmd_mn(a: &MnArgs) -> Result<String> {
    let c = &a.common;
    check_product(c)?;
    let eq = c.equivariant == Switch::On;
    let out = match c.basis {
        BasisArg::Csm => mn_csm(&c.u, c.k, a.r, eq)?,
        BasisArg::Schubert => mn_schubert(&c.u, c.k, a.r, eq)?,
    };
    Ok(render_expansion(&out, &c.u, c.format))
}

/// Table lines `perm<TAB>coeff`, the diagonal first and marked with `*`; or the JSON document.
pub fn render_expansion(c: &CohClass, u: &Perm, format: Format) -> String {
    let (diag, rest) = c.split_diagonal(u);
    match format {
        Format::Json => {
            let doc = ExpansionJson {
                basis: c.basis,
                equivariant: c.equivariant,
                diagonal: diag.to_string(),
                terms: rest.iter().map(|(w, p)| TermJson { perm: w, coeff: p.to_string() }).collect(),
            };
            let mut s = serde_json::to_string_pretty(&doc).expect("plain data serializes");
            s.push('\n');
            s
        }
        Format::Table => {
            let mut s = String::new();
            writeln!(s, "{u}*\t{diag}").unwrap();
            for (w, p) in &rest {
                writeln!(s, "{w}\t{p}").unwrap();
            }
            s
        }
    }
}

pub fn cmd_graph(a: &GraphArgs) -> Result<String> {
    if a.k == 0 || a.k >= a.n {
        return Err(Error::Domain(format!("k={} outside 1..{}", a.k, a.n)));
    }
    if a.partitions {
        return export_partition_dot(a.k, a.n);
    }
    let style = if a.covers_only { CoverStyle::CoversOnly } else { CoverStyle::Dashed };
    Ok(export_dot(a.n, a.k, style))
}

pub fn cmd_rht(a: &RhtArgs) -> Result<String> {
    let single = |m: RhtMethod| rht_count(&a.outer, &a.inner, a.r, m);
    let method = match a.method {
        MethodArg::Enumerate => RhtMethod::Enumerate,
        MethodArg::Limit => RhtMethod::Limit,
        MethodArg::Maj => RhtMethod::Maj,
        MethodArg::Hook => RhtMethod::Hook,
        MethodArg::All => {
            let mut methods = vec![("enumerate", RhtMethod::Enumerate), ("limit", RhtMethod::Limit), ("maj", RhtMethod::Maj)];
            if a.inner.is_empty() {
                methods.push(("hook", RhtMethod::Hook));
            }
            let mut s = String::new();
            let mut values = Vec::new();
            for (name, m) in methods {
                let v = single(m)?;
                writeln!(s, "{name}\t{v}").unwrap();
                values.push(v);
            }
            if values.windows(2).any(|w| w[0] != w[1]) {
                return Err(Error::Invariant(format!("methods disagree on {}/{}:\n{s}", a.outer, a.inner)));
            }
            return Ok(s);
        }
    };
    Ok(format!("{}\n", single(method)?))
}

pub fn cmd_grassmann(a: &GrassmannArgs) -> Result<String> {
    let terms: BTreeMap<Partition, String> = match (a.alpha, a.beta, a.r) {
        (None, None, Some(r)) => {
            parabolic_mn(&a.lambda, a.k, a.n, r)?.into_iter().map(|(p, c)| (p, c.to_string())).collect()
        }
        (al, be, None) if al.is_some() || be.is_some() => {
            let hook = HookShape::new(al.unwrap_or(0), be.unwrap_or(0));
            parabolic_pieri(&a.lambda, a.k, a.n, hook)?.into_iter().map(|(p, c)| (p, c.to_string())).collect()
        }
        _ => return Err(Error::Usage("give either --alpha/--beta or --r".into())),
    };
    match a.format {
        Format::Json => {
            let doc = GrassmannJson {
                k: a.k,
                n: a.n,
                lambda: a.lambda.display_padded(a.k),
                terms: terms
                    .into_iter()
                    .map(|(p, coeff)| PartitionTermJson { partition: p.display_padded(a.k), coeff })
                    .collect(),
            };
            let mut s = serde_json::to_string_pretty(&doc).expect("plain data serializes");
            s.push('\n');
            Ok(s)
        }
        Format::Table => {
            let mut s = String::new();
            for (p, c) in terms {
                writeln!(s, "({})\t{c}", p.display_padded(a.k)).unwrap();
            }
            Ok(s)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub checked: usize,
    pub violations: Vec<String>,
}

fn nonnegative_integer(c: &MPoly) -> bool {
    c.is_constant() && as_i64(&c.constant_term()).is_some_and(|v| v >= 0)
}

/// Product mode: c_SM(Y(u)°) * [Y(v)] for all u, v in S_n. Schubert-expansion mode: every
/// nonequivariant CSM class in the Schubert basis.
pub fn scan_positivity(n: usize, mode: ScanMode) -> Result<ScanReport> {
    let perms = Perm::all(n);
    let results: Vec<Result<Vec<String>>> = match mode {
        ScanMode::Product => perms
            .par_iter()
            .map(|u| {
                let mut bad = Vec::new();
                for v in &perms {
                    let c = oracle_product(u, &single_schubert(v), Basis::Csm, false)?;
                    for (w, p) in c.terms() {
                        if !nonnegative_integer(p) {
                            bad.push(format!("csm({u}) * [Y({v})] has coefficient {p} at {w}"));
                        }
                    }
                }
                Ok(bad)
            })
            .collect(),
        ScanMode::SchubertExpansion => perms
            .par_iter()
            .map(|w| {
                let c = expand_in_schubert(&csm_class_noneq(w), false)?;
                Ok(c.terms()
                    .iter()
                    .filter(|(_, p)| !nonnegative_integer(p))
                    .map(|(v, p)| format!("csm({w}) has Schubert coefficient {p} at {v}"))
                    .collect())
            })
            .collect(),
    };
    let mut violations = Vec::new();
    for r in results {
        violations.extend(r?);
    }
    let checked = match mode {
        ScanMode::Product => perms.len() * perms.len(),
        ScanMode::SchubertExpansion => perms.len(),
    };
    Ok(ScanReport { checked, violations })
}

pub fn cmd_scan_positivity(a: &ScanArgs) -> Result<String> {
    if a.n == 0 || a.n > crate::arith::mpoly::MAX_RANK {
        return Err(Error::Domain(format!("n={} outside 1..={}", a.n, crate::arith::mpoly::MAX_RANK)));
    }
    let report = scan_positivity(a.n, a.mode)?;
    if let Some(first) = report.violations.first() {
        return Err(Error::Violation(format!("{} violations; first: {first}", report.violations.len())));
    }
    let what = match a.mode {
        ScanMode::Product => "pairs",
        ScanMode::SchubertExpansion => "classes",
    };
    Ok(format!("n={}: {} {what} checked, 0 violations\n", a.n, report.checked))
}
