//! `charvar`: compute invariants, run checks, count group solutions and
//! manage the result cache.
//!
//! Exit codes: 0 success, 1 failed check or disagreement, 2 usage error,
//! 3 failed polynomiality or integrality assertion.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use charvar::invariants::{cache_dir_from, error_document, DiskCache, Engine, Kind, Status, Suite};
use charvar::oracle::{
    build_group_bounded, character_table, conjugacy_classes, frobenius_sums, gl_bridge, tuple_counts, Family,
    OracleError, DEFAULT_BOUND,
};
use charvar::Error;

const SUCCESS: u8 = 0;
const FAILURE: u8 = 1;
const USAGE: u8 = 2;
const INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(name = "charvar", version, about = "Exact invariants of PGL(n) character varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute E, hqt, hxy or pp for rank n and genus g.
    Compute(ComputeArgs),
    /// Run a check suite.
    Check(CheckArgs),
    /// Count solutions of [A1,B1]...[Ag,Bg] = ξ in GL(2,q) or SL(2,q).
    Count(CountArgs),
    /// List or clear cached results.
    Cache(CacheArgs),
    /// Print the character table of GL(2,q) or SL(2,q) as JSON.
    Table(TableArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Oracle {
    Brute,
    Character,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Gl,
    Sl,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Gl => Family::GL,
            FamilyArg::Sl => Family::SL,
        }
    }
}

fn parse_kind(s: &str) -> Result<Kind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long, value_parser = parse_kind)]
    kind: Kind,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    #[arg(long)]
    g: u32,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Overrides CHARVAR_CACHE_DIR and ./.charvar-cache.
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// Neither read nor write the cache.
    #[arg(long)]
    no_cache: bool,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long, value_parser = parse_suite)]
    suite: Suite,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    #[arg(long)]
    g: u32,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct CountArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    q: u32,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    g: u32,
    /// Order of the scalar ζ in ξ = ζ·Id.
    #[arg(long, default_value_t = 1)]
    zeta_order: u64,
    #[arg(long, value_enum, default_value = "both")]
    oracle: Oracle,
    /// Also compare GL(2,q) counts at -Id with (q-1)^(2g) E_2(q).
    #[arg(long)]
    bridge: bool,
    #[arg(long, default_value_t = DEFAULT_BOUND)]
    bound: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct CacheOps {
    #[arg(long)]
    list: bool,
    #[arg(long)]
    clear: bool,
}

#[derive(Args)]
struct CacheArgs {
    #[command(flatten)]
    op: CacheOps,
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    q: u32,
    #[arg(long, default_value_t = DEFAULT_BOUND)]
    bound: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Compute(a) => compute(a),
        Command::Check(a) => check(a),
        Command::Count(a) => count(a),
        Command::Cache(a) => cache(a),
        Command::Table(a) => table(a),
    };
    ExitCode::from(code)
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json serializes")
}

fn error_code(e: &Error) -> u8 {
    match e {
        _ if e.is_falsification() => INTERNAL,
        Error::Io(_) | Error::InvalidArgument(_) => USAGE,
        Error::Oracle(
            OracleError::NotPrime(_)
            | OracleError::GroupTooLarge { .. }
            | OracleError::CentralElementUnavailable { .. }
            | OracleError::Invalid(_),
        ) => USAGE,
        _ => INTERNAL,
    }
}

fn compute(a: ComputeArgs) -> u8 {
    let n = a.n as usize;
    let mut engine = if a.no_cache {
        Engine::new()
    } else {
        let dir = cache_dir_from(a.cache_dir.as_deref());
        match DiskCache::open(&dir) {
            Ok(c) => Engine::with_cache(c),
            Err(e) => {
                eprintln!("warning: cache disabled ({}): {e}", dir.display());
                Engine::new()
            }
        }
    };
    match engine.compute(a.kind, n, a.g) {
        Ok(r) => {
            match a.format {
                Format::Text => println!("{}", r.polynomial.render()),
                Format::Json => print!("{}", r.to_document()),
            }
            SUCCESS
        }
        Err(e) => {
            let code = error_code(&e);
            if code == INTERNAL {
                match a.format {
                    Format::Text => println!("error: {e}"),
                    Format::Json => print!("{}", error_document(a.kind, n, a.g, &e)),
                }
            }
            eprintln!("error: {e}");
            code
        }
    }
}

fn check(a: CheckArgs) -> u8 {
    let mut engine = Engine::new();
    let rep = match engine.run_suite(a.suite, a.n as usize, a.g) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return error_code(&e);
        }
    };
    match a.format {
        Format::Json => {
            let v = json!({ "suite": a.suite.to_string(), "n": a.n, "g": a.g, "passed": rep.passed(), "checks": rep });
            println!("{}", pretty(&v));
        }
        Format::Text => {
            println!("suite {} n={} g={}", a.suite, a.n, a.g);
            for (name, entry) in rep.iter() {
                let tag = match entry.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Skipped => "SKIP",
                };
                println!("{tag} {name}: {}", entry.detail);
                if let Some(w) = &entry.witness {
                    println!("     witness: {w}");
                }
            }
            println!("result: {}", if rep.passed() { "pass" } else { "fail" });
        }
    }
    if rep.passed() {
        SUCCESS
    } else {
        FAILURE
    }
}

fn count(a: CountArgs) -> u8 {
    match run_count(&a) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            error_code(&e)
        }
    }
}

fn run_count(a: &CountArgs) -> Result<u8, Error> {
    let group = build_group_bounded(a.family.into(), a.q, a.bound)?;
    let xi = group.central_element(a.zeta_order)?;
    let cd = conjugacy_classes(&group);
    let brute = match a.oracle {
        Oracle::Brute | Oracle::Both => Some(tuple_counts(&group, &cd, a.g)?[cd.class_of[xi]].clone()),
        Oracle::Character => None,
    };
    let character = match a.oracle {
        Oracle::Character | Oracle::Both => {
            let t = character_table(&group, &cd)?;
            Some(frobenius_sums(&group, &cd, &t, a.g, xi)?.tuple_prediction)
        }
        Oracle::Brute => None,
    };
    let agreement = match (&brute, &character) {
        (Some(b), Some(c)) => Some(b == c),
        _ => None,
    };
    let bridge = if a.bridge {
        if !matches!(a.family, FamilyArg::Gl) || a.zeta_order != 2 {
            return Err(Error::InvalidArgument("--bridge needs --family gl and --zeta-order 2".into()));
        }
        Some(gl_bridge(&mut Engine::new(), a.q, a.g)?)
    } else {
        None
    };
    let xi_m = group.element(xi);
    match a.format {
        Format::Json => {
            let mut v = json!({
                "group": group.name(),
                "order": group.order(),
                "g": a.g,
                "zeta_order": a.zeta_order,
                "xi": xi_m.rows(),
                "brute": brute.as_ref().map(|b| b.to_string()),
                "character": character.as_ref().map(|c| c.to_string()),
                "agreement": agreement,
            });
            if let Some(b) = &bridge {
                v["bridge"] = b.to_json();
            }
            println!("{}", pretty(&v));
        }
        Format::Text => {
            println!("group: {} (order {})", group.name(), group.order());
            println!("xi: {:?}", xi_m);
            if let Some(b) = &brute {
                println!("brute: {b}");
            }
            if let Some(c) = &character {
                println!("character: {c}");
            }
            if let Some(ok) = agreement {
                println!("agreement={ok}");
            }
            if let Some(b) = &bridge {
                println!("bridge: tuples {} vs |PGL|(q-1)^(2g)E_2(q) = {}", b.tuple_count, b.predicted);
                println!("bridge holds={}", b.holds());
                println!("normalization: {}", b.normalization());
            }
        }
    }
    let ok = agreement.unwrap_or(true) && bridge.as_ref().is_none_or(|b| b.holds());
    Ok(if ok { SUCCESS } else { FAILURE })
}

fn cache(a: CacheArgs) -> u8 {
    let dir = cache_dir_from(a.cache_dir.as_deref());
    let result = DiskCache::open(&dir).and_then(|c| {
        if a.op.clear {
            let removed = c.clear()?;
            println!("removed {removed}");
        } else {
            for e in c.list()? {
                println!("{e}");
            }
        }
        Ok(())
    });
    match result {
        Ok(()) => SUCCESS,
        Err(e) => {
            eprintln!("error: cache directory {}: {e}", dir.display());
            USAGE
        }
    }
}

fn table(a: TableArgs) -> u8 {
    let run = || -> Result<serde_json::Value, Error> {
        let group = build_group_bounded(a.family.into(), a.q, a.bound)?;
        let cd = conjugacy_classes(&group);
        Ok(character_table(&group, &cd)?.to_json())
    };
    match run() {
        Ok(v) => {
            println!("{}", pretty(&v));
            SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            error_code(&e)
        }
    }
}
