//! The `rbb` command-line harness.
//!
//! Exit codes: 0 when everything passes, 1 on a mathematical failure or a bad
//! cache file, 2 on usage errors.

use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::arith::Rational;
use crate::bernoulli::{check_entries, harmonic, parse_cache_text, BernoulliCache};
use crate::identities::report::{SweepSummary, CSV_HEADER};
use crate::identities::{self, Context, IdentitySpec, VerificationReport, DEFAULT_WARMUP_INDEX};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "rbb", version, about = "Exact Rota-Baxter and Bernoulli identity verifier")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a table of exact values.
    Table { kind: TableKind, max_n: usize },
    /// Verify one identity at one parameter tuple.
    Verify {
        identity: String,
        #[arg(allow_negative_numbers = true)]
        params: Vec<i64>,
        /// Bernoulli cache file.
        #[arg(long, env = "RBB_CACHE")]
        cache: Option<PathBuf>,
    },
    /// Verify identities over parameter ranges.
    Sweep(SweepArgs),
    /// Write or check a Bernoulli cache file.
    Cache { action: CacheAction, path: PathBuf, max_n: usize },
    /// List the identity catalog.
    List,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum TableKind {
    BernoulliNumbers,
    BernoulliPolys,
    Divided,
    PowerSums,
    Harmonic,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum CacheAction {
    Write,
    Check,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

#[derive(clap::Args, Debug)]
pub struct SweepArgs {
    /// Identity name, or "all".
    #[arg(long, default_value = "all")]
    pub identity: String,
    /// Inclusive parameter range, e.g. `i=1..10`. Repeatable.
    #[arg(long = "range", value_parser = parse_range)]
    pub ranges: Vec<(String, i64, i64)>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub workers: Option<u32>,
    /// Stop after the first failing report.
    #[arg(long)]
    pub fail_fast: bool,
    #[arg(long, env = "RBB_CACHE")]
    pub cache: Option<PathBuf>,
}

fn parse_range(s: &str) -> Result<(String, i64, i64), String> {
    let (name, bounds) = s.split_once('=').ok_or_else(|| format!("expected PARAM=LO..HI, got {s:?}"))?;
    let (lo, hi) = bounds.split_once("..").ok_or_else(|| format!("expected LO..HI, got {bounds:?}"))?;
    let lo: i64 = lo.trim().parse().map_err(|e| format!("bad lower bound {lo:?}: {e}"))?;
    let hi: i64 = hi.trim().parse().map_err(|e| format!("bad upper bound {hi:?}: {e}"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((name.trim().to_string(), lo, hi))
}

/// Parses `args` (program name first) and runs the command, writing to the
/// given streams. Returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Table { kind, max_n } => cmd_table(kind, max_n, out),
        Command::Verify { identity, params, cache } => cmd_verify(&identity, &params, cache.as_deref(), out, err),
        Command::Sweep(args) => cmd_sweep(&args, out, err),
        Command::Cache { action, path, max_n } => cmd_cache(action, &path, max_n, out, err),
        Command::List => cmd_list(out),
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(err, "rbb: {e}");
        EXIT_FAIL
    })
}

/// Runs with the process's arguments and standard streams.
pub fn run() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

pub fn cmd_table(kind: TableKind, max_n: usize, out: &mut dyn Write) -> io::Result<i32> {
    let cache = BernoulliCache::global();
    match kind {
        TableKind::BernoulliNumbers => {
            for n in 0..=max_n {
                writeln!(out, "B_{n} = {}", cache.number(n))?;
            }
        }
        TableKind::BernoulliPolys => {
            for n in 0..=max_n {
                writeln!(out, "B_{n}(x) = {}", cache.poly(n))?;
            }
        }
        TableKind::Divided => {
            for n in 1..=max_n {
                let number = cache.divided_number(n).expect("n >= 1");
                let poly = cache.divided_poly(n).expect("n >= 1");
                writeln!(out, "DB_{n} = {number}\tDB_{n}(x) = {poly}")?;
            }
        }
        TableKind::PowerSums => {
            for n in 0..=max_n {
                writeln!(out, "F_{n} = {}", cache.power_sum_poly(n).display_with("m"))?;
            }
        }
        TableKind::Harmonic => {
            for n in 1..=max_n {
                writeln!(out, "H_{n} = {}", harmonic(n as u64, 1))?;
            }
        }
    }
    Ok(EXIT_PASS)
}

fn load_context(cache: Option<&Path>, err: &mut dyn Write) -> io::Result<Result<Context, i32>> {
    let Some(path) = cache else {
        return Ok(Ok(Context::global()));
    };
    if !path.exists() {
        return Ok(Ok(Context::global()));
    }
    match BernoulliCache::load(path) {
        Ok(c) => Ok(Ok(Context::new(Arc::new(c)))),
        Err(e) => {
            writeln!(err, "rbb: cache {}: {e}", path.display())?;
            Ok(Err(EXIT_FAIL))
        }
    }
}

fn lookup_or_usage(name: &str, err: &mut dyn Write) -> io::Result<Option<&'static IdentitySpec>> {
    let spec = identities::lookup(name);
    if spec.is_none() {
        writeln!(err, "rbb: unknown identity {name:?}; run `rbb list` for the catalog")?;
    }
    Ok(spec)
}

pub fn cmd_verify(
    name: &str,
    params: &[i64],
    cache: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<i32> {
    let Some(spec) = lookup_or_usage(name, err)? else {
        return Ok(EXIT_USAGE);
    };
    if let Err(msg) = spec.check_params(params) {
        writeln!(err, "rbb: {msg}")?;
        return Ok(EXIT_USAGE);
    }
    let ctx = match load_context(cache, err)? {
        Ok(ctx) => ctx,
        Err(code) => return Ok(code),
    };
    match spec.run(&ctx, params) {
        Ok(report) => {
            writeln!(out, "{}", report.to_text())?;
            Ok(if report.pass { EXIT_PASS } else { EXIT_FAIL })
        }
        Err(e) => {
            writeln!(err, "rbb: {e}")?;
            Ok(EXIT_USAGE)
        }
    }
}

/// The identities and tuples a sweep covers, in output order.
pub fn sweep_plan(args: &SweepArgs) -> Result<Vec<(&'static IdentitySpec, Vec<i64>)>, String> {
    let specs: Vec<&'static IdentitySpec> = if args.identity == "all" {
        identities::catalog().iter().collect()
    } else {
        vec![identities::lookup(&args.identity).ok_or_else(|| format!("unknown identity {:?}", args.identity))?]
    };
    for (name, _, _) in &args.ranges {
        if !specs.iter().any(|s| s.params.contains(&name.as_str())) {
            return Err(format!("no selected identity has a parameter named {name:?}"));
        }
    }
    let mut plan = Vec::new();
    for spec in specs {
        let ranges: Vec<(i64, i64)> = spec
            .params
            .iter()
            .zip(spec.default_ranges)
            .map(|(p, &default)| {
                args.ranges.iter().rev().find(|(n, _, _)| n == p).map_or(default, |&(_, lo, hi)| (lo, hi))
            })
            .collect();
        plan.extend(spec.tuples(&ranges).into_iter().map(|t| (spec, t)));
    }
    Ok(plan)
}

fn render(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv_row(),
        Format::Text => report.to_text(),
    }
}

pub fn cmd_sweep(args: &SweepArgs, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let plan = match sweep_plan(args) {
        Ok(plan) => plan,
        Err(msg) => {
            writeln!(err, "rbb: {msg}")?;
            return Ok(EXIT_USAGE);
        }
    };
    let ctx = match load_context(args.cache.as_deref(), err)? {
        Ok(ctx) => ctx,
        Err(code) => return Ok(code),
    };
    let max_param = plan.iter().flat_map(|(_, t)| t.iter().copied()).max().unwrap_or(0) as usize;
    ctx.warm_up(DEFAULT_WARMUP_INDEX.max(3 * max_param + 8));

    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = args.workers {
        builder = builder.num_threads(w as usize);
    }
    let pool = builder.build().map_err(io::Error::other)?;

    if args.format == Format::Csv {
        writeln!(out, "{CSV_HEADER}")?;
    }
    // Chunks keep fail-fast responsive while output stays in plan order.
    let chunk = if args.fail_fast { pool.current_num_threads().max(1) * 4 } else { plan.len().max(1) };
    let mut reports = Vec::with_capacity(plan.len());
    let mut errors = 0usize;
    'outer: for batch in plan.chunks(chunk) {
        let results: Vec<_> = pool.install(|| batch.par_iter().map(|(spec, t)| spec.run(&ctx, t)).collect());
        for result in results {
            match result {
                Ok(report) => {
                    writeln!(out, "{}", render(&report, args.format))?;
                    let failed = !report.pass;
                    reports.push(report);
                    if failed && args.fail_fast {
                        break 'outer;
                    }
                }
                Err(e) => {
                    errors += 1;
                    writeln!(err, "rbb: {e}")?;
                    if args.fail_fast {
                        break 'outer;
                    }
                }
            }
        }
    }
    let summary = SweepSummary::from_reports(&reports);
    writeln!(err, "{}", summary.line())?;
    Ok(if summary.failed() == 0 && errors == 0 { EXIT_PASS } else { EXIT_FAIL })
}

pub fn cmd_cache(
    action: CacheAction,
    path: &Path,
    max_n: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<i32> {
    match action {
        CacheAction::Write => match BernoulliCache::global().save(path, max_n) {
            Ok(()) => {
                writeln!(out, "wrote B_0..B_{max_n} to {}", path.display())?;
                Ok(EXIT_PASS)
            }
            Err(e) => {
                writeln!(err, "rbb: {e}")?;
                Ok(EXIT_FAIL)
            }
        },
        CacheAction::Check => {
            let text = match std::fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => {
                    writeln!(err, "rbb: {}: {e}", path.display())?;
                    return Ok(EXIT_FAIL);
                }
            };
            let checked = parse_cache_text(&text).and_then(|numbers: Vec<Rational>| {
                check_entries(&numbers, max_n)?;
                Ok(numbers.len().min(max_n + 1))
            });
            match checked {
                Ok(n) => {
                    writeln!(out, "ok: {n} entries checked in {}", path.display())?;
                    Ok(EXIT_PASS)
                }
                Err(e) => {
                    writeln!(err, "rbb: {}: {e}", path.display())?;
                    Ok(EXIT_FAIL)
                }
            }
        }
    }
}

fn cmd_list(out: &mut dyn Write) -> io::Result<i32> {
    for spec in identities::catalog() {
        let ranges: Vec<String> =
            spec.params.iter().zip(spec.default_ranges).map(|(p, (lo, hi))| format!("{p}={lo}..{hi}")).collect();
        writeln!(out, "{:<30} {:<18} {:<32} {}", spec.name, spec.expected.as_str(), ranges.join(" "), spec.summary)?;
    }
    Ok(EXIT_PASS)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with(std::iter::once("rbb").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn tables() {
        let (code, out, _) = run_capture(&["table", "bernoulli-numbers", "4"]);
        assert_eq!(code, 0);
        assert_eq!(out, "B_0 = 1\nB_1 = -1/2\nB_2 = 1/6\nB_3 = 0\nB_4 = -1/30\n");
        let (_, out, _) = run_capture(&["table", "power-sums", "1"]);
        assert_eq!(out, "F_0 = m\nF_1 = 1/2*m^2 + 1/2*m\n");
        let (_, out, _) = run_capture(&["table", "harmonic", "3"]);
        assert_eq!(out, "H_1 = 1\nH_2 = 3/2\nH_3 = 11/6\n");
        let (_, out, _) = run_capture(&["table", "divided", "2"]);
        assert_eq!(out.lines().count(), 2);
        assert_eq!(run_capture(&["table", "fibonacci", "3"]).0, EXIT_USAGE);
    }

    #[test]
    fn verify_exit_codes() {
        let (code, out, _) = run_capture(&["verify", "miki", "4"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.starts_with("PASS miki(4): zero"));
        let (code, out, _) = run_capture(&["verify", "triple-product", "1", "1", "1"]);
        assert_eq!(code, 0);
        assert!(out.contains("constant: "));
        assert_eq!(run_capture(&["verify", "miki", "3"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["verify", "miki"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["verify", "no-such", "1"]).0, EXIT_USAGE);
    }

    #[test]
    fn range_parsing() {
        assert_eq!(parse_range("i=1..10").unwrap(), ("i".to_string(), 1, 10));
        assert!(parse_range("i=5..1").is_err());
        assert!(parse_range("i1..3").is_err());
    }

    #[test]
    fn sweep_nielsen_grid() {
        let (code, out, err) =
            run_capture(&["sweep", "--identity", "nielsen", "--range", "i=1..10", "--range", "j=1..10"]);
        assert_eq!(code, 0, "{err}");
        assert_eq!(out.lines().count(), 100);
        assert!(err.contains("summary: 100 checked, 100 passed, 0 failed"));
        let (code, _, _) = run_capture(&["sweep", "--identity", "nielsen", "--range", "q=1..2"]);
        assert_eq!(code, EXIT_USAGE);
    }
}
