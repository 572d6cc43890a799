//! Command-line front end. [`run`] takes the argument vector and output
//! streams and returns the process exit status: 0 on success, 1 when a
//! verification fails, 2 on a usage or input error.

pub mod cache;
pub mod suites;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::Value;

use crate::braid::BraidWord;
use crate::error::Result;
use crate::esystem::{build_solution, enumerate_solutions, SolutionRecord};
use crate::invariants::{jones_z, Family, InvariantEngine, InvariantRequest};
use cache::{Cache, CacheKey, CacheRecord};
use suites::{SkeinBases, SuiteReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Longest base word drawn by the randomized suites.
const MARKOV_MAX_LEN: usize = 8;
const SKEIN_MAX_LEN: usize = 6;

#[derive(Parser, Debug)]
#[command(name = "yhecke", version, about = "Exact Yokonuma-Hecke traces and link invariants")]
pub struct Cli {
    /// JSON-lines result cache.
    #[arg(long, global = true, env = "YHECKE_CACHE")]
    pub cache: Option<PathBuf>,
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List all E-system solutions for `d`, or build the one for `--subset`.
    Esystem {
        #[arg(long)]
        d: u32,
        #[arg(long, value_delimiter = ',')]
        subset: Option<Vec<u32>>,
    },
    /// Evaluate one invariant with formal `z`.
    Invariant {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 1)]
        d: u32,
        #[arg(long, value_delimiter = ',', default_value = "0")]
        subset: Vec<u32>,
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
    },
    /// The two-variable polynomial in `(u, z)`.
    Homflypt {
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
    },
    /// The one-variable specialization in `u`.
    Jones {
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
    },
    /// Framed invariant at `z = -1/((u+1)|D|)`.
    FramedJones {
        #[arg(long, default_value_t = 1)]
        d: u32,
        #[arg(long, value_delimiter = ',', default_value = "0")]
        subset: Vec<u32>,
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum)]
        what: VerifyWhat,
        #[arg(long, default_value_t = 2)]
        d: u32,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
    /// Decide whether two braids have the same invariant.
    Compare {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 1)]
        d: u32,
        #[arg(long, value_delimiter = ',', default_value = "0")]
        subset: Vec<u32>,
        #[arg(long, allow_hyphen_values = true)]
        braid_a: String,
        #[arg(long, allow_hyphen_values = true)]
        braid_b: String,
    },
    /// One braid per line in, one JSON object per line out, same order.
    Batch {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = FamilyArg::Classical)]
        family: FamilyArg,
        #[arg(long, default_value_t = 1)]
        d: u32,
        #[arg(long, value_delimiter = ',', default_value = "0")]
        subset: Vec<u32>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Framed,
    Classical,
    Singular,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Framed => Family::Framed,
            FamilyArg::Classical => Family::Classical,
            FamilyArg::Singular => Family::Singular,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyWhat {
    Relations,
    Skein,
    Markov,
    Quotients,
}

/// Parse `argv` (including the program name) and execute.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let ctx = Context { cache: cli.cache.as_ref().map(Cache::new), json: cli.json };
    match execute(&ctx, &cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

struct Context {
    cache: Option<Cache>,
    json: bool,
}

impl Context {
    /// Evaluate through the cache. Cache I/O problems are reported on `err`
    /// and otherwise ignored.
    fn evaluate(&self, eng: &mut InvariantEngine, req: &InvariantRequest, err: &mut dyn Write) -> Result<Value> {
        let key = CacheKey {
            family: req.family.to_string(),
            d: req.d,
            subset: canonical_subset(req.d, &req.subset)?,
            braid: req.braid.to_string(),
            z: req.z_value.as_ref().map(|z| z.to_string()),
        };
        if let Some(c) = &self.cache {
            match c.get(&key) {
                Ok(Some(hit)) => return Ok(hit.value),
                Ok(None) => {}
                Err(e) => {
                    let _ = writeln!(err, "warning: cache read failed: {e}");
                }
            }
        }
        let value = serde_json::to_value(eng.invariant(req)?.to_record()).expect("serializable");
        if let Some(c) = &self.cache {
            if let Err(e) = c.put(&CacheRecord::new(key, value.clone())) {
                let _ = writeln!(err, "warning: cache write failed: {e}");
            }
        }
        Ok(value)
    }

    fn emit(&self, v: &Value, out: &mut dyn Write) -> Result<()> {
        if self.json {
            writeln!(out, "{v}")?;
        } else {
            writeln!(out, "{}", v["value"].as_str().unwrap_or_default())?;
        }
        Ok(())
    }
}

fn canonical_subset(d: u32, subset: &[u32]) -> Result<Vec<u32>> {
    Ok(build_solution(d, subset)?.subset().to_vec())
}

fn request(braid: &str, family: Family, d: u32, subset: &[u32], z: Option<crate::scalars::RatFunc>) -> Result<InvariantRequest> {
    Ok(InvariantRequest { braid: BraidWord::parse(braid)?, family, d, subset: subset.to_vec(), z_value: z })
}

fn execute(ctx: &Context, cmd: &Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let mut eng = InvariantEngine::new();
    match cmd {
        Command::Esystem { d, subset } => {
            let sols = match subset {
                Some(s) => vec![build_solution(*d, s)?],
                None => enumerate_solutions(*d)?,
            };
            for s in &sols {
                if ctx.json {
                    writeln!(out, "{}", serde_json::to_string(&SolutionRecord::from(s)).expect("serializable"))?;
                } else {
                    writeln!(out, "{s}")?;
                }
            }
        }
        Command::Invariant { family, d, subset, braid } => {
            let v = ctx.evaluate(&mut eng, &request(braid, (*family).into(), *d, subset, None)?, err)?;
            ctx.emit(&v, out)?;
        }
        Command::Homflypt { braid } => {
            let v = ctx.evaluate(&mut eng, &request(braid, Family::Classical, 1, &[0], None)?, err)?;
            ctx.emit(&v, out)?;
        }
        Command::Jones { braid } => {
            let v = ctx.evaluate(&mut eng, &request(braid, Family::Classical, 1, &[0], Some(jones_z(1)))?, err)?;
            ctx.emit(&v, out)?;
        }
        Command::FramedJones { d, subset, braid } => {
            let size = build_solution(*d, subset)?.size();
            let v = ctx.evaluate(&mut eng, &request(braid, Family::Framed, *d, subset, Some(jones_z(size)))?, err)?;
            ctx.emit(&v, out)?;
        }
        Command::Compare { family, d, subset, braid_a, braid_b } => {
            let a = BraidWord::parse(braid_a)?;
            let b = BraidWord::parse(braid_b)?;
            let same = eng.compare_links(&a, &b, (*family).into(), *d, subset)?;
            if ctx.json {
                writeln!(out, "{}", serde_json::json!({ "equal": same }))?;
            } else {
                writeln!(out, "{}", if same { "equal" } else { "different" })?;
            }
        }
        Command::Verify { what, d, n, seed, samples } => {
            let report = match what {
                VerifyWhat::Relations => suites::relations_suite(*d, *n)?,
                VerifyWhat::Markov => suites::markov_suite(*d, *samples, MARKOV_MAX_LEN, *seed)?,
                VerifyWhat::Skein => suites::skein_suite(
                    *d,
                    *n,
                    SkeinBases::Random { samples: *samples, max_len: SKEIN_MAX_LEN, seed: *seed },
                )?,
                VerifyWhat::Quotients => suites::quotients_suite(*d, *n)?,
            };
            print_report(ctx, &report, out)?;
            return Ok(if report.passed() { EXIT_OK } else { EXIT_FAILED });
        }
        Command::Batch { file, family, d, subset } => return batch(ctx, file, (*family).into(), *d, subset, out, err),
    }
    Ok(EXIT_OK)
}

fn print_report(ctx: &Context, r: &SuiteReport, out: &mut dyn Write) -> Result<()> {
    if ctx.json {
        let v = serde_json::json!({
            "suite": r.name,
            "checks": r.checks,
            "passed": r.passed(),
            "failures": r.failures,
        });
        writeln!(out, "{v}")?;
        return Ok(());
    }
    writeln!(out, "{}: {} checks, {} failures", r.name, r.checks, r.failures.len())?;
    for f in r.failures.iter().take(20) {
        writeln!(out, "  FAIL {f}")?;
    }
    Ok(())
}

/// Cache hits are read first, misses are evaluated in parallel, and all
/// lines are written in input order. Blank lines and `#` comments are
/// skipped. Exit status is 2 if any line failed.
fn batch(
    ctx: &Context,
    file: &PathBuf,
    family: Family,
    d: u32,
    subset: &[u32],
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let text = std::fs::read_to_string(file)?;
    let subset = canonical_subset(d, subset)?;
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let key = |b: &BraidWord| CacheKey { family: family.to_string(), d, subset: subset.clone(), braid: b.to_string(), z: None };
    let mut slots: Vec<std::result::Result<Option<Value>, String>> = Vec::with_capacity(lines.len());
    for (_, l) in &lines {
        let hit = match (BraidWord::parse(l), &ctx.cache) {
            (Err(e), _) => Err(e.to_string()),
            (Ok(b), Some(c)) => Ok(c.get(&key(&b)).unwrap_or_else(|e| {
                let _ = writeln!(err, "warning: cache read failed: {e}");
                None
            })),
            (Ok(_), None) => Ok(None),
        };
        slots.push(hit.map(|h| h.map(|r| r.value)));
    }
    let computed: Vec<Option<std::result::Result<Value, String>>> = lines
        .par_iter()
        .zip(&slots)
        .map_init(InvariantEngine::new, |eng, ((_, l), slot)| match slot {
            Ok(None) => Some(
                request(l, family, d, &subset, None)
                    .and_then(|req| eng.invariant(&req))
                    .map(|v| serde_json::to_value(v.to_record()).expect("serializable"))
                    .map_err(|e| e.to_string()),
            ),
            _ => None,
        })
        .collect();
    let mut failed = false;
    for (((lineno, braid), slot), fresh) in lines.iter().zip(slots).zip(computed) {
        let res = match (slot, fresh) {
            (Ok(Some(v)), _) => Ok(v),
            (Err(e), _) => Err(e),
            (Ok(None), Some(Ok(v))) => {
                if let (Some(c), Ok(b)) = (&ctx.cache, BraidWord::parse(braid)) {
                    if let Err(e) = c.put(&CacheRecord::new(key(&b), v.clone())) {
                        let _ = writeln!(err, "warning: cache write failed: {e}");
                    }
                }
                Ok(v)
            }
            (Ok(None), Some(Err(e))) => Err(e),
            (Ok(None), None) => unreachable!("misses are always computed"),
        };
        let line = match res {
            Ok(mut v) => {
                v["line"] = Value::from(*lineno);
                v["braid"] = Value::from(*braid);
                v
            }
            Err(e) => {
                failed = true;
                serde_json::json!({ "line": lineno, "braid": braid, "error": e })
            }
        };
        writeln!(out, "{line}")?;
    }
    Ok(if failed { EXIT_USAGE } else { EXIT_OK })
}
