//! Command-line front end: run operations, verify guarantees, export SVG.
//!
//! Exit codes: `0` success, `1` unreadable or invalid input (including usage errors),
//! `2` internal invariant failure or a failed verification check.

pub mod lpr;
pub mod svg;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::arrangement::BooleanOp;
use crate::exact::Region;
use crate::setops::{apply_checked, Mode, OpRequest};
use crate::verify::{verify_op_full, verify_result, Check};

pub use lpr::{parse_region, write_region, Coordinates, ParseError};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_INVARIANT: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "latbool", version, about = "Boolean operations on lattice regions with certified roundings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Intersection A ∩ B.
    Intersect(RunArgs),
    /// Union A ∪ B.
    Union(RunArgs),
    /// Difference A \ B.
    Diff(RunArgs),
    /// Check every guarantee on one pair, a result file, or a directory of pairs.
    Verify(VerifyArgs),
    /// Draw regions as layers over the lattice grid.
    Svg(SvgArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    Inner,
    Outer,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Exact => Mode::Exact,
            ModeArg::Inner => Mode::Inner,
            ModeArg::Outer => Mode::Outer,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OpArg {
    Intersect,
    Union,
    Diff,
}

impl From<OpArg> for BooleanOp {
    fn from(o: OpArg) -> BooleanOp {
        match o {
            OpArg::Intersect => BooleanOp::Intersection,
            OpArg::Union => BooleanOp::Union,
            OpArg::Diff => BooleanOp::Difference,
        }
    }
}

#[derive(clap::Args, Debug)]
pub struct RunArgs {
    #[arg(long, value_enum)]
    pub mode: ModeArg,
    pub a: PathBuf,
    pub b: PathBuf,
    #[arg(short, long)]
    pub out: PathBuf,
}

#[derive(clap::Args, Debug)]
pub struct VerifyArgs {
    /// Directory of `<name>.a.lpr` / `<name>.b.lpr` pairs.
    #[arg(long, conflicts_with_all = ["a", "b", "against"])]
    pub batch: Option<PathBuf>,
    #[arg(required_unless_present = "batch")]
    pub a: Option<PathBuf>,
    #[arg(required_unless_present = "batch")]
    pub b: Option<PathBuf>,
    /// Operation to check; all three when omitted.
    #[arg(long, value_enum)]
    pub op: Option<OpArg>,
    /// Result file to check instead of recomputing the roundings.
    #[arg(long, requires_all = ["mode", "op"])]
    pub against: Option<PathBuf>,
    /// Mode the `--against` file claims to be.
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
}

#[derive(clap::Args, Debug)]
pub struct SvgArgs {
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
    #[arg(short, long)]
    pub out: PathBuf,
}

/// An error that ends a command, with its exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INPUT, message: message.into() }
    }
}

fn read_region(path: &Path, coords: Coordinates) -> Result<Region, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    parse_region(&text, coords).map_err(|e| Failure::input(format!("{}:{e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

/// Parses `args` (program name first) and runs the command, writing reports to `out` and
/// diagnostics to `err`. Returns the process exit code.
pub fn main_from<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Intersect(args) => run(BooleanOp::Intersection, &args, out),
        Command::Union(args) => run(BooleanOp::Union, &args, out),
        Command::Diff(args) => run(BooleanOp::Difference, &args, out),
        Command::Verify(args) => verify(&args, out),
        Command::Svg(args) => svg_command(&args),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "latbool: {}", f.message);
            f.code
        }
    }
}

fn run(op: BooleanOp, args: &RunArgs, out: &mut dyn Write) -> Result<u8, Failure> {
    let a = read_region(&args.a, Coordinates::Integer)?;
    let b = read_region(&args.b, Coordinates::Integer)?;
    let req = OpRequest { op, mode: args.mode.into(), a, b };
    let (output, stats) = apply_checked(&req).map_err(|e| Failure { code: EXIT_INVARIANT, message: e.to_string() })?;
    write_file(&args.out, &write_region(output.region()))?;
    let _ = writeln!(
        out,
        "n={} k={} h={} |P|={} |out|={}",
        stats.n, stats.k, stats.h, stats.exact_vertices, stats.output_vertices
    );
    Ok(EXIT_OK)
}

fn report(out: &mut String, label: &str, checks: &[Check]) -> bool {
    use std::fmt::Write as _;
    let mut ok = true;
    for c in checks {
        match &c.outcome {
            Ok(()) => {
                let _ = writeln!(out, "PASS {label} [{}] {}", c.criterion as u8, c.property);
            }
            Err(w) => {
                ok = false;
                let _ = writeln!(out, "FAIL {label} [{}] {}: {w}", c.criterion as u8, c.property);
            }
        }
    }
    ok
}

fn ops_for(op: Option<OpArg>) -> Vec<BooleanOp> {
    match op {
        Some(o) => vec![o.into()],
        None => vec![BooleanOp::Intersection, BooleanOp::Union, BooleanOp::Difference],
    }
}

/// All checks for one pair; returns the report text and whether everything passed.
fn verify_pair(name: &str, a: &Region, b: &Region, ops: &[BooleanOp]) -> (String, bool) {
    use std::fmt::Write as _;
    let mut text = String::new();
    let mut ok = true;
    for &op in ops {
        let label = if name.is_empty() { op.name().to_string() } else { format!("{name} {}", op.name()) };
        let (sandwich, checks) = verify_op_full(a, b, op);
        ok &= report(&mut text, &label, &checks);
        if let Some(s) = sandwich {
            if s.inner == *s.exact.region() && s.outer == *s.exact.region() {
                let _ = writeln!(text, "NOTE {label} inner = exact = outer");
            }
        }
    }
    (text, ok)
}

fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<u8, Failure> {
    if let Some(dir) = &args.batch {
        return verify_batch(dir, args.op, out);
    }
    let (Some(pa), Some(pb)) = (&args.a, &args.b) else {
        return Err(Failure::input("verify needs A and B, or --batch DIR"));
    };
    let a = read_region(pa, Coordinates::Integer)?;
    let b = read_region(pb, Coordinates::Integer)?;
    let (text, ok) = if let Some(path) = &args.against {
        let (Some(op), Some(mode)) = (args.op, args.mode) else {
            return Err(Failure::input("--against needs --op and --mode"));
        };
        let mode: Mode = mode.into();
        let coords = if mode == Mode::Exact { Coordinates::Rational } else { Coordinates::Integer };
        let result = read_region(path, coords)?;
        let op: BooleanOp = op.into();
        let mut text = String::new();
        let ok =
            report(&mut text, &format!("{} {}", op.name(), mode.name()), &verify_result(&a, &b, op, mode, &result));
        (text, ok)
    } else {
        verify_pair("", &a, &b, &ops_for(args.op))
    };
    let _ = out.write_all(text.as_bytes());
    let _ = writeln!(out, "{}", if ok { "all checks passed" } else { "some checks failed" });
    Ok(if ok { EXIT_OK } else { EXIT_INVARIANT })
}

fn verify_batch(dir: &Path, op: Option<OpArg>, out: &mut dyn Write) -> Result<u8, Failure> {
    let entries = fs::read_dir(dir).map_err(|e| Failure::input(format!("{}: {e}", dir.display())))?;
    let mut names: Vec<String> = entries
        .filter_map(|e| e.ok())
        .filter_map(|e| e.file_name().to_str().and_then(|n| n.strip_suffix(".a.lpr")).map(str::to_string))
        .collect();
    names.sort();
    if names.is_empty() {
        return Err(Failure::input(format!("{}: no `<name>.a.lpr` files", dir.display())));
    }
    let ops = ops_for(op);
    let results: Vec<Result<(String, bool), Failure>> = names
        .par_iter()
        .map(|name| {
            let a = read_region(&dir.join(format!("{name}.a.lpr")), Coordinates::Integer)?;
            let b = read_region(&dir.join(format!("{name}.b.lpr")), Coordinates::Integer)?;
            Ok(verify_pair(name, &a, &b, &ops))
        })
        .collect();
    let (mut failed, mut unreadable) = (0, 0);
    for r in results {
        match r {
            Ok((text, ok)) => {
                let _ = out.write_all(text.as_bytes());
                failed += usize::from(!ok);
            }
            Err(f) => {
                let _ = writeln!(out, "ERROR {}", f.message);
                unreadable += 1;
            }
        }
    }
    let _ = writeln!(out, "cases={} failed={failed} unreadable={unreadable}", names.len());
    Ok(if unreadable > 0 {
        EXIT_INPUT
    } else if failed > 0 {
        EXIT_INVARIANT
    } else {
        EXIT_OK
    })
}

fn svg_command(args: &SvgArgs) -> Result<u8, Failure> {
    let layers = args
        .inputs
        .iter()
        .map(|p| {
            let name = p.file_name().map_or_else(|| p.display().to_string(), |n| n.to_string_lossy().into_owned());
            Ok((name, read_region(p, Coordinates::Rational)?))
        })
        .collect::<Result<Vec<_>, Failure>>()?;
    write_file(&args.out, &svg::render(&layers))?;
    Ok(EXIT_OK)
}
