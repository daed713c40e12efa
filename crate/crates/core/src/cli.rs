//! The `nilrep` command line.

use std::io::Write;
use std::ops::RangeInclusive;
use std::time::Duration;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::coadjoint::{build_m, generic_functional, stabilizer, Assignment, Functional};
use crate::criterion::{
    check_irreducible_with, m5_closed_forms, parse_m_range, theorem_sweep, ClosedFormCheck, Mode, SweepRow, Verdict,
};
use crate::exact_arith::{parse_rational, Variable};
use crate::lie_core::{construct_free2, LieAlgebra};
use crate::schrodinger::checks::{cell_indicator_system, run_all, seed_from_env};
use crate::schrodinger::gram_csv;

#[derive(Debug, Parser)]
#[command(name = "nilrep", version, about = "Coadjoint stabilizers and lattice irreducibility for free step-two nilpotent Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Structure constants of f_{m,2}.
    Construct(Common),
    /// The skew matrix M(λ) = [λ([X_i, X_j])].
    Mmatrix(Functionals),
    /// Nullspace of M(λ): the center plus normalized extra vectors.
    Stabilizer(Functionals),
    /// Irreducibility of the lattice restriction.
    Criterion(CriterionArgs),
    /// Generic verdict for every m in a range.
    Sweep(SweepArgs),
    /// Compare the m = 5 closed forms with the reference strings.
    #[command(name = "example-m5")]
    ExampleM5(FormatOnly),
    /// Finite-grid checks of the representation operators.
    #[command(name = "rep-check")]
    RepCheck(RepCheckArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct FormatOnly {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Args)]
struct Common {
    /// Number of generators.
    #[arg(long)]
    m: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Args)]
struct Functionals {
    #[command(flatten)]
    common: Common,
    /// Numeric functional, e.g. `l12=1,l13=-2/3`; unnamed coordinates are 0.
    #[arg(long)]
    numeric: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Expect {
    Irreducible,
    Reducible,
    Degenerate,
    /// Odd m irreducible, even m reducible (sweep only).
    Parity,
}

#[derive(Debug, Args)]
struct CriterionArgs {
    #[command(flatten)]
    functional: Functionals,
    #[arg(long, value_enum)]
    expect: Option<Expect>,
    /// Specialize the generic stabilizer instead of solving at the point.
    #[arg(long)]
    via_generic: bool,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum)]
    expect: Option<Expect>,
    /// Per-m time limit.
    #[arg(long, default_value_t = 120_000)]
    timeout_ms: u64,
    /// Report measured milliseconds instead of 0.
    #[arg(long)]
    timing: bool,
}

#[derive(Debug, Args)]
struct RepCheckArgs {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write the Gram matrix of the N = L = 8 Gabor system here as CSV.
    #[arg(long)]
    gram_csv: Option<std::path::PathBuf>,
}

struct Usage(String);

fn usage(msg: impl Into<String>) -> Usage {
    Usage(msg.into())
}

fn single_m(s: &str) -> Result<LieAlgebra, Usage> {
    let m: usize = s.trim().parse().map_err(|_| usage(format!("--m expects an integer, got `{s}`")))?;
    construct_free2(m).map_err(|e| usage(e.to_string()))
}

fn functional(alg: &LieAlgebra, numeric: Option<&str>) -> Result<Functional, Usage> {
    let Some(src) = numeric else {
        return Ok(generic_functional(alg));
    };
    let space = alg.var_space();
    let mut a = Assignment::new();
    for item in src.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (name, value) = item.split_once('=').ok_or_else(|| usage(format!("expected name=value, got `{item}`")))?;
        let idx = space.lookup(name.trim()).ok_or_else(|| usage(format!("unknown coordinate `{}`", name.trim())))?;
        let q = parse_rational(value).ok_or_else(|| usage(format!("`{value}` is not a rational number")))?;
        a.insert(space.vars()[idx], q);
    }
    Ok(Functional::from_assignment(alg, &a))
}

fn json<T: Serialize>(out: &mut dyn Write, v: &T) -> std::io::Result<()> {
    writeln!(out, "{}", serde_json::to_string(v).expect("serializable"))
}

fn expected_verdict(e: Expect) -> Option<Verdict> {
    match e {
        Expect::Irreducible => Some(Verdict::Irreducible),
        Expect::Reducible => Some(Verdict::Reducible),
        Expect::Degenerate => Some(Verdict::Degenerate),
        Expect::Parity => None,
    }
}

fn construct(args: &Common, out: &mut dyn Write) -> Result<i32, Usage> {
    let alg = single_m(&args.m)?;
    let j = alg.to_json();
    let res = match args.format {
        Format::Json => json(out, &j),
        Format::Text => (|| {
            writeln!(out, "m={} n={} derived_dim={}", j.m, j.n, j.derived_dim)?;
            let ix = alg.index();
            for b in &j.brackets {
                writeln!(
                    out,
                    "[{},{}] = {} * {}",
                    basis_name(ix.label(b.i - 1)),
                    basis_name(ix.label(b.j - 1)),
                    b.c,
                    basis_name(ix.label(b.k - 1))
                )?;
            }
            Ok(())
        })(),
    };
    res.expect("write to output");
    Ok(0)
}

fn basis_name(v: Variable) -> String {
    match v {
        Variable::Center(i, j) => format!("Z{i}{j}"),
        Variable::Generator(i) => format!("Z{i}"),
    }
}

#[derive(Serialize)]
struct MatrixJson {
    n: usize,
    rows: Vec<Vec<String>>,
}

fn mmatrix(args: &Functionals, out: &mut dyn Write) -> Result<i32, Usage> {
    let alg = single_m(&args.common.m)?;
    let lam = functional(&alg, args.numeric.as_deref())?;
    let m = build_m(&alg, &lam);
    let rows: Vec<Vec<String>> = m.rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
    match args.common.format {
        Format::Json => json(out, &MatrixJson { n: m.dim(), rows }),
        Format::Text => rows.iter().try_for_each(|r| writeln!(out, "[{}]", r.join(", "))),
    }
    .expect("write to output");
    Ok(0)
}

fn stabilizer_cmd(args: &Functionals, out: &mut dyn Write) -> Result<i32, Usage> {
    let alg = single_m(&args.common.m)?;
    let lam = functional(&alg, args.numeric.as_deref())?;
    let st = stabilizer(&alg, &lam).to_json();
    match args.common.format {
        Format::Json => json(out, &st),
        Format::Text => (|| {
            writeln!(out, "center_dim={} extra={} dim={}", st.center_dim, st.extra.len(), st.center_dim + st.extra.len())?;
            for (i, v) in st.extra.iter().enumerate() {
                writeln!(out, "extra[{}] = ({})", i + 1, v.join(", "))?;
            }
            Ok(())
        })(),
    }
    .expect("write to output");
    Ok(0)
}

fn criterion_cmd(args: &CriterionArgs, out: &mut dyn Write) -> Result<i32, Usage> {
    if args.expect == Some(Expect::Parity) {
        return Err(usage("--expect parity applies to sweep only"));
    }
    let alg = single_m(&args.functional.common.m)?;
    let lam = functional(&alg, args.functional.numeric.as_deref())?;
    let mode = if args.via_generic { Mode::ViaGeneric } else { Mode::Direct };
    let r = check_irreducible_with(&alg, &lam, mode);
    match args.functional.common.format {
        Format::Json => json(out, &r),
        Format::Text => (|| {
            writeln!(
                out,
                "verdict={} tail_dimQ={} required_dim={} stab_dim={}",
                r.verdict, r.tail_dim_q, r.required_dim, r.stab_dim
            )?;
            for (i, v) in r.witness.tail.iter().enumerate() {
                writeln!(out, "tail[{}] = ({})", i + 1, v.join(", "))?;
            }
            if !r.notes.is_empty() {
                writeln!(out, "notes: {}", r.notes)?;
            }
            Ok(())
        })(),
    }
    .expect("write to output");
    Ok(match args.expect.and_then(expected_verdict) {
        Some(v) if v != r.verdict => 1,
        _ => 0,
    })
}

#[derive(Serialize)]
struct SweepJson {
    rows: Vec<SweepRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed_forms_m5: Option<Vec<ClosedFormCheck>>,
}

fn sweep_cmd(args: &SweepArgs, out: &mut dyn Write) -> Result<i32, Usage> {
    let range: RangeInclusive<usize> =
        parse_m_range(&args.common.m).ok_or_else(|| usage(format!("--m expects INT or A..B, got `{}`", args.common.m)))?;
    if *range.start() < 2 {
        return Err(usage("m must be at least 2"));
    }
    let mut rows = theorem_sweep(range.clone(), Some(Duration::from_millis(args.timeout_ms)));
    if !args.timing {
        rows.iter_mut().for_each(|r| r.ms = 0);
    }
    let closed = range.contains(&5).then(m5_closed_forms);
    match args.common.format {
        Format::Json => json(out, &SweepJson { rows: rows.clone(), closed_forms_m5: closed }),
        Format::Text => (|| {
            for r in &rows {
                writeln!(out, "{}", r.to_text(args.timing))?;
            }
            if let Some(c) = &closed {
                let parts: Vec<String> = c.iter().map(|x| format!("alpha{}={}", x.k, x.matches)).collect();
                writeln!(out, "closed_forms m=5 {}", parts.join(" "))?;
            }
            Ok(())
        })(),
    }
    .expect("write to output");
    let ok = match args.expect {
        None => true,
        Some(Expect::Parity) => rows.iter().all(SweepRow::matches_parity),
        Some(e) => rows.iter().all(|r| r.verdict == expected_verdict(e)),
    };
    Ok(if ok { 0 } else { 1 })
}

fn example_m5(args: &FormatOnly, out: &mut dyn Write) -> i32 {
    let checks = m5_closed_forms();
    match args.format {
        Format::Json => json(out, &checks),
        Format::Text => checks.iter().try_for_each(|c| {
            writeln!(out, "alpha{} = {}", c.k, c.computed)?;
            writeln!(out, "  reference = {}", c.reference)?;
            writeln!(out, "  match={}", c.matches)
        }),
    }
    .expect("write to output");
    if checks.iter().all(|c| c.matches) {
        0
    } else {
        1
    }
}

fn rep_check(args: &RepCheckArgs, out: &mut dyn Write) -> Result<i32, Usage> {
    let results = run_all(seed_from_env());
    match args.format {
        Format::Json => json(out, &results),
        Format::Text => results.iter().try_for_each(|r| writeln!(out, "{}", r.to_text())),
    }
    .expect("write to output");
    if let Some(path) = &args.gram_csv {
        let (_, _, sys) = cell_indicator_system(8);
        std::fs::write(path, gram_csv(&sys)).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(if results.iter().all(|r| r.pass) { 0 } else { 1 })
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code: 0 success, 1 verdict or reference mismatch, 2 usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    2
                }
            };
        }
    };
    let res = match &cli.command {
        Command::Construct(a) => construct(a, out),
        Command::Mmatrix(a) => mmatrix(a, out),
        Command::Stabilizer(a) => stabilizer_cmd(a, out),
        Command::Criterion(a) => criterion_cmd(a, out),
        Command::Sweep(a) => sweep_cmd(a, out),
        Command::ExampleM5(a) => Ok(example_m5(a, out)),
        Command::RepCheck(a) => rep_check(a, out),
    };
    match res {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}\n");
            let _ = write!(err, "{}", Cli::command().render_usage());
            let _ = writeln!(err);
            2
        }
    }
}
