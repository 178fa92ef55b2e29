mod checks;
mod formats;
mod report;
mod scenarios;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use prufer_core::algebra::Algebra;
use prufer_core::degen::check_rz;
use prufer_core::rep::{cokernel, direct_sum};
use prufer_core::Field;

use formats::{AnyAlgebra, FormatError, NamedHom, NamedRep};
use report::Report;

#[derive(Parser)]
#[command(name = "prufer", version, about = "Ladders of pushouts, self-extensions and degenerations of quiver representations")]
struct Cli {
    /// Write the JSON report to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Include the matrices of the modules and maps involved.
    #[arg(long, global = true)]
    emit_matrices: bool,
    /// Seed for randomized searches and suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Inputs {
    /// Algebra file.
    #[arg(long)]
    algebra: PathBuf,
    /// Module file; repeat for several modules.
    #[arg(long = "module")]
    modules: Vec<PathBuf>,
    /// Hom file for the first seed map.
    #[arg(long)]
    w: Option<PathBuf>,
    /// Hom file for the second seed map.
    #[arg(long)]
    v: Option<PathBuf>,
    #[arg(long, default_value_t = 4)]
    depth: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Build the ladder of a seed `w, v: U0 -> U1` and check its truncations.
    Ladder(Inputs),
    /// Build the ladders of `(w, v)` and `(v, w)` side by side.
    Chessboard(Inputs),
    /// Ext^1(M, N) for the first (and second) module; self-extensions are classified.
    Ext(Inputs),
    /// Degeneration certificate for `0 -> U -> X ⊕ U -> Y -> 0` given by
    /// `--w` (U -> X) and `--v` (the steering map U -> U).
    Degenerate(Inputs),
    /// Compare the cokernels of two monomorphisms `--w`, `--v`.
    DegenerateCokernels(Inputs),
    /// Decompose each module into indecomposables.
    Decompose(Inputs),
    /// Ladder of multiplication maps on the integers.
    Zladder {
        #[arg(long, allow_hyphen_values = true)]
        w: i64,
        #[arg(long, allow_hyphen_values = true)]
        v: i64,
        #[arg(long, default_value_t = 6)]
        depth: usize,
    },
    /// Run a built-in scenario.
    Example {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(scenarios::EXAMPLES))]
        name: String,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Run every scenario and invariant suite.
    Check,
}

/// Input problems: unreadable files, syntax errors, invalid objects.
#[derive(Debug, thiserror::Error)]
enum UsageError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
    #[error("{0}")]
    Missing(String),
}

fn read(path: &Path) -> Result<String, UsageError> {
    std::fs::read_to_string(path).map_err(|source| UsageError::Io { path: path.display().to_string(), source })
}

fn load<T>(path: &Path, parse: impl FnOnce(&str) -> Result<T, FormatError>) -> Result<T, UsageError> {
    let text = read(path)?;
    parse(&text).map_err(|source| UsageError::Format { path: path.display().to_string(), source })
}

struct Loaded<F: Field> {
    modules: Vec<NamedRep<F>>,
    w: Option<NamedHom<F>>,
    v: Option<NamedHom<F>>,
}

fn load_all<F: Field>(alg: &Arc<Algebra<F>>, inputs: &Inputs, r: &mut Report) -> Result<Loaded<F>, UsageError> {
    let mut modules = Vec::new();
    for p in &inputs.modules {
        let m = load(p, |t| formats::parse_module(alg, t))?;
        r.input(&format!("module {}", m.name), formats::emit_module(&m.name, &m.rep));
        modules.push(m);
    }
    let mut hom = |p: &Option<PathBuf>| -> Result<Option<NamedHom<F>>, UsageError> {
        let Some(p) = p else { return Ok(None) };
        let h = load(p, |t| formats::parse_hom(&modules, t))?;
        r.input(&format!("hom {}", h.name), formats::emit_hom(&h.name, &h.source, &h.target, &h.hom));
        Ok(Some(h))
    };
    let w = hom(&inputs.w)?;
    let v = hom(&inputs.v)?;
    Ok(Loaded { modules, w, v })
}

fn need<T>(x: Option<T>, what: &str) -> Result<T, UsageError> {
    x.ok_or_else(|| UsageError::Missing(format!("missing {what}")))
}

fn run_inputs<F: Field>(alg: &Arc<Algebra<F>>, which: &Command, inputs: &Inputs, r: &mut Report) -> Result<(), UsageError> {
    r.input("algebra", formats::emit_algebra(alg));
    r.input("depth", inputs.depth);
    let loaded = load_all(alg, inputs, r)?;
    let depth = inputs.depth;
    match which {
        Command::Ladder(_) | Command::Chessboard(_) | Command::DegenerateCokernels(_) => {
            let w = need(loaded.w, "--w")?.hom;
            let v = need(loaded.v, "--v")?.hom;
            match which {
                Command::Ladder(_) => checks::ladder_report(r, &w, &v, depth),
                Command::Chessboard(_) => checks::chessboard_report(r, &w, &v, depth),
                _ => checks::cokernel_report(r, &w, &v),
            }
        }
        Command::Ext(_) => {
            let m = need(loaded.modules.first(), "--module")?;
            let n = loaded.modules.get(1).unwrap_or(m);
            checks::ext_report(r, &m.rep, &n.rep, m.rep == n.rep);
        }
        Command::Decompose(_) => {
            if loaded.modules.is_empty() {
                return Err(UsageError::Missing("missing --module".into()));
            }
            for m in &loaded.modules {
                let mut sub = Report::new(&m.name, r.emits_matrices());
                checks::decompose_report(&mut sub, &m.rep);
                r.absorb(sub);
            }
        }
        Command::Degenerate(_) => {
            let g = need(loaded.w, "--w")?.hom;
            let phi = need(loaded.v, "--v")?.hom;
            if phi.source() != g.source() || phi.target() != g.source() {
                return Err(UsageError::Missing("--v must be an endomorphism of the source of --w".into()));
            }
            let (u, x) = (g.source().clone(), g.target().clone());
            let outcome = (|| -> report::Outcome {
                let ds = direct_sum(alg, &[x.clone(), u.clone()]).map_err(report::err)?;
                let mono = ds.column(&[g.clone(), phi.clone()]);
                let q = cokernel(&mono);
                let rz = check_rz(&u, &x, q.module(), &mono, q.projection()).map_err(report::err)?;
                r.module("Y", &rz.y);
                checks::rz_report(r, "sequence", &rz, depth)
            })();
            r.record("the sequence is a degeneration certificate", "check_rz", outcome);
        }
        Command::Zladder { .. } | Command::Example { .. } | Command::Check => unreachable!("no file inputs"),
    }
    Ok(())
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Ladder(_) => "ladder",
        Command::Chessboard(_) => "chessboard",
        Command::Ext(_) => "ext",
        Command::Degenerate(_) => "degenerate",
        Command::DegenerateCokernels(_) => "degenerate-cokernels",
        Command::Decompose(_) => "decompose",
        Command::Zladder { .. } => "zladder",
        Command::Example { .. } => "example",
        Command::Check => "check",
    }
}

fn run(cli: &Cli) -> Result<Report, UsageError> {
    let emit = cli.emit_matrices;
    let name = command_name(&cli.command);
    match &cli.command {
        Command::Zladder { w, v, depth } => {
            let mut r = Report::new(name, emit);
            r.input("w", *w);
            r.input("v", *v);
            r.input("depth", *depth);
            checks::zladder_report(&mut r, *w, *v, *depth);
            Ok(r)
        }
        Command::Example { name, depth } => Ok(scenarios::example(name, *depth, emit).expect("validated by clap")),
        Command::Check => Ok(scenarios::check(cli.seed, emit)),
        Command::Ladder(i)
        | Command::Chessboard(i)
        | Command::Ext(i)
        | Command::Degenerate(i)
        | Command::DegenerateCokernels(i)
        | Command::Decompose(i) => {
            let mut r = Report::new(name, emit);
            match load(&i.algebra, formats::parse_algebra)? {
                AnyAlgebra::Q(a) => run_inputs(&a, &cli.command, i, &mut r)?,
                AnyAlgebra::Gf(a) => run_inputs(&a, &cli.command, i, &mut r)?,
            }
            Ok(r)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let json = serde_json::to_string_pretty(&report).expect("report serializes");
    match &cli.out {
        Some(p) => {
            if let Err(e) = std::fs::write(p, json + "\n") {
                eprintln!("error: {}: {e}", p.display());
                return ExitCode::from(2);
            }
        }
        None => println!("{json}"),
    }
    let failures: Vec<&str> = report.failures().map(|c| c.claim.as_str()).collect();
    if failures.is_empty() {
        ExitCode::SUCCESS
    } else {
        for f in failures {
            eprintln!("failed: {f}");
        }
        ExitCode::from(1)
    }
}
