use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use unispec::bounds::bounds_report;
use unispec::constructions::{
    attach_edge, coalesce, disjoint_union, generate, parse_sizes, pendant_attach,
    verify_closed_form, Operation, PartSizeProfile,
};
use unispec::eigen::eigen_spectrum;
use unispec::exact::{
    distance_table, enumerate_exact_cycles_with_budget, exact_distance, exact_girth,
    odd_exact_girth,
};
use unispec::io::{emit_hg, parse_hg};
use unispec::report::{fmt_f64, Report, Status};
use unispec::verify::{verify_hypergraph, verify_profile_log, verify_random, Suite, VerifyLog};
use unispec::{char_poly, Hypergraph, UnifiedMatrix, DEFAULT_BUDGET};

/// Unified matrices, spectra and exact-walk structure of hypergraphs.
#[derive(Parser)]
#[command(name = "unispec", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the edge index set with row numbers.
    Index { file: PathBuf },
    /// Print the unified matrix.
    Matrix {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Triplet)]
        format: MatrixFormat,
    },
    /// Eigenvalues grouped with multiplicities.
    Spectrum { file: PathBuf },
    /// Exact characteristic polynomial and determinant.
    Charpoly { file: PathBuf },
    /// Exact girth and odd exact girth.
    Girth { file: PathBuf },
    /// Exact distance between two vertices, or the full table as CSV.
    Distance {
        file: PathBuf,
        u: Option<usize>,
        v: Option<usize>,
    },
    /// Exact diameter; exit 2 when not exactly connected.
    Diameter { file: PathBuf },
    /// List exact cycles up to a length.
    Cycles {
        file: PathBuf,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
    },
    /// Run assertion suites on a file, a profile or a seeded random corpus.
    Verify {
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// COUNT MAX_VERTICES SEED
        #[arg(long, num_args = 3, value_names = ["COUNT", "MAX_VERTICES", "SEED"])]
        random: Option<Vec<u64>>,
        /// Comma-separated part sizes for the closed-form suite.
        #[arg(long)]
        profile: Option<String>,
        #[arg(long, conflicts_with = "path")]
        cycle: bool,
        #[arg(long)]
        path: bool,
        /// Treat UNVERIFIED checks as failures.
        #[arg(long)]
        strict: bool,
    },
    /// Generate a unified cycle or path from a part-size profile.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        #[arg(long)]
        profile: String,
        /// Write the hypergraph here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply a construction and check its polynomial identity.
    Op {
        #[command(subcommand)]
        op: OpCommand,
    },
    /// Evaluate every eigenvalue bound as a table.
    Bounds {
        file: PathBuf,
        #[arg(long)]
        strict: bool,
    },
}

#[derive(Subcommand)]
enum OpCommand {
    /// Disjoint union of two hypergraphs.
    Union {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Attach a pendant 2-edge at a vertex.
    Pendant {
        file: PathBuf,
        #[arg(long)]
        at: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Identify vertex `at` of A with vertex `with` of B.
    Coalesce {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        at: usize,
        #[arg(long)]
        with: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Add the edge S ∪ {u, v} with `size` fresh vertices S.
    Attach {
        file: PathBuf,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
        #[arg(long, default_value_t = 1)]
        size: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixFormat {
    Triplet,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Ucycle,
    Upath,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Identities,
    Elementary,
    ClosedForm,
    Operations,
    Bounds,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Identities => Suite::Identities,
            SuiteArg::Elementary => Suite::Elementary,
            SuiteArg::ClosedForm => Suite::ClosedForm,
            SuiteArg::Operations => Suite::Operations,
            SuiteArg::Bounds => Suite::Bounds,
            SuiteArg::All => Suite::All,
        }
    }
}

/// A command's printable output and exit status.
struct Outcome {
    text: String,
    code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }

    fn checked(text: String, failed: bool) -> Self {
        Outcome {
            text,
            code: u8::from(failed),
        }
    }
}

/// Usage and applicability errors, reported with exit status 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

type CmdResult = Result<Outcome, Usage>;

fn budget() -> Result<u64, Usage> {
    match std::env::var("US_BUDGET") {
        Ok(v) => v.trim().parse().map_err(|_| {
            Usage(format!(
                "US_BUDGET must be a non-negative integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn load(path: &Path) -> Result<Hypergraph, Usage> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    parse_hg(&text).map_err(|e| Usage(format!("{}: {e}", path.display())))
}

fn profile_of(sizes: &str, cyclic: bool) -> Result<PartSizeProfile, Usage> {
    let sizes = parse_sizes(sizes)?;
    Ok(if cyclic {
        PartSizeProfile::cycle(sizes)?
    } else {
        PartSizeProfile::path(sizes)?
    })
}

fn cmd_index(h: &Hypergraph) -> String {
    let u = UnifiedMatrix::build(h);
    let mut out = format!("k={}\n", u.order());
    for (i, p) in u.index().parts().iter().enumerate() {
        let _ = writeln!(out, "{i}\t{p}");
    }
    out
}

fn cmd_matrix(h: &Hypergraph, format: MatrixFormat) -> String {
    let u = UnifiedMatrix::build(h);
    match format {
        MatrixFormat::Triplet => format!("k={}\n{}", u.order(), u.to_triplets()),
        MatrixFormat::Csv => u.to_csv(),
    }
}

fn cmd_spectrum(h: &Hypergraph) -> CmdResult {
    let u = UnifiedMatrix::build(h);
    let s = eigen_spectrum(u.matrix())?;
    let mut r = Report::new();
    r.value("k", u.order());
    r.value("tolerance", fmt_f64(s.tolerance()));
    r.value("distinct", s.distinct_count());
    for &(value, mult) in s.groups() {
        r.value(
            "eigenvalue",
            format!("{} multiplicity={mult}", fmt_f64(value)),
        );
    }
    Ok(Outcome::ok(r.to_string()))
}

fn cmd_charpoly(h: &Hypergraph) -> CmdResult {
    let u = UnifiedMatrix::build(h);
    let p = char_poly(u.matrix())?;
    let (pos, neg) = p.sign_counts();
    let mut r = Report::new();
    r.value("k", u.order());
    r.value("charpoly", &p);
    r.value("coefficients", p.to_coefficient_list());
    r.value("det", p.determinant());
    r.value("positive_eigenvalues", pos);
    r.value("negative_eigenvalues", neg);
    r.value("zero_multiplicity", p.zero_multiplicity());
    Ok(Outcome::ok(r.to_string()))
}

fn show(x: Option<usize>) -> String {
    x.map_or_else(|| "none".to_string(), |v| v.to_string())
}

fn cmd_girth(h: &Hypergraph) -> CmdResult {
    let mut r = Report::new();
    r.value("girth", show(exact_girth(h)?));
    r.value("odd_girth", show(odd_exact_girth(h)?));
    Ok(Outcome::ok(r.to_string()))
}

fn cmd_distance(h: &Hypergraph, u: Option<usize>, v: Option<usize>) -> CmdResult {
    match (u, v) {
        (Some(u), Some(v)) => Ok(Outcome::ok(format!(
            "distance {u} {v} = {}\n",
            exact_distance(h, u, v)?
        ))),
        (None, None) => Ok(Outcome::ok(distance_table(h)?.to_csv())),
        _ => Err(Usage("give both vertices or neither".into())),
    }
}

fn cmd_diameter(h: &Hypergraph) -> CmdResult {
    match distance_table(h)?.diameter() {
        Some(d) => Ok(Outcome::ok(format!("diameter={d}\n"))),
        None => Err(Usage(
            "hypergraph is not exactly connected; the exact diameter is undefined".into(),
        )),
    }
}

fn cmd_cycles(h: &Hypergraph, max_len: usize) -> CmdResult {
    let cycles = enumerate_exact_cycles_with_budget(h, max_len, budget()?)?;
    let mut out = format!(
        "max_len={max_len}\ncount={}\n",
        cycles.iter().map(|c| c.weight).sum::<u64>()
    );
    for c in &cycles {
        let _ = writeln!(out, "cycle {} : {c}", c.len());
    }
    Ok(Outcome::ok(out))
}

fn finish_verify(log: VerifyLog, strict: bool) -> Outcome {
    let failed = !log.passed() || (strict && log.count(Status::Unverified) > 0);
    Outcome::checked(log.to_string(), failed)
}

fn cmd_verify(
    file: Option<PathBuf>,
    suite: Suite,
    random: Option<Vec<u64>>,
    profile: Option<String>,
    path: bool,
    strict: bool,
) -> CmdResult {
    let budget = budget()?;
    let profile = profile.map(|p| profile_of(&p, !path)).transpose()?;
    let log = match (file, random) {
        (Some(_), Some(_)) => return Err(Usage("give either a file or --random, not both".into())),
        (None, Some(r)) => {
            let [count, max_vertices, seed] = r[..] else {
                return Err(Usage("--random takes COUNT MAX_VERTICES SEED".into()));
            };
            if profile.is_some() {
                return Err(Usage("--profile cannot be combined with --random".into()));
            }
            verify_random(count as usize, max_vertices as usize, seed, suite, budget)
        }
        (Some(f), None) => {
            if suite == Suite::ClosedForm && profile.is_none() {
                return Err(Usage("the closed-form suite needs --profile".into()));
            }
            verify_hypergraph(&load(&f)?, suite, profile.as_ref(), budget)
        }
        (None, None) => match (suite, profile) {
            (Suite::ClosedForm | Suite::All, Some(p)) => verify_profile_log(&p),
            _ => {
                return Err(Usage(
                    "give a file, --random, or --suite closed-form with --profile".into(),
                ))
            }
        },
    };
    Ok(finish_verify(log, strict))
}

/// The hypergraph file followed by the report, or the report alone when the
/// file goes to `out`. On stdout the report lines are `#` comments, so the
/// whole output parses as a hypergraph file.
fn emit_with_report(h: &Hypergraph, report: &Report, out: Option<&Path>) -> CmdResult {
    let text = emit_hg(h);
    let body = match out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
            report.to_string()
        }
        None => {
            let mut s = text;
            for line in report.to_string().lines() {
                let _ = writeln!(s, "# {line}");
            }
            s
        }
    };
    Ok(Outcome::checked(body, !report.passed()))
}

fn cmd_gen(kind: GenKind, profile: &str, out: Option<&Path>) -> CmdResult {
    let profile = profile_of(profile, matches!(kind, GenKind::Ucycle))?;
    let unified = generate(&profile);
    let report = verify_closed_form(&profile)?;
    emit_with_report(&unified.hypergraph, &report, out)
}

fn op_report(op: &Operation, extra: &[(&str, String)]) -> Report {
    let mut r = Report::new();
    for (k, v) in extra {
        r.value(*k, v);
    }
    r.value("k", op.result.edge_index().len());
    r.extend(op.checks.iter().cloned());
    r
}

fn cmd_op(op: OpCommand) -> CmdResult {
    match op {
        OpCommand::Union { a, b, out } => {
            let (a, b) = (load(&a)?, load(&b)?);
            let op = disjoint_union(&[&a, &b])?;
            emit_with_report(
                &op.result,
                &op_report(&op, &[("operation", "union".into())]),
                out.as_deref(),
            )
        }
        OpCommand::Pendant { file, at, out } => {
            let op = pendant_attach(&load(&file)?, at)?;
            let r = op_report(
                &op,
                &[("operation", "pendant".into()), ("at", at.to_string())],
            );
            emit_with_report(&op.result, &r, out.as_deref())
        }
        OpCommand::Coalesce {
            a,
            b,
            at,
            with,
            out,
        } => {
            let op = coalesce(&load(&a)?, at, &load(&b)?, with)?;
            let r = op_report(
                &op,
                &[
                    ("operation", "coalesce".into()),
                    ("at", at.to_string()),
                    ("with", with.to_string()),
                ],
            );
            emit_with_report(&op.result, &r, out.as_deref())
        }
        OpCommand::Attach {
            file,
            u,
            v,
            size,
            out,
        } => {
            let (op, case) = attach_edge(&load(&file)?, u, v, size)?;
            let extra = [
                ("operation", "attach".to_string()),
                ("u", u.to_string()),
                ("v", v.to_string()),
                ("size", size.to_string()),
                ("case", format!("{case:?}").to_lowercase()),
            ];
            emit_with_report(&op.result, &op_report(&op, &extra), out.as_deref())
        }
    }
}

fn cmd_bounds(h: &Hypergraph, strict: bool) -> CmdResult {
    let r = bounds_report(h, budget()?)?;
    let mut out = String::from("bound\tlhs\trhs\tstatus\tnote\n");
    for c in &r.checks {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}",
            c.name, c.lhs, c.rhs, c.status, c.note
        );
    }
    let failed = !r.passed() || (strict && r.count(Status::Unverified) > 0);
    Ok(Outcome::checked(out, failed))
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Index { file } => Ok(Outcome::ok(cmd_index(&load(&file)?))),
        Command::Matrix { file, format } => Ok(Outcome::ok(cmd_matrix(&load(&file)?, format))),
        Command::Spectrum { file } => cmd_spectrum(&load(&file)?),
        Command::Charpoly { file } => cmd_charpoly(&load(&file)?),
        Command::Girth { file } => cmd_girth(&load(&file)?),
        Command::Distance { file, u, v } => cmd_distance(&load(&file)?, u, v),
        Command::Diameter { file } => cmd_diameter(&load(&file)?),
        Command::Cycles { file, max_len } => cmd_cycles(&load(&file)?, max_len),
        Command::Verify {
            file,
            suite,
            random,
            profile,
            cycle: _,
            path,
            strict,
        } => cmd_verify(file, suite.into(), random, profile, path, strict),
        Command::Gen { kind, profile, out } => cmd_gen(kind, &profile, out.as_deref()),
        Command::Op { op } => cmd_op(op),
        Command::Bounds { file, strict } => cmd_bounds(&load(&file)?, strict),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            ExitCode::from(outcome.code)
        }
        Err(Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
