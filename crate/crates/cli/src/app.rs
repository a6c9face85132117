use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use gred_core::catalog::{catalog_problem, problem_ids, ENTRIES};
use gred_core::checker::{check, CheckError, CheckReport, Checks, Options, Problem, ProblemError};
use gred_core::ideal::{Budget, Ideal, IdealError};
use gred_core::poly::{parse_poly, MonomialOrder, PolyError, Ring};
use serde_json::json;

use crate::format::{export, parse, FileOptions};
use crate::{report, CheckKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "gred-check", version, about = "Decide G-saturation and G-reducedness of invariant subvarieties")]
struct Cli {
    /// Monomial order for `gb` and `member`.
    #[arg(long, global = true, value_enum)]
    order: Option<OrderArg>,
    /// Reduction-step allowance for each Gröbner computation.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Also write a JSON report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Evaluate every rule instead of stopping at the first that fires.
    #[arg(long, global = true)]
    all_rules: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderArg {
    Lex,
    Grevlex,
}

impl From<OrderArg> for MonomialOrder {
    fn from(o: OrderArg) -> MonomialOrder {
        match o {
            OrderArg::Lex => MonomialOrder::Lex,
            OrderArg::Grevlex => MonomialOrder::GrevLex,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a problem file.
    Run {
        path: PathBuf,
        #[command(flatten)]
        checks: CheckArgs,
    },
    /// Built-in representations and their bundled problems.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
    /// Reduced Gröbner basis of the given generators.
    Gb(EngineArgs),
    /// Dimension of the zero set of the given generators.
    Dim(EngineArgs),
    /// Whether F lies in the ideal of the remaining polynomials.
    Member(MemberArgs),
    /// Whether F lies in the radical of the ideal of the remaining polynomials.
    Radmember(MemberArgs),
}

#[derive(Subcommand, Debug)]
enum CatalogCommand {
    List,
    Run {
        name: String,
        #[arg(long)]
        problem: Option<String>,
        #[command(flatten)]
        checks: CheckArgs,
    },
    Export {
        name: String,
        #[arg(long)]
        problem: Option<String>,
    },
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// Questions to answer (default: all, or the file's `options` line).
    #[arg(long = "check", value_enum, value_delimiter = ',')]
    checks: Vec<CheckKind>,
}

#[derive(Args, Debug)]
struct EngineArgs {
    /// Comma-separated variable names.
    #[arg(long, value_delimiter = ',', required = true)]
    ring: Vec<String>,
    #[arg(required = true, allow_hyphen_values = true)]
    polys: Vec<String>,
}

#[derive(Args, Debug)]
struct MemberArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    ring: Vec<String>,
    #[arg(allow_hyphen_values = true)]
    f: String,
    #[arg(required = true, allow_hyphen_values = true)]
    generators: Vec<String>,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Budget(String),
    Other(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => EXIT_INPUT,
            Failure::Budget(_) => EXIT_BUDGET,
            Failure::Other(_) => EXIT_FAILURE,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Budget(m) | Failure::Other(m) => m,
        }
    }
}

impl From<IdealError> for Failure {
    fn from(e: IdealError) -> Failure {
        if e.is_budget() {
            Failure::Budget(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

impl From<PolyError> for Failure {
    fn from(e: PolyError) -> Failure {
        Failure::Input(e.to_string())
    }
}

impl From<ProblemError> for Failure {
    fn from(e: ProblemError) -> Failure {
        if e.is_budget() {
            Failure::Budget(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

impl From<CheckError> for Failure {
    fn from(e: CheckError) -> Failure {
        match e {
            CheckError::Ideal(e) => e.into(),
            CheckError::Problem(e) => e.into(),
            other => Failure::Input(other.to_string()),
        }
    }
}

/// Runs the command line `args` (program name first), writing normal output to
/// `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "gred-check: {}", f.message());
            f.code()
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let budget = Budget::new(cli.budget.unwrap_or(Budget::DEFAULT_STEPS));
    let order: MonomialOrder = cli.order.map(Into::into).unwrap_or_default();
    match &cli.command {
        Command::Run { path, checks } => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            let file = parse(&text, &path.display().to_string()).map_err(|e| Failure::Input(e.to_string()))?;
            let budget = Budget::new(cli.budget.or(file.options.budget).unwrap_or(Budget::DEFAULT_STEPS));
            let kinds = if checks.checks.is_empty() {
                file.options.checks.clone().unwrap_or(CheckKind::ALL.to_vec())
            } else {
                checks.checks.clone()
            };
            run_problem(cli, &file.problem, budget, CheckKind::checks(&kinds), out)
        }
        Command::Catalog { command } => match command {
            CatalogCommand::List => {
                let mut listing = Vec::new();
                for (name, about) in ENTRIES {
                    let ids = problem_ids(name).map_err(|e| Failure::Input(e.to_string()))?;
                    emit(out, &format!("{name:<10} {about}\n{:<10} problems: {}\n", "", ids.join(", ")))?;
                    listing.push(json!({ "name": name, "description": about, "problems": ids }));
                }
                write_json(cli, &json!(listing))?;
                Ok(EXIT_OK)
            }
            CatalogCommand::Run { name, problem, checks } => {
                let p = catalog_problem(name, problem.as_deref())?;
                let kinds = if checks.checks.is_empty() { CheckKind::ALL.to_vec() } else { checks.checks.clone() };
                run_problem(cli, &p, budget, CheckKind::checks(&kinds), out)
            }
            CatalogCommand::Export { name, problem } => {
                let p = catalog_problem(name, problem.as_deref())?;
                emit(out, &export(&p, &FileOptions::default()))?;
                Ok(EXIT_OK)
            }
        },
        Command::Gb(a) => {
            let i = ideal(&a.ring, &a.polys)?;
            let gb = i.groebner(order, budget)?;
            let basis: Vec<String> = gb.elements().iter().map(ToString::to_string).collect();
            for b in &basis {
                emit(out, &format!("{b}\n"))?;
            }
            write_json(cli, &json!({ "order": order.to_string(), "basis": basis }))?;
            Ok(EXIT_OK)
        }
        Command::Dim(a) => {
            let d = ideal(&a.ring, &a.polys)?.dim_variety(budget)?;
            emit(out, &format!("{d}\n"))?;
            write_json(cli, &json!({ "dim": d }))?;
            Ok(EXIT_OK)
        }
        Command::Member(a) => {
            let i = ideal(&a.ring, &a.generators)?;
            let f = parse_poly(&a.f, i.ring())?;
            let gb = i.groebner(order, budget)?;
            let nf = gb.normal_form(&f);
            emit(out, &format!("{}\nnormal form: {nf}\n", nf.is_zero()))?;
            write_json(
                cli,
                &json!({ "member": nf.is_zero(), "normal_form": nf.to_string(), "order": order.to_string() }),
            )?;
            Ok(EXIT_OK)
        }
        Command::Radmember(a) => {
            let i = ideal(&a.ring, &a.generators)?;
            let f = parse_poly(&a.f, i.ring())?;
            let holds = i.rad_member(&f, budget)?;
            emit(out, &format!("{holds}\n"))?;
            write_json(cli, &json!({ "radical_member": holds }))?;
            Ok(EXIT_OK)
        }
    }
}

fn ideal(names: &[String], polys: &[String]) -> Result<Ideal, Failure> {
    let ring = Ring::new(names.iter().cloned())?;
    Ok(Ideal::parse(&ring, polys)?)
}

fn run_problem(cli: &Cli, p: &Problem, budget: Budget, checks: Checks, out: &mut dyn Write) -> Result<i32, Failure> {
    let options = Options {
        budget,
        all_rules: cli.all_rules,
    };
    let r = check(p, options, checks)?;
    emit(out, &report::render(&r))?;
    write_report(cli.json.as_deref(), &r)?;
    Ok(if r.budget_exhausted { EXIT_BUDGET } else { EXIT_OK })
}

fn write_report(path: Option<&Path>, r: &CheckReport) -> Result<(), Failure> {
    if let Some(path) = path {
        let text = serde_json::to_string_pretty(r).map_err(|e| Failure::Other(e.to_string()))?;
        write_file(path, &text)?;
    }
    Ok(())
}

fn write_json(cli: &Cli, value: &serde_json::Value) -> Result<(), Failure> {
    if let Some(path) = &cli.json {
        let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Other(e.to_string()))?;
        write_file(path, &text)?;
    }
    Ok(())
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, format!("{text}\n")).map_err(|e| Failure::Other(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes()).map_err(|e| Failure::Other(e.to_string()))
}
