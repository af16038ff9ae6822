use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use galebrax::construction::{build, ConstructionState};
use galebrax::families::{Family, FamilySpec};
use galebrax::format::{
    log_from_json, log_to_json, polytope_from_json, polytope_to_json, realization_from_json,
    realization_to_json,
};
use galebrax::realization::{hull_facets, realize_construction};
use galebrax::verify::{
    classify_gale_braxial, is_braxial, is_gale_polytope, is_multiplicial, is_simplicial,
    periodicity_report, structure_report, TheoremReport,
};
use galebrax::{CombPolytope, Error};

#[derive(Parser)]
#[command(name = "galebrax", version, about = "Gale, braxial and periodically-cyclic polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the facets of a cyclic polytope, braxtope or multiplex.
    Generate {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the incremental construction up to the given number of vertices.
    Construct {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        period: usize,
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        log: Option<PathBuf>,
    },
    /// Realize a construction log with exact rational points.
    Realize {
        #[arg(long)]
        construction: PathBuf,
        /// Final polytope; required when the log is empty.
        #[arg(long)]
        polytope: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run named checks: gale, braxial, simplicial, multiplicial, theorems, period:K.
    Verify {
        #[arg(long)]
        polytope: PathBuf,
        #[arg(long)]
        realization: Option<PathBuf>,
        #[arg(long, value_delimiter = ',', required = true)]
        checks: Vec<String>,
    },
    /// Classify a Gale-braxial polytope.
    Classify {
        #[arg(long)]
        polytope: PathBuf,
    },
    /// Facets of the convex hull of a point file.
    Oracle {
        #[arg(long)]
        points: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug)]
enum Failure {
    Core(Error),
    Io(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) | Failure::Io(_) => 2,
            Failure::Core(
                Error::InvalidInput(_) | Error::Unsupported(_) | Error::Parse(_),
            ) => 2,
            Failure::Core(
                Error::NotPolytopal(_)
                | Error::Degenerate(_)
                | Error::DegenerateStep { .. }
                | Error::Infeasible(_),
            ) => 3,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Core(e) => write!(f, "{e}"),
            Failure::Io(m) | Failure::Usage(m) => write!(f, "{m}"),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))
}

fn read_polytope(path: &Path) -> CliResult<CombPolytope> {
    Ok(polytope_from_json(&read(path)?)?)
}

fn run_check(
    name: &str,
    p: &CombPolytope,
    realization: Option<&galebrax::realization::Realization>,
) -> CliResult<TheoremReport> {
    let mut report = TheoremReport::new();
    let simple = |f: fn(&CombPolytope) -> bool| f(p);
    match name {
        "gale" => report.push("gale", simple(is_gale_polytope), None),
        "braxial" => report.push("braxial", simple(is_braxial), None),
        "simplicial" => report.push("simplicial", simple(is_simplicial), None),
        "multiplicial" => report.push("multiplicial", simple(is_multiplicial), None),
        "theorems" => {
            let r = realization
                .ok_or_else(|| Failure::Usage("check 'theorems' needs --realization".into()))?;
            report.extend(structure_report(p, r, None)?);
        }
        _ => {
            let k = name
                .strip_prefix("period:")
                .and_then(|k| k.parse::<usize>().ok())
                .ok_or_else(|| Failure::Usage(format!("unknown check '{name}'")))?;
            let r = realization
                .ok_or_else(|| Failure::Usage("check 'period:K' needs --realization".into()))?;
            let sub = periodicity_report(r, k)?;
            let passed = sub.all_passed();
            for n in sub.notes() {
                report.note(n.clone());
            }
            let witness = sub
                .checks()
                .iter()
                .filter(|c| !c.passed)
                .map(|c| c.to_string())
                .collect::<Vec<_>>();
            report.push(
                format!("period:{k}"),
                passed,
                (!witness.is_empty()).then(|| witness.join("; ")),
            );
        }
    }
    Ok(report)
}

/// Returns whether every check passed.
fn run(cli: Cli) -> CliResult<bool> {
    match cli.command {
        Command::Generate {
            family,
            dim,
            vertices,
            out,
        } => {
            let p = FamilySpec::new(family, dim, vertices)?.generate()?;
            write(&out, &polytope_to_json(&p))?;
            println!("{} facets", p.num_facets());
        }
        Command::Construct {
            dim,
            period,
            vertices,
            out,
            log,
        } => {
            let n = vertices
                .checked_sub(1)
                .ok_or_else(|| Failure::Usage("--vertices must be positive".into()))?;
            let state = build(dim, period, n)?;
            write(&out, &polytope_to_json(state.polytope()))?;
            if let Some(log) = log {
                write(&log, &log_to_json(state.log()))?;
            }
            println!("{} facets, {} steps", state.polytope().num_facets(), state.log().len());
        }
        Command::Realize {
            construction,
            polytope,
            out,
        } => {
            let log = log_from_json(&read(&construction)?)?;
            let p = polytope.as_deref().map(read_polytope).transpose()?;
            let state = ConstructionState::from_log(&log, p.as_ref())?;
            let r = realize_construction(&state)?;
            write(&out, &realization_to_json(&r))?;
            println!("{} points", r.len());
        }
        Command::Verify {
            polytope,
            realization,
            checks,
        } => {
            let p = read_polytope(&polytope)?;
            let r = realization
                .as_deref()
                .map(|path| read(path).and_then(|t| Ok(realization_from_json(&t)?)))
                .transpose()?;
            if let Some(r) = &r {
                if hull_facets(r)? != p {
                    return Err(Failure::Core(Error::InvalidInput(
                        "realization hull does not match the polytope".into(),
                    )));
                }
            }
            let mut report = TheoremReport::new();
            for name in checks.iter().map(|c| c.trim()).filter(|c| !c.is_empty()) {
                report.extend(run_check(name, &p, r.as_ref())?);
            }
            print!("{report}");
            return Ok(report.all_passed());
        }
        Command::Classify { polytope } => {
            let p = read_polytope(&polytope)?;
            println!("{}", classify_gale_braxial(&p));
        }
        Command::Oracle { points, out } => {
            let r = realization_from_json(&read(&points)?)?;
            let p = hull_facets(&r)?;
            write(&out, &polytope_to_json(&p))?;
            println!("{} facets", p.num_facets());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
