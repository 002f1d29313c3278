use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use apoly::algebra::rational::int;
use apoly::cocycle::{omega_counts, reorientation_classes, Universe};
use apoly::coflow::{a_eval, a_even_eval, a_even_poly, a_poly, b_eval, b_poly, char_counts, char_polys, Config};
use apoly::corpus::{build_corpus, named_fixture, CorpusSpec, DEFAULT_NAMED};
use apoly::identities::{CheckReport, Status};
use apoly::io::{poly_to_json, Instance};
use apoly::partial::{pom_from_instance, t1, t2};
use apoly::tutte::{potts, tutte};
use apoly::verify::{run_corpus, Suite};
use apoly::{Error, Result};

#[derive(Parser)]
#[command(name = "apoly", about = "Exact A-polynomials of regular oriented matroids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Source {
    /// Instance file (JSON digraph, matrix or edge list).
    #[arg(long, conflicts_with = "fixture")]
    input: Option<PathBuf>,
    /// Named fixture instead of a file.
    #[arg(long)]
    fixture: Option<String>,
    /// Skip the unimodularity check for matrix input.
    #[arg(long)]
    assume_tu: bool,
}

#[derive(Args, Clone)]
struct Work {
    /// Maximum number of enumerated assignments per polynomial.
    #[arg(long, default_value_t = 100_000_000)]
    budget: u64,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args, Clone)]
struct CorpusArgs {
    #[arg(long = "corpus-max-vertices", default_value_t = 4)]
    max_vertices: usize,
    #[arg(long = "corpus-max-arcs", default_value_t = 5)]
    max_arcs: usize,
    #[arg(long = "corpus-doubled-edges", default_value_t = 4)]
    doubled_edges: usize,
    #[arg(long = "corpus-no-doubled")]
    no_doubled: bool,
    /// Comma separated fixture names; empty for none.
    #[arg(long = "corpus-named", default_value_t = DEFAULT_NAMED.join(","))]
    named: String,
}

impl CorpusArgs {
    fn spec(&self) -> CorpusSpec {
        CorpusSpec {
            max_vertices: self.max_vertices,
            max_arcs: self.max_arcs,
            include_doubled: !self.no_doubled,
            max_doubled_edges: self.doubled_edges,
            named: self.named.split(',').filter(|s| !s.is_empty()).map(String::from).collect(),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    A,
    Tutte,
    Potts,
    Char,
    T1,
    T2,
    AEven,
    B,
}

#[derive(Clone, Copy, ValueEnum)]
enum UniverseArg {
    Cocycles,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one invariant of an instance.
    Compute {
        #[arg(value_enum)]
        what: What,
        #[command(flatten)]
        source: Source,
        /// Evaluate at one value instead of interpolating, e.g. q=3.
        #[arg(long)]
        at: Option<String>,
        #[command(flatten)]
        work: Work,
    },
    /// Run identity suites on an instance or on the generated corpus.
    Verify {
        /// basic, tutte, expansions, reciprocity, duality, recurrences, pom, classes or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        corpus: CorpusArgs,
        #[command(flatten)]
        work: Work,
        /// Print every check rather than the summary.
        #[arg(long)]
        full: bool,
    },
    /// Write the corpus instances as JSON files.
    Corpus {
        #[arg(long, default_value = "corpus")]
        out: PathBuf,
        #[command(flatten)]
        corpus: CorpusArgs,
    },
    /// Cocycle reversing classes of an instance.
    Classes {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "cocycles")]
        universe: UniverseArg,
        #[command(flatten)]
        work: Work,
    },
}

fn load(source: &Source) -> Result<Option<Instance>> {
    if let Some(name) = &source.fixture {
        return named_fixture(name).map(|e| Some(e.instance));
    }
    let Some(path) = &source.input else { return Ok(None) };
    let text = std::fs::read_to_string(path)?;
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("input");
    apoly::io::parse_instance(&text, stem, source.assume_tu).map(Some)
}

fn require(source: &Source) -> Result<Instance> {
    load(source)?.ok_or_else(|| Error::InvalidArgument("pass --input or --fixture".into()))
}

fn parse_at(at: &str) -> Result<u64> {
    at.strip_prefix("q=")
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| Error::InvalidArgument(format!("--at expects q=<non-negative integer>, got {at:?}")))
}

fn compute(what: What, inst: &Instance, at: Option<u64>, cfg: &Config) -> Result<Value> {
    let om = &inst.om;
    let digraph = || inst.digraph.as_ref().ok_or_else(|| Error::InvalidArgument("b needs a digraph input".into()));
    Ok(match (what, at) {
        (What::A, None) => poly_to_json(&a_poly(om, cfg)?, &["q", "y", "z"]),
        (What::A, Some(q)) => poly_to_json(&a_eval(om, q, cfg)?, &["y", "z"]),
        (What::Tutte, None) => poly_to_json(&tutte(om, cfg)?, &["x", "y"]),
        (What::Potts, None) => poly_to_json(&potts(om, cfg)?, &["q", "y"]),
        (What::Potts, Some(q)) => {
            let p = apoly::coflow::at_q(&potts(om, cfg)?, &int(q as i64));
            poly_to_json(&p, &["q", "y"])
        }
        (What::Char, None) => {
            let c = char_polys(om, cfg)?;
            json!({"strict": poly_to_json(&c.strict, &["q"]), "weak": poly_to_json(&c.weak, &["q"])})
        }
        (What::Char, Some(q)) => {
            let (strict, weak) = char_counts(om, q, cfg)?;
            json!({"q": q, "strict": strict, "weak": weak})
        }
        (What::T1, None) => poly_to_json(&t1(&pom_from_instance(inst)?, cfg)?, &["x", "y"]),
        (What::T2, None) => poly_to_json(&t2(&pom_from_instance(inst)?, cfg)?, &["x", "y"]),
        (What::AEven, None) => poly_to_json(&a_even_poly(om, cfg)?, &["q", "y", "z", "w"]),
        (What::AEven, Some(q)) => poly_to_json(&a_even_eval(om, q, cfg)?, &["y", "z", "w"]),
        (What::B, None) => poly_to_json(&b_poly(digraph()?, cfg)?, &["q", "y", "z"]),
        (What::B, Some(q)) => poly_to_json(&b_eval(digraph()?, q, cfg)?, &["y", "z"]),
        (What::Tutte | What::T1 | What::T2, Some(_)) => {
            return Err(Error::InvalidArgument("--at applies to a, potts, char, a-even and b".into()))
        }
    })
}

fn print(v: &Value) {
    use std::io::Write;
    // A closed pipe (e.g. `| head`) is not an error worth a panic.
    let _ = writeln!(std::io::stdout().lock(), "{}", serde_json::to_string_pretty(v).expect("json values serialize"));
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Compute { what, source, at, work } => {
            let inst = require(&source)?;
            let cfg = Config { budget: work.budget, jobs: work.jobs.max(1) };
            let at = at.as_deref().map(parse_at).transpose()?;
            print(&compute(what, &inst, at, &cfg)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, source, corpus, work, full } => {
            let suites = Suite::parse_list(&suite)?;
            let instances = match load(&source)? {
                Some(i) => vec![i],
                None => build_corpus(&corpus.spec())?.into_iter().map(|e| e.instance).collect(),
            };
            let cfg = Config { budget: work.budget, jobs: 1 };
            let reports = run_corpus(&suites, &instances, &cfg, work.jobs)?;
            let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
            let failed: Vec<&CheckReport> = reports.iter().filter(|r| !r.passed()).collect();
            let mut summary = json!({
                "suite": suite,
                "instances": instances.len(),
                "checks": reports.len(),
                "pass": count(Status::Pass),
                "xfail": count(Status::Xfail),
                "fail": count(Status::Fail),
            });
            if full {
                summary["reports"] = json!(reports);
            }
            print(&summary);
            if let Some(first) = failed.first() {
                eprintln!("{}", serde_json::to_string_pretty(first).expect("reports serialize"));
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Corpus { out, corpus } => {
            std::fs::create_dir_all(&out)?;
            let entries = build_corpus(&corpus.spec())?;
            for e in &entries {
                let text = serde_json::to_string_pretty(&e.json).expect("json values serialize");
                std::fs::write(out.join(format!("{}.json", e.instance.name)), text + "\n")?;
            }
            print(&json!({"written": entries.len(), "dir": out.display().to_string()}));
            Ok(ExitCode::SUCCESS)
        }
        Command::Classes { source, universe, work } => {
            let inst = require(&source)?;
            let cfg = Config { budget: work.budget, jobs: 1 };
            let universe = match universe {
                UniverseArg::Cocycles => Universe::Cocycles,
                UniverseArg::All => Universe::All,
            };
            let c = reorientation_classes(&inst.om, universe, &cfg)?;
            let mut v = json!({
                "universe": universe,
                "count": c.count(),
                "acyclic_count": c.acyclic_count(),
                "sizes": c.classes.iter().map(Vec::len).collect::<Vec<_>>(),
                "acyclic": c.acyclic,
            });
            if universe == Universe::Cocycles {
                v["omega"] = json!(omega_counts(&inst.om, &cfg)?);
            }
            print(&v);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::BudgetExceeded { .. } => 3,
                Error::InvalidArgument(_) | Error::Parse(_) | Error::Io(_) => 2,
                _ => 1,
            })
        }
    }
}
