use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use injective_core::bounds::{self, conjecture_probe, Method, ProbeFamily};
use injective_core::coloring::{
    injective_to_star, star_to_injective, verify_injective, verify_star_coloring,
};
use injective_core::io::{self, Format, ResultRecord, Schema};
use injective_core::{corpus, mad_exact, solver, EdgeColoring, Error, Graph, VertexColoring};

const USAGE: u8 = 2;
const PARSE: u8 = 3;
const PRECONDITION: u8 = 4;
const INTERNAL: u8 = 5;

#[derive(Parser)]
#[command(name = "inj", version, about = "Injective edge-coloring toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Graph6,
    Edgelist,
    Dimacs,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Graph6 => Format::Graph6,
            FormatArg::Edgelist => Format::EdgeList,
            FormatArg::Dimacs => Format::Dimacs,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    General,
    Bipartite,
    SubcubicBipartite,
    Mad73,
    Mad83,
    Mad3,
    Outerplanar,
    Tree,
    Pathcycle,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::General => Method::General,
            MethodArg::Bipartite => Method::Bipartite,
            MethodArg::SubcubicBipartite => Method::SubcubicBipartite,
            MethodArg::Mad73 => Method::Mad73,
            MethodArg::Mad83 => Method::Mad83,
            MethodArg::Mad3 => Method::Mad3,
            MethodArg::Outerplanar => Method::Outerplanar,
            MethodArg::Tree => Method::Tree,
            MethodArg::Pathcycle => Method::PathCycle,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Star,
    Injective,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Subcubic,
    SubcubicBipartite,
}

#[derive(clap::Args)]
struct Input {
    /// Graph file, or the name of a corpus fixture.
    input: String,
    /// Input format; by default inferred from the extension (.g6, .col,
    /// anything else is an edge list).
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

#[derive(clap::Args)]
struct Output {
    /// Print the JSON result record.
    #[arg(long, conflicts_with = "tsv")]
    json: bool,
    /// Print "u v color" rows.
    #[arg(long)]
    tsv: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Exact injective chromatic index with a witness coloring.
    Solve {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// Constructive coloring within a proven bound.
    Bound {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        method: MethodArg,
        /// Skip the exact mad check for the sparse methods.
        #[arg(long)]
        trust_mad: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Check an edge coloring for injectivity.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Edge colors in edge order: a JSON result record, a JSON array, or whitespace-separated integers.
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Convert between star vertex colorings and injective edge colorings.
    Transform {
        #[command(flatten)]
        input: Input,
        /// Edge coloring for `--to star`, vertex coloring for `--to injective`.
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long, value_enum)]
        to: Target,
    },
    /// Exact maximum average degree.
    Mad {
        #[command(flatten)]
        input: Input,
    },
    /// List, export or check the fixture corpus.
    Corpus {
        /// Write every fixture as `<name>.g6` and `<name>.txt` into DIR.
        #[arg(long, value_name = "DIR")]
        export: Option<PathBuf>,
        /// Solve every fixture and compare with its expected values.
        #[arg(long)]
        check: bool,
    },
    /// Exact index over enumerated and sampled subcubic graphs.
    Probe {
        #[arg(value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 9)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Error together with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match &e {
            Error::Parse { .. }
            | Error::FormatViolation(_)
            | Error::LoopEdge(_)
            | Error::DuplicateEdge(..)
            | Error::VertexOutOfRange { .. }
            | Error::PartialColoring { .. }
            | Error::ZeroColor => PARSE,
            Error::UnknownName(_) => USAGE,
            Error::Invariant(_) | Error::FixtureError { .. } => INTERNAL,
            _ => PRECONDITION,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

type Run = Result<(), Failure>;

fn load(input: &Input) -> Result<Graph, Failure> {
    let path = Path::new(&input.input);
    if path.exists() {
        return Ok(io::read_graph(path, input.format.map(Format::from))?);
    }
    match corpus::get(&input.input) {
        Ok(f) => Ok(f.graph),
        Err(_) => Err(fail(USAGE, format!("no such file or corpus graph: {}", input.input))),
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| fail(PARSE, format!("{}: {e}", path.display())))
}

fn emit(g: &Graph, record: &ResultRecord, output: &Output) {
    if output.json {
        print!("{}", io::write_result(g, record, Schema::Json));
    } else if output.tsv {
        print!("{}", io::write_result(g, record, Schema::Tsv));
    } else {
        if let Some(k) = record.index_or_bound {
            println!("{}: {k}", record.method);
        }
        let colors: Vec<String> = record.colors.iter().map(u32::to_string).collect();
        println!("colors: {}", colors.join(" "));
    }
}

fn solve(input: &Input, output: &Output) -> Run {
    let g = load(input)?;
    let r = solver::injective_chromatic_index(&g)?;
    let mut record = ResultRecord::new(&g, "exact", Some(r.index), &r.coloring.densified());
    record.certificates.clique = r.clique;
    emit(&g, &record, output);
    Ok(())
}

fn bound(input: &Input, method: Method, trust_mad: bool, output: &Output) -> Run {
    let g = load(input)?;
    let r = bounds::bound(&g, method, trust_mad)?;
    let record = ResultRecord::new(&g, method.name(), Some(r.bound_claimed), &r.coloring.densified());
    emit(&g, &record, output);
    Ok(())
}

fn verify(input: &Input, coloring: &Path) -> Run {
    let g = load(input)?;
    let c = io::parse_coloring(&read_text(coloring)?)?;
    let verdict = verify_injective(&g, &c)?;
    let mut record = ResultRecord::new(&g, "verify", Some(c.palette_size()), &c);
    record.valid = verdict.valid;
    record.witness = verdict.witness;
    print!("{}", io::write_result(&g, &record, Schema::Json));
    Ok(())
}

fn transform(input: &Input, coloring: &Path, to: Target) -> Run {
    let g = load(input)?;
    let text = read_text(coloring)?;
    let out = match to {
        Target::Star => {
            let c = io::parse_coloring(&text)?;
            let vc = injective_to_star(&g, &c)?;
            let valid = verify_star_coloring(&g, &vc).valid;
            json!({ "kind": "star", "colors": vc.colors(), "distinct": vc.distinct(), "valid": valid })
        }
        Target::Injective => {
            let raw = io::parse_coloring(&text)?;
            let vc = VertexColoring::new(raw.colors().iter().map(|&c| c as u64).collect());
            if vc.colors().len() != g.n() {
                return Err(fail(PARSE, format!("expected {} vertex colors, got {}", g.n(), vc.colors().len())));
            }
            let c: EdgeColoring = star_to_injective(&g, &vc)?;
            let valid = verify_injective(&g, &c)?.valid;
            json!({ "kind": "injective", "colors": c.colors(), "distinct": c.palette_size(), "valid": valid })
        }
    };
    println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    Ok(())
}

fn mad(input: &Input) -> Run {
    let g = load(input)?;
    let m = mad_exact(&g)?;
    println!("{}", serde_json::to_string_pretty(&io::MadRecord::new(m)).expect("serializable"));
    Ok(())
}

fn corpus_cmd(export: Option<&Path>, check: bool) -> Run {
    if let Some(dir) = export {
        fs::create_dir_all(dir).map_err(|e| fail(USAGE, format!("{}: {e}", dir.display())))?;
        for f in corpus::all() {
            for format in [Format::Graph6, Format::EdgeList] {
                let path = dir.join(format!("{}.{}", f.name, format.extension()));
                fs::write(&path, io::write_graph(&f.graph, format))
                    .map_err(|e| fail(USAGE, format!("{}: {e}", path.display())))?;
            }
        }
    }
    if !check {
        if export.is_none() {
            for f in corpus::all() {
                let expected = f.expected_index.map_or("unknown".to_string(), |k| k.to_string());
                println!("{}\tn={}\tm={}\tindex={}", f.name, f.graph.n(), f.graph.m(), expected);
            }
        }
        return Ok(());
    }
    let mut failures = 0;
    for f in corpus::all() {
        let structure = corpus::check_structure(&f);
        let index = solver::injective_chromatic_index(&f.graph).map(|r| r.index);
        let line = match (&structure, &index, f.expected_index) {
            (Err(e), _, _) => format!("FIXTURE-ERROR {e}"),
            (_, Err(e), _) => format!("FAIL solver: {e}"),
            (_, Ok(got), Some(want)) if *got != want => format!("FAIL index {got}, expected {want}"),
            (_, Ok(got), Some(_)) => format!("ok index {got}"),
            (_, Ok(got), None) => format!("ok index {got} (no expected value)"),
        };
        if !line.starts_with("ok") {
            failures += 1;
        }
        println!("{}\t{line}", f.name);
    }
    if failures > 0 {
        return Err(fail(INTERNAL, format!("{failures} fixture(s) failed")));
    }
    Ok(())
}

fn probe(family: FamilyArg, max_n: usize, count: usize, seed: u64) -> Run {
    let family = match family {
        FamilyArg::Subcubic => ProbeFamily::Subcubic,
        FamilyArg::SubcubicBipartite => ProbeFamily::SubcubicBipartite,
    };
    if max_n < 2 {
        return Err(fail(USAGE, "--max-n must be at least 2"));
    }
    let report = conjecture_probe(family, max_n, count, seed);
    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    if !report.above_ceiling.is_empty() {
        return Err(fail(INTERNAL, "an index above the subcubic ceiling of 8 was found"));
    }
    Ok(())
}

fn run(cli: Cli) -> Run {
    match cli.command {
        Command::Solve { input, output } => solve(&input, &output),
        Command::Bound {
            input,
            method,
            trust_mad,
            output,
        } => bound(&input, method.into(), trust_mad, &output),
        Command::Verify { input, coloring } => verify(&input, &coloring),
        Command::Transform { input, coloring, to } => transform(&input, &coloring, to),
        Command::Mad { input } => mad(&input),
        Command::Corpus { export, check } => corpus_cmd(export.as_deref(), check),
        Command::Probe {
            family,
            max_n,
            count,
            seed,
        } => probe(family, max_n, count, seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli);
    std::io::stdout().flush().ok();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
