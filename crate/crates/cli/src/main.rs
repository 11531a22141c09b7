use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use knotted_tori::census::{census_summary, census_verify_theorem31_with, enumerate_tori_with, CensusOptions, Strategy};
use knotted_tori::generators::{minimal_torus_3k, moebius_torus, tube_complex};
use knotted_tori::geometry::rational::parse_rational;
use knotted_tori::geometry::{
    auto_tube, complement_construction, cyclic_polytope_realization, export_mesh, load_stick_knot, tube_construction,
    verify_embedding, Mesh, MeshFormat, Q,
};
use knotted_tori::report::{analyze, knot_summary, realization_report, SCHEMA};
use knotted_tori::{parse_complex, Error, SimplicialTorus};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "knotted-tori", version, about = "Vertex-minimal and knotted polyhedral tori")]
struct Cli {
    /// Worker threads for the census and embedding checks (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a triangulated torus in the 1-based text format.
    Generate {
        #[command(subcommand)]
        which: Generator,
        /// Output file; standard output when omitted.
        #[arg(long, short, global = true)]
        out: Option<PathBuf>,
    },
    /// Type, witnesses, distance layers and vertex bound of a torus, as JSON.
    Analyze { complex: PathBuf },
    /// Enumerate tori on N vertices up to isomorphism.
    Census {
        #[arg(long)]
        n: Option<usize>,
        /// Check that no torus of type 3xK has fewer than 3K-2 vertices and that
        /// the one with 3K-2 vertices is unique.
        #[arg(long = "verify-thm31", value_name = "K")]
        verify_thm31: Option<usize>,
        #[arg(long, value_enum, default_value_t = StrategyArg::Orderly)]
        strategy: StrategyArg,
        /// Soft time limit in seconds; overrides TORUS_TIME_BUDGET_SECS.
        #[arg(long, value_name = "SECS")]
        time_budget: Option<u64>,
    },
    /// Build an embedded polyhedral torus and export it with its certificate.
    Realize {
        #[command(subcommand)]
        which: Realization,
        /// Mesh file; `<input>-<construction>.<format>` when omitted.
        #[arg(long, short, global = true)]
        out: Option<PathBuf>,
        #[arg(long, global = true, default_value = "off", value_parser = parse_format)]
        format: MeshFormat,
        /// Fractional digits of exported coordinates.
        #[arg(long, global = true, default_value_t = 6)]
        precision: usize,
    },
    /// Knot invariants of a stick knot.
    Knot {
        #[command(subcommand)]
        which: KnotCommand,
    },
}

#[derive(Subcommand)]
enum Generator {
    /// The 7-vertex Möbius torus.
    Moebius,
    /// The vertex-minimal torus of type 3xK, on 3K-2 vertices.
    Minimal3k {
        #[arg(long)]
        k: usize,
    },
    /// The tube complex over a K-gon, on 3K vertices.
    TubeComplex {
        #[arg(long)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum Realization {
    /// Tube of three-vertex rings around a stick knot.
    Tube {
        #[arg(long)]
        knot: PathBuf,
        /// Tube radius as `p/q` or a decimal; chosen automatically when omitted.
        #[arg(long)]
        eps: Option<String>,
    },
    /// Tube joined to an enclosing octahedron, with 3k+4 vertices.
    Complement {
        #[arg(long)]
        knot: PathBuf,
    },
    /// The 3xK minimal torus in the boundary of the cyclic 4-polytope.
    Cyclic {
        #[arg(long)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum KnotCommand {
    /// Knot determinant, crossings and Gauss code.
    Det {
        #[arg(long)]
        knot: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Orderly,
    Exhaustive,
}

fn parse_format(s: &str) -> Result<MeshFormat, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    /// Bad input: exit status 2.
    Usage(String),
    /// A check failed: exit status 1.
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ParseError { .. }
            | Error::Io(_)
            | Error::InvalidK(_)
            | Error::OutOfRange(_)
            | Error::DegenerateKnot(_)
            | Error::VertexOutOfRange(_)
            | Error::DuplicateFace(_)
            | Error::DegenerateFace(_)
            | Error::NonManifoldEdge(_)
            | Error::OpenEdge(_)
            | Error::BadVertexLink(_)
            | Error::UnusedVertex(_)
            | Error::Disconnected
            | Error::EmptyComplex
            | Error::NotATorus { .. } => Failure::Usage(e.to_string()),
            other => Failure::Verification(other.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

/// Writes to standard output; a closed pipe ends the process quietly.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: {e}");
        std::process::exit(2);
    }
}

fn print_json(v: &impl serde::Serialize) {
    emit(&format!("{}\n", serde_json::to_string_pretty(v).expect("reports serialize")));
}

fn versioned(v: impl serde::Serialize) -> Value {
    let mut v = serde_json::to_value(v).expect("reports serialize");
    if let Value::Object(map) = &mut v {
        map.insert("schema".into(), json!(SCHEMA));
    }
    v
}

fn write_text(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            emit(text);
            Ok(())
        }
    }
}

fn generate(which: &Generator, out: Option<&Path>) -> Outcome {
    let t: SimplicialTorus = match which {
        Generator::Moebius => moebius_torus(),
        Generator::Minimal3k { k } => minimal_torus_3k(*k)?,
        Generator::TubeComplex { k } => tube_complex(*k)?,
    };
    write_text(out, &t.to_string())?;
    Ok(true)
}

fn analyze_file(path: &Path) -> Outcome {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let parsed = parse_complex(&text)?;
    let torus = SimplicialTorus::from_complex(parsed.complex)?;
    let report = analyze(&torus, Some(&parsed.labels))?;
    print_json(&report);
    Ok(report.bound_satisfied && report.layer_report.all_hold())
}

fn census(n: Option<usize>, thm31: Option<usize>, strategy: StrategyArg, budget: Option<u64>) -> Outcome {
    let defaults = CensusOptions::default();
    let opts = CensusOptions {
        strategy: match strategy {
            StrategyArg::Orderly => Strategy::Orderly,
            StrategyArg::Exhaustive => Strategy::Exhaustive,
        },
        time_budget: budget.map(Duration::from_secs).or(defaults.time_budget),
    };
    if n.is_none() && thm31.is_none() {
        return Err(Failure::Usage("census needs --n or --verify-thm31".into()));
    }
    let mut ok = true;
    if let Some(n) = n {
        let records = enumerate_tori_with(n, opts)?;
        for r in &records {
            let faces: Vec<[usize; 3]> = r.canonical_faces.iter().map(|f| f.map(|v| v + 1)).collect();
            emit(&format!("{}\n", serde_json::to_string(&faces).unwrap()));
        }
        emit(&format!("{}\n", serde_json::to_string(&versioned(census_summary(n, &records))).unwrap()));
    }
    if let Some(k) = thm31 {
        let report = census_verify_theorem31_with(k, opts)?;
        let holds = report.holds();
        let mut v = versioned(&report);
        v["holds"] = json!(holds);
        if let Some(w) = &report.witness {
            let one_based: Vec<[usize; 3]> = w.iter().map(|f| f.map(|x| x + 1)).collect();
            v["witness"] = json!(one_based);
        }
        emit(&format!("{}\n", serde_json::to_string(&v).unwrap()));
        ok &= holds;
    }
    Ok(ok)
}

fn parse_eps(s: &str) -> Result<Q, Failure> {
    match parse_rational(s) {
        Some(e) if e > Q::from_integer(0.into()) => Ok(e),
        _ => Err(Failure::Usage(format!("invalid epsilon `{s}`"))),
    }
}

fn default_out(stem: &str, construction: &str, format: MeshFormat) -> PathBuf {
    let ext = match format {
        MeshFormat::Off => "off",
        MeshFormat::Obj => "obj",
    };
    PathBuf::from(format!("{stem}-{construction}.{ext}"))
}

fn stem(p: &Path) -> String {
    p.file_stem().map_or_else(|| "knot".into(), |s| s.to_string_lossy().into_owned())
}

fn realize(which: &Realization, out: Option<&Path>, format: MeshFormat, precision: usize) -> Outcome {
    let (mesh, target): (Mesh, PathBuf) = match which {
        Realization::Tube { knot, eps } => {
            let k = load_stick_knot(knot)?;
            let mesh = match eps {
                Some(e) => tube_construction(&k, &parse_eps(e)?)?,
                None => auto_tube(&k)?.1,
            };
            (mesh, default_out(&stem(knot), "tube", format))
        }
        Realization::Complement { knot } => {
            let k = load_stick_knot(knot)?;
            (complement_construction(&k)?, default_out(&stem(knot), "complement", format))
        }
        Realization::Cyclic { k } => {
            let r = cyclic_polytope_realization(*k)?;
            (r.mesh, default_out(&format!("minimal3k-{k}"), "cyclic", format))
        }
    };
    let target = out.map_or(target, Path::to_path_buf);
    let embedding = verify_embedding(&mesh);
    let report = realization_report(&mesh, &embedding)?;
    export_mesh(&mesh, format, precision, &target).map_err(|e| Failure::Usage(format!("{}: {e}", target.display())))?;
    let mut v = serde_json::to_value(&report).unwrap();
    v["mesh"] = json!(target.display().to_string());
    print_json(&v);
    Ok(embedding.embedded)
}

fn knot_det(path: &Path) -> Outcome {
    let k = load_stick_knot(path)?;
    let summary = knot_summary(&k)?;
    print_json(&versioned(&summary));
    Ok(true)
}

fn run(cli: &Cli) -> Outcome {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    match &cli.command {
        Command::Generate { which, out } => generate(which, out.as_deref()),
        Command::Analyze { complex } => analyze_file(complex),
        Command::Census { n, verify_thm31, strategy, time_budget } => census(*n, *verify_thm31, *strategy, *time_budget),
        Command::Realize { which, out, format, precision } => realize(which, out.as_deref(), *format, *precision),
        Command::Knot { which: KnotCommand::Det { knot } } => knot_det(knot),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
