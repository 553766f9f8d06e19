use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bei::complex::{f_vector, h_vector, initial_complex, is_s2, minimal_nonfaces, multiplicity};
use bei::error::{FamilyError, FormatError, GraphError, PipelineError};
use bei::families::{
    chain_of_cycles, check_setup, helm, rank3_catalog, ChainSpec, CycleKind, Side,
};
use bei::graph::{decode_edge_list, decode_graph6, encode_graph6, Graph, VertexSet};
use bei::ideal::{accessibility, SuCache};
use bei::pipeline::{
    classify, read_records, run_pipeline, verify_equivalence, ClassifyOptions, RunOptions,
    RECORDS_FILE,
};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "bei",
    version,
    about = "Cutsets, accessibility and Cohen-Macaulay tests for binomial edge ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one graph and print its record as JSON.
    Analyze {
        #[command(flatten)]
        input: GraphInput,
        /// Also evaluate (S2).
        #[arg(long)]
        s2: bool,
        /// Also record f-vector, h-vector and multiplicity.
        #[arg(long)]
        complex: bool,
    },
    /// Classify every connected graph on n vertices.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// graph6 file to read instead of generating.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        s2: bool,
        /// Directory for records.jsonl, summary.csv and checkpoints.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, env = "BEI_WORKERS")]
        workers: Option<usize>,
        /// Continue from the checkpoint in --out.
        #[arg(long, requires = "out")]
        resume: bool,
    },
    /// Compare the accessible, strongly unmixed and (S2) sets of a finished run.
    Verify {
        #[arg(long)]
        run: PathBuf,
    },
    /// Print the initial complex: facets, minimal nonfaces and face counts.
    Complex {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Build graphs from the structured families.
    Families {
        #[command(subcommand)]
        family: Family,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Graph in graph6 format.
    #[arg(long)]
    g6: Option<String>,
    /// Edge-list file: vertex count, then one `u v` pair per line.
    #[arg(long)]
    edges: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Family {
    /// A chain of triangles and squares with whiskers.
    Chain {
        /// Cycle lengths in order, e.g. 3,4,3.
        #[arg(long, value_delimiter = ',')]
        cycles: Vec<CycleKind>,
        /// Advancing side (t or b) for each triangle, in order.
        #[arg(long, value_delimiter = ',')]
        glue: Vec<Side>,
        /// Block vertices carrying a whisker.
        #[arg(long, value_delimiter = ',')]
        whiskers: Vec<usize>,
        #[arg(long)]
        s2: bool,
    },
    /// The wheel on k rim vertices with a whisker on every rim vertex.
    Helm {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        s2: bool,
    },
    /// The accessible whiskered blocks of cycle rank three.
    Catalog {
        #[arg(long)]
        rank3: bool,
    },
}

enum Failure {
    Usage(String),
    Io(String),
    Contradiction(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Io(_) => 2,
            Failure::Contradiction(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Io(m) | Failure::Contradiction(m) => m,
        }
    }
}

impl From<PipelineError> for Failure {
    fn from(e: PipelineError) -> Self {
        match e {
            PipelineError::Contradiction { .. } => Failure::Contradiction(e.to_string()),
            PipelineError::Io(_) | PipelineError::Json(_) | PipelineError::Checkpoint(_) => {
                Failure::Io(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<FamilyError> for Failure {
    fn from(e: FamilyError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("bei: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Analyze { input, s2, complex } => {
            let g = read_graph(&input)?;
            let rec = classify(&g, &ClassifyOptions { s2, complex }, SuCache::global())?;
            println!("{}", to_json(&rec));
        }
        Command::Enumerate {
            n,
            input,
            s2,
            out,
            workers,
            resume,
        } => {
            let opts = RunOptions {
                classify: ClassifyOptions { s2, complex: false },
                workers,
                input,
                out_dir: out,
                resume,
                ..RunOptions::default()
            };
            let outcome = run_pipeline(n, &opts)?;
            print!("{}", outcome.summary.csv());
            if !outcome.report.verified() {
                return Err(Failure::Contradiction(format!(
                    "stage sets differ: {}",
                    to_json(&outcome.report)
                )));
            }
        }
        Command::Verify { run } => {
            let records = read_records(&records_path(&run)).map_err(Failure::from)?;
            let report = verify_equivalence(&records);
            println!("{}", to_json(&report));
            if !report.verified() {
                return Err(Failure::Contradiction("stage sets differ".into()));
            }
        }
        Command::Complex { input } => {
            let g = read_graph(&input)?;
            let c = initial_complex(&g);
            let f = f_vector(&c);
            let h = h_vector(&f, f.len() - 1).map_err(|e| Failure::Usage(e.to_string()))?;
            println!("# facets");
            print!("{}", c.to_text());
            println!("# minimal nonfaces");
            print!("{}", minimal_nonfaces(&c).to_text());
            println!("# f-vector\n{}", join(&f));
            println!("# h-vector\n{}", join(&h));
            println!("# multiplicity\n{}", multiplicity(&c));
        }
        Command::Families { family } => families(family)?,
    }
    Ok(())
}

fn families(family: Family) -> Result<(), Failure> {
    match family {
        Family::Chain {
            cycles,
            glue,
            whiskers,
            s2,
        } => {
            let spec = ChainSpec::new(cycles, glue, whiskers.into_iter().collect::<VertexSet>())?;
            let g = chain_of_cycles(&spec)?;
            let mut report = property_report(&g, s2)?;
            let setup = check_setup(&spec.whiskered_block()?)?;
            report["chain"] = json!(spec.to_string());
            report["setup"] = serde_json::to_value(setup).expect("serialisable");
            println!("{}", report);
        }
        Family::Helm { k, s2 } => println!("{}", property_report(&helm(k)?, s2)?),
        Family::Catalog { rank3 } => {
            if !rank3 {
                return Err(Failure::Usage("choose a catalog, e.g. --rank3".into()));
            }
            for entry in rank3_catalog() {
                let mut report = property_report(&entry.graph, false)?;
                report["name"] = json!(entry.name);
                report["block_size"] = json!(entry.block_size);
                println!("{}", report);
            }
        }
    }
    Ok(())
}

fn property_report(g: &Graph, s2: bool) -> Result<Value, Failure> {
    let access = accessibility(g);
    let mut report = json!({
        "graph6": encode_graph6(g).map_err(Failure::from)?,
        "n": g.n(),
        "edge_count": g.edge_count(),
        "unmixed": access.is_unmixed(),
        "accessible": access.is_accessible(),
        "strongly_unmixed": SuCache::global().is_strongly_unmixed(g),
        "witness": access.witness().map(|t| t.iter().collect::<Vec<_>>()),
    });
    if s2 {
        report["s2"] = json!(is_s2(g));
    }
    Ok(report)
}

fn read_graph(input: &GraphInput) -> Result<Graph, Failure> {
    match (&input.g6, &input.edges) {
        (Some(line), _) => Ok(decode_graph6(line.trim().as_bytes())?),
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            Ok(decode_edge_list(&text)?)
        }
        (None, None) => Err(Failure::Usage("pass --g6 or --edges".into())),
    }
}

fn records_path(run: &Path) -> PathBuf {
    if run.is_dir() {
        run.join(RECORDS_FILE)
    } else {
        run.to_path_buf()
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("records serialise")
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}
