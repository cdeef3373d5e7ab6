//! The `flowcrit` command line.

use std::fs;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::critical::{is_flow_critical_canvas, is_flow_critical_graph, is_psi_critical};
use crate::error::{Error, Result};
use crate::flow::find_nowhere_zero_flow;
use crate::generate::{
    brute_force_enumerate, generate_gk, generate_gkr_with, read_jsonl, write_jsonl, CorpusEntry, GenOptions,
};
use crate::graph::{parse_graph_file, write_graph_file, GraphFile, TipPreflow};
use crate::reduce::{to_tame, Strictness};
use crate::verify::{verify, verify_density, Claim};

#[derive(Parser, Debug)]
#[command(name = "flowcrit", version, about = "Nowhere-zero Z3 flows and flow-critical canvases")]
pub struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a nowhere-zero flow as a list of arcs, or "none".
    Solve { file: PathBuf },
    /// Decide flow-criticality of a graph or canvas file.
    Critical {
        file: PathBuf,
        /// Fix the tip preflow, one sign per tip edge in edge order.
        #[arg(long)]
        psi: Option<String>,
    },
    /// Generate 𝒢ₖ (or 𝒢ₖ,ᵣ with --easel) as JSON lines.
    Generate {
        #[arg(long)]
        k: usize,
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        easel: bool,
        #[arg(long, allow_hyphen_values = true)]
        r: Option<i64>,
        /// Keep only easels whose marked vertex has at least this degree.
        #[arg(long = "min-x-deg")]
        min_x_deg: Option<usize>,
        #[arg(long = "rem-depth", default_value_t = 1)]
        rem_depth: usize,
    },
    /// Exhaustively enumerate 𝒢ₖ as JSON lines.
    Enumerate {
        #[arg(long)]
        k: usize,
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a theorem or run a conjecture sweep.
    Verify {
        #[arg(long)]
        claim: String,
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// For `density`: largest graph order.
        #[arg(long = "max-n", default_value_t = 7)]
        max_n: usize,
        /// For `density`: all Z3-boundaries rather than zero only.
        #[arg(long = "all-boundaries")]
        all_boundaries: bool,
    },
    /// Reduce a flow-critical graph to a tame canvas.
    ToTame {
        file: PathBuf,
        /// Proceed when the input is not flow-critical.
        #[arg(long)]
        warn: bool,
        /// Write the canvas as a graph file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Outcome of a successful run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Violated,
}

pub fn exit_code(r: &Result<Status>) -> i32 {
    match r {
        Ok(Status::Ok) => 0,
        Ok(Status::Violated) => 1,
        Err(_) => 2,
    }
}

fn read_graph(path: &Path) -> Result<GraphFile> {
    let src = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_graph_file(&src)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn emit_corpus(out: &Option<PathBuf>, entries: &[CorpusEntry]) -> Result<()> {
    let mut buf = Vec::new();
    write_jsonl(&mut buf, entries)?;
    emit(out, &String::from_utf8(buf).expect("utf-8 json"))
}

pub fn run(cli: Cli) -> Result<Status> {
    if let Some(j) = cli.jobs {
        // a second initialisation (e.g. in tests) keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global();
    }
    match cli.command {
        Command::Solve { file } => {
            let g = read_graph(&file)?;
            match find_nowhere_zero_flow(&g.graph) {
                Some(o) => println!("{}", serde_json::to_string(o.arcs()).expect("arcs serialise")),
                None => println!("none"),
            }
            Ok(Status::Ok)
        }
        Command::Critical { file, psi } => {
            let g = read_graph(&file)?;
            let report = match (g.canvas(), psi) {
                (Some(c), Some(signs)) => is_psi_critical(&c, &TipPreflow::from_signs(&c, &signs)?)?,
                (Some(c), None) => is_flow_critical_canvas(&c),
                (None, Some(_)) => return Err(Error::Precondition("--psi needs a file with a tip".into())),
                (None, None) => is_flow_critical_graph(&g.graph),
            };
            println!("{}", report.to_json());
            Ok(Status::Ok)
        }
        Command::Generate { k, max_n, out, easel, r, min_x_deg, rem_depth } => {
            let entries = if easel {
                let r = r.ok_or_else(|| Error::Precondition("--easel needs --r".into()))?;
                let opts = GenOptions { rem_depth, check_depth: true, ..GenOptions::default() };
                let res = generate_gkr_with(k, r, max_n, &opts)?;
                if res.depth_stable == Some(false) {
                    eprintln!(
                        "warning: a deeper nesting level changes the result; rerun with --rem-depth {}",
                        rem_depth + 1
                    );
                }
                let min = min_x_deg.unwrap_or(0);
                res.entries.into_iter().filter(|e| e.x.is_some_and(|x| e.canvas.degree(x) >= min)).collect()
            } else {
                if r.is_some() || min_x_deg.is_some() {
                    return Err(Error::Precondition("--r and --min-x-deg need --easel".into()));
                }
                generate_gk(k, max_n)?
            };
            eprintln!("{} entries", entries.len());
            emit_corpus(&out, &entries)?;
            Ok(Status::Ok)
        }
        Command::Enumerate { k, max_n, out } => {
            let entries = brute_force_enumerate(k, max_n)?;
            eprintln!("{} entries", entries.len());
            emit_corpus(&out, &entries)?;
            Ok(Status::Ok)
        }
        Command::Verify { claim, corpus, max_n, all_boundaries } => {
            let claim: Claim = claim.parse()?;
            let result = if claim == Claim::Density {
                verify_density(max_n, !all_boundaries)?
            } else {
                let path = corpus.ok_or_else(|| Error::Precondition(format!("{claim} needs --corpus")))?;
                let f = fs::File::open(&path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                verify(claim, &read_jsonl(BufReader::new(f))?)?
            };
            println!("{}", result.to_json());
            Ok(if result.passed() || claim.is_conjecture() { Status::Ok } else { Status::Violated })
        }
        Command::ToTame { file, warn, out } => {
            let g = read_graph(&file)?;
            let mode = if warn { Strictness::Warn } else { Strictness::Strict };
            let report = to_tame(&g.graph, mode)?;
            println!("{}", serde_json::to_string_pretty(&report).expect("report serialises"));
            if let Some(p) = &out {
                let c = &report.canvas_graph;
                emit(&Some(p.clone()), &write_graph_file(c.graph(), Some(c.tip())))?;
            }
            Ok(if report.holds() { Status::Ok } else { Status::Violated })
        }
    }
}
