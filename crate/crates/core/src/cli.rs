//! The `nbhd` command line.
//!
//! Exit codes: 0 success, 1 a verification clause failed, 2 usage or input
//! error, 3 face budget exceeded. Errors go to stderr as
//! `error:<kind>: <message>`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::complex::facet_file::{read_facets, to_facet_text};
use crate::complex::{neighborhood_complex, DEFAULT_FACE_LIMIT};
use crate::error::{Error, ErrorKind, Result};
use crate::graph::dimacs::{read_graph, to_dimacs};
use crate::graph::{
    build_corollary_graph, build_gadget, construct_family, mycielskian, triangle_free_chromatic,
    CorollaryParams, Family, GadgetSpec, Graph,
};
use crate::homology::{reduced_homology_up_to, DEFAULT_CAP};
use crate::invariants::{chromatic_number, max_clique};
use crate::verify::{bounds_case, corollary_case, run_suite, theorem2_case, ReportOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "nbhd",
    version,
    about = "Neighborhood complexes, homology and chromatic bounds"
)]
pub struct Cli {
    /// Maximum number of faces enumerated per complex.
    #[arg(long, global = true, default_value_t = DEFAULT_FACE_LIMIT as u64, value_parser = clap::value_parser!(u64).range(1..))]
    limit: u64,

    /// Seed for every randomized choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Worker threads for independent verification cases.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Record wall-clock time in reports.
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a graph and write it as DIMACS.
    Construct {
        #[command(subcommand)]
        what: ConstructCmd,
        /// Output file (stdout if omitted).
        #[arg(short = 'o', long, global = true)]
        output: Option<PathBuf>,
    },
    /// Neighborhood complex of a graph as a facet list.
    Ncomplex {
        graph: PathBuf,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Reduced integral homology of a facet-list complex.
    Homology {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long = "max-dim", default_value_t = DEFAULT_CAP)]
        max_dim: usize,
    },
    /// Exact chromatic number with an optimal coloring.
    Chromatic { graph: PathBuf },
    /// Exact clique number with a maximum clique.
    Clique { graph: PathBuf },
    /// Chromatic number, clique number and Lovász bound side by side.
    Bounds {
        graph: PathBuf,
        #[arg(long = "max-dim", default_value_t = DEFAULT_CAP)]
        max_dim: usize,
    },
    /// Verification pipelines.
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
}

#[derive(Debug, Subcommand)]
enum ConstructCmd {
    Complete {
        #[arg(long)]
        p: usize,
    },
    Bipartite {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: usize,
    },
    Cycle {
        #[arg(long)]
        n: usize,
    },
    Kneser {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Mycielskian of a DIMACS graph, applied `--times` times.
    Mycielski {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 1)]
        times: usize,
    },
    /// Triangle-free graph with chromatic number q.
    Trianglefree {
        #[arg(long)]
        q: usize,
    },
    Gadget(GadgetArgs),
    Corollary(CorollaryArgs),
}

#[derive(Debug, Args)]
struct GadgetArgs {
    #[arg(long = "h")]
    h: PathBuf,
    #[arg(long, default_value_t = 0)]
    x: usize,
    #[arg(long = "k")]
    k: PathBuf,
    #[arg(long, default_value_t = 0)]
    y: usize,
}

#[derive(Debug, Args)]
struct CorollaryArgs {
    #[arg(long)]
    l: usize,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    p: usize,
    #[arg(long)]
    q: usize,
}

#[derive(Debug, Subcommand)]
enum VerifyCmd {
    /// Wedge homology and conn = 0 certificate for a gadget.
    Theorem2 {
        #[command(flatten)]
        gadget: GadgetArgs,
        #[arg(long = "max-dim", default_value_t = DEFAULT_CAP)]
        max_dim: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// chi = q, omega = p, K_{l,m} inside, certified bound 3.
    Corollary {
        #[command(flatten)]
        params: CorollaryArgs,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Every built-in case; reports sorted by case name.
    Suite {
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

/// Parses `argv` (including the program name), runs one subcommand and
/// returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind as K;
            if matches!(e.kind(), K::DisplayHelp | K::DisplayVersion) {
                print!("{e}");
                return EXIT_OK;
            }
            let msg = e.to_string();
            let first = msg
                .lines()
                .next()
                .unwrap_or("")
                .trim_start_matches("error: ");
            eprintln!("error:usage: {first}");
            return EXIT_USAGE;
        }
    };
    match execute(&cli) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_VERIFICATION_FAILED,
        Err(e) => {
            eprintln!("error:{}: {e}", e.kind());
            exit_code(e.kind())
        }
    }
}

pub fn exit_code(kind: ErrorKind) -> i32 {
    match kind {
        ErrorKind::Budget => EXIT_BUDGET,
        ErrorKind::Verification => EXIT_VERIFICATION_FAILED,
        _ => EXIT_USAGE,
    }
}

/// Ok(false) means a verification ran and failed.
fn execute(cli: &Cli) -> Result<bool> {
    let limit = usize::try_from(cli.limit).unwrap_or(usize::MAX);
    let opts = ReportOptions {
        cap: DEFAULT_CAP,
        limit,
        timing: cli.timing,
    };
    match &cli.command {
        Command::Construct { what, output } => {
            let g = construct(what)?;
            emit(output.as_deref(), &to_dimacs(&g))?;
            Ok(true)
        }
        Command::Ncomplex { graph, output } => {
            let c = neighborhood_complex(&read_graph(graph)?);
            emit(output.as_deref(), &to_facet_text(&c))?;
            Ok(true)
        }
        Command::Homology { complex, max_dim } => {
            let c = read_facets(complex)?;
            let groups = reduced_homology_up_to(&c, *max_dim, limit)?;
            match cli.format {
                Format::Json => print_json(&groups)?,
                Format::Text => groups.iter().for_each(|g| println!("{g}")),
            }
            Ok(true)
        }
        Command::Chromatic { graph } => {
            let g = read_graph(graph)?;
            let (chi, w) = chromatic_number(&g)?;
            match cli.format {
                Format::Json => {
                    print_json(&serde_json::json!({ "chi": chi, "coloring": w.assignment }))?
                }
                Format::Text => println!("chi = {chi}\ncoloring = {:?}", w.assignment),
            }
            Ok(true)
        }
        Command::Clique { graph } => {
            let g = read_graph(graph)?;
            let (omega, w) = max_clique(&g);
            match cli.format {
                Format::Json => {
                    print_json(&serde_json::json!({ "omega": omega, "clique": w.vertices }))?
                }
                Format::Text => println!("omega = {omega}\nclique = {:?}", w.vertices),
            }
            Ok(true)
        }
        Command::Bounds { graph, max_dim } => {
            let g = read_graph(graph)?;
            let name = graph
                .file_stem()
                .map_or("graph".into(), |s| s.to_string_lossy().into_owned());
            let opts = ReportOptions {
                cap: *max_dim,
                ..opts
            };
            let r = bounds_case(&name, &g, &opts)?;
            match cli.format {
                Format::Json => print_json(&r)?,
                Format::Text => {
                    println!("chi = {}\nomega = {}", r.chi, r.omega);
                    let value = r.lovasz.value.map_or("none".into(), |v| v.to_string());
                    let kind = if r.lovasz.certified {
                        "certified"
                    } else {
                        "lower bound"
                    };
                    println!("lovasz = {value} ({kind})");
                    for f in &r.lovasz.flags {
                        println!("flag: {f}");
                    }
                }
            }
            Ok(r.pass)
        }
        Command::Verify { what } => verify(cli, what, opts),
    }
}

fn verify(cli: &Cli, what: &VerifyCmd, opts: ReportOptions) -> Result<bool> {
    match what {
        VerifyCmd::Theorem2 {
            gadget,
            max_dim,
            json,
        } => {
            let spec = gadget_spec(gadget)?;
            let name = format!("{}-{}", stem(&gadget.h), stem(&gadget.k));
            let r = theorem2_case(
                &name,
                &spec,
                &ReportOptions {
                    cap: *max_dim,
                    ..opts
                },
            )?;
            finish(cli, &r, json.as_deref(), std::slice::from_ref(&r))
        }
        VerifyCmd::Corollary { params, json } => {
            let r = corollary_case(corollary_params(params), &opts)?;
            finish(cli, &r, json.as_deref(), std::slice::from_ref(&r))
        }
        VerifyCmd::Suite { json } => {
            let r = run_suite(cli.seed, cli.jobs, &opts)?;
            finish(cli, &r, json.as_deref(), &r.cases)
        }
    }
}

/// Writes the JSON report, prints per-case lines, and returns overall pass.
fn finish<T: Serialize>(
    cli: &Cli,
    report: &T,
    json: Option<&Path>,
    cases: &[crate::verify::CaseReport],
) -> Result<bool> {
    let text = to_json(report)?;
    if let Some(path) = json {
        fs::write(path, &text)?;
    }
    match cli.format {
        Format::Json if json.is_none() => println!("{text}"),
        _ => {
            for c in cases {
                let status = if c.pass { "PASS" } else { "FAIL" };
                if c.failures.is_empty() {
                    println!("{status} {}", c.case);
                } else {
                    println!("{status} {} [{}]", c.case, c.failures.join(", "));
                }
            }
        }
    }
    Ok(cases.iter().all(|c| c.pass))
}

fn construct(what: &ConstructCmd) -> Result<Graph> {
    match what {
        ConstructCmd::Complete { p } => construct_family(Family::Complete { p: *p }),
        ConstructCmd::Bipartite { l, m } => {
            construct_family(Family::CompleteBipartite { l: *l, m: *m })
        }
        ConstructCmd::Cycle { n } => construct_family(Family::Cycle { n: *n }),
        ConstructCmd::Kneser { n, k } => construct_family(Family::Kneser { n: *n, k: *k }),
        ConstructCmd::Mycielski { graph, times } => {
            let mut g = read_graph(graph)?;
            for _ in 0..*times {
                g = mycielskian(&g)?;
            }
            Ok(g)
        }
        ConstructCmd::Trianglefree { q } => triangle_free_chromatic(*q),
        ConstructCmd::Gadget(args) => Ok(build_gadget(&gadget_spec(args)?)?.graph),
        ConstructCmd::Corollary(args) => Ok(build_corollary_graph(corollary_params(args))?.graph),
    }
}

fn gadget_spec(args: &GadgetArgs) -> Result<GadgetSpec> {
    GadgetSpec::new(read_graph(&args.h)?, args.x, read_graph(&args.k)?, args.y)
}

fn corollary_params(args: &CorollaryArgs) -> CorollaryParams {
    CorollaryParams {
        l: args.l,
        m: args.m,
        p: args.p,
        q: args.q,
    }
}

fn stem(p: &Path) -> String {
    p.file_stem()
        .map_or("graph".into(), |s| s.to_string_lossy().into_owned())
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn to_json<T: Serialize>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| Error::param(format!("json: {e}")))?;
    s.push('\n');
    Ok(s)
}

fn print_json<T: Serialize>(v: &T) -> Result<()> {
    print!("{}", to_json(v)?);
    Ok(())
}
