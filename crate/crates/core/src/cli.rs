//! The `cei` command line.
//!
//! Exit codes: 0 success, 1 input or usage error, 2 when `verify` finds a
//! violation of an equality claim (violations of `THM2_EDC` and
//! `COR2_PRINTED` are expected and exit 0).

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::constructions::{self, SpliceSpec};
use crate::generators::FamilySpec;
use crate::graph::Graph;
use crate::index::index_summary;
use crate::io::{parse_graph, write_graph, GraphFormat};
use crate::rational::Rational;
use crate::verify::{self, render_json, render_table, Sampling, SizeBounds, TheoremId, VerifyConfig};

#[derive(Parser, Debug)]
#[command(name = "cei", version, about = "Connective eccentric index: compute, construct, verify")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print order, size, degrees, radius, diameter, total eccentricity,
    /// well-connected count and the index of a graph.
    Compute {
        /// File path, `-` for stdin, or a family spec such as `cycle:6`.
        input: String,
        /// Input format; detected from the first line when omitted.
        #[arg(long)]
        format: Option<GraphFormat>,
        #[arg(long)]
        json: bool,
        /// Decimal places in the approximate value.
        #[arg(long, default_value_t = 6)]
        places: usize,
    },
    /// Emit a member of a named family.
    Generate {
        /// e.g. `cycle:6`, `kpartite:2,3`, `random:n=12,p=3/10,seed=42`.
        spec: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, default_value = "graph6")]
        format: GraphFormat,
    },
    /// Apply a graph operation: double, edc, join, symdiff, disjunction, splice.
    Construct {
        op: String,
        #[arg(required = true)]
        inputs: Vec<String>,
        /// Splice anchors `v1,v2`.
        #[arg(long)]
        at: Option<String>,
        #[arg(long)]
        input_format: Option<GraphFormat>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, default_value = "graph6")]
        format: GraphFormat,
    },
    /// Check closed forms against the BFS oracle.
    Verify {
        /// Theorem id (e.g. THM1_DOUBLE) or `all`.
        theorem: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Upper vertex bound for random samples.
        #[arg(long)]
        max_n: Option<usize>,
        /// Enumerate all connected labeled graphs up to this order instead
        /// of sampling.
        #[arg(long)]
        exhaustive: Option<usize>,
        #[arg(long)]
        json: bool,
        /// Include elapsed times (output is then no longer reproducible).
        #[arg(long)]
        timing: bool,
    },
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match dispatch(cli.command, stdin, stdout) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
    }
}

fn dispatch(command: Command, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Compute {
            input,
            format,
            json,
            places,
        } => {
            let g = load_graph(&input, format, stdin)?;
            stdout.write_all(compute_report(&g, json, places)?.as_bytes())?;
            Ok(0)
        }
        Command::Generate { spec, output, format } => {
            let g = spec.parse::<FamilySpec>()?.generate()?;
            emit(&g, format, output.as_deref(), stdout)?;
            Ok(0)
        }
        Command::Construct {
            op,
            inputs,
            at,
            input_format,
            output,
            format,
        } => {
            let graphs = inputs
                .iter()
                .map(|i| load_graph(i, input_format, stdin))
                .collect::<Result<Vec<_>, _>>()?;
            let g = construct(&op, &graphs, at.as_deref())?;
            emit(&g, format, output.as_deref(), stdout)?;
            Ok(0)
        }
        Command::Verify {
            theorem,
            trials,
            seed,
            max_n,
            exhaustive,
            json,
            timing,
        } => {
            let config = VerifyConfig {
                sampling: match exhaustive {
                    Some(max_n) => Sampling::Exhaustive { max_n },
                    None => Sampling::Random { trials },
                },
                seed,
                bounds: max_n.map(SizeBounds::capped).unwrap_or_default(),
                ..VerifyConfig::default()
            };
            let reports = if theorem.eq_ignore_ascii_case("all") {
                verify::verify_all(&config)
            } else {
                vec![verify::verify(theorem.parse::<TheoremId>()?, &config)?]
            };
            let text = if json {
                render_json(&reports, timing) + "\n"
            } else {
                render_table(&reports, timing)
            };
            stdout.write_all(text.as_bytes())?;
            Ok(if reports.iter().any(|r| r.error.is_some()) {
                1
            } else if reports.iter().any(|r| r.failed()) {
                2
            } else {
                0
            })
        }
    }
}

/// `-` reads stdin, an existing path reads the file, otherwise the text is
/// tried as a family spec.
fn load_graph(input: &str, format: Option<GraphFormat>, stdin: &mut dyn Read) -> Result<Graph, Failure> {
    let text = if input == "-" {
        let mut buf = String::new();
        stdin.read_to_string(&mut buf)?;
        buf
    } else if Path::new(input).exists() {
        std::fs::read_to_string(input).map_err(|e| Failure(format!("{input}: {e}")))?
    } else if let Ok(spec) = input.parse::<FamilySpec>() {
        return Ok(spec.generate()?);
    } else {
        return Err(Failure(format!("{input}: no such file and not a family spec")));
    };
    Ok(parse_graph(&text, format)?)
}

fn emit(g: &Graph, format: GraphFormat, output: Option<&Path>, stdout: &mut dyn Write) -> Result<(), Failure> {
    let text = write_graph(g, format)?;
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure(format!("{}: {e}", path.display())))?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn parse_anchors(at: Option<&str>) -> Result<(usize, usize), Failure> {
    let at = at.ok_or_else(|| Failure("splice needs --at v1,v2".into()))?;
    let (a, b) = at
        .split_once(',')
        .ok_or_else(|| Failure(format!("--at expects v1,v2, got `{at}`")))?;
    let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| Failure(format!("bad vertex `{s}`")));
    Ok((parse(a)?, parse(b)?))
}

fn construct(op: &str, graphs: &[Graph], at: Option<&str>) -> Result<Graph, Failure> {
    let arity = |k: usize| {
        if graphs.len() == k {
            Ok(())
        } else {
            Err(Failure(format!("{op} takes {k} input graph(s), got {}", graphs.len())))
        }
    };
    let g = match op {
        "double" => {
            arity(1)?;
            constructions::double_graph(&graphs[0])?
        }
        "edc" => {
            arity(1)?;
            constructions::extended_double_cover(&graphs[0])?
        }
        "join" => constructions::join_n(graphs)?,
        "symdiff" => {
            arity(2)?;
            constructions::symmetric_difference(&graphs[0], &graphs[1])?
        }
        "disjunction" => {
            arity(2)?;
            constructions::disjunction(&graphs[0], &graphs[1])?
        }
        "splice" => {
            arity(2)?;
            let (v1, v2) = parse_anchors(at)?;
            constructions::splice(&SpliceSpec {
                g1: &graphs[0],
                g2: &graphs[1],
                v1,
                v2,
            })?
        }
        other => {
            return Err(Failure(format!(
                "unknown operation `{other}` (expected double, edc, join, symdiff, disjunction, splice)"
            )))
        }
    };
    Ok(g)
}

#[derive(Serialize)]
struct ComputeJson {
    n: usize,
    m: usize,
    min_degree: usize,
    max_degree: usize,
    degrees: Vec<usize>,
    radius: usize,
    diameter: usize,
    total_eccentricity: usize,
    well_connected_count: usize,
    cei: Rational,
    cei_decimal: String,
}

/// Degree sequences longer than this are summarised by min/max only.
const DEGREE_LIST_LIMIT: usize = 32;

fn compute_report(g: &Graph, json: bool, places: usize) -> Result<String, Failure> {
    let s = index_summary(g)?;
    let degrees = g.degrees();
    let min_degree = *degrees.iter().min().expect("n >= 1");
    let max_degree = *degrees.iter().max().expect("n >= 1");
    let decimal = s.cei.to_decimal(places);
    if json {
        let out = ComputeJson {
            n: s.n,
            m: s.m,
            min_degree,
            max_degree,
            degrees,
            radius: s.radius,
            diameter: s.diameter,
            total_eccentricity: s.total_eccentricity,
            well_connected_count: s.well_connected_count,
            cei: s.cei,
            cei_decimal: decimal,
        };
        return Ok(serde_json::to_string_pretty(&out)? + "\n");
    }
    let mut sorted = degrees.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let sequence = if sorted.len() <= DEGREE_LIST_LIMIT {
        let list: Vec<_> = sorted.iter().map(usize::to_string).collect();
        format!(" [{}]", list.join(","))
    } else {
        String::new()
    };
    Ok(format!(
        "n: {}\nm: {}\ndegrees: min {min_degree}, max {max_degree}{sequence}\nradius: {}\ndiameter: {}\n\
         total eccentricity: {}\nwell-connected vertices: {}\nconnective eccentric index: {} ~ {decimal}\n",
        s.n, s.m, s.radius, s.diameter, s.total_eccentricity, s.well_connected_count, s.cei
    ))
}
