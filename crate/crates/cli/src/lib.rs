//! Argument parsing and dispatch for the `alon-tarsi` binary.
//!
//! Every subcommand reads JSON from a file or standard input and writes
//! compact, newline-terminated JSON (or DOT for `export`). Failures print a
//! single JSON object `{"error": kind, "message": text}` on the diagnostic
//! stream.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use alon_tarsi::atnum::{at_number_exact_with, verify_no_at_orientation_with, AtResult};
use alon_tarsi::eulerian::tally_eulerian_with;
use alon_tarsi::graph::{Digraph, Graph};
use alon_tarsi::halin::{enumerate_halin_with, random_halin, wheel, HalinGraph};
use alon_tarsi::orient::{construct_at_orientation_with, AtCertificate};
use alon_tarsi::{Error, Limits};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::Value;

pub mod dot;

#[derive(Debug, Parser)]
#[command(name = "alon-tarsi", version, about = "Alon-Tarsi orientations and numbers")]
struct Cli {
    #[command(flatten)]
    caps: Caps,
    /// Write output here instead of standard output.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Caps {
    /// Maximum arc count for Eulerian tallies.
    #[arg(long, global = true)]
    arc_cap: Option<usize>,
    /// Maximum arc count for the polynomial-coefficient oracle.
    #[arg(long, global = true)]
    oracle_cap: Option<usize>,
    /// Maximum number of enumerated directed cycles.
    #[arg(long, global = true)]
    cycle_cap: Option<usize>,
    /// Maximum edge count for exhaustive orientation search.
    #[arg(long, global = true)]
    edge_cap: Option<usize>,
    /// Maximum vertex count for chromatic numbers.
    #[arg(long, global = true)]
    chromatic_cap: Option<usize>,
    /// Maximum vertex count for Halin graph enumeration.
    #[arg(long, global = true)]
    enumerate_cap: Option<usize>,
}

impl Caps {
    fn limits(&self) -> Limits {
        let d = Limits::default();
        Limits {
            tally_arcs: self.arc_cap.unwrap_or(d.tally_arcs),
            oracle_arcs: self.oracle_cap.unwrap_or(d.oracle_arcs),
            cycles: self.cycle_cap.unwrap_or(d.cycles),
            search_edges: self.edge_cap.unwrap_or(d.search_edges),
            chromatic_vertices: self.chromatic_cap.unwrap_or(d.chromatic_vertices),
            enumerate_vertices: self.enumerate_cap.unwrap_or(d.enumerate_vertices),
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a Halin graph.
    #[command(subcommand)]
    Gen(GenCommand),
    /// All Halin graphs up to a vertex count, one JSON object per line.
    Corpus {
        #[arg(long)]
        max_n: usize,
    },
    /// Count even and odd Eulerian subdigraphs of a digraph.
    Tally(InputArg),
    /// Alon-Tarsi number of a graph or Halin graph.
    At(AtArgs),
    /// Re-check a certificate; exit 0 iff it is valid.
    Verify {
        #[command(flatten)]
        input: InputArg,
        /// Also require the certificate to orient exactly this graph.
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Render a graph or certificate.
    Export(ExportArgs),
}

#[derive(Debug, Subcommand)]
enum GenCommand {
    /// Wheel with the given number of rim vertices.
    Wheel {
        #[arg(long)]
        outer: usize,
    },
    /// Random Halin graph with a fixed number of leaves.
    Random {
        #[arg(long)]
        leaves: usize,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
struct InputArg {
    /// Read from this file instead of standard input.
    #[arg(short, long)]
    input: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(id = "mode", required = true, multiple = false)]
struct AtMode {
    /// Exhaustive search for the exact value.
    #[arg(long)]
    exact: bool,
    /// Closed form with a constructed certificate (Halin input only).
    #[arg(long)]
    construct: bool,
    /// Check that no Alon-Tarsi orientation has maximum outdegree K - 2.
    #[arg(long, value_name = "K", value_parser = clap::value_parser!(u64).range(2..))]
    verify_lower: Option<u64>,
}

#[derive(Debug, Args)]
struct AtArgs {
    #[command(flatten)]
    mode: AtMode,
    #[command(flatten)]
    input: InputArg,
}

#[derive(Debug, Args)]
struct ExportArgs {
    /// Graphviz output.
    #[arg(long, required = true)]
    dot: bool,
    #[command(flatten)]
    input: InputArg,
    /// Certificate whose arcs are drawn over the input graph.
    #[arg(long)]
    cert: Option<PathBuf>,
}

/// Anything a subcommand can fail with.
#[derive(Debug)]
enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl Failure {
    fn kind(&self) -> &'static str {
        match self {
            Failure::Lib(e) => e.kind(),
            Failure::Io(_) => "io",
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Lib(e) => e.to_string(),
            Failure::Io(m) => m.clone(),
        }
    }
}

/// Parsed JSON input of any supported shape.
enum Document {
    Halin(HalinGraph),
    Graph(Graph),
    Digraph(Digraph),
    Certificate(AtCertificate),
    Result(AtResult),
}

impl Document {
    fn parse(text: &str) -> Result<Self, Error> {
        let value: Value = serde_json::from_str(text)?;
        let has = |key: &str| value.get(key).is_some();
        Ok(if has("tree") {
            Document::Halin(serde_json::from_value(value)?)
        } else if has("witness") {
            Document::Result(serde_json::from_value(value)?)
        } else if has("construction") {
            Document::Certificate(serde_json::from_value(value)?)
        } else if has("edges") {
            Document::Graph(serde_json::from_value(value)?)
        } else if has("arcs") {
            Document::Digraph(serde_json::from_value(value)?)
        } else {
            return Err(Error::Parse("unrecognised JSON document".into()));
        })
    }

    fn graph(&self) -> Result<Graph, Error> {
        match self {
            Document::Halin(h) => Ok(h.graph().clone()),
            Document::Graph(g) => Ok(g.clone()),
            Document::Digraph(d) => d.underlying_graph(),
            Document::Certificate(c) => Ok(c.orientation().graph().clone()),
            Document::Result(r) => Ok(r.witness.orientation().graph().clone()),
        }
    }
}

#[derive(Serialize)]
struct LowerBoundReport {
    lower_bound: u64,
    max_outdeg: u64,
    holds: bool,
}

/// Runs the command line `argv` (program name first) and returns the exit code.
pub fn run<I, T>(argv: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match execute(&cli, stdin) {
        Ok((text, code)) => {
            let written = match &cli.output {
                Some(path) => fs::write(path, text.as_bytes()),
                None => out.write_all(text.as_bytes()),
            };
            match written {
                Ok(()) => code,
                Err(e) => report(err, &Failure::from(e)),
            }
        }
        Err(f) => report(err, &f),
    }
}

fn report(err: &mut dyn Write, f: &Failure) -> i32 {
    let line = serde_json::json!({ "error": f.kind(), "message": f.message() });
    let _ = writeln!(err, "{line}");
    1
}

fn read_input(path: Option<&PathBuf>, stdin: &mut dyn Read) -> Result<String, Failure> {
    match path {
        Some(p) => Ok(fs::read_to_string(p)?),
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn json_line<T: Serialize>(value: &T) -> Result<String, Failure> {
    let mut s = serde_json::to_string(value).map_err(Error::from)?;
    s.push('\n');
    Ok(s)
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<(String, i32), Failure> {
    let limits = cli.caps.limits();
    let text = match &cli.command {
        Command::Gen(GenCommand::Wheel { outer }) => json_line(&wheel(*outer)?)?,
        Command::Gen(GenCommand::Random { leaves, seed }) => json_line(&random_halin(*leaves, *seed)?)?,
        Command::Corpus { max_n } => {
            let mut s = String::new();
            for h in enumerate_halin_with(*max_n, &limits)? {
                s.push_str(&json_line(&h)?);
            }
            s
        }
        Command::Tally(input) => {
            let d: Digraph = serde_json::from_str(&read_input(input.input.as_ref(), stdin)?)
                .map_err(Error::from)?;
            json_line(&tally_eulerian_with(&d, limits.tally_arcs)?)?
        }
        Command::At(args) => {
            let doc = Document::parse(&read_input(args.input.input.as_ref(), stdin)?)?;
            if args.mode.construct {
                let Document::Halin(h) = &doc else {
                    return Err(Error::Precondition("--construct needs a Halin graph".into()).into());
                };
                json_line(&construct_at_orientation_with(h, &limits)?)?
            } else if let Some(k) = args.mode.verify_lower {
                let g = doc.graph()?;
                let holds = verify_no_at_orientation_with(&g, (k - 2) as usize, &limits)?;
                let report = LowerBoundReport { lower_bound: k, max_outdeg: k - 2, holds };
                return Ok((json_line(&report)?, if holds { 0 } else { 1 }));
            } else {
                json_line(&at_number_exact_with(&doc.graph()?, &limits)?)?
            }
        }
        Command::Verify { input, graph } => {
            let doc = Document::parse(&read_input(input.input.as_ref(), stdin)?)?;
            let cert = match &doc {
                Document::Certificate(c) => c,
                Document::Result(r) => {
                    if r.value != r.witness.at_bound() {
                        return Err(Error::VerificationFailed(format!(
                            "value {} does not match witness bound {}",
                            r.value,
                            r.witness.at_bound()
                        ))
                        .into());
                    }
                    &r.witness
                }
                _ => return Err(Error::Parse("expected a certificate".into()).into()),
            };
            match graph {
                Some(path) => {
                    let g = Document::parse(&fs::read_to_string(path)?)?.graph()?;
                    cert.verify_for(&g, &limits)?;
                }
                None => cert.verify(&limits)?,
            }
            json_line(&serde_json::json!({ "valid": true }))?
        }
        Command::Export(args) => {
            debug_assert!(args.dot);
            let doc = Document::parse(&read_input(args.input.input.as_ref(), stdin)?)?;
            let cert = match &args.cert {
                Some(p) => Some(Document::parse(&fs::read_to_string(p)?)?),
                None => None,
            };
            let overlay = cert.as_ref().unwrap_or(&doc);
            let arcs = match overlay {
                Document::Digraph(d) => Some(d),
                Document::Certificate(c) => Some(c.orientation().digraph()),
                Document::Result(r) => Some(r.witness.orientation().digraph()),
                _ => None,
            };
            let halin = match &doc {
                Document::Halin(h) => Some(h),
                _ => None,
            };
            let graph = match &doc {
                Document::Graph(g) => Some(g),
                _ => None,
            };
            dot::render(&dot::DotInput { halin, graph, arcs })
        }
    };
    Ok((text, 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut input = stdin.as_bytes();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("alon-tarsi").chain(args.iter().copied());
        let code = run(argv, &mut input, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn wheel_construct_verify() {
        let (code, h, _) = call(&["gen", "wheel", "--outer", "8"], "");
        assert_eq!(code, 0);
        let (code, cert, _) = call(&["at", "--construct"], &h);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&cert).unwrap();
        assert_eq!(v["max_outdeg"], 2);
        assert_eq!(call(&["verify"], &cert).0, 0);
    }

    #[test]
    fn exact_wheel_five() {
        let (_, h, _) = call(&["gen", "wheel", "--outer", "5"], "");
        let (code, r, _) = call(&["at", "--exact"], &h);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&r).unwrap();
        assert_eq!(v["value"], 4);
        assert_eq!(call(&["verify"], &r).0, 0);
    }

    #[test]
    fn tally_c4() {
        let (code, out, _) = call(&["tally"], r#"{"n":4,"arcs":[[0,1],[1,2],[2,3],[3,0]]}"#);
        assert_eq!(code, 0);
        assert_eq!(out, "{\"even\":2,\"odd\":0,\"diff\":2}\n");
    }

    #[test]
    fn verify_lower_bound() {
        let (_, h, _) = call(&["gen", "wheel", "--outer", "5"], "");
        let (code, out, _) = call(&["at", "--verify-lower", "4"], &h);
        assert_eq!(code, 0);
        assert!(out.contains("\"holds\":true"));
        let (code, out, _) = call(&["at", "--verify-lower", "5"], &h);
        assert_eq!(code, 1);
        assert!(out.contains("\"holds\":false"));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(call(&["frobnicate"], "").0, 2);
        assert_eq!(call(&["at", "--exact", "--construct"], "").0, 2);
        assert_eq!(call(&["at"], "").0, 2);
        assert_eq!(call(&["gen", "wheel", "--outer", "4", "--bogus"], "").0, 2);
    }

    #[test]
    fn runtime_errors_are_one_json_line() {
        let (code, _, err) = call(&["tally", "--arc-cap", "3"], r#"{"n":4,"arcs":[[0,1],[1,2],[2,3],[3,0]]}"#);
        assert_eq!(code, 1);
        assert_eq!(err.lines().count(), 1);
        let v: Value = serde_json::from_str(&err).unwrap();
        assert_eq!(v["error"], "cap-exceeded");
        let (code, _, err) = call(&["tally"], "not json");
        assert_eq!(code, 1);
        assert_eq!(serde_json::from_str::<Value>(&err).unwrap()["error"], "parse");
    }

    #[test]
    fn construct_rejects_plain_graph() {
        let (code, _, err) = call(&["at", "--construct"], r#"{"n":2,"edges":[[0,1]]}"#);
        assert_eq!(code, 1);
        assert!(err.contains("precondition"));
    }

    #[test]
    fn corpus_lines() {
        let (code, out, _) = call(&["corpus", "--max-n", "8"], "");
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 1 + 1 + 2 + 3 + 7);
    }

    #[test]
    fn export_dot_with_certificate() {
        let (_, h, _) = call(&["gen", "wheel", "--outer", "4"], "");
        let (_, cert, _) = call(&["at", "--construct"], &h);
        let dir = std::env::temp_dir().join(format!("at-cli-unit-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("cert.json");
        fs::write(&path, &cert).unwrap();
        let (code, out, _) = call(&["export", "--dot", "--cert", path.to_str().unwrap()], &h);
        assert_eq!(code, 0);
        assert!(out.starts_with("digraph G {"));
        assert!(out.contains("4 [shape=box]"));
        assert_eq!(out.matches(" -> ").count(), 8);
        fs::remove_dir_all(&dir).unwrap();
    }
}
