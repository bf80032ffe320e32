//! Command-line front end.
//!
//! Exit codes: 0 when every asserted check passes, 1 when a verification
//! claim fails, 2 for usage errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::constructions::{build, FamilySpec};
use crate::enumeration::{enumerate, workers_from_env, EnumSpec, GraphClass};
use crate::error::{Error, Result};
use crate::graph::{edgelist, graph6, Graph};
use crate::indices::{index_bundle, IndexBundle, IndexKind};
use crate::verification::{
    claim1_check, claim1_range, crossing_csv, crossing_table, extremal_scan, theorem_suite, Claim1Report, Direction,
};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    G6,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "topoidx", version, about = "Exact graph indices and exhaustive extremal checks")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print all indices of a graph.
    Indices(IndicesArgs),
    /// Stream the members of a graph class as graph6.
    Enumerate {
        #[arg(long)]
        class: GraphClass,
        #[arg(long)]
        n: usize,
        /// One graph per isomorphism class.
        #[arg(long)]
        dedupe: bool,
    },
    /// Best and second-best values of an index over a class.
    Extremal {
        #[arg(long)]
        class: GraphClass,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        index: IndexKind,
        #[arg(long)]
        direction: Direction,
    },
    /// Run the exhaustive checks.
    Verify {
        #[arg(long, default_value_t = 9)]
        eulerian_max: usize,
        #[arg(long, default_value_t = 8)]
        twoec_max: usize,
    },
    /// Distance-multiset comparison for one split or every split up to an order.
    Claim1 {
        #[arg(long, requires = "b", conflicts_with = "n_max")]
        a: Option<usize>,
        #[arg(long, requires = "a")]
        b: Option<usize>,
        #[arg(long, required_unless_present = "a")]
        n_max: Option<usize>,
    },
    /// Harary indices of the G1/G2 pair across a range of orders.
    Crossing {
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
    },
    /// Print a construction as graph6.
    Family(FamilyArgs),
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).multiple(false)))]
pub struct IndicesArgs {
    /// Edge list ("n m" header then one "u v" per line) or graph6 lines.
    #[arg(long, group = "source")]
    input: Option<PathBuf>,
    #[arg(long, group = "source")]
    g6: Option<String>,
    #[arg(long, group = "source")]
    family: Option<String>,
    #[arg(long, requires = "family")]
    n: Option<usize>,
    /// Cycle lengths for a bouquet, comma separated.
    #[arg(long, value_delimiter = ',', requires = "family")]
    lengths: Vec<usize>,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long)]
    kind: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    lengths: Vec<usize>,
}

/// Parses `args` (program name first), runs the command and writes the
/// output. Returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let (code, out, err) = run_captured(args);
    eprint!("{err}");
    print!("{out}");
    code
}

/// Like [`run`], but returns standard output and standard error text
/// instead of printing them. `--output` files are still written.
pub fn run_captured<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { (0, text, String::new()) } else { (2, String::new(), text) };
        }
    };
    match execute(&cli) {
        Ok((text, ok)) => {
            if let Some(path) = &cli.output {
                if let Err(e) = std::fs::write(path, &text) {
                    return (2, String::new(), format!("error: {}: {e}\n", path.display()));
                }
                (i32::from(!ok), String::new(), String::new())
            } else {
                (i32::from(!ok), text, String::new())
            }
        }
        Err(e) => (2, String::new(), format!("error: {e}\n")),
    }
}

fn json<T: Serialize + ?Sized>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn unsupported(format: Format, what: &str) -> Error {
    Error::Parse(format!("format {format:?} is not available for {what}").to_lowercase())
}

/// Runs one command, returning its rendered output and whether every
/// asserted check passed.
fn execute(cli: &Cli) -> Result<(String, bool)> {
    let format = cli.format;
    match &cli.command {
        Command::Indices(a) => {
            let graphs = indices_input(a)?;
            let bundles = graphs.iter().map(index_bundle).collect::<Result<Vec<_>>>()?;
            Ok((render_bundles(&bundles, format)?, true))
        }
        Command::Enumerate { class, n, dedupe } => {
            let mut spec = EnumSpec::new(*n, *class);
            if *dedupe {
                spec = spec.deduped();
            }
            let graphs = enumerate(spec, workers_from_env()?)?;
            let codes = graphs.iter().map(graph6::encode).collect::<Result<Vec<_>>>()?;
            let text = match format {
                Format::G6 | Format::Text => codes.iter().map(|c| format!("{c}\n")).collect(),
                Format::Csv => std::iter::once("graph6\n".to_string()).chain(codes.iter().map(|c| format!("{c}\n"))).collect(),
                Format::Json => json(&codes),
            };
            Ok((text, true))
        }
        Command::Extremal { class, n, index, direction } => {
            let r = extremal_scan(*class, *n, *index, *direction, workers_from_env()?)?;
            let text = match format {
                Format::Json => json(&r),
                Format::Csv => r.to_csv(),
                Format::Text => r.to_text(),
                Format::G6 => r.best_witnesses.iter().map(|w| format!("{w}\n")).collect(),
            };
            Ok((text, true))
        }
        Command::Verify { eulerian_max, twoec_max } => {
            let report = theorem_suite(*eulerian_max, *twoec_max, workers_from_env()?)?;
            let text = match format {
                Format::Json => report.to_json() + "\n",
                Format::Csv => report.to_csv(),
                Format::Text => report.to_text(),
                Format::G6 => return Err(unsupported(format, "verify")),
            };
            Ok((text, report.all_passed()))
        }
        Command::Claim1 { a, b, n_max } => {
            let reports = match (a, b, n_max) {
                (Some(a), Some(b), _) => vec![claim1_check(*a, *b)?],
                (_, _, Some(n)) => claim1_range(*n)?,
                _ => return Err(Error::Parse("give --a and --b, or --n-max".into())),
            };
            let ok = reports.iter().all(|r| r.reciprocal_ok);
            Ok((render_claim1(&reports, format)?, ok))
        }
        Command::Crossing { from, to } => {
            let rows = crossing_table(*from, *to)?;
            let text = match format {
                Format::Json => json(&rows),
                Format::Csv => crossing_csv(&rows),
                Format::Text => rows
                    .iter()
                    .map(|r| format!("n={} h_g1={} h_g2={} sign={}\n", r.n, r.h_g1, r.h_g2, r.sign))
                    .collect(),
                Format::G6 => return Err(unsupported(format, "crossing")),
            };
            Ok((text, true))
        }
        Command::Family(f) => {
            let g = build(&FamilySpec::parse(&f.kind, f.n, &f.lengths)?)?;
            let text = match format {
                Format::G6 | Format::Text => graph6::encode(&g)? + "\n",
                Format::Csv => edgelist::write(&g),
                Format::Json => json(&serde_json::json!({
                    "graph6": graph6::encode(&g)?,
                    "order": g.order(),
                    "edges": g.edges(),
                })),
            };
            Ok((text, true))
        }
    }
}

fn indices_input(a: &IndicesArgs) -> Result<Vec<Graph>> {
    if let Some(code) = &a.g6 {
        return Ok(vec![graph6::decode(code)?]);
    }
    if let Some(kind) = &a.family {
        return Ok(vec![build(&FamilySpec::parse(kind, a.n, &a.lengths)?)?]);
    }
    let path = a.input.as_ref().expect("clap requires one source");
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    if first.split_whitespace().count() == 2 {
        Ok(vec![edgelist::parse(&text)?])
    } else {
        text.lines().filter(|l| !l.trim().is_empty()).map(|l| graph6::decode(l.trim())).collect()
    }
}

fn render_bundles(bundles: &[IndexBundle], format: Format) -> Result<String> {
    Ok(match format {
        Format::Json if bundles.len() == 1 => json(&bundles[0]),
        Format::Json => json(bundles),
        Format::Csv => {
            let mut s = String::from("wiener,harary,m1,m2,pi1,pi2\n");
            for b in bundles {
                writeln!(s, "{},{},{},{},{},{}", b.wiener, b.harary, b.m1, b.m2, b.pi1, b.pi2).unwrap();
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for b in bundles {
                for kind in IndexKind::ALL {
                    writeln!(s, "{kind}={}", b.get(kind)).unwrap();
                }
            }
            s
        }
        Format::G6 => return Err(unsupported(format, "indices")),
    })
}

fn render_claim1(reports: &[Claim1Report], format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => json(reports),
        Format::Csv | Format::Text => {
            let mut s = String::new();
            if format == Format::Csv {
                s.push_str("a,b,n,x,y,low_range_ok,high_range_ok,separation_ok,reciprocal_ok,reciprocal_margin\n");
            }
            for r in reports {
                let sep = if format == Format::Csv { "," } else { " " };
                let fields = [
                    ("a", r.a.to_string()),
                    ("b", r.b.to_string()),
                    ("n", r.n.to_string()),
                    ("x", r.x.to_string()),
                    ("y", r.y.to_string()),
                    ("low_range_ok", r.low_range_ok.to_string()),
                    ("high_range_ok", r.high_range_ok.to_string()),
                    ("separation_ok", r.separation_ok.to_string()),
                    ("reciprocal_ok", r.reciprocal_ok.to_string()),
                    ("reciprocal_margin", r.reciprocal_margin.to_string()),
                ];
                let line: Vec<_> = fields
                    .iter()
                    .map(|(k, v)| if format == Format::Csv { v.clone() } else { format!("{k}={v}") })
                    .collect();
                s.push_str(&line.join(sep));
                if format == Format::Text {
                    write!(s, " S={} T={}", r.s, r.t).unwrap();
                }
                s.push('\n');
            }
            s
        }
        Format::G6 => return Err(unsupported(format, "claim1")),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_ok(args: &[&str]) -> String {
        let (code, out, err) = run_captured(std::iter::once("topoidx").chain(args.iter().copied()));
        assert_eq!(code, 0, "{err}");
        out
    }

    #[test]
    fn indices_of_cycle() {
        let out = run_ok(&["indices", "--family", "cycle", "--n", "8"]);
        assert_eq!(out, "wiener=64\nharary=47/3\nm1=32\nm2=32\npi1=256\npi2=65536\n");
    }

    #[test]
    fn large_pi2_prints_in_full() {
        let out = run_ok(&["indices", "--family", "complete", "--n", "40"]);
        let pi2 = out.lines().find_map(|l| l.strip_prefix("pi2=")).unwrap();
        assert_eq!(pi2, num_bigint::BigUint::from(39u32).pow(39 * 40).to_string());
    }

    #[test]
    fn crossing_signs() {
        let out = run_ok(&["crossing", "--from", "19", "--to", "21", "--format", "csv"]);
        let signs: Vec<_> = out.lines().skip(1).map(|l| l.rsplit(',').next().unwrap()).collect();
        assert_eq!(signs, ["-1", "1", "1"]);
    }

    #[test]
    fn claim1_smallest_split() {
        let out = run_ok(&["claim1", "--a", "3", "--b", "3"]);
        assert!(out.contains("separation_ok=false"));
        assert!(out.contains("reciprocal_ok=true"));
    }

    #[test]
    fn family_graph6() {
        assert_eq!(run_ok(&["family", "--kind", "complete", "--n", "4"]), "C~\n");
    }

    #[test]
    fn usage_errors_exit_two() {
        for args in [
            &["topoidx", "indices", "--family", "cycle", "--n", "8", "--bogus"][..],
            &["topoidx"],
            &["topoidx", "crossing", "--from", "5", "--to", "9"],
            &["topoidx", "enumerate", "--class", "eulerian", "--n", "11"],
            &["topoidx", "indices", "--g6", "C~", "--family", "cycle"],
        ] {
            let (code, out, err) = run_captured(args.iter().copied());
            assert_eq!(code, 2, "{args:?}");
            assert!(out.is_empty() && !err.is_empty());
        }
    }

    #[test]
    fn enumerate_streams_graph6() {
        let out = run_ok(&["enumerate", "--class", "eulerian", "--n", "5", "--dedupe"]);
        assert_eq!(out.lines().count(), 4);
    }

    #[test]
    fn verify_small() {
        let out = run_ok(&["verify", "--eulerian-max", "5", "--twoec-max", "4", "--format", "json"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert!(v["claims"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
    }
}
