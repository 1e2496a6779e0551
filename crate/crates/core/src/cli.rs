//! The `outerplanar` command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 size guard exceeded, 3 verification failure.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::charring::{multiplicity, multiplicity_by_recursion};
use crate::decomp::{self, DecompositionReport};
use crate::opgraph::{count_graphs, enumerate_graphs, OuterplanarGraph};
use crate::render::render;
use crate::tensorspace::{build_t_g, build_t_g_i};
use crate::verify::run_suite;
use crate::{Degrees, Error};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_SIZE_GUARD: u8 = 2;
pub const EXIT_VERIFICATION: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "outerplanar",
    version,
    about = "Decompose tensor products of SL(2) irreducibles with outerplanar graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count graphs and multiplicities by every available route.
    Count {
        /// Comma-separated degrees, e.g. 1,1,2.
        #[arg(long)]
        degrees: Degrees,
        /// Treat the first degree as the root degree d0.
        #[arg(long)]
        rooted: bool,
        /// Only report the multiplicity of rho_k.
        #[arg(long)]
        k: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the noncrossing graphs with the given degrees.
    Graphs {
        #[arg(long)]
        degrees: Degrees,
        #[arg(long)]
        rooted: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Build t_G (or t_{G,i} for a rooted graph) from a list of arcs.
    Tensor {
        /// Number of vertices, including the root when rooted.
        #[arg(long)]
        vertices: usize,
        /// Comma-separated arcs such as 1-2,1-3x2 (vertex labels).
        #[arg(long, default_value = "")]
        arcs: String,
        #[arg(long)]
        rooted: bool,
        /// Root in-degree i for rooted graphs.
        #[arg(long, default_value_t = 0)]
        i: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decompose the tensor product and verify the result.
    Decompose {
        #[arg(long)]
        degrees: Degrees,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the property suite over all tuples with |d| <= max-sum.
    Verify {
        #[arg(long, default_value_t = 8)]
        max_sum: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Output of a command: text for the destination and the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub code: u8,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome {
            output,
            code: EXIT_OK,
        }
    }
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::SizeGuard { .. } => EXIT_SIZE_GUARD,
        _ => EXIT_USAGE,
    }
}

/// Parses arcs like `1-2,1-3x2`.
pub fn parse_arcs(s: &str) -> Result<Vec<(usize, usize, u32)>, Error> {
    let bad = || Error::InvalidGraph(format!("cannot parse arcs {s:?}"));
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|part| {
            let (pair, mult) = match part.split_once('x') {
                Some((p, m)) => (p, m.trim().parse::<u32>().map_err(|_| bad())?),
                None => (part, 1),
            };
            let (i, j) = pair.split_once('-').ok_or_else(bad)?;
            let i = i.trim().parse().map_err(|_| bad())?;
            let j = j.trim().parse().map_err(|_| bad())?;
            Ok((i, j, mult))
        })
        .collect()
}

#[derive(Serialize)]
struct CountRow {
    k: u64,
    character: String,
    recursion: String,
    graphs: String,
    agree: bool,
}

#[derive(Serialize)]
struct CountJson {
    degrees: Vec<u32>,
    rooted: bool,
    graphs: String,
    multiplicities: Vec<CountRow>,
}

fn cmd_count(
    degrees: &Degrees,
    rooted: bool,
    k: Option<u64>,
    format: Format,
) -> Result<Outcome, Error> {
    let graphs = count_graphs(degrees.as_slice(), rooted);
    // with --rooted the first degree is d0 and the factors are the rest
    let (factors, ks): (Degrees, Vec<u64>) = if rooted {
        let rest = Degrees::new(degrees.as_slice()[1..].to_vec())?;
        let d0 = u64::from(degrees.as_slice()[0]);
        (rest, k.map_or(vec![d0], |k| vec![k]))
    } else {
        let total = degrees.total();
        let all = (0..=total).rev().filter(|k| (total - k).is_multiple_of(2)).collect();
        (degrees.clone(), k.map_or(all, |k| vec![k]))
    };
    let rows: Vec<CountRow> = ks
        .into_iter()
        .map(|k| {
            let a = multiplicity(&factors, k);
            let b = multiplicity_by_recursion(&factors, k);
            let c = u32::try_from(k)
                .map(|k| count_graphs(&factors.with_root(k), true))
                .unwrap_or_default();
            CountRow {
                k,
                agree: a == b && b == c,
                character: a.to_string(),
                recursion: b.to_string(),
                graphs: c.to_string(),
            }
        })
        .collect();
    let agree = rows.iter().all(|r| r.agree);
    let output = match format {
        Format::Json => {
            serde_json::to_string(&CountJson {
                degrees: degrees.as_slice().to_vec(),
                rooted,
                graphs: graphs.to_string(),
                multiplicities: rows,
            })? + "\n"
        }
        Format::Text => {
            let noun = if rooted {
                "outerplanar"
            } else {
                "0-outerplanar"
            };
            let mut s = format!("degrees {degrees}: {graphs} {noun} graphs\n");
            for r in &rows {
                s.push_str(&format!("k={}: {}", r.k, r.character));
                if !r.agree {
                    s.push_str(&format!(
                        "  MISMATCH (character {}, recursion {}, rooted graphs {})",
                        r.character, r.recursion, r.graphs
                    ));
                }
                s.push('\n');
            }
            s
        }
    };
    Ok(Outcome {
        output,
        code: if agree { EXIT_OK } else { EXIT_VERIFICATION },
    })
}

#[derive(Serialize)]
struct GraphListJson {
    degrees: Vec<u32>,
    rooted: bool,
    graphs: Vec<ArcsJson>,
}

#[derive(Serialize)]
struct ArcsJson {
    arcs: Vec<[usize; 3]>,
}

fn cmd_graphs(degrees: &Degrees, rooted: bool, format: Format) -> Result<Outcome, Error> {
    let graphs = enumerate_graphs(degrees.as_slice(), rooted);
    let output = match format {
        Format::Json => {
            serde_json::to_string(&GraphListJson {
                degrees: degrees.as_slice().to_vec(),
                rooted,
                graphs: graphs
                    .iter()
                    .map(|g| ArcsJson {
                        arcs: g.labeled_arcs(),
                    })
                    .collect(),
            })? + "\n"
        }
        Format::Text => {
            let mut s = format!("{} graphs with degrees {degrees}\n", graphs.len());
            for (n, g) in graphs.iter().enumerate() {
                s.push_str(&format!("\n#{} {g}\n{}\n", n + 1, render(g)));
            }
            s
        }
    };
    Ok(Outcome::ok(output))
}

fn cmd_tensor(
    vertices: usize,
    arcs: &str,
    rooted: bool,
    i: u32,
    format: Format,
) -> Result<Outcome, Error> {
    let g = OuterplanarGraph::from_labels(rooted, vertices, parse_arcs(arcs)?)?;
    let t = if rooted {
        build_t_g_i(&g, i)?
    } else {
        build_t_g(&g)?
    };
    let output = match format {
        Format::Json => t.to_json() + "\n",
        Format::Text => format!("{}\n{t}\n", render(&g)),
    };
    Ok(Outcome::ok(output))
}

fn report_text(report: &DecompositionReport) -> String {
    let mut s = format!("{}\n", report.summary());
    if let Some(v) = report.verification {
        let flag = |b: bool| if b { "ok" } else { "FAILED" };
        s.push_str(&format!(
            "verified: rank {}, invariance {}, intertwining {}\n",
            flag(v.rank),
            flag(v.invariance),
            flag(v.intertwining)
        ));
    }
    for comp in &report.components {
        s.push_str(&format!("\nρ{}: {} graph(s)\n", comp.d0, comp.graphs.len()));
        for gb in &comp.graphs {
            s.push_str(&format!("  G = {}\n", gb.graph));
            for (i, t) in gb.tensors.iter().enumerate() {
                s.push_str(&format!("    t_{{G,{i}}} = {t}\n"));
            }
        }
    }
    s
}

fn cmd_decompose(degrees: &Degrees, format: Format) -> Result<Outcome, Error> {
    let report = decomp::decompose(degrees)?;
    let ok = report.verification.is_some_and(|v| v.all());
    let output = match format {
        Format::Json => report.to_json() + "\n",
        Format::Text => report_text(&report),
    };
    Ok(Outcome {
        output,
        code: if ok { EXIT_OK } else { EXIT_VERIFICATION },
    })
}

fn cmd_verify(max_sum: u32, seed: u64, format: Format) -> Result<Outcome, Error> {
    let report = run_suite(max_sum, seed)?;
    let output = match format {
        Format::Json => serde_json::to_string(&report)? + "\n",
        Format::Text => report.table(),
    };
    Ok(Outcome {
        output,
        code: if report.passed() {
            EXIT_OK
        } else {
            EXIT_VERIFICATION
        },
    })
}

/// Runs a parsed command; errors are reported as text with the matching exit code.
pub fn run(cli: Cli) -> (Outcome, Option<PathBuf>) {
    let (result, output_path) = match cli.command {
        Command::Count {
            degrees,
            rooted,
            k,
            format,
        } => (cmd_count(&degrees, rooted, k, format), None),
        Command::Graphs {
            degrees,
            rooted,
            format,
            output,
        } => (cmd_graphs(&degrees, rooted, format), output),
        Command::Tensor {
            vertices,
            arcs,
            rooted,
            i,
            format,
        } => (cmd_tensor(vertices, &arcs, rooted, i, format), None),
        Command::Decompose {
            degrees,
            format,
            output,
        } => (cmd_decompose(&degrees, format), output),
        Command::Verify {
            max_sum,
            seed,
            format,
        } => (cmd_verify(max_sum, seed, format), None),
    };
    match result {
        Ok(outcome) => (outcome, output_path),
        Err(e) => (
            Outcome {
                output: format!("error: {e}\n"),
                code: error_code(&e),
            },
            None,
        ),
    }
}

/// Entry point used by the binary.
pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    let (outcome, path) = run(cli);
    if outcome.code == EXIT_USAGE || outcome.code == EXIT_SIZE_GUARD {
        eprint!("{}", outcome.output);
        return ExitCode::from(outcome.code);
    }
    let written = match path {
        Some(p) => fs::write(&p, &outcome.output),
        None => std::io::stdout().write_all(outcome.output.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_USAGE);
    }
    ExitCode::from(outcome.code)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        let mut full = vec!["outerplanar"];
        full.extend_from_slice(args);
        run(Cli::try_parse_from(full).unwrap()).0
    }

    #[test]
    fn count_outputs() {
        let out = run_args(&["count", "--degrees", "1,1,1,1,1,1", "--k", "0"]);
        assert_eq!(out.code, EXIT_OK);
        assert!(out.output.contains("k=0: 5"), "{}", out.output);
        let out = run_args(&["count", "--degrees", "1,1"]);
        assert_eq!(
            out.output,
            "degrees 1,1: 1 0-outerplanar graphs\nk=2: 1\nk=0: 1\n"
        );
        let out = run_args(&["count", "--degrees", "1,2"]);
        assert!(out
            .output
            .starts_with("degrees 1,2: 0 0-outerplanar graphs"));
        let out = run_args(&["count", "--degrees", "2,1,1", "--rooted"]);
        assert_eq!(out.output, "degrees 2,1,1: 1 outerplanar graphs\nk=2: 1\n");
    }

    #[test]
    fn arc_parsing() {
        assert_eq!(
            parse_arcs("1-2, 1-3x2").unwrap(),
            vec![(1, 2, 1), (1, 3, 2)]
        );
        assert_eq!(parse_arcs("").unwrap(), vec![]);
        assert!(parse_arcs("1-").is_err());
        assert!(parse_arcs("1-2xq").is_err());
    }

    #[test]
    fn usage_errors_map_to_exit_codes() {
        assert!(Cli::try_parse_from(["outerplanar", "count", "--degrees", "1,x"]).is_err());
        let out = run_args(&["tensor", "--vertices", "4", "--arcs", "1-3,2-4"]);
        assert_eq!(out.code, EXIT_USAGE);
        let out = run_args(&["decompose", "--degrees", "9,9,9,9"]);
        assert_eq!(out.code, EXIT_SIZE_GUARD);
    }
}
