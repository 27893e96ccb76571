//! The `rtetra` command line.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on malformed
//! input. Output is written only once a command has completed.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::{is_perfect_square_rational, parse_rational, Rational};
use crate::cayley_menger::{cm_value, heron_eval, realizability, EdgeTuple, EDGE_VARS};
use crate::error::{Error, Result};
use crate::points::{
    classify_faces, conic_descent, descent_family, gaussian_point, heron_point, hits_to_csv, hits_to_json,
    search_integer_tetrahedra, weddle_point, CMPoint, HeronPoint, SearchOptions,
};
use crate::suite::{run_verify_suite, SuiteName};
use crate::verdict::{Status, Verdict};

#[derive(Debug, Parser)]
#[command(name = "rtetra", version, about = "Exact identities and rational points for the Cayley-Menger determinant")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Seed of the ChaCha8 generator used by sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: u64,
    /// Output format; `search` defaults to csv, everything else to json.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Cm,
    Tetrahedroid,
    Weddle,
    Points,
    All,
}

impl From<Suite> for SuiteName {
    fn from(s: Suite) -> Self {
        match s {
            Suite::Cm => SuiteName::Cm,
            Suite::Tetrahedroid => SuiteName::Tetrahedroid,
            Suite::Weddle => SuiteName::Weddle,
            Suite::Points => SuiteName::Points,
            Suite::All => SuiteName::All,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EvalKind {
    /// Cayley-Menger determinant of six edge lengths.
    Cm,
    /// Heron function of three side lengths.
    Heron,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run identity checks and print one verdict per check.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// Report elapsed_ms as 0, making the output byte-reproducible.
        #[arg(long)]
        no_timing: bool,
    },
    /// Evaluate CM or H at rational arguments.
    #[command(allow_negative_numbers = true)]
    Eval {
        #[arg(value_enum)]
        kind: EvalKind,
        /// Six edges for cm, three sides for heron.
        values: Vec<String>,
        /// Edges as a comma-separated list, instead of positional values.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        edges: Option<Vec<String>>,
    },
    /// Map (a, b, c, X) to a rational point on y^2 = -CM, or on y^2 = CM
    /// over Q(i) with --gaussian.
    Point {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        /// Four coordinates, comma-separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        x: Vec<String>,
        #[arg(long)]
        gaussian: bool,
    },
    /// New points on y^2 = CM by lines through a known one.
    Descend {
        /// Six edges of the seed, comma-separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        edges: Vec<String>,
        /// y of the seed; defaults to the square root of CM.
        #[arg(long, allow_hyphen_values = true)]
        y: Option<String>,
        /// Slope of a single line.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "count")]
        t: Option<String>,
        /// Number of points, from slopes 1, 2, 3, ...
        #[arg(long)]
        count: Option<usize>,
    },
    /// Triangle with rational sides and area from (V, t).
    Heron {
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
    },
    /// Square classes of the four face Heron values.
    Classify {
        /// Six edges, comma-separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        edges: Vec<String>,
    },
    /// Integer edge tuples with square CM.
    Search {
        #[arg(long)]
        max_edge: i64,
        #[arg(long)]
        include_degenerate: bool,
        #[arg(long)]
        canonical: bool,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Execution {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Execution {
    fn ok(stdout: String) -> Self {
        Execution {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(e: &Error) -> Self {
        let code = match e {
            Error::VerificationFailed(_) => 1,
            _ => 2,
        };
        Execution {
            code,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn execute<I, T>(argv: I) -> Execution
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Ok(cli) => run(&cli),
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Execution::ok(text);
            }
            let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("error: invalid arguments");
            Execution {
                code: 2,
                stdout: String::new(),
                stderr: format!("{line}\n"),
            }
        }
    }
}

pub fn run(cli: &Cli) -> Execution {
    let jobs = cli.common.jobs as usize;
    let format = cli.common.format;
    let out = match &cli.command {
        Command::Verify { suite, no_timing } => {
            let mut verdicts = run_verify_suite((*suite).into(), cli.common.seed, jobs);
            if *no_timing {
                verdicts.iter_mut().for_each(|v| v.elapsed_ms = 0);
            }
            let code = i32::from(verdicts.iter().any(Verdict::is_fail));
            return match render_verdicts(&verdicts, format.unwrap_or(Format::Json)) {
                Ok(stdout) => Execution {
                    code,
                    stdout,
                    stderr: String::new(),
                },
                Err(e) => Execution::error(&e),
            };
        }
        Command::Eval { kind, values, edges } => eval(*kind, values, edges.as_deref(), format.unwrap_or(Format::Json)),
        Command::Point { a, b, c, x, gaussian } => point(a, b, c, x, *gaussian, format.unwrap_or(Format::Json)),
        Command::Descend { edges, y, t, count } => {
            descend(edges, y.as_deref(), t.as_deref(), *count, format.unwrap_or(Format::Json))
        }
        Command::Heron { v, t } => heron(v, t, format.unwrap_or(Format::Json)),
        Command::Classify { edges } => classify(edges, format.unwrap_or(Format::Json)),
        Command::Search {
            max_edge,
            include_degenerate,
            canonical,
        } => {
            let opts = SearchOptions {
                include_degenerate: *include_degenerate,
                canonical: *canonical,
                jobs,
            };
            search(*max_edge, &opts, format.unwrap_or(Format::Csv))
        }
    };
    match out {
        Ok(s) => Execution::ok(s),
        Err(e) => Execution::error(&e),
    }
}

fn json<T: Serialize + ?Sized>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn csv_rows(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

fn unsupported(what: &str, f: Format) -> Error {
    Error::InvalidArgument(format!("{what} has no {f:?} output").to_lowercase())
}

pub fn render_verdicts(verdicts: &[Verdict], format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => json(verdicts),
        Format::Csv => csv_rows(
            &["check", "status", "residual_terms", "notes", "elapsed_ms"],
            &verdicts
                .iter()
                .map(|v| {
                    vec![
                        v.check.clone(),
                        v.status.to_string(),
                        v.residual_terms.to_string(),
                        v.notes.clone(),
                        v.elapsed_ms.to_string(),
                    ]
                })
                .collect::<Vec<_>>(),
        ),
        Format::Text => {
            let mut s = String::new();
            for v in verdicts {
                writeln!(s, "{v}").unwrap();
            }
            let count = |st: Status| verdicts.iter().filter(|v| v.status == st).count();
            writeln!(
                s,
                "{} checks: {} pass, {} corrected, {} fail",
                verdicts.len(),
                count(Status::Pass),
                count(Status::Corrected),
                count(Status::Fail)
            )
            .unwrap();
            s
        }
    })
}

fn parse_all<S: AsRef<str>>(parts: &[S]) -> Result<Vec<Rational>> {
    parts.iter().map(|p| parse_rational(p.as_ref())).collect()
}

fn parse_edges<S: AsRef<str>>(parts: &[S]) -> Result<EdgeTuple> {
    EdgeTuple::parse(parts)
}

#[derive(Serialize)]
struct CmEval {
    cm: String,
    realizable: bool,
    volume: Option<String>,
}

#[derive(Serialize)]
struct HeronEval {
    heron: String,
    area: Option<String>,
}

fn eval(kind: EvalKind, values: &[String], edges: Option<&[String]>, format: Format) -> Result<String> {
    let args: &[String] = match (edges, values.is_empty()) {
        (Some(e), true) => e,
        (None, _) => values,
        (Some(_), false) => {
            return Err(Error::InvalidArgument("give the values either positionally or with --edges".into()))
        }
    };
    let (header, row, out_json) = match kind {
        EvalKind::Cm => {
            let d = parse_edges(args)?;
            let r = realizability(&d)?;
            let e = CmEval {
                cm: r.cm_value.to_string(),
                realizable: r.realizable,
                volume: r.volume.as_ref().map(ToString::to_string),
            };
            let row = vec![e.cm.clone(), e.realizable.to_string(), e.volume.clone().unwrap_or_default()];
            (vec!["cm", "realizable", "volume"], row, serde_json::to_string(&e).expect("serializable"))
        }
        EvalKind::Heron => {
            let s = parse_all(args)?;
            let [a, b, c] = <[Rational; 3]>::try_from(s)
                .map_err(|v| Error::InvalidArgument(format!("heron takes 3 sides, got {}", v.len())))?;
            if let Some(neg) = [&a, &b, &c].into_iter().find(|x| num_traits::Signed::is_negative(*x)) {
                return Err(Error::NegativeLength(neg.to_string()));
            }
            let h = heron_eval(&a, &b, &c);
            let e = HeronEval {
                heron: h.to_string(),
                area: is_perfect_square_rational(&h).map(|r| (r / Rational::from_integer(4.into())).to_string()),
            };
            let row = vec![e.heron.clone(), e.area.clone().unwrap_or_default()];
            (vec!["heron", "area"], row, serde_json::to_string(&e).expect("serializable"))
        }
    };
    Ok(match format {
        Format::Json => out_json + "\n",
        Format::Csv => csv_rows(&header, &[row]),
        Format::Text => header
            .iter()
            .zip(&row)
            .map(|(h, v)| format!("{h} = {}\n", if v.is_empty() { "none" } else { v }))
            .collect(),
    })
}

fn point_row(p: &CMPoint) -> Vec<String> {
    let mut r = p.edges.to_strings().to_vec();
    r.push(p.y.to_string());
    r.push(p.sign.to_string());
    r
}

fn render_points(points: &[CMPoint], single: bool, format: Format) -> String {
    match format {
        Format::Json if single => json(&points[0]),
        Format::Json => json(points),
        Format::Csv => {
            let mut header: Vec<&str> = EDGE_VARS.to_vec();
            header.extend(["y", "sign"]);
            csv_rows(&header, &points.iter().map(point_row).collect::<Vec<_>>())
        }
        Format::Text => points.iter().map(|p| format!("{p}\n")).collect(),
    }
}

fn point(a: &str, b: &str, c: &str, x: &[String], gaussian: bool, format: Format) -> Result<String> {
    let (a, b, c) = (parse_rational(a)?, parse_rational(b)?, parse_rational(c)?);
    let x: [Rational; 4] = parse_all(x)?
        .try_into()
        .map_err(|v: Vec<_>| Error::InvalidArgument(format!("--x takes 4 values, got {}", v.len())))?;
    let p = if gaussian {
        gaussian_point(&a, &b, &c, &x)?
    } else {
        weddle_point(&a, &b, &c, &x)?
    };
    Ok(render_points(&[p], true, format))
}

fn descend(edges: &[String], y: Option<&str>, t: Option<&str>, count: Option<usize>, format: Format) -> Result<String> {
    let d = parse_edges(edges)?;
    let y = match y {
        Some(y) => parse_rational(y)?,
        None => {
            let cm = cm_value(&d);
            is_perfect_square_rational(&cm)
                .ok_or_else(|| Error::InvalidArgument(format!("CM = {cm} is not a square; pass --y")))?
        }
    };
    let seed = CMPoint::new(d, y, 1).map_err(|e| Error::InvalidArgument(e.to_string()))?;
    match t {
        Some(t) => {
            let p = conic_descent(&seed, &parse_rational(t)?)?;
            Ok(render_points(&[p], true, format))
        }
        None => Ok(render_points(&descent_family(&seed, count.unwrap_or(1))?, false, format)),
    }
}

fn heron(v: &str, t: &str, format: Format) -> Result<String> {
    let p: HeronPoint = heron_point(&parse_rational(v)?, &parse_rational(t)?)?;
    let header = ["u", "v", "z", "a", "b", "c", "y"];
    let row: Vec<String> = [&p.u, &p.v, &p.z, &p.a, &p.b, &p.c, &p.y].iter().map(|r| r.to_string()).collect();
    Ok(match format {
        Format::Json => json(&p),
        Format::Csv => csv_rows(&header, &[row]),
        Format::Text => header.iter().zip(&row).map(|(h, v)| format!("{h} = {v}\n")).collect(),
    })
}

fn classify(edges: &[String], format: Format) -> Result<String> {
    let r = classify_faces(&parse_edges(edges)?)?;
    match format {
        Format::Json => Ok(json(&r)),
        Format::Text => {
            let mut s = format!("cm = {}\n", r.cm);
            for (i, f) in crate::cayley_menger::Face::ALL.iter().enumerate() {
                writeln!(s, "face {} heron = {} class = {}", f.label(), r.heron[i], r.classes[i].representative).unwrap();
            }
            writeln!(s, "all classes equal = {}", r.all_equal()).unwrap();
            writeln!(s, "all ratios norms from Q(i) = {}", r.all_norms()).unwrap();
            Ok(s)
        }
        Format::Csv => Err(unsupported("classify", format)),
    }
}

fn search(max_edge: i64, opts: &SearchOptions, format: Format) -> Result<String> {
    let hits = search_integer_tetrahedra(max_edge, opts)?;
    Ok(match format {
        Format::Csv => hits_to_csv(&hits),
        Format::Json => hits_to_json(&hits) + "\n",
        Format::Text => hits
            .iter()
            .map(|h| format!("{} y={}\n", h.edge_tuple(), h.y))
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exec(args: &[&str]) -> Execution {
        execute(std::iter::once("rtetra").chain(args.iter().copied()))
    }

    #[test]
    fn eval_regular() {
        let e = exec(&["eval", "cm", "1", "1", "1", "1", "1", "1"]);
        assert_eq!(e.code, 0, "{}", e.stderr);
        assert_eq!(e.stdout, "{\"cm\":\"2\",\"realizable\":true,\"volume\":null}\n");
    }

    #[test]
    fn unknown_flag_is_malformed() {
        let e = exec(&["eval", "cm", "--bogus"]);
        assert_eq!(e.code, 2);
        assert!(e.stdout.is_empty());
        assert_eq!(e.stderr.lines().count(), 1);
    }

    #[test]
    fn bad_rational_is_malformed() {
        let e = exec(&["eval", "heron", "3", "4", "5/0"]);
        assert_eq!(e.code, 2);
        assert!(e.stderr.contains("zero denominator"), "{}", e.stderr);
    }
}
