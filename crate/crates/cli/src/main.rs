use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hilbfix_cli::descriptor::{point_case, separated_case};
use hilbfix_cli::output::{fixed_pretty, to_json};
use hilbfix_cli::suites::{run_suite, Bounds, Suite};
use hilbfix_commalg::{equivariant_mult_with, CaseSpec, Hilb2Options};
use hilbfix_core::exactalg::Rational;
use hilbfix_core::hilb::{check_report, fixed_table, reports_to_csv};
use hilbfix_core::surfaces::{catalog_checksum, catalog_json, surface, SurfaceId};
use serde::Serialize;

const FAILURE: u8 = 1;
const USAGE: u8 = 2;

/// Torus-fixed loci of Hilbert schemes of points on integrable surfaces, and their multiplicities.
#[derive(Parser)]
#[command(name = "hilbfix", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fixed components of Hilb^n of a surface with their multiplicity data.
    Fixed {
        /// Surface key: TE, SZ2, SZ3, SZ4, SZ6, SVI, SIV, SII or SI.
        #[arg(long)]
        surface: SurfaceId,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Equivariant multiplicity of a fixed component of Hilb^2 (or a single point) by the
    /// graded-module engine.
    Hilb2 {
        /// Compact or JSON descriptor, e.g. `u2:1,2,1,2:3`.
        #[arg(long, conflicts_with_all = ["eq", "sep"])]
        case: Option<String>,
        /// Local equation such as `y` or `x^2y^3`.
        #[arg(long, requires = "weights")]
        eq: Option<String>,
        /// Weights of x and y, e.g. `-1,2`.
        #[arg(long, requires = "eq", allow_hyphen_values = true)]
        weights: Option<String>,
        /// U1 for I^(1^2), U2 for I^(2); omitted for the point itself.
        #[arg(long, requires = "eq")]
        chart: Option<String>,
        /// Base weight; defaults to the one forced by the weights.
        #[arg(long, requires = "eq")]
        e: Option<u32>,
        /// Two points on a parabolic surface: `a1,b1,w1,a2,b2,w2,e`.
        #[arg(long, conflicts_with = "eq")]
        sep: Option<String>,
        /// Cross-check dimension counts by dense linear algebra up to this x-degree.
        #[arg(long)]
        oracle: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Verification suites; the exit code is 1 when any check fails.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        /// One size bound for every check in the suite.
        #[arg(long)]
        n: Option<usize>,
        /// x-degree for the dense oracle on punctual cases.
        #[arg(long, default_value_t = 12)]
        oracle_truncation: u32,
        #[arg(long)]
        no_oracle: bool,
        /// Sample points for the sandwich check, e.g. `3/2,2,3`.
        #[arg(long)]
        samples: Option<String>,
        /// Include every pairing report with its Θ-matrix terms.
        #[arg(long)]
        theta_audit: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// The built-in surface catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Print the catalog as JSON with its checksum.
    Export,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Tables,
    Orders,
    Pairings,
    Conjectures,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Tables => Suite::Tables,
            SuiteArg::Orders => Suite::Orders,
            SuiteArg::Pairings => Suite::Pairings,
            SuiteArg::Conjectures => Suite::Conjectures,
            SuiteArg::All => Suite::All,
        }
    }
}

enum Outcome {
    Pass(String),
    Fail(String),
    Usage(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Fixed { surface: id, n, format } => fixed(id, n, format),
        Command::Hilb2 { case, eq, weights, chart, e, sep, oracle, format } => {
            let spec = match (case, eq, sep) {
                (Some(c), _, _) => c.parse::<CaseSpec>().map_err(|x| x.to_string()),
                (_, Some(eq), _) => point_case(&eq, &weights.unwrap_or_default(), chart.as_deref(), e).map_err(|x| x.to_string()),
                (_, _, Some(sep)) => separated_case(&sep).map_err(|x| x.to_string()),
                _ => Err("one of --case, --eq or --sep is required".to_string()),
            };
            match spec {
                Ok(spec) => hilb2(&spec, oracle, format),
                Err(e) => Outcome::Usage(e),
            }
        }
        Command::Verify { suite, n, oracle_truncation, no_oracle, samples, theta_audit, format } => {
            match parse_samples(samples.as_deref()) {
                Ok(samples) => {
                    let mut bounds = n.map_or_else(Bounds::default, |n| Bounds::default().with_n(n));
                    bounds.oracle_truncation = (!no_oracle).then_some(oracle_truncation);
                    bounds.samples = samples;
                    bounds.theta_audit = theta_audit;
                    verify(suite.into(), &bounds, format)
                }
                Err(e) => Outcome::Usage(e),
            }
        }
        Command::Catalog { action: CatalogAction::Export } => {
            #[derive(Serialize)]
            struct Body {
                checksum: String,
                catalog: serde_json::Value,
            }
            Outcome::Pass(to_json("catalog export", Body { checksum: catalog_checksum(), catalog: catalog_json() }))
        }
    };
    let (text, code, to_stderr) = match outcome {
        Outcome::Pass(s) => (s, 0, false),
        Outcome::Fail(s) => (s, FAILURE, false),
        Outcome::Usage(s) => (format!("error: {s}\n"), USAGE, true),
    };
    let written = if to_stderr {
        std::io::stderr().write_all(text.as_bytes())
    } else {
        std::io::stdout().write_all(text.as_bytes())
    };
    if written.is_err() {
        return ExitCode::from(FAILURE);
    }
    ExitCode::from(code)
}

fn parse_samples(s: Option<&str>) -> Result<Option<Vec<Rational>>, String> {
    let Some(s) = s else { return Ok(None) };
    let v: Vec<Rational> = s
        .split(',')
        .map(|x| x.trim().parse::<Rational>().map_err(|_| format!("not a rational: {x:?}")))
        .collect::<Result<_, _>>()?;
    if v.is_empty() || v.iter().any(|t| *t <= Rational::from_integer(1.into())) {
        return Err("samples must be rationals greater than 1".into());
    }
    Ok(Some(v))
}

fn fixed(id: SurfaceId, n: usize, format: Format) -> Outcome {
    let s = surface(id);
    let rows = match fixed_table(s, n) {
        Ok(rows) => rows,
        Err(e) => return Outcome::Usage(e.to_string()),
    };
    let breaches: Vec<String> = rows.iter().filter_map(|r| check_report(r).err()).collect();
    let text = match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Body<'a, R> {
                surface: &'static str,
                n: usize,
                count: usize,
                rows: &'a [R],
                #[serde(skip_serializing_if = "Vec::is_empty")]
                breaches: &'a Vec<String>,
            }
            to_json("fixed", Body { surface: id.key(), n, count: rows.len(), rows: &rows, breaches: &breaches })
        }
        Format::Csv => reports_to_csv(&rows),
        Format::Pretty => fixed_pretty(&rows),
    };
    if breaches.is_empty() {
        Outcome::Pass(text)
    } else {
        Outcome::Fail(text)
    }
}

fn hilb2(spec: &CaseSpec, oracle: Option<u32>, format: Format) -> Outcome {
    if format == Format::Csv {
        return Outcome::Usage("hilb2 output is json or pretty".into());
    }
    let result = match equivariant_mult_with(spec, Hilb2Options { oracle_truncation: oracle }) {
        Ok(r) => r,
        Err(e) => return Outcome::Fail(to_json("hilb2", serde_json::json!({ "case": spec, "error": e.to_string() }))),
    };
    let ok = result.specializes_correctly() && (oracle.is_none() || result.oracle_checked);
    let text = match format {
        Format::Json | Format::Csv => to_json("hilb2", &result),
        Format::Pretty => {
            let mut s = format!("{}\nm(t) = {}\nm(1) = {}\n", result.case, result.polynomial, result.rank_at_one);
            for d in &result.degrees {
                s.push_str(&format!("  gr^{}: rank {}, class {}, free {}\n", d.degree, d.rank, d.class, d.free));
            }
            if oracle.is_some() {
                s.push_str(&format!("oracle: {}\n", if result.oracle_checked { "agrees" } else { "DISAGREES" }));
            }
            s
        }
    };
    if ok {
        Outcome::Pass(text)
    } else {
        Outcome::Fail(text)
    }
}

fn verify(suite: Suite, bounds: &Bounds, format: Format) -> Outcome {
    if format == Format::Csv {
        return Outcome::Usage("verify output is json or pretty".into());
    }
    let report = run_suite(suite, bounds);
    let text = match format {
        Format::Json | Format::Csv => to_json("verify", &report),
        Format::Pretty => {
            let mut s: String = report.checks.iter().map(|c| c.line() + "\n").collect();
            s.push_str(if report.passed { "all checks passed\n" } else { "some checks failed\n" });
            s
        }
    };
    if report.passed {
        Outcome::Pass(text)
    } else {
        Outcome::Fail(text)
    }
}
