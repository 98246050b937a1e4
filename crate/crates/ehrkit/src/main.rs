//! Command-line interface: evaluate poset expressions, print their Ehrhart
//! data, emit integer triangles, and verify bundled sequence fixtures.
//!
//! Exit codes: 0 all good, 1 verification mismatch, 2 usage or parse error,
//! 3 cap refusal.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ehrkit::config::{parse_config, Caps, CapsOverride};
use ehrkit::dsl::{eval_expr, parse};
use ehrkit::error::Error;
use ehrkit::extensions::{crosscheck_with_caps, ehr_series_with_cap, extension_stats_with_cap};
use ehrkit::ferrers::narayana_hstar;
use ehrkit::multiset::{multiset_descent_poly, MultisetSpec};
use ehrkit::poly::poly_interpolate;
use ehrkit::riordan::riordan_triangle;
use ehrkit::series_text::parse_series;
use ehrkit::stirling::second_order_eulerian_row;
use ehrkit::verify::run_suite;

#[derive(Parser)]
#[command(name = "ehrkit", version, about = "Exact Ehrhart series of order polytopes")]
struct Cli {
    /// Cap on poset size for enumeration (overrides the config file)
    #[arg(long, global = true)]
    max_elements: Option<usize>,
    /// Cap on the dilation n accepted by the brute-force oracle
    #[arg(long, global = true)]
    max_oracle_n: Option<usize>,
    /// key=value config file (keys: max_elements, max_oracle_n, workers)
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the h*-vector, denominator exponent and leading coefficients
    Series {
        expr: String,
        /// How many series coefficients to print
        #[arg(long, default_value_t = 10)]
        terms: usize,
    },
    /// Print the Ehrhart polynomial, lowest degree first
    Poly { expr: String },
    /// Print just the h*-vector
    Hstar { expr: String },
    /// Print ehr(n) for n in an inclusive range A..B
    Eval {
        expr: String,
        #[arg(long)]
        n: String,
    },
    /// Compare engine series coefficients against the brute-force oracle
    Crosscheck {
        expr: String,
        #[arg(long, default_value_t = 4)]
        nmax: usize,
    },
    /// Print an integer triangle: riordan(g, f), eulerian2, narayana,
    /// or multiset-des(k)
    Triangle {
        #[arg(long)]
        family: String,
        #[arg(long)]
        rows: usize,
    },
    /// Run a named fixture suite (or "all")
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value = "fixtures")]
        fixtures: PathBuf,
    },
    /// Print the canonical cover-relation dump of an expression
    Parse { expr: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Cap { .. } => 3,
        Error::Invariant(_) => 1,
        _ => 2,
    }
}

fn load_caps(cli: &Cli) -> Result<Caps, Error> {
    let file = match &cli.config {
        Some(path) => parse_config(&std::fs::read_to_string(path)?)?,
        None => CapsOverride::default(),
    };
    let flags = CapsOverride {
        max_elements: cli.max_elements,
        max_oracle_n: cli.max_oracle_n,
        workers: None,
    };
    Ok(Caps::resolve(file, flags))
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let caps = load_caps(&cli)?;
    match &cli.cmd {
        Cmd::Series { expr, terms } => {
            let series = ehr_series_with_cap(&eval_expr(&parse(expr)?)?, caps.max_elements)?;
            println!("hstar = {}", series.hstar);
            println!("denom_exp = {}", series.denom_exp);
            let coeffs: Vec<String> =
                series.coefficients(*terms).iter().map(|c| c.to_string()).collect();
            println!("coeffs = [{}]", coeffs.join(", "));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Poly { expr } => {
            let poset = eval_expr(&parse(expr)?)?;
            let series = ehr_series_with_cap(&poset, caps.max_elements)?;
            let points: Vec<_> = (0..=poset.size())
                .map(|n| (num_bigint::BigInt::from(n), series.coefficient(n)))
                .collect();
            let poly = poly_interpolate(&points, poset.size())?;
            println!("poly = {poly}");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Hstar { expr } => {
            let stats = extension_stats_with_cap(&eval_expr(&parse(expr)?)?, caps.max_elements)?;
            let coeffs: Vec<String> = stats.by_descents.iter().map(|c| c.to_string()).collect();
            println!("[{}]", coeffs.join(", "));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Eval { expr, n } => {
            let (lo, hi) = parse_range(n)?;
            let series = ehr_series_with_cap(&eval_expr(&parse(expr)?)?, caps.max_elements)?;
            for n in lo..=hi {
                println!("{n} {}", series.coefficient(n));
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Crosscheck { expr, nmax } => {
            let poset = eval_expr(&parse(expr)?)?;
            let report = crosscheck_with_caps(
                &poset,
                *nmax,
                caps.max_elements,
                caps.max_elements,
                caps.max_oracle_n,
            )?;
            for (n, engine, oracle) in &report.rows {
                let tag = if engine == oracle { "ok" } else { "MISMATCH" };
                println!("n={n} engine={engine} oracle={oracle} {tag}");
            }
            if report.all_match() {
                println!("crosscheck: ok");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("crosscheck: FAILED");
                Ok(ExitCode::from(1))
            }
        }
        Cmd::Triangle { family, rows } => {
            let triangle = build_triangle(family, *rows)?;
            for row in triangle {
                let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
                println!("{}", cells.join(" "));
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { suite, fixtures } => {
            let report = run_suite(suite, fixtures, caps.workers)?;
            print!("{}", report.render());
            if report.all_pass() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Cmd::Parse { expr } => {
            println!("{}", eval_expr(&parse(expr)?)?.dump());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_range(text: &str) -> Result<(usize, usize), Error> {
    let bad = || Error::Domain(format!("range must be A..B, got '{text}'"));
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn build_triangle(family: &str, rows: usize) -> Result<Vec<Vec<num_bigint::BigInt>>, Error> {
    let family = family.trim();
    if family == "eulerian2" {
        return (1..=rows).map(second_order_eulerian_row).collect();
    }
    if family == "narayana" {
        return (1..=rows).map(|k| Ok(narayana_hstar(k)?.coeffs().to_vec())).collect();
    }
    if let Some(args) = call_args(family, "riordan")? {
        let (g, f) = match args.as_slice() {
            [g, f] => (parse_series(g)?, parse_series(f)?),
            _ => return Err(Error::Arity("riordan(g, f) takes two series".into())),
        };
        return riordan_triangle(&g, &f, rows);
    }
    if let Some(args) = call_args(family, "multiset-des")? {
        let k: usize = match args.as_slice() {
            [k] => k.trim().parse().map_err(|_| {
                Error::Arity(format!("multiset-des takes an integer, got '{k}'"))
            })?,
            _ => return Err(Error::Arity("multiset-des(k) takes one integer".into())),
        };
        return (1..=rows)
            .map(|r| Ok(multiset_descent_poly(&MultisetSpec::uniform(r, k)?)?.coeffs().to_vec()))
            .collect();
    }
    Err(Error::Domain(format!(
        "unknown triangle family '{family}'; available: riordan(g, f), eulerian2, narayana, multiset-des(k)"
    )))
}

/// If `text` is `name(...)`, split the parenthesized arguments at top-level
/// commas; returns None when the name does not match.
fn call_args(text: &str, name: &str) -> Result<Option<Vec<String>>, Error> {
    let Some(rest) = text.strip_prefix(name) else { return Ok(None) };
    let rest = rest.trim();
    let Some(inner) = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')) else {
        if rest.is_empty() {
            return Err(Error::Arity(format!("{name} requires parenthesized arguments")));
        }
        return Ok(None);
    };
    let mut args = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for c in inner.chars() {
        match c {
            '(' => {
                depth += 1;
                current.push(c);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                current.push(c);
            }
            ',' if depth == 0 => {
                args.push(current.trim().to_string());
                current.clear();
            }
            _ => current.push(c),
        }
    }
    args.push(current.trim().to_string());
    Ok(Some(args))
}
