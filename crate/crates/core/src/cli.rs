//! The `siegel` command line.
//!
//! Exit codes: 0 success, 1 usage or validation error, 2 when two routes or
//! a verification suite disagree.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::eulerhodge::{chi_gaussbonnet, chi_product, chi_recursive, integrate_abar};
use crate::lagrangian::lg_integrate;
use crate::level::{chi_level, degree_ratio, PolarizationType};
use crate::output::{render_table, table_rows, OutputRecord, TableFormat};
use crate::symlambda::{top_degree, weighted_degree};
use crate::verify::{ring_genus_cap, run_suite, Suite, RING_CAP_VAR};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INCONSISTENT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "siegel", version, about = "Exact Euler characteristics of moduli of abelian varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    Product,
    Recursive,
    Gaussbonnet,
    All,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    Mumford,
    Giambelli,
    Lg,
    Recursion,
    Strata,
    All,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFormatArg {
    Md,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Euler characteristic of A_g by one or all routes.
    Chi {
        #[arg(long)]
        g: usize,
        #[arg(long, value_enum, default_value = "product")]
        route: Route,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
    /// Degree ratio and Euler characteristic for a polarization type.
    ChiLevel {
        /// Comma-separated divisibility chain, e.g. 1,2,4.
        #[arg(long, allow_hyphen_values = true)]
        delta: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
    /// Integral of a lambda monomial over Ā_g and of the matching x monomial over LG_g.
    Integrate {
        #[arg(long)]
        g: usize,
        /// Exponents a_1,...,a_g.
        #[arg(long, allow_hyphen_values = true)]
        exp: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
    /// Run an invariant suite; exits 2 if any check fails.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long)]
        gmax: Option<usize>,
    },
    /// Table of g, chi, tau, K, chi_LG.
    Table {
        #[arg(long)]
        gmax: usize,
        #[arg(long, value_enum, default_value = "md")]
        format: TableFormatArg,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind::*;
            let text = e.render().to_string();
            return match e.kind() {
                DisplayHelp | DisplayVersion | DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Chi { g, route, format } => cmd_chi(g, route, format, out, err),
        Command::ChiLevel { delta, format } => cmd_chi_level(&delta, format, out),
        Command::Integrate { g, exp, format } => cmd_integrate(g, &exp, format, out, err),
        Command::Verify { suite, gmax } => cmd_verify(suite, gmax, out),
        Command::Table { gmax, format } => cmd_table(gmax, format, out),
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Inconsistent(format!("write failed: {e}"))
}

fn emit(records: &[OutputRecord], format: OutFormat, out: &mut dyn Write) -> Result<()> {
    match format {
        OutFormat::Text => {
            for r in records {
                writeln!(out, "{r}").map_err(io)?;
            }
        }
        OutFormat::Json => {
            let v = Value::Array(records.iter().map(OutputRecord::to_json).collect());
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json")).map_err(io)?;
        }
    }
    Ok(())
}

fn check_ring_cap(g: usize, what: &str) -> Result<()> {
    let cap = ring_genus_cap();
    if g > cap {
        return Err(Error::OutOfBounds {
            what: format!("genus for {what} (raise {RING_CAP_VAR} to allow)"),
            value: g,
            max: cap,
        });
    }
    Ok(())
}

fn cmd_chi(
    g: usize,
    route: Route,
    format: OutFormat,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    if g == 0 {
        return Err(Error::InvalidGenus { g, min: 1 });
    }
    if route == Route::Gaussbonnet {
        check_ring_cap(g, "the Gauss-Bonnet route")?;
    }
    let params = [("g", g.to_string())];
    let mut records = Vec::new();
    if matches!(route, Route::Product | Route::All) {
        records.push(OutputRecord::new("chi", &params, chi_product(g)?, "product"));
    }
    if matches!(route, Route::Recursive | Route::All) {
        records.push(OutputRecord::new("chi", &params, chi_recursive(g)?, "recursive"));
    }
    if route == Route::Gaussbonnet || (route == Route::All && g <= ring_genus_cap()) {
        records.push(OutputRecord::new("chi", &params, chi_gaussbonnet(g)?, "gaussbonnet"));
    } else if route == Route::All {
        writeln!(
            err,
            "note: gaussbonnet route skipped, g = {g} is above {RING_CAP_VAR} = {}",
            ring_genus_cap()
        )
        .map_err(io)?;
    }
    emit(&records, format, out)?;
    if records.iter().any(|r| r.value != records[0].value) {
        writeln!(err, "error: routes disagree for g = {g}").map_err(io)?;
        return Ok(EXIT_INCONSISTENT);
    }
    Ok(EXIT_OK)
}

fn cmd_chi_level(delta: &str, format: OutFormat, out: &mut dyn Write) -> Result<i32> {
    let t: PolarizationType = delta.parse()?;
    let params = [("g", t.genus().to_string()), ("delta", t.to_string())];
    let records = [
        OutputRecord::new("degree_ratio", &params, degree_ratio(&t), "level"),
        OutputRecord::new("chi_level", &params, chi_level(&t)?, "level"),
    ];
    emit(&records, format, out)?;
    Ok(EXIT_OK)
}

fn parse_exponents(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad exponent {t:?}")))
        })
        .collect()
}

fn cmd_integrate(
    g: usize,
    exp: &str,
    format: OutFormat,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    if g == 0 {
        return Err(Error::InvalidGenus { g, min: 1 });
    }
    let a = parse_exponents(exp)?;
    if a.len() != g {
        return Err(Error::ExponentLength {
            expected: g,
            got: a.len(),
        });
    }
    let d = weighted_degree(&a);
    let top = top_degree(g);
    let (abar, lg) = if d == top {
        check_ring_cap(g, "integration")?;
        (integrate_abar(g, &a)?, lg_integrate(g, &a)?)
    } else {
        writeln!(err, "note: degree {d} is not the top degree {top}, integral is 0").map_err(io)?;
        (crate::Rational::zero(), crate::Rational::zero())
    };
    let params = [("g", g.to_string()), ("exp", exp.replace(' ', ""))];
    let records = [
        OutputRecord::new("abar", &params, abar, "proportionality"),
        OutputRecord::new("lg", &params, lg, "lagrangian"),
    ];
    emit(&records, format, out)?;
    Ok(EXIT_OK)
}

fn cmd_verify(suite: SuiteArg, gmax: Option<usize>, out: &mut dyn Write) -> Result<i32> {
    let suite = match suite {
        SuiteArg::Mumford => Suite::Mumford,
        SuiteArg::Giambelli => Suite::Giambelli,
        SuiteArg::Lg => Suite::Lg,
        SuiteArg::Recursion => Suite::Recursion,
        SuiteArg::Strata => Suite::Strata,
        SuiteArg::All => Suite::All,
    };
    let reports = run_suite(suite, gmax)?;
    let mut ok = true;
    for r in &reports {
        write!(out, "{r}").map_err(io)?;
        ok &= r.passed();
    }
    if reports.len() > 1 {
        writeln!(out, "{} all", if ok { "PASS" } else { "FAIL" }).map_err(io)?;
    }
    Ok(if ok { EXIT_OK } else { EXIT_INCONSISTENT })
}

fn cmd_table(gmax: usize, format: TableFormatArg, out: &mut dyn Write) -> Result<i32> {
    let format = match format {
        TableFormatArg::Md => TableFormat::Md,
        TableFormatArg::Csv => TableFormat::Csv,
        TableFormatArg::Json => TableFormat::Json,
    };
    let rows = table_rows(gmax)?;
    write!(out, "{}", render_table(&rows, format)).map_err(io)?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("siegel").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn chi_routes() {
        let (code, out, _) = run_args(&["chi", "--g", "2", "--route", "all"]);
        assert_eq!(code, 0);
        assert_eq!(out.matches("= -1/1440").count(), 3, "{out}");
        let (code, out, _) = run_args(&["chi", "--g", "1"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "chi[g=1] = -1/12 (product)");
        assert_eq!(run_args(&["chi", "--g", "0"]).0, 1);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args(&[]).0, 0);
        assert_eq!(run_args(&["--help"]).0, 0);
        assert_eq!(run_args(&["frobnicate"]).0, 1);
        assert_eq!(run_args(&["chi", "--g", "x"]).0, 1);
        assert_eq!(run_args(&["table", "--gmax", "2", "--format", "xml"]).0, 1);
    }

    #[test]
    fn level_errors_name_the_pair() {
        let (code, _, err) = run_args(&["chi-level", "--delta", "2,3"]);
        assert_eq!(code, 1);
        assert!(err.contains("2 does not divide 3"), "{err}");
    }
}
