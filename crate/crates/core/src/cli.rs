//! Command-line front end. Every command produces a [`RunReport`]; the binary
//! prints it and exits with status 0 exactly when every check passed.

use std::path::Path;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bench::{self, Strategy};
use crate::catalog;
use crate::closed_forms::table_row;
use crate::error::{Error, Result};
use crate::families::{stem_group, Family};
use crate::genfun::{a_of_t, b_of_t, RationalGF};
use crate::group::{certify, CheckOutcome, GroupTable};
use crate::isoclinism::{are_isoclinic, verify_witness};
use crate::oracle::{alpha_brute, beta_brute};
use crate::spec_file::GroupSpec;

#[derive(Debug, Parser)]
#[command(name = "simconj", version, about = "Simultaneous conjugacy generating functions of small groups")]
pub struct Cli {
    /// Print the machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

/// Which generating function to print.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    A,
    B,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EquivMode {
    A,
    B,
    Isoclinic,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute A(t) and/or B(t) of a group.
    Genfun {
        /// Spec file, `family@p` (e.g. `gamma3@2`) or catalog label (e.g. `Q8`).
        group: String,
        #[arg(long, value_enum, default_value = "both")]
        which: Which,
        /// Substitute t -> t/|G|.
        #[arg(long)]
        normalized: bool,
        #[arg(long)]
        partial_fractions: bool,
        /// Print the first N series coefficients.
        #[arg(long, value_name = "N")]
        coefficients: Option<usize>,
    },
    /// Check every family table row at the given primes.
    VerifyTable {
        #[arg(long = "p", value_delimiter = ',', default_values_t = [2u64, 3])]
        primes: Vec<u64>,
    },
    /// Compare two groups by A, B or isoclinism.
    Equiv {
        first: String,
        second: String,
        #[arg(long, value_enum, default_value = "isoclinic")]
        mode: EquivMode,
    },
    /// Cross-check brute-force orbit counts against the generating functions.
    Oracle {
        group: String,
        #[arg(long, default_value_t = 2)]
        n_max: u32,
    },
    /// Benchmark the counting strategies and print CSV.
    Bench {
        /// Comma-separated group names; defaults to the catalog up to `--max-order`.
        #[arg(long, value_delimiter = ',')]
        groups: Vec<String>,
        #[arg(long, default_value_t = 16)]
        max_order: usize,
        #[arg(long, default_value_t = 2)]
        n_max: u32,
        #[arg(long, value_delimiter = ',')]
        strategies: Vec<String>,
    },
    /// Verify the group axioms of a multiplication table.
    Certify { group: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub actual: Option<String>,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool) -> Self {
        Check {
            name: name.into(),
            passed,
            expected: None,
            actual: None,
        }
    }

    fn compare(name: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        Check {
            name: name.into(),
            passed: expected == actual,
            expected: Some(expected),
            actual: Some(actual),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Input {
    pub source: String,
    pub label: String,
    pub order: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<Input>,
    pub results: Value,
    pub checks: Vec<Check>,
    /// Human-readable body; not part of the JSON form.
    #[serde(skip)]
    pub text: String,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            return serde_json::to_string_pretty(self).expect("report serializes") + "\n";
        }
        let mut out = self.text.clone();
        for c in self.checks.iter().filter(|c| !c.passed) {
            out.push_str(&format!("FAILED {}", c.name));
            if let (Some(e), Some(a)) = (&c.expected, &c.actual) {
                out.push_str(&format!(": expected {e}, got {a}"));
            }
            out.push('\n');
        }
        if !self.checks.is_empty() {
            let ok = self.checks.iter().filter(|c| c.passed).count();
            out.push_str(&format!("{ok}/{} checks passed\n", self.checks.len()));
        }
        out
    }
}

/// Resolve a group argument: an existing file, `family@p`, or a catalog label.
pub fn resolve_group(arg: &str) -> Result<(GroupTable, Input)> {
    let g = if Path::new(arg).is_file() {
        GroupSpec::load(arg)?.build()?
    } else if let Some((name, p)) = arg.split_once('@') {
        let family: Family = name.parse()?;
        let p: u64 = p
            .parse()
            .map_err(|_| Error::Parse(format!("bad prime in {arg:?}")))?;
        stem_group(family, p)?
    } else {
        catalog::lookup(arg)?
    };
    let input = Input {
        source: arg.to_string(),
        label: g.label().to_string(),
        order: g.order(),
    };
    Ok((g, input))
}

fn gf_block(name: &str, f: &RationalGF, partial: bool, coefficients: Option<usize>) -> (Value, String) {
    let mut v = json!({ "function": f.to_json() });
    let mut text = format!("{name}(t) = {f}\n");
    if partial {
        let pf = f.partial_fractions();
        text.push_str(&format!("{name}(t) = {pf}\n"));
        v["partial_fractions"] = pf.to_json();
    }
    if let Some(n) = coefficients {
        let series: Vec<String> = f.series(n).iter().map(|c| c.to_string()).collect();
        text.push_str(&format!("{name} coefficients: {}\n", series.join(", ")));
        v["coefficients"] = json!(series);
    }
    (v, text)
}

fn cmd_genfun(
    group: &str,
    which: Which,
    normalized: bool,
    partial: bool,
    coefficients: Option<usize>,
) -> Result<(Vec<Input>, Value, Vec<Check>, String)> {
    let (g, input) = resolve_group(group)?;
    let order = g.order() as u64;
    let finish = |f: RationalGF| if normalized { f.normalize(order) } else { f };
    let mut results = json!({ "normalized": normalized });
    let mut text = format!("{} (order {})\n", g.label(), g.order());
    if matches!(which, Which::A | Which::Both) {
        let (v, t) = gf_block("A", &finish(a_of_t(&g)), partial, coefficients);
        results["A"] = v;
        text.push_str(&t);
    }
    if matches!(which, Which::B | Which::Both) {
        let (v, t) = gf_block("B", &finish(b_of_t(&g)?), partial, coefficients);
        results["B"] = v;
        text.push_str(&t);
    }
    Ok((vec![input], results, Vec::new(), text))
}

/// Outcome of checking one family row at one prime.
#[derive(Clone, Debug, Serialize)]
pub struct RowCheck {
    pub family: Family,
    pub p: u64,
    pub order: Option<usize>,
    pub a_matches: bool,
    pub b_matches: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

pub fn verify_row(family: Family, p: u64) -> RowCheck {
    let outcome = (|| -> Result<(usize, bool, bool)> {
        let g = stem_group(family, p)?;
        let (a, b) = table_row(family, p)?;
        let n = g.order() as u64;
        Ok((g.order(), a_of_t(&g).normalize(n) == a, b_of_t(&g)?.normalize(n) == b))
    })();
    match outcome {
        Ok((order, a_matches, b_matches)) => RowCheck {
            family,
            p,
            order: Some(order),
            a_matches,
            b_matches,
            error: None,
        },
        Err(e) => RowCheck {
            family,
            p,
            order: None,
            a_matches: false,
            b_matches: false,
            error: Some(e.to_string()),
        },
    }
}

/// Primes whose stem groups stay under the order cap.
pub const TABLE_PRIMES: [u64; 3] = [2, 3, 5];

fn cmd_verify_table(primes: &[u64]) -> Result<(Vec<Input>, Value, Vec<Check>, String)> {
    if let Some(&p) = primes.iter().find(|p| !TABLE_PRIMES.contains(p)) {
        return Err(Error::InvalidParameters(format!(
            "p = {p} is outside {{2, 3, 5}}: its stem groups exceed the order cap"
        )));
    }
    let cells: Vec<(Family, u64)> = primes
        .iter()
        .flat_map(|&p| Family::ALL.into_iter().filter(move |f| f.admits(p)).map(move |f| (f, p)))
        .collect();
    let rows: Vec<RowCheck> = cells.par_iter().map(|&(f, p)| verify_row(f, p)).collect();
    let mut text = String::new();
    let mut checks = Vec::new();
    for r in &rows {
        let status = match &r.error {
            Some(e) => format!("error: {e}"),
            None => format!(
                "A {} B {}",
                if r.a_matches { "ok" } else { "MISMATCH" },
                if r.b_matches { "ok" } else { "MISMATCH" }
            ),
        };
        text.push_str(&format!("{:<8} p={} {status}\n", r.family.name(), r.p));
        checks.push(Check::new(format!("table {} p={} A", r.family.name(), r.p), r.a_matches));
        checks.push(Check::new(format!("table {} p={} B", r.family.name(), r.p), r.b_matches));
    }
    Ok((Vec::new(), json!({ "rows": rows }), checks, text))
}

fn cmd_equiv(first: &str, second: &str, mode: EquivMode) -> Result<(Vec<Input>, Value, Vec<Check>, String)> {
    let (g, ig) = resolve_group(first)?;
    let (h, ih) = resolve_group(second)?;
    let mut checks = Vec::new();
    let (verdict, extra) = match mode {
        EquivMode::A => (a_of_t(&g) == a_of_t(&h), Value::Null),
        EquivMode::B => (b_of_t(&g)? == b_of_t(&h)?, Value::Null),
        EquivMode::Isoclinic => match are_isoclinic(&g, &h)? {
            Some(w) => {
                checks.push(Check::new("witness verifies", verify_witness(&g, &h, &w)));
                (true, serde_json::to_value(&w).expect("witness serializes"))
            }
            None => (false, Value::Null),
        },
    };
    let mode_name = format!("{mode:?}").to_lowercase();
    let text = format!("{} ~{mode_name} {}: {verdict}\n", g.label(), h.label());
    let results = json!({ "mode": mode_name, "equivalent": verdict, "witness": extra });
    Ok((vec![ig, ih], results, checks, text))
}

fn cmd_oracle(group: &str, n_max: u32) -> Result<(Vec<Input>, Value, Vec<Check>, String)> {
    let (g, input) = resolve_group(group)?;
    let alpha = a_of_t(&g).series(n_max as usize + 1);
    let beta = b_of_t(&g)?.series(n_max as usize + 1);
    let mut rows = Vec::new();
    let mut checks = Vec::new();
    let mut text = format!("{} (order {})\n", g.label(), g.order());
    for n in 0..=n_max {
        for (mode, series, brute) in [
            ("alpha", &alpha, alpha_brute(&g, n)),
            ("beta", &beta, beta_brute(&g, n)),
        ] {
            let expected = series[n as usize].to_string();
            match brute {
                Ok(r) => {
                    let check = Check::compare(format!("{mode}_{n}"), &expected, r.count);
                    text.push_str(&format!(
                        "{mode}_{n} genfun={expected} brute={} {}\n",
                        r.count,
                        if check.passed { "match" } else { "MISMATCH" }
                    ));
                    rows.push(json!({ "n": n, "mode": mode, "genfun": expected, "brute": r.count.to_string(),
                                      "tuples_visited": r.tuples_visited }));
                    checks.push(check);
                }
                Err(e) => {
                    text.push_str(&format!("{mode}_{n} genfun={expected} brute skipped: {e}\n"));
                    rows.push(json!({ "n": n, "mode": mode, "genfun": expected, "skipped": e.to_string() }));
                }
            }
        }
    }
    Ok((vec![input], json!({ "rows": rows }), checks, text))
}

fn cmd_bench(
    groups: &[String],
    max_order: usize,
    n_max: u32,
    strategies: &[String],
) -> Result<(Vec<Input>, Value, Vec<Check>, String)> {
    let tables: Vec<GroupTable> = if groups.is_empty() {
        catalog::catalog_up_to(max_order)?
    } else {
        groups.iter().map(|s| resolve_group(s).map(|r| r.0)).collect::<Result<_>>()?
    };
    let strategies: Vec<Strategy> = if strategies.is_empty() {
        Strategy::ALL.to_vec()
    } else {
        strategies.iter().map(|s| s.parse()).collect::<Result<_>>()?
    };
    let inputs = tables
        .iter()
        .map(|g| Input {
            source: g.label().to_string(),
            label: g.label().to_string(),
            order: g.order(),
        })
        .collect();
    let rows = bench::run(&tables, n_max, &strategies);
    let text = bench::to_csv(&rows);
    Ok((inputs, json!({ "rows": rows }), Vec::new(), text))
}

fn cmd_certify(group: &str) -> Result<(Vec<Input>, Value, Vec<Check>, String)> {
    let (g, input) = resolve_group(group)?;
    let report = certify(&g);
    let mut text = format!("{} (order {})\n", g.label(), g.order());
    let mut checks = Vec::new();
    for (name, outcome) in &report.checks {
        let line = match outcome {
            CheckOutcome::Passed => "pass".to_string(),
            CheckOutcome::Failed { witness } => format!("FAIL witness {witness:?}"),
            CheckOutcome::Skipped { reason } => format!("skipped ({reason})"),
        };
        text.push_str(&format!("{name}: {line}\n"));
        checks.push(Check::new(name.clone(), !matches!(outcome, CheckOutcome::Failed { .. })));
    }
    let results = serde_json::to_value(&report).expect("report serializes");
    Ok((vec![input], results, checks, text))
}

/// Run a parsed command. Construction and parse errors are returned as `Err`.
pub fn execute(cli: &Cli, echo: String) -> Result<RunReport> {
    let start = Instant::now();
    let (inputs, results, checks, text) = match &cli.command {
        Command::Genfun {
            group,
            which,
            normalized,
            partial_fractions,
            coefficients,
        } => cmd_genfun(group, *which, *normalized, *partial_fractions, *coefficients)?,
        Command::VerifyTable { primes } => cmd_verify_table(primes)?,
        Command::Equiv { first, second, mode } => cmd_equiv(first, second, *mode)?,
        Command::Oracle { group, n_max } => cmd_oracle(group, *n_max)?,
        Command::Bench {
            groups,
            max_order,
            n_max,
            strategies,
        } => cmd_bench(groups, *max_order, *n_max, strategies)?,
        Command::Certify { group } => cmd_certify(group)?,
    };
    Ok(RunReport {
        command: echo,
        inputs,
        results,
        checks,
        text,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// Parse `args`, run, print, and return the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let echo = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    match execute(&cli, echo) {
        Ok(report) => {
            print!("{}", report.render(cli.json));
            eprintln!("elapsed: {} ms", report.elapsed_ms);
            if report.passed() {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Result<RunReport> {
        let cli = Cli::try_parse_from(std::iter::once("simconj").chain(args.iter().copied())).unwrap();
        execute(&cli, args.join(" "))
    }

    #[test]
    fn genfun_dihedral_sixteen_partial_fractions() {
        let r = run(&["genfun", "gamma3@2", "--which", "a", "--partial-fractions"]).unwrap();
        assert!(r.text.contains("A(t) = "));
        assert_eq!(r.results["A"]["partial_fractions"]["terms"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn genfun_abelian_seven() {
        let r = run(&["genfun", "abelian@7", "--coefficients", "3"]).unwrap();
        assert_eq!(r.results["A"]["function"], r.results["B"]["function"]);
        assert_eq!(r.results["A"]["coefficients"], json!(["1", "7", "49"]));
    }

    #[test]
    fn verify_table_rejects_seven() {
        assert!(run(&["verify-table", "--p", "7"]).is_err());
    }

    #[test]
    fn verify_table_two() {
        let r = run(&["verify-table", "--p", "2"]).unwrap();
        assert!(r.passed());
        assert_eq!(r.checks.len(), 16);
    }

    #[test]
    fn equiv_modes() {
        assert_eq!(run(&["equiv", "D8", "Q8", "--mode", "a"]).unwrap().results["equivalent"], true);
        assert_eq!(run(&["equiv", "C6", "S3", "--mode", "b"]).unwrap().results["equivalent"], false);
        let r = run(&["equiv", "D8", "Q8"]).unwrap();
        assert!(r.passed());
        assert!(r.results["witness"]["theta"].is_array());
    }

    #[test]
    fn oracle_s3() {
        let r = run(&["oracle", "S3", "--n-max", "3"]).unwrap();
        assert!(r.passed());
        assert_eq!(r.checks.len(), 8);
    }

    #[test]
    fn json_has_no_timing_and_is_deterministic() {
        let a = run(&["genfun", "Q8"]).unwrap().render(true);
        let b = run(&["genfun", "Q8"]).unwrap().render(true);
        assert_eq!(a, b);
        assert!(!a.contains("elapsed"));
    }
}
