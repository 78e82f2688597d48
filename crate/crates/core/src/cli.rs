// Copyright 2026 The chiral-index Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! The `chiral` command-line interface.
//!
//! Exit codes: 0 success (or "not rejected" for `test`), 1 symmetry
//! rejected by `test` or a failed `tables --verify`, 2 usage, parse or
//! configuration error, 3 degenerate sample (fewer than two observations
//! or zero inertia), 4 sample size not tabulated.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::chirality::{chiral_index, chiral_index_with, min_correlation_bruteforce, Method};
use crate::error::Error;
use crate::format::{emit_table, TableFormat};
use crate::input::parse_numbers;
use crate::montecarlo::{run_simulation_with_threads, SimulationConfig, DEFAULT_LEVELS};
use crate::sample::Sample;
use crate::sampling::{Law, DEFAULT_SEED};
use crate::symmetry::test_symmetry;
use crate::tables::{table_text, verify_table_text, LookupPolicy};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECTED: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;
pub const EXIT_NOT_TABULATED: i32 = 4;

/// Exit code for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::ZeroInertia | Error::DegenerateSample { .. } => EXIT_DEGENERATE,
        Error::SampleSizeNotTabulated { .. } | Error::SampleSizeOutOfRange { .. } => {
            EXIT_NOT_TABULATED
        }
        _ => EXIT_USAGE,
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "chiral",
    version,
    about = "Chiral index of univariate samples, quantile tables and symmetry tests"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute the chiral index of a sample
    Chi(ChiArgs),
    /// Test symmetry against the tabulated quantiles
    Test(TestArgs),
    /// Regenerate quantile tables by Monte-Carlo simulation
    Simulate(SimulateArgs),
    /// Print or audit the bundled quantile tables
    Tables(TablesArgs),
    /// Compare the sort-correlate route with permutation enumeration
    Oracle(OracleArgs),
}

#[derive(Debug, Args)]
struct InputArg {
    /// Input file of whitespace- or comma-separated numbers; stdin when absent or "-"
    input: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    AscDesc,
    Midrange,
    Halfrange,
    All,
}

#[derive(Debug, Args)]
struct ChiArgs {
    #[command(flatten)]
    input: InputArg,
    #[arg(long, value_enum, default_value = "asc-desc")]
    method: MethodArg,
}

#[derive(Debug, Args)]
struct TestArgs {
    #[command(flatten)]
    input: InputArg,
    /// Hypothesized parent law
    #[arg(long, value_parser = parse_law)]
    law: Law,
    /// One of 0.90, 0.95, 0.98, 0.99
    #[arg(long, default_value_t = 0.95)]
    level: f64,
    /// Interpolate critical values in 1/n for off-grid sample sizes
    #[arg(long)]
    interpolate: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    PaperText,
    Csv,
}

#[derive(Debug, Args)]
struct SimulateArgs {
    #[arg(long, value_parser = parse_law)]
    law: Law,
    /// Sample sizes, e.g. "3,10,25" or "3-100,110-1000:10,10000"
    #[arg(long, value_parser = parse_n_list)]
    n_list: NList,
    /// Chiral-index observations per replicate
    #[arg(long, default_value_t = crate::montecarlo::DEFAULT_OBSERVATIONS)]
    obs: usize,
    #[arg(long, default_value_t = crate::montecarlo::DEFAULT_REPLICATES)]
    replicates: usize,
    /// Comma-separated quantile levels
    #[arg(long, value_parser = parse_levels)]
    levels: Option<Levels>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, value_enum, default_value = "paper-text")]
    format: FormatArg,
    /// Output file; stdout when absent
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads; defaults to the available parallelism
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Debug, Args)]
struct TablesArgs {
    /// Table to print or audit; both when absent
    #[arg(long, value_parser = parse_law)]
    law: Option<Law>,
    /// Audit the table data instead of printing it
    #[arg(long)]
    verify: bool,
    /// Audit this copy of the data file instead of the bundled one
    #[arg(long, requires_all = ["verify", "law"])]
    file: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[command(flatten)]
    input: InputArg,
    #[arg(long, default_value_t = crate::chirality::DEFAULT_BRUTE_FORCE_MAX_N)]
    max_n: usize,
}

#[derive(Debug, Clone)]
struct NList(Vec<usize>);

#[derive(Debug, Clone)]
struct Levels(Vec<f64>);

fn parse_law(s: &str) -> Result<Law, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_n_list(s: &str) -> Result<NList, String> {
    let mut sizes = Vec::new();
    for item in s.split(',').map(str::trim).filter(|i| !i.is_empty()) {
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad sample size {t:?}"))
        };
        let (range, step) = match item.split_once(':') {
            Some((range, step)) => (range, parse(step)?),
            None => (item, 1),
        };
        if step == 0 {
            return Err(format!("zero step in {item:?}"));
        }
        match range.split_once('-') {
            Some((lo, hi)) => {
                let (lo, hi) = (parse(lo)?, parse(hi)?);
                if lo > hi {
                    return Err(format!("empty range {item:?}"));
                }
                sizes.extend((lo..=hi).step_by(step));
            }
            None => sizes.push(parse(range)?),
        }
    }
    if sizes.is_empty() {
        return Err("no sample sizes given".into());
    }
    Ok(NList(sizes))
}

fn parse_levels(s: &str) -> Result<Levels, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<f64>().map_err(|_| format!("bad level {t:?}")))
        .collect::<Result<Vec<_>, _>>()
        .map(Levels)
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

/// Runs the CLI with explicit streams and returns the process exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            let code = e.exit_code();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = write!(sink, "{rendered}");
            return code;
        }
    };
    let mut io = Io {
        stdin,
        stdout,
        stderr,
    };
    let outcome = match cli.command {
        Command::Chi(args) => cmd_chi(&args, &mut io),
        Command::Test(args) => cmd_test(&args, &mut io),
        Command::Simulate(args) => cmd_simulate(&args, &mut io),
        Command::Tables(args) => cmd_tables(&args, &mut io),
        Command::Oracle(args) => cmd_oracle(&args, &mut io),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(io.stderr, "error: {e}");
            exit_code(&e)
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(io.stderr, "error: {msg}");
            EXIT_USAGE
        }
    }
}

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

type CmdResult = Result<i32, Failure>;

fn read_sample(input: &InputArg, io: &mut Io<'_>) -> Result<Sample, Failure> {
    let text = match &input.input {
        Some(path) if path.as_os_str() != "-" => fs::read_to_string(path)
            .map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?,
        _ => {
            let mut text = String::new();
            io.stdin.read_to_string(&mut text)?;
            text
        }
    };
    Ok(Sample::new(parse_numbers(&text)?)?)
}

fn cmd_chi(args: &ChiArgs, io: &mut Io<'_>) -> CmdResult {
    let sample = read_sample(&args.input, io)?;
    let single = match args.method {
        MethodArg::AscDesc => Some(Method::SortCorrelate),
        MethodArg::Midrange => Some(Method::MidrangeVariance),
        MethodArg::Halfrange => Some(Method::HalfrangeVariance),
        MethodArg::All => None,
    };
    if let Some(method) = single {
        let r = chiral_index_with(&sample, method)?;
        writeln!(io.stdout, "chi {}", r.chi)?;
        writeln!(io.stdout, "r_m {}", r.r_m)?;
        writeln!(io.stdout, "n {}", r.n)?;
        writeln!(io.stdout, "method {}", r.method)?;
        return Ok(EXIT_OK);
    }
    let reports = Method::FORMULAS
        .iter()
        .map(|&m| chiral_index_with(&sample, m))
        .collect::<Result<Vec<_>, _>>()?;
    writeln!(io.stdout, "method chi r_m")?;
    for r in &reports {
        writeln!(io.stdout, "{} {} {}", r.method, r.chi, r.r_m)?;
    }
    let mut worst = 0.0f64;
    for (i, a) in reports.iter().enumerate() {
        for b in &reports[i + 1..] {
            worst = worst.max((a.chi - b.chi).abs());
        }
    }
    writeln!(io.stdout, "max_discrepancy {worst}")?;
    Ok(EXIT_OK)
}

fn cmd_test(args: &TestArgs, io: &mut Io<'_>) -> CmdResult {
    let sample = read_sample(&args.input, io)?;
    let policy = if args.interpolate {
        LookupPolicy::Interpolate
    } else {
        LookupPolicy::Exact
    };
    let r = test_symmetry(&sample, args.law, args.level, policy)?;
    let verdict = if r.reject {
        "exceeds the critical value: symmetry (and the law) rejected"
    } else {
        "does not exceed the critical value: symmetry not rejected"
    };
    writeln!(
        io.stdout,
        "{} law, n = {}, level {:.2} ({} lookup): chi = {} {verdict} ({})",
        r.law,
        r.n,
        r.level,
        r.policy.name(),
        r.chi,
        r.critical
    )?;
    match r.strongest_rejecting_level {
        Some(p) => writeln!(io.stdout, "largest tabulated level rejecting: {p:.2}")?,
        None => writeln!(io.stdout, "not rejected at any tabulated level")?,
    }
    writeln!(io.stdout, "{} {} {}", r.chi, r.critical, r.reject)?;
    Ok(if r.reject { EXIT_REJECTED } else { EXIT_OK })
}

fn cmd_simulate(args: &SimulateArgs, io: &mut Io<'_>) -> CmdResult {
    let levels = args
        .levels
        .as_ref()
        .map_or_else(|| DEFAULT_LEVELS.to_vec(), |l| l.0.clone());
    let config = SimulationConfig::new(args.law.standard(), args.n_list.0.clone())
        .with_observations(args.obs)
        .with_replicates(args.replicates)
        .with_levels(levels)
        .with_seed(args.seed);
    config.validate()?;
    let threads = match args.threads {
        Some(0) => return Err(Error::InvalidConfig("--threads must be positive".into()).into()),
        Some(t) => t,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };

    let started = Instant::now();
    let rows = run_simulation_with_threads(&config, threads)?;
    let format = match args.format {
        FormatArg::PaperText => TableFormat::PaperText,
        FormatArg::Csv => TableFormat::Csv,
    };
    let bytes = emit_table(args.law, &rows, format)?;
    match &args.out {
        Some(path) => fs::write(path, &bytes)
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))?,
        None => io.stdout.write_all(&bytes)?,
    }
    writeln!(
        io.stderr,
        "{} law: {} sample sizes x {} replicates x {} observations in {:.2?} on {threads} threads",
        args.law,
        rows.len(),
        config.replicates,
        config.observations,
        started.elapsed()
    )?;
    Ok(EXIT_OK)
}

fn cmd_tables(args: &TablesArgs, io: &mut Io<'_>) -> CmdResult {
    let laws: Vec<Law> = args.law.map_or_else(|| Law::ALL.to_vec(), |l| vec![l]);
    if !args.verify {
        for (i, law) in laws.iter().enumerate() {
            if i > 0 {
                writeln!(io.stdout)?;
            }
            io.stdout.write_all(table_text(*law).as_bytes())?;
        }
        return Ok(EXIT_OK);
    }

    let mut failed = false;
    for law in laws {
        let (violations, source) = match &args.file {
            Some(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?;
                (verify_table_text(law, &text), path.display().to_string())
            }
            None => (
                verify_table_text(law, table_text(law)),
                "bundled".to_string(),
            ),
        };
        if violations.is_empty() {
            writeln!(io.stdout, "ok {law} ({source})")?;
        } else {
            failed = true;
            writeln!(
                io.stdout,
                "FAILED {law} ({source}): {} violations",
                violations.len()
            )?;
            for v in violations {
                writeln!(io.stderr, "{v}")?;
            }
        }
    }
    Ok(if failed { EXIT_VERIFY_FAILED } else { EXIT_OK })
}

fn cmd_oracle(args: &OracleArgs, io: &mut Io<'_>) -> CmdResult {
    let sample = read_sample(&args.input, io)?;
    let brute = min_correlation_bruteforce(&sample, args.max_n)?;
    let sorted = chiral_index(&sample)?.r_m;
    writeln!(io.stdout, "brute_force_r_m {brute}")?;
    writeln!(io.stdout, "sort_correlate_r_m {sorted}")?;
    writeln!(io.stdout, "abs_diff {}", (brute - sorted).abs())?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_with(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut input = stdin.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("chiral").chain(args.iter().copied()),
            &mut input,
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
    fn n_list_syntax() {
        assert_eq!(parse_n_list("3,10, 25").unwrap().0, vec![3, 10, 25]);
        assert_eq!(
            parse_n_list("3-5,110-130:10").unwrap().0,
            vec![3, 4, 5, 110, 120, 130]
        );
        assert!(parse_n_list("5-3").is_err());
        assert!(parse_n_list("x").is_err());
        assert!(parse_n_list("3-9:0").is_err());
    }

    #[test]
    fn chi_of_symmetric_triple() {
        let (code, out, _) = run_with(&["chi"], "0 1 2");
        assert_eq!(code, 0);
        assert_eq!(out.lines().next(), Some("chi 0"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_with(&["chi"], "5 5 5").0, EXIT_DEGENERATE);
        assert_eq!(run_with(&["chi"], "1 two 3").0, EXIT_USAGE);
        assert_eq!(run_with(&["chi"], "1").0, EXIT_DEGENERATE);
        assert_eq!(
            run_with(&["test", "--law", "uniform", "--level", "0.5"], "0 0 1").0,
            EXIT_USAGE
        );
        assert_eq!(run_with(&["bogus"], "").0, EXIT_USAGE);
        assert_eq!(run_with(&["--help"], "").0, 0);
    }

    #[test]
    fn short_sample_is_not_tabulated() {
        let (code, _, err) = run_with(&["test", "--law", "normal"], "1 2");
        assert_eq!(code, EXIT_NOT_TABULATED);
        assert!(err.contains("outside the tabulated range"));
    }
}
