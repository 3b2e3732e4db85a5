//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a computed value disagrees with its
//! expected value, 2 on bad input.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use serde::Serialize;

use crate::asm::Asm;
use crate::enumeration::{
    catalan_identity_check, composition_of, counts_by_key_with, predicted_count_for_key, sweep, Mode,
    SweepOptions, DEFAULT_SWEEP_LIMIT,
};
use crate::error::{Error, Result};
use crate::fixtures::{self, golden_rows};
use crate::key::{key_trace, sw_key};
use crate::patterns::PatternSet;
use crate::triangles::{
    bad_minus_ones, dyck_from_invseq, invseq_from_triangle, is_gapless, max_two_values_per_column,
    triangle_from_asm,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "asmkey", version, about = "Southwest keys and key-avoidance of alternating sign matrices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Key,
    Classical,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Key => Mode::Key,
            ModeArg::Classical => Mode::Classical,
        }
    }
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// File holding one or more matrices separated by blank lines; stdin if omitted.
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SizeArgs {
    /// Lift the size limit of 7 (up to 8).
    #[arg(long)]
    pub allow_large: bool,
    /// Number of work chunks for the parallel sweep (0 = automatic).
    #[arg(long, default_value_t = 0)]
    pub shards: usize,
}

impl SizeArgs {
    fn options(&self) -> SweepOptions {
        SweepOptions {
            allow_large: self.allow_large,
            shards: self.shards,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the southwest key of each matrix.
    Key {
        #[command(flatten)]
        input: InputArgs,
        /// Print every intermediate matrix and removal.
        #[arg(long)]
        trace: bool,
    },
    /// Print the monotone triangle of each matrix.
    Triangle {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Report whether each matrix's triangle is gapless, with its bad -1s.
    Gapless {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Print the inversion sequence of each {312,321}-key-avoiding matrix.
    Invseq {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Print the Dyck word of each {312,321}-key-avoiding matrix.
    Dyck {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Count avoiders over a range of sizes, checked against the fixtures.
    Sweep(SweepArgs),
    /// Count ASMs by key, with predicted counts for 312,321-avoiding keys.
    PerKey {
        n: usize,
        #[command(flatten)]
        size: SizeArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate both sides of the Catalan identity.
    Identity {
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Operations on the shipped golden tables.
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Pattern set such as `312` or `312&321` (also `+` or `/`); repeatable.
    #[arg(long = "set", short = 's')]
    pub sets: Vec<String>,
    /// Use every pattern set of a golden table (1, 2 or 3).
    #[arg(long)]
    pub table: Option<u8>,
    #[arg(long, default_value_t = 1)]
    pub min_n: usize,
    #[arg(long)]
    pub max_n: Option<usize>,
    #[arg(long, value_enum, default_value_t = ModeArg::Key)]
    pub mode: ModeArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(flatten)]
    pub size: SizeArgs,
}

#[derive(Debug, Subcommand)]
pub enum FixturesAction {
    /// Regenerate every golden row and compare.
    Check {
        /// Only check this table.
        #[arg(long)]
        table: Option<u8>,
        #[arg(long, default_value_t = DEFAULT_SWEEP_LIMIT)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        size: SizeArgs,
    },
}

/// One computed count with its golden value, if any.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRecord {
    pub mode: Mode,
    pub patterns: String,
    pub n: usize,
    pub count: u64,
    pub expected: Option<u64>,
    #[serde(rename = "match")]
    pub matched: bool,
}

impl ReportRecord {
    pub fn new(mode: Mode, patterns: String, n: usize, count: u64, expected: Option<u64>) -> Self {
        ReportRecord {
            mode,
            patterns,
            n,
            count,
            expected,
            matched: expected == Some(count),
        }
    }

    pub fn is_mismatch(&self) -> bool {
        self.expected.is_some() && !self.matched
    }
}

/// Parses whitespace-separated integer rows into a validated ASM.
pub fn parse_asm(text: &str) -> Result<Asm> {
    parse_asm_at(text, 0)
}

fn parse_asm_at(text: &str, first_line: usize) -> Result<Asm> {
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let mut row = Vec::new();
        let mut rest = line;
        let mut offset = 0;
        while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
            let token_end = rest[start..]
                .find(char::is_whitespace)
                .map_or(rest.len(), |e| start + e);
            let token = &rest[start..token_end];
            let value = token.replace('\u{2212}', "-").parse::<i64>().map_err(|_| Error::Parse {
                line: first_line + idx + 1,
                column: offset + start + 1,
                message: format!("not an integer: {token:?}"),
            })?;
            row.push(value);
            offset += token_end;
            rest = &rest[token_end..];
        }
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(Error::Parse {
                    line: first_line + idx + 1,
                    column: 1,
                    message: format!("row has {} entries, expected {}", row.len(), first.len()),
                });
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::Parse {
            line: first_line + 1,
            column: 1,
            message: "no matrix found".to_string(),
        });
    }
    if rows.len() != rows[0].len() {
        return Err(Error::Parse {
            line: first_line + rows.len(),
            column: 1,
            message: format!("{} rows of {} entries is not square", rows.len(), rows[0].len()),
        });
    }
    Asm::from_rows(&rows)
}

/// Parses a file of matrices separated by blank lines.
pub fn parse_asms(text: &str) -> Result<Vec<Asm>> {
    let mut out = Vec::new();
    let mut block = String::new();
    let mut block_start = 0;
    for (idx, line) in text.lines().chain(std::iter::once("")).enumerate() {
        if line.trim().is_empty() {
            if !block.is_empty() {
                out.push(parse_asm_at(&block, block_start)?);
                block.clear();
            }
            block_start = idx + 1;
        } else {
            block.push_str(line);
            block.push('\n');
        }
    }
    if out.is_empty() {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "no matrix found".to_string(),
        });
    }
    Ok(out)
}

fn read_input(input: &InputArgs, stdin: &mut dyn Read) -> std::result::Result<String, String> {
    match &input.input {
        Some(path) => fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| e.to_string())?;
            Ok(s)
        }
    }
}

enum Failure {
    Input(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Runs the CLI with explicit streams and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(stderr, "{rendered}")
            } else {
                write!(stdout, "{rendered}")
            };
            return code;
        }
    };
    let mut out = Vec::new();
    let outcome = execute(cli.command, stdin, &mut out);
    let _ = stdout.write_all(&out);
    match outcome {
        Ok(()) => EXIT_OK,
        Err(Failure::Mismatch) => {
            let _ = writeln!(stderr, "mismatch against expected values");
            EXIT_MISMATCH
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_INPUT
        }
    }
}

fn execute(command: Command, stdin: &mut dyn Read, out: &mut Vec<u8>) -> Outcome {
    match command {
        Command::Key { input, trace } => {
            let asms = load(&input, stdin)?;
            for_each_object(out, &asms, |out, a| print_key(out, a, trace))
        }
        Command::Triangle { input } => {
            let asms = load(&input, stdin)?;
            for_each_object(out, &asms, |out, a| {
                writeln!(out, "{}", triangle_from_asm(a))?;
                Ok(())
            })
        }
        Command::Gapless { input } => {
            let asms = load(&input, stdin)?;
            for_each_object(out, &asms, print_gapless)
        }
        Command::Invseq { input } => {
            let asms = load(&input, stdin)?;
            for_each_object(out, &asms, |out, a| {
                let e = invseq_from_triangle(&triangle_from_asm(a))?;
                writeln!(out, "{e}")?;
                Ok(())
            })
        }
        Command::Dyck { input } => {
            let asms = load(&input, stdin)?;
            for_each_object(out, &asms, |out, a| {
                let e = invseq_from_triangle(&triangle_from_asm(a))?;
                writeln!(out, "{}", dyck_from_invseq(&e)?)?;
                Ok(())
            })
        }
        Command::Sweep(args) => cmd_sweep(out, &args),
        Command::PerKey { n, size, format } => cmd_per_key(out, n, &size.options(), format),
        Command::Identity { n, format } => cmd_identity(out, n, format),
        Command::Fixtures {
            action:
                FixturesAction::Check {
                    table,
                    max_n,
                    format,
                    size,
                },
        } => cmd_fixtures_check(out, table, max_n, format, &size.options()),
    }
}

fn load(input: &InputArgs, stdin: &mut dyn Read) -> std::result::Result<Vec<Asm>, Failure> {
    let text = read_input(input, stdin).map_err(Failure::Input)?;
    Ok(parse_asms(&text)?)
}

fn for_each_object(
    out: &mut Vec<u8>,
    asms: &[Asm],
    mut f: impl FnMut(&mut Vec<u8>, &Asm) -> Outcome,
) -> Outcome {
    for (i, a) in asms.iter().enumerate() {
        if i > 0 {
            writeln!(out)?;
        }
        f(out, a)?;
    }
    Ok(())
}

fn print_key(out: &mut Vec<u8>, a: &Asm, trace: bool) -> Outcome {
    if !trace {
        writeln!(out, "{}", sw_key(a))?;
        return Ok(());
    }
    let chain = key_trace(a);
    for (step, link) in chain.iter().enumerate() {
        if let Some(r) = &link.removal {
            writeln!(
                out,
                "remove -1 at {}: staircase {} -> new 1s {}{}",
                r.minus_one,
                r.staircase.iter().join(" "),
                r.created.iter().join(" "),
                if r.simple { " (simple)" } else { "" }
            )?;
        }
        writeln!(out, "step {step}")?;
        writeln!(out, "{}", link.asm)?;
    }
    let key = chain[chain.len() - 1]
        .asm
        .to_permutation()
        .expect("the key process ends at a permutation matrix");
    writeln!(out, "key: {key}")?;
    Ok(())
}

fn print_gapless(out: &mut Vec<u8>, a: &Asm) -> Outcome {
    let t = triangle_from_asm(a);
    writeln!(out, "gapless: {}", if is_gapless(&t) { "yes" } else { "no" })?;
    writeln!(
        out,
        "at most two values per column: {}",
        if max_two_values_per_column(&t) { "yes" } else { "no" }
    )?;
    for b in bad_minus_ones(a) {
        writeln!(
            out,
            "bad -1 at {}: west 1 at {}, witness {}",
            b.minus_one, b.west_one, b.witness
        )?;
    }
    Ok(())
}

fn write_records<T: Serialize>(
    out: &mut Vec<u8>,
    records: &[T],
    format: Format,
    text_line: impl Fn(&T) -> String,
) -> Outcome {
    match format {
        Format::Text => {
            for r in records {
                writeln!(out, "{}", text_line(r))?;
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Document<'a, T> {
                records: &'a [T],
            }
            let doc = serde_json::to_string_pretty(&Document { records }).map_err(|e| Failure::Input(e.to_string()))?;
            writeln!(out, "{doc}")?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in records {
                w.serialize(r).map_err(|e| Failure::Input(e.to_string()))?;
            }
            let bytes = w.into_inner().map_err(|e| Failure::Input(e.to_string()))?;
            out.extend_from_slice(&bytes);
        }
    }
    Ok(())
}

fn report_line(r: &ReportRecord) -> String {
    let expected = r.expected.map_or("-".to_string(), |e| e.to_string());
    let status = match (r.expected, r.matched) {
        (None, _) => "-",
        (Some(_), true) => "ok",
        (Some(_), false) => "MISMATCH",
    };
    format!("{}\t{}\t{}\t{}\t{}\t{}", r.mode, r.patterns, r.n, r.count, expected, status)
}

fn finish_report(out: &mut Vec<u8>, records: &[ReportRecord], format: Format) -> Outcome {
    if format == Format::Text {
        writeln!(out, "mode\tpatterns\tn\tcount\texpected\tstatus")?;
    }
    write_records(out, records, format, report_line)?;
    if records.iter().any(ReportRecord::is_mismatch) {
        Err(Failure::Mismatch)
    } else {
        Ok(())
    }
}

fn table_sets(number: u8) -> std::result::Result<Vec<PatternSet>, Failure> {
    let rows = fixtures::table(number);
    if rows.is_empty() {
        return Err(Failure::Input(format!("no golden table {number}")));
    }
    Ok(rows.iter().flat_map(|r| r.sets.iter().cloned()).collect())
}

/// Records for every set and size; golden values apply to key mode only.
pub fn sweep_records(
    sets: &[PatternSet],
    min_n: usize,
    max_n: usize,
    mode: Mode,
    opts: &SweepOptions,
) -> Result<Vec<ReportRecord>> {
    let tables = sweep(min_n..=max_n, sets, mode, opts)?;
    let mut records = Vec::new();
    for (set, table) in sets.iter().zip(&tables) {
        for n in min_n..=max_n {
            let count = table.count(n).expect("sweep covers the requested range");
            let expected = match mode {
                Mode::Key => fixtures::expected_count(set, n),
                Mode::Classical => None,
            };
            records.push(ReportRecord::new(mode, table.patterns.clone(), n, count, expected));
        }
    }
    Ok(records)
}

fn cmd_sweep(out: &mut Vec<u8>, args: &SweepArgs) -> Outcome {
    let mut sets = args
        .sets
        .iter()
        .map(|s| s.parse::<PatternSet>())
        .collect::<Result<Vec<_>>>()?;
    if let Some(t) = args.table {
        sets.extend(table_sets(t)?);
    }
    if sets.is_empty() {
        return Err(Failure::Input("give at least one --set or a --table".to_string()));
    }
    let default_max = match args.table {
        Some(3) => 6,
        _ => DEFAULT_SWEEP_LIMIT,
    };
    let max_n = args.max_n.unwrap_or(default_max);
    if args.min_n == 0 || args.min_n > max_n {
        return Err(Failure::Input(format!("empty size range {}..={max_n}", args.min_n)));
    }
    let records = sweep_records(&sets, args.min_n, max_n, args.mode.into(), &args.size.options())?;
    finish_report(out, &records, args.format)
}

/// Golden rows regenerated up to `max_n` (and no further than each row's length).
pub fn fixture_records(table: Option<u8>, max_n: usize, opts: &SweepOptions) -> Result<Vec<ReportRecord>> {
    let rows: Vec<_> = golden_rows()
        .iter()
        .filter(|r| table.is_none_or(|t| r.table == t))
        .collect();
    let sets: Vec<PatternSet> = rows.iter().flat_map(|r| r.sets.iter().cloned()).collect();
    let top = rows
        .iter()
        .map(|r| r.counts.len())
        .max()
        .unwrap_or(0)
        .min(max_n);
    if top == 0 {
        return Ok(Vec::new());
    }
    let records = sweep_records(&sets, 1, top, Mode::Key, opts)?;
    Ok(records.into_iter().filter(|r| r.expected.is_some()).collect())
}

fn cmd_fixtures_check(out: &mut Vec<u8>, table: Option<u8>, max_n: usize, format: Format, opts: &SweepOptions) -> Outcome {
    if let Some(t) = table {
        table_sets(t)?;
    }
    let records = fixture_records(table, max_n, opts)?;
    finish_report(out, &records, format)
}

#[derive(Debug, Serialize)]
struct PerKeyRecord {
    key: String,
    count: u64,
    composition: Option<String>,
    predicted: Option<u64>,
}

fn cmd_per_key(out: &mut Vec<u8>, n: usize, opts: &SweepOptions, format: Format) -> Outcome {
    let counts = counts_by_key_with(n, opts)?;
    let records: Vec<PerKeyRecord> = counts
        .iter()
        .map(|(key, &count)| PerKeyRecord {
            key: key.compact(),
            count,
            composition: composition_of(key).ok().map(|c| c.to_string()),
            predicted: predicted_count_for_key(key).ok(),
        })
        .collect();
    write_records(out, &records, format, |r| {
        let mut line = format!("{}\t{}", r.key, r.count);
        if let (Some(c), Some(p)) = (&r.composition, r.predicted) {
            line.push_str(&format!("\t{c}\tpredicted {p}"));
        }
        line
    })?;
    if format == Format::Text {
        writeln!(out, "total\t{}", counts.values().sum::<u64>())?;
    }
    if records.iter().any(|r| r.predicted.is_some_and(|p| p != r.count)) {
        return Err(Failure::Mismatch);
    }
    Ok(())
}

fn cmd_identity(out: &mut Vec<u8>, n: usize, format: Format) -> Outcome {
    let check = catalan_identity_check(n)?;
    match format {
        Format::Text => {
            writeln!(out, "{} = {} = {}", check.lhs, check.rhs1, check.rhs2)?;
            for t in &check.breakdown {
                writeln!(out, "{}\t{}\t{}", t.key.compact(), t.composition, t.count)?;
            }
        }
        Format::Json => {
            let doc = serde_json::to_string_pretty(&check).map_err(|e| Failure::Input(e.to_string()))?;
            writeln!(out, "{doc}")?;
        }
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                key: String,
                composition: String,
                count: u64,
            }
            let rows: Vec<Row> = check
                .breakdown
                .iter()
                .map(|t| Row {
                    key: t.key.compact(),
                    composition: t.composition.to_string(),
                    count: t.count,
                })
                .collect();
            write_records(out, &rows, Format::Csv, |_| String::new())?;
        }
    }
    if check.holds() {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}
