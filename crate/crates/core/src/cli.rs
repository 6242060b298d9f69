//! Command-line front end. The binary is a thin wrapper around [`run`].
//!
//! Exit codes: 0 on success, 1 when a verification or cross-check finds a
//! mismatch, 2 on invalid input.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::enumeration::{self, SeriesName};
use crate::extremal;
use crate::oracle;
use crate::partition::{CoreTuple, Partition};
use crate::poset::{build_poset, build_t, CorePoset};
use crate::{BigCount, Error};

/// Upper bound on `s` for the formula-only commands.
pub const MAX_FORMULA_S: u32 = 2000;
/// Upper bound on `s` for commands that enumerate ideals of `T_s`.
pub const MAX_ENUMERATION_S: u32 = 16;

#[derive(Debug, Parser)]
#[command(name = "core-partitions", version, about = "Exact enumeration of (s,s+1,s+2)-core partitions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number r(s) of (s,s+1,s+2)-cores.
    Count {
        #[arg(long)]
        s: u32,
    },
    /// Maximum-size cores as JSON.
    MaxSize {
        #[arg(long)]
        s: u32,
    },
    /// Total size h(s) of all (s,s+1,s+2)-cores.
    SumSizes {
        #[arg(long)]
        s: u32,
        #[arg(long, value_enum, default_value_t = Method::Rec)]
        method: Method,
        /// Compute h(s) every way and fail unless all agree.
        #[arg(long)]
        check: bool,
    },
    /// Average size h(s)/r(s) as a reduced fraction.
    AvgSize {
        #[arg(long)]
        s: u32,
        /// Also print a decimal rounded to this many places.
        #[arg(long)]
        decimal: Option<u32>,
    },
    /// Stream (ideal, partition, size) records for a generator tuple.
    Enumerate {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u32>,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, value_enum, default_value_t = RecordFormat::Json)]
        format: RecordFormat,
    },
    /// Describe the poset of a generator tuple.
    Poset {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u32>,
        /// Emit the Hasse diagram in Graphviz DOT instead of JSON.
        #[arg(long)]
        dot: bool,
    },
    /// Rows (s, r, l, h, avg) for s = 0..=s-max.
    Table {
        #[arg(long)]
        s_max: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Cross-check every formula against brute force for s = 0..=s-max.
    Verify {
        #[arg(long)]
        s_max: u32,
        /// Largest partition size the hook-length scan may reach.
        #[arg(long, default_value_t = 70)]
        n_max: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Rec,
    Closed,
    Series,
    Rec3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RecordFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

enum Failure {
    Usage(String),
    Mismatch(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistent(msg) => Failure::Mismatch(msg),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type CliResult = std::result::Result<(), Failure>;

/// Parses `args` (including the program name) and runs the command, writing
/// results to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return if code == 0 { 0 } else { 2 };
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Mismatch(msg)) => {
            let _ = writeln!(err, "mismatch: {msg}");
            1
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "i/o error: {e}");
            1
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> CliResult {
    match command {
        Command::Count { s } => {
            check_s(s, 0, MAX_FORMULA_S)?;
            writeln!(out, "{}", enumeration::count_r(s.into()))?;
        }
        Command::MaxSize { s } => {
            check_s(s, 3, MAX_FORMULA_S)?;
            let report = extremal::extremal_report(s)?;
            writeln!(out, "{}", serde_json::to_string(&report).expect("report serializes"))?;
        }
        Command::SumSizes { s, method, check } => sum_sizes(s, method, check, out)?,
        Command::AvgSize { s, decimal } => {
            check_s(s, 0, MAX_FORMULA_S)?;
            let avg = enumeration::average_size(s.into());
            writeln!(out, "{}/{}", avg.numer(), avg.denom())?;
            if let Some(digits) = decimal {
                if digits > 1000 {
                    return Err(Failure::Usage("--decimal is limited to 1000 places".into()));
                }
                writeln!(out, "{}", enumeration::decimal_string(&avg, digits))?;
            }
        }
        Command::Enumerate { gens, limit, format } => enumerate(gens, limit, format, out)?,
        Command::Poset { gens, dot } => {
            let poset = poset_for(gens)?;
            if dot {
                out.write_all(poset.hasse_dot().as_bytes())?;
            } else {
                writeln!(out, "{}", serde_json::to_string(&poset.summary()).expect("summary serializes"))?;
            }
        }
        Command::Table { s_max, format } => table(s_max, format, out)?,
        Command::Verify { s_max, n_max } => verify(s_max, n_max, out)?,
    }
    Ok(())
}

fn check_s(s: u32, lo: u32, hi: u32) -> CliResult {
    if s < lo || s > hi {
        return Err(Failure::Usage(format!("--s must lie in [{lo}, {hi}], got {s}")));
    }
    Ok(())
}

fn poset_for(gens: Vec<u32>) -> std::result::Result<CorePoset, Failure> {
    let tuple = CoreTuple::new(gens)?;
    Ok(build_poset(&tuple)?)
}

fn sum_sizes(s: u32, method: Method, check: bool, out: &mut dyn Write) -> CliResult {
    check_s(s, 0, MAX_FORMULA_S)?;
    let s64 = u64::from(s);
    let by_series = || -> std::result::Result<BigCount, Failure> {
        Ok(enumeration::series(SeriesName::H, s as usize + 1)?.coeffs.swap_remove(s as usize))
    };
    // The three-term recurrence is undefined below s = 3; fall back to the base values.
    let by_rec3 = || -> std::result::Result<BigCount, Failure> {
        if s < 3 {
            Ok(enumeration::sum_h(s64))
        } else {
            Ok(enumeration::sum_h_rec3(s64)?)
        }
    };
    let value = match method {
        Method::Rec => enumeration::sum_h(s64),
        Method::Closed => enumeration::sum_h_closed_motzkin(s64),
        Method::Series => by_series()?,
        Method::Rec3 => by_rec3()?,
    };
    if check {
        let (closed_a, closed_b) = enumeration::sum_h_closed(s64);
        let routes = [
            ("recurrence", enumeration::sum_h(s64)),
            ("closed form (Motzkin sum)", closed_a),
            ("closed form (central binomial)", closed_b),
            ("three-term recurrence", by_rec3()?),
            ("generating function", by_series()?),
        ];
        if let Some((name, v)) = routes.iter().find(|(_, v)| *v != value) {
            return Err(Failure::Mismatch(format!("h({s}): {name} gives {v}, expected {value}")));
        }
    }
    writeln!(out, "{value}")?;
    Ok(())
}

#[derive(Serialize)]
struct Record<'a> {
    ideal: Vec<u32>,
    partition: &'a Partition,
    size: String,
}

fn enumerate(gens: Vec<u32>, limit: Option<usize>, format: RecordFormat, out: &mut dyn Write) -> CliResult {
    let poset = poset_for(gens)?;
    for ideal in poset.enumerate_ideals().take(limit.unwrap_or(usize::MAX)) {
        let elements = ideal.elements(&poset);
        let partition = poset.partition_of_ideal(&ideal)?;
        match format {
            RecordFormat::Json => {
                let rec = Record { ideal: elements, partition: &partition, size: partition.size().to_string() };
                writeln!(out, "{}", serde_json::to_string(&rec).expect("record serializes"))?;
            }
            RecordFormat::Text => {
                let set: Vec<String> = elements.iter().map(u32::to_string).collect();
                writeln!(out, "{{{}}}\t{}\t{}", set.join(","), partition, partition.size())?;
            }
        }
    }
    Ok(())
}

/// One row of the `table` command; big integers as decimal strings.
#[derive(Debug, Serialize)]
pub struct TableRow {
    pub s: u32,
    pub r: String,
    pub l: String,
    pub h: String,
    pub avg_num: String,
    pub avg_den: String,
}

pub fn table_rows(s_max: u32) -> Vec<TableRow> {
    (0..=s_max)
        .map(|s| {
            let avg = enumeration::average_size(s.into());
            TableRow {
                s,
                r: enumeration::count_r(s.into()).to_string(),
                l: extremal::max_size_l(s).to_string(),
                h: enumeration::sum_h(s.into()).to_string(),
                avg_num: avg.numer().to_string(),
                avg_den: avg.denom().to_string(),
            }
        })
        .collect()
}

fn table(s_max: u32, format: TableFormat, out: &mut dyn Write) -> CliResult {
    check_s(s_max, 0, MAX_FORMULA_S)?;
    let rows = table_rows(s_max);
    match format {
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for row in &rows {
                w.serialize(row).map_err(|e| Failure::Io(e.into()))?;
            }
            w.flush()?;
        }
        TableFormat::Json => {
            writeln!(out, "{}", serde_json::to_string_pretty(&rows).expect("rows serialize"))?;
        }
    }
    Ok(())
}

struct Checker<'a> {
    out: &'a mut dyn Write,
    checks: usize,
}

impl Checker<'_> {
    fn check<T: PartialEq + std::fmt::Debug>(&mut self, s: u32, what: &str, got: T, want: T) -> CliResult {
        self.checks += 1;
        if got != want {
            writeln!(self.out, "FAIL s={s} {what}: got {got:?}, expected {want:?}")?;
            return Err(Failure::Mismatch(format!("s={s} {what}: got {got:?}, expected {want:?}")));
        }
        writeln!(self.out, "ok   s={s} {what}")?;
        Ok(())
    }
}

/// Runs the brute-force suite. Each line names one passed check; the first
/// failure is printed and ends the run.
fn verify(s_max: u32, n_max: u32, out: &mut dyn Write) -> CliResult {
    check_s(s_max, 0, MAX_ENUMERATION_S)?;
    let h_series = enumeration::series(SeriesName::H, s_max as usize + 1)?.coeffs;
    let mut ck = Checker { out, checks: 0 };
    for s in 0..=s_max {
        let s64 = u64::from(s);
        let t = build_t(s);
        if s >= 3 {
            let sieved = build_poset(&CoreTuple::consecutive(s))?;
            ck.check(s, "T_s matches the semigroup sieve", sieved == t, true)?;
        }
        ck.check(s, "|T_s| closed form", t.len() as u64, extremal::t_cardinality(s))?;

        let ideals: Vec<_> = t.enumerate_ideals().collect();
        ck.check(s, "ideal count = r(s)", enumeration::count_r(s64), BigCount::from(ideals.len()))?;
        ck.check(s, "r(s) = Motzkin", enumeration::count_r(s64), enumeration::motzkin(s64))?;
        ck.check(s, "parallel enumeration", t.enumerate_ideals_par() == ideals, true)?;
        if t.len() <= oracle::SUBSET_SCAN_LIMIT {
            ck.check(s, "subset scan", oracle::ideals_by_subset_scan(&t)? == ideals, true)?;
        }

        let totals = oracle::ideal_totals(&t, ideals.iter().cloned())?;
        ck.check(s, "f(s)", enumeration::sum_f(s64), BigCount::from(totals.cardinality))?;
        ck.check(s, "g(s)", enumeration::sum_g(s64), BigCount::from(totals.rank))?;
        ck.check(s, "h(s) recurrence", enumeration::sum_h(s64), BigCount::from(totals.size))?;
        ck.check(s, "h(s) = p(s) - sum binom(|I|,2)", totals.elements - totals.pairs, totals.size)?;
        let (closed_a, closed_b) = enumeration::sum_h_closed(s64);
        ck.check(s, "h(s) closed form (Motzkin sum)", closed_a, BigCount::from(totals.size))?;
        ck.check(s, "h(s) closed form (central binomial)", closed_b, BigCount::from(totals.size))?;
        if s >= 3 {
            ck.check(s, "h(s) three-term recurrence", enumeration::sum_h_rec3(s64)?, BigCount::from(totals.size))?;
        }
        ck.check(s, "h(s) series coefficient", h_series[s as usize].clone(), BigCount::from(totals.size))?;

        ck.check(s, "max size = l(s)", extremal::max_size_l(s), BigCount::from(totals.max_size))?;
        if s >= 3 {
            let report = extremal::extremal_report(s)?;
            let want: BTreeSet<_> = report.witnesses.into_iter().collect();
            let got: BTreeSet<_> = totals.maximizers.iter().cloned().collect();
            ck.check(s, "maximizers", got, want)?;
        }

        let l = enumeration::small(&extremal::max_size_l(s)) as u32;
        if l <= n_max {
            let tuple = CoreTuple::consecutive(s);
            let scanned: BTreeSet<_> = oracle::cores_by_size_scan(&tuple, l).into_iter().collect();
            let images: BTreeSet<_> = ideals.iter().map(|i| t.partition_of_ideal(i)).collect::<crate::Result<_>>()?;
            ck.check(s, "hook-length scan = ideal images", scanned == images, true)?;
        }
    }

    for b in 3..=s_max.max(3) {
        for a in 2..b {
            if num_integer::Integer::gcd(&a, &b) != 1 {
                continue;
            }
            let p = poset_for(vec![a, b])?;
            let totals = oracle::ideal_totals(&p, p.enumerate_ideals())?;
            let label = format!("({a},{b}) ideal count");
            ck.check(b, &label, BigCount::from(totals.count), enumeration::anderson_count(a.into(), b.into())?)?;
            let label = format!("({a},{b}) unique maximum");
            let max = (BigCount::from(totals.max_size), totals.maximizers.len());
            ck.check(b, &label, max, (enumeration::olsson_stanton_max(a.into(), b.into())?, 1))?;
        }
    }
    writeln!(ck.out, "all {} checks passed", ck.checks)?;
    Ok(())
}
