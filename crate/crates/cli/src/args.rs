use std::ffi::OsString;
use std::fmt;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

/// Multi-letter short flags accepted on the command line, rewritten to their long forms.
const SHORT_ALIASES: [(&str, &str); 3] = [("-l2p", "--l2p"), ("-l1", "--l1"), ("-l2", "--l2")];

/// Rewrites `-l1 5` and `-l1=5` to `--l1 5` and `--l1=5`.
pub fn normalize_argv<I>(argv: I) -> Vec<OsString>
where
    I: IntoIterator,
    I::Item: Into<OsString>,
{
    argv.into_iter()
        .map(|arg| {
            let arg: OsString = arg.into();
            let Some(s) = arg.to_str() else { return arg };
            for (short, long) in SHORT_ALIASES {
                if s == short {
                    return long.into();
                }
                if let Some(rest) = s.strip_prefix(short).and_then(|r| r.strip_prefix('=')) {
                    return format!("{long}={rest}").into();
                }
            }
            arg
        })
        .collect()
}

#[derive(Debug, Parser)]
#[command(name = "sasaki-join", version, about = "Topology and CSC rays of Sasaki joins")]
#[command(after_help = "Flags -l1, -l2 and -l2p are accepted with a single dash.")]
pub struct Cli {
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("format").args(["json", "table", "csv"])))]
pub struct OutputArgs {
    /// Canonical JSON report (sorted keys, exact rationals as "num/den")
    #[arg(long, global = true)]
    pub json: bool,
    /// Aligned human-readable table (default)
    #[arg(long, global = true)]
    pub table: bool,
    /// Comma-separated rows
    #[arg(long, global = true)]
    pub csv: bool,
    /// Decimal digits for irrational roots, 1..=1000
    #[arg(long, global = true, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..=1000))]
    pub precision: u32,
    /// Worker threads for sweeps; SASAKI_JOBS overrides
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub jobs: Option<u32>,
    /// Attach the scope note on CSC results (always on for tables)
    #[arg(long, global = true)]
    pub quote_caveat: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
    Csv,
}

impl OutputArgs {
    pub fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else if self.csv {
            Format::Csv
        } else {
            Format::Table
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Table => "table",
            Format::Csv => "csv",
        })
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Characteristic class, cohomology and related invariants
    Invariants(JoinArgs),
    /// CSC rays of the Sasaki cone
    Csc(JoinArgs),
    /// Decide homotopy, homeomorphism or diffeomorphism between two joins
    Classify(ClassifyArgs),
    /// Evaluate a range of l2 values
    #[command(subcommand)]
    Sweep(SweepCommand),
}

#[derive(Debug, Args)]
pub struct JoinArgs {
    /// Half the dimension less one of the sphere factor: dim M = 2p + 3
    #[arg(short = 'p', allow_negative_numbers = true)]
    pub p: i64,
    #[arg(long = "l1", allow_negative_numbers = true)]
    pub l1: i64,
    #[arg(long = "l2", allow_negative_numbers = true)]
    pub l2: i64,
    /// Weights as W1,W2 with W1 >= W2
    #[arg(short = 'w', default_value = "1,1", value_parser = parse_pair, allow_negative_numbers = true)]
    pub w: (i64, i64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Relation {
    #[value(alias = "homotopy-equivalence")]
    Homotopy,
    #[value(alias = "homeomorphism")]
    Homeo,
    #[value(alias = "diffeomorphism")]
    Diffeo,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    pub relation: Relation,
    /// First join as (l1,l2,w1,w2)
    #[arg(value_parser = parse_tuple, requires = "second")]
    pub first: Option<[i64; 4]>,
    /// Second join as (l1,l2,w1,w2)
    #[arg(value_parser = parse_tuple)]
    pub second: Option<[i64; 4]>,
    #[arg(short = 'p', default_value_t = 2, allow_negative_numbers = true)]
    pub p: i64,
    /// Shared l1 of two joins with w = (1,1)
    #[arg(long = "l1", allow_negative_numbers = true, conflicts_with = "first", requires_all = ["l2", "l2p"])]
    pub l1: Option<i64>,
    #[arg(long = "l2", allow_negative_numbers = true, requires = "l1")]
    pub l2: Option<i64>,
    #[arg(long = "l2p", allow_negative_numbers = true, requires = "l1")]
    pub l2p: Option<i64>,
}

#[derive(Debug, Subcommand)]
pub enum SweepCommand {
    /// Ray counts per l2 and the least l2 reaching the maximal count
    Csc(SweepCscArgs),
    /// Diffeomorphism classes among 7-dimensional joins with w = (1,1)
    Diffeo(SweepDiffeoArgs),
}

#[derive(Debug, Args)]
pub struct SweepCscArgs {
    #[arg(short = 'p', allow_negative_numbers = true)]
    pub p: i64,
    #[arg(long = "l1", allow_negative_numbers = true)]
    pub l1: i64,
    #[arg(short = 'w', default_value = "1,1", value_parser = parse_pair, allow_negative_numbers = true)]
    pub w: (i64, i64),
    /// l2 values as A..B (inclusive), optionally :odd or :even
    #[arg(long = "l2", value_parser = parse_range, conflicts_with = "bound")]
    pub l2: Option<L2Range>,
    /// Search l2 in 1..=N when no range is given
    #[arg(long, default_value_t = 100)]
    pub bound: u64,
}

#[derive(Debug, Args)]
pub struct SweepDiffeoArgs {
    #[arg(long = "l1", allow_negative_numbers = true)]
    pub l1: i64,
    /// l2 values as A..B (inclusive), optionally :odd or :even
    #[arg(long = "l2", value_parser = parse_range, conflicts_with = "bound")]
    pub l2: Option<L2Range>,
    /// Use l2 in 1..=N when no range is given
    #[arg(long, default_value_t = 100)]
    pub bound: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Any,
    Odd,
    Even,
}

/// Inclusive range of `l2` values with an optional parity filter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct L2Range {
    pub start: u64,
    pub end: u64,
    pub parity: Parity,
}

/// Ranges longer than this are rejected up front.
pub const MAX_RANGE_LEN: u64 = 1_000_000;

impl L2Range {
    pub fn upto(bound: u64) -> Self {
        Self {
            start: 1,
            end: bound,
            parity: Parity::Any,
        }
    }

    pub fn values(&self) -> Vec<u64> {
        (self.start..=self.end)
            .filter(|v| match self.parity {
                Parity::Any => true,
                Parity::Odd => v % 2 == 1,
                Parity::Even => v % 2 == 0,
            })
            .collect()
    }
}

impl fmt::Display for L2Range {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)?;
        match self.parity {
            Parity::Any => Ok(()),
            Parity::Odd => f.write_str(":odd"),
            Parity::Even => f.write_str(":even"),
        }
    }
}

fn parse_int(s: &str) -> Result<i64, String> {
    s.trim().parse().map_err(|_| format!("'{s}' is not an integer"))
}

fn parse_pair(s: &str) -> Result<(i64, i64), String> {
    match s.split(',').collect::<Vec<_>>()[..] {
        [a, b] => Ok((parse_int(a)?, parse_int(b)?)),
        _ => Err(format!("expected W1,W2, got '{s}'")),
    }
}

fn parse_tuple(s: &str) -> Result<[i64; 4], String> {
    let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
    let parts: Vec<_> = inner.split(',').collect();
    if parts.len() != 4 {
        return Err(format!("expected (l1,l2,w1,w2), got '{s}'"));
    }
    let mut out = [0; 4];
    for (slot, part) in out.iter_mut().zip(parts) {
        *slot = parse_int(part)?;
    }
    Ok(out)
}

fn parse_range(s: &str) -> Result<L2Range, String> {
    let (span, parity) = match s.split_once(':') {
        None => (s, Parity::Any),
        Some((span, "odd")) => (span, Parity::Odd),
        Some((span, "even")) => (span, Parity::Even),
        Some((_, other)) => return Err(format!("unknown filter ':{other}', expected :odd or :even")),
    };
    let bound = |t: &str| -> Result<u64, String> {
        t.trim().parse().map_err(|_| format!("'{t}' is not a non-negative integer"))
    };
    let (start, end) = match span.split_once("..") {
        Some((a, b)) => (bound(a)?, bound(b)?),
        None => {
            let v = bound(span)?;
            (v, v)
        }
    };
    if start > end {
        return Err(format!("empty range {start}..{end}"));
    }
    if end - start >= MAX_RANGE_LEN {
        return Err(format!("range {start}..{end} is longer than {MAX_RANGE_LEN}"));
    }
    Ok(L2Range { start, end, parity })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rewrites_multi_letter_flags() {
        let argv = normalize_argv(["x", "-l1", "5", "-l2=7", "-l2p", "9", "-p", "2"]);
        let got: Vec<_> = argv.iter().map(|a| a.to_str().unwrap()).collect();
        assert_eq!(got, ["x", "--l1", "5", "--l2=7", "--l2p", "9", "-p", "2"]);
    }

    #[test]
    fn ranges() {
        let r = parse_range("1..9:odd").unwrap();
        assert_eq!(r.values(), [1, 3, 5, 7, 9]);
        assert_eq!(r.to_string(), "1..9:odd");
        assert_eq!(parse_range("4..8:even").unwrap().values(), [4, 6, 8]);
        assert_eq!(parse_range("7").unwrap().values(), [7]);
        assert!(parse_range("9..1").is_err());
        assert!(parse_range("1..5:prime").is_err());
        assert!(parse_range("-1..5").is_err());
    }

    #[test]
    fn tuples() {
        assert_eq!(parse_tuple("(5,21,1,1)").unwrap(), [5, 21, 1, 1]);
        assert_eq!(parse_tuple("5, 29, 1, 1").unwrap(), [5, 29, 1, 1]);
        assert!(parse_tuple("(5,21,1)").is_err());
        assert_eq!(parse_pair("3,2").unwrap(), (3, 2));
    }
}
