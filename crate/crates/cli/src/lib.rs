//! Command-line front end: per-sequence reports, oracle cross-checks,
//! scaling benchmarks and extremal search.

pub mod fasta;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::PathBuf;

use clap::Parser;
use rayon::prelude::*;

use overabundant::oracle::{default_search_rho, extremal_search, naive_overabundant};
use overabundant::synth::{bench_tsv, random_sequence, scaling_benchmark};
use overabundant::{overabundant_words, OverabundantRecord, Sequence, SuffixTree};

pub use fasta::{parse_fasta, FastaError, FastaRecord};

pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

/// Random sequences checked by `--oracle` on top of the input records.
pub const ORACLE_RANDOM_CASES: u64 = 50;
/// Two oracle answers agree if their deviations differ by at most this.
pub const ORACLE_TOLERANCE: f64 = 1e-9;

pub const THREADS_ENV: &str = "OW_THREADS";

pub const REPORT_HEADER: &str = "seq_id\tword\tlength\tf\tE\tdev";

#[derive(Debug, Parser)]
#[command(name = "overabundant", version, about = "Report overabundant words of (Multi)FASTA sequences")]
struct Args {
    /// (Multi)FASTA input.
    #[arg(long, required_unless_present_any = ["bench", "search"])]
    input: Option<PathBuf>,

    /// Deviation threshold (> 0). In benchmark mode it defaults to 10, in
    /// search mode to 1/(2n).
    #[arg(long, value_parser = positive_f64, required_unless_present_any = ["bench", "search"])]
    rho: Option<f64>,

    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,

    /// Keep only words of exactly this length.
    #[arg(long, conflicts_with_all = ["min_length", "max_length"])]
    length: Option<usize>,

    #[arg(long)]
    min_length: Option<usize>,

    #[arg(long)]
    max_length: Option<usize>,

    /// Cross-check every record, plus random small sequences, against
    /// brute-force enumeration.
    #[arg(long)]
    oracle: bool,

    /// Scaling mode: comma-separated sequence lengths.
    #[arg(long, value_delimiter = ',', num_args = 1, conflicts_with_all = ["input", "search", "oracle"])]
    bench: Option<Vec<usize>>,

    /// Alphabet size for benchmark mode.
    #[arg(long, default_value_t = 4, requires = "bench")]
    sigma: usize,

    /// Extremal mode: "n,sigma".
    #[arg(long, value_parser = parse_search, conflicts_with_all = ["input", "oracle"])]
    search: Option<(usize, usize)>,

    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("expected a positive number, got {s:?}")),
    }
}

fn parse_search(s: &str) -> Result<(usize, usize), String> {
    let parsed = s
        .split_once(',')
        .and_then(|(n, sigma)| Some((n.trim().parse().ok()?, sigma.trim().parse().ok()?)));
    match parsed {
        Some((n, sigma)) if n > 0 && sigma > 0 => Ok((n, sigma)),
        _ => Err(format!("expected \"n,sigma\" with positive integers, got {s:?}")),
    }
}

/// Why a run stopped early; maps onto the exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(String),
    Mismatch(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Io(_) => EXIT_IO,
            Failure::Mismatch(_) => EXIT_MISMATCH,
        }
    }
}

/// Parses `args` (program name first), runs the requested mode and
/// returns the process exit code. Diagnostics go to stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { 0 };
        }
    };
    match dispatch(&args) {
        Ok(()) => 0,
        Err(f) => {
            match &f {
                Failure::Usage(m) | Failure::Io(m) | Failure::Mismatch(m) => eprintln!("error: {m}"),
            }
            f.code()
        }
    }
}

fn dispatch(args: &Args) -> Result<(), Failure> {
    if let Some(lengths) = &args.bench {
        let rho = args.rho.unwrap_or(10.0);
        let rows = scaling_benchmark(lengths, args.sigma, rho, args.seed)
            .map_err(|e| Failure::Usage(e.to_string()))?;
        return emit(args, &bench_tsv(&rows));
    }
    if let Some((n, sigma)) = args.search {
        let rho = args.rho.unwrap_or_else(|| default_search_rho(n));
        let report = extremal_search(n, sigma, rho).map_err(|e| Failure::Usage(e.to_string()))?;
        let mut out = format!(
            "# n={} sigma={} rho={} best_count={} witnesses={}\n",
            report.n,
            report.sigma,
            report.rho,
            report.best_count,
            report.witnesses.len()
        );
        for w in &report.witnesses {
            let _ = writeln!(out, "{w}");
        }
        return emit(args, &out);
    }
    report_mode(args)
}

fn report_mode(args: &Args) -> Result<(), Failure> {
    // Both are required by the parser outside bench and search modes.
    let (Some(path), Some(rho)) = (&args.input, args.rho) else {
        return Err(Failure::Usage("--input and --rho are required".into()));
    };
    if let (Some(lo), Some(hi)) = (args.min_length, args.max_length) {
        if lo > hi {
            return Err(Failure::Usage(format!("--min-length {lo} exceeds --max-length {hi}")));
        }
    }
    let file = File::open(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    // Malformed input is reported like unreadable input.
    let records =
        parse_fasta(BufReader::new(file)).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;

    let pool = thread_pool()?;
    let sections: Vec<Result<String, Failure>> =
        pool.install(|| records.par_iter().map(|r| report_record(r, rho, args)).collect());
    let mut out = String::from(REPORT_HEADER);
    out.push('\n');
    for s in sections {
        out.push_str(&s?);
    }
    emit(args, &out)?;

    if args.oracle {
        random_oracle_cases(rho, args.seed)?;
    }
    Ok(())
}

fn thread_pool() -> Result<rayon::ThreadPool, Failure> {
    let threads = match std::env::var(THREADS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(k) if k > 0 => k,
            _ => return Err(Failure::Usage(format!("{THREADS_ENV} must be a positive integer, got {v:?}"))),
        },
        // Zero lets rayon pick.
        Err(_) => 0,
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Failure::Io(format!("cannot start worker threads: {e}")))
}

fn keep_length(args: &Args, len: usize) -> bool {
    args.length.map_or(true, |k| len == k)
        && args.min_length.map_or(true, |k| len >= k)
        && args.max_length.map_or(true, |k| len <= k)
}

/// One record's section: comment line plus its rows.
fn report_record(rec: &FastaRecord, rho: f64, args: &Args) -> Result<String, Failure> {
    let seq = Sequence::encode(&rec.sequence).map_err(|e| Failure::Io(format!("{}: {e}", rec.header)))?;
    let tree = SuffixTree::build(&seq);
    let words = overabundant_words(&tree, rho).map_err(|e| Failure::Usage(e.to_string()))?;
    if args.oracle {
        check_against_naive(&seq, &words, rho).map_err(|m| Failure::Mismatch(format!("{}: {m}", rec.header)))?;
    }

    let id = rec.header.split_whitespace().next().unwrap_or("");
    let kept: Vec<&OverabundantRecord> = words.iter().filter(|r| keep_length(args, r.len)).collect();
    let mut out = format!("# {} n={} count={}\n", rec.header, seq.len(), kept.len());
    for r in kept {
        let _ = writeln!(
            out,
            "{id}\t{}\t{}\t{}\t{:.6}\t{:.6}",
            r.word(&seq),
            r.len,
            r.stats.f_w,
            r.expected,
            r.dev
        );
    }
    Ok(out)
}

/// Compares suffix-tree output with brute force: same words, same
/// frequencies, deviations within [`ORACLE_TOLERANCE`].
fn check_against_naive(seq: &Sequence, words: &[OverabundantRecord], rho: f64) -> Result<(), String> {
    let naive = naive_overabundant(seq, rho).map_err(|e| e.to_string())?;
    if naive.len() != words.len() {
        return Err(format!("oracle reports {} words, suffix tree {}", naive.len(), words.len()));
    }
    for (h, r) in naive.iter().zip(words) {
        let (a, b) = (h.decode(seq), r.word(seq));
        if a != b || h.stats.f_w != r.stats.f_w || (h.dev - r.dev).abs() > ORACLE_TOLERANCE {
            return Err(format!("oracle has {a} (dev {}), suffix tree {b} (dev {})", h.dev, r.dev));
        }
    }
    Ok(())
}

fn random_oracle_cases(rho: f64, seed: u64) -> Result<(), Failure> {
    for k in 0..ORACLE_RANDOM_CASES {
        let n = 4 + (k as usize * 7) % 45;
        let sigma = 2 + (k as usize) % 3;
        let seq = random_sequence(n, sigma, seed.wrapping_add(k)).map_err(|e| Failure::Usage(e.to_string()))?;
        let words = overabundant_words(&SuffixTree::build(&seq), rho).map_err(|e| Failure::Usage(e.to_string()))?;
        check_against_naive(&seq, &words, rho)
            .map_err(|m| Failure::Mismatch(format!("random case {k} ({seq}): {m}")))?;
    }
    Ok(())
}

fn emit(args: &Args, text: &str) -> Result<(), Failure> {
    let result = match &args.output {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).map_err(|e| e.to_string())
        }
    };
    result.map_err(Failure::Io)
}
