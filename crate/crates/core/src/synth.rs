//! Synthetic workloads: random texts, planted motifs and timing runs.
//!
//! All randomness comes from ChaCha8 seeded with a caller-supplied `u64`,
//! with a separate stream per purpose so that changing one step never
//! perturbs another.

use std::fmt::Write as _;
use std::time::Instant;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::enumerate::{classify_word, overabundant_words, OverabundantRecord};
use crate::error::{Error, Result};
use crate::oracle::check_rho;
use crate::seq::Sequence;
use crate::stats::Thresholds;
use crate::suffix_tree::SuffixTree;

const TEXT_STREAM: u64 = 0;
const WORD_STREAM: u64 = 1;
const PLANT_STREAM: u64 = 2;

fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn uniform_ranks(rng: &mut ChaCha8Rng, len: usize, sigma: usize) -> Vec<u32> {
    (0..len).map(|_| rng.gen_range(0..sigma as u32)).collect()
}

/// `n` i.i.d. uniform letters from [`Sequence::default_alphabet`]`(sigma)`.
pub fn random_sequence(n: usize, sigma: usize, seed: u64) -> Result<Sequence> {
    if n == 0 || sigma < 2 {
        return Err(Error::InvalidInput(format!(
            "random sequences need n >= 1 and sigma >= 2, got n={n}, sigma={sigma}"
        )));
    }
    let ranks = uniform_ranks(&mut rng(seed, TEXT_STREAM), n, sigma);
    Sequence::from_ranks(&ranks, &Sequence::default_alphabet(sigma))
}

/// Overwrites `count` non-overlapping windows of `x`, chosen uniformly among
/// all such placements, with `word`. The length of `x` is unchanged.
pub fn plant_word(x: &Sequence, word: &str, count: usize, seed: u64) -> Result<Sequence> {
    let word: Vec<char> = word.chars().collect();
    let n = x.len();
    let m = word.len();
    if m == 0 {
        return Err(Error::InvalidInput("cannot plant an empty word".into()));
    }
    if count.checked_mul(m).map_or(true, |total| total > n) {
        return Err(Error::PlacementFailed { count, len: m, n });
    }
    // Choosing `count` slots out of n - count*(m-1) and spreading them out
    // by m-1 each gives every non-overlapping placement equal weight.
    let slots = n - count * (m - 1);
    let mut picks = sample(&mut rng(seed, PLANT_STREAM), slots, count).into_vec();
    picks.sort_unstable();

    let mut text: Vec<char> = x.to_string().chars().collect();
    for (k, slot) in picks.into_iter().enumerate() {
        let start = slot + k * (m - 1);
        text[start..start + m].copy_from_slice(&word);
    }
    Sequence::encode(&text.into_iter().collect::<String>())
}

/// Parameters of one planted-motif trial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlantSpec {
    /// Host length.
    pub n: usize,
    /// Planted word length.
    pub m: usize,
    /// Number of plantings.
    pub t: usize,
    pub seed: u64,
    pub sigma: usize,
}

impl PlantSpec {
    pub fn validate(&self) -> Result<()> {
        if self.m < 3 || self.sigma < 2 || self.n == 0 || self.t * self.m > self.n {
            return Err(Error::InvalidInput(format!("invalid plant spec {self:?}")));
        }
        Ok(())
    }

    /// Expected occurrences of a fixed length-`m` word in a uniform random
    /// host, `n / sigma^m`.
    pub fn background_rate(&self) -> f64 {
        self.n as f64 / (self.sigma as f64).powi(self.m as i32)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialReport {
    pub planted: String,
    /// Deviation of the planted word; `None` only if it is undefined.
    pub dev_planted: Option<f64>,
    /// Whether the planted word was reported as overabundant.
    pub reported: bool,
    /// Reported word with the largest deviation (ties go to the
    /// lexicographically smallest), if any word was reported.
    pub w_max: Option<String>,
    pub dev_max: Option<f64>,
}

impl TrialReport {
    /// Whether the top word is the planted word or one of its factors.
    pub fn max_within_planted(&self) -> bool {
        self.w_max.as_deref().is_some_and(|w| self.planted.contains(w))
    }
}

/// Builds a random host, plants a random word `t` times and enumerates.
pub fn effectiveness_trial(spec: &PlantSpec, rho: f64) -> Result<TrialReport> {
    spec.validate()?;
    check_rho(rho)?;
    let alphabet = Sequence::default_alphabet(spec.sigma);
    let planted: String = uniform_ranks(&mut rng(spec.seed, WORD_STREAM), spec.m, spec.sigma)
        .into_iter()
        .map(|r| alphabet[r as usize])
        .collect();

    let host = random_sequence(spec.n, spec.sigma, spec.seed)?;
    let seq = plant_word(&host, &planted, spec.t, spec.seed)?;
    let tree = SuffixTree::build(&seq);
    let records = overabundant_words(&tree, rho)?;

    let dev_planted = match classify_word(&tree, &planted, &Thresholds::new(-rho, rho)?) {
        Ok(c) => Some(c.dev),
        Err(Error::DevUndefined(_)) => None,
        Err(e) => return Err(e),
    };
    let reported = records.iter().any(|r| r.len == spec.m && r.word(&seq) == planted);
    // Records are sorted, so keeping the first maximum breaks ties
    // lexicographically.
    let top = records.iter().fold(None, |best: Option<&OverabundantRecord>, r| match best {
        Some(b) if b.dev >= r.dev => Some(b),
        _ => Some(r),
    });
    Ok(TrialReport {
        planted,
        dev_planted,
        reported,
        w_max: top.map(|r| r.word(&seq)),
        dev_max: top.map(|r| r.dev),
    })
}

/// One row of a scaling run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub sigma: usize,
    pub rho: f64,
    pub seed: u64,
    /// Median wall time of the runs, construction included.
    pub millis: f64,
}

pub const BENCH_RUNS: usize = 3;

/// Times tree construction plus enumeration on a random text of each length
/// (median of [`BENCH_RUNS`] runs; text generation is not timed).
pub fn scaling_benchmark(lengths: &[usize], sigma: usize, rho: f64, seed: u64) -> Result<Vec<BenchRow>> {
    check_rho(rho)?;
    if lengths.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidInput("benchmark lengths must be ascending".into()));
    }
    lengths
        .iter()
        .map(|&n| {
            let seq = random_sequence(n, sigma, seed)?;
            let mut times = Vec::with_capacity(BENCH_RUNS);
            for _ in 0..BENCH_RUNS {
                let clock = Instant::now();
                let tree = SuffixTree::build(&seq);
                let records = overabundant_words(&tree, rho)?;
                std::hint::black_box(records.len());
                drop(tree);
                times.push(clock.elapsed().as_secs_f64() * 1e3);
            }
            times.sort_by(f64::total_cmp);
            Ok(BenchRow { n, sigma, rho, seed, millis: times[BENCH_RUNS / 2] })
        })
        .collect()
}

/// Tab-separated table with header `n sigma rho seed millis`.
pub fn bench_tsv(rows: &[BenchRow]) -> String {
    let mut out = String::from("n\tsigma\trho\tseed\tmillis\n");
    for r in rows {
        let _ = writeln!(out, "{}\t{}\t{}\t{}\t{:.3}", r.n, r.sigma, r.rho, r.seed, r.millis);
    }
    out
}
