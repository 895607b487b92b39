//! Brute-force reference implementations.
//!
//! Nothing here touches the suffix tree: frequencies come from sliding
//! comparisons or from a table of every factor of `x`, so these functions
//! serve as an independent check on [`crate::enumerate`].

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::seq::Sequence;
use crate::stats::WordStats;

/// Largest search space [`extremal_search`] will enumerate.
pub const SEARCH_LIMIT: u128 = 10_000_000;

/// Number of (possibly overlapping) occurrences of `w` in `x`.
pub fn naive_frequency(x: &[u32], w: &[u32]) -> usize {
    if w.is_empty() || w.len() > x.len() {
        return 0;
    }
    x.windows(w.len()).filter(|f| *f == w).count()
}

/// A factor of `x` together with its statistics.
#[derive(Debug, Clone, PartialEq)]
pub struct NaiveHit {
    pub word: Vec<u32>,
    pub stats: WordStats,
    pub expected: f64,
    pub dev: f64,
}

impl NaiveHit {
    pub fn decode(&self, seq: &Sequence) -> String {
        seq.decode_ranks(&self.word)
    }
}

/// Scores every distinct factor of `x` of length at least three, in
/// lexicographic order.
pub fn naive_scores(x: &Sequence) -> Vec<NaiveHit> {
    let r = x.ranks();
    let n = r.len();
    let mut table: HashMap<&[u32], u64> = HashMap::new();
    for i in 0..n {
        for j in i + 1..=n {
            *table.entry(&r[i..j]).or_insert(0) += 1;
        }
    }
    let mut hits: Vec<NaiveHit> = table
        .iter()
        .filter(|(w, _)| w.len() >= 3)
        .map(|(&w, &f_w)| {
            let m = w.len();
            let stats = WordStats {
                f_w,
                f_p: table[&w[..m - 1]],
                f_s: table[&w[1..]],
                f_i: table[&w[1..m - 1]],
            };
            // Same arithmetic as the model: one exact integer product,
            // one division.
            let expected = (stats.f_p * stats.f_s) as f64 / stats.f_i as f64;
            let dev = (f_w as f64 - expected) / expected.sqrt().max(1.0);
            NaiveHit { word: w.to_vec(), stats, expected, dev }
        })
        .collect();
    hits.sort_by(|a, b| a.word.cmp(&b.word));
    hits
}

/// All factors with `dev >= rho`, sorted lexicographically. Absent words
/// never qualify, so scanning the factors is enough.
pub fn naive_overabundant(x: &Sequence, rho: f64) -> Result<Vec<NaiveHit>> {
    check_rho(rho)?;
    Ok(naive_scores(x).into_iter().filter(|h| h.dev >= rho).collect())
}

pub(crate) fn check_rho(rho: f64) -> Result<()> {
    if rho > 0.0 && rho.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("rho must be a positive finite number, got {rho}")))
    }
}

/// Outcome of an exhaustive search for the sequences with the most
/// overabundant words.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtremalReport {
    pub n: usize,
    pub sigma: usize,
    pub rho: f64,
    pub best_count: usize,
    /// Every sequence reaching `best_count`, one per letter-renaming class,
    /// written with letters in order of first appearance.
    pub witnesses: Vec<Sequence>,
}

impl ExtremalReport {
    /// Whether `seq` is, up to renaming letters, one of the witnesses.
    pub fn has_witness(&self, seq: &Sequence) -> bool {
        let target = canonical_form(seq.ranks());
        self.witnesses.iter().any(|w| w.ranks() == target.as_slice())
    }
}

/// Renames letters in order of first appearance.
pub fn canonical_form(x: &[u32]) -> Vec<u32> {
    let mut names: HashMap<u32, u32> = HashMap::new();
    x.iter()
        .map(|&c| {
            let next = names.len() as u32;
            *names.entry(c).or_insert(next)
        })
        .collect()
}

/// Default threshold: `1 / (2n)`.
pub fn default_search_rho(n: usize) -> f64 {
    1.0 / (2.0 * n as f64)
}

/// Scores every length-`n` sequence over at most `sigma` letters, one per
/// letter-renaming class, and keeps the maximisers.
pub fn extremal_search(n: usize, sigma: usize, rho: f64) -> Result<ExtremalReport> {
    check_rho(rho)?;
    if n == 0 || sigma == 0 {
        return Err(Error::InvalidInput("n and sigma must be positive".into()));
    }
    let size = (sigma as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if size > SEARCH_LIMIT {
        return Err(Error::TooLarge { size, limit: SEARCH_LIMIT });
    }
    let alphabet = Sequence::default_alphabet(sigma);
    let mut best_count = 0;
    let mut witnesses = Vec::new();

    // Restricted growth strings: x[0] = 0 and x[i] <= 1 + max(x[..i]).
    let mut x = vec![0u32; n];
    let mut prefix_max = vec![0u32; n];
    loop {
        let seq = Sequence::from_ranks(&x, &alphabet)?;
        let count = naive_overabundant(&seq, rho)?.len();
        if count > best_count {
            best_count = count;
            witnesses.clear();
        }
        if count == best_count {
            witnesses.push(seq);
        }

        // Advance to the next restricted growth string.
        let mut i = n;
        loop {
            if i <= 1 {
                return Ok(ExtremalReport { n, sigma, rho, best_count, witnesses });
            }
            i -= 1;
            let cap = (prefix_max[i - 1] + 1).min(sigma as u32 - 1);
            if x[i] < cap {
                x[i] += 1;
                prefix_max[i] = prefix_max[i - 1].max(x[i]);
                for j in i + 1..n {
                    x[j] = 0;
                    prefix_max[j] = prefix_max[i];
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> Sequence {
        Sequence::encode(s).unwrap()
    }

    fn freq(x: &str, w: &str) -> usize {
        let s = seq(x);
        s.encode_word(w).map_or(0, |w| naive_frequency(s.ranks(), &w))
    }

    #[test]
    fn frequency_examples() {
        assert_eq!(freq("baab", "a"), 2);
        assert_eq!(freq("aaaa", "aa"), 3);
        assert_eq!(freq("baab", "bb"), 0);
        assert_eq!(freq("baab", "baabb"), 0);
    }

    #[test]
    fn overabundant_baab() {
        let s = seq("baab");
        let hits = naive_overabundant(&s, 0.3).unwrap();
        let got: Vec<_> = hits.iter().map(|h| (h.decode(&s), h.dev)).collect();
        assert_eq!(got, [("aab".to_string(), 0.5), ("baa".to_string(), 0.5)]);
    }

    #[test]
    fn unary_has_none() {
        assert!(naive_overabundant(&seq("aaaa"), 0.1).unwrap().is_empty());
    }

    #[test]
    fn tightness_family() {
        let s = seq("baaaaaab");
        let hits = naive_overabundant(&s, 0.01).unwrap();
        assert_eq!(hits.len(), 10);
        for h in &hits {
            let w = h.decode(&s);
            let k = w.matches('a').count();
            assert!((2..=6).contains(&k));
            assert!(w == format!("b{}", "a".repeat(k)) || w == format!("{}b", "a".repeat(k)));
            assert!((h.dev - 1.0 / (8 - k) as f64).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_bad_rho() {
        assert!(naive_overabundant(&seq("abc"), 0.0).is_err());
        assert!(naive_overabundant(&seq("abc"), f64::NAN).is_err());
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(canonical_form(&[1, 0, 0, 1]), [0, 1, 1, 0]);
        assert_eq!(canonical_form(&[2, 2, 0, 1]), [0, 0, 1, 2]);
    }

    #[test]
    fn search_small() {
        let r = extremal_search(5, 2, 0.05).unwrap();
        assert!(r.best_count >= 4);
        assert!(r.has_witness(&seq("baaab")));
        let r = extremal_search(4, 2, 0.1).unwrap();
        assert!(r.best_count >= 2);
        assert!(r.has_witness(&seq("baab")));
    }

    #[test]
    fn search_enumerates_each_class_once() {
        // Bell-number style count of restricted growth strings: length 4
        // over at most 3 letters gives 1 + 7 + 6 = 14 classes.
        let mut seen = std::collections::HashSet::new();
        let r = extremal_search(4, 3, 100.0).unwrap();
        assert_eq!(r.best_count, 0);
        for w in &r.witnesses {
            assert!(seen.insert(w.ranks().to_vec()));
        }
        assert_eq!(seen.len(), 14);
    }

    #[test]
    fn search_guard() {
        assert!(matches!(extremal_search(30, 4, 0.1), Err(Error::TooLarge { .. })));
    }
}
