//! All overabundant words of a sequence in linear time.
//!
//! Every overabundant word has the form `a·y·b` where `y` labels an explicit
//! node of the suffix tree (words whose infix is implicit have deviation
//! zero, and absent words have deviation at most zero). Candidates are
//! generated from their longest proper prefix `a·y`:
//!
//! * **Pass A** handles prefixes at explicit nodes `v`. The suffix link of
//!   `v` gives the infix node `u`, and each child of `v` gives one letter
//!   `b` and therefore one candidate; `f(y·b)` is read from `Child(u, b)`,
//!   which the pass B walk below reaches as a by-product.
//! * **Pass B** handles prefixes lying inside an edge `(v, y)`. Following
//!   the suffix link of `y` lands below `u = link(v)`, and the explicit
//!   nodes strictly between the landing point and `u` are exactly the
//!   infixes whose prefix sits inside the edge. Walking parent pointers up
//!   to `u` visits each of them once.

use crate::error::{Error, Result};
use crate::oracle::check_rho;
use crate::seq::Sequence;
use crate::stats::{classify, deviation, expected_frequency, Thresholds, WordClass, WordStats};
use crate::suffix_tree::SuffixTree;

/// Which pass produced a record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pass {
    /// Longest proper prefix is an explicit node.
    ExplicitPrefix,
    /// Longest proper prefix lies inside an edge.
    ImplicitPrefix,
}

/// One overabundant word, located by an occurrence in `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct OverabundantRecord {
    pub start: usize,
    pub len: usize,
    pub stats: WordStats,
    pub expected: f64,
    pub dev: f64,
    pub pass: Pass,
}

impl OverabundantRecord {
    pub fn ranks<'a>(&self, seq: &'a Sequence) -> &'a [u32] {
        &seq.ranks()[self.start..self.start + self.len]
    }

    pub fn word(&self, seq: &Sequence) -> String {
        seq.factor(self.start, self.len)
    }
}

/// Records plus work counters from one enumeration run.
#[derive(Debug, Clone, Default)]
pub struct Enumeration {
    pub records: Vec<OverabundantRecord>,
    /// Candidates scored in pass A.
    pub pass_a_candidates: usize,
    /// Iterations of the parent-walk loop in pass B.
    pub pass_b_iterations: usize,
}

/// All words with `dev >= rho`, each once, in lexicographic order.
pub fn overabundant_words(tree: &SuffixTree, rho: f64) -> Result<Vec<OverabundantRecord>> {
    Ok(enumerate(tree, rho)?.records)
}

/// Number of words with `dev >= rho`; same walk without materialising
/// or sorting the records.
pub fn count_overabundant(tree: &SuffixTree, rho: f64) -> Result<usize> {
    check_rho(rho)?;
    let mut count = 0;
    walk(tree, rho, |_| count += 1);
    Ok(count)
}

/// Like [`overabundant_words`], also returning the work counters.
pub fn enumerate(tree: &SuffixTree, rho: f64) -> Result<Enumeration> {
    check_rho(rho)?;
    let mut records = Vec::new();
    let (pass_a_candidates, pass_b_iterations) = walk(tree, rho, |r| records.push(r));
    let text = tree.text();
    records.sort_unstable_by(|a, b| {
        text[a.start..a.start + a.len].cmp(&text[b.start..b.start + b.len])
    });
    debug_assert!(records.windows(2).all(|w| {
        text[w[0].start..w[0].start + w[0].len] != text[w[1].start..w[1].start + w[1].len]
    }));
    Ok(Enumeration { records, pass_a_candidates, pass_b_iterations })
}

fn score(stats: WordStats) -> (f64, f64) {
    let expected = expected_frequency(&stats);
    (expected, deviation(stats.f_w, expected))
}

/// Runs both passes, handing every qualifying record to `report`. Returns
/// the pass A candidate count and pass B loop iteration count.
///
/// The passes share one traversal: for an edge `(v, y)` whose first letter
/// is `b`, the pass B walk from the suffix link of `y` stops exactly at
/// `Child(link(v), b)`, which is the node pass A needs for `f(y·b)`.
fn walk(tree: &SuffixTree, rho: f64, mut report: impl FnMut(OverabundantRecord)) -> (usize, usize) {
    let root = tree.root();
    let mut candidates = 0;
    let mut iterations = 0;
    for v in tree.internal_nodes() {
        let u = tree.suffix_link(v);
        let (dv, cv, cu) = (tree.depth(v), tree.count(v) as u64, tree.count(u) as u64);
        let explicit = dv > 1 && u != root && cu > cv;
        for y in tree.children(v) {
            // Every word scored below has frequency `C(y)`, and a word's
            // deviation never exceeds its frequency.
            let f = tree.count(y) as u64;
            if (f as f64) < rho {
                continue;
            }
            let dy = tree.depth(y);
            let leaf = tree.is_leaf(y);
            // The child reached by `$` alone carries no letter b.
            if leaf && dy == dv + 1 {
                continue;
            }
            let mut z = tree.suffix_link(y);
            if leaf {
                // Step off an edge that holds only `$`.
                let p = tree.parent(z);
                if tree.depth(z) == tree.depth(p) + 1 {
                    z = p;
                }
            }
            // Pass B: prefixes inside the edge. Only edges longer than one
            // letter enter the loop.
            loop {
                let infix = tree.parent(z);
                if infix == u {
                    break;
                }
                debug_assert_ne!(z, root);
                iterations += 1;
                let stats = WordStats {
                    f_w: f,
                    f_p: f,
                    f_s: tree.count(z) as u64,
                    f_i: tree.count(infix) as u64,
                };
                let (expected, dev) = score(stats);
                if dev >= rho {
                    report(OverabundantRecord {
                        start: tree.occurrence(y),
                        len: tree.depth(infix) + 2,
                        stats,
                        expected,
                        dev,
                        pass: Pass::ImplicitPrefix,
                    });
                }
                z = infix;
            }
            // Pass A: the prefix is `v` itself and `z = Child(u, b)`.
            if explicit {
                candidates += 1;
                let stats = WordStats { f_w: f, f_p: cv, f_s: tree.count(z) as u64, f_i: cu };
                let (expected, dev) = score(stats);
                if dev >= rho {
                    report(OverabundantRecord {
                        start: tree.occurrence(y),
                        len: dv + 1,
                        stats,
                        expected,
                        dev,
                        pass: Pass::ExplicitPrefix,
                    });
                }
            }
        }
    }
    (candidates, iterations)
}

/// Classification of a single word, with the statistics behind it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WordClassification {
    pub class: WordClass,
    pub stats: WordStats,
    pub expected: f64,
    pub dev: f64,
}

/// Classifies any word of length at least three against the text of
/// `tree`. Counts come from four tree lookups; words using letters outside
/// the text's alphabet simply have count zero.
pub fn classify_word(tree: &SuffixTree, word: &str, th: &Thresholds) -> Result<WordClassification> {
    let letters: Vec<Option<u32>> = word.chars().map(|c| tree.sequence().rank_of(c)).collect();
    let m = letters.len();
    if m < 3 {
        return Err(Error::InvalidInput(format!(
            "words shorter than three letters are not classified: {word:?}"
        )));
    }
    let count = |part: &[Option<u32>]| -> u64 {
        part.iter()
            .copied()
            .collect::<Option<Vec<u32>>>()
            .map_or(0, |w| tree.occurrences(&w) as u64)
    };
    let stats = WordStats {
        f_w: count(&letters),
        f_p: count(&letters[..m - 1]),
        f_s: count(&letters[1..]),
        f_i: count(&letters[1..m - 1]),
    };
    if stats.f_i == 0 {
        return Err(Error::DevUndefined(word.to_string()));
    }
    let (expected, dev) = score(stats);
    Ok(WordClassification { class: classify(dev, th), stats, expected, dev })
}
