//! Linear-time computation of overabundant words.
//!
//! A word `w` of length at least three is scored against a sequence `x` by
//! comparing its observed frequency with the frequency expected from its
//! longest proper prefix, longest proper suffix and longest infix:
//!
//! ```text
//! E(w)   = f(w_p) * f(w_s) / f(w_i)        (0 when w_i is absent)
//! dev(w) = (f(w) - E(w)) / max(sqrt(E(w)), 1)
//! ```
//!
//! Words with `dev(w) >= rho` are overabundant. [`overabundant_words`] finds
//! all of them in `O(n)` time with two passes over the suffix tree of `x$`.
//!
//! ```
//! use overabundant::{overabundant_words, Sequence, SuffixTree};
//!
//! let seq = Sequence::encode("baab").unwrap();
//! let tree = SuffixTree::build(&seq);
//! let words: Vec<String> = overabundant_words(&tree, 0.3)
//!     .unwrap()
//!     .iter()
//!     .map(|r| r.word(&seq))
//!     .collect();
//! assert_eq!(words, ["aab", "baa"]);
//! ```

mod error;

pub mod enumerate;
pub mod oracle;
pub mod seq;
pub mod stats;
mod suffix_array;
pub mod suffix_tree;
pub mod synth;
pub use enumerate::{
    classify_word, count_overabundant, enumerate, overabundant_words, Enumeration,
    OverabundantRecord, Pass, WordClassification,
};
pub use error::{Error, Result};
pub use seq::{rank_encode, Sequence, SENTINEL};
pub use stats::{classify, deviation, expected_frequency, Thresholds, WordClass, WordStats};
pub use suffix_tree::{Locus, NodeId, SuffixTree};
