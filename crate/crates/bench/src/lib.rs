//! Shared inputs for the benchmarks.

use overabundant::synth::random_sequence;
use overabundant::{Sequence, SuffixTree};

/// Alphabet sizes benchmarked: DNA-like and protein-like.
pub const SIGMAS: [usize; 2] = [4, 20];
pub const LENGTHS: [usize; 3] = [100_000, 400_000, 1_000_000];
pub const SEED: u64 = 1;

pub fn input(n: usize, sigma: usize) -> Sequence {
    random_sequence(n, sigma, SEED).expect("valid benchmark parameters")
}

pub fn tree(n: usize, sigma: usize) -> SuffixTree {
    SuffixTree::build(&input(n, sigma))
}
