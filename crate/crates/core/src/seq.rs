//! Integer-alphabet sequences.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Symbol reserved for the end-of-text marker appended before building a
/// suffix tree. It may not appear in any input.
pub const SENTINEL: char = '$';

const DNA: &[char] = &['A', 'C', 'G', 'T'];
const PROTEIN: &[char] = &[
    'A', 'C', 'D', 'E', 'F', 'G', 'H', 'I', 'K', 'L', 'M', 'N', 'P', 'Q', 'R', 'S', 'T', 'V', 'W',
    'Y',
];

/// A text over an integer alphabet.
///
/// Every letter is stored as its rank among the distinct symbols of the
/// text, in sorted symbol order, so ranks are `0..sigma()` and comparing
/// rank strings is the same as comparing the decoded strings.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sequence {
    data: Vec<u32>,
    decode: Vec<char>,
}

/// Rank-encodes `text`. See [`Sequence::encode`].
pub fn rank_encode(text: &str) -> Result<Sequence> {
    Sequence::encode(text)
}

impl Sequence {
    /// Rank-encodes a symbol string.
    pub fn encode(text: &str) -> Result<Self> {
        if text.is_empty() {
            return Err(Error::InvalidInput("empty text".into()));
        }
        if text.contains(SENTINEL) {
            return Err(Error::InvalidInput(format!(
                "text contains the reserved symbol {SENTINEL:?}"
            )));
        }
        let decode: Vec<char> = text.chars().collect::<BTreeSet<_>>().into_iter().collect();
        let data = text
            .chars()
            .map(|c| decode.binary_search(&c).unwrap() as u32)
            .collect();
        Ok(Sequence { data, decode })
    }

    /// Builds a sequence from ranks into `symbols`, which must be strictly
    /// increasing. Symbols that are never used are dropped and the
    /// remaining ranks compacted, so `sigma()` is always the number of
    /// distinct letters actually present.
    pub fn from_ranks(ranks: &[u32], symbols: &[char]) -> Result<Self> {
        if ranks.is_empty() {
            return Err(Error::InvalidInput("empty text".into()));
        }
        if symbols.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput("symbols must be strictly increasing".into()));
        }
        if symbols.contains(&SENTINEL) {
            return Err(Error::InvalidInput(format!(
                "alphabet contains the reserved symbol {SENTINEL:?}"
            )));
        }
        let mut used = vec![false; symbols.len()];
        for &r in ranks {
            match used.get_mut(r as usize) {
                Some(slot) => *slot = true,
                None => {
                    return Err(Error::InvalidInput(format!(
                        "rank {r} out of range for {} symbols",
                        symbols.len()
                    )))
                }
            }
        }
        let mut remap = vec![u32::MAX; symbols.len()];
        let mut decode = Vec::new();
        for (old, _) in used.iter().enumerate().filter(|(_, &u)| u) {
            remap[old] = decode.len() as u32;
            decode.push(symbols[old]);
        }
        let data = ranks.iter().map(|&r| remap[r as usize]).collect();
        Ok(Sequence { data, decode })
    }

    /// The alphabet used for synthetic sequences over `sigma` letters:
    /// DNA for 4, the twenty amino acids for 20, lowercase letters otherwise.
    pub fn default_alphabet(sigma: usize) -> Vec<char> {
        match sigma {
            4 => DNA.to_vec(),
            20 => PROTEIN.to_vec(),
            _ => (0..sigma as u32)
                .map(|k| {
                    let code = if k < 26 { 'a' as u32 + k } else { 0x100 + k };
                    char::from_u32(code).expect("alphabet too large")
                })
                .collect(),
        }
    }

    pub fn ranks(&self) -> &[u32] {
        &self.data
    }

    /// Decode table, indexed by rank.
    pub fn symbols(&self) -> &[char] {
        &self.decode
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    /// Number of distinct letters.
    pub fn sigma(&self) -> usize {
        self.decode.len()
    }

    pub fn rank_of(&self, symbol: char) -> Option<u32> {
        self.decode.binary_search(&symbol).ok().map(|r| r as u32)
    }

    /// Encodes `word` in this sequence's alphabet, or `None` if it uses a
    /// symbol the sequence does not contain (and therefore cannot occur).
    pub fn encode_word(&self, word: &str) -> Option<Vec<u32>> {
        word.chars().map(|c| self.rank_of(c)).collect()
    }

    pub fn decode_ranks(&self, ranks: &[u32]) -> String {
        ranks.iter().map(|&r| self.decode[r as usize]).collect()
    }

    /// Decoded factor `x[start..start + len]`.
    pub fn factor(&self, start: usize, len: usize) -> String {
        self.decode_ranks(&self.data[start..start + len])
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &r in &self.data {
            write!(f, "{}", self.decode[r as usize])?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sorted_ranks() {
        let s = Sequence::encode("baab").unwrap();
        assert_eq!(s.ranks(), &[1, 0, 0, 1]);
        assert_eq!(s.sigma(), 2);
        assert_eq!(s.symbols(), &['a', 'b']);

        let s = Sequence::encode("a").unwrap();
        assert_eq!(s.ranks(), &[0]);
        assert_eq!(s.sigma(), 1);

        let s = Sequence::encode("ACGT").unwrap();
        assert_eq!(s.ranks(), &[0, 1, 2, 3]);
        assert_eq!(s.sigma(), 4);
    }

    #[test]
    fn rejects_empty_and_sentinel() {
        assert!(matches!(Sequence::encode(""), Err(Error::InvalidInput(_))));
        assert!(matches!(Sequence::encode("ab$a"), Err(Error::InvalidInput(_))));
        assert!(Sequence::from_ranks(&[0, 1], &['$', 'a']).is_err());
        assert!(Sequence::from_ranks(&[], &['a']).is_err());
        assert!(Sequence::from_ranks(&[2], &['a', 'b']).is_err());
        assert!(Sequence::from_ranks(&[0], &['b', 'a']).is_err());
    }

    #[test]
    fn from_ranks_compacts_unused_symbols() {
        let s = Sequence::from_ranks(&[3, 1, 3], &['A', 'C', 'G', 'T']).unwrap();
        assert_eq!(s.ranks(), &[1, 0, 1]);
        assert_eq!(s.symbols(), &['C', 'T']);
        assert_eq!(s.to_string(), "TCT");
    }

    #[test]
    fn encode_word_and_factor() {
        let s = Sequence::encode("baab").unwrap();
        assert_eq!(s.encode_word("ab"), Some(vec![0, 1]));
        assert_eq!(s.encode_word("ac"), None);
        assert_eq!(s.factor(1, 3), "aab");
    }

    #[test]
    fn default_alphabets_are_sorted() {
        for sigma in [2, 4, 20, 26, 40] {
            let a = Sequence::default_alphabet(sigma);
            assert_eq!(a.len(), sigma);
            assert!(a.windows(2).all(|w| w[0] < w[1]));
        }
    }

    proptest! {
        #[test]
        fn encode_round_trips(text in "[^$]{1,40}") {
            let s = Sequence::encode(&text).unwrap();
            prop_assert_eq!(s.to_string(), text);
            prop_assert!(s.ranks().iter().all(|&r| (r as usize) < s.sigma()));
        }

        #[test]
        fn rank_order_matches_symbol_order(text in "[a-e]{2,30}", i in 0usize..30, j in 0usize..30) {
            let s = Sequence::encode(&text).unwrap();
            let chars: Vec<char> = text.chars().collect();
            let (i, j) = (i % chars.len(), j % chars.len());
            prop_assert_eq!(chars[i].cmp(&chars[j]), s.ranks()[i].cmp(&s.ranks()[j]));
        }
    }
}
