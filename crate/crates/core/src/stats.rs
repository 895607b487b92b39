//! Expected frequency, deviation and three-way classification of words.

use crate::error::{Error, Result};

/// Occurrence counts of a word `w` and of its longest proper prefix,
/// longest proper suffix and longest infix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct WordStats {
    pub f_w: u64,
    pub f_p: u64,
    pub f_s: u64,
    pub f_i: u64,
}

impl WordStats {
    pub fn new(f_w: u64, f_p: u64, f_s: u64, f_i: u64) -> Self {
        WordStats { f_w, f_p, f_s, f_i }
    }

    /// Whether the counts could come from a real text: each occurrence of
    /// `w` contains one occurrence of each of the other three.
    pub fn is_consistent(&self) -> bool {
        self.f_w <= self.f_p && self.f_p <= self.f_i && self.f_w <= self.f_s && self.f_s <= self.f_i
    }

    pub fn expected(&self) -> f64 {
        expected_frequency(self)
    }

    pub fn deviation(&self) -> f64 {
        deviation(self.f_w, self.expected())
    }
}

/// `f_p * f_s / f_i`, or 0 when the infix does not occur.
pub fn expected_frequency(stats: &WordStats) -> f64 {
    if stats.f_i == 0 {
        return 0.0;
    }
    match stats.f_p.checked_mul(stats.f_s) {
        Some(product) => product as f64 / stats.f_i as f64,
        None => stats.f_p as f64 * stats.f_s as f64 / stats.f_i as f64,
    }
}

/// `(f_w - E) / max(sqrt(E), 1)`.
pub fn deviation(f_w: u64, expected: f64) -> f64 {
    (f_w as f64 - expected) / expected.sqrt().max(1.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WordClass {
    Avoided,
    Common,
    Overabundant,
}

/// Classification thresholds, `rho1 < 0 < rho2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Thresholds {
    rho1: f64,
    rho2: f64,
}

impl Thresholds {
    pub fn new(rho1: f64, rho2: f64) -> Result<Self> {
        if !(rho1 < 0.0 && rho2 > 0.0) || !rho1.is_finite() || !rho2.is_finite() {
            return Err(Error::InvalidInput(format!(
                "thresholds must satisfy rho1 < 0 < rho2, got ({rho1}, {rho2})"
            )));
        }
        Ok(Thresholds { rho1, rho2 })
    }

    pub fn rho1(&self) -> f64 {
        self.rho1
    }

    pub fn rho2(&self) -> f64 {
        self.rho2
    }
}

/// Avoided at or below `rho1`, overabundant at or above `rho2`.
pub fn classify(dev: f64, th: &Thresholds) -> WordClass {
    if dev <= th.rho1 {
        WordClass::Avoided
    } else if dev >= th.rho2 {
        WordClass::Overabundant
    } else {
        WordClass::Common
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn th() -> Thresholds {
        Thresholds::new(-0.1, 0.3).unwrap()
    }

    #[test]
    fn expected_examples() {
        assert_eq!(expected_frequency(&WordStats::new(1, 1, 1, 1)), 1.0);
        assert_eq!(expected_frequency(&WordStats::new(0, 3, 2, 0)), 0.0);
        let e = expected_frequency(&WordStats::new(1, 1, 5, 6));
        assert!((e - 5.0 / 6.0).abs() < 1e-15);
    }

    #[test]
    fn deviation_examples() {
        assert_eq!(deviation(1, 1.0), 0.0);
        assert_eq!(deviation(1, 4.0), -1.5);
        assert!((deviation(1, 5.0 / 6.0) - 1.0 / 6.0).abs() < 1e-12);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(0.5, &th()), WordClass::Overabundant);
        assert_eq!(classify(0.0, &th()), WordClass::Common);
        assert_eq!(classify(-0.1, &th()), WordClass::Avoided);
        assert_eq!(classify(0.3, &th()), WordClass::Overabundant);
    }

    #[test]
    fn thresholds_validated() {
        assert!(Thresholds::new(0.0, 1.0).is_err());
        assert!(Thresholds::new(-1.0, 0.0).is_err());
        assert!(Thresholds::new(f64::NEG_INFINITY, 1.0).is_err());
        assert!(Thresholds::new(-1.0, f64::NAN).is_err());
    }

    #[test]
    fn huge_counts_fall_back_to_float() {
        let big = u64::MAX / 2;
        let e = expected_frequency(&WordStats::new(0, big, 4, big));
        assert!((e - 4.0).abs() < 1e-6);
    }

    proptest! {
        #[test]
        fn expected_symmetric(fp in 0u64..1000, fs in 0u64..1000, fi in 0u64..1000) {
            prop_assert_eq!(
                expected_frequency(&WordStats::new(0, fp, fs, fi)),
                expected_frequency(&WordStats::new(0, fs, fp, fi))
            );
        }

        #[test]
        fn deviation_zero_at_expectation(f in 0u64..10_000) {
            prop_assert_eq!(deviation(f, f as f64), 0.0);
        }

        #[test]
        fn deviation_bounded_by_frequency(f in 0u64..1_000_000, e in 0.0f64..1e7) {
            prop_assert!(deviation(f, e) <= f as f64);
        }

        #[test]
        fn deviation_increasing_in_observed(f in 0u64..10_000, e in 0.0f64..1e4) {
            prop_assert!(deviation(f + 1, e) > deviation(f, e));
        }

        #[test]
        fn absent_word_never_positive(fp in 0u64..50, fs in 0u64..50, extra in 0u64..50) {
            let fi = fp.max(fs) + extra;
            let s = WordStats::new(0, fp, fs, fi);
            prop_assert!(s.deviation() <= 0.0);
        }

        #[test]
        fn classify_total(dev in -1e6f64..1e6) {
            let c = classify(dev, &th());
            let expected = if dev <= -0.1 {
                WordClass::Avoided
            } else if dev >= 0.3 {
                WordClass::Overabundant
            } else {
                WordClass::Common
            };
            prop_assert_eq!(c, expected);
        }
    }
}
