// Copyright 2026 The qvf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::Rng;

use crate::{Error, Result};

/// How output bits are laid out in a bitstring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BitOrder {
    /// Character `k` (from the left) is output bit `k`.
    FirstMeasuredLeftmost,
    /// Character `k` (from the right) is output bit `k` (Qiskit style).
    FirstMeasuredRightmost,
}

/// The bitstring convention used everywhere in the crate: the first measured
/// qubit (qubit 0 for every benchmark) is the leftmost character, so
/// Bernstein-Vazirani with secret `011` reads out as `"011"`.
pub const BIT_ORDER: BitOrder = BitOrder::FirstMeasuredLeftmost;

const SUM_TOLERANCE: f64 = 1e-9;

/// Renders outcome index `index` (bit `k` = output bit `k`) as a bitstring.
pub fn format_bitstring(index: usize, width: usize) -> String {
    let bits = (0..width).map(|k| if index >> k & 1 == 1 { '1' } else { '0' });
    match BIT_ORDER {
        BitOrder::FirstMeasuredLeftmost => bits.collect(),
        BitOrder::FirstMeasuredRightmost => bits.rev().collect(),
    }
}

/// Inverse of [`format_bitstring`].
pub fn parse_bitstring(s: &str, width: usize) -> Result<usize> {
    if s.len() != width {
        return Err(Error::Metric(format!(
            "bitstring {s:?} has length {}, expected {width}",
            s.len()
        )));
    }
    let mut index = 0usize;
    for (pos, ch) in s.chars().enumerate() {
        let bit = match ch {
            '0' => 0,
            '1' => 1,
            _ => return Err(Error::Metric(format!("bitstring {s:?} contains {ch:?}"))),
        };
        let k = match BIT_ORDER {
            BitOrder::FirstMeasuredLeftmost => pos,
            BitOrder::FirstMeasuredRightmost => width - 1 - pos,
        };
        index |= bit << k;
    }
    Ok(index)
}

#[derive(Debug, Clone, PartialEq)]
enum Values {
    Exact(Vec<f64>),
    Sampled { counts: Vec<u64>, shots: u64 },
}

/// Probability (exact mode) or count (sampled mode) per output bitstring.
///
/// Entries are stored densely, indexed by outcome index; use
/// [`format_bitstring`] to name them.
#[derive(Debug, Clone, PartialEq)]
pub struct OutcomeDistribution {
    width: usize,
    values: Values,
}

impl OutcomeDistribution {
    pub fn exact(width: usize, mut probs: Vec<f64>) -> Result<Self> {
        check_len(width, probs.len())?;
        for p in probs.iter_mut() {
            if !p.is_finite() || *p < -SUM_TOLERANCE {
                return Err(Error::Metric(format!("invalid probability {p}")));
            }
            // round-off from density-matrix diagonals
            *p = p.max(0.0);
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > SUM_TOLERANCE {
            return Err(Error::Metric(format!("probabilities sum to {sum}")));
        }
        Ok(OutcomeDistribution {
            width,
            values: Values::Exact(probs),
        })
    }

    pub fn from_counts(width: usize, counts: Vec<u64>) -> Result<Self> {
        check_len(width, counts.len())?;
        let shots = counts.iter().sum();
        if shots == 0 {
            return Err(Error::ZeroShots);
        }
        Ok(OutcomeDistribution {
            width,
            values: Values::Sampled { counts, shots },
        })
    }

    /// Exact distribution from `(bitstring, probability)` pairs; missing
    /// bitstrings have probability 0.
    pub fn from_pairs<'a, I>(width: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, f64)>,
    {
        let mut probs = vec![0.0; 1 << width];
        for (s, p) in pairs {
            probs[parse_bitstring(s, width)?] += p;
        }
        Self::exact(width, probs)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        1 << self.width
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn shots(&self) -> Option<u64> {
        match &self.values {
            Values::Exact(_) => None,
            Values::Sampled { shots, .. } => Some(*shots),
        }
    }

    pub fn is_sampled(&self) -> bool {
        self.shots().is_some()
    }

    pub fn count(&self, index: usize) -> Option<u64> {
        match &self.values {
            Values::Exact(_) => None,
            Values::Sampled { counts, .. } => Some(counts[index]),
        }
    }

    /// Probability of outcome `index`; count/shots in sampled mode.
    pub fn probability(&self, index: usize) -> f64 {
        match &self.values {
            Values::Exact(p) => p[index],
            Values::Sampled { counts, shots } => counts[index] as f64 / *shots as f64,
        }
    }

    pub fn probability_of(&self, bitstring: &str) -> Result<f64> {
        Ok(self.probability(parse_bitstring(bitstring, self.width)?))
    }

    pub fn probabilities(&self) -> Vec<f64> {
        (0..self.len()).map(|i| self.probability(i)).collect()
    }

    /// `(bitstring, probability)` for every outcome, in index order.
    pub fn iter(&self) -> impl Iterator<Item = (String, f64)> + '_ {
        (0..self.len()).map(move |i| (format_bitstring(i, self.width), self.probability(i)))
    }

    /// Draw `shots` outcomes from this distribution.
    pub fn sample<R: Rng + ?Sized>(&self, shots: u64, rng: &mut R) -> Result<OutcomeDistribution> {
        if shots == 0 {
            return Err(Error::ZeroShots);
        }
        let probs = self.probabilities();
        let index = WeightedIndex::new(&probs)
            .map_err(|e| Error::Metric(format!("cannot sample distribution: {e}")))?;
        let mut counts = vec![0u64; probs.len()];
        for _ in 0..shots {
            counts[index.sample(rng)] += 1;
        }
        Self::from_counts(self.width, counts)
    }
}

fn check_len(width: usize, len: usize) -> Result<()> {
    if width == 0 || width > 24 || len != 1 << width {
        return Err(Error::Metric(format!(
            "distribution of width {width} cannot have {len} entries"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bitstrings_put_first_measured_bit_left() {
        assert_eq!(format_bitstring(0b110, 3), "011");
        assert_eq!(parse_bitstring("011", 3).unwrap(), 0b110);
        for i in 0..16 {
            assert_eq!(parse_bitstring(&format_bitstring(i, 4), 4).unwrap(), i);
        }
        assert!(parse_bitstring("01", 3).is_err());
        assert!(parse_bitstring("0a1", 3).is_err());
    }

    #[test]
    fn exact_distribution_must_sum_to_one() {
        assert!(OutcomeDistribution::exact(1, vec![0.5, 0.4]).is_err());
        assert!(OutcomeDistribution::exact(1, vec![1.5, -0.5]).is_err());
        assert!(OutcomeDistribution::exact(2, vec![1.0, 0.0]).is_err());
        let d = OutcomeDistribution::from_pairs(2, [("11", 0.75), ("01", 0.25)]).unwrap();
        assert_eq!(d.probability_of("11").unwrap(), 0.75);
        assert_eq!(d.probability_of("10").unwrap(), 0.0);
    }

    #[test]
    fn counts_sum_to_shots() {
        let d = OutcomeDistribution::from_counts(1, vec![3, 1]).unwrap();
        assert_eq!(d.shots(), Some(4));
        assert_eq!(d.probability(0), 0.75);
        assert!(OutcomeDistribution::from_counts(1, vec![0, 0]).is_err());
    }
}
