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

use std::collections::BTreeSet;

use crate::sim::{parse_bitstring, OutcomeDistribution};
use crate::{Error, Result};

/// Output bitstrings that count as a correct answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrectStates {
    width: usize,
    indices: BTreeSet<usize>,
}

impl CorrectStates {
    pub fn new<I, S>(width: usize, states: I) -> Result<CorrectStates>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let indices = states
            .into_iter()
            .map(|s| parse_bitstring(s.as_ref(), width))
            .collect::<Result<BTreeSet<_>>>()?;
        Self::from_indices(width, indices)
    }

    pub fn from_indices(width: usize, indices: impl IntoIterator<Item = usize>) -> Result<CorrectStates> {
        let indices: BTreeSet<usize> = indices.into_iter().collect();
        if indices.is_empty() {
            return Err(Error::Metric("correct-state set is empty".into()));
        }
        if let Some(&bad) = indices.iter().find(|&&i| i >> width != 0) {
            return Err(Error::Metric(format!("outcome index {bad} does not fit {width} bits")));
        }
        Ok(CorrectStates { width, indices })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn contains(&self, index: usize) -> bool {
        self.indices.contains(&index)
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices.iter().copied()
    }

    fn check(&self, dist: &OutcomeDistribution) -> Result<()> {
        if dist.width() != self.width {
            return Err(Error::Metric(format!(
                "correct states have {} bits, distribution has {}",
                self.width,
                dist.width()
            )));
        }
        Ok(())
    }
}

/// Probability of a successful trial: the mass on correct states (count/shots
/// in sampled mode).
pub fn pst(dist: &OutcomeDistribution, correct: &CorrectStates) -> Result<f64> {
    correct.check(dist)?;
    Ok(correct.indices().map(|i| dist.probability(i)).sum())
}

/// P(B): the largest probability among incorrect states, 0 if every state is
/// correct.
pub fn max_incorrect(dist: &OutcomeDistribution, correct: &CorrectStates) -> Result<f64> {
    correct.check(dist)?;
    Ok((0..dist.len())
        .filter(|&i| !correct.contains(i))
        .map(|i| dist.probability(i))
        .fold(0.0, f64::max))
}

/// (P(A) − P(B)) / (P(A) + P(B))
pub fn contrast_from(p_a: f64, p_b: f64) -> Result<f64> {
    if !(p_a >= 0.0 && p_b >= 0.0) {
        return Err(Error::Metric(format!("invalid probabilities P(A)={p_a}, P(B)={p_b}")));
    }
    let total = p_a + p_b;
    if total == 0.0 {
        return Err(Error::Metric("contrast undefined: P(A) + P(B) = 0".into()));
    }
    Ok((p_a - p_b) / total)
}

/// Michelson contrast between the correct mass and the most likely
/// incorrect state. Range [−1, 1].
pub fn michelson_contrast(dist: &OutcomeDistribution, correct: &CorrectStates) -> Result<f64> {
    contrast_from(pst(dist, correct)?, max_incorrect(dist, correct)?)
}

/// QVF = 1 − (contrast + 1) / 2. Range [0, 1], lower is more reliable.
pub fn qvf(contrast: f64) -> Result<f64> {
    if !(-1.0..=1.0).contains(&contrast) {
        return Err(Error::Metric(format!("contrast {contrast} outside [-1, 1]")));
    }
    Ok(1.0 - (contrast + 1.0) / 2.0)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QvfMetrics {
    pub pst: f64,
    pub p_b: f64,
    pub contrast: f64,
    pub qvf: f64,
}

pub fn qvf_of_distribution(dist: &OutcomeDistribution, correct: &CorrectStates) -> Result<QvfMetrics> {
    let pst = pst(dist, correct)?;
    let p_b = max_incorrect(dist, correct)?;
    let contrast = contrast_from(pst, p_b)?;
    Ok(QvfMetrics {
        pst,
        p_b,
        contrast,
        qvf: qvf(contrast)?,
    })
}
