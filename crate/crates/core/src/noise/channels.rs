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

//! Single-qubit Kraus channels.

use crate::sim::{gate_matrix, ComplexAmp, GateKind, GateMatrix, Matrix2};

pub type KrausSet = Vec<Matrix2>;

fn scaled(m: Matrix2, s: f64) -> Matrix2 {
    m.map(|row| row.map(|z| z * s))
}

fn one_qubit(kind: GateKind) -> Matrix2 {
    match gate_matrix(&kind) {
        GateMatrix::One(m) => m,
        GateMatrix::Two(_) => unreachable!("single-qubit gate"),
    }
}

fn real(entries: [[f64; 2]; 2]) -> Matrix2 {
    entries.map(|row| row.map(|x| ComplexAmp::new(x, 0.0)))
}

/// Energy relaxation |1⟩ → |0⟩ with probability `gamma`.
pub fn amplitude_damping(gamma: f64) -> KrausSet {
    vec![
        real([[1.0, 0.0], [0.0, (1.0 - gamma).sqrt()]]),
        real([[0.0, gamma.sqrt()], [0.0, 0.0]]),
    ]
}

/// Pure dephasing that scales the off-diagonal coherences by `1 - lambda`.
pub fn phase_damping(lambda: f64) -> KrausSet {
    let p = lambda / 2.0;
    vec![
        scaled(real([[1.0, 0.0], [0.0, 1.0]]), (1.0 - p).sqrt()),
        scaled(one_qubit(GateKind::Z), p.sqrt()),
    ]
}

/// Symmetric depolarizing: X, Y, Z each with probability `p / 3`.
pub fn depolarizing(p: f64) -> KrausSet {
    vec![
        scaled(real([[1.0, 0.0], [0.0, 1.0]]), (1.0 - p).sqrt()),
        scaled(one_qubit(GateKind::X), (p / 3.0).sqrt()),
        scaled(one_qubit(GateKind::Y), (p / 3.0).sqrt()),
        scaled(one_qubit(GateKind::Z), (p / 3.0).sqrt()),
    ]
}

/// max |(Σ K†K − I)_ij|
pub fn completeness_error(ops: &[Matrix2]) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..2 {
        for j in 0..2 {
            let mut acc = ComplexAmp::new(if i == j { -1.0 } else { 0.0 }, 0.0);
            for k in ops {
                for r in 0..2 {
                    acc += k[r][i].conj() * k[r][j];
                }
            }
            worst = worst.max(acc.norm());
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn channels_are_complete() {
        for p in [0.0, 1e-4, 0.05, 0.3, 0.999, 1.0] {
            assert!(completeness_error(&amplitude_damping(p)) < 1e-12, "ad {p}");
            assert!(completeness_error(&phase_damping(p)) < 1e-12, "pd {p}");
            assert!(completeness_error(&depolarizing(p)) < 1e-12, "dep {p}");
        }
    }

    #[test]
    fn incomplete_set_is_detected() {
        let mut ops = depolarizing(0.1);
        ops.pop();
        assert!(completeness_error(&ops) > 1e-3);
    }
}
