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

//! Test-only brute-force simulator: dense unitaries built from textbook
//! gate matrices, independent of the library's kernels.

#![allow(dead_code)]

use num_complex::Complex64 as C;
use std::f64::consts::PI;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use qvf::sim::{Circuit, GateKind};

pub type Dense = Vec<Vec<C>>;

fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

pub fn one_qubit(kind: &GateKind) -> [[C; 2]; 2] {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let z = c(0.0, 0.0);
    let o = c(1.0, 0.0);
    match *kind {
        GateKind::H => [[c(s, 0.0), c(s, 0.0)], [c(s, 0.0), c(-s, 0.0)]],
        GateKind::X => [[z, o], [o, z]],
        GateKind::Y => [[z, c(0.0, -1.0)], [c(0.0, 1.0), z]],
        GateKind::Z => [[o, z], [z, c(-1.0, 0.0)]],
        GateKind::S => [[o, z], [z, c(0.0, 1.0)]],
        GateKind::Sdg => [[o, z], [z, c(0.0, -1.0)]],
        GateKind::T => [[o, z], [z, C::from_polar(1.0, std::f64::consts::FRAC_PI_4)]],
        GateKind::Tdg => [[o, z], [z, C::from_polar(1.0, -std::f64::consts::FRAC_PI_4)]],
        GateKind::U { theta, phi, lambda } => {
            let (ct, st) = ((theta / 2.0).cos(), (theta / 2.0).sin());
            [
                [c(ct, 0.0), -C::from_polar(st, lambda)],
                [C::from_polar(st, phi), C::from_polar(ct, phi + lambda)],
            ]
        }
        GateKind::CX | GateKind::CZ => panic!("two-qubit gate"),
    }
}

/// Full 2^n x 2^n operator of one gate, with qubit q as bit q of the index.
pub fn embed(kind: &GateKind, targets: &[usize], n: usize) -> Dense {
    let dim = 1 << n;
    let mut u = vec![vec![c(0.0, 0.0); dim]; dim];
    for col in 0..dim {
        match kind {
            GateKind::CX => {
                let row = if col >> targets[0] & 1 == 1 { col ^ (1 << targets[1]) } else { col };
                u[row][col] = c(1.0, 0.0);
            }
            GateKind::CZ => {
                let both = col >> targets[0] & 1 == 1 && col >> targets[1] & 1 == 1;
                u[col][col] = c(if both { -1.0 } else { 1.0 }, 0.0);
            }
            _ => {
                let m = one_qubit(kind);
                let q = targets[0];
                let b = col >> q & 1;
                for a in 0..2 {
                    let row = (col & !(1 << q)) | (a << q);
                    u[row][col] = m[a][b];
                }
            }
        }
    }
    u
}

pub fn matmul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    let mut out = vec![vec![c(0.0, 0.0); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == c(0.0, 0.0) {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

pub fn circuit_unitary(circuit: &Circuit) -> Dense {
    let n = circuit.n_qubits();
    let dim = 1 << n;
    let mut u: Dense = (0..dim)
        .map(|i| (0..dim).map(|j| c(if i == j { 1.0 } else { 0.0 }, 0.0)).collect())
        .collect();
    for g in circuit.gates() {
        u = matmul(&embed(&g.kind, &g.targets, n), &u);
    }
    u
}

/// Outcome probabilities indexed like the library: bit k is `measured[k]`.
pub fn oracle_distribution(circuit: &Circuit) -> Vec<f64> {
    let u = circuit_unitary(circuit);
    let measured = circuit.measured();
    let mut probs = vec![0.0; 1 << measured.len()];
    for (basis, row) in u.iter().enumerate() {
        let p = row[0].norm_sqr();
        let idx = measured
            .iter()
            .enumerate()
            .fold(0, |acc, (k, &q)| acc | ((basis >> q & 1) << k));
        probs[idx] += p;
    }
    probs
}

/// QVF computed directly from a probability vector.
pub fn oracle_qvf(probs: &[f64], correct: &[usize]) -> f64 {
    let p_a: f64 = correct.iter().map(|&i| probs[i]).sum();
    let p_b = probs
        .iter()
        .enumerate()
        .filter(|(i, _)| !correct.contains(i))
        .map(|(_, &p)| p)
        .fold(0.0, f64::max);
    p_b / (p_a + p_b)
}

/// Random circuit over the full gate set, every qubit measured.
pub fn random_circuit(rng: &mut ChaCha8Rng, max_qubits: usize, max_gates: usize) -> Circuit {
    let n = rng.random_range(1..=max_qubits);
    let mut c = Circuit::measure_all(n).unwrap();
    for _ in 0..rng.random_range(1..=max_gates) {
        let pick = rng.random_range(0..if n > 1 { 11 } else { 9 });
        let q = rng.random_range(0..n);
        let kind = match pick {
            0 => GateKind::H,
            1 => GateKind::X,
            2 => GateKind::Y,
            3 => GateKind::Z,
            4 => GateKind::S,
            5 => GateKind::Sdg,
            6 => GateKind::T,
            7 => GateKind::Tdg,
            8 => GateKind::u(
                rng.random_range(0.0..PI),
                rng.random_range(0.0..2.0 * PI),
                rng.random_range(0.0..2.0 * PI),
            )
            .unwrap(),
            9 => GateKind::CX,
            _ => GateKind::CZ,
        };
        if kind.arity() == 2 {
            let mut t = rng.random_range(0..n);
            while t == q {
                t = rng.random_range(0..n);
            }
            c.push(kind, &[q, t]).unwrap();
        } else {
            c.push(kind, &[q]).unwrap();
        }
    }
    c
}

/// Random circuit over real-matrix gates only.
pub fn random_real_circuit(rng: &mut ChaCha8Rng, max_qubits: usize, max_gates: usize) -> Circuit {
    let n = rng.random_range(2..=max_qubits);
    let mut c = Circuit::measure_all(n).unwrap();
    for _ in 0..rng.random_range(1..=max_gates) {
        let q = rng.random_range(0..n);
        let t = (q + rng.random_range(1..n)) % n;
        match rng.random_range(0..5) {
            0 => c.push(GateKind::H, &[q]),
            1 => c.push(GateKind::X, &[q]),
            2 => c.push(GateKind::Z, &[q]),
            3 => c.push(GateKind::CX, &[q, t]),
            _ => c.push(GateKind::CZ, &[q, t]),
        }
        .unwrap();
    }
    c
}
