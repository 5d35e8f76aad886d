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

use crate::sim::kernel::{apply_1q, apply_2q, conj2, conj4};
use crate::sim::{gate_matrix, ComplexAmp, GateKind, GateMatrix, Matrix2};
use crate::{Error, Result};

/// Mixed state of an n-qubit register, stored row-major.
///
/// The flat index of ρ[i][j] is `j + (i << n)`, so column qubit `q` sits at
/// bit `q` and row qubit `q` at bit `q + n`; this lets the state-vector
/// kernels apply `K ρ K†` by acting with `K` on the row bits and with
/// `conj(K)` on the column bits.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    n_qubits: usize,
    entries: Vec<ComplexAmp>,
}

impl DensityMatrix {
    /// |0…0⟩⟨0…0|
    pub fn zero(n_qubits: usize) -> DensityMatrix {
        let mut entries = vec![ComplexAmp::new(0.0, 0.0); 1 << (2 * n_qubits)];
        entries[0] = ComplexAmp::new(1.0, 0.0);
        DensityMatrix { n_qubits, entries }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        1 << self.n_qubits
    }

    pub fn get(&self, row: usize, col: usize) -> ComplexAmp {
        self.entries[row * self.dim() + col]
    }

    /// Targets must already be validated against the register.
    pub(crate) fn apply_gate(&mut self, kind: &GateKind, targets: &[usize]) {
        let n = self.n_qubits;
        match gate_matrix(kind) {
            GateMatrix::One(m) => self.conjugate_1q(targets[0], &m),
            GateMatrix::Two(m) => {
                apply_2q(&mut self.entries, targets[0] + n, targets[1] + n, &m);
                apply_2q(&mut self.entries, targets[0], targets[1], &conj4(&m));
            }
        }
    }

    fn conjugate_1q(&mut self, qubit: usize, k: &Matrix2) {
        apply_1q(&mut self.entries, qubit + self.n_qubits, k);
        apply_1q(&mut self.entries, qubit, &conj2(k));
    }

    /// ρ → Σ_k K ρ K† on one qubit.
    pub(crate) fn apply_channel(&mut self, qubit: usize, kraus: &[Matrix2]) {
        let mut acc = vec![ComplexAmp::new(0.0, 0.0); self.entries.len()];
        for k in kraus {
            let mut term = self.clone();
            term.conjugate_1q(qubit, k);
            for (a, t) in acc.iter_mut().zip(&term.entries) {
                *a += t;
            }
        }
        self.entries = acc;
    }

    pub fn trace(&self) -> ComplexAmp {
        (0..self.dim()).map(|i| self.get(i, i)).sum()
    }

    pub fn diagonal(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.dim()).map(|i| self.get(i, i).re)
    }

    /// Hermitian and unit trace within `tol`, and λ_min > −`psd_tol`.
    pub fn check_invariants(&self, tol: f64, psd_tol: f64) -> Result<()> {
        let dim = self.dim();
        for i in 0..dim {
            for j in i..dim {
                let d = (self.get(i, j) - self.get(j, i).conj()).norm();
                if d > tol {
                    return Err(Error::DensityInvariant(format!(
                        "not Hermitian at ({i},{j}): deviation {d:e}"
                    )));
                }
            }
        }
        let tr = self.trace();
        if (tr.re - 1.0).abs() > tol || tr.im.abs() > tol {
            return Err(Error::DensityInvariant(format!("trace {tr}")));
        }
        if !self.shifted_cholesky_succeeds(psd_tol) {
            return Err(Error::DensityInvariant(format!(
                "smallest eigenvalue below -{psd_tol:e}"
            )));
        }
        Ok(())
    }

    /// ρ + εI is positive definite iff every eigenvalue of ρ exceeds −ε.
    fn shifted_cholesky_succeeds(&self, eps: f64) -> bool {
        let dim = self.dim();
        let mut l = vec![ComplexAmp::new(0.0, 0.0); dim * dim];
        for j in 0..dim {
            let mut d = self.get(j, j).re + eps;
            for k in 0..j {
                d -= l[j * dim + k].norm_sqr();
            }
            if d <= 0.0 || !d.is_finite() {
                return false;
            }
            let d = d.sqrt();
            l[j * dim + j] = ComplexAmp::new(d, 0.0);
            for i in j + 1..dim {
                let mut s = self.get(i, j);
                for k in 0..j {
                    s -= l[i * dim + k] * l[j * dim + k].conj();
                }
                l[i * dim + j] = s / d;
            }
        }
        true
    }
}
