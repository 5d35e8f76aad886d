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

use super::circuit::{validate_gate, Gate};
use super::gate::{gate_matrix, ComplexAmp, GateKind, GateMatrix, ONE, ZERO};
use super::kernel;
use crate::{Error, Result};

/// Pure state of an n-qubit register. Qubit `q` is bit `q` of the
/// amplitude index.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amps: Vec<ComplexAmp>,
}

impl StateVector {
    /// |0…0⟩
    pub fn zero(n_qubits: usize) -> StateVector {
        let mut amps = vec![ZERO; 1 << n_qubits];
        amps[0] = ONE;
        StateVector { n_qubits, amps }
    }

    /// Normalises `amps`; fails on a zero, non-finite or wrongly sized vector.
    pub fn from_amplitudes(n_qubits: usize, mut amps: Vec<ComplexAmp>) -> Result<StateVector> {
        if amps.len() != 1 << n_qubits {
            return Err(Error::InvalidCircuit(format!(
                "{} amplitudes for {n_qubits} qubits",
                amps.len()
            )));
        }
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if !norm.is_finite() || norm == 0.0 {
            return Err(Error::InvalidCircuit("state cannot be normalised".into()));
        }
        amps.iter_mut().for_each(|a| *a /= norm);
        Ok(StateVector { n_qubits, amps })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[ComplexAmp] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn apply_gate(&mut self, kind: GateKind, targets: &[usize]) -> Result<()> {
        validate_gate(&Gate::new(kind, targets.to_vec()), self.n_qubits)?;
        self.apply_unchecked(&kind, targets);
        Ok(())
    }

    pub(crate) fn apply_unchecked(&mut self, kind: &GateKind, targets: &[usize]) {
        match gate_matrix(kind) {
            GateMatrix::One(m) => kernel::apply_1q(&mut self.amps, targets[0], &m),
            GateMatrix::Two(m) => kernel::apply_2q(&mut self.amps, targets[0], targets[1], &m),
        }
    }

    /// |amplitude|² marginalised onto `measured` (output bit k = qubit measured[k]).
    pub fn marginal_probabilities(&self, measured: &[usize]) -> Vec<f64> {
        marginalize(self.amps.iter().map(|a| a.norm_sqr()), measured)
    }
}

pub(crate) fn marginalize(full: impl Iterator<Item = f64>, measured: &[usize]) -> Vec<f64> {
    let mut out = vec![0.0; 1 << measured.len()];
    for (i, p) in full.enumerate() {
        let mut k = 0usize;
        for (bit, &q) in measured.iter().enumerate() {
            k |= (i >> q & 1) << bit;
        }
        out[k] += p;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    #[test]
    fn hadamard_on_zero() {
        let mut s = StateVector::zero(1);
        s.apply_gate(GateKind::H, &[0]).unwrap();
        for a in s.amplitudes() {
            assert!((a.re - FRAC_1_SQRT_2).abs() < 1e-15 && a.im == 0.0);
        }
    }

    #[test]
    fn cx_flips_target_when_control_set() {
        // control = qubit 1, target = qubit 0; start with qubit 1 set
        let mut s = StateVector::zero(2);
        s.apply_gate(GateKind::X, &[1]).unwrap();
        s.apply_gate(GateKind::CX, &[1, 0]).unwrap();
        assert_eq!(s.marginal_probabilities(&[0, 1]), vec![0.0, 0.0, 0.0, 1.0]);
        // and leaves the target alone otherwise
        let mut s = StateVector::zero(2);
        s.apply_gate(GateKind::X, &[0]).unwrap();
        s.apply_gate(GateKind::CX, &[1, 0]).unwrap();
        assert_eq!(s.marginal_probabilities(&[0, 1]), vec![0.0, 1.0, 0.0, 0.0]);
    }

    #[test]
    fn u_first_column() {
        let mut s = StateVector::zero(1);
        s.apply_gate(GateKind::u(PI / 4.0, 0.0, 0.0).unwrap(), &[0]).unwrap();
        let a = s.amplitudes();
        assert!((a[0].re - (PI / 8.0).cos()).abs() < 1e-15);
        assert!((a[1].re - (PI / 8.0).sin()).abs() < 1e-15);
    }

    #[test]
    fn out_of_range_target() {
        let mut s = StateVector::zero(2);
        assert!(matches!(
            s.apply_gate(GateKind::H, &[5]),
            Err(Error::QubitOutOfRange { index: 5, n_qubits: 2 })
        ));
    }

    #[test]
    fn gate_only_touches_target_amplitudes() {
        let amps: Vec<ComplexAmp> = (0..8).map(|i| ComplexAmp::new(i as f64 + 1.0, 0.5 * i as f64)).collect();
        let before = StateVector::from_amplitudes(3, amps).unwrap();
        let mut after = before.clone();
        after.apply_gate(GateKind::H, &[1]).unwrap();
        // sums over the target qubit's pair are changed, but pairs are independent:
        // amplitudes whose (q0, q2) pattern differs never mix
        for i in 0..8usize {
            let partner = i ^ 0b010;
            let lo = i.min(partner);
            let hi = i.max(partner);
            let expect = if i == lo {
                (before.amplitudes()[lo] + before.amplitudes()[hi]) * FRAC_1_SQRT_2
            } else {
                (before.amplitudes()[lo] - before.amplitudes()[hi]) * FRAC_1_SQRT_2
            };
            assert!((after.amplitudes()[i] - expect).norm() < 1e-14);
        }
    }
}
