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
use std::fmt;

use super::gate::GateKind;
use crate::{Error, Result};

/// One gate application.
#[derive(Debug, Clone, PartialEq)]
pub struct Gate {
    pub kind: GateKind,
    pub targets: Vec<usize>,
    /// Set on U gates inserted by the fault injector. Injected faults model an
    /// external perturbation and are exempt from gate noise.
    pub injected: bool,
}

impl Gate {
    pub fn new(kind: GateKind, targets: Vec<usize>) -> Gate {
        Gate { kind, targets, injected: false }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        for (i, t) in self.targets.iter().enumerate() {
            write!(f, "{}q{t}", if i == 0 { " " } else { "," })?;
        }
        Ok(())
    }
}

/// An ordered gate list over `n_qubits`, plus the measured qubits.
///
/// `measured[k]` is the qubit read into output bit `k`; see
/// [`BIT_ORDER`](super::BIT_ORDER) for how bits map to bitstring characters.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    n_qubits: usize,
    gates: Vec<Gate>,
    measured: Vec<usize>,
    name: Option<String>,
    correct: Option<Vec<String>>,
}

impl Circuit {
    pub fn new(n_qubits: usize, measured: Vec<usize>) -> Result<Circuit> {
        if n_qubits == 0 {
            return Err(Error::InvalidCircuit("circuit needs at least one qubit".into()));
        }
        if measured.is_empty() {
            return Err(Error::InvalidCircuit("no measured qubits".into()));
        }
        let mut seen = BTreeSet::new();
        for &q in &measured {
            check_qubit(q, n_qubits)?;
            if !seen.insert(q) {
                return Err(Error::InvalidCircuit(format!("qubit {q} measured twice")));
            }
        }
        Ok(Circuit {
            n_qubits,
            gates: Vec::new(),
            measured,
            name: None,
            correct: None,
        })
    }

    /// Circuit measuring every qubit in index order.
    pub fn measure_all(n_qubits: usize) -> Result<Circuit> {
        Circuit::new(n_qubits, (0..n_qubits).collect())
    }

    pub fn push(&mut self, kind: GateKind, targets: &[usize]) -> Result<&mut Self> {
        self.push_gate(Gate::new(kind, targets.to_vec()))
    }

    pub fn push_gate(&mut self, gate: Gate) -> Result<&mut Self> {
        validate_gate(&gate, self.n_qubits)?;
        self.gates.push(gate);
        Ok(self)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Attach the bitstrings that count as correct output (fault-free answer).
    pub fn with_correct_states<I, S>(mut self, states: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let states: Vec<String> = states.into_iter().map(Into::into).collect();
        if states.is_empty() {
            return Err(Error::InvalidCircuit("empty correct-state set".into()));
        }
        for s in &states {
            super::parse_bitstring(s, self.measured.len())?;
        }
        self.correct = Some(states);
        Ok(self)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn measured(&self) -> &[usize] {
        &self.measured
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn correct_state_strings(&self) -> Option<&[String]> {
        self.correct.as_deref()
    }

    /// Correct-state metadata as a metric-ready set, if attached.
    pub fn correct_states(&self) -> Option<crate::metrics::CorrectStates> {
        self.correct
            .as_ref()
            .map(|c| crate::metrics::CorrectStates::new(self.measured.len(), c).expect("validated on attach"))
    }

    /// Re-check every structural invariant.
    pub fn validate(&self) -> Result<()> {
        let shell = Circuit::new(self.n_qubits, self.measured.clone())?;
        for g in &self.gates {
            validate_gate(g, self.n_qubits)?;
        }
        if let Some(c) = &self.correct {
            shell.with_correct_states(c.iter().cloned())?;
        }
        Ok(())
    }

    pub(crate) fn replace_gates(&self, gates: Vec<Gate>) -> Circuit {
        Circuit {
            gates,
            ..self.clone()
        }
    }
}

fn check_qubit(q: usize, n_qubits: usize) -> Result<()> {
    if q >= n_qubits {
        return Err(Error::QubitOutOfRange { index: q, n_qubits });
    }
    Ok(())
}

pub(crate) fn validate_gate(gate: &Gate, n_qubits: usize) -> Result<()> {
    if gate.targets.len() != gate.kind.arity() {
        return Err(Error::InvalidCircuit(format!(
            "{} expects {} target(s), got {}",
            gate.kind.name(),
            gate.kind.arity(),
            gate.targets.len()
        )));
    }
    for &q in &gate.targets {
        check_qubit(q, n_qubits)?;
    }
    if gate.targets.len() == 2 && gate.targets[0] == gate.targets[1] {
        return Err(Error::InvalidCircuit(format!(
            "{} needs two distinct qubits",
            gate.kind.name()
        )));
    }
    if let GateKind::U { theta, phi, lambda } = gate.kind {
        if !(theta.is_finite() && phi.is_finite() && lambda.is_finite()) {
            return Err(Error::InvalidGate("non-finite U parameters".into()));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_targets() {
        let mut c = Circuit::measure_all(2).unwrap();
        assert!(matches!(c.push(GateKind::H, &[2]), Err(Error::QubitOutOfRange { index: 2, .. })));
        assert!(c.push(GateKind::CX, &[1, 1]).is_err());
        assert!(c.push(GateKind::CX, &[1]).is_err());
        assert!(c.push(GateKind::CX, &[0, 1]).is_ok());
        assert_eq!(c.gates().len(), 1);
    }

    #[test]
    fn rejects_bad_measurement_maps() {
        assert!(Circuit::new(2, vec![]).is_err());
        assert!(Circuit::new(2, vec![0, 0]).is_err());
        assert!(Circuit::new(2, vec![2]).is_err());
        assert!(Circuit::new(0, vec![0]).is_err());
    }

    #[test]
    fn correct_states_checked_against_width() {
        let c = Circuit::new(3, vec![0, 1]).unwrap();
        assert!(c.clone().with_correct_states(["011"]).is_err());
        assert!(c.clone().with_correct_states(["0x"]).is_err());
        assert!(c.with_correct_states(["01"]).is_ok());
    }
}
