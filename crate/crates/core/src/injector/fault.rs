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

use std::f64::consts::{PI, TAU};
use std::fmt;

use crate::sim::{Circuit, Gate, GateKind};
use crate::{Error, Result};

/// A (gate, target qubit) position. A fault here is inserted right after
/// `gates[gate_index]`, acting on `qubit`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaultSite {
    pub gate_index: usize,
    pub qubit: usize,
}

impl FaultSite {
    pub fn new(gate_index: usize, qubit: usize) -> FaultSite {
        FaultSite { gate_index, qubit }
    }
}

impl fmt::Display for FaultSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gate {} qubit {}", self.gate_index, self.qubit)
    }
}

/// Phase-shift amplitudes of a fault: θ ∈ [0, π], φ ∈ [0, 2π), λ = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FaultParams {
    theta: f64,
    phi: f64,
    lambda: f64,
}

impl FaultParams {
    pub fn new(theta: f64, phi: f64) -> Result<FaultParams> {
        if !(0.0..=PI).contains(&theta) || !(0.0..TAU).contains(&phi) {
            return Err(Error::InvalidFault(format!(
                "shift (θ={theta}, φ={phi}) outside θ ∈ [0, π], φ ∈ [0, 2π)"
            )));
        }
        Ok(FaultParams { theta, phi, lambda: 0.0 })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// Always 0.
    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn gate(&self) -> GateKind {
        GateKind::U {
            theta: self.theta,
            phi: self.phi,
            lambda: self.lambda,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FaultSpec {
    pub site: FaultSite,
    pub params: FaultParams,
}

impl FaultSpec {
    pub fn new(site: FaultSite, params: FaultParams) -> FaultSpec {
        FaultSpec { site, params }
    }
}

impl fmt::Display for FaultSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (θ={}, φ={})", self.site, self.params.theta, self.params.phi)
    }
}

/// One site per (gate, target qubit) pair, in circuit order.
pub fn enumerate_sites(circuit: &Circuit) -> Vec<FaultSite> {
    circuit
        .gates()
        .iter()
        .enumerate()
        .flat_map(|(i, g)| g.targets.iter().map(move |&q| FaultSite::new(i, q)))
        .collect()
}

/// Copy of `circuit` with a `U(θ, φ, 0)` inserted immediately after each
/// faulted gate on the faulted qubit. Faults sharing a gate are inserted in
/// the order given.
pub fn inject(circuit: &Circuit, faults: &[FaultSpec]) -> Result<Circuit> {
    let gates = circuit.gates();
    for f in faults {
        let ok = gates
            .get(f.site.gate_index)
            .is_some_and(|g| g.targets.contains(&f.site.qubit));
        if !ok {
            return Err(Error::InvalidFault(format!("{} is not a site of this circuit", f.site)));
        }
    }
    let mut out = Vec::with_capacity(gates.len() + faults.len());
    for (i, g) in gates.iter().enumerate() {
        out.push(g.clone());
        for f in faults.iter().filter(|f| f.site.gate_index == i) {
            let mut fault = Gate::new(f.params.gate(), vec![f.site.qubit]);
            fault.injected = true;
            out.push(fault);
        }
    }
    Ok(circuit.replace_gates(out))
}
