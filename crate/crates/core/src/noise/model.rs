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

use std::collections::BTreeMap;

use crate::sim::GateKind;
use crate::{Error, Result};

/// Coherence times (µs) and readout error of one qubit.
///
/// `p01` is the probability of reading 1 when the qubit is in |0⟩, `p10`
/// of reading 0 when it is in |1⟩. An infinite `t1`/`t2` disables the
/// corresponding channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitNoise {
    pub t1_us: f64,
    pub t2_us: f64,
    pub p01: f64,
    pub p10: f64,
}

impl QubitNoise {
    pub const IDEAL: QubitNoise = QubitNoise {
        t1_us: f64::INFINITY,
        t2_us: f64::INFINITY,
        p01: 0.0,
        p10: 0.0,
    };

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::NoiseConfig(m));
        if !(self.t1_us > 0.0) || !(self.t2_us > 0.0) {
            return bad(format!("t1 and t2 must be positive (t1={}, t2={})", self.t1_us, self.t2_us));
        }
        if self.t2_us > 2.0 * self.t1_us * (1.0 + 1e-12) {
            return bad(format!("t2={} exceeds 2*t1={}", self.t2_us, 2.0 * self.t1_us));
        }
        check_probability("p01", self.p01)?;
        check_probability("p10", self.p10)
    }

    /// γ = 1 − exp(−d/T1)
    pub fn amplitude_damping_gamma(&self, duration_us: f64) -> f64 {
        -(-duration_us / self.t1_us).exp_m1()
    }

    /// 1/T2φ = 1/T2 − 1/(2·T1)
    pub fn pure_dephasing_rate(&self) -> f64 {
        (1.0 / self.t2_us - 0.5 / self.t1_us).max(0.0)
    }

    /// λ = 1 − exp(−d/T2φ); off-diagonals are scaled by 1 − λ so that,
    /// together with amplitude damping, coherences decay as exp(−d/T2).
    pub fn phase_damping_lambda(&self, duration_us: f64) -> f64 {
        -(-duration_us * self.pure_dephasing_rate()).exp_m1()
    }

    fn is_ideal_readout(&self) -> bool {
        self.p01 == 0.0 && self.p10 == 0.0
    }

    fn is_coherent(&self) -> bool {
        self.t1_us.is_infinite() && self.t2_us.is_infinite()
    }
}

/// Duration (ns) and depolarizing probability of one gate kind.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GateNoise {
    pub duration_ns: f64,
    pub depolarizing_prob: f64,
}

impl GateNoise {
    pub const IDEAL: GateNoise = GateNoise {
        duration_ns: 0.0,
        depolarizing_prob: 0.0,
    };

    pub fn validate(&self) -> Result<()> {
        if !(self.duration_ns >= 0.0) || !self.duration_ns.is_finite() {
            return Err(Error::NoiseConfig(format!(
                "duration must be finite and >= 0, got {}",
                self.duration_ns
            )));
        }
        check_probability("depolarizing_prob", self.depolarizing_prob)
    }

    pub fn duration_us(&self) -> f64 {
        self.duration_ns / 1000.0
    }
}

fn check_probability(name: &str, p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::NoiseConfig(format!("{name}={p} is not a probability")));
    }
    Ok(())
}

pub(crate) const GATE_NAMES: [&str; 11] = ["h", "x", "y", "z", "s", "sdg", "t", "tdg", "u", "cx", "cz"];

/// Parametric machine-noise model: per-qubit T1/T2/readout, per-gate-kind
/// duration and depolarizing probability. Qubits and gates without an
/// explicit entry use the defaults, which are ideal unless overridden.
#[derive(Debug, Clone, PartialEq)]
pub struct NoiseModel {
    default_qubit: QubitNoise,
    qubits: BTreeMap<usize, QubitNoise>,
    default_gate: GateNoise,
    gates: BTreeMap<&'static str, GateNoise>,
}

impl Default for NoiseModel {
    fn default() -> Self {
        NoiseModel::ideal()
    }
}

impl NoiseModel {
    pub fn ideal() -> NoiseModel {
        NoiseModel {
            default_qubit: QubitNoise::IDEAL,
            qubits: BTreeMap::new(),
            default_gate: GateNoise::IDEAL,
            gates: BTreeMap::new(),
        }
    }

    /// The shipped representative configuration (`configs/representative.toml`).
    pub fn representative() -> NoiseModel {
        super::load_noise_config(REPRESENTATIVE).expect("shipped config is valid")
    }

    pub fn with_default_qubit(mut self, q: QubitNoise) -> Result<Self> {
        q.validate()?;
        self.default_qubit = q;
        Ok(self)
    }

    pub fn with_qubit(mut self, qubit: usize, q: QubitNoise) -> Result<Self> {
        q.validate()?;
        self.qubits.insert(qubit, q);
        Ok(self)
    }

    pub fn with_default_gate(mut self, g: GateNoise) -> Result<Self> {
        g.validate()?;
        self.default_gate = g;
        Ok(self)
    }

    /// `name` is a lower-case gate mnemonic such as `"cx"`.
    pub fn with_gate(mut self, name: &str, g: GateNoise) -> Result<Self> {
        g.validate()?;
        let key = GATE_NAMES
            .iter()
            .find(|n| **n == name)
            .ok_or_else(|| Error::NoiseConfig(format!("unknown gate {name:?}")))?;
        self.gates.insert(key, g);
        Ok(self)
    }

    pub fn qubit(&self, q: usize) -> QubitNoise {
        self.qubits.get(&q).copied().unwrap_or(self.default_qubit)
    }

    pub fn gate(&self, kind: &GateKind) -> GateNoise {
        self.gates.get(kind.name()).copied().unwrap_or(self.default_gate)
    }

    /// Scales every depolarizing probability by `factor` (clamped to 1).
    pub fn scale_depolarizing(&self, factor: f64) -> NoiseModel {
        let scale = |g: &GateNoise| GateNoise {
            depolarizing_prob: (g.depolarizing_prob * factor).clamp(0.0, 1.0),
            ..*g
        };
        NoiseModel {
            default_gate: scale(&self.default_gate),
            gates: self.gates.iter().map(|(k, g)| (*k, scale(g))).collect(),
            ..self.clone()
        }
    }

    /// True when the model cannot change any distribution.
    pub fn is_ideal(&self) -> bool {
        let qubits = || std::iter::once(&self.default_qubit).chain(self.qubits.values());
        let gates = || std::iter::once(&self.default_gate).chain(self.gates.values());
        qubits().all(QubitNoise::is_ideal_readout)
            && gates().all(|g| g.depolarizing_prob == 0.0)
            && (gates().all(|g| g.duration_ns == 0.0) || qubits().all(QubitNoise::is_coherent))
    }
}

pub(crate) const REPRESENTATIVE: &str = include_str!("../../configs/representative.toml");
