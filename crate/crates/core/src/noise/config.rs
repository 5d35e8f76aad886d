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

//! Noise configuration documents (TOML).
//!
//! ```toml
//! # coherence times in microseconds, durations in nanoseconds
//! [qubits.default]
//! t1 = 100.0
//! t2 = 80.0
//! readout = [0.01, 0.02]   # [p01, p10]
//!
//! [qubits.3]               # overrides for qubit 3; missing keys inherit `default`
//! t1 = 60.0
//!
//! [gates.default]
//! duration = 35.0
//! depolarizing_prob = 0.001
//!
//! [gates.cx]
//! duration = 300.0
//! depolarizing_prob = 0.01
//! ```
//!
//! Absent keys are ideal: `t1 = inf`, `t2 = 2 * t1`, zero readout error,
//! zero duration and zero depolarizing probability.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use super::model::{GateNoise, NoiseModel, QubitNoise};
use crate::{Error, Result};

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    #[serde(default)]
    qubits: BTreeMap<String, QubitSection>,
    #[serde(default)]
    gates: BTreeMap<String, GateSection>,
}

#[derive(Debug, Default, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
struct QubitSection {
    t1: Option<f64>,
    t2: Option<f64>,
    readout: Option<[f64; 2]>,
}

impl QubitSection {
    fn over(self, base: QubitSection) -> QubitSection {
        QubitSection {
            t1: self.t1.or(base.t1),
            t2: self.t2.or(base.t2),
            readout: self.readout.or(base.readout),
        }
    }

    fn resolve(self) -> QubitNoise {
        let t1 = self.t1.unwrap_or(f64::INFINITY);
        let [p01, p10] = self.readout.unwrap_or([0.0, 0.0]);
        QubitNoise {
            t1_us: t1,
            t2_us: self.t2.unwrap_or(2.0 * t1),
            p01,
            p10,
        }
    }
}

#[derive(Debug, Default, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
struct GateSection {
    duration: Option<f64>,
    depolarizing_prob: Option<f64>,
}

impl GateSection {
    fn over(self, base: GateSection) -> GateSection {
        GateSection {
            duration: self.duration.or(base.duration),
            depolarizing_prob: self.depolarizing_prob.or(base.depolarizing_prob),
        }
    }

    fn resolve(self) -> GateNoise {
        GateNoise {
            duration_ns: self.duration.unwrap_or(0.0),
            depolarizing_prob: self.depolarizing_prob.unwrap_or(0.0),
        }
    }
}

/// Parse a noise configuration document.
pub fn load_noise_config(text: &str) -> Result<NoiseModel> {
    let doc: Document = toml::from_str(text).map_err(|e| Error::NoiseConfig(e.to_string()))?;

    let qubit_base = doc.qubits.get("default").copied().unwrap_or_default();
    let mut model = NoiseModel::ideal().with_default_qubit(qubit_base.resolve())?;
    for (key, section) in &doc.qubits {
        if key == "default" {
            continue;
        }
        let q: usize = key
            .parse()
            .map_err(|_| Error::NoiseConfig(format!("qubit key {key:?} is neither \"default\" nor an index")))?;
        model = model
            .with_qubit(q, section.over(qubit_base).resolve())
            .map_err(|e| Error::NoiseConfig(format!("qubit {q}: {e}")))?;
    }

    let gate_base = doc.gates.get("default").copied().unwrap_or_default();
    model = model.with_default_gate(gate_base.resolve())?;
    for (key, section) in &doc.gates {
        if key == "default" {
            continue;
        }
        model = model.with_gate(key, section.over(gate_base).resolve())?;
    }
    Ok(model)
}

pub fn load_noise_file(path: impl AsRef<Path>) -> Result<NoiseModel> {
    load_noise_config(&std::fs::read_to_string(path)?)
}
