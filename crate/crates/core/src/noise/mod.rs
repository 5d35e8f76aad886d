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

//! Parametric machine noise evolved exactly on a density matrix.
//!
//! After every circuit gate the gate unitary is applied, followed on each
//! target qubit by amplitude damping (γ = 1 − exp(−d/T1)), phase damping
//! (λ = 1 − exp(−d/T2φ), 1/T2φ = 1/T2 − 1/(2·T1)) and symmetric
//! depolarizing with the gate's configured probability. Readout flips are
//! applied to the final marginal distribution. Idle time between gates is
//! not modelled, and injected faults carry no gate noise.

mod channels;
mod config;
mod density;
mod model;

pub use channels::{amplitude_damping, completeness_error, depolarizing, phase_damping, KrausSet};
pub use config::{load_noise_config, load_noise_file};
pub use density::DensityMatrix;
pub use model::{GateNoise, NoiseModel, QubitNoise};

use crate::sim::{marginalize, Circuit, OutcomeDistribution};
use crate::{Error, Result};

/// Largest register evolved as a density matrix.
pub const MAX_DENSITY_QUBITS: usize = 6;

const TRACE_TOLERANCE: f64 = 1e-9;
const PSD_TOLERANCE: f64 = 1e-8;

/// Final density matrix of a noisy run, before readout error.
pub fn evolve_density(circuit: &Circuit, model: &NoiseModel) -> Result<DensityMatrix> {
    circuit.validate()?;
    if circuit.n_qubits() > MAX_DENSITY_QUBITS {
        return Err(Error::InvalidCircuit(format!(
            "noisy evolution supports at most {MAX_DENSITY_QUBITS} qubits, circuit has {}",
            circuit.n_qubits()
        )));
    }
    let mut rho = DensityMatrix::zero(circuit.n_qubits());
    for gate in circuit.gates() {
        rho.apply_gate(&gate.kind, &gate.targets);
        if gate.injected {
            continue;
        }
        let gn = model.gate(&gate.kind);
        let d = gn.duration_us();
        for &q in &gate.targets {
            let qn = model.qubit(q);
            let gamma = qn.amplitude_damping_gamma(d);
            if gamma > 0.0 {
                rho.apply_channel(q, &amplitude_damping(gamma));
            }
            let lambda = qn.phase_damping_lambda(d);
            if lambda > 0.0 {
                rho.apply_channel(q, &phase_damping(lambda));
            }
            if gn.depolarizing_prob > 0.0 {
                rho.apply_channel(q, &depolarizing(gn.depolarizing_prob));
            }
        }
    }
    rho.check_invariants(TRACE_TOLERANCE, PSD_TOLERANCE)?;
    Ok(rho)
}

/// Exact output distribution under `model`, including readout error.
pub fn evolve_noisy_exact(circuit: &Circuit, model: &NoiseModel) -> Result<OutcomeDistribution> {
    let rho = evolve_density(circuit, model)?;
    let mut probs = marginalize(rho.diagonal(), circuit.measured());
    for (bit, &q) in circuit.measured().iter().enumerate() {
        let qn = model.qubit(q);
        if qn.p01 == 0.0 && qn.p10 == 0.0 {
            continue;
        }
        let mask = 1usize << bit;
        let mut flipped = vec![0.0; probs.len()];
        for (idx, &p) in probs.iter().enumerate() {
            let flip = if idx & mask == 0 { qn.p01 } else { qn.p10 };
            flipped[idx] += (1.0 - flip) * p;
            flipped[idx ^ mask] += flip * p;
        }
        probs = flipped;
    }
    OutcomeDistribution::exact(circuit.measured().len(), probs)
}

/// Seeded shots from [`evolve_noisy_exact`].
pub fn sample_noisy(
    circuit: &Circuit,
    model: &NoiseModel,
    shots: u64,
    seed: u64,
) -> Result<OutcomeDistribution> {
    crate::sim::sample(circuit, shots, seed, Some(model))
}
