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

//! Exact state-vector simulation.
//!
//! Circuits are evolved gate by gate on a dense state vector. Exact mode
//! returns |amplitude|² marginalised onto the measured qubits; sampled mode
//! draws shots from that distribution (or from the noisy one, see
//! [`crate::noise`]) with a seeded ChaCha stream.

mod circuit;
mod gate;
pub(crate) mod kernel;
mod outcome;
mod state;

pub use circuit::{Circuit, Gate};
pub use gate::{gate_matrix, u_matrix, ComplexAmp, GateKind, GateMatrix, Matrix2, Matrix4};
pub use outcome::{format_bitstring, parse_bitstring, BitOrder, OutcomeDistribution, BIT_ORDER};
pub use state::StateVector;
pub(crate) use state::marginalize;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::noise::NoiseModel;
use crate::Result;

/// Evolve |0…0⟩ through `circuit` and return the final state.
pub fn evolve(circuit: &Circuit) -> Result<StateVector> {
    circuit.validate()?;
    let mut state = StateVector::zero(circuit.n_qubits());
    for g in circuit.gates() {
        state.apply_unchecked(&g.kind, &g.targets);
    }
    Ok(state)
}

/// Exact output distribution of a noiseless run. Deterministic.
pub fn run_exact(circuit: &Circuit) -> Result<OutcomeDistribution> {
    let state = evolve(circuit)?;
    OutcomeDistribution::exact(
        circuit.measured().len(),
        state.marginal_probabilities(circuit.measured()),
    )
}

/// RNG for stream `stream` of a seeded experiment. Distinct streams of the
/// same seed are independent, which keeps campaign results independent of
/// evaluation order.
pub fn seeded_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Sample `shots` executions. With a non-ideal noise model the shots are
/// drawn from the exact noisy distribution.
pub fn sample(
    circuit: &Circuit,
    shots: u64,
    seed: u64,
    noise: Option<&NoiseModel>,
) -> Result<OutcomeDistribution> {
    if shots == 0 {
        return Err(crate::Error::ZeroShots);
    }
    let dist = distribution(circuit, noise)?;
    dist.sample(shots, &mut seeded_rng(seed, 0))
}

/// Exact distribution with or without noise.
pub fn distribution(circuit: &Circuit, noise: Option<&NoiseModel>) -> Result<OutcomeDistribution> {
    match noise {
        Some(model) if !model.is_ideal() => crate::noise::evolve_noisy_exact(circuit, model),
        _ => run_exact(circuit),
    }
}
