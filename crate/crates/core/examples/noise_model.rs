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

// Evolve the benchmarks under the representative noise model and under a
// custom TOML configuration.

use qvf::metrics::qvf_of_distribution;
use qvf::noise::{evolve_density, evolve_noisy_exact, load_noise_config, NoiseModel};
use qvf::circuits::BenchmarkSpec;

const NOISY: &str = r#"
[qubits.default]
t1 = 20.0
t2 = 15.0
readout = [0.05, 0.08]

[gates.default]
duration = 50.0
depolarizing_prob = 0.01

[gates.cx]
duration = 400.0
depolarizing_prob = 0.04
"#;

pub fn run() -> qvf::Result<()> {
    let models = [
        ("representative", NoiseModel::representative()),
        ("noisy", load_noise_config(NOISY)?),
    ];
    for spec in BenchmarkSpec::defaults() {
        let c = spec.build()?;
        let correct = c.correct_states().expect("benchmarks carry correct states");
        for (name, model) in &models {
            let rho = evolve_density(&c, model)?;
            let m = qvf_of_distribution(&evolve_noisy_exact(&c, model)?, &correct)?;
            println!(
                "{:<7} {name:<14} trace={:.12} pst={:.4} baseline qvf={:.4}",
                spec.id(),
                rho.trace().re,
                m.pst,
                m.qvf
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> qvf::Result<()> {
    run()
}
