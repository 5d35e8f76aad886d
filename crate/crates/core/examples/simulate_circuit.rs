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

// Build a Bell pair by hand, inspect exact probabilities and draw seeded shots.

use qvf::sim::{evolve, run_exact, sample, Circuit, GateKind};

pub fn run() -> qvf::Result<()> {
    let mut bell = Circuit::measure_all(2)?.with_name("bell");
    bell.push(GateKind::H, &[0])?.push(GateKind::CX, &[0, 1])?;

    let state = evolve(&bell)?;
    println!("amplitudes: {:?}", state.amplitudes());

    let exact = run_exact(&bell)?;
    for (bits, p) in exact.iter() {
        println!("P({bits}) = {p:.3}");
    }

    let shots = sample(&bell, 1000, 7, None)?;
    for (bits, p) in shots.iter().filter(|(_, p)| *p > 0.0) {
        println!("sampled {bits}: {p:.3}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> qvf::Result<()> {
    run()
}
