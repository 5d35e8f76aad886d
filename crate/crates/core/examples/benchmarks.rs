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

// The three benchmark circuits, their fault-site counts and outputs.

use qvf::circuits::{build_deutsch_jozsa, BenchmarkSpec, DjOracle};
use qvf::injector::enumerate_sites;
use qvf::sim::run_exact;

pub fn run() -> qvf::Result<()> {
    for spec in BenchmarkSpec::defaults() {
        let c = spec.build()?;
        let dist = run_exact(&c)?;
        let (best, p) = dist
            .iter()
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .expect("non-empty distribution");
        println!(
            "{:<7} {} gates, {} sites, output {best} with p={p:.3}",
            spec.id(),
            c.gates().len(),
            enumerate_sites(&c).len()
        );
    }

    // A constant oracle always answers 000.
    let constant = build_deutsch_jozsa(&DjOracle::Constant(true))?;
    println!("constant DJ: P(000) = {:.3}", run_exact(&constant)?.probability_of("000")?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> qvf::Result<()> {
    run()
}
