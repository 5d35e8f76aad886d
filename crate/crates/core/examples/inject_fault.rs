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

// Inject single U(theta, phi) faults into Bernstein-Vazirani and compare
// PST with QVF.

use std::f64::consts::PI;

use qvf::circuits::build_bernstein_vazirani;
use qvf::injector::{enumerate_sites, inject, FaultParams, FaultSpec};
use qvf::metrics::qvf_of_distribution;
use qvf::sim::run_exact;

pub fn run() -> qvf::Result<()> {
    let bv = build_bernstein_vazirani("011")?;
    let correct = bv.correct_states().expect("secret is the correct state");
    let sites = enumerate_sites(&bv);
    println!("{} fault sites", sites.len());

    let shifts = [("theta=pi/2", PI / 2.0, 0.0), ("theta=pi", PI, 0.0), ("phi=pi", 0.0, PI)];
    for site in sites.iter().take(4) {
        for (label, theta, phi) in shifts {
            let faulty = inject(&bv, &[FaultSpec::new(*site, FaultParams::new(theta, phi)?)])?;
            let m = qvf_of_distribution(&run_exact(&faulty)?, &correct)?;
            println!("{site} {label:<11} pst={:.3} qvf={:.3}", m.pst, m.qvf);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> qvf::Result<()> {
    run()
}
