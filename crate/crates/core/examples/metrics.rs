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

// PST, contrast and QVF on hand-written distributions.

use qvf::metrics::{qvf_of_distribution, CorrectStates};
use qvf::sim::OutcomeDistribution;

pub fn run() -> qvf::Result<()> {
    let correct = CorrectStates::new(2, ["11"])?;
    for (p_a, p_b) in [(0.949, 0.024), (0.484, 0.486), (0.361, 0.604)] {
        let rest = (1.0 - p_a - p_b) / 2.0;
        let dist = OutcomeDistribution::from_pairs(2, [("11", p_a), ("01", p_b), ("00", rest), ("10", rest)])?;
        let m = qvf_of_distribution(&dist, &correct)?;
        println!("P(A)={p_a} P(B)={p_b}: contrast {:+.4}, qvf {:.4}", m.contrast, m.qvf);
    }

    // Half the mass on the right answer, the rest spread thinly: low PST,
    // yet the answer is still unambiguous.
    let mut probs = vec![(0.5 - 0.0176) / 30.0; 32];
    probs[0b00100] = 0.5;
    probs[0] = 0.0176;
    let dist = OutcomeDistribution::exact(5, probs)?;
    let m = qvf_of_distribution(&dist, &CorrectStates::new(5, ["00100"])?)?;
    println!("spread: pst {:.3}, qvf {:.4}", m.pst, m.qvf);

    let counts = OutcomeDistribution::from_counts(1, vec![900, 124])?;
    let m = qvf_of_distribution(&counts, &CorrectStates::new(1, ["0"])?)?;
    println!("from counts: pst {:.4}, qvf {:.4}", m.pst, m.qvf);
    Ok(())
}

#[allow(dead_code)]
fn main() -> qvf::Result<()> {
    run()
}
