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

// How QVF depends on when a bit flip strikes each Bernstein-Vazirani qubit.

use qvf::circuits::BenchmarkSpec;
use qvf::injector::{run_campaign_collect, CampaignConfig, GridPoint};
use qvf::metrics::timeline;
use qvf::report::timeline_csv;

pub fn run() -> qvf::Result<()> {
    let bv = BenchmarkSpec::default_bv().build()?;
    let config = CampaignConfig { grid_step_deg: 90, ..Default::default() };
    let result = run_campaign_collect(&bv, &config)?;
    for point in [GridPoint::new(180, 0), GridPoint::new(0, 90)] {
        println!("fault {point}");
        for series in timeline(&result.records, point)? {
            let row: Vec<String> = series.points.iter().map(|(g, q)| format!("g{g}:{q:.2}")).collect();
            println!("  q{} {}", series.qubit, row.join(" "));
        }
    }
    print!("{}", timeline_csv(&timeline(&result.records, GridPoint::new(180, 0))?));
    Ok(())
}

#[allow(dead_code)]
fn main() -> qvf::Result<()> {
    run()
}
