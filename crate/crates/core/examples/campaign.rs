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

// Run a sampled, noisy campaign over Grover and stream it to a record file.

use qvf::circuits::BenchmarkSpec;
use qvf::injector::{run_campaign, CampaignConfig, SimMode};
use qvf::noise::NoiseModel;
use qvf::report::{read_records_file, RecordWriter};

pub fn run() -> qvf::Result<()> {
    let grover = BenchmarkSpec::default_grover().build()?;
    let config = CampaignConfig {
        mode: SimMode::Sampled,
        shots: 1024,
        seed: 42,
        noise: Some(NoiseModel::representative()),
        ..Default::default()
    };

    let dir = std::env::temp_dir().join("qvf-examples");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("grover_campaign.csv");
    let mut writer = RecordWriter::create(&path)?;
    let summary = run_campaign(&grover, &config, |r| writer.write(&r))?;
    writer.finish()?;

    println!("faults: {}, executions: {}", summary.fault_records, summary.executions);
    println!("baseline qvf {:.4}, mean {:.4} +/- {:.4}", summary.baseline.qvf, summary.mean_qvf, summary.stddev_qvf);
    println!("improved: {:.2}%", 100.0 * summary.improved_fraction);
    println!("{} rows in {}", read_records_file(&path)?.len(), path.display());
    Ok(())
}

#[allow(dead_code)]
fn main() -> qvf::Result<()> {
    run()
}
