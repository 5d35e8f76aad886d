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

// Aggregate a Bernstein-Vazirani campaign into whole-circuit and per-qubit
// heatmaps, a delta map and a histogram.

use qvf::circuits::BenchmarkSpec;
use qvf::injector::{run_campaign_collect, CampaignConfig};
use qvf::metrics::{aggregate_heatmap, delta_qvf, histogram_stats, GroupKey, Grouping, DEFAULT_HISTOGRAM_BINS};
use qvf::noise::NoiseModel;
use qvf::report::{delta_svg, heatmap_ppm, heatmap_svg, histogram_svg, HeatmapOptions};

pub fn run() -> qvf::Result<()> {
    let bv = BenchmarkSpec::default_bv().build()?;
    let config = CampaignConfig { noise: Some(NoiseModel::representative()), ..Default::default() };
    let result = run_campaign_collect(&bv, &config)?;

    let whole = aggregate_heatmap(&result.records, Grouping::All)?;
    let per_qubit = aggregate_heatmap(&result.records, Grouping::PerQubit)?;
    for g in &per_qubit {
        println!("{}: mean qvf {:.4}, at (pi, pi) {:.4}", g.key, g.mean(), g.get(180, 180).unwrap_or(f64::NAN));
    }
    let q0 = per_qubit.iter().find(|g| g.key == GroupKey::Qubit(0)).expect("qubit 0 has sites");
    let q3 = per_qubit.iter().find(|g| g.key == GroupKey::Qubit(3)).expect("ancilla has sites");
    let delta = delta_qvf(q0, q3)?;
    let stats = histogram_stats(&result.records, DEFAULT_HISTOGRAM_BINS)?;
    println!("mean {:.4} stddev {:.4}; max |q0 - q3| {:.4}", stats.mean, stats.stddev, delta.max_abs());

    let dir = std::env::temp_dir().join("qvf-examples");
    std::fs::create_dir_all(&dir)?;
    let opts = HeatmapOptions { overlay: true, ..Default::default() };
    std::fs::write(dir.join("bv_heatmap.svg"), heatmap_svg(&whole, &opts)?)?;
    std::fs::write(dir.join("bv_heatmap.ppm"), heatmap_ppm(&whole, &opts)?)?;
    std::fs::write(dir.join("bv_perqubit.svg"), heatmap_svg(&per_qubit, &opts)?)?;
    std::fs::write(dir.join("bv_delta_q0_q3.svg"), delta_svg(&delta, &opts))?;
    std::fs::write(dir.join("bv_hist.svg"), histogram_svg(&stats))?;
    println!("reports in {}", dir.display());
    Ok(())
}

#[allow(dead_code)]
fn main() -> qvf::Result<()> {
    run()
}
