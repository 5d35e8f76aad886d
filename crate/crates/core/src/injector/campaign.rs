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

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::{build_grid, enumerate_sites, inject, FaultSite, FaultSpec, GridPoint, DEFAULT_GRID_STEP_DEG};
use crate::metrics::{qvf_of_distribution, CorrectStates, QvfMetrics};
use crate::noise::NoiseModel;
use crate::sim::{distribution, run_exact, seeded_rng, Circuit};
use crate::{Error, Result};

/// A fault counts as improving the circuit when its QVF is below the
/// baseline by more than this.
pub const IMPROVEMENT_EPSILON: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimMode {
    /// Exact output probabilities.
    Exact,
    /// Frequencies over `shots` seeded executions.
    Sampled,
}

impl SimMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            SimMode::Exact => "exact",
            SimMode::Sampled => "sampled",
        }
    }
}

impl fmt::Display for SimMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SimMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "exact" => Ok(SimMode::Exact),
            "sampled" => Ok(SimMode::Sampled),
            other => Err(format!("unknown mode {other:?} (expected exact or sampled)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SiteSelection {
    All,
    /// Positions in [`enumerate_sites`] order.
    Subset(Vec<usize>),
}

#[derive(Debug, Clone)]
pub struct CampaignConfig {
    pub grid_step_deg: u32,
    pub shots: u64,
    pub mode: SimMode,
    pub noise: Option<NoiseModel>,
    pub seed: u64,
    pub sites: SiteSelection,
    /// Worker threads; `None` uses the available parallelism.
    pub jobs: Option<usize>,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            grid_step_deg: DEFAULT_GRID_STEP_DEG,
            shots: 1024,
            mode: SimMode::Exact,
            noise: None,
            seed: 0,
            sites: SiteSelection::All,
            jobs: None,
        }
    }
}

/// One campaign row. The baseline row has no site.
#[derive(Debug, Clone, PartialEq)]
pub struct QvfRecord {
    pub circuit_id: String,
    /// Position in [`enumerate_sites`] order.
    pub site_index: Option<usize>,
    pub site: Option<FaultSite>,
    pub point: GridPoint,
    pub mode: SimMode,
    /// Shots behind the metrics; 0 in exact mode.
    pub shots: u64,
    pub seed: u64,
    pub pst: f64,
    pub p_b: f64,
    pub contrast: f64,
    pub qvf: f64,
    pub baseline_qvf: f64,
    pub improved: bool,
}

impl QvfRecord {
    pub fn is_baseline(&self) -> bool {
        self.site.is_none()
    }

    pub fn metrics(&self) -> QvfMetrics {
        QvfMetrics {
            pst: self.pst,
            p_b: self.p_b,
            contrast: self.contrast,
            qvf: self.qvf,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CampaignSummary {
    pub baseline: QvfRecord,
    pub fault_records: usize,
    /// Circuit executions implied by the configured shot count.
    pub executions: u64,
    pub mean_qvf: f64,
    pub stddev_qvf: f64,
    pub improved_fraction: f64,
}

/// The circuit's attached correct states, or the most probable noiseless
/// outcomes when none are attached.
pub fn correct_states_for(circuit: &Circuit) -> Result<CorrectStates> {
    if let Some(c) = circuit.correct_states() {
        return Ok(c);
    }
    let dist = run_exact(circuit)?;
    let probs = dist.probabilities();
    let max = probs.iter().copied().fold(0.0, f64::max);
    CorrectStates::from_indices(
        dist.width(),
        probs.iter().enumerate().filter(|(_, &p)| p >= max - 1e-9).map(|(i, _)| i),
    )
}

/// A prepared fault-injection campaign over one circuit.
pub struct Campaign<'a> {
    circuit: &'a Circuit,
    config: &'a CampaignConfig,
    circuit_id: String,
    correct: CorrectStates,
    sites: Vec<FaultSite>,
    selected: Vec<usize>,
    grid: Vec<GridPoint>,
}

impl<'a> Campaign<'a> {
    pub fn new(circuit: &'a Circuit, config: &'a CampaignConfig) -> Result<Campaign<'a>> {
        circuit.validate()?;
        if config.shots == 0 {
            return Err(Error::ZeroShots);
        }
        let grid = build_grid(config.grid_step_deg)?;
        let sites = enumerate_sites(circuit);
        let selected = match &config.sites {
            SiteSelection::All => (0..sites.len()).collect(),
            SiteSelection::Subset(s) => {
                if let Some(bad) = s.iter().find(|&&i| i >= sites.len()) {
                    return Err(Error::InvalidFault(format!(
                        "site index {bad} out of range ({} sites)",
                        sites.len()
                    )));
                }
                s.clone()
            }
        };
        Ok(Campaign {
            circuit,
            config,
            circuit_id: circuit.name().unwrap_or("circuit").to_string(),
            correct: correct_states_for(circuit)?,
            sites,
            selected,
            grid,
        })
    }

    pub fn with_correct_states(mut self, correct: CorrectStates) -> Self {
        self.correct = correct;
        self
    }

    pub fn sites(&self) -> &[FaultSite] {
        &self.sites
    }

    pub fn grid(&self) -> &[GridPoint] {
        &self.grid
    }

    pub fn correct_states(&self) -> &CorrectStates {
        &self.correct
    }

    /// Number of fault records the campaign emits.
    pub fn len(&self) -> usize {
        self.selected.len() * self.grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn evaluate_faults(&self, faults: &[FaultSpec], stream: u64) -> Result<QvfMetrics> {
        let circuit = if faults.is_empty() {
            self.circuit.clone()
        } else {
            inject(self.circuit, faults)?
        };
        let mut dist = distribution(&circuit, self.config.noise.as_ref())?;
        if self.config.mode == SimMode::Sampled {
            dist = dist.sample(self.config.shots, &mut seeded_rng(self.config.seed, stream))?;
        }
        qvf_of_distribution(&dist, &self.correct)
    }

    fn record(&self, site_index: Option<usize>, point: GridPoint, m: QvfMetrics, baseline_qvf: f64) -> QvfRecord {
        QvfRecord {
            circuit_id: self.circuit_id.clone(),
            site_index,
            site: site_index.map(|i| self.sites[i]),
            point,
            mode: self.config.mode,
            shots: match self.config.mode {
                SimMode::Exact => 0,
                SimMode::Sampled => self.config.shots,
            },
            seed: self.config.seed,
            pst: m.pst,
            p_b: m.p_b,
            contrast: m.contrast,
            qvf: m.qvf,
            baseline_qvf,
            improved: site_index.is_some() && m.qvf < baseline_qvf - IMPROVEMENT_EPSILON,
        }
    }

    /// Fault-free run under the campaign's mode, noise and shots.
    pub fn baseline(&self) -> Result<QvfRecord> {
        let m = self.evaluate_faults(&[], 0)?;
        Ok(self.record(None, GridPoint::new(0, 0), m, m.qvf))
    }

    /// Record for fault site `site_index` at grid position `grid_index`.
    /// The sampling stream depends only on these two indices.
    pub fn evaluate(&self, site_index: usize, grid_index: usize, baseline_qvf: f64) -> Result<QvfRecord> {
        let site = *self
            .sites
            .get(site_index)
            .ok_or_else(|| Error::InvalidFault(format!("site index {site_index} out of range")))?;
        let point = *self
            .grid
            .get(grid_index)
            .ok_or_else(|| Error::InvalidFault(format!("grid index {grid_index} out of range")))?;
        let spec = FaultSpec::new(site, point.params()?);
        let stream = 1 + (site_index * self.grid.len() + grid_index) as u64;
        let m = self.evaluate_faults(&[spec], stream).map_err(|e| Error::Campaign {
            fault: format!("site {site_index} ({spec})"),
            source: Box::new(e),
        })?;
        Ok(self.record(Some(site_index), point, m, baseline_qvf))
    }

    /// Evaluate the baseline, then every (site, grid point) pair. Records
    /// reach `sink` in canonical order (baseline, then site-major,
    /// grid-minor) whatever the worker count; each site's grid row is
    /// evaluated in parallel before being handed over.
    pub fn run<F>(&self, mut sink: F) -> Result<CampaignSummary>
    where
        F: FnMut(QvfRecord) -> Result<()>,
    {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(jobs) = self.config.jobs {
            builder = builder.num_threads(jobs.max(1));
        }
        let pool = builder.build().map_err(|e| Error::Io(std::io::Error::other(e)))?;

        let baseline = self.baseline()?;
        let base_qvf = baseline.qvf;
        sink(baseline.clone())?;

        let (mut n, mut sum, mut sum_sq, mut improved) = (0usize, 0.0f64, 0.0f64, 0usize);
        for &site_index in &self.selected {
            let row: Vec<Result<QvfRecord>> = pool.install(|| {
                (0..self.grid.len())
                    .into_par_iter()
                    .map(|g| self.evaluate(site_index, g, base_qvf))
                    .collect()
            });
            for rec in row {
                let rec = rec?;
                n += 1;
                sum += rec.qvf;
                sum_sq += rec.qvf * rec.qvf;
                improved += usize::from(rec.improved);
                sink(rec)?;
            }
        }
        let mean = if n > 0 { sum / n as f64 } else { 0.0 };
        let var = if n > 0 { (sum_sq / n as f64 - mean * mean).max(0.0) } else { 0.0 };
        Ok(CampaignSummary {
            baseline,
            fault_records: n,
            executions: n as u64 * self.config.shots,
            mean_qvf: mean,
            stddev_qvf: var.sqrt(),
            improved_fraction: if n > 0 { improved as f64 / n as f64 } else { 0.0 },
        })
    }
}

/// Run a campaign, streaming records (baseline first) into `sink`.
pub fn run_campaign<F>(circuit: &Circuit, config: &CampaignConfig, sink: F) -> Result<CampaignSummary>
where
    F: FnMut(QvfRecord) -> Result<()>,
{
    Campaign::new(circuit, config)?.run(sink)
}

/// Collected campaign output.
#[derive(Debug, Clone, PartialEq)]
pub struct CampaignResult {
    pub summary: CampaignSummary,
    /// Fault records in canonical order (baseline excluded).
    pub records: Vec<QvfRecord>,
}

impl CampaignResult {
    pub fn baseline(&self) -> &QvfRecord {
        &self.summary.baseline
    }
}

pub fn run_campaign_collect(circuit: &Circuit, config: &CampaignConfig) -> Result<CampaignResult> {
    let mut records = Vec::new();
    let summary = run_campaign(circuit, config, |r| {
        if !r.is_baseline() {
            records.push(r);
        }
        Ok(())
    })?;
    Ok(CampaignResult { summary, records })
}
