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

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::injector::{GridPoint, QvfRecord};
use crate::{Error, Result};

pub const DEFAULT_HISTOGRAM_BINS: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Grouping {
    /// One grid averaged over every fault site.
    All,
    /// One grid per qubit, averaged over that qubit's sites.
    PerQubit,
    /// One grid per fault site.
    PerSite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupKey {
    All,
    Qubit(usize),
    Site(usize),
}

impl fmt::Display for GroupKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKey::All => f.write_str("all"),
            GroupKey::Qubit(q) => write!(f, "q{q}"),
            GroupKey::Site(s) => write!(f, "site{s}"),
        }
    }
}

/// Mean QVF over the (theta, phi) grid. `cells[t * phis.len() + p]`.
#[derive(Debug, Clone, PartialEq)]
pub struct HeatmapGrid {
    pub key: GroupKey,
    pub thetas_deg: Vec<u32>,
    pub phis_deg: Vec<u32>,
    pub cells: Vec<f64>,
}

impl HeatmapGrid {
    pub fn get(&self, theta_deg: u32, phi_deg: u32) -> Option<f64> {
        let t = self.thetas_deg.iter().position(|&x| x == theta_deg)?;
        let p = self.phis_deg.iter().position(|&x| x == phi_deg)?;
        Some(self.cells[t * self.phis_deg.len() + p])
    }

    pub fn mean(&self) -> f64 {
        self.cells.iter().sum::<f64>() / self.cells.len() as f64
    }
}

fn group_key(rec: &QvfRecord, grouping: Grouping) -> Option<GroupKey> {
    let site = rec.site?;
    Some(match grouping {
        Grouping::All => GroupKey::All,
        Grouping::PerQubit => GroupKey::Qubit(site.qubit),
        Grouping::PerSite => GroupKey::Site(rec.site_index.unwrap_or(site.gate_index)),
    })
}

/// Average fault records into heatmap grids. Baseline records are ignored.
/// Every group must cover the full set of grid points seen in the input.
pub fn aggregate_heatmap(records: &[QvfRecord], grouping: Grouping) -> Result<Vec<HeatmapGrid>> {
    let faults: Vec<&QvfRecord> = records.iter().filter(|r| !r.is_baseline()).collect();
    if faults.is_empty() {
        return Err(Error::Metric("no fault records to aggregate".into()));
    }
    let thetas: Vec<u32> = faults.iter().map(|r| r.point.theta_deg).collect::<BTreeSet<_>>().into_iter().collect();
    let phis: Vec<u32> = faults.iter().map(|r| r.point.phi_deg).collect::<BTreeSet<_>>().into_iter().collect();

    let mut sums: BTreeMap<GroupKey, Vec<(f64, usize)>> = BTreeMap::new();
    for r in faults {
        let key = group_key(r, grouping).expect("fault record has a site");
        let t = thetas.binary_search(&r.point.theta_deg).unwrap();
        let p = phis.binary_search(&r.point.phi_deg).unwrap();
        let cells = sums.entry(key).or_insert_with(|| vec![(0.0, 0); thetas.len() * phis.len()]);
        let cell = &mut cells[t * phis.len() + p];
        cell.0 += r.qvf;
        cell.1 += 1;
    }

    sums.into_iter()
        .map(|(key, cells)| {
            let cells = cells
                .into_iter()
                .enumerate()
                .map(|(i, (sum, n))| {
                    if n == 0 {
                        Err(Error::Metric(format!(
                            "group {key} has no record at theta={} phi={}",
                            thetas[i / phis.len()],
                            phis[i % phis.len()]
                        )))
                    } else {
                        Ok(sum / n as f64)
                    }
                })
                .collect::<Result<Vec<f64>>>()?;
            Ok(HeatmapGrid {
                key,
                thetas_deg: thetas.clone(),
                phis_deg: phis.clone(),
                cells,
            })
        })
        .collect()
}

/// Cell-wise `a - b`; positive cells mean `a` is more vulnerable.
#[derive(Debug, Clone, PartialEq)]
pub struct DeltaGrid {
    pub thetas_deg: Vec<u32>,
    pub phis_deg: Vec<u32>,
    pub cells: Vec<f64>,
}

impl DeltaGrid {
    pub fn max_abs(&self) -> f64 {
        self.cells.iter().fold(0.0, |m, c| m.max(c.abs()))
    }
}

pub fn delta_qvf(a: &HeatmapGrid, b: &HeatmapGrid) -> Result<DeltaGrid> {
    if a.thetas_deg != b.thetas_deg || a.phis_deg != b.phis_deg {
        return Err(Error::Metric("heatmap axes differ; campaigns must share a grid".into()));
    }
    Ok(DeltaGrid {
        thetas_deg: a.thetas_deg.clone(),
        phis_deg: a.phis_deg.clone(),
        cells: a.cells.iter().zip(&b.cells).map(|(x, y)| x - y).collect(),
    })
}

/// QVF after each site of one qubit, for a fixed fault.
#[derive(Debug, Clone, PartialEq)]
pub struct TimelineSeries {
    pub qubit: usize,
    /// `(gate_index, qvf)` in circuit order.
    pub points: Vec<(usize, f64)>,
}

pub fn timeline(records: &[QvfRecord], point: GridPoint) -> Result<Vec<TimelineSeries>> {
    let mut by_qubit: BTreeMap<usize, Vec<(usize, f64)>> = BTreeMap::new();
    for r in records.iter().filter(|r| r.point == point) {
        if let Some(site) = r.site {
            by_qubit.entry(site.qubit).or_default().push((site.gate_index, r.qvf));
        }
    }
    if by_qubit.is_empty() {
        return Err(Error::Metric(format!("no records at {point}")));
    }
    Ok(by_qubit
        .into_iter()
        .map(|(qubit, mut points)| {
            points.sort_by_key(|p| p.0);
            TimelineSeries { qubit, points }
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct HistogramStats {
    pub mean: f64,
    /// Population standard deviation.
    pub stddev: f64,
    /// Counts over equal-width bins of [0, 1]; 1.0 falls in the last bin.
    pub counts: Vec<u64>,
}

impl HistogramStats {
    pub fn bin_width(&self) -> f64 {
        1.0 / self.counts.len() as f64
    }
}

pub fn histogram_stats(records: &[QvfRecord], bins: usize) -> Result<HistogramStats> {
    if bins == 0 {
        return Err(Error::Metric("histogram needs at least one bin".into()));
    }
    let values: Vec<f64> = records.iter().filter(|r| !r.is_baseline()).map(|r| r.qvf).collect();
    if values.is_empty() {
        return Err(Error::Metric("no fault records for histogram".into()));
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n;
    let mut counts = vec![0u64; bins];
    for v in values {
        let b = ((v.clamp(0.0, 1.0) * bins as f64) as usize).min(bins - 1);
        counts[b] += 1;
    }
    Ok(HistogramStats {
        mean,
        stddev: var.sqrt(),
        counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::injector::{FaultSite, SimMode};

    fn rec(site_index: usize, gate: usize, qubit: usize, t: u32, p: u32, qvf: f64) -> QvfRecord {
        QvfRecord {
            circuit_id: "t".into(),
            site_index: Some(site_index),
            site: Some(FaultSite::new(gate, qubit)),
            point: GridPoint::new(t, p),
            mode: SimMode::Exact,
            shots: 0,
            seed: 0,
            pst: 1.0 - qvf,
            p_b: qvf,
            contrast: 1.0 - 2.0 * qvf,
            qvf,
            baseline_qvf: 0.0,
            improved: false,
        }
    }

    fn records() -> Vec<QvfRecord> {
        let mut v = Vec::new();
        for (si, (g, q)) in [(0usize, 0usize), (1, 1), (2, 0)].into_iter().enumerate() {
            for (t, p) in [(0, 0), (0, 90), (90, 0), (90, 90)] {
                v.push(rec(si, g, q, t, p, (si as f64 + t as f64 / 90.0) / 4.0));
            }
        }
        v
    }

    #[test]
    fn all_grouping_averages_sites() {
        let g = aggregate_heatmap(&records(), Grouping::All).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].thetas_deg, vec![0, 90]);
        assert!((g[0].get(0, 0).unwrap() - 0.25).abs() < 1e-12);
        assert!((g[0].get(90, 90).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn per_qubit_and_per_site() {
        let g = aggregate_heatmap(&records(), Grouping::PerQubit).unwrap();
        assert_eq!(g.iter().map(|x| x.key).collect::<Vec<_>>(), vec![GroupKey::Qubit(0), GroupKey::Qubit(1)]);
        assert!((g[0].get(0, 0).unwrap() - 0.25).abs() < 1e-12);
        let s = aggregate_heatmap(&records(), Grouping::PerSite).unwrap();
        assert_eq!(s.len(), 3);
        assert!((s[2].get(90, 0).unwrap() - 0.75).abs() < 1e-12);
    }

    #[test]
    fn missing_cells_and_empty_input_error() {
        let mut r = records();
        r.pop();
        assert!(aggregate_heatmap(&r, Grouping::PerSite).is_err());
        assert!(aggregate_heatmap(&[], Grouping::All).is_err());
    }

    #[test]
    fn delta_is_cellwise() {
        let a = aggregate_heatmap(&records(), Grouping::All).unwrap().remove(0);
        let mut b = a.clone();
        b.cells[1] += 0.2;
        let d = delta_qvf(&a, &b).unwrap();
        assert!((d.cells[1] + 0.2).abs() < 1e-12);
        let back = delta_qvf(&b, &a).unwrap();
        assert!(d.cells.iter().zip(&back.cells).all(|(x, y)| x == &-y));
        assert!((d.max_abs() - 0.2).abs() < 1e-12);
        b.phis_deg = vec![0, 45];
        assert!(delta_qvf(&a, &b).is_err());
    }

    #[test]
    fn timeline_orders_by_gate() {
        let t = timeline(&records(), GridPoint::new(90, 0)).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].points.iter().map(|p| p.0).collect::<Vec<_>>(), vec![0, 2]);
        assert!(timeline(&records(), GridPoint::new(45, 0)).is_err());
    }

    #[test]
    fn histogram_matches_direct_computation() {
        let r = records();
        let h = histogram_stats(&r, 4).unwrap();
        assert_eq!(h.counts.iter().sum::<u64>(), 12);
        let vals: Vec<f64> = r.iter().map(|x| x.qvf).collect();
        let m = vals.iter().sum::<f64>() / 12.0;
        assert!((h.mean - m).abs() < 1e-12);
        // qvf = 0.75 lands in bin 3, qvf = 1.0 would too
        assert_eq!(h.counts[3], r.iter().filter(|x| x.qvf >= 0.75).count() as u64);
        assert!(histogram_stats(&r, 0).is_err());
    }
}
