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

//! Property tests for cross-module invariants.

mod common;

use std::f64::consts::PI;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qvf::circuits::{emit_qasm, parse_qasm, BenchmarkSpec};
use qvf::injector::{
    build_grid, enumerate_sites, inject, run_campaign_collect, CampaignConfig, FaultParams, FaultSpec, SimMode,
};
use qvf::metrics::{aggregate_heatmap, qvf_of_distribution, CorrectStates, Grouping};
use qvf::noise::{
    amplitude_damping, completeness_error, depolarizing, evolve_density, evolve_noisy_exact, phase_damping,
    GateNoise, NoiseModel,
};
use qvf::report::{heatmap_ppm, heatmap_svg, read_records, write_records, HeatmapOptions};
use qvf::sim::{run_exact, sample, GateKind, OutcomeDistribution, StateVector};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_state(rng: &mut ChaCha8Rng, n: usize) -> StateVector {
    let amps: Vec<_> = (0..1 << n)
        .map(|_| num_complex::Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect();
    StateVector::from_amplitudes(n, amps).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn norm_is_preserved(seed in any::<u64>()) {
        let c = common::random_circuit(&mut rng(seed), 5, 40);
        let norm = qvf::sim::evolve(&c).unwrap().norm_sqr();
        prop_assert!((norm - 1.0).abs() <= 1e-10);
    }

    #[test]
    fn u_reproduces_x_and_y(seed in any::<u64>()) {
        let mut r = rng(seed);
        let start = random_state(&mut r, 2);
        let q = r.random_range(0..2);
        let probs = |kind: GateKind| {
            let mut s = start.clone();
            s.apply_gate(kind, &[q]).unwrap();
            s.marginal_probabilities(&[0, 1])
        };
        let close = |a: Vec<f64>, b: Vec<f64>| a.iter().zip(&b).all(|(x, y)| (x - y).abs() < 1e-12);
        prop_assert!(close(probs(GateKind::u(PI, 0.0, PI).unwrap()), probs(GateKind::X)));
        prop_assert!(close(probs(GateKind::u(PI, PI / 2.0, PI / 2.0).unwrap()), probs(GateKind::Y)));
    }

    #[test]
    fn simulator_matches_dense_oracle(seed in any::<u64>()) {
        let c = common::random_circuit(&mut rng(seed), 3, 20);
        let lib = run_exact(&c).unwrap().probabilities();
        for (a, b) in lib.iter().zip(common::oracle_distribution(&c)) {
            prop_assert!((a - b).abs() <= 1e-10);
        }
    }

    #[test]
    fn density_trace_stays_one(seed in any::<u64>()) {
        let c = common::random_circuit(&mut rng(seed), 4, 25);
        let rho = evolve_density(&c, &NoiseModel::representative()).unwrap();
        prop_assert!((rho.trace().re - 1.0).abs() <= 1e-9);
        prop_assert!(rho.trace().im.abs() <= 1e-9);
    }

    #[test]
    fn kraus_sets_are_complete(p in 0.0f64..=1.0) {
        prop_assert!(completeness_error(&amplitude_damping(p)) < 1e-12);
        prop_assert!(completeness_error(&phase_damping(p)) < 1e-12);
        prop_assert!(completeness_error(&depolarizing(p)) < 1e-12);
    }

    #[test]
    fn qasm_round_trip(seed in any::<u64>()) {
        let c = common::random_circuit(&mut rng(seed), 6, 40);
        let back = parse_qasm(&emit_qasm(&c)).unwrap();
        prop_assert_eq!(back.gates(), c.gates());
        prop_assert_eq!(back.measured(), c.measured());
    }

    #[test]
    fn phi_reflection_on_real_circuits(seed in any::<u64>(), theta_deg in 0u32..=180, phi_deg in 0u32..360) {
        let mut r = rng(seed);
        let c = common::random_real_circuit(&mut r, 4, 15);
        let sites = enumerate_sites(&c);
        let site = sites[r.random_range(0..sites.len())];
        let correct = CorrectStates::from_indices(c.n_qubits(), [0]).unwrap();
        let qvf_at = |phi: f64| {
            let params = FaultParams::new((theta_deg as f64).to_radians().min(PI), phi).unwrap();
            let d = run_exact(&inject(&c, &[FaultSpec::new(site, params)]).unwrap()).unwrap();
            qvf_of_distribution(&d, &correct).map(|m| m.qvf).ok()
        };
        let phi = (phi_deg as f64).to_radians();
        let mirror = if phi_deg == 0 { 0.0 } else { 2.0 * PI - phi };
        match (qvf_at(phi), qvf_at(mirror)) {
            (Some(a), Some(b)) => prop_assert!((a - b).abs() <= 1e-10, "{} vs {}", a, b),
            (a, b) => prop_assert_eq!(a.is_some(), b.is_some()),
        }
    }

    #[test]
    fn record_count_is_sites_times_grid(seed in any::<u64>(), step in prop::sample::select(vec![45u32, 60, 90, 120, 180])) {
        let c = common::random_circuit(&mut rng(seed), 3, 6);
        let cfg = CampaignConfig { grid_step_deg: step, ..Default::default() };
        let r = run_campaign_collect(&c, &cfg).unwrap();
        prop_assert_eq!(r.records.len(), enumerate_sites(&c).len() * build_grid(step).unwrap().len());
    }

    #[test]
    fn composition_identity(weights in prop::collection::vec(0.0f64..1.0, 8), mask in 1u8..=255) {
        let total: f64 = weights.iter().sum();
        prop_assume!(total > 1e-6);
        let dist = OutcomeDistribution::exact(3, weights.iter().map(|w| w / total).collect()).unwrap();
        let correct = CorrectStates::from_indices(3, (0..8).filter(|i| mask >> i & 1 == 1)).unwrap();
        if let Ok(m) = qvf_of_distribution(&dist, &correct) {
            prop_assert!((m.qvf - (1.0 - (m.contrast + 1.0) / 2.0)).abs() <= 1e-15);
            prop_assert!((0.0..=1.0).contains(&m.qvf));
        }
    }
}

#[test]
fn sampling_matches_exact_within_five_sigma() {
    let mut r = rng(5);
    let shots = 100_000;
    for i in 0..10 {
        let c = common::random_circuit(&mut r, 4, 20);
        let exact = run_exact(&c).unwrap();
        let sampled = sample(&c, shots, i, None).unwrap();
        for k in 0..exact.len() {
            let p = exact.probability(k);
            let sigma = (p * (1.0 - p) / shots as f64).sqrt().max(1e-12);
            assert!((sampled.probability(k) - p).abs() <= 5.0 * sigma + 1e-12, "state {k}: {p}");
        }
    }
}

#[test]
fn depolarizing_never_helps_point_mass_benchmarks() {
    for spec in BenchmarkSpec::defaults() {
        let c = spec.build().unwrap();
        let correct = c.correct_states().unwrap();
        let mut last = f64::INFINITY;
        for p in [0.0, 0.01, 0.05, 0.2] {
            let model = NoiseModel::ideal()
                .with_default_gate(GateNoise { duration_ns: 0.0, depolarizing_prob: p })
                .unwrap();
            let pst = qvf::metrics::pst(&evolve_noisy_exact(&c, &model).unwrap(), &correct).unwrap();
            assert!(pst <= last + 1e-12, "{} at p={p}: {pst} > {last}", spec.id());
            last = pst;
        }
    }
}

#[test]
fn benchmarks_are_point_masses_with_expected_sites() {
    let want = [13, 18, 18];
    for (spec, sites) in BenchmarkSpec::defaults().iter().zip(want) {
        let c = spec.build().unwrap();
        c.validate().unwrap();
        assert_eq!(enumerate_sites(&c).len(), sites);
        let correct = c.correct_states().unwrap();
        let probs = run_exact(&c).unwrap().probabilities();
        let top = probs.iter().cloned().fold(0.0, f64::max);
        assert!((top - 1.0).abs() < 1e-12);
        assert!(correct.contains(probs.iter().position(|&p| p == top).unwrap()));
    }
}

#[test]
fn heatmap_cells_equal_independent_mean() {
    let bv = BenchmarkSpec::default_bv().build().unwrap();
    let cfg = CampaignConfig { noise: Some(NoiseModel::representative()), grid_step_deg: 45, ..Default::default() };
    let r = run_campaign_collect(&bv, &cfg).unwrap();
    for grouping in [Grouping::All, Grouping::PerQubit] {
        for grid in aggregate_heatmap(&r.records, grouping).unwrap() {
            for &t in &grid.thetas_deg {
                for &p in &grid.phis_deg {
                    let vals: Vec<f64> = r
                        .records
                        .iter()
                        .filter(|x| x.point.theta_deg == t && x.point.phi_deg == p)
                        .filter(|x| match grid.key {
                            qvf::metrics::GroupKey::Qubit(q) => x.site.unwrap().qubit == q,
                            _ => true,
                        })
                        .map(|x| x.qvf)
                        .collect();
                    let mean = vals.iter().fold(0.0, |a, v| a + v) / vals.len() as f64;
                    assert!((grid.get(t, p).unwrap() - mean).abs() < 1e-12);
                }
            }
        }
    }
}

#[test]
fn campaigns_are_schedule_independent_and_render_purely() {
    let grover = BenchmarkSpec::default_grover().build().unwrap();
    let cfg = CampaignConfig {
        noise: Some(NoiseModel::representative()),
        mode: SimMode::Sampled,
        seed: 3,
        grid_step_deg: 30,
        ..Default::default()
    };
    let text = |jobs| {
        let r = run_campaign_collect(&grover, &CampaignConfig { jobs: Some(jobs), ..cfg.clone() }).unwrap();
        let mut all = vec![r.summary.baseline.clone()];
        all.extend(r.records);
        write_records(&all).unwrap()
    };
    let one = text(1);
    assert_eq!(one, text(3));
    let records = read_records(one.as_bytes()).unwrap();
    assert_eq!(write_records(&records).unwrap(), one);
    let grids = aggregate_heatmap(&records, Grouping::PerQubit).unwrap();
    let opts = HeatmapOptions { overlay: true, ..Default::default() };
    assert_eq!(heatmap_svg(&grids, &opts).unwrap(), heatmap_svg(&grids, &opts).unwrap());
    assert_eq!(heatmap_ppm(&grids, &opts).unwrap(), heatmap_ppm(&grids, &opts).unwrap());
}

#[test]
fn late_ancilla_faults_leave_output_unchanged() {
    let bv = BenchmarkSpec::default_bv().build().unwrap();
    let base = run_exact(&bv).unwrap().probabilities();
    let last_touch = bv.gates().iter().rposition(|g| g.kind == GateKind::CX).unwrap();
    let mut r = rng(77);
    for site in enumerate_sites(&bv).into_iter().filter(|s| s.qubit == 3 && s.gate_index > last_touch) {
        for _ in 0..20 {
            let params = FaultParams::new(r.random_range(0.0..=PI), r.random_range(0.0..2.0 * PI)).unwrap();
            let out = run_exact(&inject(&bv, &[FaultSpec::new(site, params)]).unwrap()).unwrap().probabilities();
            assert!(out.iter().zip(&base).all(|(a, b)| (a - b).abs() < 1e-12));
        }
    }
}

