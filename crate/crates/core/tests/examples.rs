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

//! Runs every example end to end.

macro_rules! example {
    ($name:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!("../examples/", $file));
        }

        #[test]
        fn $name() {
            $name::run().unwrap();
        }
    };
}

example!(simulate_circuit, "simulate_circuit.rs");
example!(benchmarks, "benchmarks.rs");
example!(qasm_roundtrip, "qasm_roundtrip.rs");
example!(noise_model, "noise_model.rs");
example!(inject_fault, "inject_fault.rs");
example!(campaign, "campaign.rs");
example!(heatmap_report, "heatmap_report.rs");
example!(qubit_timeline, "qubit_timeline.rs");
example!(metrics, "metrics.rs");
