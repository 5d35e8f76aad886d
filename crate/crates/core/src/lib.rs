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

//! Fault injection and Quantum Vulnerability Factor (QVF) analysis for small
//! quantum circuits.
//!
//! The crate is organised bottom-up:
//!
//! - [`sim`]: exact state-vector simulation, gate matrices and seeded shot sampling.
//! - [`noise`]: a parametric T1/T2, depolarizing and readout noise model evolved
//!   exactly on a density matrix.
//! - [`circuits`]: the Bernstein-Vazirani, Deutsch-Jozsa and Grover benchmark
//!   builders and an OpenQASM 2.0 subset parser/emitter.
//! - [`injector`]: fault-site enumeration, the (θ, φ) injection grid, U-gate fault
//!   insertion and parallel, deterministic campaigns.
//! - [`metrics`]: PST, Michelson contrast, QVF and campaign aggregations.
//! - [`report`]: the versioned record CSV and SVG/PPM/CSV renderers.
//! - [`cli`]: the `qvf` command-line front end.
//!
//! ```
//! use qvf::circuits::build_bernstein_vazirani;
//! use qvf::injector::{inject, FaultParams, FaultSite, FaultSpec};
//! use qvf::metrics::qvf_of_distribution;
//! use qvf::sim::run_exact;
//!
//! let bv = build_bernstein_vazirani("011").unwrap();
//! let correct = bv.correct_states().unwrap();
//! // Flip data qubit 0 right after its first Hadamard.
//! let fault = FaultSpec::new(FaultSite::new(1, 0), FaultParams::new(std::f64::consts::PI, 0.0).unwrap());
//! let faulty = inject(&bv, &[fault]).unwrap();
//! let m = qvf_of_distribution(&run_exact(&faulty).unwrap(), &correct).unwrap();
//! assert!((m.qvf - 1.0).abs() < 1e-10);
//! ```

pub mod circuits;
pub mod cli;
mod error;
pub mod injector;
pub mod metrics;
pub mod noise;
pub mod report;
pub mod sim;

pub use error::{Error, ErrorClass, QasmError, Result};
