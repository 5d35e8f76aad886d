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

//! Benchmark circuit builders and OpenQASM 2.0 interchange.

mod benchmarks;
mod qasm;

pub use benchmarks::{
    build_bernstein_vazirani, build_deutsch_jozsa, build_grover, build_grover_iterations, BenchmarkSpec,
    DjOracle, BV_DATA_QUBITS, BV_DEFAULT_SITES, DEFAULT_BV_SECRET, DEFAULT_DJ_MASK, DEFAULT_DJ_WRAP,
    DEFAULT_GROVER_MARKED, DJ_DATA_QUBITS, DJ_DEFAULT_SITES, GROVER_DEFAULT_SITES,
};
pub use qasm::{emit_qasm, parse_qasm};
