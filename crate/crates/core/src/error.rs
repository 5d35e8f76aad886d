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

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A QASM syntax or semantic error, located in the source text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QasmError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl QasmError {
    pub(crate) fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        QasmError {
            line,
            column,
            message: message.into(),
        }
    }
}

impl fmt::Display for QasmError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for QasmError {}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("qubit index {index} out of range for a {n_qubits}-qubit register")]
    QubitOutOfRange { index: usize, n_qubits: usize },

    #[error("invalid circuit: {0}")]
    InvalidCircuit(String),

    #[error("invalid gate: {0}")]
    InvalidGate(String),

    #[error("qasm: {0}")]
    Qasm(#[from] QasmError),

    #[error("invalid noise configuration: {0}")]
    NoiseConfig(String),

    #[error("density matrix invariant violated: {0}")]
    DensityInvariant(String),

    #[error("shots must be at least 1")]
    ZeroShots,

    #[error("invalid benchmark: {0}")]
    InvalidBenchmark(String),

    #[error("invalid fault: {0}")]
    InvalidFault(String),

    #[error("grid step {0} degrees does not divide 360")]
    GridStep(u32),

    #[error("{0}")]
    Metric(String),

    #[error("campaign aborted at fault {fault}: {source}")]
    Campaign {
        fault: String,
        #[source]
        source: Box<Error>,
    },

    #[error("record file: {0}")]
    RecordFile(String),

    #[error("report: {0}")]
    Report(String),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Coarse classification used to pick process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Malformed input documents: QASM, noise configs, record files, arguments.
    Parse,
    /// Invalid circuits, faults or numerical failures while simulating.
    Simulation,
    Io,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Qasm(_)
            | Error::NoiseConfig(_)
            | Error::RecordFile(_)
            | Error::InvalidBenchmark(_)
            | Error::GridStep(_)
            | Error::Report(_) => ErrorClass::Parse,
            Error::Csv(e) if e.is_io_error() => ErrorClass::Io,
            Error::Csv(_) => ErrorClass::Parse,
            Error::Io(_) => ErrorClass::Io,
            Error::Campaign { source, .. } => source.class(),
            Error::QubitOutOfRange { .. }
            | Error::InvalidCircuit(_)
            | Error::InvalidGate(_)
            | Error::DensityInvariant(_)
            | Error::ZeroShots
            | Error::InvalidFault(_)
            | Error::Metric(_) => ErrorClass::Simulation,
        }
    }
}
