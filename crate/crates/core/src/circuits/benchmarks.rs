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

//! The three benchmark circuits.
//!
//! All builders use only real gates (H, X, CX), measure the data qubits in
//! index order and attach the correct-state set to the returned circuit.
//!
//! Gate-level constructions (data qubits 0..n, ancilla last):
//!
//! - Bernstein-Vazirani: `X(anc)`, `H` on all qubits, `CX(data_i → anc)` for
//!   every 1 bit of the secret, `H` on all qubits. Sites: 9 + 2·ones, so the
//!   default secret `011` gives 13.
//! - Deutsch-Jozsa: `X(anc)`, `H` on all qubits, oracle, `H` on the data
//!   qubits. The balanced oracle is `X` on the `wrap` qubits, `CX(data_i →
//!   anc)` for every 1 bit of `mask`, then `X` on the `wrap` qubits again.
//!   The default (`mask = 111`, `wrap = 101`) gives 5 + 10 + 3 = 18 sites.
//! - Grover (2 qubits, one iteration): `H H`, phase oracle, diffuser
//!   `H H X X CZ X X H H`, with every CZ written as `H(1) CX(0,1) H(1)`.
//!   The default marked state `11` gives 2 + 4 + 12 = 18 sites.

use crate::sim::{Circuit, GateKind};
use crate::{Error, Result};

pub const BV_DATA_QUBITS: usize = 3;
pub const DJ_DATA_QUBITS: usize = 3;

pub const DEFAULT_BV_SECRET: &str = "011";
pub const DEFAULT_DJ_MASK: &str = "111";
pub const DEFAULT_DJ_WRAP: &str = "101";
pub const DEFAULT_GROVER_MARKED: &str = "11";

/// Fault-site counts of the default benchmarks.
pub const BV_DEFAULT_SITES: usize = 13;
pub const DJ_DEFAULT_SITES: usize = 18;
pub const GROVER_DEFAULT_SITES: usize = 18;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DjOracle {
    /// f(x) = bit
    Constant(bool),
    /// f(x) = mask·x (mod 2); `wrap` qubits are conjugated by X around the
    /// CX ladder, which leaves f unchanged.
    Balanced { mask: String, wrap: String },
}

impl Default for DjOracle {
    fn default() -> Self {
        DjOracle::Balanced {
            mask: DEFAULT_DJ_MASK.into(),
            wrap: DEFAULT_DJ_WRAP.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BenchmarkSpec {
    BernsteinVazirani { secret: String },
    DeutschJozsa { oracle: DjOracle },
    Grover { marked: String, iterations: usize },
}

impl BenchmarkSpec {
    pub fn default_bv() -> Self {
        BenchmarkSpec::BernsteinVazirani {
            secret: DEFAULT_BV_SECRET.into(),
        }
    }

    pub fn default_dj() -> Self {
        BenchmarkSpec::DeutschJozsa {
            oracle: DjOracle::default(),
        }
    }

    pub fn default_grover() -> Self {
        BenchmarkSpec::Grover {
            marked: DEFAULT_GROVER_MARKED.into(),
            iterations: 1,
        }
    }

    /// The three default benchmarks, in report order.
    pub fn defaults() -> [BenchmarkSpec; 3] {
        [Self::default_bv(), Self::default_dj(), Self::default_grover()]
    }

    /// Short identifier used for circuit names and record files.
    pub fn id(&self) -> &'static str {
        match self {
            BenchmarkSpec::BernsteinVazirani { .. } => "bv",
            BenchmarkSpec::DeutschJozsa { .. } => "dj",
            BenchmarkSpec::Grover { .. } => "grover",
        }
    }

    pub fn build(&self) -> Result<Circuit> {
        match self {
            BenchmarkSpec::BernsteinVazirani { secret } => build_bernstein_vazirani(secret),
            BenchmarkSpec::DeutschJozsa { oracle } => build_deutsch_jozsa(oracle),
            BenchmarkSpec::Grover { marked, iterations } => build_grover_iterations(marked, *iterations),
        }
    }
}

fn parse_bits(s: &str, len: usize, what: &str) -> Result<Vec<bool>> {
    if s.len() != len || !s.chars().all(|c| c == '0' || c == '1') {
        return Err(Error::InvalidBenchmark(format!(
            "{what} must be a {len}-bit string, got {s:?}"
        )));
    }
    // character k addresses qubit k
    Ok(s.chars().map(|c| c == '1').collect())
}

fn bitstring(bits: &[bool]) -> String {
    let index = bits.iter().enumerate().fold(0, |acc, (k, &b)| acc | (usize::from(b) << k));
    crate::sim::format_bitstring(index, bits.len())
}

pub fn build_bernstein_vazirani(secret: &str) -> Result<Circuit> {
    let bits = parse_bits(secret, BV_DATA_QUBITS, "secret")?;
    let anc = BV_DATA_QUBITS;
    let mut c = Circuit::new(BV_DATA_QUBITS + 1, (0..BV_DATA_QUBITS).collect())?;
    c.push(GateKind::X, &[anc])?;
    for q in 0..=anc {
        c.push(GateKind::H, &[q])?;
    }
    for (q, _) in bits.iter().enumerate().filter(|(_, &b)| b) {
        c.push(GateKind::CX, &[q, anc])?;
    }
    for q in 0..=anc {
        c.push(GateKind::H, &[q])?;
    }
    c.with_name("bv").with_correct_states([bitstring(&bits)])
}

pub fn build_deutsch_jozsa(oracle: &DjOracle) -> Result<Circuit> {
    let anc = DJ_DATA_QUBITS;
    let mut c = Circuit::new(DJ_DATA_QUBITS + 1, (0..DJ_DATA_QUBITS).collect())?;
    c.push(GateKind::X, &[anc])?;
    for q in 0..=anc {
        c.push(GateKind::H, &[q])?;
    }
    let correct: Vec<String> = match oracle {
        DjOracle::Constant(bit) => {
            if *bit {
                c.push(GateKind::X, &[anc])?;
            }
            vec!["0".repeat(DJ_DATA_QUBITS)]
        }
        DjOracle::Balanced { mask, wrap } => {
            let mask = parse_bits(mask, DJ_DATA_QUBITS, "mask")?;
            let wrap = parse_bits(wrap, DJ_DATA_QUBITS, "wrap")?;
            if !mask.iter().any(|&b| b) {
                return Err(Error::InvalidBenchmark("balanced oracle needs a non-zero mask".into()));
            }
            let wrapped: Vec<usize> = (0..DJ_DATA_QUBITS).filter(|&q| wrap[q]).collect();
            for &q in &wrapped {
                c.push(GateKind::X, &[q])?;
            }
            for q in (0..DJ_DATA_QUBITS).filter(|&q| mask[q]) {
                c.push(GateKind::CX, &[q, anc])?;
            }
            for &q in &wrapped {
                c.push(GateKind::X, &[q])?;
            }
            // any non-zero answer identifies a balanced function
            (1..1usize << DJ_DATA_QUBITS)
                .map(|i| crate::sim::format_bitstring(i, DJ_DATA_QUBITS))
                .collect()
        }
    };
    for q in 0..DJ_DATA_QUBITS {
        c.push(GateKind::H, &[q])?;
    }
    c.with_name("dj").with_correct_states(correct)
}

/// Two-qubit Grover search, one iteration.
pub fn build_grover(marked: &str) -> Result<Circuit> {
    build_grover_iterations(marked, 1)
}

pub fn build_grover_iterations(marked: &str, iterations: usize) -> Result<Circuit> {
    let bits = parse_bits(marked, 2, "marked state")?;
    if iterations == 0 {
        return Err(Error::InvalidBenchmark("Grover needs at least one iteration".into()));
    }
    let mut c = Circuit::measure_all(2)?;
    let cz = |c: &mut Circuit| -> Result<()> {
        c.push(GateKind::H, &[1])?;
        c.push(GateKind::CX, &[0, 1])?;
        c.push(GateKind::H, &[1])?;
        Ok(())
    };
    let layer = |c: &mut Circuit, kind: GateKind, qubits: &[usize]| -> Result<()> {
        for &q in qubits {
            c.push(kind, &[q])?;
        }
        Ok(())
    };
    let zeros: Vec<usize> = (0..2).filter(|&q| !bits[q]).collect();
    layer(&mut c, GateKind::H, &[0, 1])?;
    for _ in 0..iterations {
        // oracle: phase -1 on |marked⟩
        layer(&mut c, GateKind::X, &zeros)?;
        cz(&mut c)?;
        layer(&mut c, GateKind::X, &zeros)?;
        // diffuser
        layer(&mut c, GateKind::H, &[0, 1])?;
        layer(&mut c, GateKind::X, &[0, 1])?;
        cz(&mut c)?;
        layer(&mut c, GateKind::X, &[0, 1])?;
        layer(&mut c, GateKind::H, &[0, 1])?;
    }
    c.with_name("grover").with_correct_states([bitstring(&bits)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::run_exact;

    fn point_mass_on(c: &Circuit, state: &str) {
        let d = run_exact(c).unwrap();
        assert!((d.probability_of(state).unwrap() - 1.0).abs() < 1e-10, "{state}: {:?}", d.probabilities());
    }

    #[test]
    fn bv_reads_out_secret() {
        for s in ["000", "001", "010", "011", "100", "101", "110", "111"] {
            point_mass_on(&build_bernstein_vazirani(s).unwrap(), s);
        }
    }

    #[test]
    fn bv_site_arithmetic() {
        for s in ["000", "011", "111"] {
            let c = build_bernstein_vazirani(s).unwrap();
            let sites: usize = c.gates().iter().map(|g| g.targets.len()).sum();
            let ones = s.chars().filter(|&ch| ch == '1').count();
            assert_eq!(sites, 9 + 2 * ones);
        }
    }

    #[test]
    fn dj_constant_and_balanced() {
        point_mass_on(&build_deutsch_jozsa(&DjOracle::Constant(false)).unwrap(), "000");
        point_mass_on(&build_deutsch_jozsa(&DjOracle::Constant(true)).unwrap(), "000");
        let c = build_deutsch_jozsa(&DjOracle::default()).unwrap();
        assert_eq!(run_exact(&c).unwrap().probability_of("000").unwrap(), 0.0);
        // f(x) = mask·x reads out the mask
        point_mass_on(&c, "111");
        let c = build_deutsch_jozsa(&DjOracle::Balanced { mask: "010".into(), wrap: "000".into() }).unwrap();
        point_mass_on(&c, "010");
    }

    #[test]
    fn grover_finds_every_marked_state() {
        for m in ["00", "01", "10", "11"] {
            point_mass_on(&build_grover(m).unwrap(), m);
        }
    }

    #[test]
    fn invalid_arguments() {
        assert!(build_bernstein_vazirani("01").is_err());
        assert!(build_bernstein_vazirani("0121").is_err());
        assert!(build_grover("1").is_err());
        assert!(build_grover_iterations("11", 0).is_err());
        assert!(build_deutsch_jozsa(&DjOracle::Balanced { mask: "000".into(), wrap: "000".into() }).is_err());
        assert!(build_deutsch_jozsa(&DjOracle::Balanced { mask: "11".into(), wrap: "000".into() }).is_err());
    }

    #[test]
    fn benchmarks_use_real_gates_only() {
        for spec in BenchmarkSpec::defaults() {
            let c = spec.build().unwrap();
            assert!(c.gates().iter().all(|g| g.kind.is_real()), "{}", spec.id());
        }
    }
}
