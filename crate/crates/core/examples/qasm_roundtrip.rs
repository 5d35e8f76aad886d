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

// Parse an OpenQASM 2.0 program, run it, and emit it back.

use qvf::circuits::{emit_qasm, parse_qasm};
use qvf::sim::run_exact;

const SOURCE: &str = r#"OPENQASM 2.0;
include "qelib1.inc";
// qvf:name ghz
// qvf:correct 000,111
qreg q[3];
creg c[3];
h q[0];
cx q[0],q[1];
cx q[1],q[2];
u3(pi/8, 0, pi) q[2];
u3(-pi/8, pi, 0) q[2];
measure q -> c;
"#;

pub fn run() -> qvf::Result<()> {
    let circuit = parse_qasm(SOURCE)?;
    println!("{} qubits, {} gates", circuit.n_qubits(), circuit.gates().len());
    for (bits, p) in run_exact(&circuit)?.iter().filter(|(_, p)| *p > 1e-12) {
        println!("P({bits}) = {p:.4}");
    }
    let emitted = emit_qasm(&circuit);
    assert_eq!(parse_qasm(&emitted)?.gates(), circuit.gates());
    print!("{emitted}");

    match parse_qasm("qreg q[1];\nh q[4];\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> qvf::Result<()> {
    run()
}
