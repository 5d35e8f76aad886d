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

//! OpenQASM 2.0 subset.
//!
//! Accepted programs contain an optional `OPENQASM 2.0;` header, an optional
//! `include "qelib1.inc";`, exactly one `qreg`, at most one `creg`, gate
//! statements and trailing `measure` statements. Supported gates are
//! `h x y z s sdg t tdg cx cz`, the generic `u(θ,φ,λ)` (also spelled `u3`
//! or `U`), `u1(λ)`, `u2(φ,λ)` and `p(λ)`; `barrier` is accepted and
//! ignored. Parameters are arithmetic over decimal literals and `pi`
//! (`-3*pi/4`, `pi/2`, `0.125`, `1e-3`).
//!
//! Measurements are `measure q[i] -> c[k];` (or `measure q -> c;` for the
//! whole register); output bit `k` is classical bit `c[k]`, and every
//! classical bit must be written exactly once. A program with no
//! measurement measures all qubits in order.
//!
//! Three comment pragmas carry circuit metadata across a round trip:
//! `// qvf:name <id>`, `// qvf:correct <bits>[,<bits>...]`, and a trailing
//! `// qvf:fault` on a `u` line marking an injected fault.

use std::f64::consts::PI;
use std::fmt::Write as _;

use crate::sim::{Circuit, Gate, GateKind};
use crate::{QasmError, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Number(f64),
    Str(String),
    Sym(char),
    Arrow,
    Pragma(String),
    Eof,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(src: &str) -> std::result::Result<Vec<Token>, QasmError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    macro_rules! bump {
        () => {{
            if chars[i] == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            i += 1;
        }};
    }
    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (line, col);
        if c.is_whitespace() {
            bump!();
        } else if c == '/' && chars.get(i + 1) == Some(&'/') {
            let start = i;
            while i < chars.len() && chars[i] != '\n' {
                bump!();
            }
            let text: String = chars[start + 2..i].iter().collect();
            if let Some(rest) = text.trim().strip_prefix("qvf:") {
                out.push(Token { tok: Tok::Pragma(rest.trim().to_string()), line: tl, col: tc });
            }
        } else if c == '/' && chars.get(i + 1) == Some(&'*') {
            bump!();
            bump!();
            loop {
                if i + 1 >= chars.len() {
                    return Err(QasmError::new(tl, tc, "unterminated block comment"));
                }
                if chars[i] == '*' && chars[i + 1] == '/' {
                    bump!();
                    bump!();
                    break;
                }
                bump!();
            }
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                bump!();
            }
            out.push(Token { tok: Tok::Ident(chars[start..i].iter().collect()), line: tl, col: tc });
        } else if c.is_ascii_digit() || (c == '.' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit())) {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                bump!();
            }
            if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                let save = (i, line, col);
                bump!();
                if i < chars.len() && (chars[i] == '+' || chars[i] == '-') {
                    bump!();
                }
                if i < chars.len() && chars[i].is_ascii_digit() {
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        bump!();
                    }
                } else {
                    (i, line, col) = save;
                }
            }
            let text: String = chars[start..i].iter().collect();
            let value = text
                .parse::<f64>()
                .map_err(|_| QasmError::new(tl, tc, format!("malformed number {text:?}")))?;
            out.push(Token { tok: Tok::Number(value), line: tl, col: tc });
        } else if c == '"' {
            bump!();
            let start = i;
            while i < chars.len() && chars[i] != '"' && chars[i] != '\n' {
                bump!();
            }
            if i >= chars.len() || chars[i] != '"' {
                return Err(QasmError::new(tl, tc, "unterminated string"));
            }
            let s: String = chars[start..i].iter().collect();
            bump!();
            out.push(Token { tok: Tok::Str(s), line: tl, col: tc });
        } else if c == '-' && chars.get(i + 1) == Some(&'>') {
            bump!();
            bump!();
            out.push(Token { tok: Tok::Arrow, line: tl, col: tc });
        } else if ";,()[]+-*/".contains(c) {
            bump!();
            out.push(Token { tok: Tok::Sym(c), line: tl, col: tc });
        } else {
            return Err(QasmError::new(tl, tc, format!("unexpected character {c:?}")));
        }
    }
    out.push(Token { tok: Tok::Eof, line, col });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

type PResult<T> = std::result::Result<T, QasmError>;

struct Register {
    name: String,
    size: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, t: &Token, msg: impl Into<String>) -> PResult<T> {
        Err(QasmError::new(t.line, t.col, msg))
    }

    fn expect_sym(&mut self, c: char) -> PResult<Token> {
        let t = self.next();
        if t.tok == Tok::Sym(c) {
            Ok(t)
        } else {
            self.err(&t, format!("expected '{c}', found {}", describe(&t.tok)))
        }
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.peek().tok == Tok::Sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> PResult<(String, Token)> {
        let t = self.next();
        match &t.tok {
            Tok::Ident(s) => Ok((s.clone(), t.clone())),
            other => self.err(&t, format!("expected identifier, found {}", describe(other))),
        }
    }

    fn integer(&mut self) -> PResult<usize> {
        let t = self.next();
        match t.tok {
            Tok::Number(v) if v >= 0.0 && v.fract() == 0.0 && v < 1e9 => Ok(v as usize),
            ref other => self.err(&t, format!("expected integer, found {}", describe(other))),
        }
    }

    // expr := term (('+' | '-') term)*
    fn expr(&mut self) -> PResult<f64> {
        let mut v = self.term()?;
        loop {
            if self.eat_sym('+') {
                v += self.term()?;
            } else if self.eat_sym('-') {
                v -= self.term()?;
            } else {
                return Ok(v);
            }
        }
    }

    // term := factor (('*' | '/') factor)*
    fn term(&mut self) -> PResult<f64> {
        let mut v = self.factor()?;
        loop {
            if self.eat_sym('*') {
                v *= self.factor()?;
            } else if self.peek().tok == Tok::Sym('/') {
                let t = self.next();
                let d = self.factor()?;
                if d == 0.0 {
                    return self.err(&t, "division by zero in parameter");
                }
                v /= d;
            } else {
                return Ok(v);
            }
        }
    }

    fn factor(&mut self) -> PResult<f64> {
        let t = self.next();
        match &t.tok {
            Tok::Sym('-') => Ok(-self.factor()?),
            Tok::Sym('+') => self.factor(),
            Tok::Number(v) => Ok(*v),
            Tok::Ident(s) if s == "pi" => Ok(PI),
            Tok::Sym('(') => {
                let v = self.expr()?;
                self.expect_sym(')')?;
                Ok(v)
            }
            other => self.err(&t, format!("malformed parameter expression at {}", describe(other))),
        }
    }

    fn index(&mut self, reg: &Register) -> PResult<usize> {
        let (name, t) = self.ident()?;
        if name != reg.name {
            return self.err(&t, format!("unknown register {name:?}"));
        }
        self.expect_sym('[')?;
        let it = self.peek().clone();
        let i = self.integer()?;
        self.expect_sym(']')?;
        if i >= reg.size {
            return self.err(&it, format!("index {i} out of range for {}[{}]", reg.name, reg.size));
        }
        Ok(i)
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("'{s}'"),
        Tok::Number(v) => format!("number {v}"),
        Tok::Str(s) => format!("string {s:?}"),
        Tok::Sym(c) => format!("'{c}'"),
        Tok::Arrow => "'->'".into(),
        Tok::Pragma(p) => format!("pragma {p:?}"),
        Tok::Eof => "end of input".into(),
    }
}

fn gate_from_name(name: &str, params: &[f64]) -> Option<std::result::Result<GateKind, String>> {
    let fixed = |k: GateKind| {
        Some(if params.is_empty() {
            Ok(k)
        } else {
            Err(format!("gate {name} takes no parameters, got {}", params.len()))
        })
    };
    let u = |n: usize, f: &dyn Fn(&[f64]) -> (f64, f64, f64)| {
        Some(if params.len() == n {
            let (t, p, l) = f(params);
            GateKind::u(t, p, l).map_err(|e| e.to_string())
        } else {
            Err(format!("gate {name} takes {n} parameter(s), got {}", params.len()))
        })
    };
    match name {
        "h" => fixed(GateKind::H),
        "x" => fixed(GateKind::X),
        "y" => fixed(GateKind::Y),
        "z" => fixed(GateKind::Z),
        "s" => fixed(GateKind::S),
        "sdg" => fixed(GateKind::Sdg),
        "t" => fixed(GateKind::T),
        "tdg" => fixed(GateKind::Tdg),
        "cx" | "CX" => fixed(GateKind::CX),
        "cz" => fixed(GateKind::CZ),
        "u" | "u3" | "U" => u(3, &|p| (p[0], p[1], p[2])),
        "u2" => u(2, &|p| (PI / 2.0, p[0], p[1])),
        "u1" | "p" => u(1, &|p| (0.0, 0.0, p[0])),
        _ => None,
    }
}

/// Parse a program in the supported subset.
pub fn parse_qasm(src: &str) -> Result<Circuit> {
    Ok(parse(src)?)
}

fn parse(src: &str) -> PResult<Circuit> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let mut name: Option<String> = None;
    let mut correct: Option<Vec<String>> = None;
    let mut qreg: Option<Register> = None;
    let mut creg: Option<Register> = None;
    let mut gates: Vec<Gate> = Vec::new();
    let mut meas: Vec<Option<usize>> = Vec::new();
    let mut any_measure = false;
    let mut first_stmt = true;

    loop {
        let t = p.next();
        let word = match &t.tok {
            Tok::Eof => break,
            Tok::Pragma(text) => {
                let (key, value) = text.split_once(char::is_whitespace).unwrap_or((text.as_str(), ""));
                match key {
                    "name" => name = Some(value.trim().to_string()),
                    "correct" => {
                        correct = Some(value.split(',').map(|s| s.trim().to_string()).collect())
                    }
                    "fault" => return p.err(&t, "qvf:fault pragma must follow a u gate on the same line"),
                    _ => return p.err(&t, format!("unknown pragma qvf:{key}")),
                }
                continue;
            }
            Tok::Ident(w) => w.clone(),
            other => return p.err(&t, format!("expected statement, found {}", describe(other))),
        };
        let is_first = std::mem::replace(&mut first_stmt, false);
        match word.as_str() {
            "OPENQASM" => {
                if !is_first {
                    return p.err(&t, "OPENQASM header must come first");
                }
                let vt = p.next();
                if vt.tok != Tok::Number(2.0) {
                    return p.err(&vt, "only OPENQASM 2.0 is supported");
                }
                p.expect_sym(';')?;
            }
            "include" => {
                let st = p.next();
                match &st.tok {
                    Tok::Str(s) if s == "qelib1.inc" => {}
                    _ => return p.err(&st, "only include \"qelib1.inc\" is supported"),
                }
                p.expect_sym(';')?;
            }
            "qreg" | "creg" => {
                let (rname, _) = p.ident()?;
                p.expect_sym('[')?;
                let st = p.peek().clone();
                let size = p.integer()?;
                p.expect_sym(']')?;
                p.expect_sym(';')?;
                if size == 0 {
                    return p.err(&st, "register size must be positive");
                }
                let slot = if word == "qreg" { &mut qreg } else { &mut creg };
                if slot.is_some() {
                    return p.err(&t, format!("only one {word} is supported"));
                }
                if word == "creg" {
                    meas = vec![None; size];
                }
                *slot = Some(Register { name: rname, size });
            }
            "measure" => {
                any_measure = true;
                let Some(q) = qreg.as_ref() else { return p.err(&t, "measure before qreg") };
                let Some(c) = creg.as_ref() else { return p.err(&t, "measure without creg") };
                let whole = matches!(p.toks.get(p.pos + 1).map(|x| &x.tok), Some(Tok::Arrow));
                if whole {
                    let (qn, qt) = p.ident()?;
                    if qn != q.name {
                        return p.err(&qt, format!("unknown register {qn:?}"));
                    }
                    p.next();
                    let (cn, ct) = p.ident()?;
                    if cn != c.name {
                        return p.err(&ct, format!("unknown register {cn:?}"));
                    }
                    if q.size != c.size {
                        return p.err(&t, "register-wide measure needs equal register sizes");
                    }
                    p.expect_sym(';')?;
                    for (k, slot) in meas.iter_mut().enumerate() {
                        if slot.replace(k).is_some() {
                            return p.err(&t, format!("classical bit {k} written twice"));
                        }
                    }
                } else {
                    let qi = p.index(q)?;
                    let at = p.next();
                    if at.tok != Tok::Arrow {
                        return p.err(&at, format!("expected '->', found {}", describe(&at.tok)));
                    }
                    let ct = p.peek().clone();
                    let ci = p.index(c)?;
                    p.expect_sym(';')?;
                    if meas[ci].replace(qi).is_some() {
                        return p.err(&ct, format!("classical bit {ci} written twice"));
                    }
                }
            }
            "barrier" => {
                while !p.eat_sym(';') {
                    if p.next().tok == Tok::Eof {
                        return p.err(&t, "unterminated barrier");
                    }
                }
            }
            gate_name => {
                let mut params = Vec::new();
                if p.eat_sym('(') {
                    if !p.eat_sym(')') {
                        loop {
                            params.push(p.expr()?);
                            if p.eat_sym(')') {
                                break;
                            }
                            p.expect_sym(',')?;
                        }
                    }
                }
                let kind = match gate_from_name(gate_name, &params) {
                    None => return p.err(&t, format!("unknown gate {gate_name:?}")),
                    Some(Err(msg)) => return p.err(&t, msg),
                    Some(Ok(k)) => k,
                };
                let Some(q) = qreg.as_ref() else { return p.err(&t, "gate before qreg") };
                if any_measure {
                    return p.err(&t, "gates after measurement are not supported");
                }
                let mut targets = vec![p.index(q)?];
                while p.eat_sym(',') {
                    targets.push(p.index(q)?);
                }
                let semi = p.expect_sym(';')?;
                if targets.len() != kind.arity() {
                    return p.err(
                        &t,
                        format!("gate {gate_name} expects {} qubit(s), got {}", kind.arity(), targets.len()),
                    );
                }
                if targets.len() == 2 && targets[0] == targets[1] {
                    return p.err(&t, format!("gate {gate_name} needs two distinct qubits"));
                }
                let mut gate = Gate::new(kind, targets);
                if let Tok::Pragma(text) = &p.peek().tok {
                    if text == "fault" && p.peek().line == semi.line {
                        if !matches!(kind, GateKind::U { .. }) {
                            return p.err(p.peek(), "qvf:fault can only mark a u gate");
                        }
                        gate.injected = true;
                        p.pos += 1;
                    }
                }
                gates.push(gate);
            }
        }
    }

    let Some(q) = qreg else {
        return Err(QasmError::new(1, 1, "program declares no qreg"));
    };
    let measured: Vec<usize> = if any_measure {
        meas.iter()
            .enumerate()
            .map(|(k, m)| m.ok_or_else(|| QasmError::new(1, 1, format!("classical bit c[{k}] is never measured"))))
            .collect::<PResult<_>>()?
    } else {
        (0..q.size).collect()
    };
    let at_start = |e: crate::Error| QasmError::new(1, 1, e.to_string());
    let mut circuit = Circuit::new(q.size, measured).map_err(at_start)?;
    for g in gates {
        circuit.push_gate(g).map_err(at_start)?;
    }
    if let Some(n) = name {
        circuit = circuit.with_name(n);
    }
    if let Some(c) = correct {
        circuit = circuit.with_correct_states(c).map_err(at_start)?;
    }
    Ok(circuit)
}

/// Serialise a circuit. `parse_qasm(&emit_qasm(c))` reproduces the gate
/// list, measurement map and metadata exactly.
pub fn emit_qasm(circuit: &Circuit) -> String {
    let mut out = String::from("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n");
    if let Some(name) = circuit.name() {
        let _ = writeln!(out, "// qvf:name {name}");
    }
    if let Some(correct) = circuit.correct_state_strings() {
        let _ = writeln!(out, "// qvf:correct {}", correct.join(","));
    }
    let _ = writeln!(out, "qreg q[{}];", circuit.n_qubits());
    let _ = writeln!(out, "creg c[{}];", circuit.measured().len());
    for g in circuit.gates() {
        match g.kind {
            GateKind::U { theta, phi, lambda } => {
                let _ = write!(out, "u({theta},{phi},{lambda})");
            }
            k => out.push_str(k.name()),
        }
        let args: Vec<String> = g.targets.iter().map(|t| format!("q[{t}]")).collect();
        let _ = write!(out, " {};", args.join(","));
        if g.injected {
            out.push_str(" // qvf:fault");
        }
        out.push('\n');
    }
    for (k, q) in circuit.measured().iter().enumerate() {
        let _ = writeln!(out, "measure q[{q}] -> c[{k}];");
    }
    out
}
