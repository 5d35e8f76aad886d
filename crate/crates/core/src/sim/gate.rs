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

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4, PI, TAU};
use std::fmt;

use num_complex::Complex64;

use crate::{Error, Result};

/// A single complex amplitude.
pub type ComplexAmp = Complex64;

pub(crate) const ZERO: ComplexAmp = Complex64::new(0.0, 0.0);
pub(crate) const ONE: ComplexAmp = Complex64::new(1.0, 0.0);
pub(crate) const I: ComplexAmp = Complex64::new(0.0, 1.0);

pub type Matrix2 = [[ComplexAmp; 2]; 2];
pub type Matrix4 = [[ComplexAmp; 4]; 4];

/// The supported gate set.
///
/// Two-qubit gates take their targets as `[control, target]`. `U` carries
/// the generic single-qubit unitary
///
/// ```text
/// U(θ, φ, λ) = [ cos(θ/2)          -e^{iλ} sin(θ/2)     ]
///              [ e^{iφ} sin(θ/2)    e^{i(φ+λ)} cos(θ/2) ]
/// ```
///
/// Use [`GateKind::u`] to build it; that constructor checks the parameters
/// are finite and canonicalises them to θ ∈ [0, π], φ, λ ∈ [0, 2π).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GateKind {
    H,
    X,
    Y,
    Z,
    S,
    Sdg,
    T,
    Tdg,
    U { theta: f64, phi: f64, lambda: f64 },
    CX,
    CZ,
}

impl GateKind {
    /// Canonical generic U gate.
    ///
    /// Canonicalisation only changes the matrix by a global phase.
    pub fn u(theta: f64, phi: f64, lambda: f64) -> Result<GateKind> {
        if !(theta.is_finite() && phi.is_finite() && lambda.is_finite()) {
            return Err(Error::InvalidGate(format!(
                "non-finite U parameters ({theta}, {phi}, {lambda})"
            )));
        }
        let (mut theta, mut phi, mut lambda) = (theta.rem_euclid(2.0 * TAU), phi, lambda);
        // U(θ + 2π) = -U(θ)
        if theta > TAU {
            theta -= TAU;
        }
        // U(2π - α, φ, λ) = -U(α, φ + π, λ + π)
        if theta > PI {
            theta = TAU - theta;
            phi += PI;
            lambda += PI;
        }
        Ok(GateKind::U {
            theta,
            phi: wrap_angle(phi),
            lambda: wrap_angle(lambda),
        })
    }

    pub fn arity(&self) -> usize {
        match self {
            GateKind::CX | GateKind::CZ => 2,
            _ => 1,
        }
    }

    /// Lower-case OpenQASM mnemonic, also used as the noise-config key.
    pub fn name(&self) -> &'static str {
        match self {
            GateKind::H => "h",
            GateKind::X => "x",
            GateKind::Y => "y",
            GateKind::Z => "z",
            GateKind::S => "s",
            GateKind::Sdg => "sdg",
            GateKind::T => "t",
            GateKind::Tdg => "tdg",
            GateKind::U { .. } => "u",
            GateKind::CX => "cx",
            GateKind::CZ => "cz",
        }
    }

    /// True when every entry of the gate matrix is real.
    pub fn is_real(&self) -> bool {
        match *self {
            GateKind::H | GateKind::X | GateKind::Z | GateKind::CX | GateKind::CZ => true,
            GateKind::Y | GateKind::S | GateKind::Sdg | GateKind::T | GateKind::Tdg => false,
            GateKind::U { phi, lambda, .. } => {
                (phi == 0.0 || phi == PI) && (lambda == 0.0 || lambda == PI)
            }
        }
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GateKind::U { theta, phi, lambda } => write!(f, "u({theta},{phi},{lambda})"),
            other => f.write_str(other.name()),
        }
    }
}

fn wrap_angle(a: f64) -> f64 {
    let w = a.rem_euclid(TAU);
    // rem_euclid can round up to exactly TAU for tiny negative inputs
    if w >= TAU {
        0.0
    } else {
        w
    }
}

/// Unitary of a gate: 2×2 for single-qubit gates, 4×4 for two-qubit gates.
///
/// Two-qubit matrices are written in the basis |first target, second target⟩
/// with the first target as the most significant bit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GateMatrix {
    One(Matrix2),
    Two(Matrix4),
}

impl GateMatrix {
    pub fn dim(&self) -> usize {
        match self {
            GateMatrix::One(_) => 2,
            GateMatrix::Two(_) => 4,
        }
    }

    pub fn get(&self, row: usize, col: usize) -> ComplexAmp {
        match self {
            GateMatrix::One(m) => m[row][col],
            GateMatrix::Two(m) => m[row][col],
        }
    }

    /// max |(M†M − I)_ij|
    pub fn unitarity_error(&self) -> f64 {
        let n = self.dim();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let mut acc = ZERO;
                for k in 0..n {
                    acc += self.get(k, i).conj() * self.get(k, j);
                }
                if i == j {
                    acc -= ONE;
                }
                worst = worst.max(acc.norm());
            }
        }
        worst
    }
}

/// Matrix of the generic U gate, entry by entry.
pub fn u_matrix(theta: f64, phi: f64, lambda: f64) -> Matrix2 {
    let (s, c) = (theta / 2.0).sin_cos();
    let e_phi = Complex64::from_polar(1.0, phi);
    let e_lambda = Complex64::from_polar(1.0, lambda);
    let e_sum = Complex64::from_polar(1.0, phi + lambda);
    [
        [Complex64::new(c, 0.0), -e_lambda * s],
        [e_phi * s, e_sum * c],
    ]
}

pub fn gate_matrix(kind: &GateKind) -> GateMatrix {
    let r = |x: f64| Complex64::new(x, 0.0);
    match *kind {
        GateKind::H => GateMatrix::One([
            [r(FRAC_1_SQRT_2), r(FRAC_1_SQRT_2)],
            [r(FRAC_1_SQRT_2), r(-FRAC_1_SQRT_2)],
        ]),
        GateKind::X => GateMatrix::One([[ZERO, ONE], [ONE, ZERO]]),
        GateKind::Y => GateMatrix::One([[ZERO, -I], [I, ZERO]]),
        GateKind::Z => GateMatrix::One([[ONE, ZERO], [ZERO, -ONE]]),
        GateKind::S => GateMatrix::One([[ONE, ZERO], [ZERO, I]]),
        GateKind::Sdg => GateMatrix::One([[ONE, ZERO], [ZERO, -I]]),
        GateKind::T => GateMatrix::One([[ONE, ZERO], [ZERO, Complex64::from_polar(1.0, FRAC_PI_4)]]),
        GateKind::Tdg => {
            GateMatrix::One([[ONE, ZERO], [ZERO, Complex64::from_polar(1.0, -FRAC_PI_4)]])
        }
        GateKind::U { theta, phi, lambda } => GateMatrix::One(u_matrix(theta, phi, lambda)),
        GateKind::CX => GateMatrix::Two([
            [ONE, ZERO, ZERO, ZERO],
            [ZERO, ONE, ZERO, ZERO],
            [ZERO, ZERO, ZERO, ONE],
            [ZERO, ZERO, ONE, ZERO],
        ]),
        GateKind::CZ => GateMatrix::Two([
            [ONE, ZERO, ZERO, ZERO],
            [ZERO, ONE, ZERO, ZERO],
            [ZERO, ZERO, ONE, ZERO],
            [ZERO, ZERO, ZERO, -ONE],
        ]),
    }
}
