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

//! In-place matrix application on a flat amplitude buffer where basis index
//! bit `b` holds the value of one (possibly virtual) qubit.

use super::gate::{ComplexAmp, Matrix2, Matrix4};

pub(crate) fn apply_1q(amps: &mut [ComplexAmp], bit: usize, m: &Matrix2) {
    let stride = 1usize << bit;
    let mut base = 0;
    while base < amps.len() {
        for i in base..base + stride {
            let a0 = amps[i];
            let a1 = amps[i + stride];
            amps[i] = m[0][0] * a0 + m[0][1] * a1;
            amps[i + stride] = m[1][0] * a0 + m[1][1] * a1;
        }
        base += 2 * stride;
    }
}

/// `hi` is the bit of the first target (most significant in `m`).
pub(crate) fn apply_2q(amps: &mut [ComplexAmp], hi: usize, lo: usize, m: &Matrix4) {
    debug_assert_ne!(hi, lo);
    let (mh, ml) = (1usize << hi, 1usize << lo);
    for i in 0..amps.len() {
        if i & (mh | ml) != 0 {
            continue;
        }
        let idx = [i, i | ml, i | mh, i | mh | ml];
        let a = idx.map(|k| amps[k]);
        for (r, &k) in idx.iter().enumerate() {
            amps[k] = m[r][0] * a[0] + m[r][1] * a[1] + m[r][2] * a[2] + m[r][3] * a[3];
        }
    }
}

pub(crate) fn conj2(m: &Matrix2) -> Matrix2 {
    m.map(|row| row.map(|z| z.conj()))
}

pub(crate) fn conj4(m: &Matrix4) -> Matrix4 {
    m.map(|row| row.map(|z| z.conj()))
}
