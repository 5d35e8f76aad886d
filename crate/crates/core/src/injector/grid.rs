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

use std::f64::consts::PI;
use std::fmt;

use super::FaultParams;
use crate::{Error, Result};

pub const DEFAULT_GRID_STEP_DEG: u32 = 15;

/// One (θ, φ) shift of the injection grid, in whole degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridPoint {
    pub theta_deg: u32,
    pub phi_deg: u32,
}

impl GridPoint {
    pub fn new(theta_deg: u32, phi_deg: u32) -> GridPoint {
        GridPoint { theta_deg, phi_deg }
    }

    pub fn params(&self) -> Result<FaultParams> {
        let theta = (self.theta_deg as f64 * PI / 180.0).min(PI);
        FaultParams::new(theta, self.phi_deg as f64 * PI / 180.0)
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "θ={}° φ={}°", self.theta_deg, self.phi_deg)
    }
}

/// All shifts with φ ∈ {0, step, …, 360 − step} and θ ∈ {0, step, …} up to
/// 180, ordered θ-major (θ outer, φ inner). The first point is (0, 0).
pub fn build_grid(step_deg: u32) -> Result<Vec<GridPoint>> {
    if step_deg == 0 || 360 % step_deg != 0 {
        return Err(Error::GridStep(step_deg));
    }
    let thetas = (0..=180).step_by(step_deg as usize);
    Ok(thetas
        .flat_map(|t| (0..360).step_by(step_deg as usize).map(move |p| GridPoint::new(t, p)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_sizes() {
        assert_eq!(build_grid(15).unwrap().len(), 312);
        assert_eq!(build_grid(90).unwrap().len(), 12);
        assert_eq!(build_grid(15).unwrap()[0], GridPoint::new(0, 0));
        assert_eq!(build_grid(15).unwrap()[1], GridPoint::new(0, 15));
        assert_eq!(build_grid(15).unwrap()[24], GridPoint::new(15, 0));
    }

    #[test]
    fn bad_steps() {
        assert!(matches!(build_grid(7), Err(Error::GridStep(7))));
        assert!(build_grid(0).is_err());
    }

    #[test]
    fn every_point_has_valid_params() {
        for p in build_grid(15).unwrap() {
            let f = p.params().unwrap();
            assert!(f.theta() <= PI);
        }
        assert_eq!(GridPoint::new(180, 0).params().unwrap().theta(), PI);
    }
}
