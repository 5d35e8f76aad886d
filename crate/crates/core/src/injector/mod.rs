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

//! Fault sites, the injection grid, U-gate fault insertion and campaigns.

mod campaign;
mod fault;
mod grid;

pub use campaign::{
    correct_states_for, run_campaign, run_campaign_collect, Campaign, CampaignConfig, CampaignResult,
    CampaignSummary, QvfRecord, SimMode, SiteSelection, IMPROVEMENT_EPSILON,
};
pub use fault::{enumerate_sites, inject, FaultParams, FaultSite, FaultSpec};
pub use grid::{build_grid, GridPoint, DEFAULT_GRID_STEP_DEG};
