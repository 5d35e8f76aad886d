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

//! Success metrics and campaign aggregation.

mod aggregate;
mod qvf;

pub use aggregate::{
    aggregate_heatmap, delta_qvf, histogram_stats, timeline, DeltaGrid, GroupKey, Grouping, HeatmapGrid,
    HistogramStats, TimelineSeries, DEFAULT_HISTOGRAM_BINS,
};
pub use qvf::{
    contrast_from, max_incorrect, michelson_contrast, pst, qvf, qvf_of_distribution, CorrectStates, QvfMetrics,
};
