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

//! Record-file serialization and report rendering.

mod records;
mod render;

pub use records::{
    read_records, read_records_file, write_records, RecordWriter, RECORD_FILE_VERSION, RECORD_HEADER,
};
pub use render::{
    delta_csv, delta_ppm, delta_svg, diverging_color, heatmap_csv, heatmap_ppm, heatmap_svg, histogram_csv,
    histogram_svg, timeline_csv, timeline_svg, ColorScale, HeatmapOptions, Rgb, REFERENCE_GATES,
};
