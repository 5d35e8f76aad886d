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

use std::fmt::Write as _;

use crate::injector::GridPoint;
use crate::metrics::{DeltaGrid, HeatmapGrid, HistogramStats, TimelineSeries};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rgb(pub u8, pub u8, pub u8);

impl Rgb {
    pub const WHITE: Rgb = Rgb(255, 255, 255);
    pub const GREEN: Rgb = Rgb(0, 150, 60);
    pub const RED: Rgb = Rgb(200, 20, 30);
    pub const BLUE: Rgb = Rgb(30, 70, 200);

    fn hex(self) -> String {
        format!("#{:02x}{:02x}{:02x}", self.0, self.1, self.2)
    }

    fn lerp(a: Rgb, b: Rgb, t: f64) -> Rgb {
        let t = t.clamp(0.0, 1.0);
        let mix = |x: u8, y: u8| (x as f64 + (y as f64 - x as f64) * t).round() as u8;
        Rgb(mix(a.0, b.0), mix(a.1, b.1), mix(a.2, b.2))
    }
}

/// QVF colouring: green below `green_below`, red above `red_above`, pure
/// white in between, deepening linearly towards 0 and 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ColorScale {
    pub green_below: f64,
    pub red_above: f64,
}

impl Default for ColorScale {
    fn default() -> Self {
        ColorScale {
            green_below: 0.45,
            red_above: 0.55,
        }
    }
}

impl ColorScale {
    pub fn new(green_below: f64, red_above: f64) -> Result<Self> {
        if !(0.0 < green_below && green_below <= red_above && red_above < 1.0) {
            return Err(Error::Report(format!(
                "colour thresholds must satisfy 0 < green <= red < 1, got {green_below} and {red_above}"
            )));
        }
        Ok(ColorScale { green_below, red_above })
    }

    pub fn color(&self, qvf: f64) -> Rgb {
        if qvf < self.green_below {
            Rgb::lerp(Rgb::WHITE, Rgb::GREEN, (self.green_below - qvf) / self.green_below)
        } else if qvf > self.red_above {
            Rgb::lerp(Rgb::WHITE, Rgb::RED, (qvf - self.red_above) / (1.0 - self.red_above))
        } else {
            Rgb::WHITE
        }
    }
}

/// Blue for negative deltas, red for positive, white at zero; saturates at ±1.
pub fn diverging_color(delta: f64) -> Rgb {
    if delta < 0.0 {
        Rgb::lerp(Rgb::WHITE, Rgb::BLUE, -delta)
    } else {
        Rgb::lerp(Rgb::WHITE, Rgb::RED, delta)
    }
}

/// Reference gates expressed as (θ, φ) faults, in degrees.
pub const REFERENCE_GATES: [(&str, u32, u32); 5] =
    [("Y", 180, 0), ("X", 180, 180), ("Z", 0, 180), ("S", 0, 90), ("T", 0, 45)];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeatmapOptions {
    pub scale: ColorScale,
    /// Mark the cells matching [`REFERENCE_GATES`].
    pub overlay: bool,
    /// Side of one cell in pixels.
    pub cell_px: u32,
}

impl Default for HeatmapOptions {
    fn default() -> Self {
        HeatmapOptions {
            scale: ColorScale::default(),
            overlay: false,
            cell_px: 16,
        }
    }
}

struct Panel<'a> {
    title: String,
    thetas: &'a [u32],
    phis: &'a [u32],
    colors: Vec<Rgb>,
}

impl Panel<'_> {
    fn rows(&self) -> usize {
        self.thetas.len()
    }

    fn cols(&self) -> usize {
        self.phis.len()
    }

    /// Colour at image row `r` (top to bottom), column `c`. θ grows upwards.
    fn at(&self, r: usize, c: usize) -> Rgb {
        self.colors[(self.rows() - 1 - r) * self.cols() + c]
    }
}

const MARGIN_LEFT: u32 = 48;
const MARGIN_TOP: u32 = 28;
const MARGIN_BOTTOM: u32 = 36;
const PANEL_GAP: u32 = 24;

fn panels_svg(panels: &[Panel], cell: u32, overlay: bool, legend: &str) -> String {
    let widths: Vec<u32> = panels.iter().map(|p| p.cols() as u32 * cell).collect();
    let height = panels.iter().map(|p| p.rows() as u32 * cell).max().unwrap_or(0);
    let total_w = MARGIN_LEFT + widths.iter().sum::<u32>() + PANEL_GAP * panels.len() as u32;
    let total_h = MARGIN_TOP + height + MARGIN_BOTTOM;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{total_w}" height="{total_h}" viewBox="0 0 {total_w} {total_h}" font-family="sans-serif" font-size="10">"#
    );
    let _ = writeln!(s, r##"<rect width="{total_w}" height="{total_h}" fill="#ffffff"/>"##);
    let mut x0 = MARGIN_LEFT;
    for (panel, w) in panels.iter().zip(&widths) {
        let h = panel.rows() as u32 * cell;
        let y0 = MARGIN_TOP + height - h;
        let _ = writeln!(s, r#"<text x="{}" y="{}" text-anchor="middle" font-size="12">{}</text>"#, x0 + w / 2, MARGIN_TOP - 10, panel.title);
        for r in 0..panel.rows() {
            for c in 0..panel.cols() {
                let _ = writeln!(
                    s,
                    r#"<rect x="{}" y="{}" width="{cell}" height="{cell}" fill="{}"/>"#,
                    x0 + c as u32 * cell,
                    y0 + r as u32 * cell,
                    panel.at(r, c).hex()
                );
            }
        }
        let _ = writeln!(s, r##"<rect x="{x0}" y="{y0}" width="{w}" height="{h}" fill="none" stroke="#444444"/>"##);
        for (c, phi) in panel.phis.iter().enumerate().filter(|(_, p)| *p % 90 == 0) {
            let _ = writeln!(
                s,
                r#"<text x="{}" y="{}" text-anchor="middle">{phi}</text>"#,
                x0 + c as u32 * cell + cell / 2,
                y0 + h + 12
            );
        }
        for (t, theta) in panel.thetas.iter().enumerate().filter(|(_, t)| *t % 90 == 0) {
            let _ = writeln!(
                s,
                r#"<text x="{}" y="{}" text-anchor="end">{theta}</text>"#,
                x0 - 4,
                y0 + h - t as u32 * cell - cell / 2 + 3
            );
        }
        if overlay {
            for (name, theta, phi) in REFERENCE_GATES {
                let (Some(t), Some(c)) = (
                    panel.thetas.iter().position(|&x| x == theta),
                    panel.phis.iter().position(|&x| x == phi),
                ) else {
                    continue;
                };
                let cx = x0 + c as u32 * cell + cell / 2;
                let cy = y0 + h - t as u32 * cell - cell / 2;
                let _ = writeln!(
                    s,
                    r##"<circle cx="{cx}" cy="{cy}" r="{}" fill="none" stroke="#000000" stroke-dasharray="2,2"/><text x="{cx}" y="{}" text-anchor="middle">{name}</text>"##,
                    cell / 2,
                    cy + 3
                );
            }
        }
        x0 += w + PANEL_GAP;
    }
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="middle">phi (deg); theta (deg) upwards; {legend}</text>"#,
        total_w / 2,
        total_h - 6
    );
    s.push_str("</svg>\n");
    s
}

fn panels_ppm(panels: &[Panel], cell: u32) -> Vec<u8> {
    let cell = cell.max(1) as usize;
    let gap = cell;
    let rows = panels.iter().map(Panel::rows).max().unwrap_or(0);
    let width: usize = panels.iter().map(|p| p.cols() * cell).sum::<usize>() + gap * panels.len().saturating_sub(1);
    let height = rows * cell;
    let mut out = format!("P6\n{width} {height}\n255\n").into_bytes();
    for y in 0..height {
        let r = y / cell;
        for (i, p) in panels.iter().enumerate() {
            if i > 0 {
                out.extend(std::iter::repeat_n(255u8, gap * 3));
            }
            let offset = rows - p.rows();
            for x in 0..p.cols() * cell {
                let Rgb(a, b, c) = if r < offset { Rgb::WHITE } else { p.at(r - offset, x / cell) };
                out.extend([a, b, c]);
            }
        }
    }
    out
}

fn heatmap_panels<'a>(grids: &'a [HeatmapGrid], scale: &ColorScale) -> Result<Vec<Panel<'a>>> {
    if grids.is_empty() {
        return Err(Error::Report("nothing to render".into()));
    }
    Ok(grids
        .iter()
        .map(|g| Panel {
            title: g.key.to_string(),
            thetas: &g.thetas_deg,
            phis: &g.phis_deg,
            colors: g.cells.iter().map(|&q| scale.color(q)).collect(),
        })
        .collect())
}

fn delta_panel(delta: &DeltaGrid) -> Panel<'_> {
    Panel {
        title: "delta qvf".into(),
        thetas: &delta.thetas_deg,
        phis: &delta.phis_deg,
        colors: delta.cells.iter().map(|&d| diverging_color(d)).collect(),
    }
}

/// Heatmaps side by side, one panel per grid.
pub fn heatmap_svg(grids: &[HeatmapGrid], opts: &HeatmapOptions) -> Result<String> {
    let legend = format!(
        "green < {} <= white <= {} < red",
        opts.scale.green_below, opts.scale.red_above
    );
    Ok(panels_svg(&heatmap_panels(grids, &opts.scale)?, opts.cell_px, opts.overlay, &legend))
}

/// Binary PPM of the heatmap cells only (no labels or overlay).
pub fn heatmap_ppm(grids: &[HeatmapGrid], opts: &HeatmapOptions) -> Result<Vec<u8>> {
    Ok(panels_ppm(&heatmap_panels(grids, &opts.scale)?, opts.cell_px))
}

/// Long-form `group,theta_deg,phi_deg,qvf` table.
pub fn heatmap_csv(grids: &[HeatmapGrid]) -> String {
    let mut s = String::from("group,theta_deg,phi_deg,qvf\n");
    for g in grids {
        for (t, theta) in g.thetas_deg.iter().enumerate() {
            for (p, phi) in g.phis_deg.iter().enumerate() {
                let _ = writeln!(s, "{},{theta},{phi},{}", g.key, g.cells[t * g.phis_deg.len() + p]);
            }
        }
    }
    s
}

pub fn delta_svg(delta: &DeltaGrid, opts: &HeatmapOptions) -> String {
    panels_svg(&[delta_panel(delta)], opts.cell_px, opts.overlay, "blue < 0 = white < red")
}

pub fn delta_ppm(delta: &DeltaGrid, opts: &HeatmapOptions) -> Vec<u8> {
    panels_ppm(&[delta_panel(delta)], opts.cell_px)
}

pub fn delta_csv(delta: &DeltaGrid) -> String {
    let mut s = String::from("theta_deg,phi_deg,delta_qvf\n");
    for (t, theta) in delta.thetas_deg.iter().enumerate() {
        for (p, phi) in delta.phis_deg.iter().enumerate() {
            let _ = writeln!(s, "{theta},{phi},{}", delta.cells[t * delta.phis_deg.len() + p]);
        }
    }
    s
}

const PALETTE: [&str; 8] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
];

/// QVF against gate index, one polyline per qubit.
pub fn timeline_svg(series: &[TimelineSeries], point: GridPoint) -> String {
    let (w, h) = (480.0, 240.0);
    let (ml, mt) = (48.0, 28.0);
    let max_gate = series
        .iter()
        .flat_map(|s| s.points.iter().map(|p| p.0))
        .max()
        .unwrap_or(0)
        .max(1) as f64;
    let px = |g: usize| ml + g as f64 / max_gate * w;
    let py = |q: f64| mt + (1.0 - q) * h;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" font-family="sans-serif" font-size="10">"#,
        w + ml + 100.0,
        h + mt + 40.0
    );
    let _ = writeln!(s, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##);
    let _ = writeln!(s, r#"<text x="{}" y="16" text-anchor="middle" font-size="12">qvf at theta={} phi={}</text>"#, ml + w / 2.0, point.theta_deg, point.phi_deg);
    let _ = writeln!(s, r##"<rect x="{ml}" y="{mt}" width="{w}" height="{h}" fill="none" stroke="#444444"/>"##);
    for q in [0.0, 0.5, 1.0] {
        let _ = writeln!(s, r#"<text x="{}" y="{:.1}" text-anchor="end">{q:.1}</text>"#, ml - 4.0, py(q) + 3.0);
    }
    let _ = writeln!(s, r#"<text x="{}" y="{}" text-anchor="middle">gate index</text>"#, ml + w / 2.0, mt + h + 28.0);
    for (i, ser) in series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let pts: Vec<String> = ser.points.iter().map(|&(g, q)| format!("{:.2},{:.2}", px(g), py(q))).collect();
        let _ = writeln!(s, r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="1.5"/>"#, pts.join(" "));
        for &(g, q) in &ser.points {
            let _ = writeln!(s, r#"<circle cx="{:.2}" cy="{:.2}" r="2.5" fill="{color}"/>"#, px(g), py(q));
        }
        let _ = writeln!(s, r#"<text x="{}" y="{}" fill="{color}">q{}</text>"#, ml + w + 10.0, mt + 12.0 * (i as f64 + 1.0), ser.qubit);
    }
    s.push_str("</svg>\n");
    s
}

pub fn timeline_csv(series: &[TimelineSeries]) -> String {
    let mut s = String::from("qubit,gate_index,qvf\n");
    for ser in series {
        for (g, q) in &ser.points {
            let _ = writeln!(s, "{},{g},{q}", ser.qubit);
        }
    }
    s
}

pub fn histogram_svg(stats: &HistogramStats) -> String {
    let (w, h) = (500.0, 200.0);
    let (ml, mt) = (40.0, 28.0);
    let max = stats.counts.iter().copied().max().unwrap_or(0).max(1) as f64;
    let bw = w / stats.counts.len() as f64;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" font-family="sans-serif" font-size="10">"#,
        w + ml + 20.0,
        h + mt + 36.0
    );
    let _ = writeln!(s, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##);
    let _ = writeln!(
        s,
        r#"<text x="{}" y="16" text-anchor="middle" font-size="12">mean qvf={:.4} stddev={:.4}</text>"#,
        ml + w / 2.0,
        stats.mean,
        stats.stddev
    );
    for (i, &c) in stats.counts.iter().enumerate() {
        let bh = c as f64 / max * h;
        let mid = (i as f64 + 0.5) / stats.counts.len() as f64;
        let _ = writeln!(
            s,
            r#"<rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="{}"/>"#,
            ml + i as f64 * bw,
            mt + h - bh,
            bw,
            bh,
            ColorScale::default().color(mid).hex()
        );
    }
    let _ = writeln!(s, r##"<rect x="{ml}" y="{mt}" width="{w}" height="{h}" fill="none" stroke="#444444"/>"##);
    for q in [0.0, 0.5, 1.0] {
        let _ = writeln!(s, r#"<text x="{:.1}" y="{}" text-anchor="middle">{q:.1}</text>"#, ml + q * w, mt + h + 12.0);
    }
    let _ = writeln!(s, r#"<text x="{}" y="{}" text-anchor="middle">qvf</text>"#, ml + w / 2.0, mt + h + 28.0);
    s.push_str("</svg>\n");
    s
}

pub fn histogram_csv(stats: &HistogramStats) -> String {
    let mut s = String::from("bin_start,bin_end,count\n");
    let n = stats.counts.len() as f64;
    for (i, c) in stats.counts.iter().enumerate() {
        let _ = writeln!(s, "{},{},{c}", i as f64 / n, (i + 1) as f64 / n);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::GroupKey;

    fn grid(value: f64) -> HeatmapGrid {
        HeatmapGrid {
            key: GroupKey::All,
            thetas_deg: vec![0, 90, 180],
            phis_deg: vec![0, 90, 180, 270],
            cells: vec![value; 12],
        }
    }

    #[test]
    fn colour_bands() {
        let s = ColorScale::default();
        assert_eq!(s.color(0.5), Rgb::WHITE);
        assert_eq!(s.color(0.45), Rgb::WHITE);
        assert_eq!(s.color(0.55), Rgb::WHITE);
        assert_eq!(s.color(0.0), Rgb::GREEN);
        assert_eq!(s.color(1.0), Rgb::RED);
        let g = s.color(0.3);
        assert!(g.1 > g.0 && g != Rgb::WHITE);
        assert_eq!(diverging_color(0.0), Rgb::WHITE);
        assert_eq!(diverging_color(-1.0), Rgb::BLUE);
        assert!(ColorScale::new(0.6, 0.5).is_err());
    }

    #[test]
    fn uniform_half_is_white_ppm() {
        let opts = HeatmapOptions { cell_px: 2, ..Default::default() };
        let ppm = heatmap_ppm(&[grid(0.5)], &opts).unwrap();
        let header = b"P6\n8 6\n255\n";
        assert_eq!(&ppm[..header.len()], header);
        assert!(ppm[header.len()..].iter().all(|&b| b == 255));
        assert_eq!(ppm.len(), header.len() + 8 * 6 * 3);
    }

    #[test]
    fn rendering_is_pure() {
        let opts = HeatmapOptions { overlay: true, ..Default::default() };
        let g = [grid(0.2), grid(0.8)];
        assert_eq!(heatmap_svg(&g, &opts).unwrap(), heatmap_svg(&g, &opts).unwrap());
        let svg = heatmap_svg(&g, &opts).unwrap();
        assert!(svg.contains(">Y</text>") && svg.contains(">S</text>"));
        // T sits at phi=45, absent from this grid
        assert!(!svg.contains(">T</text>"));
        assert!(heatmap_svg(&[], &opts).is_err());
    }

    #[test]
    fn csv_exports() {
        let csv = heatmap_csv(&[grid(0.25)]);
        assert_eq!(csv.lines().count(), 13);
        assert!(csv.contains("all,90,180,0.25"));
        let stats = HistogramStats { mean: 0.5, stddev: 0.0, counts: vec![0, 3] };
        assert_eq!(histogram_csv(&stats), "bin_start,bin_end,count\n0,0.5,0\n0.5,1,3\n");
        let series = [TimelineSeries { qubit: 3, points: vec![(1, 0.5), (4, 0.0)] }];
        assert_eq!(timeline_csv(&series), "qubit,gate_index,qvf\n3,1,0.5\n3,4,0\n");
        assert!(timeline_svg(&series, GridPoint::new(180, 0)).contains("<polyline"));
        assert!(histogram_svg(&stats).contains("mean qvf=0.5000"));
    }
}
