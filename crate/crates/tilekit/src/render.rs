//! Deterministic SVG pictures of tilings, path families, sampler heat maps
//! and arctic-curve overlays.
//!
//! Everything is drawn in rescaled coordinates: a rank-`m` diamond cell
//! `(a, b)` covers `[a/m, (a+1)/m] × [b/m, (b+1)/m]`, so the diamond fills
//! `|x| + |y| ≤ 1` up to a boundary layer of width `1/m`; hexagon grid
//! points `(x, y)` go to the same frame as the hexagon curve families. The
//! SVG `y` axis points down, so world points are flipped on output.
//!
//! `k`-colored inputs are drawn as `k` panels side by side. An overlay is
//! emitted once, as one `<path>` per curve branch inside `<defs>`, and
//! placed on each panel with `<use>`. Elements are emitted in a fixed order
//! and every coordinate is printed with four decimals, so identical inputs
//! give identical bytes.

use std::fmt::Write as _;

use crate::arctic::{CurveFamily, POLYLINE_SAMPLES};
use crate::aztec::{DominoType, KTiling, Tiling};
use crate::error::{Error, Result};
use crate::hexagon::{KLozengeTiling, Lozenge, LozengeType};
use crate::sampler::CellStatistics;
use crate::schroder::SchroderPathFamily;

/// Default per-color palette.
pub const DEFAULT_PALETTE: [&str; 6] = ["#1f4e9c", "#c0392b", "#2e8b57", "#8e44ad", "#d35400", "#555555"];

/// Fills for domino types I–IV.
pub const DOMINO_FILLS: [&str; 4] = ["#e8c547", "#4a90d9", "#f2f2f2", "#d0503c"];

/// Fills for lozenge types 1–3.
pub const LOZENGE_FILLS: [&str; 3] = ["#e8c547", "#f2f2f2", "#4a90d9"];

/// Default pixels per rescaled unit.
pub const DEFAULT_SCALE: f64 = 200.0;

/// What to draw.
#[derive(Debug, Clone)]
pub enum RenderInput {
    Tiling(Tiling),
    KTiling(KTiling),
    Lozenges(KLozengeTiling),
    /// One Schröder path family per color.
    Paths(Vec<SchroderPathFamily>),
    Statistics(CellStatistics),
}

impl RenderInput {
    fn colors(&self) -> usize {
        match self {
            RenderInput::Tiling(_) => 1,
            RenderInput::KTiling(kt) => kt.k(),
            RenderInput::Lozenges(kl) => kl.k(),
            RenderInput::Paths(p) => p.len(),
            RenderInput::Statistics(s) => s.colors,
        }
    }

    /// World-space bounding box `(x0, y0, x1, y1)` of one panel.
    fn bounds(&self) -> (f64, f64, f64, f64) {
        match self {
            RenderInput::Lozenges(kl) => {
                let r = kl.region;
                let n = r.a.max(1) as f64;
                let pts = [(0.0, 0.0), ((r.a + r.b) as f64, 0.0), (0.0, (r.a + r.c) as f64), ((r.a + r.b) as f64, (r.a + r.c) as f64)];
                let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
                for (x, y) in pts {
                    let (u, v) = hex_point(n, x, y);
                    (x0, y0, x1, y1) = (x0.min(u), y0.min(v), x1.max(u), y1.max(v));
                }
                (x0, y0, x1, y1)
            }
            _ => {
                let m = self.rank() as f64;
                let e = (m + 1.0) / m;
                (-e, -e, e, e)
            }
        }
    }

    fn rank(&self) -> u32 {
        match self {
            RenderInput::Tiling(t) => t.rank(),
            RenderInput::KTiling(kt) => kt.rank(),
            RenderInput::Paths(p) => p.first().map_or(1, |f| f.rank),
            RenderInput::Statistics(s) => s.rank,
            RenderInput::Lozenges(kl) => kl.region.a,
        }
        .max(1)
    }
}

/// A picture request.
#[derive(Debug, Clone)]
pub struct RenderSpec {
    pub input: RenderInput,
    pub overlay: Option<CurveFamily>,
    /// Stroke color per color index; needs at least `k` entries.
    pub palette: Vec<String>,
    /// Pixels per rescaled unit.
    pub scale: f64,
    /// Key–value lines of the legend (model, rank, k, t, seed, ...).
    pub legend: Vec<(String, String)>,
}

impl RenderSpec {
    pub fn new(input: RenderInput) -> RenderSpec {
        RenderSpec {
            input,
            overlay: None,
            palette: DEFAULT_PALETTE.iter().map(|s| s.to_string()).collect(),
            scale: DEFAULT_SCALE,
            legend: Vec::new(),
        }
    }

    pub fn with_overlay(mut self, family: CurveFamily) -> RenderSpec {
        self.overlay = Some(family);
        self
    }

    pub fn with_legend(mut self, key: &str, value: impl ToString) -> RenderSpec {
        self.legend.push((key.to_string(), value.to_string()));
        self
    }
}

/// Rescaled position of hexagon grid point `(x, y)` for side unit `n`.
fn hex_point(n: f64, x: f64, y: f64) -> (f64, f64) {
    let r3 = 3f64.sqrt();
    ((x + y / 2.0) / n - 3.0, r3 / 2.0 * y / n - r3)
}

/// Grid corners of a lozenge, counterclockwise.
pub fn lozenge_corners(l: &Lozenge) -> [(i32, i32); 4] {
    let (c, r) = (l.col, l.row);
    match l.kind {
        LozengeType::One => [(c + 1, r), (c + 1, r + 1), (c, r + 2), (c, r + 1)],
        LozengeType::Two => [(c, r), (c + 1, r), (c + 1, r + 1), (c, r + 1)],
        LozengeType::Three => [(c + 1, r), (c + 2, r), (c + 1, r + 1), (c, r + 1)],
    }
}

/// Builds SVG documents panel by panel.
struct Canvas {
    out: String,
    scale: f64,
    /// World bounds of one panel.
    bounds: (f64, f64, f64, f64),
    panel_width: f64,
    margin: f64,
}

impl Canvas {
    /// Pixel coordinates of a world point in panel 0 (panels are shifted
    /// with a group transform).
    fn px(&self, (x, y): (f64, f64)) -> (f64, f64) {
        ((x - self.bounds.0) * self.scale + self.margin, (self.bounds.3 - y) * self.scale + self.margin)
    }

    fn polygon(&mut self, pts: &[(f64, f64)], fill: &str, extra: &str) {
        let mut p = String::new();
        for (i, &w) in pts.iter().enumerate() {
            let (x, y) = self.px(w);
            if i > 0 {
                p.push(' ');
            }
            let _ = write!(p, "{x:.4},{y:.4}");
        }
        let _ = writeln!(self.out, r#"<polygon points="{p}" fill="{fill}"{extra}/>"#);
    }

    fn rect(&mut self, (x0, y0): (f64, f64), (x1, y1): (f64, f64), fill: &str, extra: &str) {
        let (a, b) = self.px((x0, y1));
        let (c, d) = self.px((x1, y0));
        let _ = writeln!(
            self.out,
            r#"<rect x="{a:.4}" y="{b:.4}" width="{:.4}" height="{:.4}" fill="{fill}"{extra}/>"#,
            c - a,
            d - b
        );
    }

    fn path_data(&self, pts: &[(f64, f64)]) -> String {
        let mut d = String::new();
        for (i, &w) in pts.iter().enumerate() {
            let (x, y) = self.px(w);
            let _ = write!(d, "{}{x:.4},{y:.4}", if i == 0 { "M" } else { " L" });
        }
        d
    }
}

fn domino_fill(t: DominoType) -> &'static str {
    DOMINO_FILLS[t.index()]
}

fn draw_tiling(cv: &mut Canvas, t: &Tiling, stroke: &str) {
    let m = t.rank() as f64;
    let extra = format!(r#" stroke="{stroke}" stroke-width="0.5""#);
    for d in t.dominos() {
        let [(a0, b0), (a1, b1)] = d.cells();
        let lo = (a0.min(a1) as f64 / m, b0.min(b1) as f64 / m);
        let hi = ((a0.max(a1) + 1) as f64 / m, (b0.max(b1) + 1) as f64 / m);
        cv.rect(lo, hi, domino_fill(d.kind(t.rank())), &extra);
    }
}

fn draw_paths(cv: &mut Canvas, f: &SchroderPathFamily, stroke: &str) {
    let m = f.rank as f64;
    for i in 1..=f.paths.len() {
        let pts: Vec<(f64, f64)> = f.vertices(i).into_iter().map(|(x, y)| (x as f64 / m, y as f64 / (2.0 * m))).collect();
        let d = cv.path_data(&pts);
        let _ = writeln!(cv.out, r#"<path d="{d}" fill="none" stroke="{stroke}" stroke-width="1.5"/>"#);
    }
}

fn draw_lozenges(cv: &mut Canvas, kl: &KLozengeTiling, color: usize, stroke: &str) {
    let n = kl.region.a.max(1) as f64;
    let extra = format!(r#" stroke="{stroke}" stroke-width="0.5""#);
    for l in &kl.layers[color].to_lozenges().lozenges {
        let pts: Vec<(f64, f64)> = lozenge_corners(l).iter().map(|&(x, y)| hex_point(n, x as f64, y as f64)).collect();
        cv.polygon(&pts, LOZENGE_FILLS[l.kind as usize], &extra);
    }
}

/// Heat map: each cell takes the fill of its most frequent domino type,
/// with opacity equal to that frequency.
fn draw_statistics(cv: &mut Canvas, s: &CellStatistics, color: usize) {
    let m = s.rank as f64;
    let cells = crate::aztec::AztecRegion::new(s.rank).cells();
    for (i, &(a, b)) in cells.iter().enumerate() {
        let f = s.frequencies(color, i);
        // First maximum, so ties resolve deterministically.
        let (best, p) = f.iter().enumerate().fold((0, f64::MIN), |acc, (j, &v)| if v > acc.1 { (j, v) } else { acc });
        let extra = format!(r#" fill-opacity="{p:.4}""#);
        cv.rect((a as f64 / m, b as f64 / m), ((a + 1) as f64 / m, (b + 1) as f64 / m), DOMINO_FILLS[best], &extra);
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Renders the request as an SVG document.
pub fn render_svg(spec: &RenderSpec) -> Result<String> {
    let k = spec.input.colors();
    if spec.palette.len() < k {
        return Err(Error::Invalid(format!("palette has {} colors but the input has {k}", spec.palette.len())));
    }
    if !(spec.scale.is_finite() && spec.scale > 0.0) {
        return Err(Error::Invalid("scale must be positive".into()));
    }
    let mut bounds = spec.input.bounds();
    if let Some(f) = &spec.overlay {
        for (x, y) in f.ambient.vertices() {
            bounds = (bounds.0.min(x), bounds.1.min(y), bounds.2.max(x), bounds.3.max(y));
        }
    }
    let margin = 10.0;
    let panel_width = (bounds.2 - bounds.0) * spec.scale + 2.0 * margin;
    let legend_height = 16.0 * spec.legend.len() as f64 + if spec.legend.is_empty() { 0.0 } else { 8.0 };
    let width = panel_width * k as f64;
    let height = (bounds.3 - bounds.1) * spec.scale + 2.0 * margin + legend_height;
    let mut cv = Canvas { out: String::new(), scale: spec.scale, bounds, panel_width, margin };

    let _ = writeln!(
        cv.out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" xmlns:xlink="http://www.w3.org/1999/xlink" width="{width:.4}" height="{height:.4}" viewBox="0 0 {width:.4} {height:.4}">"#
    );
    if let Some(f) = &spec.overlay {
        cv.out.push_str("<defs>\n<g id=\"overlay\">\n");
        for pl in f.polylines(POLYLINE_SAMPLES) {
            let pts: Vec<(f64, f64)> = pl.points.iter().map(|p| (p[0], p[1])).collect();
            let d = cv.path_data(&pts);
            let _ = writeln!(
                cv.out,
                r##"<path class="branch" data-branch="{}" d="{d}" fill="none" stroke="#000000" stroke-width="2"/>"##,
                escape(&pl.branch)
            );
        }
        cv.out.push_str("</g>\n</defs>\n");
    }
    for color in 0..k {
        let stroke = spec.palette[color].clone();
        let _ = writeln!(cv.out, r#"<g class="panel" data-color="{color}" transform="translate({:.4},0)">"#, cv.panel_width * color as f64);
        match &spec.input {
            RenderInput::Tiling(t) => draw_tiling(&mut cv, t, &stroke),
            RenderInput::KTiling(kt) => draw_tiling(&mut cv, &kt.layers()[color], &stroke),
            RenderInput::Lozenges(kl) => draw_lozenges(&mut cv, kl, color, &stroke),
            RenderInput::Paths(p) => draw_paths(&mut cv, &p[color], &stroke),
            RenderInput::Statistics(s) => draw_statistics(&mut cv, s, color),
        }
        if spec.overlay.is_some() {
            cv.out.push_str("<use xlink:href=\"#overlay\" href=\"#overlay\"/>\n");
        }
        cv.out.push_str("</g>\n");
    }
    if !spec.legend.is_empty() {
        let top = height - legend_height + 4.0;
        cv.out.push_str("<g class=\"legend\" font-family=\"monospace\" font-size=\"12\">\n");
        for (i, (key, value)) in spec.legend.iter().enumerate() {
            let _ = writeln!(cv.out, r#"<text x="{:.4}" y="{:.4}">{}: {}</text>"#, margin, top + 16.0 * (i as f64 + 1.0) - 4.0, escape(key), escape(value));
        }
        cv.out.push_str("</g>\n");
    }
    cv.out.push_str("</svg>\n");
    Ok(cv.out)
}

/// A plain-text picture of a tiling: one character per cell, `1`–`4` for
/// the domino type covering it, `.` outside the diamond.
pub fn render_text(t: &Tiling) -> String {
    let m = t.rank() as i32;
    let region = t.region();
    let mut out = String::new();
    for b in (-m..m).rev() {
        for a in -m..m {
            out.push(match t.domino_covering(a, b) {
                Some(d) if region.contains(a, b) => char::from(b'1' + d.kind(t.rank()).index() as u8),
                _ => '.',
            });
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hexagon::{HexRegion, HexTiling};

    #[test]
    fn lozenges_are_unit_rhombi() {
        let t = HexTiling::lowest(HexRegion::new(2, 2, 2)).to_lozenges();
        for l in &t.lozenges {
            let c = lozenge_corners(l).map(|(x, y)| hex_point(1.0, x as f64, y as f64));
            for i in 0..4 {
                let (p, q) = (c[i], c[(i + 1) % 4]);
                assert!(((p.0 - q.0).hypot(p.1 - q.1) - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn text_picture_has_one_row_per_cell_row() {
        let txt = render_text(&Tiling::all_horizontal(2));
        assert_eq!(txt.lines().count(), 4);
        assert_eq!(txt.chars().filter(|c| c.is_ascii_digit()).count(), 12);
    }
}
