//! SVG plot of a fit: three orthographic projections (xy, xz, yz) of the
//! points and the fitted line.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::Error;
use crate::fit::FitResult;
use crate::geometry::Vec3;
use crate::nonlinearity::PointCloud;

pub const PANEL_SIZE: f64 = 300.0;
pub const PANEL_MARGIN: f64 = 20.0;
const LEGEND_HEIGHT: f64 = 50.0;
const POINT_RADIUS: f64 = 3.0;
/// Fraction of each extent added on both sides of the bounding box.
const INFLATE: f64 = 0.1;

/// The three projections as `(name, horizontal axis, vertical axis)`.
pub const PROJECTIONS: [(&str, usize, usize); 3] = [("xy", 0, 1), ("xz", 0, 2), ("yz", 1, 2)];

/// Axis-aligned box the plot covers.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlotBox {
    pub min: Vec3,
    pub max: Vec3,
}

impl PlotBox {
    /// Bounding box of the points grown by 10% of its extent on each side.
    /// Flat axes borrow the largest extent, or 1 if all points coincide.
    pub fn around(cloud: &PointCloud) -> Self {
        let (lo, hi) = cloud.bounds();
        let ext = hi - lo;
        let widest = ext.x.max(ext.y).max(ext.z);
        let pad = |e: f64| {
            if e > 0.0 {
                INFLATE * e
            } else if widest > 0.0 {
                INFLATE * widest
            } else {
                1.0
            }
        };
        let p = Vec3::new(pad(ext.x), pad(ext.y), pad(ext.z));
        Self {
            min: lo - p,
            max: hi + p,
        }
    }

    /// Clips the line `origin + direction t` to the box; `None` if it misses.
    pub fn clip(&self, origin: Vec3, direction: Vec3) -> Option<(Vec3, Vec3)> {
        let mut t0 = f64::NEG_INFINITY;
        let mut t1 = f64::INFINITY;
        for k in 0..3 {
            let d = direction[k];
            let (lo, hi) = (self.min[k], self.max[k]);
            if d == 0.0 {
                if origin[k] < lo || origin[k] > hi {
                    return None;
                }
                continue;
            }
            let a = (lo - origin[k]) / d;
            let b = (hi - origin[k]) / d;
            t0 = t0.max(a.min(b));
            t1 = t1.min(a.max(b));
        }
        (t0 <= t1).then(|| (origin + direction * t0, origin + direction * t1))
    }
}

/// Maps a projection of the plot box onto one panel, preserving aspect ratio.
#[derive(Clone, Copy, Debug)]
pub struct PanelTransform {
    u_axis: usize,
    v_axis: usize,
    u_mid: f64,
    v_mid: f64,
    scale: f64,
}

impl PanelTransform {
    pub fn new(plot: &PlotBox, u_axis: usize, v_axis: usize) -> Self {
        let du = plot.max[u_axis] - plot.min[u_axis];
        let dv = plot.max[v_axis] - plot.min[v_axis];
        Self {
            u_axis,
            v_axis,
            u_mid: 0.5 * (plot.max[u_axis] + plot.min[u_axis]),
            v_mid: 0.5 * (plot.max[v_axis] + plot.min[v_axis]),
            scale: PANEL_SIZE / du.max(dv),
        }
    }

    /// Panel-local pixel coordinates (y grows downward).
    pub fn project(&self, p: Vec3) -> (f64, f64) {
        let half = 0.5 * PANEL_SIZE;
        (
            half + (p[self.u_axis] - self.u_mid) * self.scale,
            half - (p[self.v_axis] - self.v_mid) * self.scale,
        )
    }
}

/// Renders the plot as an SVG document.
pub fn render_svg(cloud: &PointCloud, result: &FitResult) -> String {
    let plot = PlotBox::around(cloud);
    let segment = plot.clip(result.centroid, result.direction);
    let width = 3.0 * PANEL_SIZE + 4.0 * PANEL_MARGIN;
    let height = PANEL_SIZE + 2.0 * PANEL_MARGIN + LEGEND_HEIGHT;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);

    for (i, &(name, u, v)) in PROJECTIONS.iter().enumerate() {
        let tf = PanelTransform::new(&plot, u, v);
        let left = PANEL_MARGIN + i as f64 * (PANEL_SIZE + PANEL_MARGIN);
        let _ = writeln!(
            s,
            r#"<g id="{name}" transform="translate({left},{PANEL_MARGIN})">"#
        );
        let _ = writeln!(
            s,
            r#"<rect x="0" y="0" width="{PANEL_SIZE}" height="{PANEL_SIZE}" fill="none" stroke="gray"/>"#
        );
        let _ = writeln!(
            s,
            r#"<text x="4" y="14" font-family="sans-serif" font-size="12">{name}</text>"#
        );
        for &p in cloud {
            let (px, py) = tf.project(p);
            let _ = writeln!(
                s,
                r#"<circle cx="{px:.3}" cy="{py:.3}" r="{POINT_RADIUS}" fill="steelblue"/>"#
            );
        }
        if let Some((a, b)) = segment {
            let (x1, y1) = tf.project(a);
            let (x2, y2) = tf.project(b);
            let _ = writeln!(
                s,
                r#"<line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="crimson" stroke-width="1.5"/>"#
            );
        }
        s.push_str("</g>\n");
    }

    let legend_y = PANEL_SIZE + 2.0 * PANEL_MARGIN + 16.0;
    let mut class = result.classification.to_string();
    if result.classification.is_degenerate() {
        class.push_str(" (direction not unique)");
    }
    let _ = writeln!(
        s,
        r#"<text x="{PANEL_MARGIN}" y="{legend_y}" font-family="sans-serif" font-size="13">n = {}, rms distance d̄ = {:.6e}, classification: {class}</text>"#,
        result.n_points, result.rms_distance
    );
    s.push_str("</svg>\n");
    s
}

/// Writes [`render_svg`] output to `path`.
pub fn emit_svg(
    cloud: &PointCloud,
    result: &FitResult,
    path: impl AsRef<Path>,
) -> Result<(), Error> {
    let path = path.as_ref();
    fs::write(path, render_svg(cloud, result)).map_err(|e| Error::io(path, e))
}
