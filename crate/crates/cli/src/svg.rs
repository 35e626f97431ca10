//! Deterministic SVG scatter plots.

use std::fmt::Write;

pub const WIDTH: f64 = 640.0;
pub const HEIGHT: f64 = 640.0;
pub const MARGIN: f64 = 60.0;
/// Point labels are drawn only up to this many points.
const MAX_LABELLED: usize = 200;

#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    pub label: String,
    pub x: f64,
    pub y: f64,
    /// Extra CSS class, e.g. a category name.
    pub class: Option<String>,
}

#[derive(Debug, Clone)]
pub struct Scatter {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub points: Vec<Point>,
    /// Reference point drawn as dashed lines.
    pub origin: (f64, f64),
    pub shade_quadrants: bool,
}

/// Linear map from data space onto the plot area.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Transform {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl Transform {
    /// Bounds covering every point and the origin, padded by 10% (at least 0.05).
    pub fn fit(points: &[Point], origin: (f64, f64)) -> Self {
        let xs = points.iter().map(|p| p.x).chain([origin.0]);
        let ys = points.iter().map(|p| p.y).chain([origin.1]);
        let (x_min, x_max) = padded(xs);
        let (y_min, y_max) = padded(ys);
        Self { x_min, x_max, y_min, y_max }
    }

    pub fn px(&self, x: f64) -> f64 {
        MARGIN + (x - self.x_min) / (self.x_max - self.x_min) * (WIDTH - 2.0 * MARGIN)
    }

    pub fn py(&self, y: f64) -> f64 {
        MARGIN + (self.y_max - y) / (self.y_max - self.y_min) * (HEIGHT - 2.0 * MARGIN)
    }
}

fn padded(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
    let pad = ((hi - lo) * 0.1).max(0.05);
    (lo - pad, hi + pad)
}

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

impl Scatter {
    /// SVG text; `note` is embedded verbatim (escaped) as `<metadata>`.
    pub fn render(&self, note: &str) -> String {
        let t = Transform::fit(&self.points, self.origin);
        let (left, right) = (MARGIN, WIDTH - MARGIN);
        let (top, bottom) = (MARGIN, HEIGHT - MARGIN);
        let (ox, oy) = (t.px(self.origin.0), t.py(self.origin.1));

        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
        );
        let _ = writeln!(s, "<metadata>\n{}</metadata>", escape(note));
        s.push_str("<style>.point{fill:#1f4e9c}.label{font:10px sans-serif}.axis{font:12px sans-serif}</style>\n");
        let _ = writeln!(s, r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);

        if self.shade_quadrants {
            let quads = [
                ("HighW_HighC", ox, top, right - ox, oy - top, "#e3f2e1"),
                ("LowW_HighC", left, top, ox - left, oy - top, "#e1ebf5"),
                ("HighW_LowC", ox, oy, right - ox, bottom - oy, "#f7f1dc"),
                ("LowW_LowC", left, oy, ox - left, bottom - oy, "#f5e1e1"),
            ];
            for (name, x, y, w, h, fill) in quads {
                let _ = writeln!(
                    s,
                    r#"<rect class="quadrant" data-quadrant="{name}" x="{x:.2}" y="{y:.2}" width="{w:.2}" height="{h:.2}" fill="{fill}"/>"#
                );
            }
        }

        let _ = writeln!(
            s,
            r#"<rect class="frame" x="{left}" y="{top}" width="{:.2}" height="{:.2}" fill="none" stroke="black"/>"#,
            right - left,
            bottom - top
        );
        let _ = writeln!(
            s,
            r##"<line class="baseline" x1="{ox:.2}" y1="{top}" x2="{ox:.2}" y2="{bottom}" stroke="#3060c0" stroke-dasharray="6 4"/>"##
        );
        let _ = writeln!(
            s,
            r##"<line class="baseline" x1="{left}" y1="{oy:.2}" x2="{right}" y2="{oy:.2}" stroke="#3060c0" stroke-dasharray="6 4"/>"##
        );

        for (v, label) in [(t.x_min, "min"), (t.x_max, "max")] {
            let anchor = if label == "min" { "start" } else { "end" };
            let _ = writeln!(
                s,
                r#"<text class="axis" x="{:.2}" y="{:.2}" text-anchor="{anchor}">{v:.3}</text>"#,
                t.px(v),
                bottom + 16.0
            );
        }
        for v in [t.y_min, t.y_max] {
            let _ = writeln!(
                s,
                r#"<text class="axis" x="{:.2}" y="{:.2}" text-anchor="end">{v:.3}</text>"#,
                left - 4.0,
                t.py(v)
            );
        }
        let _ = writeln!(
            s,
            r#"<text class="axis" x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            WIDTH / 2.0,
            HEIGHT - 12.0,
            escape(&self.x_label)
        );
        let _ = writeln!(
            s,
            r#"<text class="axis" x="16" y="{:.2}" text-anchor="middle" transform="rotate(-90 16 {:.2})">{}</text>"#,
            HEIGHT / 2.0,
            HEIGHT / 2.0,
            escape(&self.y_label)
        );
        let _ = writeln!(
            s,
            r#"<text class="axis" x="{:.2}" y="24" text-anchor="middle">{}</text>"#,
            WIDTH / 2.0,
            escape(&self.title)
        );

        let labelled = self.points.len() <= MAX_LABELLED;
        for p in &self.points {
            let (cx, cy) = (t.px(p.x), t.py(p.y));
            let class = match &p.class {
                Some(c) => format!("point {}", escape(c)),
                None => "point".to_string(),
            };
            let _ = writeln!(
                s,
                r#"<circle class="{class}" data-label="{}" cx="{cx:.2}" cy="{cy:.2}" r="4"/>"#,
                escape(&p.label)
            );
            if labelled {
                let _ = writeln!(
                    s,
                    r#"<text class="label" x="{:.2}" y="{:.2}">{}</text>"#,
                    cx + 6.0,
                    cy - 6.0,
                    escape(&p.label)
                );
            }
        }
        s.push_str("</svg>\n");
        s
    }
}
