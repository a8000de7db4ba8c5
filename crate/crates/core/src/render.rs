//! SVG figures of an instance and, optionally, a solution.

use std::fmt::Write;

use thiserror::Error;

use crate::geometry::Point;
use crate::instance::{Instance, Side, Solution, SITE};

pub const VIEWPORT: f64 = 800.0;
pub const MARGIN: f64 = 0.05 * VIEWPORT;

const SIDE_COLORS: [&str; 2] = ["#1f5fbf", "#c8462b"];
const NEUTRAL: &str = "#444444";

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RenderError {
    #[error("solution labels {solution} points but the instance has {instance}")]
    SizeMismatch { instance: usize, solution: usize },
    #[error("structure references point {index}, instance has {len}")]
    BadStructure { index: i64, len: usize },
}

/// World-to-viewport transform: uniform scale, y up, centered.
struct Frame {
    min: Point,
    scale: f64,
    pad: Point,
}

impl Frame {
    fn fit(points: impl Iterator<Item = Point>) -> Frame {
        let (mut lo, mut hi) = (Point::ORIGIN, Point::ORIGIN);
        for p in points {
            lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        let (w, h) = (hi.x - lo.x, hi.y - lo.y);
        let span = w.max(h);
        let inner = VIEWPORT - 2.0 * MARGIN;
        let scale = if span > 0.0 { inner / span } else { 1.0 };
        Frame {
            min: Point::new(lo.x, hi.y),
            scale,
            pad: Point::new(MARGIN + (inner - w * scale) / 2.0, MARGIN + (inner - h * scale) / 2.0),
        }
    }

    fn map(&self, p: Point) -> (f64, f64) {
        (self.pad.x + (p.x - self.min.x) * self.scale, self.pad.y + (self.min.y - p.y) * self.scale)
    }
}

/// Standalone SVG: axes through the origin, one marker per point and site,
/// and the solution's tree or tour edges colored by side.
pub fn render_svg(instance: &Instance, solution: Option<&Solution>) -> Result<String, RenderError> {
    if let Some(s) = solution {
        if s.assignment.len() != instance.len() {
            return Err(RenderError::SizeMismatch {
                instance: instance.len(),
                solution: s.assignment.len(),
            });
        }
    }
    let frame = Frame::fit(instance.all_nodes().into_iter());
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{v}" height="{v}" viewBox="0 0 {v} {v}">"#,
        v = VIEWPORT
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);

    let (ox, oy) = frame.map(Point::ORIGIN);
    let _ = writeln!(
        svg,
        r##"<line class="axis" x1="0.000" y1="{oy:.3}" x2="{VIEWPORT:.3}" y2="{oy:.3}" stroke="#bbbbbb" stroke-width="1"/>"##
    );
    let _ = writeln!(
        svg,
        r##"<line class="axis" x1="{ox:.3}" y1="0.000" x2="{ox:.3}" y2="{VIEWPORT:.3}" stroke="#bbbbbb" stroke-width="1"/>"##
    );

    if let Some(s) = solution {
        for side in [Side::One, Side::Two] {
            let color = SIDE_COLORS[side.label() as usize - 1];
            for (u, v) in s.structure(side).edge_list() {
                let at = |k: i64| -> Result<Point, RenderError> {
                    if k == SITE {
                        Ok(instance.site(side))
                    } else if k >= 0 && (k as usize) < instance.len() {
                        Ok(instance.point(k as usize))
                    } else {
                        Err(RenderError::BadStructure {
                            index: k,
                            len: instance.len(),
                        })
                    }
                };
                let (x1, y1) = frame.map(at(u)?);
                let (x2, y2) = frame.map(at(v)?);
                let _ = writeln!(
                    svg,
                    r#"<line class="edge" data-side="{}" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="{color}" stroke-width="1.5"/>"#,
                    side.label()
                );
            }
        }
    }

    for (i, &p) in instance.points().iter().enumerate() {
        let (x, y) = frame.map(p);
        let fill = solution.map_or(NEUTRAL, |s| SIDE_COLORS[s.assignment.side(i).label() as usize - 1]);
        let _ = writeln!(svg, r#"<circle class="marker" data-index="{i}" cx="{x:.3}" cy="{y:.3}" r="4" fill="{fill}"/>"#);
    }
    for side in [Side::One, Side::Two] {
        let (x, y) = frame.map(instance.site(side));
        let color = SIDE_COLORS[side.label() as usize - 1];
        let _ = writeln!(
            svg,
            r#"<rect class="marker" data-site="c{}" x="{:.3}" y="{:.3}" width="10" height="10" fill="{color}" stroke="black"/>"#,
            side.label(),
            x - 5.0,
            y - 5.0
        );
        let _ = writeln!(
            svg,
            r#"<text class="label" x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="12">c{}</text>"#,
            x + 7.0,
            y - 7.0,
            side.label()
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
