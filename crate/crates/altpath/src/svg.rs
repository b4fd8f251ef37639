//! Deterministic SVG rendering. Exact coordinates are converted to f64
//! only here, at the presentation layer.

use crate::geom::{ColoredPoint, Point};
use crate::partition::Partition;
use crate::path::{AltPath, Instance};
use std::collections::BTreeMap;
use std::fmt::Write;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SvgError {
    #[error("path or partition references unknown point id {0}")]
    UnknownId(u32),
    #[error("nothing to draw")]
    Empty,
}

const VIEW: f64 = 1000.0;
const MARGIN: f64 = 40.0;

struct Frame {
    min_x: f64,
    min_y: f64,
    scale: f64,
}

impl Frame {
    fn fit(pts: &[&Point]) -> Option<Frame> {
        let xs: Vec<f64> = pts.iter().map(|p| p.to_f64().0).collect();
        let ys: Vec<f64> = pts.iter().map(|p| p.to_f64().1).collect();
        let (min_x, max_x) = bounds(&xs)?;
        let (min_y, max_y) = bounds(&ys)?;
        let span = (max_x - min_x).max(max_y - min_y).max(1e-9);
        Some(Frame {
            min_x,
            min_y,
            scale: (VIEW - 2.0 * MARGIN) / span,
        })
    }

    fn map(&self, p: &Point) -> (f64, f64) {
        let (x, y) = p.to_f64();
        (
            MARGIN + (x - self.min_x) * self.scale,
            // SVG y grows downward; flip so the picture matches the plane.
            VIEW - MARGIN - (y - self.min_y) * self.scale,
        )
    }
}

fn bounds(v: &[f64]) -> Option<(f64, f64)> {
    let mut it = v.iter();
    let first = *it.next()?;
    Some(v.iter().fold((first, first), |(lo, hi), &x| {
        (lo.min(x), hi.max(x))
    }))
}

fn fmt_coord(x: f64) -> String {
    format!("{:.2}", x)
}

fn polyline(frame: &Frame, pts: &[Point], close: bool) -> String {
    let mut d = String::new();
    for (i, p) in pts.iter().enumerate() {
        let (x, y) = frame.map(p);
        let cmd = if i == 0 { 'M' } else { 'L' };
        write!(d, "{}{} {} ", cmd, fmt_coord(x), fmt_coord(y)).unwrap();
    }
    if close {
        d.push('Z');
    }
    d.trim_end().to_string()
}

/// Renders the instance with optional path and partition overlays: red
/// points as filled disks, blue points as hollow circles, the polygon
/// outlined, path segments drawn, and region boundaries dashed.
pub fn render_svg(
    inst: &Instance,
    path: Option<&AltPath>,
    part: Option<&Partition>,
) -> Result<String, SvgError> {
    let all = inst.all_points();
    if all.is_empty() {
        return Err(SvgError::Empty);
    }
    let by_id: BTreeMap<u32, &ColoredPoint> = all.iter().map(|p| (p.id, p)).collect();
    if let Some(p) = path {
        for &id in &p.order {
            if !by_id.contains_key(&id) {
                return Err(SvgError::UnknownId(id));
            }
        }
    }
    if let Some(pt) = part {
        for (&id, _) in &pt.assignment {
            if !by_id.contains_key(&id) {
                return Err(SvgError::UnknownId(id));
            }
        }
    }

    let mut extent: Vec<&Point> = all.iter().map(|p| &p.point).collect();
    if let Some(pt) = part {
        for r in &pt.regions {
            extent.extend(r.vertices().iter());
        }
    }
    let frame = Frame::fit(&extent).ok_or(SvgError::Empty)?;

    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {v} {v}\" width=\"{v}\" height=\"{v}\">",
        v = VIEW as i64
    )
    .unwrap();

    if let Some(pt) = part {
        for r in &pt.regions {
            writeln!(
                out,
                "  <path class=\"region\" d=\"{}\" fill=\"none\" stroke=\"#999\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>",
                polyline(&frame, r.vertices(), true)
            )
            .unwrap();
        }
    }

    writeln!(
        out,
        "  <path class=\"polygon\" d=\"{}\" fill=\"none\" stroke=\"#c00\" stroke-width=\"2\"/>",
        polyline(&frame, &inst.polygon_points(), true)
    )
    .unwrap();

    if let Some(p) = path {
        let pts: Vec<Point> = p
            .order
            .iter()
            .map(|id| by_id[id].point.clone())
            .collect();
        writeln!(
            out,
            "  <path class=\"tour\" d=\"{}\" fill=\"none\" stroke=\"#222\" stroke-width=\"2.5\"/>",
            polyline(&frame, &pts, p.closed)
        )
        .unwrap();
    }

    for p in &all {
        let (x, y) = frame.map(&p.point);
        match p.color {
            crate::geom::Color::Red => writeln!(
                out,
                "  <circle cx=\"{}\" cy=\"{}\" r=\"6\" fill=\"#c00\"/>",
                fmt_coord(x),
                fmt_coord(y)
            )
            .unwrap(),
            crate::geom::Color::Blue => writeln!(
                out,
                "  <circle cx=\"{}\" cy=\"{}\" r=\"6\" fill=\"#fff\" stroke=\"#03c\" stroke-width=\"2.5\"/>",
                fmt_coord(x),
                fmt_coord(y)
            )
            .unwrap(),
        }
    }

    out.push_str("</svg>\n");
    Ok(out)
}
