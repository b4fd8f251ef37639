//! Independent validation of paths and partitions. Nothing here reuses the
//! construction logic: every check re-derives the claimed property from the
//! raw coordinates with exact arithmetic.

use crate::geom::{
    segments_relation, Color, ColoredPoint, Coord, Point, Segment, SegmentRelation,
};
use crate::partition::{Partition, Targets};
use crate::region::{region_intersection, Containment, ConvexRegion};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// First violation found, with enough context to reproduce it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationReport {
    NotAlternating { position: usize },
    NotHamiltonian { detail: String },
    Crossing { i: usize, j: usize },
    NotConvex { region: usize },
    BadDiagonal { region: usize, detail: String },
    BadDiscrepancy { region: usize, got: i64, want: i64 },
    CoverageGap { id: u32 },
    Overlap { i: usize, j: usize },
    AreaMismatch { got: Coord, want: Coord },
}

impl fmt::Display for ViolationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ViolationReport::NotAlternating { position } => {
                write!(f, "colors repeat at path position {}", position)
            }
            ViolationReport::NotHamiltonian { detail } => {
                write!(f, "path is not a permutation of the points: {}", detail)
            }
            ViolationReport::Crossing { i, j } => {
                write!(f, "path segments {} and {} cross", i, j)
            }
            ViolationReport::NotConvex { region } => {
                write!(f, "region {} is not a convex polygon", region)
            }
            ViolationReport::BadDiagonal { region, detail } => {
                write!(f, "region {} diagonal: {}", region, detail)
            }
            ViolationReport::BadDiscrepancy { region, got, want } => {
                write!(f, "region {} discrepancy {} wanted {}", region, got, want)
            }
            ViolationReport::CoverageGap { id } => {
                write!(f, "point {} is not assigned or misassigned", id)
            }
            ViolationReport::Overlap { i, j } => {
                write!(f, "regions {} and {} overlap", i, j)
            }
            ViolationReport::AreaMismatch { got, want } => {
                write!(f, "region areas sum to {} but the ambient has {}", got, want)
            }
        }
    }
}

/// Checks that a path visits every point exactly once, alternates colors
/// (closing the loop for cycles), and that its segments are pairwise
/// non-crossing: adjacent ones share exactly their common endpoint, all
/// others are disjoint.
pub fn verify_path(points: &[ColoredPoint], path: &crate::path::AltPath) -> Result<(), ViolationReport> {
    let by_id: BTreeMap<u32, &ColoredPoint> = points.iter().map(|p| (p.id, p)).collect();
    if by_id.len() != points.len() {
        return Err(ViolationReport::NotHamiltonian {
            detail: "duplicate point ids in the input".into(),
        });
    }
    let mut seen = BTreeSet::new();
    for &id in &path.order {
        if !by_id.contains_key(&id) {
            return Err(ViolationReport::NotHamiltonian {
                detail: format!("unknown id {}", id),
            });
        }
        if !seen.insert(id) {
            return Err(ViolationReport::NotHamiltonian {
                detail: format!("id {} repeated", id),
            });
        }
    }
    if seen.len() != points.len() {
        return Err(ViolationReport::NotHamiltonian {
            detail: format!("covers {} of {} points", seen.len(), points.len()),
        });
    }
    if path.closed && (path.order.len() < 4 || path.order.len() % 2 != 0) {
        return Err(ViolationReport::NotHamiltonian {
            detail: "closed path must have even length at least four".into(),
        });
    }
    let n = path.order.len();
    let color = |k: usize| by_id[&path.order[k % n]].color;
    let pairs = if path.closed { n } else { n.saturating_sub(1) };
    for k in 0..pairs {
        if color(k) == color(k + 1) {
            return Err(ViolationReport::NotAlternating { position: k });
        }
    }
    let seg = |k: usize| {
        Segment::new(
            by_id[&path.order[k % n]].point.clone(),
            by_id[&path.order[(k + 1) % n]].point.clone(),
        )
    };
    for i in 0..pairs {
        for j in (i + 1)..pairs {
            let adjacent = j == i + 1 || (path.closed && i == 0 && j == pairs - 1);
            let rel = segments_relation(&seg(i), &seg(j));
            let ok = if adjacent {
                rel == SegmentRelation::SharedEndpoint
            } else {
                rel == SegmentRelation::Disjoint
            };
            if !ok {
                return Err(ViolationReport::Crossing { i, j });
            }
        }
    }
    Ok(())
}

/// Checks a claimed partition: convex regions tiling `ambient` exactly
/// (area additivity plus pairwise lower-dimensional intersections), each
/// polygon edge a diagonal of its region, every point assigned exactly
/// once to a region that contains it, and per-region discrepancy as
/// prescribed.
pub fn verify_partition(
    ambient: &ConvexRegion,
    p_vertices: &[Point],
    r: &[ColoredPoint],
    b: &[ColoredPoint],
    part: &Partition,
    want: &Targets,
) -> Result<(), ViolationReport> {
    let s = p_vertices.len();
    if part.regions.len() != s || want.0.len() != s {
        return Err(ViolationReport::NotHamiltonian {
            detail: format!(
                "expected {} regions and targets, got {} and {}",
                s,
                part.regions.len(),
                want.0.len()
            ),
        });
    }
    // Convexity is structural for ConvexRegion; reject degenerate slivers.
    for (i, reg) in part.regions.iter().enumerate() {
        if reg.len() < 3 {
            return Err(ViolationReport::NotConvex { region: i });
        }
    }
    // Exact tiling of the ambient region.
    let total: Coord = part.regions.iter().map(|reg| reg.area2()).sum();
    if total != ambient.area2() {
        return Err(ViolationReport::AreaMismatch {
            got: total,
            want: ambient.area2(),
        });
    }
    for i in 0..s {
        for j in (i + 1)..s {
            if region_intersection(&part.regions[i], &part.regions[j])
                .region()
                .is_some()
            {
                return Err(ViolationReport::Overlap { i, j });
            }
        }
    }
    for (i, reg) in part.regions.iter().enumerate() {
        if region_intersection(reg, ambient).region().map(|x| x.area2()) != Some(reg.area2()) {
            return Err(ViolationReport::BadDiagonal {
                region: i,
                detail: "region leaves the ambient box".into(),
            });
        }
    }
    // Each polygon edge is a diagonal of its region: both endpoints on the
    // region boundary and the open edge inside the region (convexity makes
    // boundary membership sufficient).
    for i in 0..s {
        let (a, c) = (&p_vertices[i], &p_vertices[(i + 1) % s]);
        for v in [a, c] {
            if part.regions[i].contains(v) != Containment::Boundary {
                return Err(ViolationReport::BadDiagonal {
                    region: i,
                    detail: format!("vertex {:?} is not on the region boundary", v),
                });
            }
        }
    }
    // Assignment: exactly once, geometrically consistent, discrepancies.
    let mut disc = vec![0i64; s];
    let mut ids = BTreeSet::new();
    for p in r.iter().chain(b.iter()) {
        if !ids.insert(p.id) {
            return Err(ViolationReport::NotHamiltonian {
                detail: format!("duplicate point id {}", p.id),
            });
        }
        let cell = match part.assignment.get(&p.id) {
            Some(&c) if c < s => c,
            _ => return Err(ViolationReport::CoverageGap { id: p.id }),
        };
        if part.regions[cell].contains(&p.point) == Containment::Outside {
            return Err(ViolationReport::CoverageGap { id: p.id });
        }
        disc[cell] += match p.color {
            Color::Blue => 1,
            Color::Red => -1,
        };
    }
    for (&id, _) in &part.assignment {
        if !ids.contains(&id) {
            return Err(ViolationReport::CoverageGap { id });
        }
    }
    for i in 0..s {
        if disc[i] != want.0[i] {
            return Err(ViolationReport::BadDiscrepancy {
                region: i,
                got: disc[i],
                want: want.0[i],
            });
        }
    }
    Ok(())
}
