//! Three-way wedge splits of a region through a triangle.
//!
//! An apex inside the closed triangle spans three wedge cells, each having
//! one triangle edge as a diagonal. The search enumerates apex candidates on
//! the arrangement of all lines through a triangle vertex and a colored
//! point (plus the edge lines): the per-cell counts are constant on every
//! face of that arrangement, and any count vector achieved on a face is also
//! achievable on one of its boundary edges by assigning the points that land
//! on a wedge ray explicitly. So probing arrangement vertices and edge
//! midpoints is exhaustive.
//!
//! Classification is exact: a floating-point sign is used only when its
//! magnitude clears a conservative error bound, otherwise the rational
//! predicate decides.

use super::PartitionError;
use crate::geom::{
    cross_sign, line_intersection, vec_dot, Color, ColoredPoint, Coord, DirectedLine, Point, Side,
};
use crate::region::{clip, ConvexRegion};
use num_traits::Signed;
use std::collections::HashSet;

/// The three wedge cells spanned by an apex inside a triangle.
#[derive(Clone, Debug)]
pub struct WedgeFrame {
    pub apex: Point,
    pub cells: [ConvexRegion; 3],
}

/// The cells of a feasible apex together with an explicit per-point cell
/// index (parallel to the input point slice).
#[derive(Clone, Debug)]
pub struct WedgeSolution {
    pub cells: [ConvexRegion; 3],
    pub assignment: Vec<usize>,
}

/// Builds the three wedge cells of `apex` inside clockwise triangle `tri`,
/// clipped to `q`. Cell `i` lies between the rays through `tri[i]` and
/// `tri[i+1]` and contains that triangle edge. An apex on an open triangle
/// edge degenerates to the outer half-plane for the cell of that edge; an
/// apex at a vertex is rejected.
pub fn wedge_regions(
    q: &ConvexRegion,
    tri: &[Point; 3],
    apex: &Point,
) -> Result<WedgeFrame, PartitionError> {
    if tri.iter().any(|v| v == apex) {
        return Err(PartitionError::ApexAtVertex);
    }
    let mut cells: Vec<ConvexRegion> = Vec::with_capacity(3);
    for i in 0..3 {
        let l1 = DirectedLine::new(apex.clone(), tri[i].clone());
        let l2 = DirectedLine::new(apex.clone(), tri[(i + 1) % 3].clone());
        let cell = clip(q, &l1, Side::Right)
            .region()
            .and_then(|r| clip(&r, &l2, Side::Left).region())
            .ok_or_else(|| PartitionError::Internal("wedge cell is degenerate".into()))?;
        cells.push(cell);
    }
    let cells: [ConvexRegion; 3] = cells.try_into().unwrap();
    Ok(WedgeFrame {
        apex: apex.clone(),
        cells,
    })
}

/// Conservative floating-point cross sign; `None` when the magnitude does
/// not safely clear the rounding error of the double conversion.
fn approx_cross_sign(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> Option<i32> {
    let ux = b.0 - a.0;
    let uy = b.1 - a.1;
    let vx = c.0 - a.0;
    let vy = c.1 - a.1;
    let det = ux * vy - uy * vx;
    if !det.is_finite() {
        return None;
    }
    let mx = a.0.abs().max(b.0.abs()).max(c.0.abs());
    let my = a.1.abs().max(b.1.abs()).max(c.1.abs());
    let tol = 1e-9 * (ux.abs() * vy.abs() + uy.abs() * vx.abs() + mx * my) + f64::MIN_POSITIVE;
    if det > tol {
        Some(1)
    } else if det < -tol {
        Some(-1)
    } else {
        None
    }
}

/// Bitmask of cells a point may be assigned to for a given apex. Strictly
/// classified points get a single bit; points on a wedge ray get the two
/// adjacent cells; a point equal to the apex gets all three.
fn cell_options(
    apex: &Point,
    apex_f: (f64, f64),
    tri: &[Point; 3],
    tri_f: &[(f64, f64); 3],
    p: &Point,
    p_f: (f64, f64),
) -> Result<u8, PartitionError> {
    if p == apex {
        return Ok(0b111);
    }
    let mut c = [0i32; 3];
    for k in 0..3 {
        c[k] = match approx_cross_sign(apex_f, tri_f[k], p_f) {
            Some(s) => s,
            None => cross_sign(apex, &tri[k], p),
        };
    }
    let mut mask = 0u8;
    for k in 0..3 {
        if c[k] == 0 {
            let rk = tri[k].sub(apex);
            let d = p.sub(apex);
            if vec_dot(&rk, &d).is_positive() {
                // On the ray through tri[k]: boundary of cells k-1 and k.
                mask |= 1 << ((k + 2) % 3);
                mask |= 1 << k;
            }
        }
    }
    if mask != 0 {
        return Ok(mask);
    }
    for i in 0..3 {
        if c[i] < 0 && c[(i + 1) % 3] > 0 {
            return Ok(1 << i);
        }
    }
    Err(PartitionError::Internal(
        "wedge classification found no sector".into(),
    ))
}

fn weight(c: Color) -> i64 {
    match c {
        Color::Blue => 1,
        Color::Red => -1,
    }
}

/// Distributes boundary points over their allowed cells so every residual
/// target reaches zero. Depth-first with an L1 pruning bound.
fn assign_boundary(
    free: &[(usize, u8, i64)],
    resid: &mut [i64; 3],
    chosen: &mut Vec<(usize, usize)>,
) -> bool {
    let slack: i64 = resid.iter().map(|r| r.abs()).sum();
    if free.is_empty() {
        return slack == 0;
    }
    if slack > free.len() as i64 {
        return false;
    }
    let (idx, mask, w) = free[0];
    for cell in 0..3 {
        if mask & (1 << cell) == 0 {
            continue;
        }
        resid[cell] -= w;
        chosen.push((idx, cell));
        if assign_boundary(&free[1..], resid, chosen) {
            return true;
        }
        chosen.pop();
        resid[cell] += w;
    }
    false
}

/// Searches for an apex in the closed triangle whose three wedge cells can
/// hold exactly the prescribed blue-minus-red discrepancies, with an
/// explicit choice for points landing on a wedge ray.
pub fn wedge_search(
    q: &ConvexRegion,
    tri: &[Point; 3],
    pts: &[ColoredPoint],
    targets: &[i64; 3],
) -> Result<WedgeSolution, PartitionError> {
    if cross_sign(&tri[0], &tri[1], &tri[2]) >= 0 {
        return Err(PartitionError::Internal(
            "wedge triangle is not clockwise".into(),
        ));
    }
    let total: i64 = pts.iter().map(|p| weight(p.color)).sum();
    if total != targets.iter().sum::<i64>() {
        return Err(PartitionError::Internal(format!(
            "wedge targets sum to {} but points have discrepancy {}",
            targets.iter().sum::<i64>(),
            total
        )));
    }
    let tri_f = [tri[0].to_f64(), tri[1].to_f64(), tri[2].to_f64()];
    let pts_f: Vec<(f64, f64)> = pts.iter().map(|p| p.point.to_f64()).collect();

    let inside_closed = |x: &Point| -> bool {
        (0..3).all(|k| cross_sign(&tri[k], &tri[(k + 1) % 3], x) <= 0)
    };

    let try_apex = |apex: &Point| -> Result<Option<WedgeSolution>, PartitionError> {
        if tri.iter().any(|v| v == apex) {
            return Ok(None);
        }
        let apex_f = apex.to_f64();
        let mut resid = *targets;
        let mut assignment = vec![usize::MAX; pts.len()];
        let mut free: Vec<(usize, u8, i64)> = Vec::new();
        for (m, p) in pts.iter().enumerate() {
            let mask = cell_options(apex, apex_f, tri, &tri_f, &p.point, pts_f[m])?;
            if mask.count_ones() == 1 {
                let cell = mask.trailing_zeros() as usize;
                assignment[m] = cell;
                resid[cell] -= weight(p.color);
            } else {
                free.push((m, mask, weight(p.color)));
            }
        }
        let mut chosen = Vec::new();
        if !assign_boundary(&free, &mut resid, &mut chosen) {
            return Ok(None);
        }
        for (m, cell) in chosen {
            assignment[m] = cell;
        }
        let frame = wedge_regions(q, tri, apex)?;
        Ok(Some(WedgeSolution {
            cells: frame.cells,
            assignment,
        }))
    };

    let mut seen: HashSet<Point> = HashSet::new();
    let mut probe = |apex: Point| -> Result<Option<WedgeSolution>, PartitionError> {
        if !seen.insert(apex.clone()) {
            return Ok(None);
        }
        try_apex(&apex)
    };

    // Stage 1: the triangle centroid covers the eventless arrangement.
    let three = Coord::from_integer(3.into());
    let centroid = Point::new(
        (&tri[0].x + &tri[1].x + &tri[2].x) / &three,
        (&tri[0].y + &tri[1].y + &tri[2].y) / &three,
    );
    if let Some(sol) = probe(centroid)? {
        return Ok(sol);
    }

    // The line set: triangle edge lines first, then vertex-to-point lines.
    let mut lines: Vec<DirectedLine> = Vec::with_capacity(3 + 3 * pts.len());
    for k in 0..3 {
        lines.push(DirectedLine::new(tri[k].clone(), tri[(k + 1) % 3].clone()));
    }
    for k in 0..3 {
        for p in pts {
            if p.point != tri[k] {
                lines.push(DirectedLine::new(tri[k].clone(), p.point.clone()));
            }
        }
    }

    // Stage 2: pairwise intersections inside the closed triangle.
    let mut on_line: Vec<Vec<Point>> = vec![Vec::new(); lines.len()];
    let mut crossings: Vec<Point> = Vec::new();
    for i in 0..lines.len() {
        for j in (i + 1)..lines.len() {
            if let Some(x) = line_intersection(&lines[i], &lines[j]) {
                if inside_closed(&x) {
                    on_line[i].push(x.clone());
                    on_line[j].push(x.clone());
                    crossings.push(x);
                }
            }
        }
    }
    for x in crossings {
        if let Some(sol) = probe(x)? {
            return Ok(sol);
        }
    }

    // Stage 3: midpoints of consecutive crossings along every line cover the
    // arrangement edges.
    for (i, line_pts) in on_line.iter_mut().enumerate() {
        let d = lines[i].dir();
        line_pts.sort_by(|a, b| {
            let ta = vec_dot(&d, &a.sub(&lines[i].a));
            let tb = vec_dot(&d, &b.sub(&lines[i].a));
            ta.cmp(&tb)
        });
        line_pts.dedup();
        for w in line_pts.windows(2) {
            if let Some(sol) = probe(Point::midpoint(&w[0], &w[1]))? {
                return Ok(sol);
            }
        }
    }

    Err(PartitionError::NoApexFound(format!(
        "no apex meets targets {:?} over {} points",
        targets,
        pts.len()
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::region::{bounding_region, region_intersection, Containment};

    fn p(x: i64, y: i64) -> Point {
        Point::ints(x, y)
    }

    fn cp(id: u32, x: i64, y: i64, color: Color) -> ColoredPoint {
        ColoredPoint::new(id, p(x, y), color)
    }

    fn check_solution(
        q: &ConvexRegion,
        tri: &[Point; 3],
        pts: &[ColoredPoint],
        targets: &[i64; 3],
        sol: &WedgeSolution,
    ) {
        // Cells tile q: areas add up and pairwise interiors are disjoint.
        let total: Coord = sol.cells.iter().map(|c| c.area2()).sum();
        assert_eq!(total, q.area2());
        for i in 0..3 {
            for j in (i + 1)..3 {
                if let Some(r) = region_intersection(&sol.cells[i], &sol.cells[j]).region() {
                    panic!("cells {} and {} overlap with area {}", i, j, r.area2());
                }
            }
        }
        // Each triangle edge is a diagonal of its cell.
        for i in 0..3 {
            assert_ne!(sol.cells[i].contains(&tri[i]), Containment::Outside);
            assert_ne!(sol.cells[i].contains(&tri[(i + 1) % 3]), Containment::Outside);
        }
        // Assignment is geometrically consistent and meets the targets.
        let mut disc = [0i64; 3];
        for (m, pt) in pts.iter().enumerate() {
            let cell = sol.assignment[m];
            assert_ne!(
                sol.cells[cell].contains(&pt.point),
                Containment::Outside,
                "point {} assigned to cell {} that does not contain it",
                pt.id,
                cell
            );
            disc[cell] += weight(pt.color);
        }
        assert_eq!(&disc, targets);
    }

    #[test]
    fn regions_tile_for_interior_apex() {
        let q = bounding_region(&[p(0, 0), p(6, 0), p(3, 6)]);
        let tri = [p(0, 0), p(3, 6), p(6, 0)];
        let frame = wedge_regions(&q, &tri, &p(3, 2)).unwrap();
        let total: Coord = frame.cells.iter().map(|c| c.area2()).sum();
        assert_eq!(total, q.area2());
    }

    #[test]
    fn regions_apex_on_edge_degenerates_to_outer_halfplane() {
        let q = bounding_region(&[p(0, 0), p(6, 0), p(3, 6)]);
        let tri = [p(0, 0), p(3, 6), p(6, 0)];
        // Apex on the open edge tri[2] -> tri[0] (the bottom edge).
        let frame = wedge_regions(&q, &tri, &p(2, 0)).unwrap();
        let total: Coord = frame.cells.iter().map(|c| c.area2()).sum();
        assert_eq!(total, q.area2());
        // Cell 2 is the whole outer half-plane below the bottom edge.
        assert_eq!(
            frame.cells[2].contains(&p(3, -5)),
            Containment::Interior
        );
        assert_eq!(frame.cells[2].contains(&p(3, 1)), Containment::Outside);
    }

    #[test]
    fn regions_reject_vertex_apex() {
        let q = bounding_region(&[p(0, 0), p(6, 0), p(3, 6)]);
        let tri = [p(0, 0), p(3, 6), p(6, 0)];
        assert!(matches!(
            wedge_regions(&q, &tri, &p(0, 0)),
            Err(PartitionError::ApexAtVertex)
        ));
    }

    #[test]
    fn search_splits_three_interior_blues() {
        let tri = [p(0, 0), p(4, 8), p(8, 0)];
        let pts = vec![
            cp(0, 2, 2, Color::Blue),
            cp(1, 4, 4, Color::Blue),
            cp(2, 6, 2, Color::Blue),
        ];
        let all: Vec<Point> = tri
            .iter()
            .cloned()
            .chain(pts.iter().map(|c| c.point.clone()))
            .collect();
        let q = bounding_region(&all);
        let targets = [1, 1, 1];
        let sol = wedge_search(&q, &tri, &pts, &targets).unwrap();
        check_solution(&q, &tri, &pts, &targets, &sol);
    }

    #[test]
    fn search_handles_outside_reds() {
        let tri = [p(0, 0), p(4, 8), p(8, 0)];
        let pts = vec![
            cp(0, 1, 1, Color::Blue),
            cp(1, 4, 5, Color::Blue),
            cp(2, 7, 1, Color::Blue),
            cp(3, 4, 3, Color::Blue),
            cp(4, 4, 11, Color::Red),
        ];
        let all: Vec<Point> = tri
            .iter()
            .cloned()
            .chain(pts.iter().map(|c| c.point.clone()))
            .collect();
        let q = bounding_region(&all);
        let targets = [1, 1, 1];
        let sol = wedge_search(&q, &tri, &pts, &targets).unwrap();
        check_solution(&q, &tri, &pts, &targets, &sol);
    }

    #[test]
    fn search_skewed_targets() {
        let tri = [p(0, 0), p(4, 8), p(8, 0)];
        let pts = vec![
            cp(0, 3, 1, Color::Blue),
            cp(1, 4, 2, Color::Blue),
            cp(2, 5, 1, Color::Blue),
            cp(3, 4, 6, Color::Blue),
        ];
        let all: Vec<Point> = tri
            .iter()
            .cloned()
            .chain(pts.iter().map(|c| c.point.clone()))
            .collect();
        let q = bounding_region(&all);
        let targets = [3, 1, 0];
        let sol = wedge_search(&q, &tri, &pts, &targets).unwrap();
        check_solution(&q, &tri, &pts, &targets, &sol);
    }

    #[test]
    fn search_rejects_unbalanced_targets() {
        let tri = [p(0, 0), p(4, 8), p(8, 0)];
        let pts = vec![cp(0, 4, 3, Color::Blue)];
        let q = bounding_region(&[p(0, 0), p(4, 8), p(8, 0), p(4, 3)]);
        assert!(wedge_search(&q, &tri, &pts, &[1, 1, 1]).is_err());
    }
}
