//! Equitable convex partitions of the plane around a convex polygon.
//!
//! The construction splits a bounding box into convex cells so that each
//! polygon edge is a diagonal of one cell and each cell holds a prescribed
//! blue-minus-red surplus (one, for the Hamiltonian-path application).
//! Points falling on cell boundaries are assigned explicitly; the
//! assignment is data, never recomputed geometrically downstream.

mod sweep;
mod wedge;

pub use sweep::{find_halfline, rotate_split};
pub use wedge::{wedge_regions, WedgeFrame};

use crate::geom::{side_of, Color, ColoredPoint, DirectedLine, Point, Side};
use crate::region::{clip, convex_hull, Containment, ConvexRegion};
use std::collections::BTreeMap;

/// Prescribed per-cell blue-minus-red surpluses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Targets(pub Vec<i64>);

/// A convex partition together with an explicit point-to-cell assignment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub regions: Vec<ConvexRegion>,
    pub assignment: BTreeMap<u32, usize>,
}

#[derive(Clone, Debug, thiserror::Error)]
pub enum PartitionError {
    #[error("target vector violates the interval conditions: {0:?}")]
    ConditionsViolated(ConditionsResult),
    #[error("no apex found; this signals an implementation bug: {0}")]
    NoApexFound(String),
    #[error("rotating sweep found no feasible split: {0}")]
    SweepInfeasible(String),
    #[error("half-line target outside its bracketing interval")]
    BracketingViolated,
    #[error("a colored point lies on the diagonal line")]
    PointOnLine,
    #[error("apex coincides with a triangle vertex")]
    ApexAtVertex,
    #[error("invalid chain input: {0}")]
    InvalidChain(String),
    #[error("instance violates the theorem hypotheses: {0}")]
    HypothesisViolated(String),
    #[error("internal invariant breach: {0}")]
    Internal(String),
}

/// Blue count minus red count.
pub fn discrepancy(points: &[ColoredPoint]) -> i64 {
    points
        .iter()
        .map(|p| match p.color {
            Color::Blue => 1,
            Color::Red => -1,
        })
        .sum()
}

fn weight(c: Color) -> i64 {
    match c {
        Color::Blue => 1,
        Color::Red => -1,
    }
}

/// Discrepancy of the points in the closed half-plane `side` of `l`.
/// Points exactly on `l` are an error for the callers here, which always
/// choose split lines avoiding colored points.
fn disc_on_side(pts: &[ColoredPoint], l: &DirectedLine, side: Side) -> Result<i64, PartitionError> {
    let mut d = 0;
    for p in pts {
        match side_of(l, &p.point) {
            s if s == side => d += weight(p.color),
            Side::On => return Err(PartitionError::PointOnLine),
            _ => {}
        }
    }
    Ok(d)
}

fn count_color_on_side(
    pts: &[ColoredPoint],
    l: &DirectedLine,
    side: Side,
    color: Color,
) -> Result<i64, PartitionError> {
    let mut n = 0;
    for p in pts {
        match side_of(l, &p.point) {
            s if s == side => {
                if p.color == color {
                    n += 1;
                }
            }
            Side::On => return Err(PartitionError::PointOnLine),
            _ => {}
        }
    }
    Ok(n)
}

/// Half-plane on the side of polygon edge `edge_index` that is disjoint
/// with the polygon interior. For a clockwise polygon that is the left
/// side of the directed edge.
pub fn outer_halfplane(poly: &ConvexRegion, edge_index: usize) -> (DirectedLine, Side) {
    let e = poly.edge(edge_index);
    (e, Side::Left)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConditionsResult {
    Ok,
    SumMismatch,
    /// 0-based cyclic interval of edge indices whose inequality fails.
    ViolatedInterval(Vec<usize>),
}

/// Checks the sum condition and every cyclic-interval inequality for a
/// target vector on polygon `p_vertices` inside `q`: the targets over an
/// interval must be at least minus the number of red points of `q` lying
/// in the union of the interval's outer edge half-planes.
pub fn check_conditions(
    q: &ConvexRegion,
    p_vertices: &[Point],
    r: &[ColoredPoint],
    b: &[ColoredPoint],
    t: &Targets,
) -> ConditionsResult {
    let s = p_vertices.len();
    assert_eq!(t.0.len(), s);
    let total: i64 = t.0.iter().sum();
    if total != b.len() as i64 - r.len() as i64 {
        return ConditionsResult::SumMismatch;
    }
    // Membership of each red point in each outer half-plane, boundary
    // inclusive, restricted to q.
    let mut in_out: Vec<Vec<bool>> = Vec::with_capacity(r.len());
    for red in r {
        if q.contains(&red.point) == Containment::Outside {
            in_out.push(vec![false; s]);
            continue;
        }
        let mut row = Vec::with_capacity(s);
        for i in 0..s {
            let l = DirectedLine::new(p_vertices[i].clone(), p_vertices[(i + 1) % s].clone());
            row.push(side_of(&l, &red.point) != Side::Right);
        }
        in_out.push(row);
    }
    for start in 0..s {
        for len in 1..=s {
            if len == s && start > 0 {
                continue;
            }
            let interval: Vec<usize> = (0..len).map(|k| (start + k) % s).collect();
            let sum: i64 = interval.iter().map(|&i| t.0[i]).sum();
            let reds = in_out
                .iter()
                .filter(|row| interval.iter().any(|&i| row[i]))
                .count() as i64;
            if sum < -reds {
                return ConditionsResult::ViolatedInterval(interval);
            }
        }
    }
    ConditionsResult::Ok
}

/// Classification of a diagonal `p_i`-`anchor` by the discrepancy of the
/// right half-plane against `i - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagonalClass {
    LeftOnly,
    RightOnly,
    Both,
}

impl DiagonalClass {
    pub fn left_partitionable(self) -> bool {
        matches!(self, DiagonalClass::LeftOnly | DiagonalClass::Both)
    }
    pub fn right_partitionable(self) -> bool {
        matches!(self, DiagonalClass::RightOnly | DiagonalClass::Both)
    }
}

/// Classifies the diagonal from `p_i` (position `i` along the chain, with
/// `2 <= i <= s`) toward `anchor`.
pub fn classify_diagonal(
    p_i: &Point,
    anchor: &Point,
    i: usize,
    _s: usize,
    pts: &[ColoredPoint],
) -> Result<DiagonalClass, PartitionError> {
    let l = DirectedLine::new(p_i.clone(), anchor.clone());
    let d = disc_on_side(pts, &l, Side::Right)?;
    let bound = i as i64 - 1;
    Ok(if d < bound {
        DiagonalClass::LeftOnly
    } else if d > bound {
        DiagonalClass::RightOnly
    } else {
        DiagonalClass::Both
    })
}

/// Lemma-style triangle partition: splits `q` into three convex cells,
/// each having one triangle edge as a diagonal and hitting the prescribed
/// discrepancy, with an explicit assignment for boundary points.
///
/// `b` must lie strictly inside the triangle and `r` inside `q` outside
/// the triangle; the targets must satisfy the interval conditions.
pub fn triangle_partition(
    q: &ConvexRegion,
    p1: &Point,
    p2: &Point,
    p3: &Point,
    b: &[ColoredPoint],
    r: &[ColoredPoint],
    t: &Targets,
) -> Result<Partition, PartitionError> {
    assert_eq!(t.0.len(), 3);
    let tri_pts = vec![p1.clone(), p2.clone(), p3.clone()];
    match check_conditions(q, &tri_pts, r, b, t) {
        ConditionsResult::Ok => {}
        bad => return Err(PartitionError::ConditionsViolated(bad)),
    }
    let mut pts: Vec<ColoredPoint> = Vec::with_capacity(b.len() + r.len());
    pts.extend_from_slice(b);
    pts.extend_from_slice(r);
    let tri = [p1.clone(), p2.clone(), p3.clone()];
    let targets = [t.0[0], t.0[1], t.0[2]];
    let sol = wedge::wedge_search(q, &tri, &pts, &targets)?;
    Ok(Partition {
        regions: sol.cells.to_vec(),
        assignment: pts
            .iter()
            .zip(sol.assignment.iter())
            .map(|(p, &cell)| (p.id, cell))
            .collect(),
    })
}

/// Recursive chain partition: `chain` lists the polygon chain
/// `p_1 .. p_{s+1}` with both ends on the boundary of `q`; `anchor` is a
/// boundary point closing the chain. Produces `s` convex cells, the i-th
/// having `p_i p_{i+1}` as a diagonal and discrepancy one.
pub fn chain_partition(
    q: &ConvexRegion,
    anchor: &Point,
    chain: &[Point],
    b: &[ColoredPoint],
    r: &[ColoredPoint],
) -> Result<Partition, PartitionError> {
    let mut pts: Vec<ColoredPoint> = Vec::with_capacity(b.len() + r.len());
    pts.extend_from_slice(b);
    pts.extend_from_slice(r);
    chain_partition_impl(q, anchor, chain, &pts)
}

fn split_by_line(
    pts: &[ColoredPoint],
    l: &DirectedLine,
) -> Result<(Vec<ColoredPoint>, Vec<ColoredPoint>), PartitionError> {
    let mut left = Vec::new();
    let mut right = Vec::new();
    for p in pts {
        match side_of(l, &p.point) {
            Side::Left => left.push(p.clone()),
            Side::Right => right.push(p.clone()),
            Side::On => return Err(PartitionError::PointOnLine),
        }
    }
    Ok((left, right))
}

fn chain_partition_impl(
    q: &ConvexRegion,
    anchor: &Point,
    chain: &[Point],
    pts: &[ColoredPoint],
) -> Result<Partition, PartitionError> {
    if chain.len() < 2 {
        return Err(PartitionError::InvalidChain(
            "chain needs at least two points".into(),
        ));
    }
    let s = chain.len() - 1;
    if discrepancy(pts) != s as i64 {
        return Err(PartitionError::InvalidChain(format!(
            "chain length {} but discrepancy {}",
            s,
            discrepancy(pts)
        )));
    }
    if s == 1 {
        return Ok(Partition {
            regions: vec![q.clone()],
            assignment: pts.iter().map(|p| (p.id, 0)).collect(),
        });
    }

    // Case 1: the first diagonal is right-partitionable; peel the first
    // cell with a rotating split around p_2 toward p_1.
    let d2 = disc_on_side(pts, &DirectedLine::new(chain[1].clone(), anchor.clone()), Side::Right)?;
    if d2 >= 1 {
        let (_, l) = rotate_split(q, &chain[1], anchor, &chain[0], pts, 1)?;
        let first = clip(q, &l, Side::Right).region().ok_or_else(|| {
            PartitionError::Internal("peeled cell is degenerate".into())
        })?;
        let rest = clip(q, &l, Side::Left).region().ok_or_else(|| {
            PartitionError::Internal("chain remainder is degenerate".into())
        })?;
        let (left_pts, right_pts) = split_by_line(pts, &l)?;
        let sub = chain_partition_impl(&rest, anchor, &chain[1..], &left_pts)?;
        let mut regions = vec![first];
        regions.extend(sub.regions);
        let mut assignment: BTreeMap<u32, usize> =
            right_pts.iter().map(|p| (p.id, 0)).collect();
        for (id, idx) in sub.assignment {
            assignment.insert(id, idx + 1);
        }
        return Ok(Partition { regions, assignment });
    }

    // Case 2: the last diagonal is left-partitionable; peel the last cell
    // around p_s toward p_{s+1}.
    let ds = disc_on_side(pts, &DirectedLine::new(chain[s - 1].clone(), anchor.clone()), Side::Right)?;
    if ds <= s as i64 - 1 {
        let (_, l) = rotate_split(q, &chain[s - 1], &chain[s], anchor, pts, s as i64 - 1)?;
        let last = clip(q, &l, Side::Left).region().ok_or_else(|| {
            PartitionError::Internal("peeled cell is degenerate".into())
        })?;
        let rest = clip(q, &l, Side::Right).region().ok_or_else(|| {
            PartitionError::Internal("chain remainder is degenerate".into())
        })?;
        let (left_pts, right_pts) = split_by_line(pts, &l)?;
        let sub = chain_partition_impl(&rest, anchor, &chain[..s], &right_pts)?;
        let mut regions = sub.regions;
        regions.push(last);
        let mut assignment = sub.assignment;
        for p in &left_pts {
            assignment.insert(p.id, s - 1);
        }
        return Ok(Partition { regions, assignment });
    }

    // Case 3: a left/right sandwich exists strictly inside the chain.
    // Split through a triangle on the anchor and recurse on both sides.
    let j = find_sandwich(anchor, chain, pts, 0, s)?;
    let tri = [anchor.clone(), chain[j - 1].clone(), chain[j].clone()];
    let targets = [j as i64 - 1, 1, (s - j) as i64];
    let sol = wedge::wedge_search(q, &tri, pts, &targets)?;
    let mut cell_pts: [Vec<ColoredPoint>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    for (p, &cell) in pts.iter().zip(sol.assignment.iter()) {
        cell_pts[cell].push(p.clone());
    }
    let sub1 = chain_partition_impl(&sol.cells[0], anchor, &chain[..j], &cell_pts[0])?;
    let sub3 = chain_partition_impl(&sol.cells[2], anchor, &chain[j..], &cell_pts[2])?;
    let mut regions = sub1.regions;
    regions.push(sol.cells[1].clone());
    regions.extend(sub3.regions);
    let mut assignment = sub1.assignment;
    for p in &cell_pts[1] {
        assignment.insert(p.id, j - 1);
    }
    for (id, idx) in sub3.assignment {
        assignment.insert(id, idx + j);
    }
    Ok(Partition { regions, assignment })
}

/// Finds the smallest chain position `j` (relative positions `lo+2 ..=
/// hi-1` mapped onto `chain`) whose diagonal is left-partitionable while
/// the next one is right-partitionable. `lo` shifts position arithmetic
/// for sub-chains. Positions are measured against `anchor`.
fn find_sandwich(
    anchor: &Point,
    chain: &[Point],
    pts: &[ColoredPoint],
    lo: usize,
    s: usize,
) -> Result<usize, PartitionError> {
    let _ = lo;
    for j in 2..=(s - 1) {
        let dj = disc_on_side(
            pts,
            &DirectedLine::new(chain[j - 1].clone(), anchor.clone()),
            Side::Right,
        )?;
        if dj > j as i64 - 1 {
            continue;
        }
        let dj1 = disc_on_side(
            pts,
            &DirectedLine::new(chain[j].clone(), anchor.clone()),
            Side::Right,
        )?;
        if dj1 >= j as i64 {
            return Ok(j);
        }
    }
    Err(PartitionError::Internal(
        "no left/right sandwich found in chain".into(),
    ))
}

/// Partition of the plane (a bounding box) around convex polygon
/// `p_vertices` so that each polygon edge `p_i p_{i+1}` is a diagonal of
/// cell `i` and every cell has discrepancy one.
pub fn plane_partition(
    p_vertices: &[Point],
    b: &[ColoredPoint],
    r: &[ColoredPoint],
) -> Result<Partition, PartitionError> {
    let s = p_vertices.len();
    if s < 3 {
        return Err(PartitionError::HypothesisViolated(
            "polygon needs at least three vertices".into(),
        ));
    }
    let mut pts: Vec<ColoredPoint> = Vec::with_capacity(b.len() + r.len());
    pts.extend_from_slice(b);
    pts.extend_from_slice(r);
    if discrepancy(&pts) != s as i64 {
        return Err(PartitionError::HypothesisViolated(format!(
            "polygon size {} but blue-red discrepancy {}",
            s,
            discrepancy(&pts)
        )));
    }
    let poly = ConvexRegion::from_loop(p_vertices.to_vec()).ok_or_else(|| {
        PartitionError::HypothesisViolated("polygon is not strictly convex".into())
    })?;
    if poly.len() != s {
        return Err(PartitionError::HypothesisViolated(
            "polygon has collinear or repeated vertices".into(),
        ));
    }
    for p in b {
        if poly.contains(&p.point) != Containment::Interior {
            return Err(PartitionError::HypothesisViolated(format!(
                "blue point {} is not strictly inside the polygon",
                p.id
            )));
        }
    }
    for p in r {
        if poly.contains(&p.point) != Containment::Outside {
            return Err(PartitionError::HypothesisViolated(format!(
                "red point {} is not strictly outside the polygon",
                p.id
            )));
        }
    }

    let mut all_pts: Vec<Point> = pts.iter().map(|p| p.point.clone()).collect();
    all_pts.extend_from_slice(p_vertices);
    let ambient = crate::region::bounding_region(&all_pts);

    if s == 3 {
        let tri = [p_vertices[0].clone(), p_vertices[1].clone(), p_vertices[2].clone()];
        let sol = wedge::wedge_search(&ambient, &tri, &pts, &[1, 1, 1])?;
        return Ok(Partition {
            regions: sol.cells.to_vec(),
            assignment: pts
                .iter()
                .zip(sol.assignment.iter())
                .map(|(p, &cell)| (p.id, cell))
                .collect(),
        });
    }

    // First split: find the left/right sandwich around p_1.
    let p1 = &p_vertices[0];
    let mut j_opt = None;
    for j in 2..=(s - 1) {
        let dj = disc_on_side(
            &pts,
            &DirectedLine::new(p_vertices[j - 1].clone(), p1.clone()),
            Side::Right,
        )?;
        if dj > j as i64 - 1 {
            continue;
        }
        let dj1 = disc_on_side(
            &pts,
            &DirectedLine::new(p_vertices[j].clone(), p1.clone()),
            Side::Right,
        )?;
        if dj1 >= j as i64 {
            j_opt = Some(j);
            break;
        }
    }
    let j = j_opt.ok_or_else(|| {
        PartitionError::Internal("no left/right sandwich around p_1".into())
    })?;
    let pj = &p_vertices[j - 1];
    let pj1 = &p_vertices[j];
    let line_j = DirectedLine::new(pj.clone(), p1.clone());
    let line_j1 = DirectedLine::new(pj1.clone(), p1.clone());
    let n1 = j as i64 - 1 - count_color_on_side(&pts, &line_j, Side::Right, Color::Blue)?;
    let n3 = (s - j) as i64 - count_color_on_side(&pts, &line_j1, Side::Left, Color::Blue)?;
    let reds_union = pts
        .iter()
        .filter(|p| {
            p.color == Color::Red
                && (side_of(&line_j, &p.point) == Side::Right
                    || side_of(&line_j1, &p.point) == Side::Left)
        })
        .count() as i64;

    if n1 + n3 >= -reds_union {
        // Direct route: one triangle split, two chain recursions.
        let tri = [p1.clone(), pj.clone(), pj1.clone()];
        let targets = [j as i64 - 1, 1, (s - j) as i64];
        let sol = wedge::wedge_search(&ambient, &tri, &pts, &targets)?;
        let mut cell_pts: [Vec<ColoredPoint>; 3] = [Vec::new(), Vec::new(), Vec::new()];
        for (p, &cell) in pts.iter().zip(sol.assignment.iter()) {
            cell_pts[cell].push(p.clone());
        }
        let sub1 = chain_partition_impl(&sol.cells[0], p1, &p_vertices[..j], &cell_pts[0])?;
        let mut tail_chain: Vec<Point> = p_vertices[j..].to_vec();
        tail_chain.push(p1.clone());
        let sub3 = chain_partition_impl(&sol.cells[2], p1, &tail_chain, &cell_pts[2])?;
        return Ok(assemble(sol.cells[1].clone(), sub1, sub3, &cell_pts[1], j, s));
    }

    // Conditions fail for the pair: carve a convex region around the
    // first chain with a half-line through p_1, and partition the
    // non-convex remainder through a second triangle.
    let l = find_halfline(p1, &line_j, &line_j1, &pts, n1)?;
    let qstar = clip(&ambient, &line_j, Side::Right)
        .region()
        .and_then(|r| clip(&r, &l, Side::Right).region())
        .ok_or_else(|| PartitionError::Internal("carved region is degenerate".into()))?;
    let mut star_pts = Vec::new();
    let mut rest_pts = Vec::new();
    for p in &pts {
        let in_star =
            side_of(&line_j, &p.point) == Side::Right && side_of(&l, &p.point) == Side::Right;
        if in_star {
            star_pts.push(p.clone());
        } else {
            rest_pts.push(p.clone());
        }
    }
    if discrepancy(&star_pts) != j as i64 - 1 {
        return Err(PartitionError::Internal(format!(
            "carved region discrepancy {} != {}",
            discrepancy(&star_pts),
            j - 1
        )));
    }
    let sub_star = chain_partition_impl(&qstar, p1, &p_vertices[..j], &star_pts)?;

    // Second sandwich inside the remainder, positions shifted by j - 1.
    let mut k_opt = None;
    for k in (j + 1)..=(s - 1) {
        let dk = disc_on_side(
            &rest_pts,
            &DirectedLine::new(p_vertices[k - 1].clone(), p1.clone()),
            Side::Right,
        )?;
        if dk > (k - j) as i64 {
            continue;
        }
        let dk1 = disc_on_side(
            &rest_pts,
            &DirectedLine::new(p_vertices[k].clone(), p1.clone()),
            Side::Right,
        )?;
        if dk1 >= (k - j) as i64 + 1 {
            k_opt = Some(k);
            break;
        }
    }
    let k = k_opt.ok_or_else(|| {
        PartitionError::Internal("no left/right sandwich in the remainder".into())
    })?;
    let pk = &p_vertices[k - 1];
    let pk1 = &p_vertices[k];
    let tri = [p1.clone(), pk.clone(), pk1.clone()];
    let targets = [(k - j) as i64, 1, (s - k) as i64];
    let sol = wedge::wedge_search(&ambient, &tri, &rest_pts, &targets)?;

    // Intersect each cell with the (non-convex) remainder; the pieces are
    // convex, so the union of the two half-plane clips is their hull.
    let remainder_cap = |cell: &ConvexRegion| -> Result<ConvexRegion, PartitionError> {
        let a = clip(cell, &line_j, Side::Left).region();
        let c = clip(cell, &l, Side::Left).region();
        match (a, c) {
            (Some(a), Some(c)) => {
                let mut vs: Vec<Point> = a.vertices().to_vec();
                vs.extend_from_slice(c.vertices());
                convex_hull(&vs)
                    .map_err(|_| PartitionError::Internal("degenerate remainder piece".into()))
            }
            (Some(a), None) => Ok(a),
            (None, Some(c)) => Ok(c),
            (None, None) => Err(PartitionError::Internal(
                "cell vanished in the remainder".into(),
            )),
        }
    };
    let qp1 = remainder_cap(&sol.cells[0])?;
    let qp2 = remainder_cap(&sol.cells[1])?;
    let qp3 = remainder_cap(&sol.cells[2])?;
    let mut cell_pts: [Vec<ColoredPoint>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    for (p, &cell) in rest_pts.iter().zip(sol.assignment.iter()) {
        cell_pts[cell].push(p.clone());
    }
    let sub1 = chain_partition_impl(&qp1, p1, &p_vertices[(j - 1)..k], &cell_pts[0])?;
    let mut tail_chain: Vec<Point> = p_vertices[k..].to_vec();
    tail_chain.push(p1.clone());
    let sub3 = chain_partition_impl(&qp3, p1, &tail_chain, &cell_pts[2])?;

    // Final indices: carved cells 0..j-2, middle chain j-1..k-2, cell
    // k-1, tail k..s-1.
    let mut regions: Vec<ConvexRegion> = sub_star.regions;
    regions.extend(sub1.regions);
    regions.push(qp2);
    regions.extend(sub3.regions);
    let mut assignment = sub_star.assignment;
    for (id, idx) in sub1.assignment {
        assignment.insert(id, idx + (j - 1));
    }
    for p in &cell_pts[1] {
        assignment.insert(p.id, k - 1);
    }
    for (id, idx) in sub3.assignment {
        assignment.insert(id, idx + k);
    }
    Ok(Partition { regions, assignment })
}

fn assemble(
    middle: ConvexRegion,
    sub1: Partition,
    sub3: Partition,
    middle_pts: &[ColoredPoint],
    j: usize,
    _s: usize,
) -> Partition {
    let mut regions = sub1.regions;
    regions.push(middle);
    regions.extend(sub3.regions);
    let mut assignment = sub1.assignment;
    for p in middle_pts {
        assignment.insert(p.id, j - 1);
    }
    for (id, idx) in sub3.assignment {
        assignment.insert(id, idx + j);
    }
    Partition { regions, assignment }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;
    use crate::region::bounding_region;
    use crate::verify::verify_partition;

    fn cp(id: u32, x: i64, y: i64, color: Color) -> ColoredPoint {
        ColoredPoint::new(id, Point::ints(x, y), color)
    }

    fn square(half: i64) -> ConvexRegion {
        ConvexRegion::from_loop(vec![
            Point::ints(-half, -half),
            Point::ints(-half, half),
            Point::ints(half, half),
            Point::ints(half, -half),
        ])
        .unwrap()
    }

    #[test]
    fn discrepancy_counts() {
        assert_eq!(
            discrepancy(&[
                cp(0, 0, 0, Color::Blue),
                cp(1, 1, 0, Color::Blue),
                cp(2, 2, 0, Color::Red)
            ]),
            1
        );
        assert_eq!(discrepancy(&[]), 0);
        assert_eq!(
            discrepancy(&[cp(0, 0, 0, Color::Red), cp(1, 1, 0, Color::Red)]),
            -2
        );
    }

    #[test]
    fn outer_halfplane_excludes_interior() {
        let sq = square(1);
        let inside = sq.interior_point();
        for i in 0..sq.len() {
            let (l, side) = outer_halfplane(&sq, i);
            assert_eq!(side, Side::Left);
            assert_eq!(side_of(&l, &inside), Side::Right);
        }
    }

    fn clockwise_triangle() -> Vec<Point> {
        vec![Point::ints(0, 0), Point::ints(3, 6), Point::ints(6, 0)]
    }

    #[test]
    fn conditions_all_ones() {
        let verts = clockwise_triangle();
        let q = square(50);
        let b = vec![
            cp(0, 3, 1, Color::Blue),
            cp(1, 2, 2, Color::Blue),
            cp(2, 4, 2, Color::Blue),
        ];
        assert_eq!(
            check_conditions(&q, &verts, &[], &b, &Targets(vec![1, 1, 1])),
            ConditionsResult::Ok
        );
    }

    #[test]
    fn conditions_violated_interval() {
        let verts = clockwise_triangle();
        let q = square(50);
        let b = vec![
            cp(0, 3, 1, Color::Blue),
            cp(1, 2, 2, Color::Blue),
            cp(2, 4, 2, Color::Blue),
        ];
        assert_eq!(
            check_conditions(&q, &verts, &[], &b, &Targets(vec![-1, 2, 2])),
            ConditionsResult::ViolatedInterval(vec![0])
        );
    }

    #[test]
    fn conditions_negative_target_covered_by_reds() {
        let verts = clockwise_triangle();
        let q = square(50);
        let b = vec![
            cp(0, 3, 1, Color::Blue),
            cp(1, 2, 2, Color::Blue),
            cp(2, 4, 2, Color::Blue),
            cp(3, 3, 3, Color::Blue),
            cp(4, 4, 1, Color::Blue),
        ];
        // Both reds sit in the outer half-plane of edge p1-p2 (the west
        // side), so the interval {0} bound relaxes to -2.
        let r = vec![cp(5, -2, 1, Color::Red), cp(6, -3, 4, Color::Red)];
        assert_eq!(
            check_conditions(&q, &verts, &r, &b, &Targets(vec![-2, 4, 1])),
            ConditionsResult::Ok
        );
        assert_eq!(
            check_conditions(&q, &verts, &r, &b, &Targets(vec![-3, 5, 1])),
            ConditionsResult::ViolatedInterval(vec![0])
        );
        assert_eq!(
            check_conditions(&q, &verts, &r, &b, &Targets(vec![0, 4, 1])),
            ConditionsResult::SumMismatch
        );
    }

    #[test]
    fn classify_diagonal_cases() {
        // Diagonal directed from (0,4) down to (0,0); its right side is
        // the half-plane x < 0.
        let p_i = Point::ints(0, 4);
        let anchor = Point::ints(0, 0);
        let none: Vec<ColoredPoint> = vec![];
        assert_eq!(
            classify_diagonal(&p_i, &anchor, 2, 3, &none).unwrap(),
            DiagonalClass::LeftOnly
        );
        let one_blue = vec![cp(0, -2, 2, Color::Blue)];
        assert_eq!(
            classify_diagonal(&p_i, &anchor, 2, 3, &one_blue).unwrap(),
            DiagonalClass::Both
        );
        let two_blue = vec![cp(0, -2, 2, Color::Blue), cp(1, -3, 1, Color::Blue)];
        assert_eq!(
            classify_diagonal(&p_i, &anchor, 2, 3, &two_blue).unwrap(),
            DiagonalClass::RightOnly
        );
        let on_line = vec![cp(0, 0, 2, Color::Blue)];
        assert!(matches!(
            classify_diagonal(&p_i, &anchor, 2, 3, &on_line),
            Err(PartitionError::PointOnLine)
        ));
    }

    #[test]
    fn triangle_partition_one_blue_per_cell() {
        let verts = clockwise_triangle();
        let q = square(50);
        let b = vec![
            cp(0, 3, 1, Color::Blue),
            cp(1, 2, 2, Color::Blue),
            cp(2, 4, 2, Color::Blue),
        ];
        let t = Targets(vec![1, 1, 1]);
        let part =
            triangle_partition(&q, &verts[0], &verts[1], &verts[2], &b, &[], &t).unwrap();
        verify_partition(&q, &verts, &[], &b, &part, &t).unwrap();
    }

    #[test]
    fn triangle_partition_single_blue_goes_to_first_cell() {
        let verts = clockwise_triangle();
        let q = square(50);
        let b = vec![cp(0, 3, 2, Color::Blue)];
        let t = Targets(vec![1, 0, 0]);
        let part =
            triangle_partition(&q, &verts[0], &verts[1], &verts[2], &b, &[], &t).unwrap();
        assert_eq!(part.assignment[&0], 0);
        verify_partition(&q, &verts, &[], &b, &part, &t).unwrap();
    }

    #[test]
    fn triangle_partition_sum_mismatch() {
        let verts = clockwise_triangle();
        let q = square(50);
        let b = vec![cp(0, 3, 2, Color::Blue)];
        assert!(matches!(
            triangle_partition(&q, &verts[0], &verts[1], &verts[2], &b, &[], &Targets(vec![1, 1, 1])),
            Err(PartitionError::ConditionsViolated(ConditionsResult::SumMismatch))
        ));
    }

    #[test]
    fn chain_partition_base_case() {
        let q = square(10);
        let chain = vec![Point::ints(10, 0), Point::ints(-10, 0)];
        let b = vec![cp(0, 0, -5, Color::Blue)];
        let part = chain_partition(&q, &chain[0], &chain, &b, &[]).unwrap();
        assert_eq!(part.regions, vec![q.clone()]);
        assert_eq!(part.assignment[&0], 0);
    }

    #[test]
    fn chain_partition_two_cells() {
        let q = square(10);
        let chain = vec![Point::ints(10, 0), Point::ints(0, -10), Point::ints(-10, 0)];
        let b = vec![cp(0, 0, -5, Color::Blue), cp(1, 2, -4, Color::Blue)];
        let part = chain_partition(&q, &chain[0], &chain, &b, &[]).unwrap();
        assert_eq!(part.regions.len(), 2);
        let mut counts = [0i64; 2];
        for (_, &cell) in &part.assignment {
            counts[cell] += 1;
        }
        assert_eq!(counts, [1, 1]);
        let total: crate::geom::Coord = part.regions.iter().map(|r| r.area2()).sum();
        assert_eq!(total, q.area2());
    }

    #[test]
    fn chain_partition_three_cells_with_red() {
        let q = square(10);
        let chain = vec![
            Point::ints(10, 0),
            Point::ints(5, -10),
            Point::ints(-5, -10),
            Point::ints(-10, 0),
        ];
        let b = vec![
            cp(0, 0, -5, Color::Blue),
            cp(1, 3, -4, Color::Blue),
            cp(2, -3, -4, Color::Blue),
            cp(3, 0, -8, Color::Blue),
        ];
        let r = vec![cp(4, 1, 5, Color::Red)];
        let part = chain_partition(&q, &chain[0], &chain, &b, &r).unwrap();
        assert_eq!(part.regions.len(), 3);
        let mut disc = [0i64; 3];
        for p in b.iter().chain(r.iter()) {
            disc[part.assignment[&p.id]] += weight(p.color);
        }
        assert_eq!(disc, [1, 1, 1]);
        let total: crate::geom::Coord = part.regions.iter().map(|x| x.area2()).sum();
        assert_eq!(total, q.area2());
    }

    #[test]
    fn plane_partition_triangle() {
        let verts = clockwise_triangle();
        let b = vec![
            cp(0, 3, 1, Color::Blue),
            cp(1, 2, 2, Color::Blue),
            cp(2, 4, 2, Color::Blue),
        ];
        let part = plane_partition(&verts, &b, &[]).unwrap();
        let mut all: Vec<Point> = b.iter().map(|p| p.point.clone()).collect();
        all.extend(verts.iter().cloned());
        let ambient = bounding_region(&all);
        verify_partition(&ambient, &verts, &[], &b, &part, &Targets(vec![1, 1, 1])).unwrap();
    }

    #[test]
    fn plane_partition_hexagon() {
        let p = crate::generate::GenParams {
            s: 6,
            n_blue: 12,
            n_red_outside: 6,
            seed: 7,
            coordinate_range: 100,
        };
        let inst = crate::generate::generate(&p).unwrap();
        let verts = inst.polygon_points();
        let outside = inst.outside_reds();
        let part = plane_partition(&verts, &inst.blue, &outside).unwrap();
        // all_points already includes the polygon vertices.
        let all: Vec<Point> = inst.all_points().iter().map(|x| x.point.clone()).collect();
        let ambient = bounding_region(&all);
        verify_partition(&ambient, &verts, &outside, &inst.blue, &part, &Targets(vec![1; 6]))
            .unwrap();
    }
}
