//! Rotating line sweeps: peeling one cell off a region by a chord through a
//! fixed pivot, and carving a half-plane by a half-line through a fixed apex.
//!
//! Both sweeps enumerate the finitely many angular positions where a colored
//! point crosses the moving line and probe one direction inside every open
//! gap. Gap directions are sums of the adjacent primitive event directions,
//! which keeps them exact rationals and deterministic.

use super::{disc_on_side, PartitionError};
use crate::geom::{
    point_on_segment, primitive_dir, side_of, vec_cross, Color, ColoredPoint, Coord, DirectedLine,
    Point, Segment, Side,
};
use crate::region::{boundary_arc, ConvexRegion};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

type IntDir = (BigInt, BigInt);

fn int_cross(a: &IntDir, b: &IntDir) -> BigInt {
    &a.0 * &b.1 - &a.1 * &b.0
}

/// Strictly clockwise-between test for directions spanning less than a
/// half-turn from `from` to `to`.
fn strictly_between(from: &(Coord, Coord), e: &(Coord, Coord), to: &(Coord, Coord)) -> bool {
    vec_cross(from, e).is_negative() && vec_cross(e, to).is_negative()
}

/// Sorts primitive directions clockwise; all inputs span less than a
/// half-turn, so the pairwise cross sign is a total order.
fn sort_clockwise(dirs: &mut Vec<IntDir>) {
    dirs.sort_by(|a, b| {
        let c = int_cross(a, b);
        if c.is_negative() {
            Ordering::Less
        } else if c.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    });
    dirs.dedup();
}

/// One probe direction strictly inside the open gap between two primitive
/// directions less than a half-turn apart (clockwise perpendicular when the
/// gap spans exactly a half-turn).
fn gap_direction(a: &IntDir, b: &IntDir) -> IntDir {
    let c = (&a.0 + &b.0, &a.1 + &b.1);
    if c.0.is_zero() && c.1.is_zero() {
        (a.1.clone(), -a.0.clone())
    } else {
        c
    }
}

fn offset(p: &Point, d: &IntDir) -> Point {
    Point::new(
        &p.x + BigRational::from_integer(d.0.clone()),
        &p.y + BigRational::from_integer(d.1.clone()),
    )
}

fn neg(v: &(Coord, Coord)) -> (Coord, Coord) {
    (-v.0.clone(), -v.1.clone())
}

/// Rotates a chord around `pivot` (strictly inside `q`), its free end
/// sweeping the clockwise boundary arc from `arc_from` to `arc_to`, until the
/// discrepancy of the points in the closed right half-plane of the chord
/// (directed pivot to free end) equals `target`. The chosen chord avoids all
/// colored points. Returns the free end and the directed split line.
pub fn rotate_split(
    q: &ConvexRegion,
    pivot: &Point,
    arc_from: &Point,
    arc_to: &Point,
    pts: &[ColoredPoint],
    target: i64,
) -> Result<(Point, DirectedLine), PartitionError> {
    if arc_from == arc_to {
        return Err(PartitionError::SweepInfeasible(
            "rotation arc is empty".into(),
        ));
    }
    let arc = boundary_arc(q, arc_from, arc_to).ok_or_else(|| {
        PartitionError::Internal("sweep arc endpoint is not on the region boundary".into())
    })?;
    for w in arc.windows(2) {
        let (u, v) = (&w[0], &w[1]);
        if u == pivot || v == pivot {
            return Err(PartitionError::Internal(
                "sweep pivot lies on the swept arc".into(),
            ));
        }
        let du = u.sub(pivot);
        let dv = v.sub(pivot);
        let mut events: Vec<IntDir> = Vec::new();
        for p in pts {
            let d = p.point.sub(pivot);
            if d.0.is_zero() && d.1.is_zero() {
                return Err(PartitionError::Internal(
                    "colored point coincides with the sweep pivot".into(),
                ));
            }
            for e in [d.clone(), neg(&d)] {
                if strictly_between(&du, &e, &dv) {
                    events.push(primitive_dir(&e));
                }
            }
        }
        sort_clockwise(&mut events);
        let mut bounds: Vec<IntDir> = Vec::with_capacity(events.len() + 2);
        bounds.push(primitive_dir(&du));
        bounds.extend(events);
        bounds.push(primitive_dir(&dv));
        let seg = Segment::new(u.clone(), v.clone());
        for g in bounds.windows(2) {
            if g[0] == g[1] {
                continue;
            }
            let c = gap_direction(&g[0], &g[1]);
            let ray = DirectedLine::new(pivot.clone(), offset(pivot, &c));
            let edge = DirectedLine::new(u.clone(), v.clone());
            let x = match crate::geom::line_intersection(&ray, &edge) {
                Some(x) => x,
                None => continue,
            };
            if !point_on_segment(&seg, &x) {
                continue;
            }
            let l = DirectedLine::new(pivot.clone(), x.clone());
            if disc_on_side(pts, &l, Side::Right)? == target {
                return Ok((x, l));
            }
        }
    }
    Err(PartitionError::SweepInfeasible(format!(
        "no chord through the pivot reaches discrepancy {}",
        target
    )))
}

/// Finds a half-line from `apex` into the cone clockwise between the
/// extensions of `wedge_right` and `wedge_left` past the apex, whose full
/// line avoids every colored point and for which the number of red points in
/// the closed right side of both `wedge_right` and the half-line equals
/// `-target`. Fails with `BracketingViolated` when the boundary counts do not
/// enclose the goal.
pub fn find_halfline(
    apex: &Point,
    wedge_right: &DirectedLine,
    wedge_left: &DirectedLine,
    pts: &[ColoredPoint],
    target: i64,
) -> Result<DirectedLine, PartitionError> {
    let goal = -target;
    let d_start = wedge_right.dir();
    let d_end = wedge_left.dir();
    let red_right = |extra: &DirectedLine| -> i64 {
        pts.iter()
            .filter(|p| {
                p.color == Color::Red
                    && side_of(wedge_right, &p.point) == Side::Right
                    && side_of(extra, &p.point) == Side::Right
            })
            .count() as i64
    };
    let r_start = pts
        .iter()
        .filter(|p| p.color == Color::Red && side_of(wedge_right, &p.point) == Side::Right)
        .count() as i64;
    let r_end = red_right(wedge_left);
    if !(r_start >= goal && r_end < goal) {
        return Err(PartitionError::BracketingViolated);
    }
    let mut events: Vec<IntDir> = Vec::new();
    for p in pts {
        let d = p.point.sub(apex);
        for e in [d.clone(), neg(&d)] {
            if strictly_between(&d_start, &e, &d_end) {
                events.push(primitive_dir(&e));
            }
        }
    }
    sort_clockwise(&mut events);
    let mut bounds: Vec<IntDir> = Vec::with_capacity(events.len() + 2);
    bounds.push(primitive_dir(&d_start));
    bounds.extend(events);
    bounds.push(primitive_dir(&d_end));
    for g in bounds.windows(2) {
        if g[0] == g[1] {
            continue;
        }
        let c = gap_direction(&g[0], &g[1]);
        let l = DirectedLine::new(apex.clone(), offset(apex, &c));
        if pts.iter().any(|p| side_of(&l, &p.point) == Side::On) {
            continue;
        }
        if red_right(&l) == goal {
            return Ok(l);
        }
    }
    Err(PartitionError::SweepInfeasible(
        "no half-line direction reaches the red-count goal".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::region::clip;

    fn p(x: i64, y: i64) -> Point {
        Point::ints(x, y)
    }

    fn cp(id: u32, x: i64, y: i64, color: Color) -> ColoredPoint {
        ColoredPoint::new(id, p(x, y), color)
    }

    #[test]
    fn rotate_split_peels_exact_discrepancy() {
        // Square region, pivot in the middle; three blue points spread out,
        // peel a cell of discrepancy 1 sweeping the left edge downwards.
        let q = ConvexRegion::from_loop(vec![p(0, 0), p(0, 10), p(10, 10), p(10, 0)]).unwrap();
        let pivot = p(5, 5);
        let pts = vec![
            cp(0, 2, 8, Color::Blue),
            cp(1, 2, 5, Color::Blue),
            cp(2, 2, 2, Color::Blue),
        ];
        // Clockwise boundary of the canonical square runs (0,0) -> (0,10) ->
        // (10,10) -> (10,0); the swept arc from (0,10) to (0,0) walks the
        // top, right and bottom edges.
        let (x, l) = rotate_split(&q, &pivot, &p(0, 10), &p(0, 0), &pts, 1).unwrap();
        assert_eq!(disc_on_side(&pts, &l, Side::Right).unwrap(), 1);
        assert_eq!(disc_on_side(&pts, &l, Side::Left).unwrap(), 2);
        // The free end lands on the boundary, away from the arc corners.
        assert_eq!(q.contains(&x), crate::region::Containment::Boundary);
        // Both parts of the split are full-dimensional.
        assert!(clip(&q, &l, Side::Right).region().is_some());
        assert!(clip(&q, &l, Side::Left).region().is_some());
    }

    #[test]
    fn rotate_split_counts_points_behind_the_pivot() {
        // A point behind the pivot crosses the chord line too; the sweep
        // still lands on the prescribed discrepancy.
        let q = ConvexRegion::from_loop(vec![p(0, 0), p(0, 10), p(10, 10), p(10, 0)]).unwrap();
        let pivot = p(5, 5);
        let pts = vec![
            cp(0, 2, 8, Color::Blue),
            cp(1, 8, 1, Color::Blue),
            cp(2, 2, 3, Color::Red),
            cp(3, 1, 6, Color::Blue),
        ];
        let (_, l) = rotate_split(&q, &pivot, &p(0, 10), &p(0, 0), &pts, 1).unwrap();
        assert_eq!(disc_on_side(&pts, &l, Side::Right).unwrap(), 1);
    }

    #[test]
    fn rotate_split_infeasible_when_arc_degenerate() {
        let q = ConvexRegion::from_loop(vec![p(0, 0), p(0, 10), p(10, 10), p(10, 0)]).unwrap();
        let err = rotate_split(&q, &p(5, 5), &p(0, 10), &p(0, 10), &[], 1).unwrap_err();
        assert!(matches!(err, PartitionError::SweepInfeasible(_)));
    }

    #[test]
    fn halfline_hits_red_goal() {
        // Apex at the origin; wedge opens downward-right between the
        // extensions of the two incoming chords. Reds sprinkled in the cone.
        let apex = p(0, 0);
        let wedge_right = DirectedLine::new(p(-2, 4), apex.clone()); // dir (2,-4)
        let wedge_left = DirectedLine::new(p(4, 2), apex.clone()); // dir (-4,-2)
        let pts = vec![
            cp(0, 1, -5, Color::Red),
            cp(1, -1, -4, Color::Red),
            cp(2, -3, -2, Color::Red),
        ];
        // All three reds are right of wedge_right; sweeping clockwise the
        // right-of-both count drops 3, 2, 1, 0.
        for goal in 1..=3i64 {
            let l = find_halfline(&apex, &wedge_right, &wedge_left, &pts, -goal).unwrap();
            let n = pts
                .iter()
                .filter(|q| {
                    side_of(&wedge_right, &q.point) == Side::Right
                        && side_of(&l, &q.point) == Side::Right
                })
                .count() as i64;
            assert_eq!(n, goal);
            // The chosen line avoids every point.
            assert!(pts.iter().all(|q| side_of(&l, &q.point) != Side::On));
        }
    }

    #[test]
    fn halfline_bracketing_violation() {
        let apex = p(0, 0);
        let wedge_right = DirectedLine::new(p(-2, 4), apex.clone());
        let wedge_left = DirectedLine::new(p(4, 2), apex.clone());
        let pts = vec![cp(0, 1, -5, Color::Red)];
        let err = find_halfline(&apex, &wedge_right, &wedge_left, &pts, -3).unwrap_err();
        assert!(matches!(err, PartitionError::BracketingViolated));
    }
}
