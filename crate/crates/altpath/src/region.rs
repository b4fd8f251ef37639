//! Bounded convex regions with exact vertices: hulls, half-plane clipping,
//! intersection and area.
//!
//! Regions are stored as strictly convex clockwise vertex lists, rotated so
//! the lexicographically smallest vertex comes first. That makes equality a
//! plain vertex comparison. Degenerate results of clipping (a point or a
//! segment) are reported as `Empty`.

use crate::geom::{
    coord, cross_sign, line_intersection, orientation, side_of, vec_dot, Coord, DirectedLine,
    Orientation, Point, Side,
};
use num_traits::{Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexRegion {
    vertices: Vec<Point>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Containment {
    Interior,
    Boundary,
    Outside,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum RegionError {
    #[error("hull is degenerate: fewer than 3 distinct points or all collinear")]
    DegenerateHull,
}

impl ConvexRegion {
    /// Builds a region from vertices of a convex polygon in either
    /// orientation, possibly containing repeated or collinear vertices.
    /// Returns `None` when the input is not full-dimensional.
    pub fn from_loop(vertices: Vec<Point>) -> Option<ConvexRegion> {
        let mut vs: Vec<Point> = Vec::with_capacity(vertices.len());
        for v in vertices {
            if vs.last() != Some(&v) {
                vs.push(v);
            }
        }
        while vs.len() > 1 && vs.first() == vs.last() {
            vs.pop();
        }
        if vs.len() < 3 {
            return None;
        }
        // Drop vertices collinear with their neighbours.
        loop {
            let n = vs.len();
            if n < 3 {
                return None;
            }
            let mut removed = false;
            let mut out: Vec<Point> = Vec::with_capacity(n);
            for i in 0..n {
                let prev = &vs[(i + n - 1) % n];
                let next = &vs[(i + 1) % n];
                if orientation(prev, &vs[i], next) == Orientation::Collinear {
                    removed = true;
                } else {
                    out.push(vs[i].clone());
                }
            }
            vs = out;
            if !removed {
                break;
            }
        }
        if vs.len() < 3 {
            return None;
        }
        // Orient clockwise.
        let mut sum = Coord::zero();
        let n = vs.len();
        for i in 0..n {
            let j = (i + 1) % n;
            sum += &vs[i].x * &vs[j].y - &vs[j].x * &vs[i].y;
        }
        if sum.is_zero() {
            return None;
        }
        if sum.is_positive() {
            vs.reverse();
        }
        // Verify strict convexity in clockwise order.
        for i in 0..n {
            let j = (i + 1) % n;
            let k = (i + 2) % n;
            if orientation(&vs[i], &vs[j], &vs[k]) != Orientation::Clockwise {
                return None;
            }
        }
        // Canonical rotation: smallest vertex first.
        let start = vs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| a.cmp(b))
            .map(|(i, _)| i)
            .unwrap();
        vs.rotate_left(start);
        Some(ConvexRegion { vertices: vs })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Directed edge `i` (from vertex i to vertex i+1), clockwise.
    pub fn edge(&self, i: usize) -> DirectedLine {
        let n = self.vertices.len();
        DirectedLine::new(
            self.vertices[i % n].clone(),
            self.vertices[(i + 1) % n].clone(),
        )
    }

    /// Twice the (positive) area, exact.
    pub fn area2(&self) -> Coord {
        let n = self.vertices.len();
        let mut sum = Coord::zero();
        for i in 0..n {
            let j = (i + 1) % n;
            sum += &self.vertices[i].x * &self.vertices[j].y
                - &self.vertices[j].x * &self.vertices[i].y;
        }
        // Clockwise orientation makes the shoelace sum negative.
        -sum
    }

    /// Classifies a point against the region. Interior points lie strictly
    /// right of every clockwise edge.
    pub fn contains(&self, p: &Point) -> Containment {
        let n = self.vertices.len();
        let mut on_edge = false;
        for i in 0..n {
            let a = &self.vertices[i];
            let b = &self.vertices[(i + 1) % n];
            match cross_sign(a, b, p) {
                s if s > 0 => return Containment::Outside,
                0 => on_edge = true,
                _ => {}
            }
        }
        if on_edge {
            Containment::Boundary
        } else {
            Containment::Interior
        }
    }

    /// An interior point (the vertex centroid).
    pub fn interior_point(&self) -> Point {
        let n = coord(self.vertices.len() as i64);
        let mut sx = Coord::zero();
        let mut sy = Coord::zero();
        for v in &self.vertices {
            sx += &v.x;
            sy += &v.y;
        }
        Point::new(sx / &n, sy / &n)
    }
}

/// Result of clipping or intersecting: a full-dimensional region or nothing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClipResult {
    Region(ConvexRegion),
    Empty,
}

impl ClipResult {
    pub fn region(self) -> Option<ConvexRegion> {
        match self {
            ClipResult::Region(r) => Some(r),
            ClipResult::Empty => None,
        }
    }

    pub fn expect_region(self, what: &str) -> ConvexRegion {
        match self {
            ClipResult::Region(r) => r,
            ClipResult::Empty => panic!("clip produced an empty region: {}", what),
        }
    }
}

/// Exact half-plane clip. `keep` selects which closed side of `l` survives.
pub fn clip(region: &ConvexRegion, l: &DirectedLine, keep: Side) -> ClipResult {
    assert!(keep != Side::On);
    let vs = region.vertices();
    let n = vs.len();
    let keeps = |s: Side| s == keep || s == Side::On;
    let mut out: Vec<Point> = Vec::with_capacity(n + 1);
    for i in 0..n {
        let cur = &vs[i];
        let nxt = &vs[(i + 1) % n];
        let sc = side_of(l, cur);
        let sn = side_of(l, nxt);
        if keeps(sc) {
            out.push(cur.clone());
        }
        if (keeps(sc) && !keeps(sn)) || (!keeps(sc) && keeps(sn)) {
            let edge = DirectedLine::new(cur.clone(), nxt.clone());
            if let Some(x) = line_intersection(&edge, l) {
                out.push(x);
            }
        }
    }
    match ConvexRegion::from_loop(out) {
        Some(r) => ClipResult::Region(r),
        None => ClipResult::Empty,
    }
}

/// Exact intersection of two convex regions via iterated clipping.
pub fn region_intersection(r1: &ConvexRegion, r2: &ConvexRegion) -> ClipResult {
    let mut cur = r1.clone();
    for i in 0..r2.len() {
        let e = r2.edge(i);
        match clip(&cur, &e, Side::Right) {
            ClipResult::Region(r) => cur = r,
            ClipResult::Empty => return ClipResult::Empty,
        }
    }
    ClipResult::Region(cur)
}

/// Clockwise convex hull of a point set.
pub fn convex_hull(points: &[Point]) -> Result<ConvexRegion, RegionError> {
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return Err(RegionError::DegenerateHull);
    }
    // Monotone chain, counterclockwise.
    let mut lower: Vec<Point> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && cross_sign(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= 0
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && cross_sign(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= 0
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    ConvexRegion::from_loop(lower).ok_or(RegionError::DegenerateHull)
}

/// Axis-aligned box at distance at least three times the coordinate spread
/// (floor one) from every input point, with corners collinear with no pair
/// of input points.
pub fn bounding_region(points: &[Point]) -> ConvexRegion {
    assert!(!points.is_empty());
    let mut min_x = points[0].x.clone();
    let mut max_x = points[0].x.clone();
    let mut min_y = points[0].y.clone();
    let mut max_y = points[0].y.clone();
    for p in points {
        if p.x < min_x {
            min_x = p.x.clone();
        }
        if p.x > max_x {
            max_x = p.x.clone();
        }
        if p.y < min_y {
            min_y = p.y.clone();
        }
        if p.y > max_y {
            max_y = p.y.clone();
        }
    }
    let mut spread = &max_x - &min_x;
    let sy = &max_y - &min_y;
    if sy > spread {
        spread = sy;
    }
    let one = coord(1);
    if spread < one {
        spread = one;
    }
    let base = coord(3) * &spread;
    let grow = &spread / coord(8) + coord(1);
    // The x margin grows linearly and the y margin quadratically per
    // attempt, so each corner traces a parabola; any line through two
    // input points meets it at most twice, which bounds the retries.
    let mut attempt: i64 = 0;
    loop {
        let margin_x = &base + coord(attempt) * &grow;
        let margin_y = &base + coord(attempt * attempt) * &grow;
        let corners = [
            Point::new(&min_x - &margin_x, &min_y - &margin_y),
            Point::new(&min_x - &margin_x, &max_y + &margin_y),
            Point::new(&max_x + &margin_x, &max_y + &margin_y),
            Point::new(&max_x + &margin_x, &min_y - &margin_y),
        ];
        let mut ok = true;
        'outer: for c in &corners {
            for i in 0..points.len() {
                for j in (i + 1)..points.len() {
                    if points[i] == points[j] {
                        continue;
                    }
                    if orientation(&points[i], &points[j], c) == Orientation::Collinear {
                        ok = false;
                        break 'outer;
                    }
                }
            }
        }
        if ok {
            return ConvexRegion::from_loop(corners.to_vec()).expect("bounding box is a rectangle");
        }
        attempt += 1;
    }
}

/// True if `p` lies on the closed edge from vertex `i` to vertex `i+1`.
fn on_edge(region: &ConvexRegion, i: usize, p: &Point) -> bool {
    let e = region.edge(i);
    if orientation(&e.a, &e.b, p) != Orientation::Collinear {
        return false;
    }
    let d = e.dir();
    let w = p.sub(&e.a);
    let t = vec_dot(&d, &w);
    let len2 = vec_dot(&d, &d);
    !t.is_negative() && t <= len2
}

/// Position of a boundary point: index of an edge containing it plus the
/// scaled parameter along that edge. Points equal to a vertex report the
/// edge that starts there (parameter zero).
fn boundary_position(region: &ConvexRegion, p: &Point) -> Option<(usize, Coord)> {
    let n = region.len();
    for i in 0..n {
        if &region.vertices()[i] == p {
            return Some((i, Coord::zero()));
        }
    }
    for i in 0..n {
        if on_edge(region, i, p) {
            let e = region.edge(i);
            let d = e.dir();
            let w = p.sub(&e.a);
            let t = vec_dot(&d, &w) / vec_dot(&d, &d);
            return Some((i, t));
        }
    }
    None
}

/// Walks the boundary clockwise from `from` to `to`, returning the polyline
/// `from, v..., to` including every vertex strictly in between. Both points
/// must lie on the boundary.
pub fn boundary_arc(region: &ConvexRegion, from: &Point, to: &Point) -> Option<Vec<Point>> {
    let (ei, et) = boundary_position(region, from)?;
    let (fi, ft) = boundary_position(region, to)?;
    let n = region.len();
    let mut arc = vec![from.clone()];
    if ei == fi && et < ft {
        arc.push(to.clone());
        return Some(arc);
    }
    let mut i = (ei + 1) % n;
    loop {
        // Vertex i starts edge i; emit it, then stop once we reach `to`'s edge.
        if i == fi {
            if region.vertices()[i] != *to && !ft.is_zero() {
                arc.push(region.vertices()[i].clone());
            }
            arc.push(to.clone());
            // Drop a duplicated vertex when `to` sits exactly on vertex i.
            if ft.is_zero() && arc[arc.len() - 1] == region.vertices()[i] && arc.len() >= 2 {
                // nothing extra pushed
            }
            break;
        }
        arc.push(region.vertices()[i].clone());
        i = (i + 1) % n;
    }
    // Deduplicate accidental repeats (from == vertex etc.).
    arc.dedup();
    if arc.len() < 2 {
        return None;
    }
    Some(arc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::ratio;

    fn p(x: i64, y: i64) -> Point {
        Point::ints(x, y)
    }

    fn unit_square() -> ConvexRegion {
        ConvexRegion::from_loop(vec![p(0, 0), p(0, 1), p(1, 1), p(1, 0)]).unwrap()
    }

    #[test]
    fn hull_of_square_with_center() {
        let h = convex_hull(&[p(0, 0), p(4, 0), p(4, 4), p(0, 4), p(2, 2)]).unwrap();
        assert_eq!(h.len(), 4);
        for q in [p(0, 0), p(4, 0), p(4, 4), p(0, 4), p(2, 2)] {
            assert_ne!(h.contains(&q), Containment::Outside);
        }
    }

    #[test]
    fn hull_of_triangle_is_triangle() {
        let h = convex_hull(&[p(0, 0), p(3, 0), p(0, 3)]).unwrap();
        assert_eq!(h.len(), 3);
    }

    #[test]
    fn hull_degenerate() {
        assert_eq!(
            convex_hull(&[p(0, 0), p(1, 1), p(2, 2)]),
            Err(RegionError::DegenerateHull)
        );
        assert_eq!(
            convex_hull(&[p(0, 0), p(1, 1)]),
            Err(RegionError::DegenerateHull)
        );
    }

    #[test]
    fn hull_idempotent() {
        let pts = [p(0, 0), p(5, 1), p(6, 4), p(2, 7), p(-1, 3), p(3, 3)];
        let h = convex_hull(&pts).unwrap();
        let h2 = convex_hull(h.vertices()).unwrap();
        assert_eq!(h, h2);
    }

    #[test]
    fn area2_basics() {
        assert_eq!(unit_square().area2(), coord(2));
        let t = ConvexRegion::from_loop(vec![p(0, 0), p(4, 0), p(0, 4)]).unwrap();
        assert_eq!(t.area2(), coord(16));
    }

    #[test]
    fn contains_square() {
        let sq = unit_square();
        assert_eq!(
            sq.contains(&Point::new(ratio(1, 2), ratio(1, 2))),
            Containment::Interior
        );
        assert_eq!(
            sq.contains(&Point::new(coord(0), ratio(1, 2))),
            Containment::Boundary
        );
        assert_eq!(sq.contains(&p(2, 0)), Containment::Outside);
    }

    #[test]
    fn clip_square_in_half() {
        let sq = unit_square();
        let l = DirectedLine::new(Point::new(ratio(1, 2), coord(0)), Point::new(ratio(1, 2), coord(1)));
        let left = clip(&sq, &l, Side::Left).region().unwrap();
        assert_eq!(left.area2(), coord(1));
        let right = clip(&sq, &l, Side::Right).region().unwrap();
        assert_eq!(right.area2(), coord(1));
    }

    #[test]
    fn clip_miss_is_identity() {
        let t = ConvexRegion::from_loop(vec![p(0, 0), p(2, 0), p(1, 2)]).unwrap();
        let l = DirectedLine::new(p(0, 5), p(1, 5));
        assert_eq!(clip(&t, &l, Side::Right), ClipResult::Region(t.clone()));
        assert_eq!(clip(&t, &l, Side::Left), ClipResult::Empty);
    }

    #[test]
    fn clip_area_additivity() {
        let r = ConvexRegion::from_loop(vec![p(0, 0), p(7, 1), p(9, 6), p(3, 8), p(-2, 4)]).unwrap();
        let l = DirectedLine::new(p(1, -1), p(4, 9));
        let a = clip(&r, &l, Side::Left);
        let b = clip(&r, &l, Side::Right);
        let total: Coord = [a, b]
            .into_iter()
            .filter_map(|c| c.region())
            .map(|r| r.area2())
            .sum();
        assert_eq!(total, r.area2());
    }

    #[test]
    fn intersection_cases() {
        let a = ConvexRegion::from_loop(vec![p(0, 0), p(2, 0), p(2, 2), p(0, 2)]).unwrap();
        let b = ConvexRegion::from_loop(vec![p(1, 1), p(3, 1), p(3, 3), p(1, 3)]).unwrap();
        let c = region_intersection(&a, &b).region().unwrap();
        assert_eq!(
            c,
            ConvexRegion::from_loop(vec![p(1, 1), p(2, 1), p(2, 2), p(1, 2)]).unwrap()
        );
        assert_eq!(region_intersection(&a, &a), ClipResult::Region(a.clone()));
        let far = ConvexRegion::from_loop(vec![p(4, 0), p(6, 0), p(6, 2), p(4, 2)]).unwrap();
        assert_eq!(region_intersection(&a, &far), ClipResult::Empty);
    }

    #[test]
    fn bounding_region_rules() {
        let b = bounding_region(&[p(0, 0)]);
        assert_eq!(
            b,
            ConvexRegion::from_loop(vec![p(-3, -3), p(3, -3), p(3, 3), p(-3, 3)]).unwrap()
        );
        let pts = [p(0, 0), p(10, 3), p(4, 10), p(7, 7)];
        let b2 = bounding_region(&pts);
        for q in &pts {
            assert_eq!(b2.contains(q), Containment::Interior);
        }
    }

    #[test]
    fn boundary_arc_walks_clockwise() {
        let sq = unit_square();
        // Clockwise order of the canonical square: (0,0),(0,1),(1,1),(1,0).
        let from = Point::new(coord(0), ratio(1, 2));
        let to = Point::new(coord(1), ratio(1, 2));
        let arc = boundary_arc(&sq, &from, &to).unwrap();
        assert_eq!(arc.first().unwrap(), &from);
        assert_eq!(arc.last().unwrap(), &to);
        assert!(arc.contains(&p(0, 1)) && arc.contains(&p(1, 1)));
        assert!(!arc.contains(&p(0, 0)));
    }
}
