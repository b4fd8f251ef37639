//! Alternating Hamiltonian paths: the separated-case construction and the
//! assembly of per-region paths into a closed cycle or open path.
//!
//! The separated case repeatedly takes the top alternating hull edge of the
//! remaining points; each new segment lies outside the shrinking hull, so
//! the path never crosses itself. The general case partitions the plane so
//! every polygon edge is a diagonal of a cell with one surplus blue point,
//! solves each cell as a separated instance with the edge's endpoints as
//! path ends, and stitches the paths at the shared polygon vertices.

use crate::geom::{
    general_position, side_of, vec_dot, Color, ColoredPoint, Coord, DirectedLine, GeneralPosition,
    Point, Side,
};
use crate::partition::{plane_partition, Partition, PartitionError};
use crate::region::{convex_hull, Containment, ConvexRegion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, HashMap};

/// A color-alternating polyline over point ids; a closed path repeats no id
/// and implicitly returns to its first vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltPath {
    pub order: Vec<u32>,
    pub closed: bool,
}

/// A problem instance: blue points inside a convex polygon formed by a
/// subset of the red points, remaining red points outside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub blue: Vec<ColoredPoint>,
    pub red: Vec<ColoredPoint>,
    /// Indices into `red` listing the polygon vertices in clockwise order.
    pub polygon: Vec<usize>,
}

#[derive(Clone, Debug, thiserror::Error)]
pub enum PathError {
    #[error("colors are not separated by the given line")]
    NotSeparated,
    #[error("point set has only one color")]
    SingleColor,
    #[error("instance violates the theorem hypotheses: {0}")]
    HypothesisViolated(String),
    #[error("could not place an auxiliary point within the retry budget")]
    AugmentationFailed,
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("internal invariant breach: {0}")]
    Internal(String),
}

impl Instance {
    pub fn polygon_points(&self) -> Vec<Point> {
        self.polygon
            .iter()
            .map(|&i| self.red[i].point.clone())
            .collect()
    }

    pub fn outside_reds(&self) -> Vec<ColoredPoint> {
        self.red
            .iter()
            .enumerate()
            .filter(|(i, _)| !self.polygon.contains(i))
            .map(|(_, p)| p.clone())
            .collect()
    }

    pub fn all_points(&self) -> Vec<ColoredPoint> {
        let mut pts = self.blue.clone();
        pts.extend(self.red.iter().cloned());
        pts
    }

    /// Checks every structural hypothesis: colors, distinct ids, polygon
    /// convex clockwise over distinct red indices, blues strictly inside,
    /// non-polygon reds strictly outside, general position, near-balance.
    pub fn validate(&self) -> Result<(), PathError> {
        let bad = |m: String| Err(PathError::HypothesisViolated(m));
        if self.blue.iter().any(|p| p.color != Color::Blue) {
            return bad("blue list contains a non-blue point".into());
        }
        if self.red.iter().any(|p| p.color != Color::Red) {
            return bad("red list contains a non-red point".into());
        }
        let mut ids: Vec<u32> = self.all_points().iter().map(|p| p.id).collect();
        ids.sort_unstable();
        ids.dedup();
        if ids.len() != self.blue.len() + self.red.len() {
            return bad("point ids are not distinct".into());
        }
        let s = self.polygon.len();
        if s < 3 {
            return bad("polygon needs at least three vertices".into());
        }
        let mut poly_sorted = self.polygon.clone();
        poly_sorted.sort_unstable();
        poly_sorted.dedup();
        if poly_sorted.len() != s || self.polygon.iter().any(|&i| i >= self.red.len()) {
            return bad("polygon indices are not distinct red indices".into());
        }
        let verts = self.polygon_points();
        let region = match ConvexRegion::from_loop(verts.clone()) {
            Some(r) if r.len() == s => r,
            _ => return bad("polygon is not strictly convex".into()),
        };
        // The stated order must be the clockwise boundary order.
        let start = verts
            .iter()
            .position(|v| v == &region.vertices()[0])
            .unwrap();
        for k in 0..s {
            if verts[(start + k) % s] != region.vertices()[k] {
                return bad("polygon vertices are not in clockwise order".into());
            }
        }
        for p in &self.blue {
            if region.contains(&p.point) != Containment::Interior {
                return bad(format!("blue point {} is not strictly inside the polygon", p.id));
            }
        }
        for p in self.outside_reds() {
            if region.contains(&p.point) != Containment::Outside {
                return bad(format!("red point {} is not strictly outside the polygon", p.id));
            }
        }
        let coords: Vec<Point> = self.all_points().iter().map(|p| p.point.clone()).collect();
        if let GeneralPosition::ViolatingTriple(i, j, k) = general_position(&coords) {
            return bad(format!("points {} {} {} are collinear", i, j, k));
        }
        let diff = self.red.len() as i64 - self.blue.len() as i64;
        if diff.abs() > 1 {
            return bad(format!("red/blue sizes differ by {}", diff.abs()));
        }
        Ok(())
    }
}

fn find_point<'a>(pts: &'a [ColoredPoint], id: u32) -> Option<&'a ColoredPoint> {
    pts.iter().find(|p| p.id == id)
}

/// Parameter of the crossing of segment `(a, b)` with the line of `sep`,
/// measured along `sep`'s direction (unnormalized, comparison only).
fn crossing_height(sep: &DirectedLine, a: &Point, b: &Point) -> Option<Coord> {
    let edge = DirectedLine::new(a.clone(), b.clone());
    let x = crate::geom::line_intersection(sep, &edge)?;
    Some(vec_dot(&sep.dir(), &x.sub(&sep.a)))
}

/// The hull edge of `x` joining a red and a blue point and crossing the
/// line of `sep` highest along `sep`'s direction. Points of one color may
/// touch the line; the other color must be strictly on the opposite side.
pub fn top_alternating_edge(x: &[ColoredPoint], sep: &DirectedLine) -> Result<(u32, u32), PathError> {
    let has_red = x.iter().any(|p| p.color == Color::Red);
    let has_blue = x.iter().any(|p| p.color == Color::Blue);
    if !has_red || !has_blue {
        return Err(PathError::SingleColor);
    }
    // Each color must keep to one closed side, and the two colors to
    // different sides.
    let mut red_side: Option<Side> = None;
    let mut blue_side: Option<Side> = None;
    for p in x {
        let s = side_of(sep, &p.point);
        if s == Side::On {
            continue;
        }
        let slot = if p.color == Color::Red {
            &mut red_side
        } else {
            &mut blue_side
        };
        match slot {
            None => *slot = Some(s),
            Some(t) if *t == s => {}
            _ => return Err(PathError::NotSeparated),
        }
    }
    if red_side.is_some() && red_side == blue_side {
        return Err(PathError::NotSeparated);
    }

    let by_point: HashMap<&Point, &ColoredPoint> = x.iter().map(|p| (&p.point, p)).collect();
    let mut best: Option<(Coord, u32, u32)> = None;
    let mut consider = |a: &Point, b: &Point| -> Result<(), PathError> {
        let (pa, pb) = (by_point[a], by_point[b]);
        if pa.color == pb.color {
            return Ok(());
        }
        let (sa, sb) = (side_of(sep, a), side_of(sep, b));
        if sa != Side::On && sb != Side::On && sa == sb {
            return Ok(());
        }
        let h = crossing_height(sep, a, b)
            .ok_or_else(|| PathError::Internal("alternating hull edge parallel to separator".into()))?;
        let (r, bl) = if pa.color == Color::Red {
            (pa.id, pb.id)
        } else {
            (pb.id, pa.id)
        };
        match &best {
            Some((hb, _, _)) if *hb >= h => {}
            _ => best = Some((h, r, bl)),
        }
        Ok(())
    };
    if x.len() == 2 {
        consider(&x[0].point, &x[1].point)?;
    } else {
        let coords: Vec<Point> = x.iter().map(|p| p.point.clone()).collect();
        let hull = convex_hull(&coords)
            .map_err(|_| PathError::Internal("hull of a separated set is degenerate".into()))?;
        for i in 0..hull.len() {
            let e = hull.edge(i);
            consider(&e.a, &e.b)?;
        }
    }
    best.map(|(_, r, b)| (r, b))
        .ok_or_else(|| PathError::Internal("no alternating hull edge crosses the separator".into()))
}

/// Builds an open alternating Hamiltonian path on a line-separated instance
/// with one extra red point, starting at `r1` and ending at `r2`, by
/// repeatedly stepping to the top alternating hull edge of the remainder.
pub fn separated_path(
    r: &[ColoredPoint],
    b: &[ColoredPoint],
    r1: u32,
    r2: u32,
) -> Result<AltPath, PathError> {
    let bad = |m: String| Err(PathError::HypothesisViolated(m));
    if r.len() != b.len() + 1 {
        return bad(format!("need one extra red point, got {} red and {} blue", r.len(), b.len()));
    }
    if r.iter().any(|p| p.color != Color::Red) || b.iter().any(|p| p.color != Color::Blue) {
        return bad("mislabelled colors".into());
    }
    let p1 = find_point(r, r1).ok_or_else(|| PathError::HypothesisViolated("r1 is not a red point".into()))?;
    let p2 = find_point(r, r2).ok_or_else(|| PathError::HypothesisViolated("r2 is not a red point".into()))?;
    if r1 == r2 {
        return bad("path endpoints coincide".into());
    }
    let mut sep = DirectedLine::new(p1.point.clone(), p2.point.clone());
    let mut all: Vec<ColoredPoint> = r.to_vec();
    all.extend(b.iter().cloned());
    // Reds weakly on one side, blues strictly on the other.
    let mut red_side = None;
    for p in r {
        match side_of(&sep, &p.point) {
            Side::On => {
                if p.id != r1 && p.id != r2 {
                    return bad(format!("red point {} lies on the separator", p.id));
                }
            }
            s => match red_side {
                None => red_side = Some(s),
                Some(t) if t == s => {}
                _ => return bad("red points straddle the separator".into()),
            },
        }
    }
    for p in b {
        let s = side_of(&sep, &p.point);
        if s == Side::On || Some(s) == red_side {
            return bad(format!("blue point {} is not strictly across the separator", p.id));
        }
    }
    // Endpoints must be hull vertices of the whole set.
    let coords: Vec<Point> = all.iter().map(|p| p.point.clone()).collect();
    if coords.len() >= 3 {
        let hull = convex_hull(&coords)
            .map_err(|_| PathError::HypothesisViolated("point set is degenerate".into()))?;
        for (id, pt) in [(r1, &p1.point), (r2, &p2.point)] {
            if !hull.vertices().contains(pt) {
                return bad(format!("endpoint {} is not a hull vertex", id));
            }
        }
    }
    // Orient the separator so that r1 is on the top alternating edge.
    if !b.is_empty() {
        let (tr, _) = top_alternating_edge(&all, &sep)?;
        if tr != r1 {
            sep = sep.reversed();
            let (tr2, _) = top_alternating_edge(&all, &sep)?;
            if tr2 != r1 {
                return bad("r1 is not a vertex of a top or bottom alternating edge".into());
            }
        }
    }

    let mut order = vec![r1];
    let mut last_color = Color::Red;
    let mut rest: Vec<ColoredPoint> = all.iter().filter(|p| p.id != r1).cloned().collect();
    while rest.len() > 1 {
        let (er, eb) = top_alternating_edge(&rest, &sep)?;
        let next = if last_color == Color::Red { eb } else { er };
        order.push(next);
        last_color = if last_color == Color::Red {
            Color::Blue
        } else {
            Color::Red
        };
        rest.retain(|p| p.id != next);
    }
    order.push(rest[0].id);
    if *order.last().unwrap() != r2 {
        return Err(PathError::Internal(
            "separated construction did not finish at r2".into(),
        ));
    }
    Ok(AltPath {
        order,
        closed: false,
    })
}

/// Closed alternating Hamiltonian cycle on a balanced instance: partition
/// the plane along the polygon, solve each cell as a separated instance
/// between consecutive polygon vertices, and stitch. The cycle starts at
/// the first polygon vertex and reaches the second one first.
pub fn closed_cycle(inst: &Instance) -> Result<AltPath, PathError> {
    let (path, _) = closed_cycle_with_partition(inst)?;
    Ok(path)
}

/// As [`closed_cycle`], also returning the underlying plane partition.
pub fn closed_cycle_with_partition(inst: &Instance) -> Result<(AltPath, Partition), PathError> {
    inst.validate()?;
    if inst.red.len() != inst.blue.len() {
        return Err(PathError::HypothesisViolated(format!(
            "need equal sizes for a closed path, got {} red and {} blue",
            inst.red.len(),
            inst.blue.len()
        )));
    }
    let verts = inst.polygon_points();
    let s = verts.len();
    let outside = inst.outside_reds();
    let part = plane_partition(&verts, &inst.blue, &outside)?;

    let mut region_pts: Vec<Vec<ColoredPoint>> = vec![Vec::new(); s];
    let by_id: BTreeMap<u32, ColoredPoint> = inst
        .blue
        .iter()
        .chain(outside.iter())
        .map(|p| (p.id, p.clone()))
        .collect();
    for (&id, &cell) in &part.assignment {
        let p = by_id
            .get(&id)
            .ok_or_else(|| PathError::Internal("partition assigned an unknown id".into()))?;
        region_pts[cell].push(p.clone());
    }

    let mut order: Vec<u32> = Vec::with_capacity(inst.red.len() + inst.blue.len());
    for i in 0..s {
        let v1 = &inst.red[inst.polygon[i]];
        let v2 = &inst.red[inst.polygon[(i + 1) % s]];
        let mut reds: Vec<ColoredPoint> = vec![v1.clone(), v2.clone()];
        let mut blues: Vec<ColoredPoint> = Vec::new();
        for p in &region_pts[i] {
            match p.color {
                Color::Red => reds.push(p.clone()),
                Color::Blue => blues.push(p.clone()),
            }
        }
        let sub = separated_path(&reds, &blues, v1.id, v2.id)?;
        // Drop the shared first vertex of every piece; the final piece ends
        // back at the cycle start, which stays implicit in a closed path.
        order.extend(&sub.order[..sub.order.len() - 1]);
    }
    Ok((
        AltPath {
            order,
            closed: true,
        },
        part,
    ))
}

fn rational_in_range(rng: &mut ChaCha8Rng, lo: &Coord, hi: &Coord) -> Coord {
    // A fine fixed grid keeps coordinates small while leaving general
    // position achievable with overwhelming probability.
    let denom: i64 = 1 << 20;
    let t = rng.gen_range(1..denom);
    lo + (hi - lo) * crate::geom::ratio(t, denom)
}

/// Open alternating Hamiltonian path on a near-balanced instance: add one
/// auxiliary point of the minority color (seeded rejection sampling), build
/// the closed cycle, and cut the auxiliary vertex out.
pub fn open_path(inst: &Instance, seed: u64) -> Result<AltPath, PathError> {
    inst.validate()?;
    let diff = inst.red.len() as i64 - inst.blue.len() as i64;
    if diff.abs() != 1 {
        return Err(PathError::HypothesisViolated(format!(
            "need sizes off by one for an open path, got {} red and {} blue",
            inst.red.len(),
            inst.blue.len()
        )));
    }
    let minority = if diff > 0 { Color::Blue } else { Color::Red };
    let verts = inst.polygon_points();
    let poly = ConvexRegion::from_loop(verts.clone())
        .ok_or_else(|| PathError::Internal("validated polygon failed to rebuild".into()))?;
    let all = inst.all_points();
    let coords: Vec<Point> = all.iter().map(|p| p.point.clone()).collect();
    let ambient = crate::region::bounding_region(&coords);
    let aux_id = all.iter().map(|p| p.id).max().unwrap_or(0) + 1;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (sample_region, want) = match minority {
        Color::Blue => (&poly, Containment::Interior),
        Color::Red => (&ambient, Containment::Interior),
    };
    let (min_x, max_x, min_y, max_y) = {
        let vs = sample_region.vertices();
        let mut min_x = vs[0].x.clone();
        let mut max_x = vs[0].x.clone();
        let mut min_y = vs[0].y.clone();
        let mut max_y = vs[0].y.clone();
        for v in vs {
            if v.x < min_x {
                min_x = v.x.clone();
            }
            if v.x > max_x {
                max_x = v.x.clone();
            }
            if v.y < min_y {
                min_y = v.y.clone();
            }
            if v.y > max_y {
                max_y = v.y.clone();
            }
        }
        (min_x, max_x, min_y, max_y)
    };
    for _ in 0..256 {
        let cand = Point::new(
            rational_in_range(&mut rng, &min_x, &max_x),
            rational_in_range(&mut rng, &min_y, &max_y),
        );
        if sample_region.contains(&cand) != want {
            continue;
        }
        // A red auxiliary point must also stay outside the polygon.
        if minority == Color::Red && poly.contains(&cand) != Containment::Outside {
            continue;
        }
        let mut collinear = false;
        'pairs: for i in 0..coords.len() {
            for j in (i + 1)..coords.len() {
                if crate::geom::orientation(&coords[i], &coords[j], &cand)
                    == crate::geom::Orientation::Collinear
                {
                    collinear = true;
                    break 'pairs;
                }
            }
        }
        if collinear {
            continue;
        }
        let mut aug = inst.clone();
        match minority {
            Color::Blue => aug.blue.push(ColoredPoint::new(aux_id, cand, Color::Blue)),
            Color::Red => aug.red.push(ColoredPoint::new(aux_id, cand, Color::Red)),
        }
        let cycle = closed_cycle(&aug)?;
        let k = cycle
            .order
            .iter()
            .position(|&id| id == aux_id)
            .ok_or_else(|| PathError::Internal("auxiliary vertex missing from the cycle".into()))?;
        let mut order: Vec<u32> = Vec::with_capacity(cycle.order.len() - 1);
        order.extend(&cycle.order[k + 1..]);
        order.extend(&cycle.order[..k]);
        return Ok(AltPath {
            order,
            closed: false,
        });
    }
    Err(PathError::AugmentationFailed)
}
