//! Exact planar primitives: rational points, orientation and side predicates,
//! segment relations.
//!
//! Everything here is exact; there is no floating point on any decision path.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::fmt;

/// Exact coordinate: an arbitrary-precision rational in canonical form.
pub type Coord = BigRational;

/// Builds a coordinate from an integer.
pub fn coord(n: i64) -> Coord {
    BigRational::from_integer(BigInt::from(n))
}

/// Builds a coordinate from a numerator/denominator pair.
pub fn ratio(num: i64, den: i64) -> Coord {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Coord,
    pub y: Coord,
}

impl Point {
    pub fn new(x: Coord, y: Coord) -> Self {
        Point { x, y }
    }

    pub fn ints(x: i64, y: i64) -> Self {
        Point::new(coord(x), coord(y))
    }

    /// Vector difference `self - other`.
    pub fn sub(&self, other: &Point) -> (Coord, Coord) {
        (&self.x - &other.x, &self.y - &other.y)
    }

    pub fn midpoint(a: &Point, b: &Point) -> Point {
        let two = coord(2);
        Point::new((&a.x + &b.x) / &two, (&a.y + &b.y) / &two)
    }

    pub fn to_f64(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        (
            self.x.to_f64().unwrap_or(f64::NAN),
            self.y.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Color {
    Red,
    Blue,
}

/// A colored input point with a stable id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredPoint {
    pub id: u32,
    pub point: Point,
    pub color: Color,
}

impl ColoredPoint {
    pub fn new(id: u32, point: Point, color: Color) -> Self {
        ColoredPoint { id, point, color }
    }
}

/// Directed line through `a` and `b` (direction `a -> b`); `a != b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedLine {
    pub a: Point,
    pub b: Point,
}

impl DirectedLine {
    pub fn new(a: Point, b: Point) -> Self {
        assert!(a != b, "degenerate directed line");
        DirectedLine { a, b }
    }

    pub fn reversed(&self) -> DirectedLine {
        DirectedLine::new(self.b.clone(), self.a.clone())
    }

    /// Direction vector `b - a`.
    pub fn dir(&self) -> (Coord, Coord) {
        self.b.sub(&self.a)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub p: Point,
    pub q: Point,
}

impl Segment {
    pub fn new(p: Point, q: Point) -> Self {
        assert!(p != q, "degenerate segment");
        Segment { p, q }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Clockwise,
    CounterClockwise,
    Collinear,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    On,
}

/// Sign of the exact 2x2 determinant of (b - a, c - a).
pub fn orientation(a: &Point, b: &Point, c: &Point) -> Orientation {
    match cross_sign(a, b, c) {
        s if s > 0 => Orientation::CounterClockwise,
        s if s < 0 => Orientation::Clockwise,
        _ => Orientation::Collinear,
    }
}

/// Sign (-1, 0, 1) of cross(b - a, c - a).
pub fn cross_sign(a: &Point, b: &Point, c: &Point) -> i32 {
    let (ux, uy) = b.sub(a);
    let (vx, vy) = c.sub(a);
    let det = &ux * &vy - &uy * &vx;
    if det.is_zero() {
        0
    } else if det.is_positive() {
        1
    } else {
        -1
    }
}

/// Exact cross product of two vectors.
pub fn vec_cross(u: &(Coord, Coord), v: &(Coord, Coord)) -> Coord {
    &u.0 * &v.1 - &u.1 * &v.0
}

/// Exact dot product of two vectors.
pub fn vec_dot(u: &(Coord, Coord), v: &(Coord, Coord)) -> Coord {
    &u.0 * &v.0 + &u.1 * &v.1
}

/// Which closed half-plane of `l` contains `p`. `Left` together with `On`
/// forms the closed left half-plane.
pub fn side_of(l: &DirectedLine, p: &Point) -> Side {
    match orientation(&l.a, &l.b, p) {
        Orientation::CounterClockwise => Side::Left,
        Orientation::Clockwise => Side::Right,
        Orientation::Collinear => Side::On,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneralPosition {
    Ok,
    ViolatingTriple(usize, usize, usize),
}

/// Checks that no three of the given points are collinear. Returns the
/// lexicographically smallest violating index triple if any.
pub fn general_position(points: &[Point]) -> GeneralPosition {
    let n = points.len();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                if orientation(&points[i], &points[j], &points[k]) == Orientation::Collinear {
                    return GeneralPosition::ViolatingTriple(i, j, k);
                }
            }
        }
    }
    GeneralPosition::Ok
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SegmentRelation {
    Disjoint,
    ProperCross,
    SharedEndpoint,
    Touch,
}

fn between_on_line(a: &Point, b: &Point, p: &Point) -> bool {
    // Assumes a, b, p collinear; true if p is in the closed segment ab.
    let (ux, uy) = b.sub(a);
    let (vx, vy) = p.sub(a);
    let t = vec_dot(&(ux.clone(), uy.clone()), &(vx, vy));
    let len2 = vec_dot(&(ux.clone(), uy.clone()), &(ux, uy));
    !t.is_negative() && t <= len2
}

/// True if `p` lies on the closed segment `s`.
pub fn point_on_segment(s: &Segment, p: &Point) -> bool {
    orientation(&s.p, &s.q, p) == Orientation::Collinear && between_on_line(&s.p, &s.q, p)
}

/// Classifies how two segments intersect.
pub fn segments_relation(s1: &Segment, s2: &Segment) -> SegmentRelation {
    let d1 = cross_sign(&s1.p, &s1.q, &s2.p);
    let d2 = cross_sign(&s1.p, &s1.q, &s2.q);
    let d3 = cross_sign(&s2.p, &s2.q, &s1.p);
    let d4 = cross_sign(&s2.p, &s2.q, &s1.q);

    if d1 * d2 < 0 && d3 * d4 < 0 {
        return SegmentRelation::ProperCross;
    }

    let shared = [
        (&s1.p, &s2.p),
        (&s1.p, &s2.q),
        (&s1.q, &s2.p),
        (&s1.q, &s2.q),
    ]
    .iter()
    .filter(|(a, b)| a == b)
    .count();

    // Any touching beyond the shared endpoint itself?
    let mut touch = false;
    if d1 == 0 && between_on_line(&s1.p, &s1.q, &s2.p) && s2.p != s1.p && s2.p != s1.q {
        touch = true;
    }
    if d2 == 0 && between_on_line(&s1.p, &s1.q, &s2.q) && s2.q != s1.p && s2.q != s1.q {
        touch = true;
    }
    if d3 == 0 && between_on_line(&s2.p, &s2.q, &s1.p) && s1.p != s2.p && s1.p != s2.q {
        touch = true;
    }
    if d4 == 0 && between_on_line(&s2.p, &s2.q, &s1.q) && s1.q != s2.p && s1.q != s2.q {
        touch = true;
    }

    if shared > 0 {
        if touch || shared > 1 {
            // Collinear overlap reaching past a shared endpoint.
            SegmentRelation::Touch
        } else {
            SegmentRelation::SharedEndpoint
        }
    } else if touch {
        SegmentRelation::Touch
    } else {
        SegmentRelation::Disjoint
    }
}

/// Exact intersection point of two non-parallel lines.
pub fn line_intersection(l1: &DirectedLine, l2: &DirectedLine) -> Option<Point> {
    let d1 = l1.dir();
    let d2 = l2.dir();
    let denom = vec_cross(&d1, &d2);
    if denom.is_zero() {
        return None;
    }
    let w = l2.a.sub(&l1.a);
    let t = vec_cross(&w, &d2) / denom;
    Some(Point::new(&l1.a.x + &t * &d1.0, &l1.a.y + &t * &d1.1))
}

/// Reduces a rational vector to a canonical primitive integer direction.
/// Used to deduplicate and to combine directions deterministically.
pub fn primitive_dir(v: &(Coord, Coord)) -> (BigInt, BigInt) {
    use num_integer::Integer;
    let (vx, vy) = v;
    assert!(!(vx.is_zero() && vy.is_zero()), "zero direction");
    let den_lcm = vx.denom().lcm(vy.denom());
    let ix = vx.numer() * (&den_lcm / vx.denom());
    let iy = vy.numer() * (&den_lcm / vy.denom());
    let g = ix.gcd(&iy);
    (ix / &g, iy / &g)
}
