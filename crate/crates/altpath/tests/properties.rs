//! Randomized invariants for the geometry kernel and the oracle.

use altpath::format::{emit_rational, parse_rational};
use altpath::geom::{
    orientation, segments_relation, Color, ColoredPoint, DirectedLine, Orientation, Point, Segment,
    Side,
};
use altpath::oracle::brute_force_path;
use altpath::region::{clip, convex_hull, Containment};
use altpath::verify::verify_path;
use num_traits::Zero;
use proptest::prelude::*;

fn pt() -> impl Strategy<Value = Point> {
    (-1000i64..1000, -1000i64..1000).prop_map(|(x, y)| Point::ints(x, y))
}

fn flip(o: Orientation) -> Orientation {
    match o {
        Orientation::Clockwise => Orientation::CounterClockwise,
        Orientation::CounterClockwise => Orientation::Clockwise,
        Orientation::Collinear => Orientation::Collinear,
    }
}

proptest! {
    #[test]
    fn orientation_swap_antisymmetry(a in pt(), b in pt(), c in pt()) {
        prop_assert_eq!(orientation(&a, &b, &c), flip(orientation(&b, &a, &c)));
    }

    #[test]
    fn orientation_cyclic_invariance(a in pt(), b in pt(), c in pt()) {
        let o = orientation(&a, &b, &c);
        prop_assert_eq!(orientation(&b, &c, &a), o);
        prop_assert_eq!(orientation(&c, &a, &b), o);
    }

    #[test]
    fn rational_emit_is_canonical_fixed_point(n in -10_000i64..10_000, d in 1i64..10_000) {
        let s = format!("{}/{}", n, d);
        let once = emit_rational(&parse_rational(&s).unwrap());
        let twice = emit_rational(&parse_rational(&once).unwrap());
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn hull_contains_all_inputs(pts in proptest::collection::vec(pt(), 3..15)) {
        if let Ok(hull) = convex_hull(&pts) {
            for p in &pts {
                prop_assert_ne!(hull.contains(p), Containment::Outside);
            }
        }
    }

    #[test]
    fn clip_preserves_area(pts in proptest::collection::vec(pt(), 3..12), a in pt(), b in pt()) {
        prop_assume!(a != b);
        if let Ok(q) = convex_hull(&pts) {
            let l = DirectedLine::new(a, b);
            let left = clip(&q, &l, Side::Left)
                .region()
                .map(|r| r.area2())
                .unwrap_or_else(Zero::zero);
            let right = clip(&q, &l, Side::Right)
                .region()
                .map(|r| r.area2())
                .unwrap_or_else(Zero::zero);
            prop_assert_eq!(left + right, q.area2());
        }
    }

    #[test]
    fn segment_relation_is_symmetric(a in pt(), b in pt(), c in pt(), d in pt()) {
        prop_assume!(a != b && c != d);
        let s1 = Segment::new(a, b);
        let s2 = Segment::new(c, d);
        prop_assert_eq!(segments_relation(&s1, &s2), segments_relation(&s2, &s1));
    }

    #[test]
    fn oracle_outputs_always_verify(pts in proptest::collection::vec((pt(), any::<bool>()), 2..8)) {
        let mut reds = Vec::new();
        let mut blues = Vec::new();
        let mut coords: Vec<Point> = Vec::new();
        for (i, (p, is_red)) in pts.into_iter().enumerate() {
            if coords.contains(&p) {
                continue;
            }
            coords.push(p.clone());
            let color = if is_red { Color::Red } else { Color::Blue };
            let cp = ColoredPoint::new(i as u32, p, color);
            if is_red { reds.push(cp) } else { blues.push(cp) }
        }
        let all: Vec<ColoredPoint> = reds.iter().chain(blues.iter()).cloned().collect();
        if let Ok(Some(path)) = brute_force_path(&reds, &blues, false, None) {
            prop_assert_eq!(verify_path(&all, &path), Ok(()));
        }
        if let Ok(Some(cycle)) = brute_force_path(&reds, &blues, true, None) {
            prop_assert_eq!(verify_path(&all, &cycle), Ok(()));
        }
    }
}
