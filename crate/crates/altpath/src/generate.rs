//! Seeded random instance generation.
//!
//! The polygon is the convex hull of integer points sampled on a coarse
//! circle (rejected until it has exactly `s` vertices); blue points are
//! sampled strictly inside it and the remaining red points strictly
//! outside it within a bounding box. Points are accepted one at a time
//! only if they keep the whole set in general position, so the finished
//! instance always validates.

use crate::geom::{orientation, Color, ColoredPoint, Orientation, Point};
use crate::path::Instance;
use crate::region::{convex_hull, Containment, ConvexRegion};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GenError {
    #[error("inconsistent parameters: {0}")]
    BadParams(String),
    #[error("generation failed after the retry budget: {0}")]
    GenerationFailed(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenParams {
    /// Polygon size, at least 3.
    pub s: usize,
    /// Interior blue points, at least `s`.
    pub n_blue: usize,
    /// Red points outside the polygon.
    pub n_red_outside: usize,
    pub seed: u64,
    /// Radius of the sampling circle; the box extends to twice this.
    pub coordinate_range: u32,
}

impl GenParams {
    pub fn validate(&self) -> Result<(), GenError> {
        if self.s < 3 {
            return Err(GenError::BadParams(format!("s = {} < 3", self.s)));
        }
        if self.n_blue < self.s {
            return Err(GenError::BadParams(format!(
                "n_blue = {} < s = {}",
                self.n_blue, self.s
            )));
        }
        if self.coordinate_range == 0 {
            return Err(GenError::BadParams("coordinate_range must be positive".into()));
        }
        let diff = self.n_blue as i64 - self.n_red_outside as i64 - self.s as i64;
        if diff.abs() > 1 {
            return Err(GenError::BadParams(format!(
                "n_blue - n_red_outside - s = {} must be in -1..=1",
                diff
            )));
        }
        Ok(())
    }
}

const POLYGON_TRIES: usize = 2000;
const POINT_TRIES: usize = 20000;
/// Denominator for interior/exterior samples; a fine grid keeps accidental
/// collinearities rare while staying exact.
const GRID: i64 = 1 << 12;

/// True iff adding `cand` keeps every triple affinely independent.
fn keeps_general_position(existing: &[Point], cand: &Point) -> bool {
    if existing.iter().any(|p| p == cand) {
        return false;
    }
    for i in 0..existing.len() {
        for j in (i + 1)..existing.len() {
            if orientation(&existing[i], &existing[j], cand) == Orientation::Collinear {
                return false;
            }
        }
    }
    true
}

fn sample_polygon(rng: &mut ChaCha8Rng, s: usize, radius: f64) -> Option<ConvexRegion> {
    let mut pts: Vec<Point> = Vec::with_capacity(s);
    for _ in 0..s {
        let t = rng.gen_range(0.0..std::f64::consts::TAU);
        let x = (radius * t.cos()).round() as i64;
        let y = (radius * t.sin()).round() as i64;
        pts.push(Point::ints(x, y));
    }
    let hull = convex_hull(&pts).ok()?;
    if hull.len() == s {
        Some(hull)
    } else {
        None
    }
}

fn sample_grid_point(rng: &mut ChaCha8Rng, half_extent: i64) -> Point {
    let span = half_extent * GRID;
    Point {
        x: BigRational::new(BigInt::from(rng.gen_range(-span..=span)), BigInt::from(GRID)),
        y: BigRational::new(BigInt::from(rng.gen_range(-span..=span)), BigInt::from(GRID)),
    }
}

pub fn generate(p: &GenParams) -> Result<Instance, GenError> {
    p.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let radius = p.coordinate_range as f64;

    let polygon = (0..POLYGON_TRIES)
        .find_map(|_| sample_polygon(&mut rng, p.s, radius))
        .ok_or_else(|| {
            GenError::GenerationFailed(format!(
                "no {}-vertex hull on a circle of radius {}",
                p.s, p.coordinate_range
            ))
        })?;
    let mut placed: Vec<Point> = polygon.vertices().to_vec();

    let half_extent = 2 * p.coordinate_range as i64;
    let mut sample_with = |placed: &mut Vec<Point>,
                           accept: &dyn Fn(&Point) -> bool,
                           what: &str|
     -> Result<Point, GenError> {
        for _ in 0..POINT_TRIES {
            let cand = sample_grid_point(&mut rng, half_extent);
            if accept(&cand) && keeps_general_position(placed, &cand) {
                placed.push(cand.clone());
                return Ok(cand);
            }
        }
        Err(GenError::GenerationFailed(format!(
            "no {} point within the retry budget",
            what
        )))
    };

    let mut blue = Vec::with_capacity(p.n_blue);
    for i in 0..p.n_blue {
        let poly = &polygon;
        let pt = sample_with(
            &mut placed,
            &|c| poly.contains(c) == Containment::Interior,
            "interior blue",
        )?;
        blue.push(ColoredPoint::new(i as u32, pt, Color::Blue));
    }

    let mut red: Vec<ColoredPoint> = polygon
        .vertices()
        .iter()
        .enumerate()
        .map(|(i, v)| ColoredPoint::new((p.n_blue + i) as u32, v.clone(), Color::Red))
        .collect();
    for i in 0..p.n_red_outside {
        let poly = &polygon;
        let pt = sample_with(
            &mut placed,
            &|c| poly.contains(c) == Containment::Outside,
            "exterior red",
        )?;
        red.push(ColoredPoint::new(
            (p.n_blue + p.s + i) as u32,
            pt,
            Color::Red,
        ));
    }

    let inst = Instance {
        blue,
        red,
        polygon: (0..p.s).collect(),
    };
    inst.validate()
        .map_err(|e| GenError::GenerationFailed(format!("generated instance invalid: {}", e)))?;
    Ok(inst)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let p = GenParams {
            s: 3,
            n_blue: 3,
            n_red_outside: 0,
            seed: 1,
            coordinate_range: 64,
        };
        let a = generate(&p).unwrap();
        let b = generate(&p).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.polygon.len(), 3);
    }

    #[test]
    fn seeds_differ() {
        let mut p = GenParams {
            s: 4,
            n_blue: 6,
            n_red_outside: 2,
            seed: 1,
            coordinate_range: 64,
        };
        let a = generate(&p).unwrap();
        p.seed = 2;
        let b = generate(&p).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn hexagon_shape() {
        let p = GenParams {
            s: 6,
            n_blue: 12,
            n_red_outside: 6,
            seed: 7,
            coordinate_range: 100,
        };
        let inst = generate(&p).unwrap();
        assert_eq!(inst.blue.len(), 12);
        assert_eq!(inst.red.len(), 12);
        assert_eq!(inst.polygon.len(), 6);
    }

    #[test]
    fn inconsistent_counts_rejected() {
        let p = GenParams {
            s: 3,
            n_blue: 8,
            n_red_outside: 0,
            seed: 1,
            coordinate_range: 64,
        };
        assert!(matches!(generate(&p), Err(GenError::BadParams(_))));
    }
}
