//! Brute-force oracle: exhaustive search for alternating non-crossing
//! Hamiltonian paths on tiny instances. Used only to cross-check the
//! constructive solver in tests.

use crate::geom::{segments_relation, Color, ColoredPoint, Segment, SegmentRelation};
use crate::path::AltPath;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("instance has {0} points, over the brute-force budget of {1}")]
    BudgetExceeded(usize, usize),
}

const BUDGET: usize = 12;

struct Search<'a> {
    pts: &'a [ColoredPoint],
    closed: bool,
    end: Option<u32>,
    order: Vec<usize>,
    used: Vec<bool>,
}

impl<'a> Search<'a> {
    fn segment(&self, i: usize, j: usize) -> Segment {
        Segment::new(self.pts[i].point.clone(), self.pts[j].point.clone())
    }

    /// The candidate segment from the current tail to `next` (or the
    /// closing segment when `next` is the first vertex) must share exactly
    /// one endpoint with the adjacent segment and stay disjoint from the
    /// rest.
    fn segment_fits(&self, from_pos: usize, to: usize, closing: bool) -> bool {
        let new_seg = self.segment(self.order[from_pos], to);
        let segs = self.order.len() - 1;
        for k in 0..segs {
            let existing = self.segment(self.order[k], self.order[k + 1]);
            let adjacent = if closing {
                k == 0 || k == segs - 1
            } else {
                k == segs - 1
            };
            let rel = segments_relation(&existing, &new_seg);
            let ok = if adjacent {
                rel == SegmentRelation::SharedEndpoint
            } else {
                rel == SegmentRelation::Disjoint
            };
            if !ok {
                return false;
            }
        }
        true
    }

    fn dfs(&mut self) -> bool {
        let n = self.pts.len();
        if self.order.len() == n {
            if self.closed {
                return self.segment_fits(n - 1, self.order[0], true);
            }
            if let Some(end) = self.end {
                return self.pts[*self.order.last().unwrap()].id == end;
            }
            return true;
        }
        let last = *self.order.last().unwrap();
        let want = match self.pts[last].color {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        };
        for next in 0..n {
            if self.used[next] || self.pts[next].color != want {
                continue;
            }
            // An open path must keep the required endpoint available last.
            if let Some(end) = self.end {
                if self.pts[next].id == end && self.order.len() != n - 1 {
                    continue;
                }
            }
            if !self.segment_fits(self.order.len() - 1, next, false) {
                continue;
            }
            self.order.push(next);
            self.used[next] = true;
            if self.dfs() {
                return true;
            }
            self.used[next] = false;
            self.order.pop();
        }
        false
    }
}

/// Exhaustive search for an alternating non-crossing Hamiltonian path
/// (open) or cycle (closed) over at most twelve points, optionally pinned
/// to the given endpoint ids. Returns the first solution in input order.
pub fn brute_force_path(
    r: &[ColoredPoint],
    b: &[ColoredPoint],
    closed: bool,
    endpoints: Option<(u32, u32)>,
) -> Result<Option<AltPath>, OracleError> {
    let mut pts: Vec<ColoredPoint> = r.to_vec();
    pts.extend(b.iter().cloned());
    let n = pts.len();
    if n > BUDGET {
        return Err(OracleError::BudgetExceeded(n, BUDGET));
    }
    if n == 0 {
        return Ok(None);
    }
    if closed && (r.len() != b.len() || n < 4) {
        return Ok(None);
    }
    let starts: Vec<usize> = match endpoints {
        Some((s, _)) => pts.iter().position(|p| p.id == s).into_iter().collect(),
        // For cycles any rotation works; pinning the start removes the
        // rotational symmetry.
        None if closed => vec![0],
        None => (0..n).collect(),
    };
    let end = endpoints.map(|(_, e)| e);
    for start in starts {
        let mut search = Search {
            pts: &pts,
            closed,
            end: if closed { None } else { end },
            order: vec![start],
            used: {
                let mut u = vec![false; n];
                u[start] = true;
                u
            },
        };
        if n == 1 {
            if closed {
                continue;
            }
            if let Some(e) = end {
                if pts[start].id != e {
                    continue;
                }
            }
        }
        if n == 1 || search.dfs() {
            return Ok(Some(AltPath {
                order: search.order.iter().map(|&i| pts[i].id).collect(),
                closed,
            }));
        }
    }
    Ok(None)
}
