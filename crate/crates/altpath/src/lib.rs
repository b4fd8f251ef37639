//! Non-crossing alternating Hamiltonian paths on bicolored point sets.
//!
//! Given blue points inside a red convex polygon and further red points
//! outside it, with red and blue counts equal (or off by one), this crate
//! constructs a properly colored non-crossing Hamiltonian cycle (or open
//! path) through all points. The construction goes through an equitable
//! convex partition of the plane: every polygon edge becomes a diagonal of
//! one convex cell holding exactly one more blue point than red, and a
//! separated-case path is built inside each cell and stitched at the
//! polygon vertices.
//!
//! All core decisions use exact rational arithmetic. Independent verifiers
//! and a brute-force oracle live in [`verify`] and [`oracle`].

pub mod format;
pub mod generate;
pub mod geom;
pub mod oracle;
pub mod partition;
pub mod path;
pub mod region;
pub mod svg;
pub mod verify;

pub use geom::{Color, ColoredPoint, Coord, DirectedLine, Point, Segment};
pub use path::{AltPath, Instance};
pub use region::{Containment, ConvexRegion};
