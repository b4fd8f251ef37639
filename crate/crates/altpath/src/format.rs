//! Textual file formats for instances, paths, and partitions.
//!
//! All coordinates are serialized as exact rational strings ("num/den",
//! plain integers, or decimals parsed exactly); emission is canonical so
//! that emit∘parse∘emit is byte-identical.

use crate::geom::{Color, ColoredPoint, Coord, Point};
use crate::partition::Partition;
use crate::path::{AltPath, Instance, PathError};
use crate::region::ConvexRegion;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::str::FromStr;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("bad coordinate {0:?}: expected \"num/den\", integer, or decimal")]
    BadCoordinate(String),
    #[error("unsupported format version {0}")]
    BadVersion(u32),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
}

pub const FORMAT_VERSION: u32 = 1;

fn parse_err(e: serde_json::Error) -> FormatError {
    FormatError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

/// Parses "num/den", a plain integer, or a decimal into an exact rational.
pub fn parse_rational(s: &str) -> Result<Coord, FormatError> {
    let bad = || FormatError::BadCoordinate(s.to_string());
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n = BigInt::from_str(num.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(den.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Coord::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let (sign, int_digits) = match int.as_bytes().first() {
            Some(b'-') => (-1, &int[1..]),
            Some(b'+') => (1, &int[1..]),
            _ => (1, int),
        };
        if !int_digits.bytes().all(|b| b.is_ascii_digit()) || int_digits.is_empty() {
            return Err(bad());
        }
        let mantissa = BigInt::from_str(&format!("{}{}", int_digits, frac)).map_err(|_| bad())?;
        let den = BigInt::from(10u32).pow(frac.len() as u32);
        return Ok(Coord::new(BigInt::from(sign) * mantissa, den));
    }
    let n = BigInt::from_str(s).map_err(|_| bad())?;
    Ok(Coord::from_integer(n))
}

/// Canonical form: reduced "num/den", or just "num" when the denominator
/// is one.
pub fn emit_rational(c: &Coord) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn emit_point(p: &Point) -> [String; 2] {
    [emit_rational(&p.x), emit_rational(&p.y)]
}

fn parse_point(xy: &[String; 2]) -> Result<Point, FormatError> {
    Ok(Point {
        x: parse_rational(&xy[0])?,
        y: parse_rational(&xy[1])?,
    })
}

/// An instance plus the optional bookkeeping fields the file may carry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceFile {
    pub instance: Instance,
    pub seed: Option<u64>,
    pub metadata: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct InstanceDoc {
    version: u32,
    blue: Vec<[String; 2]>,
    red: Vec<[String; 2]>,
    polygon: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    metadata: Option<String>,
}

/// Ids are positional: blues take 0..|B|, reds continue from |B|.
pub fn parse_instance(text: &str) -> Result<InstanceFile, FormatError> {
    let doc: InstanceDoc = serde_json::from_str(text).map_err(parse_err)?;
    if doc.version != FORMAT_VERSION {
        return Err(FormatError::BadVersion(doc.version));
    }
    let nb = doc.blue.len() as u32;
    let blue = doc
        .blue
        .iter()
        .enumerate()
        .map(|(i, xy)| Ok(ColoredPoint::new(i as u32, parse_point(xy)?, Color::Blue)))
        .collect::<Result<Vec<_>, FormatError>>()?;
    let red = doc
        .red
        .iter()
        .enumerate()
        .map(|(i, xy)| Ok(ColoredPoint::new(nb + i as u32, parse_point(xy)?, Color::Red)))
        .collect::<Result<Vec<_>, FormatError>>()?;
    let instance = Instance {
        blue,
        red,
        polygon: doc.polygon,
    };
    instance
        .validate()
        .map_err(|e| FormatError::InvalidInstance(e.to_string()))?;
    Ok(InstanceFile {
        instance,
        seed: doc.seed,
        metadata: doc.metadata,
    })
}

pub fn emit_instance(file: &InstanceFile) -> String {
    let doc = InstanceDoc {
        version: FORMAT_VERSION,
        blue: file.instance.blue.iter().map(|p| emit_point(&p.point)).collect(),
        red: file.instance.red.iter().map(|p| emit_point(&p.point)).collect(),
        polygon: file.instance.polygon.clone(),
        seed: file.seed,
        metadata: file.metadata.clone(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("instance serialization");
    out.push('\n');
    out
}

#[derive(Serialize, Deserialize)]
struct PathDoc {
    version: u32,
    closed: bool,
    order: Vec<u32>,
}

pub fn parse_path(text: &str) -> Result<AltPath, FormatError> {
    let doc: PathDoc = serde_json::from_str(text).map_err(parse_err)?;
    if doc.version != FORMAT_VERSION {
        return Err(FormatError::BadVersion(doc.version));
    }
    Ok(AltPath {
        order: doc.order,
        closed: doc.closed,
    })
}

pub fn emit_path(path: &AltPath) -> String {
    let doc = PathDoc {
        version: FORMAT_VERSION,
        closed: path.closed,
        order: path.order.clone(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("path serialization");
    out.push('\n');
    out
}

#[derive(Serialize, Deserialize)]
struct PartitionDoc {
    version: u32,
    /// One clockwise vertex loop per region.
    regions: Vec<Vec<[String; 2]>>,
    /// Sorted (point id, region index) pairs.
    assignment: Vec<(u32, usize)>,
}

pub fn parse_partition(text: &str) -> Result<Partition, FormatError> {
    let doc: PartitionDoc = serde_json::from_str(text).map_err(parse_err)?;
    if doc.version != FORMAT_VERSION {
        return Err(FormatError::BadVersion(doc.version));
    }
    let mut regions = Vec::new();
    for (i, loop_) in doc.regions.iter().enumerate() {
        let pts = loop_
            .iter()
            .map(parse_point)
            .collect::<Result<Vec<_>, FormatError>>()?;
        let region = ConvexRegion::from_loop(pts).ok_or_else(|| {
            FormatError::InvalidInstance(format!("region {} is not a strictly convex loop", i))
        })?;
        regions.push(region);
    }
    let mut assignment = BTreeMap::new();
    for &(id, cell) in &doc.assignment {
        if cell >= regions.len() {
            return Err(FormatError::InvalidInstance(format!(
                "point {} assigned to missing region {}",
                id, cell
            )));
        }
        if assignment.insert(id, cell).is_some() {
            return Err(FormatError::InvalidInstance(format!(
                "point {} assigned twice",
                id
            )));
        }
    }
    Ok(Partition {
        regions,
        assignment,
    })
}

pub fn emit_partition(part: &Partition) -> String {
    let doc = PartitionDoc {
        version: FORMAT_VERSION,
        regions: part
            .regions
            .iter()
            .map(|r| r.vertices().iter().map(emit_point).collect())
            .collect(),
        assignment: part.assignment.iter().map(|(&id, &c)| (id, c)).collect(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("partition serialization");
    out.push('\n');
    out
}

/// Maps a validation failure to the hypothesis it breaks, for CLI messages.
pub fn invalid_instance(e: &PathError) -> FormatError {
    FormatError::InvalidInstance(e.to_string())
}
