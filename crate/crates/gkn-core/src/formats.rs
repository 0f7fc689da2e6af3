//! File and argument formats: surface spec files, divisor specs, and
//! point-list files, all JSON.
//!
//! Surface files:
//! `{"model":"projective_plane"}`, `{"model":"quadric"}`,
//! `{"model":"complete_intersection","ambient_dim":3,"degrees":[6]}`, or
//! `{"model":"lattice","gram":[[...]],"H":[...],"K":[...],
//!   "flags":{"h1_kH_vanishes":true,"k_normal":true}}` with an optional
//! `"ambient_dim"`. Integer entries may be JSON numbers or decimal strings.
//!
//! Divisors are `"nH"` shorthand or `{"coords":[...]}`.
//!
//! Point lists:
//! `{"degree": d, "points": [{"xyz": ["1","0","1"], "mult": 1}, ...]}` with
//! coordinates as decimal strings of rationals (`"p/q"` allowed).

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer};
use serde_json::{json, Value};
use thiserror::Error;

use crate::lattice::{DivisorClass, LatticeError, SurfaceKind, SurfaceModel};
use crate::oracle::{OracleError, PlanePoint, PointConditionScheme};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("invalid divisor spec {spec:?}: expected \"nH\" shorthand or {{\"coords\":[...]}}")]
    BadDivisorSpec { spec: String },
    #[error("invalid rational coordinate {value:?}")]
    BadRational { value: String },
}

/// A JSON integer that may be written as a number or a decimal string.
#[derive(Debug, Clone)]
struct IntScalar(BigInt);

impl<'de> Deserialize<'de> for IntScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let value = Value::deserialize(deserializer)?;
        match &value {
            Value::Number(n) => {
                if let Some(i) = n.as_i64() {
                    return Ok(IntScalar(BigInt::from(i)));
                }
                Err(D::Error::custom(format!("not an integer: {n}")))
            }
            Value::String(s) => BigInt::from_str(s)
                .map(IntScalar)
                .map_err(|e| D::Error::custom(format!("not an integer: {s:?} ({e})"))),
            other => Err(D::Error::custom(format!("expected integer, got {other}"))),
        }
    }
}

fn unwrap_ints(values: Vec<IntScalar>) -> Vec<BigInt> {
    values.into_iter().map(|v| v.0).collect()
}

#[derive(Debug, Deserialize)]
struct LatticeFlags {
    #[serde(rename = "h1_kH_vanishes")]
    h1_kh_vanishes: bool,
    k_normal: bool,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case")]
enum SurfaceFile {
    ProjectivePlane,
    Quadric,
    CompleteIntersection {
        ambient_dim: u32,
        degrees: Vec<u32>,
    },
    Lattice {
        gram: Vec<Vec<IntScalar>>,
        #[serde(rename = "H")]
        hyperplane: Vec<IntScalar>,
        #[serde(rename = "K")]
        canonical: Vec<IntScalar>,
        flags: LatticeFlags,
        #[serde(default)]
        ambient_dim: Option<u32>,
    },
}

/// Parses a surface spec from JSON text.
pub fn parse_surface(text: &str) -> Result<SurfaceModel, FormatError> {
    let file: SurfaceFile = serde_json::from_str(text)?;
    let model = match file {
        SurfaceFile::ProjectivePlane => SurfaceModel::projective_plane(),
        SurfaceFile::Quadric => SurfaceModel::smooth_quadric(),
        SurfaceFile::CompleteIntersection {
            ambient_dim,
            degrees,
        } => SurfaceModel::complete_intersection(ambient_dim, degrees)?,
        SurfaceFile::Lattice {
            gram,
            hyperplane,
            canonical,
            flags,
            ambient_dim,
        } => SurfaceModel::general_lattice(
            gram.into_iter().map(unwrap_ints).collect(),
            DivisorClass::new(unwrap_ints(hyperplane)),
            DivisorClass::new(unwrap_ints(canonical)),
            flags.h1_kh_vanishes,
            flags.k_normal,
            ambient_dim,
        )?,
    };
    Ok(model)
}

/// Serializes a surface model back into the surface-file JSON schema;
/// parsing the output reproduces the model exactly.
pub fn dump_surface(model: &SurfaceModel) -> Value {
    match model.kind() {
        SurfaceKind::ProjectivePlane => json!({"model": "projective_plane"}),
        SurfaceKind::SmoothQuadric => json!({"model": "quadric"}),
        SurfaceKind::CompleteIntersection {
            ambient_dim,
            multidegrees,
        } => json!({
            "model": "complete_intersection",
            "ambient_dim": ambient_dim,
            "degrees": multidegrees,
        }),
        SurfaceKind::GeneralLattice => {
            let gram: Vec<Vec<String>> = model
                .gram()
                .iter()
                .map(|row| row.iter().map(BigInt::to_string).collect())
                .collect();
            let coords = |d: &DivisorClass| -> Vec<String> {
                d.coords().iter().map(BigInt::to_string).collect()
            };
            let mut value = json!({
                "model": "lattice",
                "gram": gram,
                "H": coords(model.hyperplane()),
                "K": coords(model.canonical()),
                "flags": {
                    "h1_kH_vanishes": model.h1_kh_vanishes(),
                    "k_normal": model.k_normal(),
                },
            });
            if let Some(r) = model.ambient_dim() {
                value["ambient_dim"] = json!(r);
            }
            value
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum DivisorFile {
    Shorthand(String),
    Coords { coords: Vec<IntScalar> },
}

/// Parses a divisor spec: `"nH"` shorthand (`"H"`, `"8H"`, `"-3H"`) or a
/// `{"coords":[...]}` object, either as JSON text or as a bare shorthand
/// string.
pub fn parse_divisor(spec: &str, surface: &SurfaceModel) -> Result<DivisorClass, FormatError> {
    let trimmed = spec.trim();
    if let Some(n) = parse_h_multiple(trimmed) {
        return Ok(surface.multiple_of_hyperplane(&n));
    }
    if trimmed.starts_with('{') {
        let file: DivisorFile = serde_json::from_str(trimmed)?;
        return match file {
            DivisorFile::Shorthand(s) => parse_h_multiple(&s)
                .map(|n| surface.multiple_of_hyperplane(&n))
                .ok_or(FormatError::BadDivisorSpec { spec: spec.into() }),
            DivisorFile::Coords { coords } => Ok(DivisorClass::new(unwrap_ints(coords))),
        };
    }
    // Bare comma-separated coordinates, e.g. "3,1".
    if trimmed.contains(',') || trimmed.parse::<i64>().is_ok() && surface.rank() == 1 {
        let coords: Result<Vec<BigInt>, _> = trimmed
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(|part| BigInt::from_str(part.trim()))
            .collect();
        if let Ok(coords) = coords {
            return Ok(DivisorClass::new(coords));
        }
    }
    Err(FormatError::BadDivisorSpec { spec: spec.into() })
}

/// `"nH"` with an optional sign and an optional coefficient.
fn parse_h_multiple(text: &str) -> Option<BigInt> {
    let body = text.strip_suffix('H')?;
    match body {
        "" | "+" => Some(BigInt::from(1)),
        "-" => Some(BigInt::from(-1)),
        digits => BigInt::from_str(digits).ok(),
    }
}

fn default_mult() -> u32 {
    1
}

#[derive(Debug, Deserialize)]
struct PointEntry {
    xyz: [String; 3],
    #[serde(default = "default_mult")]
    mult: u32,
}

#[derive(Debug, Deserialize)]
struct PointListFile {
    degree: u32,
    points: Vec<PointEntry>,
}

fn parse_rational(text: &str) -> Result<BigRational, FormatError> {
    BigRational::from_str(text.trim()).map_err(|_| FormatError::BadRational { value: text.into() })
}

/// Parses a point-list file into a condition scheme.
pub fn parse_point_list(text: &str) -> Result<PointConditionScheme, FormatError> {
    let file: PointListFile = serde_json::from_str(text)?;
    let mut points = Vec::with_capacity(file.points.len());
    for entry in file.points {
        let [x, y, z] = entry.xyz;
        let point = PlanePoint::new(
            parse_rational(&x)?,
            parse_rational(&y)?,
            parse_rational(&z)?,
        )?;
        points.push((point, entry.mult));
    }
    Ok(PointConditionScheme::new(file.degree, points)?)
}
