//! Names of collineation varieties.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Classification of a collineation variety up to linear isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CollineationLabel {
    /// The Veronese surface in P^5.
    Veronese,
    /// The smooth cubic scroll in P^4.
    Scroll12,
    /// A smooth quadric surface, P^1 x P^1.
    QuadricSurface,
    /// A quadric cone.
    QuadricCone,
    Plane,
    Conic,
    Line,
    /// Rational normal curve of the given degree.
    Rnc(u32),
    Point,
    /// Image type found by the implicitization oracle outside the names
    /// above.
    Other { dim: i64, deg: u64, span: usize },
    /// All minors vanish or the request is not admissible.
    Undefined(String),
}

impl CollineationLabel {
    /// Rational normal curve of degree `d`.
    pub fn rnc(d: u32) -> Self {
        CollineationLabel::Rnc(d)
    }

    /// Vector-space dimension of the linear span, when determined by the
    /// label.
    pub fn expected_span(&self) -> Option<usize> {
        use CollineationLabel::*;
        match self {
            Veronese => Some(6),
            Scroll12 => Some(5),
            QuadricSurface | QuadricCone => Some(4),
            Plane | Conic => Some(3),
            Line => Some(2),
            Rnc(d) => Some(*d as usize + 1),
            Point => Some(1),
            Other { span, .. } => Some(*span),
            Undefined(_) => None,
        }
    }

    /// Projective dimension and degree of the variety.
    pub fn expected_dim_deg(&self) -> Option<(i64, u64)> {
        use CollineationLabel::*;
        match self {
            Veronese => Some((2, 4)),
            Scroll12 => Some((2, 3)),
            QuadricSurface | QuadricCone => Some((2, 2)),
            Plane => Some((2, 1)),
            Conic => Some((1, 2)),
            Line => Some((1, 1)),
            Rnc(d) => Some((1, *d as u64)),
            Point => Some((0, 1)),
            Other { dim, deg, .. } => Some((*dim, *deg)),
            Undefined(_) => None,
        }
    }

    pub fn is_undefined(&self) -> bool {
        matches!(self, CollineationLabel::Undefined(_))
    }

    /// Equality up to the aliases RNC(1) = Line and RNC(2) = Conic.
    pub fn same_variety(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }

    fn normalized(&self) -> Self {
        match self {
            CollineationLabel::Rnc(1) => CollineationLabel::Line,
            CollineationLabel::Rnc(2) => CollineationLabel::Conic,
            CollineationLabel::Undefined(_) => CollineationLabel::Undefined(String::new()),
            l => l.clone(),
        }
    }
}

impl fmt::Display for CollineationLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CollineationLabel::*;
        match self {
            Veronese => write!(f, "Veronese"),
            Scroll12 => write!(f, "Scroll_1_2"),
            QuadricSurface => write!(f, "QuadricSurface"),
            QuadricCone => write!(f, "QuadricCone"),
            Plane => write!(f, "Plane"),
            Conic => write!(f, "Conic"),
            Line => write!(f, "Line"),
            Rnc(d) => write!(f, "RNC({d})"),
            Point => write!(f, "Point"),
            Other { dim, deg, span } => write!(f, "Other(dim={dim},deg={deg},span={span})"),
            Undefined(_) => write!(f, "Undefined"),
        }
    }
}

impl FromStr for CollineationLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use CollineationLabel::*;
        let s = s.trim();
        let simple = match s {
            "Veronese" => Some(Veronese),
            "Scroll_1_2" => Some(Scroll12),
            "QuadricSurface" => Some(QuadricSurface),
            "QuadricCone" => Some(QuadricCone),
            "Plane" => Some(Plane),
            "Conic" => Some(Conic),
            "Line" => Some(Line),
            "Point" => Some(Point),
            "Undefined" => Some(Undefined(String::new())),
            _ => None,
        };
        if let Some(l) = simple {
            return Ok(l);
        }
        let bad = || Error::Parse(format!("unknown label {s:?}"));
        if let Some(inner) = s.strip_prefix("RNC(").and_then(|r| r.strip_suffix(')')) {
            return inner.parse().map(Rnc).map_err(|_| bad());
        }
        if let Some(inner) = s.strip_prefix("Other(").and_then(|r| r.strip_suffix(')')) {
            let mut vals = [0i64; 3];
            for (slot, (part, key)) in vals.iter_mut().zip(inner.split(',').zip(["dim=", "deg=", "span="])) {
                *slot = part.trim().strip_prefix(key).and_then(|v| v.parse().ok()).ok_or_else(bad)?;
            }
            return Ok(Other {
                dim: vals[0],
                deg: vals[1] as u64,
                span: vals[2] as usize,
            });
        }
        Err(bad())
    }
}

impl Serialize for CollineationLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CollineationLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
