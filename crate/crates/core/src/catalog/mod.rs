//! Normal-form tensors with their expected classifications.

mod reproduce;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::label::CollineationLabel;
use crate::net::{cuboid, CuboidParams};
use crate::scalar::{parse_rational, Field};
use crate::tensor::Tensor3;

pub use reproduce::{pinned_degenerate_cuboid, reproduce_tables, smooth_cuboids, EntryResult, ReproduceOptions, ReproduceReport};

const DATA: &str = include_str!("../../data/catalog.jsonl");

/// One catalog line. Term coefficients are integers or a (possibly
/// negated) parameter name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    /// 1 or 2 for the orbit tables, 0 for everything else.
    pub table: u8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default)]
    pub dims: [usize; 3],
    #[serde(default)]
    pub terms: Vec<(usize, usize, usize, String)>,
    /// Expected labels keyed by factor ("1", "2", "3").
    pub expected: BTreeMap<String, CollineationLabel>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub params: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strassen_rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}

/// Rational values for family parameters.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Params(BTreeMap<String, BigRational>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, value: BigRational) -> Self {
        self.0.insert(name.to_string(), value);
        self
    }

    pub fn lambda(value: i64) -> Self {
        Self::new().with("lambda", BigRational::from_integer(value.into()))
    }

    pub fn get(&self, name: &str) -> Option<&BigRational> {
        self.0.get(name)
    }

    /// Parses `name=value` pairs separated by commas.
    pub fn parse(s: &str) -> Result<Self> {
        let mut out = Params::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected name=value, got {part:?}")))?;
            out.0.insert(k.trim().to_string(), parse_rational(v)?);
        }
        Ok(out)
    }
}

impl std::fmt::Display for Params {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// An entry with its parameters substituted.
#[derive(Debug, Clone)]
pub struct Instance {
    pub entry: CatalogEntry,
    pub params: Params,
    pub tensor: Tensor3,
}

impl CatalogEntry {
    pub fn expected_label(&self, factor: usize) -> Option<&CollineationLabel> {
        self.expected.get(&factor.to_string())
    }

    pub fn is_family(&self) -> bool {
        !self.params.is_empty()
    }

    /// Builds the tensor over `field` with the given parameter values.
    pub fn instantiate(&self, params: &Params, field: Field) -> Result<Tensor3> {
        let value = |name: &str| params.get(name).ok_or_else(|| Error::MissingParameter(name.to_string()));
        if self.family.as_deref() == Some("cuboid") {
            let p = CuboidParams::new(value("a")?.clone(), value("p1")?.clone(), value("p2")?.clone());
            return cuboid(&p, field);
        }
        let mut t = Tensor3::zeros(self.dims, field);
        for (i, j, k, coef) in &self.terms {
            let (neg, body) = match coef.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, coef.as_str()),
            };
            let q = if body.chars().next().is_some_and(|c| c.is_ascii_digit()) {
                parse_rational(body)?
            } else {
                value(body)?.clone()
            };
            let q = if neg { -q } else { q };
            t.set(*i, *j, *k, field.from_rational(&q)?);
        }
        Ok(t)
    }
}

/// Every catalog entry, in file order.
pub fn entries() -> &'static [CatalogEntry] {
    static ENTRIES: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    ENTRIES.get_or_init(|| {
        DATA.lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| serde_json::from_str(l).expect("catalog data is well formed"))
            .collect()
    })
}

pub fn find(name: &str) -> Result<&'static CatalogEntry> {
    entries()
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownEntry(name.to_string()))
}

/// Looks up `name` and instantiates it.
pub fn get_entry(name: &str, params: &Params, field: Field) -> Result<Instance> {
    let entry = find(name)?;
    let tensor = entry.instantiate(params, field)?;
    Ok(Instance {
        entry: entry.clone(),
        params: params.clone(),
        tensor,
    })
}

/// Serializes the catalog back to JSON lines.
pub fn to_jsonl(entries: &[CatalogEntry]) -> String {
    let mut out = String::new();
    for e in entries {
        out.push_str(&serde_json::to_string(e).expect("entries serialize"));
        out.push('\n');
    }
    out
}
