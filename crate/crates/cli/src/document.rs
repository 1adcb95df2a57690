//! The versioned JSON envelope every command emits.

use cmcartan_core::{DegreeTableRow, OrbitReport};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub query: Query,
    pub payload: Payload,
    pub provenance: Provenance,
}

impl ReportDocument {
    pub fn new(query: Query, payload: Payload, provenance: Provenance) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_owned(),
            query,
            payload,
            provenance,
        }
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> serde_json::Result<String> {
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        Ok(text)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Report,
    Table,
    ClassifyTorsion,
    ClassifyIsogeny,
}

/// What was asked for. Single-point queries fill `delta` and `level`; sweeps fill the ranges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Query {
    pub mode: Mode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub level: Option<u64>,
    /// Inclusive `|Δ|` range.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub disc_range: Option<[u64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub level_range: Option<[u64; 2]>,
}

impl Query {
    pub fn point(mode: Mode, delta: i64, level: Option<u64>) -> Self {
        Self {
            mode,
            delta: Some(delta),
            level,
            disc_range: None,
            level_range: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Formula,
    Oracle,
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Report(PointReport),
    Table(TablePayload),
    Torsion(TorsionPayload),
    Isogeny(IsogenyPayload),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointReport {
    pub degrees: DegreeTableRow,
    pub isogeny: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OrbitReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TablePayload {
    pub rows: Vec<TableRow>,
}

/// One `(Δ, N)` cell of a sweep, in CSV column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub delta: i64,
    pub delta_k: i64,
    pub f: u64,
    pub n: u64,
    pub cartan_order: u64,
    pub t: u64,
    pub h: bool,
    pub weber_degree: u64,
    pub tower_degree: u64,
    pub isogeny: bool,
}

impl TableRow {
    pub const HEADER: [&'static str; 10] = [
        "delta",
        "delta_k",
        "f",
        "n",
        "cartan_order",
        "t",
        "h",
        "weber_degree",
        "tower_degree",
        "isogeny",
    ];

    pub fn csv_record(&self) -> [String; 10] {
        let flag = |b: bool| if b { "1" } else { "0" }.to_owned();
        [
            self.delta.to_string(),
            self.delta_k.to_string(),
            self.f.to_string(),
            self.n.to_string(),
            self.cartan_order.to_string(),
            self.t.to_string(),
            flag(self.h),
            self.weber_degree.to_string(),
            self.tower_degree.to_string(),
            flag(self.isogeny),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionPayload {
    /// Group shapes written `sxe`, in increasing order.
    pub groups: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsogenyPayload {
    pub levels: Vec<IsogenyLevel>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsogenyLevel {
    pub n: u64,
    pub exists: bool,
    /// Only for `Δ ∈ {-3, -4}`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_tilde_argument: Option<bool>,
}
