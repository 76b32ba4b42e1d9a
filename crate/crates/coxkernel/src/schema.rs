//! Versioned JSON documents read and written by the command-line tool.
//!
//! Every object rejects unknown fields. Top-level documents carry
//! `"schema": "coxkernel/1"`, except verification reports, which are bare
//! arrays of conditions.

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA: &str = "coxkernel/1";

pub(crate) fn schema() -> String {
    SCHEMA.to_string()
}

/// A fan, optionally with a torus-invariant Weil divisor on it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanDoc {
    pub schema: String,
    pub lattice_rank: usize,
    pub rays: Vec<Vec<i64>>,
    pub max_cones: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub divisor: Option<DivisorDoc>,
}

/// `sum coeffs[i] * D_i` over the rays of the enclosing fan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DivisorDoc {
    pub rays: usize,
    pub coeffs: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDoc {
    pub free_rank: usize,
    pub torsion: Vec<i64>,
}

/// Grading `Z^d -> K`; `matrix` has one row per coordinate of `K` (free
/// coordinates first) and one column per coordinate of `Z^d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GradingDoc {
    pub free_rank: usize,
    pub torsion: Vec<i64>,
    pub matrix: Vec<Vec<i64>>,
}

/// `k[M][x_i^-1 : i in inverted]` for the monoid `M` spanned by the generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub schema: String,
    pub monoid_generators: Vec<Vec<i64>>,
    pub grading: GradingDoc,
    pub inverted: Vec<usize>,
}

/// Data `(N, σ, K, φ)` of a divisorial algebra `A(K, φ)`; `phi` has one row
/// per ray and one column per generator of `K`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DivisorialDoc {
    pub schema: String,
    pub lattice_rank: usize,
    pub rays: Vec<Vec<i64>>,
    pub k: GroupDoc,
    pub phi: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClGroupDoc {
    pub schema: String,
    pub cl: GroupDoc,
    /// Class of each ray divisor, in the coordinates of `cl`.
    pub degrees: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpectrumPointDoc {
    /// Effective generators in the face.
    pub face: Vec<usize>,
    /// Effective generators spanning the prime.
    pub ideal: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpectrumDoc {
    pub schema: String,
    /// Generators of the monoid with the inverted ones negated and appended.
    pub effective_generators: Vec<Vec<i64>>,
    pub points: Vec<SpectrumPointDoc>,
    /// `[i, j]`: the prime of `i` is covered by the prime of `j`.
    pub covers: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbitNodeDoc {
    pub cone_face: Vec<usize>,
    pub dual_face: Vec<usize>,
    pub ideal: Vec<Vec<i64>>,
    pub m_degrees: Vec<Vec<i64>>,
    pub cl_degrees: Vec<Vec<i64>>,
    pub prime: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbitChartDoc {
    pub cone: Vec<usize>,
    pub nodes: Vec<OrbitNodeDoc>,
    pub covers: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbitsDoc {
    pub schema: String,
    /// One point per cone of the fan.
    pub points: Vec<Vec<usize>>,
    /// `[i, j]`: point `i` is a cover-specialization of point `j`.
    pub covers: Vec<[usize; 2]>,
    pub effective: Vec<bool>,
    pub inverse_ok: Vec<bool>,
    pub charts: Vec<OrbitChartDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharSpaceChartDoc {
    pub cone: Vec<usize>,
    pub inverted: Vec<usize>,
    pub base: Vec<Vec<i64>>,
    pub degree_zero: Vec<Vec<i64>>,
    pub isomorphism: bool,
    pub hilbert_bijection: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharSpaceDoc {
    pub schema: String,
    pub charts: Vec<CharSpaceChartDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportEntry {
    pub id: String,
    pub pass: bool,
    pub witness: serde_json::Map<String, Value>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SectionsDoc {
    pub schema: String,
    pub count: usize,
    pub points: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DivisorInfoDoc {
    pub schema: String,
    pub cl: GroupDoc,
    pub class: Vec<i64>,
    pub support: Vec<usize>,
    pub effective: bool,
    pub principal: bool,
}

/// Error document written to standard error on exit status 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ErrorDoc {
    pub schema: String,
    pub error: String,
    pub message: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub column: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pointer: Option<String>,
}

impl ErrorDoc {
    pub fn new(error: &str, message: impl Into<String>) -> Self {
        ErrorDoc {
            schema: schema(),
            error: error.into(),
            message: message.into(),
            line: None,
            column: None,
            pointer: None,
        }
    }
}
