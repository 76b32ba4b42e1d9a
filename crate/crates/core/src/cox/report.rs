use alloc::string::String;
use alloc::vec::Vec;

use crate::lattice::vector::{Int, Vector};
use crate::lattice::FgAbelianGroup;

/// A value carried by a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessValue {
    Bool(bool),
    Int(Int),
    Text(String),
    Indices(Vec<usize>),
    Vector(Vector),
    Vectors(Vec<Vector>),
    Group(FgAbelianGroup),
}

impl From<bool> for WitnessValue {
    fn from(b: bool) -> Self {
        WitnessValue::Bool(b)
    }
}

impl From<Int> for WitnessValue {
    fn from(x: Int) -> Self {
        WitnessValue::Int(x)
    }
}

impl From<&str> for WitnessValue {
    fn from(s: &str) -> Self {
        WitnessValue::Text(s.into())
    }
}

impl From<String> for WitnessValue {
    fn from(s: String) -> Self {
        WitnessValue::Text(s)
    }
}

impl From<Vec<usize>> for WitnessValue {
    fn from(v: Vec<usize>) -> Self {
        WitnessValue::Indices(v)
    }
}

impl From<Vector> for WitnessValue {
    fn from(v: Vector) -> Self {
        WitnessValue::Vector(v)
    }
}

impl From<Vec<Vector>> for WitnessValue {
    fn from(v: Vec<Vector>) -> Self {
        WitnessValue::Vectors(v)
    }
}

impl From<FgAbelianGroup> for WitnessValue {
    fn from(g: FgAbelianGroup) -> Self {
        WitnessValue::Group(g)
    }
}

/// Named data backing a verdict; for failures, the counterexample.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Witness {
    pub entries: Vec<(String, WitnessValue)>,
}

impl Witness {
    pub fn new() -> Self {
        Witness::default()
    }

    pub fn with(mut self, key: &str, value: impl Into<WitnessValue>) -> Self {
        self.entries.push((key.into(), value.into()));
        self
    }

    pub fn push(&mut self, key: &str, value: impl Into<WitnessValue>) {
        self.entries.push((key.into(), value.into()));
    }

    pub fn get(&self, key: &str) -> Option<&WitnessValue> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition {
    /// Stable identifier, e.g. `A.iii.kernel`.
    pub id: String,
    pub statement: String,
    pub pass: bool,
    pub witness: Witness,
}

/// Ordered outcomes of the conditions of one theorem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub theorem: char,
    pub conditions: Vec<Condition>,
}

impl VerificationReport {
    pub fn new(theorem: char) -> Self {
        VerificationReport {
            theorem,
            conditions: Vec::new(),
        }
    }

    pub fn record(&mut self, id: &str, statement: &str, pass: bool, witness: Witness) {
        self.conditions.push(Condition {
            id: id.into(),
            statement: statement.into(),
            pass,
            witness,
        });
    }

    pub fn all_pass(&self) -> bool {
        self.conditions.iter().all(|c| c.pass)
    }

    pub fn get(&self, id: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.id == id)
    }

    pub fn failed_ids(&self) -> Vec<&str> {
        self.conditions
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.id.as_str())
            .collect()
    }

    /// Failed clauses: ids truncated to `letter.clause`, deduplicated.
    pub fn failed_clauses(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for id in self.failed_ids() {
            let clause: String = id.split('.').take(2).collect::<Vec<_>>().join(".");
            if !out.contains(&clause) {
                out.push(clause);
            }
        }
        out
    }

    /// Appends the conditions of another report.
    pub fn extend(&mut self, other: VerificationReport) {
        self.conditions.extend(other.conditions);
    }
}
